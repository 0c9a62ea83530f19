#include "abgrow/errors.hpp"
#include "abgrow/growth.hpp"
#include "abgrow/relations.hpp"
#include "abgrow/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace abgrow;
using nlohmann::json;

namespace {

struct Options {
    std::string group_path;
    std::string subgraph_path;
    std::string path_letters;
    std::string method = "all";
    std::string format;
    int gamma = 0;
    int max_n = 0;
    int window = 0;
    int max_len = 8;
    int max_sphere_len = 30;
    std::size_t max_elements = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GroupSpec load_group(const Options& o) { return parse_group_spec(read_file(o.group_path)); }

Subgraph load_subgraph(const Options& o, const AbelianStructure& g) {
    Subgraph s;
    if (!o.subgraph_path.empty())
        s = parse_subgraph(read_file(o.subgraph_path), g);
    else if (!o.path_letters.empty())
        s = parse_subgraph("path: " + o.path_letters, g);
    else
        s = single_vertex(g);
    validate_subgraph(g, s);
    return s;
}

GrowthParams params_of(const Options& o) {
    GrowthParams p;
    p.gamma = o.gamma;
    p.window = o.window;
    p.max_n = o.max_n;
    p.max_elements = o.max_elements;
    return p;
}

std::string torsion_text(const std::vector<long long>& torsion) {
    if (torsion.empty()) return "none";
    std::string out = "[";
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(torsion[i]);
    }
    return out + "]";
}

std::string rank_line(const AbelianStructure& g) {
    return "rank " + std::to_string(g.rank()) + ", torsion " + torsion_text(g.torsion());
}

json series_json(const RationalGF& f) {
    json num = json::array();
    for (int i = 0; i <= f.num.degree(); ++i) num.push_back(f.num.coeff(i).get_str());
    return {{"numerator", num},
            {"denominator_power", f.denom_pow},
            {"text", f.str()},
            {"latex", f.latex()}};
}

json coeff_json(const std::vector<mpz_class>& coeffs) {
    json out = json::array();
    for (const mpz_class& c : coeffs) out.push_back(c.get_str());
    return out;
}

std::string coeff_text(const std::vector<mpz_class>& coeffs) {
    std::string out;
    for (const mpz_class& c : coeffs) {
        if (!out.empty()) out += " ";
        out += c.get_str();
    }
    return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_structure(const Options& o) {
    GroupSpec spec = load_group(o);
    AbelianStructure g = AbelianStructure::derive(spec);
    int bound = static_cast<int>(mu_effective(spec)) + 1;
    std::vector<MinimalRelation> rels = minimal_relations(g, bound);
    int kappa = fellow_traveller_constant(rels);

    if (o.format == "json") {
        json j;
        j["rank"] = g.rank();
        j["torsion"] = g.torsion();
        json gens = json::array();
        for (int i = 0; i < g.alphabet().size(); ++i) gens.push_back(g.alphabet().symbol(i));
        j["generators"] = gens;
        j["mu"] = mu(spec);
        j["mu_effective"] = mu_effective(spec);
        j["minimal_relations"] = rels.size();
        j["kappa"] = kappa;
        j["default_gamma"] = bound;
        if (g.finite()) j["order"] = g.order().get_str();
        print_json(j);
        return 0;
    }

    std::cout << rank_line(g) << "\n";
    std::cout << "generators:";
    for (int i = 0; i < g.alphabet().size(); ++i) std::cout << " " << g.alphabet().symbol(i);
    std::cout << "\n";
    if (g.finite()) std::cout << "order: " << g.order().get_str() << "\n";
    std::cout << "relator length total: " << mu(spec) << "\n";
    std::cout << "effective relation bound: " << mu_effective(spec) << "\n";
    std::cout << "minimal relations: " << rels.size() << "\n";
    std::cout << "fellow traveller constant: " << kappa << "\n";
    std::cout << "default gamma: " << bound << "\n";
    return 0;
}

int cmd_acceptor(const Options& o) {
    GroupSpec spec = load_group(o);
    AbelianStructure g = AbelianStructure::derive(spec);
    int bound = static_cast<int>(mu_effective(spec)) + 1;
    int gamma = o.gamma > 0 ? o.gamma : bound;
    if (gamma <= mu(spec))
        fail(errc::validation, "gamma must exceed the total relator length " +
                                   std::to_string(mu(spec)) + ", got " + std::to_string(gamma));
    std::vector<MinimalRelation> rels = minimal_relations(g, bound);
    Acceptor acc = Acceptor::build(g, rels, gamma);

    if (o.format == "json") {
        json j;
        j["gamma"] = gamma;
        j["states"] = json::array();
        for (int i = 0; i < acc.size(); ++i) {
            const AcceptorState& st = acc.state(i);
            json s;
            s["index"] = i;
            s["profile"] = st.profile;
            s["in_letter"] =
                st.in_letter < 0 ? json(nullptr) : json(g.alphabet().symbol(st.in_letter));
            s["pred"] = st.pred;
            s["depth"] = st.depth;
            s["pumps"] = st.pumps;
            s["loop"] = st.loop;
            j["states"].push_back(s);
        }
        j["transitions"] = json::array();
        for (int i = 0; i < acc.size(); ++i)
            for (int x = 0; x < g.alphabet().size(); ++x) {
                int t = acc.step(i, x);
                if (t == acc.failure()) continue;
                j["transitions"].push_back(
                    {{"from", i}, {"letter", g.alphabet().symbol(x)}, {"to", t}});
            }
        print_json(j);
        return 0;
    }

    std::cout << acc.to_dot(g.alphabet());
    return 0;
}

int report_text(const GrowthReport& report, const Subgraph& s, const std::string& format) {
    if (format == "latex") {
        std::cout << (report.exact_ran ? report.exact.series.latex()
                                       : report.fit.series.latex())
                  << "\n";
    } else {
        std::cout << "group: rank " << report.rank << ", torsion "
                  << torsion_text(report.torsion) << "\n";
        std::cout << "subgraph: " << report.subgraph_name << " (" << s.vertices.size()
                  << (s.vertices.size() == 1 ? " vertex, " : " vertices, ") << s.edges.size()
                  << (s.edges.size() == 1 ? " edge, diameter " : " edges, diameter ")
                  << report.diameter << ")\n";
        std::cout << "gamma: " << report.gamma << ", kappa: " << report.kappa << "\n";
        if (report.exact_ran) std::cout << "series: " << report.exact.series.str() << "\n";
        else if (report.fit.conclusive)
            std::cout << "series: " << report.fit.series.str() << "\n";
        std::cout << "coefficients: " << coeff_text(report.reference) << "\n";
        if (report.ok)
            std::cout << "agreement: assembled, fitted, and enumerated coefficients agree"
                         " through n="
                      << report.agreement_through << "\n";
    }
    for (const std::string& f : report.failures) std::cout << "FAIL: " << f << "\n";
    return report.ok ? 0 : 1;
}

int cmd_growth(const Options& o) {
    GroupSpec spec = load_group(o);
    AbelianStructure g = AbelianStructure::derive(spec);
    Subgraph s = load_subgraph(o, g);
    GrowthParams p = params_of(o);
    int show_n = o.max_n > 0 ? o.max_n : 12;

    if (o.method == "oracle") {
        std::vector<mpz_class> counts = morphism_counts(g, s, show_n, o.max_elements);
        if (o.format == "json")
            print_json({{"method", "oracle"},
                        {"subgraph", s.name},
                        {"coefficients", coeff_json(counts)}});
        else
            std::cout << "coefficients: " << coeff_text(counts) << "\n";
        return 0;
    }

    if (o.method == "exact") {
        ExactGrowth ex = growth_exact(spec, s, p);
        if (o.format == "json") {
            json j;
            j["method"] = "exact";
            j["subgraph"] = s.name;
            j["gamma"] = ex.gamma;
            j["kappa"] = ex.kappa;
            j["diameter"] = ex.diameter;
            j["head_length"] = ex.head_length;
            j["series"] = series_json(ex.series);
            j["coefficients"] = coeff_json(ex.series.expand(show_n));
            print_json(j);
        } else if (o.format == "latex") {
            std::cout << ex.series.latex() << "\n";
        } else {
            std::cout << "series: " << ex.series.str() << "\n";
            std::cout << "gamma: " << ex.gamma << ", kappa: " << ex.kappa << ", head length: "
                      << ex.head_length << "\n";
            std::cout << "coefficients: " << coeff_text(ex.series.expand(show_n)) << "\n";
        }
        return 0;
    }

    if (o.method == "fit") {
        FitGrowth fit = growth_fit(spec, s, p);
        if (!fit.conclusive) {
            if (o.format == "json")
                print_json({{"method", "fit"},
                            {"subgraph", s.name},
                            {"conclusive", false},
                            {"matched_through", fit.matched_through}});
            else
                std::cout << "inconclusive: coefficients did not stabilize within the cap"
                             " (computed through n="
                          << fit.matched_through << "; raise --max-n)\n";
            return 1;
        }
        if (o.format == "json") {
            json j;
            j["method"] = "fit";
            j["subgraph"] = s.name;
            j["conclusive"] = true;
            j["matched_through"] = fit.matched_through;
            j["series"] = series_json(fit.series);
            j["coefficients"] = coeff_json(fit.series.expand(show_n));
            print_json(j);
        } else if (o.format == "latex") {
            std::cout << fit.series.latex() << "\n";
        } else {
            std::cout << "series: " << fit.series.str() << "\n";
            std::cout << "verified against enumeration through n=" << fit.matched_through
                      << "\n";
            std::cout << "coefficients: " << coeff_text(fit.series.expand(show_n)) << "\n";
        }
        return 0;
    }

    // method "all": run every method and cross-check
    GrowthReport report = verify_main_theorem(spec, s, p);
    if (o.format == "json") {
        json j;
        j["group"] = {{"rank", report.rank}, {"torsion", report.torsion}};
        j["subgraph"] = {{"name", report.subgraph_name},
                         {"vertices", s.vertices.size()},
                         {"edges", s.edges.size()},
                         {"diameter", report.diameter}};
        j["mu"] = report.mu;
        j["kappa"] = report.kappa;
        j["gamma"] = report.gamma;
        if (report.exact_ran) j["series"] = series_json(report.exact.series);
        else if (report.fit.conclusive) j["series"] = series_json(report.fit.series);
        j["coefficients"] = coeff_json(report.reference);
        j["agreement_through"] = report.agreement_through;
        j["ok"] = report.ok;
        j["failures"] = report.failures;
        print_json(j);
        return report.ok ? 0 : 1;
    }
    return report_text(report, s, o.format);
}

int cmd_verify(const Options& o) {
    GroupSpec spec = load_group(o);
    SuiteReport suite = verify_group_suite(spec, o.max_len, o.max_sphere_len, params_of(o));
    if (o.format == "json") {
        json j;
        j["ok"] = suite.ok;
        j["checks"] = json::array();
        for (const CheckResult& c : suite.checks)
            j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        print_json(j);
        return suite.ok ? 0 : 1;
    }
    int failed = 0;
    for (const CheckResult& c : suite.checks) {
        std::cout << (c.ok ? "PASS" : "FAIL") << " " << c.name << " — " << c.detail << "\n";
        if (!c.ok) ++failed;
    }
    if (failed) std::cout << failed << " check(s) failed\n";
    else std::cout << "all checks passed\n";
    return suite.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortlex word acceptors and exact growth series of Cayley-graph"
                 " subgraph placements for finitely generated abelian groups"};
    app.require_subcommand(1);
    Options o;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", o.group_path, "group presentation file")
            ->required();
    };
    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", o.format, "output format (" + choices + ")");
    };

    CLI::App* structure = app.add_subcommand(
        "structure", "rank, invariant factors, and acceptor parameters of a presentation");
    add_group(structure);
    add_format(structure, "text|json");
    structure->add_option("--max-elements", o.max_elements, "element cap for enumerations");

    CLI::App* acceptor =
        app.add_subcommand("acceptor", "export the canonical-word acceptor automaton");
    add_group(acceptor);
    acceptor->add_option("--gamma", o.gamma, "exponent saturation bound");
    add_format(acceptor, "dot|json");

    CLI::App* growth = app.add_subcommand(
        "growth", "growth series of a labelled subgraph's placements in metric balls");
    add_group(growth);
    CLI::Option* sub_opt =
        growth->add_option("--subgraph", o.subgraph_path, "subgraph description file");
    growth->add_option("--path", o.path_letters, "path subgraph from letters, e.g. a,b,c")
        ->excludes(sub_opt);
    growth
        ->add_option("--method", o.method,
                     "exact assembly, denominator fit, raw enumeration, or all cross-checked")
        ->check(CLI::IsMember({"exact", "fit", "oracle", "all"}));
    growth->add_option("--gamma", o.gamma, "exponent saturation bound override");
    growth->add_option("--max-n", o.max_n, "coefficients to enumerate / fit expansion cap");
    growth->add_option("--window", o.window, "verification window override");
    growth->add_option("--max-elements", o.max_elements, "element cap for enumerations");
    add_format(growth, "text|json|latex");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the full self-check suite for a group presentation");
    add_group(verify);
    verify->add_option("--max-len", o.max_len, "exhaustive language sweep word length");
    verify->add_option("--max-sphere-len", o.max_sphere_len, "sphere partition check length");
    verify->add_option("--gamma", o.gamma, "exponent saturation bound override");
    verify->add_option("--max-elements", o.max_elements, "element cap for enumerations");
    add_format(verify, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (structure->parsed()) return cmd_structure(o);
        if (acceptor->parsed()) return cmd_acceptor(o);
        if (growth->parsed()) return cmd_growth(o);
        return cmd_verify(o);
    } catch (const Error& e) {
        switch (e.kind()) {
        case errc::parse:
        case errc::validation:
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        case errc::resource:
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        case errc::verify:
            std::cerr << "verification failure: " << e.what() << "\n";
            return 1;
        case errc::internal:
            std::cerr << "internal error: " << e.what() << "\n";
            return 1;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
