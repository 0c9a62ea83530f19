#include "abgrow/alphabet.hpp"
#include "abgrow/errors.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace abgrow {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

void check_symbol(const std::string& sym) {
    if (sym.empty()) fail(errc::parse, "empty generator symbol");
    for (char c : sym) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';' || c == '~' ||
            c == '#')
            fail(errc::parse, "invalid character in generator symbol '" + sym + "'");
    }
}

} // namespace

OrderedAlphabet::OrderedAlphabet(std::vector<std::string> symbols,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (symbols.empty()) fail(errc::validation, "empty alphabet");
    letters_.reserve(symbols.size());
    for (auto& s : symbols) {
        check_symbol(s);
        letters_.push_back(Letter{s, -1});
    }
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (letters_[i].symbol == letters_[j].symbol)
                fail(errc::parse, "duplicate generator symbol '" + letters_[i].symbol + "'");
    for (const auto& [a, b] : pairs) {
        int ia = find(a), ib = find(b);
        if (ia < 0) fail(errc::parse, "inverse pairing names undeclared letter '" + a + "'");
        if (ib < 0) fail(errc::parse, "inverse pairing names undeclared letter '" + b + "'");
        if (letters_[ia].inverse >= 0 || (letters_[ib].inverse >= 0 && ib != ia))
            fail(errc::parse, "letter paired twice in inverse declarations: '" + a + "'~'" + b + "'");
        letters_[ia].inverse = ib;
        letters_[ib].inverse = ia;
    }
    for (int i = 0; i < size(); ++i)
        if (letters_[i].inverse < 0)
            fail(errc::validation,
                 "alphabet not closed under inverse: letter '" + letters_[i].symbol +
                     "' has no declared inverse");
}

int OrderedAlphabet::self_inverse_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        if (self_inverse(i)) ++c;
    return c;
}

int OrderedAlphabet::find(std::string_view symbol) const {
    for (int i = 0; i < size(); ++i)
        if (letters_[i].symbol == symbol) return i;
    return -1;
}

Word OrderedAlphabet::parse_word(std::string_view text) const {
    if ((text == "e" || text == "1") && find(text) < 0) return {};
    Word w;
    size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < size(); ++i) {
            const std::string& sym = letters_[i].symbol;
            if (sym.size() > best_len && text.compare(pos, sym.size(), sym) == 0) {
                best = i;
                best_len = sym.size();
            }
        }
        if (best < 0)
            fail(errc::parse, "undeclared letter at '" + std::string(text.substr(pos)) + "'");
        w.push_back(best);
        pos += best_len;
    }
    return w;
}

std::string OrderedAlphabet::format_word(const Word& w) const {
    if (w.empty()) return "e";
    std::string out;
    for (int letter : w) out += symbol(letter);
    return out;
}

GroupSpec parse_group_spec(const std::string& text) {
    std::vector<std::string> symbols;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> relator_text;

    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(errc::parse, "empty group description");

    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(errc::parse, std::string("bad JSON group description: ") + e.what());
        }
        if (!j.contains("generators") || !j["generators"].is_array())
            fail(errc::parse, "JSON group description needs a \"generators\" array");
        for (const auto& g : j["generators"]) symbols.push_back(g.get<std::string>());
        if (j.contains("inverses"))
            for (const auto& p : j["inverses"]) {
                if (!p.is_array() || p.size() != 2)
                    fail(errc::parse, "each \"inverses\" entry must be a pair");
                pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
            }
        OrderedAlphabet alphabet(symbols, pairs);
        GroupSpec spec{alphabet, {}};
        if (j.contains("relators"))
            for (const auto& r : j["relators"]) {
                if (r.is_string()) {
                    spec.relators.push_back(alphabet.parse_word(r.get<std::string>()));
                } else if (r.is_array()) {
                    Word w;
                    for (const auto& s : r) {
                        int idx = alphabet.find(s.get<std::string>());
                        if (idx < 0)
                            fail(errc::parse,
                                 "relator uses undeclared letter '" + s.get<std::string>() + "'");
                        w.push_back(idx);
                    }
                    spec.relators.push_back(std::move(w));
                } else {
                    fail(errc::parse, "relators must be words or letter arrays");
                }
            }
        return spec;
    }

    bool saw_gens = false;
    for (const std::string& rawline : split(text, '\n')) {
        for (const std::string& rawstmt : split(rawline, ';')) {
            std::string stmt = trim(rawstmt);
            if (auto h = stmt.find('#'); h != std::string::npos) stmt = trim(stmt.substr(0, h));
            if (stmt.empty()) continue;
            size_t sp = stmt.find(' ');
            std::string kw = stmt.substr(0, sp);
            std::string rest = sp == std::string::npos ? "" : trim(stmt.substr(sp + 1));
            if (kw == "gens") {
                if (saw_gens) fail(errc::parse, "multiple gens statements");
                saw_gens = true;
                std::string norm = rest;
                std::replace(norm.begin(), norm.end(), ',', ' ');
                for (const std::string& s : split(norm, ' ')) {
                    std::string sym = trim(s);
                    if (!sym.empty()) symbols.push_back(sym);
                }
                if (symbols.empty()) fail(errc::parse, "empty gens statement");
            } else if (kw == "inv") {
                for (const std::string& s : split(rest, ',')) {
                    std::string p = trim(s);
                    if (p.empty()) continue;
                    size_t tilde = p.find('~');
                    if (tilde == std::string::npos)
                        fail(errc::parse, "inv entry '" + p + "' is not of the form x~y");
                    pairs.emplace_back(trim(p.substr(0, tilde)), trim(p.substr(tilde + 1)));
                }
            } else if (kw == "rel") {
                if (rest.empty()) fail(errc::parse, "empty rel statement");
                if (rest.find(' ') != std::string::npos)
                    fail(errc::parse, "relator '" + rest + "' contains whitespace");
                relator_text.push_back(rest);
            } else {
                fail(errc::parse, "unknown statement '" + kw + "'");
            }
        }
    }
    if (!saw_gens) fail(errc::parse, "missing gens statement");

    OrderedAlphabet alphabet(symbols, pairs);
    GroupSpec spec{alphabet, {}};
    for (const std::string& r : relator_text) spec.relators.push_back(alphabet.parse_word(r));
    return spec;
}

long mu(const GroupSpec& spec) {
    long total = 0;
    for (const Word& r : spec.relators) total += static_cast<long>(r.size());
    return total;
}

long mu_effective(const GroupSpec& spec) {
    return mu(spec) + 2L * spec.alphabet.self_inverse_count();
}

} // namespace abgrow
