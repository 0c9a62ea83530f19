#include "abgrow/subgraph.hpp"
#include "abgrow/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace abgrow {

Subgraph single_vertex(const AbelianStructure& g) {
    Subgraph s;
    s.name = "vertex";
    s.vertices.push_back(g.zero());
    return s;
}

Subgraph subgraph_from_path(const AbelianStructure& g, const Word& letters) {
    if (letters.empty()) fail(errc::validation, "path subgraph needs a nonempty word");
    Subgraph s;
    s.name = "path:" + g.alphabet().format_word(letters);
    s.vertices.push_back(g.zero());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        s.vertices.push_back(g.step(s.vertices.back(), letters[i]));
        s.edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1, letters[i]});
    }
    return s;
}

namespace {

// a single letter, or a comma/whitespace separated list of letters
Word parse_letter_list(const std::string& text, const OrderedAlphabet& alphabet) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    Word letters;
    std::string tok;
    while (in >> tok) {
        Word part = alphabet.parse_word(tok);
        letters.insert(letters.end(), part.begin(), part.end());
    }
    return letters;
}

class SubgraphBuilder {
public:
    explicit SubgraphBuilder(const AbelianStructure& g) : g_(g) {}

    int add_vertex(const Element& e) {
        auto it = index_.find(e);
        if (it != index_.end()) return it->second;
        int idx = static_cast<int>(s_.vertices.size());
        s_.vertices.push_back(e);
        index_.emplace(e, idx);
        return idx;
    }

    int declare_vertex(const std::string& word) {
        Element e = g_.evaluate(g_.alphabet().parse_word(word));
        if (index_.count(e))
            fail(errc::validation,
                 "duplicate subgraph vertex: \"" + word + "\" repeats an earlier element");
        return add_vertex(e);
    }

    // endpoints must already be declared vertices
    void add_edge(const std::string& tail, const std::string& label, const std::string& head) {
        Word lw = g_.alphabet().parse_word(label);
        if (lw.size() != 1)
            fail(errc::parse, "edge label must be a single letter, got \"" + label + "\"");
        int t = find_vertex(tail), h = find_vertex(head);
        s_.edges.push_back({t, h, lw[0]});
    }

    void set_base(const std::string& word) {
        s_.base = find_vertex(word);
    }

    Subgraph take(std::string name) {
        s_.name = std::move(name);
        return std::move(s_);
    }

    bool empty() const { return s_.vertices.empty(); }

private:
    int find_vertex(const std::string& word) {
        Element e = g_.evaluate(g_.alphabet().parse_word(word));
        auto it = index_.find(e);
        if (it == index_.end())
            fail(errc::validation, "subgraph word \"" + word + "\" is not a listed vertex");
        return it->second;
    }

    const AbelianStructure& g_;
    Subgraph s_;
    std::unordered_map<Element, int, ElementHash> index_;
};

Subgraph parse_subgraph_json(const std::string& text, const AbelianStructure& g) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("invalid subgraph JSON: ") + e.what());
    }
    if (!j.is_object()) fail(errc::parse, "subgraph JSON must be an object");

    if (j.contains("path")) {
        if (!j["path"].is_array()) fail(errc::parse, "\"path\" must be an array of letters");
        Word letters;
        for (const auto& item : j["path"]) {
            if (!item.is_string()) fail(errc::parse, "\"path\" entries must be letter strings");
            Word part = g.alphabet().parse_word(item.get<std::string>());
            letters.insert(letters.end(), part.begin(), part.end());
        }
        return subgraph_from_path(g, letters);
    }

    if (!j.contains("vertices") || !j["vertices"].is_array())
        fail(errc::parse, "subgraph JSON needs a \"vertices\" array or a \"path\"");
    SubgraphBuilder b(g);
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) fail(errc::parse, "\"vertices\" entries must be words");
        b.declare_vertex(v.get<std::string>());
    }
    if (b.empty()) fail(errc::validation, "subgraph needs at least one vertex");
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) fail(errc::parse, "\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
                !e[2].is_string())
                fail(errc::parse, "each edge must be [\"tail word\", \"letter\", \"head word\"]");
            b.add_edge(e[0].get<std::string>(), e[1].get<std::string>(),
                       e[2].get<std::string>());
        }
    }
    if (j.contains("base")) {
        if (!j["base"].is_string()) fail(errc::parse, "\"base\" must be a word");
        b.set_base(j["base"].get<std::string>());
    }
    return b.take(j.value("name", std::string("subgraph")));
}

Subgraph parse_subgraph_statements(const std::string& text, const AbelianStructure& g) {
    std::vector<std::string> statements;
    std::string current;
    for (char c : text + "\n") {
        if (c == '\n' || c == ';') {
            statements.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    SubgraphBuilder b(g);
    bool any = false;
    for (std::string stmt : statements) {
        std::size_t hash = stmt.find('#');
        if (hash != std::string::npos) stmt.resize(hash);
        std::istringstream in(stmt);
        std::string keyword;
        if (!(in >> keyword)) continue;
        any = true;
        std::vector<std::string> args;
        std::string tok;
        while (in >> tok) args.push_back(tok);
        if (keyword == "vertex") {
            if (args.size() > 1) fail(errc::parse, "vertex statement takes one word");
            b.declare_vertex(args.empty() ? "e" : args[0]);
        } else if (keyword == "edge") {
            if (args.size() != 3)
                fail(errc::parse, "edge statement needs: edge <tail> <letter> <head>");
            b.add_edge(args[0], args[1], args[2]);
        } else if (keyword == "base") {
            if (args.size() != 1) fail(errc::parse, "base statement takes one word");
            b.set_base(args[0]);
        } else if (keyword.rfind("path:", 0) == 0) {
            std::string rest = keyword.substr(5);
            for (const auto& a : args) rest += " " + a;
            return subgraph_from_path(g, parse_letter_list(rest, g.alphabet()));
        } else if (keyword == "path" && !args.empty() && args[0][0] == ':') {
            std::string rest = args[0].substr(1);
            for (std::size_t i = 1; i < args.size(); ++i) rest += " " + args[i];
            return subgraph_from_path(g, parse_letter_list(rest, g.alphabet()));
        } else {
            fail(errc::parse, "unrecognised subgraph statement: \"" + keyword + "\"");
        }
    }
    if (!any) fail(errc::parse, "empty subgraph description");
    return b.take("subgraph");
}

} // namespace

Subgraph parse_subgraph(const std::string& text, const AbelianStructure& g) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(errc::parse, "empty subgraph description");
    if (text[first] == '{') return parse_subgraph_json(text, g);
    return parse_subgraph_statements(text, g);
}

std::vector<Element> vertex_offsets(const AbelianStructure& g, const Subgraph& s) {
    if (s.vertices.empty()) fail(errc::validation, "subgraph needs at least one vertex");
    if (s.base < 0 || s.base >= static_cast<int>(s.vertices.size()))
        fail(errc::validation, "subgraph base vertex out of range");
    std::vector<Element> off;
    off.reserve(s.vertices.size());
    for (const Element& v : s.vertices) off.push_back(g.sub(v, s.vertices[s.base]));
    return off;
}

void validate_subgraph(const AbelianStructure& g, const Subgraph& s) {
    int n = static_cast<int>(s.vertices.size());
    if (n == 0) fail(errc::validation, "subgraph needs at least one vertex");
    if (s.base < 0 || s.base >= n) fail(errc::validation, "subgraph base vertex out of range");
    for (const Element& v : s.vertices)
        if (static_cast<int>(v.size()) != g.width())
            fail(errc::internal, "subgraph vertex has wrong coordinate width");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.vertices[i] == s.vertices[j])
                fail(errc::validation, "subgraph vertices " + std::to_string(i) + " and " +
                                           std::to_string(j) +
                                           " are the same group element");

    std::vector<std::vector<int>> adjacent(n);
    for (const LabelledEdge& e : s.edges) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            fail(errc::validation, "subgraph edge endpoint out of range");
        if (e.letter < 0 || e.letter >= g.alphabet().size())
            fail(errc::validation, "subgraph edge letter out of range");
        if (g.step(s.vertices[e.tail], e.letter) != s.vertices[e.head])
            fail(errc::validation,
                 "subgraph edge labelled \"" + g.alphabet().symbol(e.letter) +
                     "\" does not connect its endpoints in the group");
        adjacent[e.tail].push_back(e.head);
        adjacent[e.head].push_back(e.tail);
    }

    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    seen[s.base] = 1;
    queue.push(s.base);
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u : adjacent[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push(u);
            }
    }
    if (reached != n) fail(errc::validation, "subgraph is not connected");
}

int subgraph_diameter(const AbelianStructure& g, const Subgraph& s) {
    int d = 0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
            d = std::max(d, geodesic_length(g, g.sub(s.vertices[i], s.vertices[j])));
    return d;
}

} // namespace abgrow
