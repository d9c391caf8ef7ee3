#include "splicekit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>

namespace splicekit {

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

BigInt parse_weight(const Token& t, std::size_t line) {
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(line, t.column, "edge weight must be a nonnegative integer, got '" + t.text + "'");
    return BigInt(t.text);
}

}  // namespace

SpliceDiagram SpliceDiagram::create(std::vector<VertexDecl> vertex_decls, std::vector<EdgeDecl> edge_decls) {
    SpliceDiagram d;
    std::sort(vertex_decls.begin(), vertex_decls.end(),
              [](const VertexDecl& x, const VertexDecl& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < vertex_decls.size(); ++i) {
        const auto& decl = vertex_decls[i];
        if (decl.id.empty()) throw InputError("empty vertex id");
        if (i > 0 && vertex_decls[i - 1].id == decl.id) throw InputError("duplicate vertex id '" + decl.id + "'");
        if (decl.kind == VertexKind::node && decl.sign != 1 && decl.sign != -1)
            throw InputError("node '" + decl.id + "' is missing a sign");
        d.vertices_.push_back({decl.id, decl.kind, decl.kind == VertexKind::node ? decl.sign : 0});
    }
    d.incidence_.assign(d.vertices_.size(), {});

    for (const auto& decl : edge_decls) {
        VertexIndex a = d.index_of(decl.a);
        VertexIndex b = d.index_of(decl.b);
        const std::string label = decl.a + "-" + decl.b;
        if (a == b) throw InputError("edge " + label + " is a loop");
        const bool a_node = d.is_node(a);
        const bool b_node = d.is_node(b);
        const std::size_t expected = static_cast<std::size_t>(a_node) + static_cast<std::size_t>(b_node);
        if (decl.weights.size() != expected)
            throw InputError("edge " + label + ": expected " + std::to_string(expected) + " weight(s), got " +
                             std::to_string(decl.weights.size()));
        for (const auto& w : decl.weights)
            if (w < 0) throw InputError("edge " + label + ": negative weight");
        Edge edge{a, b, std::nullopt, std::nullopt};
        std::size_t next = 0;
        if (a_node) edge.weight_a = decl.weights[next++];
        if (b_node) edge.weight_b = decl.weights[next++];
        if (edge.a > edge.b) {
            std::swap(edge.a, edge.b);
            std::swap(edge.weight_a, edge.weight_b);
        }
        d.edges_.push_back(std::move(edge));
    }
    std::sort(d.edges_.begin(), d.edges_.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    for (std::size_t e = 0; e < d.edges_.size(); ++e) {
        if (e > 0 && d.edges_[e - 1].a == d.edges_[e].a && d.edges_[e - 1].b == d.edges_[e].b)
            throw InputError("duplicate edge " + d.edge_label(e));
        d.incidence_[d.edges_[e].a].push_back(e);
        d.incidence_[d.edges_[e].b].push_back(e);
    }

    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
        if (d.valence(v) == 2) throw InputError("valence two vertex '" + d.id(v) + "'");
    }
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
        const std::size_t k = d.valence(v);
        if (d.is_node(v) && k < 3)
            throw InputError("node '" + d.id(v) + "' has valence " + std::to_string(k) + ", nodes need at least 3");
        if (d.is_leaf(v) && k != 1)
            throw InputError("leaf '" + d.id(v) + "' has valence " + std::to_string(k) + ", leaves need exactly 1");
    }

    if (!d.vertices_.empty()) {
        std::vector<bool> seen(d.vertex_count(), false);
        std::queue<VertexIndex> todo;
        todo.push(0);
        seen[0] = true;
        std::size_t reached = 1;
        while (!todo.empty()) {
            const VertexIndex u = todo.front();
            todo.pop();
            for (EdgeIndex e : d.incident(u)) {
                const VertexIndex w = d.other_end(e, u);
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    todo.push(w);
                }
            }
        }
        if (reached != d.vertex_count()) throw InputError("diagram is disconnected");
        if (d.edge_count() != d.vertex_count() - 1) throw InputError("diagram contains a cycle");
    }
    return d;
}

std::optional<VertexIndex> SpliceDiagram::find(std::string_view id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, std::string_view key) { return v.id < key; });
    if (it == vertices_.end() || it->id != id) return std::nullopt;
    return static_cast<VertexIndex>(it - vertices_.begin());
}

VertexIndex SpliceDiagram::index_of(std::string_view id) const {
    if (auto v = find(id)) return *v;
    throw InputError("unknown vertex '" + std::string(id) + "'");
}

VertexIndex SpliceDiagram::other_end(EdgeIndex e, VertexIndex v) const {
    const Edge& edge = this->edge(e);
    if (edge.a == v) return edge.b;
    if (edge.b == v) return edge.a;
    throw InputError("vertex '" + id(v) + "' is not on edge " + edge_label(e));
}

std::optional<EdgeIndex> SpliceDiagram::edge_between(VertexIndex u, VertexIndex v) const {
    for (EdgeIndex e : incident(u))
        if (other_end(e, u) == v) return e;
    return std::nullopt;
}

const BigInt& SpliceDiagram::weight(EdgeEnd end) const {
    const Edge& e = edge(end.edge);
    if (e.a == end.vertex && e.weight_a) return *e.weight_a;
    if (e.b == end.vertex && e.weight_b) return *e.weight_b;
    throw InputError("no weight at vertex '" + id(end.vertex) + "' on edge " + edge_label(end.edge));
}

std::vector<BigInt> SpliceDiagram::weights_at(VertexIndex node) const {
    std::vector<BigInt> out;
    for (EdgeIndex e : incident(node)) out.push_back(weight({e, node}));
    return out;
}

std::vector<EdgeEnd> SpliceDiagram::ends_at(VertexIndex node) const {
    std::vector<EdgeEnd> out;
    for (EdgeIndex e : incident(node)) out.push_back({e, node});
    return out;
}

std::vector<VertexIndex> SpliceDiagram::nodes() const {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < vertex_count(); ++v)
        if (is_node(v)) out.push_back(v);
    return out;
}

std::vector<VertexIndex> SpliceDiagram::leaves() const {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < vertex_count(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

bool SpliceDiagram::is_node_edge(EdgeIndex e) const { return is_node(edge(e).a) && is_node(edge(e).b); }

std::vector<EdgeIndex> SpliceDiagram::node_edges() const {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < edge_count(); ++e)
        if (is_node_edge(e)) out.push_back(e);
    return out;
}

bool SpliceDiagram::is_end_node(VertexIndex v) const {
    if (!is_node(v)) return false;
    std::size_t neighbours = 0;
    for (EdgeIndex e : incident(v))
        if (is_node(other_end(e, v))) ++neighbours;
    return neighbours == 1;
}

std::vector<VertexIndex> SpliceDiagram::beyond(EdgeEnd end) const {
    const VertexIndex start = other_end(end.edge, end.vertex);
    std::vector<bool> seen(vertex_count(), false);
    seen[end.vertex] = true;
    seen[start] = true;
    std::vector<VertexIndex> out{start};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (EdgeIndex e : incident(out[i])) {
            const VertexIndex w = other_end(e, out[i]);
            if (!seen[w]) {
                seen[w] = true;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexIndex> SpliceDiagram::path(VertexIndex from, VertexIndex to) const {
    constexpr VertexIndex none = static_cast<VertexIndex>(-1);
    std::vector<VertexIndex> parent(vertex_count(), none);
    parent.at(from) = from;
    std::queue<VertexIndex> todo;
    todo.push(from);
    while (!todo.empty() && parent.at(to) == none) {
        const VertexIndex u = todo.front();
        todo.pop();
        for (EdgeIndex e : incident(u)) {
            const VertexIndex w = other_end(e, u);
            if (parent[w] == none) {
                parent[w] = u;
                todo.push(w);
            }
        }
    }
    std::vector<VertexIndex> out{to};
    while (out.back() != from) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::string SpliceDiagram::edge_label(EdgeIndex e) const {
    return id(edge(e).a) + "-" + id(edge(e).b);
}

SpliceDiagram parse_diagram(std::istream& in) {
    struct PendingEdge {
        SpliceDiagram::EdgeDecl decl;
        std::size_t line;
        std::size_t column;
    };
    std::vector<SpliceDiagram::VertexDecl> vertices;
    std::map<std::string, VertexKind, std::less<>> kinds;
    std::vector<PendingEdge> edges;

    std::string raw;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0].text;
        if (!header) {
            if (keyword != "splice" || tokens.size() != 1)
                throw ParseError(line_no, tokens[0].column, "expected header 'splice'");
            header = true;
            continue;
        }
        auto expect_args = [&](std::size_t lo, std::size_t hi) {
            const std::size_t n = tokens.size() - 1;
            if (n < lo || n > hi)
                throw ParseError(line_no, tokens[0].column,
                                 "'" + keyword + "' takes " +
                                     (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                                     " arguments, got " + std::to_string(n));
        };
        auto declare = [&](const Token& id, VertexKind kind) {
            if (!kinds.emplace(id.text, kind).second)
                throw ParseError(line_no, id.column, "duplicate vertex id '" + id.text + "'");
        };
        if (keyword == "node") {
            expect_args(2, 2);
            const Token& sign = tokens[2];
            if (sign.text != "+" && sign.text != "-")
                throw ParseError(line_no, sign.column, "node sign must be '+' or '-', got '" + sign.text + "'");
            declare(tokens[1], VertexKind::node);
            vertices.push_back({tokens[1].text, VertexKind::node, sign.text == "+" ? 1 : -1});
        } else if (keyword == "leaf") {
            expect_args(1, 1);
            declare(tokens[1], VertexKind::leaf);
            vertices.push_back({tokens[1].text, VertexKind::leaf, 0});
        } else if (keyword == "edge") {
            expect_args(2, 4);
            SpliceDiagram::EdgeDecl decl{tokens[1].text, tokens[2].text, {}};
            for (std::size_t i = 3; i < tokens.size(); ++i) decl.weights.push_back(parse_weight(tokens[i], line_no));
            edges.push_back({std::move(decl), line_no, tokens[0].column});
        } else {
            throw ParseError(line_no, tokens[0].column, "unknown directive '" + keyword + "'");
        }
    }
    if (!header) throw ParseError(line_no + 1, 1, "expected header 'splice'");

    for (const auto& pending : edges) {
        std::size_t node_ends = 0;
        for (const std::string* end : {&pending.decl.a, &pending.decl.b}) {
            auto it = kinds.find(*end);
            if (it == kinds.end())
                throw ParseError(pending.line, pending.column, "edge references undeclared vertex '" + *end + "'");
            if (it->second == VertexKind::node) ++node_ends;
        }
        if (pending.decl.weights.size() != node_ends)
            throw ParseError(pending.line, pending.column,
                             "edge " + pending.decl.a + "-" + pending.decl.b + " needs " + std::to_string(node_ends) +
                                 " weight(s) (one per node end), got " + std::to_string(pending.decl.weights.size()));
    }
    std::vector<SpliceDiagram::EdgeDecl> decls;
    decls.reserve(edges.size());
    for (auto& pending : edges) decls.push_back(std::move(pending.decl));
    return SpliceDiagram::create(std::move(vertices), std::move(decls));
}

SpliceDiagram parse_diagram(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_diagram(in);
}

std::string to_splice_text(const SpliceDiagram& d) {
    std::ostringstream out;
    out << "splice\n";
    for (const auto& v : d.vertices()) {
        if (v.kind == VertexKind::node)
            out << "node " << v.id << ' ' << (v.sign > 0 ? '+' : '-') << '\n';
        else
            out << "leaf " << v.id << '\n';
    }
    for (const auto& e : d.edges()) {
        out << "edge " << d.id(e.a) << ' ' << d.id(e.b);
        if (e.weight_a) out << ' ' << *e.weight_a;
        if (e.weight_b) out << ' ' << *e.weight_b;
        out << '\n';
    }
    return out.str();
}

bool sees(const SpliceDiagram& d, EdgeEnd end, VertexIndex target) {
    if (!d.is_node(end.vertex)) throw InputError("sees: '" + d.id(end.vertex) + "' is not a node");
    if (target == end.vertex) throw InputError("sees: target is the node the weight sits at");
    const auto side = d.beyond(end);
    return std::binary_search(side.begin(), side.end(), target);
}

bool sees_edge(const SpliceDiagram& d, EdgeEnd end, EdgeIndex target) {
    if (!d.is_node(end.vertex)) throw InputError("sees: '" + d.id(end.vertex) + "' is not a node");
    if (target == end.edge) return true;
    const Edge& e = d.edge(target);
    if (e.a == end.vertex || e.b == end.vertex) return false;
    const auto side = d.beyond(end);
    return std::binary_search(side.begin(), side.end(), e.a);
}

EdgeEnd end_toward(const SpliceDiagram& d, VertexIndex v_prime, VertexIndex v) {
    if (!d.is_node(v_prime)) throw InputError("'" + d.id(v_prime) + "' is not a node");
    if (v_prime == v) throw InputError("weight toward a vertex from itself is undefined");
    const auto p = d.path(v_prime, v);
    return {*d.edge_between(v_prime, p[1]), v_prime};
}

WeightToward weight_toward(const SpliceDiagram& d, VertexIndex v_prime, VertexIndex v) {
    const EdgeEnd end = end_toward(d, v_prime, v);
    return {end, d.weight(end)};
}

BigInt linking(const SpliceDiagram& d, VertexIndex v, VertexIndex w, bool primed) {
    if (v == w) throw InputError("linking number of a vertex with itself");
    const auto p = d.path(v, w);
    BigInt result = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (primed && (i == 0 || i + 1 == p.size())) continue;
        const VertexIndex u = p[i];
        if (!d.is_node(u)) continue;
        for (EdgeIndex e : d.incident(u)) {
            const VertexIndex x = d.other_end(e, u);
            if ((i > 0 && x == p[i - 1]) || (i + 1 < p.size() && x == p[i + 1])) continue;
            result *= d.weight({e, u});
        }
    }
    return result;
}

}  // namespace splicekit
