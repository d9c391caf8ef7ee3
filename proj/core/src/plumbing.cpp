#include "splicekit/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

namespace splicekit {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line.substr(0, line.find('#')));
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::vector<std::size_t> component_avoiding(const PlumbingGraph& p, std::size_t start, std::size_t removed) {
    std::vector<bool> seen(p.vertex_count(), false);
    seen[removed] = true;
    seen[start] = true;
    std::vector<std::size_t> out{start};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t w : p.neighbours(out[i]))
            if (!seen[w]) {
                seen[w] = true;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PlumbingGraph PlumbingGraph::create(std::vector<PlumbingVertex> vertices,
                                    std::vector<std::pair<std::string, std::string>> edges) {
    PlumbingGraph p;
    std::map<std::string, std::size_t, std::less<>> index;
    for (auto& v : vertices) {
        if (v.id.empty()) throw InputError("empty plumbing vertex id");
        if (v.genus < 0) throw InputError("negative genus at '" + v.id + "'");
        if (!index.emplace(v.id, p.vertices_.size()).second)
            throw InputError("duplicate plumbing vertex '" + v.id + "'");
        p.vertices_.push_back(std::move(v));
    }
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw InputError("edge " + a + "-" + b + " references an undeclared vertex");
        if (ia->second == ib->second) throw InputError("loop at '" + a + "'");
        p.edges_.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
    }
    std::sort(p.edges_.begin(), p.edges_.end());
    if (std::adjacent_find(p.edges_.begin(), p.edges_.end()) != p.edges_.end())
        throw InputError("duplicate plumbing edge");
    p.adjacency_.assign(p.vertices_.size(), {});
    for (const auto& [a, b] : p.edges_) {
        p.adjacency_[a].push_back(b);
        p.adjacency_[b].push_back(a);
    }
    for (auto& adj : p.adjacency_) std::sort(adj.begin(), adj.end());
    return p;
}

std::size_t PlumbingGraph::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    throw InputError("unknown plumbing vertex '" + std::string(id) + "'");
}

bool PlumbingGraph::is_tree() const {
    if (vertices_.empty() || edges_.size() + 1 != vertices_.size()) return false;
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> reached{0};
    seen[0] = true;
    for (std::size_t i = 0; i < reached.size(); ++i)
        for (std::size_t w : adjacency_[reached[i]])
            if (!seen[w]) {
                seen[w] = true;
                reached.push_back(w);
            }
    return reached.size() == vertices_.size();
}

bool PlumbingGraph::all_spheres() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const PlumbingVertex& v) { return v.genus == 0; });
}

PlumbingGraph parse_plumbing(std::istream& in) {
    std::vector<PlumbingVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string raw;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = split_tokens(raw);
        if (tokens.empty()) continue;
        const std::size_t column = raw.find(tokens[0]) + 1;
        if (!header) {
            if (tokens.size() != 1 || tokens[0] != "plumbing") throw ParseError(line_no, column, "expected header 'plumbing'");
            header = true;
            continue;
        }
        try {
            if (tokens[0] == "vertex") {
                if (tokens.size() != 3 && tokens.size() != 4)
                    throw ParseError(line_no, column, "'vertex' takes 2 or 3 arguments");
                int genus = 0;
                if (tokens.size() == 4) {
                    const BigInt g = parse_integer(tokens[3]);
                    if (g < 0 || g > 1000000) throw ParseError(line_no, column, "genus out of range");
                    genus = static_cast<int>(g);
                }
                vertices.push_back({tokens[1], parse_integer(tokens[2]), genus});
            } else if (tokens[0] == "edge") {
                if (tokens.size() != 3) throw ParseError(line_no, column, "'edge' takes 2 arguments");
                edges.emplace_back(tokens[1], tokens[2]);
            } else {
                throw ParseError(line_no, column, "unknown directive '" + tokens[0] + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(line_no, column, e.what());
        }
    }
    if (!header) throw ParseError(line_no + 1, 1, "expected header 'plumbing'");
    return PlumbingGraph::create(std::move(vertices), std::move(edges));
}

PlumbingGraph parse_plumbing(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_plumbing(in);
}

std::string to_plumbing_text(const PlumbingGraph& p) {
    std::ostringstream out;
    out << "plumbing\n";
    for (const auto& v : p.vertices()) {
        out << "vertex " << v.id << ' ' << v.euler;
        if (v.genus != 0) out << ' ' << v.genus;
        out << '\n';
    }
    for (const auto& [a, b] : p.edges()) out << "edge " << p.vertices()[a].id << ' ' << p.vertices()[b].id << '\n';
    return out.str();
}

IntegerMatrix intersection_matrix(const PlumbingGraph& p) {
    IntegerMatrix m(p.vertex_count(), p.vertex_count());
    for (std::size_t v = 0; v < p.vertex_count(); ++v) m(v, v) = p.vertices()[v].euler;
    for (const auto& [a, b] : p.edges()) {
        m(a, b) += 1;
        m(b, a) += 1;
    }
    return m;
}

BigInt h1_order(const PlumbingGraph& p) {
    if (!p.is_tree()) throw InputError("|H_1| from the intersection form needs a tree plumbing");
    if (!p.all_spheres()) throw InputError("|H_1| from the intersection form needs genus 0 everywhere");
    return abs(exact_determinant(intersection_matrix(p)));
}

bool plumbing_is_qhs(const PlumbingGraph& p) {
    return p.is_tree() && p.all_spheres() && exact_determinant(intersection_matrix(p)) != 0;
}

bool is_negative_definite(const PlumbingGraph& p) {
    const IntegerMatrix a = intersection_matrix(p);
    std::vector<std::size_t> leading;
    for (std::size_t k = 0; k < p.vertex_count(); ++k) {
        leading.push_back(k);
        const BigInt minor = exact_determinant(a.principal(leading));
        // (-1)^k det(A_k) > 0 for k = 1..n
        if (minor.sign() != ((leading.size() % 2 == 1) ? -1 : 1)) return false;
    }
    return true;
}

SpliceDiagram plumbing_to_splice(const PlumbingGraph& p) {
    if (!plumbing_is_qhs(p)) throw InputError("plumbing is not a rational homology sphere tree of spheres");
    const IntegerMatrix a = intersection_matrix(p);
    const std::size_t n = p.vertex_count();
    const auto& pv = p.vertices();

    std::vector<SpliceDiagram::VertexDecl> vertices;
    std::vector<SpliceDiagram::EdgeDecl> edges;

    std::vector<std::size_t> nodes;
    for (std::size_t v = 0; v < n; ++v)
        if (p.neighbours(v).size() >= 3) nodes.push_back(v);

    if (nodes.empty()) {
        std::vector<std::string> ends;
        for (std::size_t v = 0; v < n; ++v)
            if (p.neighbours(v).size() <= 1) ends.push_back(pv[v].id);
        if (n == 1) ends = {pv[0].id + ".0", pv[0].id + ".1"};
        vertices.push_back({ends[0], VertexKind::leaf, 0});
        vertices.push_back({ends[1], VertexKind::leaf, 0});
        edges.push_back({ends[0], ends[1], {}});
        return SpliceDiagram::create(std::move(vertices), std::move(edges));
    }

    auto component_det = [&](std::size_t removed, std::size_t toward) {
        const auto comp = component_avoiding(p, toward, removed);
        return exact_determinant(a.principal(comp));
    };

    const BigInt total = exact_determinant(a);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t k = p.neighbours(v).size();
        if (k == 1) vertices.push_back({pv[v].id, VertexKind::leaf, 0});
        if (k < 3) continue;
        BigInt minor = 1;
        for (std::size_t x : p.neighbours(v)) minor *= component_det(v, x);
        // (A^-1)_vv = det(A - v) / det(A)
        const int sign = minor == 0 ? 1 : -(minor.sign() * total.sign());
        vertices.push_back({pv[v].id, VertexKind::node, sign});
    }

    // Walk each direction out of a node through its chain to the next
    // non-chain vertex.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<BigInt, BigInt>> node_links;
    for (std::size_t v : nodes) {
        for (std::size_t x : p.neighbours(v)) {
            std::size_t prev = v;
            std::size_t cur = x;
            while (p.neighbours(cur).size() == 2) {
                const auto& nb = p.neighbours(cur);
                const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            BigInt w = abs(component_det(v, x));
            if (p.neighbours(cur).size() == 1) {
                edges.push_back({pv[v].id, pv[cur].id, {std::move(w)}});
            } else if (v < cur) {
                node_links[{v, cur}].first = std::move(w);
            } else {
                node_links[{cur, v}].second = std::move(w);
            }
        }
    }
    for (auto& [ends, weights] : node_links)
        edges.push_back({pv[ends.first].id, pv[ends.second].id, {weights.first, weights.second}});
    return SpliceDiagram::create(std::move(vertices), std::move(edges));
}

PlumbingGraph random_plumbing(std::uint64_t seed, std::size_t max_vertices) {
    if (max_vertices < 1) throw InputError("random_plumbing needs max_vertices >= 1");
    std::mt19937_64 rng(seed);
    // Plain modular reduction keeps the stream identical across standard libraries.
    auto below = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
    while (true) {
        const std::size_t n = 1 + below(max_vertices);
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t i = 1; i < n; ++i) edges.emplace_back("p" + std::to_string(below(i)), "p" + std::to_string(i));
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<PlumbingVertex> vertices;
            for (std::size_t i = 0; i < n; ++i)
                vertices.push_back({"p" + std::to_string(i), BigInt(-1 - static_cast<long>(below(9))), 0});
            PlumbingGraph p = PlumbingGraph::create(std::move(vertices), edges);
            if (is_negative_definite(p)) return p;
        }
    }
}

}  // namespace splicekit
