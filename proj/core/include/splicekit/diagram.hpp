#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splicekit/exact_math.hpp"

namespace splicekit {

enum class VertexKind { node, leaf };

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Vertex {
    std::string id;
    VertexKind kind = VertexKind::leaf;
    int sign = 0;  // +1 or -1 for nodes, 0 for leaves

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Endpoints are stored with a < b. weight_a / weight_b are engaged exactly at
// node endpoints.
struct Edge {
    VertexIndex a = 0;
    VertexIndex b = 0;
    std::optional<BigInt> weight_a;
    std::optional<BigInt> weight_b;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// An (edge, node) incidence: the place where a single edge weight lives.
struct EdgeEnd {
    EdgeIndex edge = 0;
    VertexIndex vertex = 0;

    friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Validated splice diagram: a finite tree without valence-two vertices,
/// signed nodes of valence >= 3, leaves of valence 1, and one nonnegative
/// weight on every edge end that sits at a node.
///
/// Vertices are stored sorted by id and edges sorted by endpoint ids, so every
/// iteration over indices is canonical and independent of input order. The two
/// degenerate no-node shapes (empty, or a single leaf-leaf edge) are accepted.
class SpliceDiagram {
public:
    struct VertexDecl {
        std::string id;
        VertexKind kind = VertexKind::leaf;
        int sign = 0;
    };
    // weights follow the file grammar: the first weight sits at `a` if `a` is a
    // node, otherwise at `b`.
    struct EdgeDecl {
        std::string a;
        std::string b;
        std::vector<BigInt> weights;
    };

    SpliceDiagram() = default;

    /// Throws InputError naming the violated invariant.
    static SpliceDiagram create(std::vector<VertexDecl> vertices, std::vector<EdgeDecl> edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool is_node(VertexIndex v) const { return vertex(v).kind == VertexKind::node; }
    bool is_leaf(VertexIndex v) const { return vertex(v).kind == VertexKind::leaf; }
    int sign(VertexIndex v) const { return vertex(v).sign; }
    const std::string& id(VertexIndex v) const { return vertex(v).id; }

    std::optional<VertexIndex> find(std::string_view id) const;
    /// Throws InputError for an unknown id.
    VertexIndex index_of(std::string_view id) const;

    /// Edges at v, in canonical order.
    std::span<const EdgeIndex> incident(VertexIndex v) const { return incidence_.at(v); }
    std::size_t valence(VertexIndex v) const { return incident(v).size(); }
    VertexIndex other_end(EdgeIndex e, VertexIndex v) const;
    std::optional<EdgeIndex> edge_between(VertexIndex u, VertexIndex v) const;

    /// Throws InputError if end.vertex is not a node endpoint of end.edge.
    const BigInt& weight(EdgeEnd end) const;
    std::vector<BigInt> weights_at(VertexIndex node) const;
    std::vector<EdgeEnd> ends_at(VertexIndex node) const;

    std::vector<VertexIndex> nodes() const;
    std::vector<VertexIndex> leaves() const;
    /// Edges whose endpoints are both nodes.
    std::vector<EdgeIndex> node_edges() const;
    bool is_node_edge(EdgeIndex e) const;
    /// Nodes with exactly one neighbouring node.
    bool is_end_node(VertexIndex v) const;

    /// Vertices of the component of (diagram - end.edge) not containing end.vertex.
    std::vector<VertexIndex> beyond(EdgeEnd end) const;
    /// Vertex sequence of the unique path from `from` to `to`, inclusive.
    std::vector<VertexIndex> path(VertexIndex from, VertexIndex to) const;
    std::string edge_label(EdgeIndex e) const;

    friend bool operator==(const SpliceDiagram& x, const SpliceDiagram& y) {
        return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Parses the line-based `splice` format. Throws ParseError for syntax
/// problems and InputError for structural ones.
SpliceDiagram parse_diagram(std::istream& in);
SpliceDiagram parse_diagram(std::string_view text);

/// Serializes in canonical order; parse_diagram(to_splice_text(d)) == d.
std::string to_splice_text(const SpliceDiagram& d);

/// True iff, after deleting end.vertex, the edge of `end` and `target` lie in
/// the same component.
bool sees(const SpliceDiagram& d, EdgeEnd end, VertexIndex target);
bool sees_edge(const SpliceDiagram& d, EdgeEnd end, EdgeIndex target);

struct WeightToward {
    EdgeEnd end;
    BigInt weight;
};

/// The edge end at node v_prime that sees v, and its weight r_{v'}(v).
WeightToward weight_toward(const SpliceDiagram& d, VertexIndex v_prime, VertexIndex v);
EdgeEnd end_toward(const SpliceDiagram& d, VertexIndex v_prime, VertexIndex v);

/// Product of the weights sitting at path vertices on edges off the v-w path.
/// The primed variant drops the weights at v and at w. Empty product is 1.
BigInt linking(const SpliceDiagram& d, VertexIndex v, VertexIndex w, bool primed);

}  // namespace splicekit
