#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splicekit/diagram.hpp"
#include "splicekit/exact_math.hpp"

namespace splicekit {

struct PlumbingVertex {
    std::string id;
    BigInt euler;
    int genus = 0;

    friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

/// Finite simple graph of weighted surfaces. Vertices keep declaration order;
/// edges are stored as (a, b) with a < b, sorted.
class PlumbingGraph {
public:
    PlumbingGraph() = default;

    static PlumbingGraph create(std::vector<PlumbingVertex> vertices,
                                std::vector<std::pair<std::string, std::string>> edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<PlumbingVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_.at(v); }
    std::size_t index_of(std::string_view id) const;

    bool is_tree() const;
    bool all_spheres() const;

    friend bool operator==(const PlumbingGraph& x, const PlumbingGraph& y) {
        return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
    }

private:
    std::vector<PlumbingVertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

PlumbingGraph parse_plumbing(std::istream& in);
PlumbingGraph parse_plumbing(std::string_view text);
std::string to_plumbing_text(const PlumbingGraph& p);

/// Euler weights on the diagonal, 1 per edge, in vertex declaration order.
IntegerMatrix intersection_matrix(const PlumbingGraph& p);

/// |det| of the intersection matrix; 0 encodes infinite H_1. Throws
/// InputError unless p is a tree of spheres.
BigInt h1_order(const PlumbingGraph& p);

bool plumbing_is_qhs(const PlumbingGraph& p);

/// Sylvester's criterion on the intersection matrix.
bool is_negative_definite(const PlumbingGraph& p);

/// Nodes are the vertices of valence >= 3, leaves the chain ends, and chains
/// of valence-two vertices collapse into single edges. The weight at node v
/// toward a neighbour is |det| of the component of p - v in that direction;
/// the node sign is sign(-(A^-1)_vv). Throws InputError unless p is a QHS.
SpliceDiagram plumbing_to_splice(const PlumbingGraph& p);

/// Random negative definite tree of spheres with 1..max_vertices vertices and
/// euler weights in [-9, -1]; deterministic in the seed.
PlumbingGraph random_plumbing(std::uint64_t seed, std::size_t max_vertices);

}  // namespace splicekit
