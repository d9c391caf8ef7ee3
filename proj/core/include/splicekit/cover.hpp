#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splicekit/brieskorn.hpp"
#include "splicekit/diagram.hpp"
#include "splicekit/invariants.hpp"

namespace splicekit {

enum class UacVerdict { yes_integral, yes_rational, no };

std::string_view to_string(UacVerdict v);

enum class CandidateFailureReason {
    weights_not_coprime,   // two weights not facing the candidate share a factor
    shared_with_reduced,  // more than one of them shares a factor with r/d
    special_not_rhs,      // the candidate's own weights fail the Brieskorn test
};

std::string_view to_string(CandidateFailureReason r);

struct CandidateFailure {
    VertexIndex candidate;
    VertexIndex at;                  // node where the condition broke
    CandidateFailureReason reason;
    std::vector<EdgeEnd> witnesses;  // offending weights at `at`
    std::optional<BigInt> reduced;   // r_{at}(candidate) / d_{at}(candidate)
};

struct UacDecision {
    UacVerdict verdict = UacVerdict::no;
    std::optional<VertexIndex> special;
    std::optional<EdgeEnd> zero_weight;
    /// One entry per rejected candidate, in canonical order, up to the special.
    std::vector<CandidateFailure> failures;
};

/// Special-node test for one candidate; nullopt when the candidate qualifies.
/// Assumes no zero weights and the ideal condition.
std::optional<CandidateFailure> check_special_candidate(const SpliceDiagram& d, const IdealGenerators& generators,
                                                        VertexIndex candidate);

/// Decides whether the universal abelian cover is a rational homology sphere.
/// Throws InputError when the ideal condition fails. No-node diagrams are
/// yes_integral.
UacDecision decide_uac_qhs(const SpliceDiagram& d);

/// First node-node edge (canonical order) with both ideal generators > 1.
std::optional<EdgeIndex> acyclicity_obstruction(const SpliceDiagram& d);

struct CutResult {
    SpliceDiagram piece;  // one-node star of w, weight toward special reduced
    SpliceDiagram rest;   // w's star collapsed to a leaf named after w
    BigInt multiplicity;  // d_w(special) in the input diagram
};

CutResult cut_end_node(const SpliceDiagram& d, VertexIndex w, VertexIndex special);

struct CoverPiece {
    VertexIndex origin_node = 0;
    std::string origin_id;
    std::size_t copy_index = 0;
    BrieskornTuple tuple;
    std::optional<BigRational> euler;

    std::string label() const { return origin_id + "#" + std::to_string(copy_index); }
};

struct CoverTorus {
    std::size_t piece_a = 0;  // indices into CoverSkeleton::pieces
    std::size_t piece_b = 0;
    EdgeIndex origin_edge = 0;
    std::optional<BigRational> p_tilde;
};

enum class ObstructionKind { cyclic_edge, zero_weight, genus_positive };

std::string_view to_string(ObstructionKind k);

struct Obstruction {
    ObstructionKind kind;
    std::optional<EdgeIndex> edge;
    std::optional<EdgeEnd> end;
    std::optional<VertexIndex> node;
    std::optional<BigInt> indicator;
};

struct CoverSkeleton {
    VertexIndex special = 0;
    std::vector<CoverPiece> pieces;  // special piece first
    std::vector<CoverTorus> tori;
    std::map<EdgeIndex, BigInt> per_edge_torus_count;
    std::optional<Obstruction> obstruction;

    bool is_tree() const;
};

/// Replays the end-node cutting toward `special`. A cyclic or zero-weight
/// obstruction leaves the piece list empty; a genus obstruction keeps it.
/// Throws DomainError when `special` is inconsistent with the generators
/// (a rest-side generator != 1 or copies that do not divide evenly).
CoverSkeleton build_cover_skeleton(const SpliceDiagram& d, VertexIndex special);

struct FiberIntersection {
    BigRational value;
    bool degenerate = false;  // D(e) == 0
};

/// |D(e)| / (d0 d1 b0 b1) for a node-node edge without adjacent zero weights.
FiberIntersection fiber_intersection(const SpliceDiagram& d, EdgeIndex e);
FiberIntersection fiber_intersection(const SpliceDiagram& d, const IdealGenerators& generators, EdgeIndex e);

/// -eps_v * s * b^2 * d_r / (N * D(e)) for an end node v and its node edge e,
/// with b = gcd(r / d_r, N) and N the product of v's leaf weights.
BigRational end_piece_euler(const SpliceDiagram& d, VertexIndex v, EdgeIndex e);

/// Diagonal entry left after clearing k identical end pieces (euler e_v,
/// coupled by 1/p) from a piece with euler e_w: e_w - k / (p^2 e_v).
BigRational eliminate_end_block(const BigRational& e_w, const BigRational& e_v, const BigRational& p_tilde,
                                const BigInt& k);

/// Euler numbers keyed by origin node id; they apply to every copy.
using EulerOverrides = std::map<std::string, BigRational, std::less<>>;

RationalMatrix decomposition_matrix(const CoverSkeleton& s, const EulerOverrides& overrides = {});

struct DecompositionDeterminant {
    BigRational det;
    bool nondegenerate = false;
};

DecompositionDeterminant decomposition_determinant(const CoverSkeleton& s, const EulerOverrides& overrides = {});

}  // namespace splicekit
