#pragma once

#include <optional>
#include <vector>

#include "splicekit/diagram.hpp"

namespace splicekit {

/// r0*r1 - eps0*eps1 * (other weights at v0) * (other weights at v1) for an
/// edge between two nodes. Throws InputError for any other edge.
BigInt edge_determinant(const SpliceDiagram& d, EdgeIndex e);

/// Positive generator of the ideal spanned by the primed linking numbers from
/// end.vertex to the leaves beyond end.edge.
BigInt ideal_generator(const SpliceDiagram& d, EdgeEnd end);

/// Every node-end generator of a diagram, computed once.
class IdealGenerators {
public:
    explicit IdealGenerators(const SpliceDiagram& d);

    const BigInt& at(EdgeEnd end) const;
    /// 1 for leaf ends, matching the empty-product convention.
    const BigInt& at_or_one(EdgeEnd end) const;

private:
    const SpliceDiagram* diagram_;
    std::vector<std::optional<BigInt>> at_a_;
    std::vector<std::optional<BigInt>> at_b_;
};

struct IdealViolation {
    EdgeEnd end;
    BigInt generator;
    BigInt weight;
};

struct IdealConditionReport {
    bool holds = true;
    std::vector<IdealViolation> violations;
};

IdealConditionReport check_ideal_condition(const SpliceDiagram& d);

/// All nodes positive and every node-node edge determinant strictly positive.
bool is_singularity_link(const SpliceDiagram& d);

enum class DivisibilityKind {
    seen_generator,  // a generator seen by the end must divide it
    pair_gcd,        // gcd of two weights at a seen node must divide it
};

struct DivisibilityFailure {
    EdgeEnd end;        // the end whose generator (or weight) failed
    bool on_weight;     // false: checked the generator; true: checked the edge weight
    DivisibilityKind kind;
    EdgeEnd witness;    // the seen generator, or the first weight of the pair
    std::optional<EdgeEnd> witness_pair;
    BigInt divisor;
    BigInt value;
};

struct SeenDivisibilityReport {
    bool holds = true;
    bool weight_clause_checked = false;  // only when the ideal condition holds
    std::size_t checks = 0;
    std::vector<DivisibilityFailure> failures;
};

/// Checks that every node end's generator is divisible by every generator it
/// sees and by gcd(n, n') for weight pairs at seen nodes (pairs on distinct
/// edges, neither facing back). The same checks on the edge weight are run
/// only when the ideal condition holds.
SeenDivisibilityReport verify_seen_divisibility(const SpliceDiagram& d);

}  // namespace splicekit
