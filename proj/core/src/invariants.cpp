#include "splicekit/invariants.hpp"

#include <algorithm>

namespace splicekit {

namespace {

BigInt other_weight_product(const SpliceDiagram& d, VertexIndex node, EdgeIndex skip) {
    BigInt p = 1;
    for (EdgeIndex e : d.incident(node))
        if (e != skip) p *= d.weight({e, node});
    return p;
}

}  // namespace

BigInt edge_determinant(const SpliceDiagram& d, EdgeIndex e) {
    const Edge& edge = d.edge(e);
    if (!d.is_node_edge(e)) throw InputError("edge determinant needs an edge between nodes, got " + d.edge_label(e));
    const BigInt& r0 = *edge.weight_a;
    const BigInt& r1 = *edge.weight_b;
    const int eps = d.sign(edge.a) * d.sign(edge.b);
    return r0 * r1 - eps * other_weight_product(d, edge.a, e) * other_weight_product(d, edge.b, e);
}

BigInt ideal_generator(const SpliceDiagram& d, EdgeEnd end) {
    if (!d.is_node(end.vertex)) throw InputError("ideal generator needs a node end");
    std::vector<BigInt> generators;
    for (VertexIndex w : d.beyond(end))
        if (d.is_leaf(w)) generators.push_back(linking(d, end.vertex, w, true));
    return gcd_list(generators);
}

IdealGenerators::IdealGenerators(const SpliceDiagram& d)
    : diagram_(&d), at_a_(d.edge_count()), at_b_(d.edge_count()) {
    for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
        const Edge& edge = d.edge(e);
        if (d.is_node(edge.a)) at_a_[e] = ideal_generator(d, {e, edge.a});
        if (d.is_node(edge.b)) at_b_[e] = ideal_generator(d, {e, edge.b});
    }
}

const BigInt& IdealGenerators::at(EdgeEnd end) const {
    const Edge& edge = diagram_->edge(end.edge);
    const auto& slot = edge.a == end.vertex ? at_a_[end.edge] : at_b_[end.edge];
    if ((edge.a != end.vertex && edge.b != end.vertex) || !slot)
        throw InputError("no ideal generator at vertex '" + diagram_->id(end.vertex) + "'");
    return *slot;
}

const BigInt& IdealGenerators::at_or_one(EdgeEnd end) const {
    static const BigInt one = 1;
    return diagram_->is_node(end.vertex) ? at(end) : one;
}

IdealConditionReport check_ideal_condition(const SpliceDiagram& d) {
    IdealConditionReport report;
    const IdealGenerators generators(d);
    for (VertexIndex v : d.nodes()) {
        for (const EdgeEnd& end : d.ends_at(v)) {
            const BigInt& g = generators.at(end);
            if (!divides(g, d.weight(end))) report.violations.push_back({end, g, d.weight(end)});
        }
    }
    report.holds = report.violations.empty();
    return report;
}

bool is_singularity_link(const SpliceDiagram& d) {
    for (VertexIndex v : d.nodes())
        if (d.sign(v) < 0) return false;
    for (EdgeIndex e : d.node_edges())
        if (edge_determinant(d, e) <= 0) return false;
    return true;
}

SeenDivisibilityReport verify_seen_divisibility(const SpliceDiagram& d) {
    SeenDivisibilityReport report;
    const IdealGenerators generators(d);
    report.weight_clause_checked = check_ideal_condition(d).holds;

    auto check = [&](const EdgeEnd& end, DivisibilityKind kind, const EdgeEnd& witness,
                     std::optional<EdgeEnd> pair, const BigInt& divisor) {
        const BigInt& g = generators.at(end);
        ++report.checks;
        if (!divides(divisor, g)) report.failures.push_back({end, false, kind, witness, pair, divisor, g});
        if (report.weight_clause_checked) {
            const BigInt& r = d.weight(end);
            ++report.checks;
            if (!divides(divisor, r)) report.failures.push_back({end, true, kind, witness, pair, divisor, r});
        }
    };

    for (VertexIndex v : d.nodes()) {
        for (const EdgeEnd& end : d.ends_at(v)) {
            for (VertexIndex seen : d.beyond(end)) {
                if (!d.is_node(seen)) continue;
                const EdgeIndex back = end_toward(d, seen, v).edge;
                std::vector<EdgeEnd> facing;
                for (const EdgeEnd& other : d.ends_at(seen))
                    if (other.edge != back) facing.push_back(other);
                for (const EdgeEnd& other : facing)
                    check(end, DivisibilityKind::seen_generator, other, std::nullopt, generators.at(other));
                for (std::size_t i = 0; i < facing.size(); ++i)
                    for (std::size_t j = i + 1; j < facing.size(); ++j)
                        check(end, DivisibilityKind::pair_gcd, facing[i], facing[j],
                              gcd_list({d.weight(facing[i]), d.weight(facing[j])}));
            }
        }
    }
    report.holds = report.failures.empty();
    return report;
}

}  // namespace splicekit
