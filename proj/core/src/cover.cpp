#include "splicekit/cover.hpp"

#include <algorithm>

namespace splicekit {

namespace {

bool coprime(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b) == 1; }

std::optional<EdgeEnd> first_zero_weight(const SpliceDiagram& d) {
    for (VertexIndex v : d.nodes())
        for (const EdgeEnd& end : d.ends_at(v))
            if (d.weight(end) == 0) return end;
    return std::nullopt;
}

bool pairwise_coprime(const std::vector<BigInt>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!coprime(xs[i], xs[j])) return false;
    return true;
}

BigInt exact_quotient(const BigInt& a, const BigInt& b, const std::string& where) {
    if (b == 0 || a % b != 0)
        throw DomainError("division not exact at " + where + ": " + to_string(a) + " / " + to_string(b));
    return a / b;
}

}  // namespace

std::string_view to_string(UacVerdict v) {
    switch (v) {
        case UacVerdict::yes_integral: return "yes_integral";
        case UacVerdict::yes_rational: return "yes_rational";
        case UacVerdict::no: return "no";
    }
    return "no";
}

std::string_view to_string(CandidateFailureReason r) {
    switch (r) {
        case CandidateFailureReason::weights_not_coprime: return "weights_not_coprime";
        case CandidateFailureReason::shared_with_reduced: return "shared_with_reduced";
        case CandidateFailureReason::special_not_rhs: return "special_not_rhs";
    }
    return "special_not_rhs";
}

std::string_view to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::cyclic_edge: return "cyclic_edge";
        case ObstructionKind::zero_weight: return "zero_weight";
        case ObstructionKind::genus_positive: return "genus_positive";
    }
    return "cyclic_edge";
}

std::optional<CandidateFailure> check_special_candidate(const SpliceDiagram& d, const IdealGenerators& generators,
                                                        VertexIndex candidate) {
    for (VertexIndex other : d.nodes()) {
        if (other == candidate) continue;
        const EdgeEnd toward = end_toward(d, other, candidate);
        std::vector<EdgeEnd> rest;
        for (const EdgeEnd& end : d.ends_at(other))
            if (end.edge != toward.edge) rest.push_back(end);

        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j)
                if (!coprime(d.weight(rest[i]), d.weight(rest[j])))
                    return CandidateFailure{candidate, other, CandidateFailureReason::weights_not_coprime,
                                            {rest[i], rest[j]}, std::nullopt};

        const BigInt reduced =
            exact_quotient(d.weight(toward), generators.at(toward), "'" + d.id(other) + "' toward '" + d.id(candidate) + "'");
        std::vector<EdgeEnd> sharing;
        for (const EdgeEnd& end : rest)
            if (!coprime(d.weight(end), reduced)) sharing.push_back(end);
        if (sharing.size() > 1)
            return CandidateFailure{candidate, other, CandidateFailureReason::shared_with_reduced, std::move(sharing),
                                    reduced};
    }
    if (!is_rhs(classify_rhs(BrieskornTuple(d.weights_at(candidate)))))
        return CandidateFailure{candidate, candidate, CandidateFailureReason::special_not_rhs, d.ends_at(candidate),
                                std::nullopt};
    return std::nullopt;
}

UacDecision decide_uac_qhs(const SpliceDiagram& d) {
    UacDecision decision;
    if (d.nodes().empty()) {
        decision.verdict = UacVerdict::yes_integral;
        return decision;
    }
    const auto ideal = check_ideal_condition(d);
    if (!ideal.holds) {
        const auto& v = ideal.violations.front();
        throw InputError("ideal condition fails at '" + d.id(v.end.vertex) + "' on edge " + d.edge_label(v.end.edge) +
                         ": generator " + to_string(v.generator) + " does not divide " + to_string(v.weight));
    }
    if (auto zero = first_zero_weight(d)) {
        decision.verdict = UacVerdict::no;
        decision.zero_weight = zero;
        return decision;
    }
    const IdealGenerators generators(d);
    for (VertexIndex candidate : d.nodes()) {
        if (auto failure = check_special_candidate(d, generators, candidate)) {
            decision.failures.push_back(std::move(*failure));
            continue;
        }
        decision.special = candidate;
        break;
    }
    if (!decision.special) {
        decision.verdict = UacVerdict::no;
        return decision;
    }
    bool integral = true;
    for (VertexIndex v : d.nodes()) integral = integral && pairwise_coprime(d.weights_at(v));
    decision.verdict = integral ? UacVerdict::yes_integral : UacVerdict::yes_rational;
    return decision;
}

std::optional<EdgeIndex> acyclicity_obstruction(const SpliceDiagram& d) {
    const IdealGenerators generators(d);
    for (EdgeIndex e : d.node_edges()) {
        const Edge& edge = d.edge(e);
        if (generators.at({e, edge.a}) > 1 && generators.at({e, edge.b}) > 1) return e;
    }
    return std::nullopt;
}

CutResult cut_end_node(const SpliceDiagram& d, VertexIndex w, VertexIndex special) {
    if (!d.is_node(special)) throw InputError("special vertex '" + d.id(special) + "' is not a node");
    if (w == special) throw InputError("cannot cut the special node '" + d.id(w) + "'");
    if (!d.is_end_node(w)) throw InputError("'" + d.id(w) + "' is not an end node");

    const EdgeEnd toward = end_toward(d, w, special);
    const VertexIndex u = d.other_end(toward.edge, w);
    BigInt multiplicity = ideal_generator(d, toward);

    std::vector<SpliceDiagram::VertexDecl> piece_vertices{{d.id(w), VertexKind::node, d.sign(w)}};
    std::vector<SpliceDiagram::EdgeDecl> piece_edges;
    for (EdgeIndex e : d.incident(w)) {
        const std::string& far = d.id(d.other_end(e, w));
        BigInt weight = d.weight({e, w});
        if (e == toward.edge) weight = exact_quotient(weight, multiplicity, "'" + d.id(w) + "' toward the special node");
        piece_vertices.push_back({far, VertexKind::leaf, 0});
        piece_edges.push_back({d.id(w), far, {std::move(weight)}});
    }

    std::vector<bool> dropped(d.vertex_count(), false);
    for (EdgeIndex e : d.incident(w)) {
        const VertexIndex far = d.other_end(e, w);
        if (far != u) dropped[far] = true;
    }
    std::vector<SpliceDiagram::VertexDecl> rest_vertices;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
        if (dropped[v]) continue;
        if (v == w)
            rest_vertices.push_back({d.id(w), VertexKind::leaf, 0});
        else
            rest_vertices.push_back({d.id(v), d.vertex(v).kind, d.sign(v)});
    }
    std::vector<SpliceDiagram::EdgeDecl> rest_edges;
    for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
        const Edge& edge = d.edge(e);
        if (edge.a == w || edge.b == w) {
            if (e == toward.edge) rest_edges.push_back({d.id(u), d.id(w), {d.weight({e, u})}});
            continue;
        }
        SpliceDiagram::EdgeDecl decl{d.id(edge.a), d.id(edge.b), {}};
        if (edge.weight_a) decl.weights.push_back(*edge.weight_a);
        if (edge.weight_b) decl.weights.push_back(*edge.weight_b);
        rest_edges.push_back(std::move(decl));
    }
    return {SpliceDiagram::create(std::move(piece_vertices), std::move(piece_edges)),
            SpliceDiagram::create(std::move(rest_vertices), std::move(rest_edges)), std::move(multiplicity)};
}

bool CoverSkeleton::is_tree() const {
    if (pieces.empty() || tori.size() + 1 != pieces.size()) return false;
    std::vector<std::vector<std::size_t>> adjacency(pieces.size());
    for (const auto& t : tori) {
        adjacency[t.piece_a].push_back(t.piece_b);
        adjacency[t.piece_b].push_back(t.piece_a);
    }
    std::vector<bool> seen(pieces.size(), false);
    std::vector<std::size_t> reached{0};
    seen[0] = true;
    for (std::size_t i = 0; i < reached.size(); ++i)
        for (std::size_t j : adjacency[reached[i]])
            if (!seen[j]) {
                seen[j] = true;
                reached.push_back(j);
            }
    return reached.size() == pieces.size();
}

CoverSkeleton build_cover_skeleton(const SpliceDiagram& d, VertexIndex special) {
    if (!d.is_node(special)) throw InputError("special vertex '" + d.id(special) + "' is not a node");
    CoverSkeleton skeleton;
    skeleton.special = special;
    if (auto zero = first_zero_weight(d)) {
        skeleton.obstruction = Obstruction{ObstructionKind::zero_weight, zero->edge, zero, zero->vertex, std::nullopt};
        return skeleton;
    }
    if (auto cyclic = acyclicity_obstruction(d)) {
        skeleton.obstruction = Obstruction{ObstructionKind::cyclic_edge, cyclic, std::nullopt, std::nullopt, std::nullopt};
        return skeleton;
    }
    const IdealGenerators generators(d);

    // Cut order: repeatedly the smallest remaining end node that is not special.
    struct Cut {
        VertexIndex node;
        EdgeIndex edge;
        VertexIndex parent;
    };
    std::vector<bool> remaining(d.vertex_count(), false);
    for (VertexIndex v : d.nodes()) remaining[v] = true;
    std::vector<Cut> cuts;
    for (std::size_t left = d.nodes().size(); left > 1; --left) {
        std::optional<Cut> next;
        for (VertexIndex v : d.nodes()) {
            if (!remaining[v] || v == special) continue;
            std::vector<EdgeIndex> live;
            for (EdgeIndex e : d.incident(v))
                if (remaining[d.other_end(e, v)] && d.is_node(d.other_end(e, v))) live.push_back(e);
            if (live.size() == 1) {
                next = Cut{v, live[0], d.other_end(live[0], v)};
                break;
            }
        }
        remaining[next->node] = false;
        cuts.push_back(*next);
    }

    std::vector<BigInt> multiplicity(d.vertex_count(), 0);
    std::vector<std::size_t> first_piece(d.vertex_count(), 0);
    multiplicity[special] = 1;
    skeleton.pieces.push_back({special, d.id(special), 0, BrieskornTuple(d.weights_at(special)), std::nullopt});

    for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
        const Cut& cut = *it;
        const EdgeEnd up{cut.edge, cut.node};
        const EdgeEnd down{cut.edge, cut.parent};
        const BigInt& copies = generators.at(up);
        if (generators.at(down) != 1)
            throw DomainError("inconsistent special node '" + d.id(special) + "': generator at '" + d.id(cut.parent) +
                              "' toward '" + d.id(cut.node) + "' is " + to_string(generators.at(down)));
        const BigInt block = exact_quotient(copies, multiplicity[cut.parent],
                                            "copies over '" + d.id(cut.node) + "' per copy over '" + d.id(cut.parent) + "'");
        multiplicity[cut.node] = copies;
        skeleton.per_edge_torus_count[cut.edge] = generators.at(up) * generators.at(down);

        // The reduced weight toward the special node goes last.
        std::vector<BigInt> tuple;
        for (EdgeIndex e : d.incident(cut.node))
            if (e != cut.edge) tuple.push_back(d.weight({e, cut.node}));
        tuple.push_back(exact_quotient(d.weight(up), copies, "'" + d.id(cut.node) + "' toward the special node"));
        std::optional<BigRational> euler;
        if (d.is_end_node(cut.node) && edge_determinant(d, cut.edge) != 0) euler = end_piece_euler(d, cut.node, cut.edge);
        const auto fiber = fiber_intersection(d, generators, cut.edge);
        std::optional<BigRational> p_tilde;
        if (!fiber.degenerate) p_tilde = fiber.value;

        first_piece[cut.node] = skeleton.pieces.size();
        const std::size_t count = static_cast<std::size_t>(copies);
        const std::size_t per_parent = static_cast<std::size_t>(block);
        for (std::size_t k = 0; k < count; ++k) {
            skeleton.pieces.push_back({cut.node, d.id(cut.node), k, BrieskornTuple(tuple), euler});
            skeleton.tori.push_back(
                {first_piece[cut.parent] + k / per_parent, skeleton.pieces.size() - 1, cut.edge, p_tilde});
        }
    }

    for (VertexIndex v : d.nodes()) {
        const auto piece = std::find_if(skeleton.pieces.begin(), skeleton.pieces.end(),
                                        [v](const CoverPiece& p) { return p.origin_node == v; });
        const BigInt indicator = genus_indicator(piece->tuple);
        if (indicator != 0) {
            skeleton.obstruction = Obstruction{ObstructionKind::genus_positive, std::nullopt, std::nullopt, v, indicator};
            break;
        }
    }
    return skeleton;
}

FiberIntersection fiber_intersection(const SpliceDiagram& d, EdgeIndex e) {
    return fiber_intersection(d, IdealGenerators(d), e);
}

FiberIntersection fiber_intersection(const SpliceDiagram& d, const IdealGenerators& generators, EdgeIndex e) {
    if (!d.is_node_edge(e)) throw InputError("fiber intersection needs an edge between nodes, got " + d.edge_label(e));
    const Edge& edge = d.edge(e);
    for (VertexIndex v : {edge.a, edge.b})
        for (const EdgeEnd& end : d.ends_at(v))
            if (d.weight(end) == 0) throw DomainError("zero weight adjacent to '" + d.id(v) + "'");

    const BigInt det = edge_determinant(d, e);
    if (det == 0) return {BigRational(0), true};

    BigInt denominator = 1;
    for (VertexIndex v : {edge.a, edge.b}) {
        const EdgeEnd self{e, v};
        const BigInt& dbar = generators.at(self);
        const BigInt reduced = exact_quotient(d.weight(self), dbar, "'" + d.id(v) + "' on " + d.edge_label(e));
        std::vector<BigInt> others;
        for (const EdgeEnd& end : d.ends_at(v)) {
            if (end.edge == e) continue;
            others.push_back(exact_quotient(d.weight(end), generators.at(end), "'" + d.id(v) + "' on " + d.edge_label(end.edge)));
        }
        const BigInt others_lcm = lcm_list(others);
        const BigInt b = reduced * others_lcm / lcm_list({others_lcm, reduced});
        denominator *= dbar * b;
    }
    return {make_rational(BigInt(abs(det)), denominator), false};
}

BigRational end_piece_euler(const SpliceDiagram& d, VertexIndex v, EdgeIndex e) {
    if (!d.is_end_node(v)) throw InputError("'" + d.id(v) + "' is not an end node");
    if (!d.is_node_edge(e) || (d.edge(e).a != v && d.edge(e).b != v))
        throw InputError("edge " + d.edge_label(e) + " is not the node edge at '" + d.id(v) + "'");
    const BigInt det = edge_determinant(d, e);
    if (det == 0) throw DomainError("edge determinant of " + d.edge_label(e) + " is zero");

    const EdgeEnd self{e, v};
    const BigInt& r = d.weight(self);
    const BigInt& s = d.weight({e, d.other_end(e, v)});
    const BigInt dbar = ideal_generator(d, self);
    BigInt leaves = 1;
    for (const EdgeEnd& end : d.ends_at(v))
        if (end.edge != e) leaves *= d.weight(end);
    const BigInt b = gcd_list({exact_quotient(r, dbar, "'" + d.id(v) + "' on " + d.edge_label(e)), leaves});
    return make_rational(BigInt(-d.sign(v) * s * b * b * dbar), BigInt(leaves * det));
}

BigRational eliminate_end_block(const BigRational& e_w, const BigRational& e_v, const BigRational& p_tilde,
                                const BigInt& k) {
    if (e_v == 0 || p_tilde == 0) throw DomainError("elimination needs nonzero e_v and p");
    return e_w - BigRational(k) / (p_tilde * p_tilde * e_v);
}

RationalMatrix decomposition_matrix(const CoverSkeleton& s, const EulerOverrides& overrides) {
    if (s.pieces.empty() || !s.is_tree()) throw InputError("decomposition matrix needs a tree-shaped skeleton");
    RationalMatrix m(s.pieces.size(), s.pieces.size());
    for (std::size_t i = 0; i < s.pieces.size(); ++i) {
        const CoverPiece& piece = s.pieces[i];
        if (auto it = overrides.find(piece.origin_id); it != overrides.end())
            m(i, i) = it->second;
        else if (piece.euler)
            m(i, i) = *piece.euler;
        else
            throw DomainError("missing euler number for piece " + piece.label());
    }
    for (const auto& t : s.tori) {
        if (!t.p_tilde || *t.p_tilde == 0)
            throw DomainError("missing fiber intersection between " + s.pieces[t.piece_a].label() + " and " +
                              s.pieces[t.piece_b].label());
        const BigRational coupling = 1 / *t.p_tilde;
        m(t.piece_a, t.piece_b) = coupling;
        m(t.piece_b, t.piece_a) = coupling;
    }
    return m;
}

DecompositionDeterminant decomposition_determinant(const CoverSkeleton& s, const EulerOverrides& overrides) {
    const BigRational det = exact_determinant(decomposition_matrix(s, overrides));
    return {det, det != 0};
}

}  // namespace splicekit
