#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.hpp"

namespace splicekit {
namespace {

using testing::DiagramBuilder;
using testing::draw;
using testing::edge_of;
using testing::end_at;
using testing::front_page;
using testing::two_node;

std::vector<BigInt> ints(std::initializer_list<int> xs) {
    std::vector<BigInt> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// p~ from |D| / (d0 d1 b0 b1) with b_i = gcd(r_i / d_i, lcm_j(n_ij / d_ij)).
BigRational fiber_oracle(const SpliceDiagram& d, EdgeIndex e) {
    const IdealGenerators g(d);
    const Edge& edge = d.edge(e);
    std::int64_t denominator = 1;
    for (VertexIndex v : {edge.a, edge.b}) {
        const EdgeEnd self{e, v};
        const auto r = static_cast<std::int64_t>(d.weight(self));
        const auto dr = static_cast<std::int64_t>(g.at(self));
        std::vector<std::int64_t> reduced;
        for (const EdgeEnd& end : d.ends_at(v))
            if (end.edge != e)
                reduced.push_back(static_cast<std::int64_t>(d.weight(end)) / static_cast<std::int64_t>(g.at(end)));
        denominator *= dr * std::gcd(r / dr, testing::lcm64(reduced));
    }
    const BigInt det = edge_determinant(d, e);
    return make_rational(BigInt(abs(det)), denominator);
}

SpliceDiagram positive_pair() {
    return DiagramBuilder()
        .node("p")
        .node("q")
        .leaf("p", "a", 2)
        .leaf("p", "b", 3)
        .leaf("q", "c", 2)
        .leaf("q", "e", 5)
        .join("p", "q", 11, 7)
        .build();
}

SpliceDiagram cyclic_pair() {
    return DiagramBuilder()
        .node("A")
        .node("B")
        .leaf("A", "A1", 4)
        .leaf("A", "A2", 6)
        .leaf("B", "B1", 10)
        .leaf("B", "B2", 15)
        .join("A", "B", 5, 2)
        .build();
}

// decide = yes exactly when the skeleton over some special node is clean;
// decide = no exactly when every candidate is obstructed or inconsistent.
::testing::AssertionResult decide_matches_skeleton(const SpliceDiagram& d) {
    const UacDecision decision = decide_uac_qhs(d);
    if (decision.verdict != UacVerdict::no) {
        if (d.nodes().empty()) return ::testing::AssertionSuccess();
        const CoverSkeleton s = build_cover_skeleton(d, *decision.special);
        if (s.obstruction) return ::testing::AssertionFailure() << "obstructed skeleton for " << to_splice_text(d);
        if (!s.is_tree()) return ::testing::AssertionFailure() << "skeleton is not a tree for " << to_splice_text(d);
        return ::testing::AssertionSuccess();
    }
    for (VertexIndex s : d.nodes()) {
        try {
            if (!build_cover_skeleton(d, s).obstruction)
                return ::testing::AssertionFailure() << "clean skeleton over " << d.id(s) << " for " << to_splice_text(d);
        } catch (const DomainError&) {
        }
    }
    return ::testing::AssertionSuccess();
}

TEST(DecideUacQhs, FrontPageIsNo) {
    const SpliceDiagram d = front_page();
    const UacDecision decision = decide_uac_qhs(d);
    EXPECT_EQ(decision.verdict, UacVerdict::no);
    EXPECT_FALSE(decision.special);
    ASSERT_EQ(decision.failures.size(), 3u);
    const VertexIndex v2 = d.index_of("v2");
    EXPECT_EQ(decision.failures[0].at, v2);
    EXPECT_EQ(decision.failures[0].reason, CandidateFailureReason::shared_with_reduced);
    EXPECT_EQ(decision.failures[0].reduced, 6);
    EXPECT_EQ(decision.failures[1].at, v2);
    EXPECT_EQ(decision.failures[1].reason, CandidateFailureReason::shared_with_reduced);
    EXPECT_EQ(decision.failures[2].candidate, v2);
    EXPECT_EQ(decision.failures[2].reason, CandidateFailureReason::special_not_rhs);
}

TEST(DecideUacQhs, Examples) {
    EXPECT_EQ(decide_uac_qhs(testing::one_node({2, 3, 5})).verdict, UacVerdict::yes_integral);
    const SpliceDiagram t = two_node();
    const UacDecision decision = decide_uac_qhs(t);
    EXPECT_EQ(decision.verdict, UacVerdict::yes_rational);
    EXPECT_EQ(decision.special, t.index_of("A"));
    EXPECT_TRUE(decision.failures.empty());
    EXPECT_EQ(to_string(UacVerdict::yes_rational), "yes_rational");
}

TEST(DecideUacQhs, EdgeCases) {
    EXPECT_EQ(decide_uac_qhs(parse_diagram("splice\n")).verdict, UacVerdict::yes_integral);
    EXPECT_EQ(decide_uac_qhs(parse_diagram("splice\nleaf a\nleaf b\nedge a b\n")).verdict, UacVerdict::yes_integral);
    EXPECT_THROW(decide_uac_qhs(two_node(1)), InputError);

    const SpliceDiagram zero = testing::one_node({2, 0, 5});
    const UacDecision decision = decide_uac_qhs(zero);
    EXPECT_EQ(decision.verdict, UacVerdict::no);
    ASSERT_TRUE(decision.zero_weight);
    EXPECT_EQ(*decision.zero_weight, end_at(zero, "c", "x1"));
}

TEST(DecideUacQhs, OneNodeFollowsBrieskornClassification) {
    EXPECT_EQ(decide_uac_qhs(testing::one_node({4, 2, 7})).verdict, UacVerdict::yes_rational);
    EXPECT_EQ(decide_uac_qhs(testing::one_node({2, 4, 6})).verdict, UacVerdict::yes_rational);
    EXPECT_EQ(decide_uac_qhs(testing::one_node({2, 4, 8})).verdict, UacVerdict::no);
    EXPECT_EQ(decide_uac_qhs(testing::one_node({2, 3, 5, 7}, -1)).verdict, UacVerdict::yes_integral);
}

TEST(DecideUacQhs, InvariantUnderRenaming) {
    for (const SpliceDiagram& d : testing::seeded_ideal_diagrams(40, 9100)) {
        const SpliceDiagram r = testing::rename(d, [](const std::string& id) { return "w_" + id; });
        const UacDecision a = decide_uac_qhs(d);
        const UacDecision b = decide_uac_qhs(r);
        EXPECT_EQ(a.verdict, b.verdict);
        EXPECT_EQ(a.special.has_value(), b.special.has_value());
        if (a.special && b.special) EXPECT_EQ("w_" + d.id(*a.special), r.id(*b.special));
    }
}

TEST(AcyclicityObstruction, Examples) {
    EXPECT_FALSE(acyclicity_obstruction(front_page()));
    EXPECT_FALSE(acyclicity_obstruction(two_node()));
    const SpliceDiagram c = cyclic_pair();
    EXPECT_TRUE(check_ideal_condition(c).holds);
    EXPECT_EQ(ideal_generator(c, end_at(c, "A", "B")), 5);
    EXPECT_EQ(ideal_generator(c, end_at(c, "B", "A")), 2);
    EXPECT_EQ(acyclicity_obstruction(c), edge_of(c, "A", "B"));

    const CoverSkeleton s = build_cover_skeleton(c, c.index_of("A"));
    ASSERT_TRUE(s.obstruction);
    EXPECT_EQ(s.obstruction->kind, ObstructionKind::cyclic_edge);
    EXPECT_TRUE(s.pieces.empty());
    EXPECT_EQ(decide_uac_qhs(c).verdict, UacVerdict::no);
}

TEST(CutEndNode, YesRational) {
    const SpliceDiagram t = two_node();
    const CutResult cut = cut_end_node(t, t.index_of("B"), t.index_of("A"));
    EXPECT_EQ(cut.multiplicity, 2);
    ASSERT_EQ(cut.piece.nodes().size(), 1u);
    auto piece = cut.piece.weights_at(cut.piece.nodes()[0]);
    std::sort(piece.begin(), piece.end());
    EXPECT_EQ(piece, ints({1, 3, 5}));
    ASSERT_EQ(cut.rest.nodes().size(), 1u);
    auto rest = cut.rest.weights_at(cut.rest.index_of("A"));
    std::sort(rest.begin(), rest.end());
    EXPECT_EQ(rest, ints({2, 4, 7}));
    EXPECT_TRUE(cut.rest.is_leaf(cut.rest.index_of("B")));
}

TEST(CutEndNode, FrontPage) {
    const SpliceDiagram d = front_page();
    const CutResult cut = cut_end_node(d, d.index_of("v0"), d.index_of("v2"));
    EXPECT_EQ(cut.multiplicity, 1);
    auto piece = cut.piece.weights_at(cut.piece.index_of("v0"));
    std::sort(piece.begin(), piece.end());
    EXPECT_EQ(piece, ints({3, 5, 22}));
    EXPECT_EQ(cut.rest.nodes().size(), 2u);
    EXPECT_EQ(cut.rest.weight(end_at(cut.rest, "v1", "v0")), 10);
}

TEST(CutEndNode, Errors) {
    const SpliceDiagram d = front_page();
    EXPECT_THROW(cut_end_node(d, d.index_of("v1"), d.index_of("v2")), InputError);
    EXPECT_THROW(cut_end_node(d, d.index_of("v2"), d.index_of("v2")), InputError);
    EXPECT_THROW(cut_end_node(d, d.index_of("l3"), d.index_of("v2")), InputError);
}

TEST(CoverSkeleton, YesRational) {
    const SpliceDiagram t = two_node();
    const CoverSkeleton s = build_cover_skeleton(t, t.index_of("A"));
    EXPECT_FALSE(s.obstruction);
    ASSERT_EQ(s.pieces.size(), 3u);
    EXPECT_EQ(s.pieces[0].origin_id, "A");
    EXPECT_EQ(s.pieces[0].tuple.alphas(), ints({4, 2, 7}));
    EXPECT_EQ(s.pieces[1].tuple.alphas(), ints({3, 5, 1}));
    EXPECT_EQ(s.pieces[2].tuple.alphas(), ints({3, 5, 1}));
    EXPECT_EQ(s.pieces[2].label(), "B#1");
    EXPECT_EQ(s.tori.size(), 2u);
    EXPECT_TRUE(s.is_tree());
    EXPECT_EQ(s.per_edge_torus_count.at(edge_of(t, "A", "B")), 2);
    for (const auto& torus : s.tori) EXPECT_EQ(torus.p_tilde, BigRational(53));
}

TEST(CoverSkeleton, FrontPageGenusObstruction) {
    const SpliceDiagram d = front_page();
    const CoverSkeleton s = build_cover_skeleton(d, d.index_of("v2"));
    ASSERT_TRUE(s.obstruction);
    EXPECT_EQ(s.obstruction->kind, ObstructionKind::genus_positive);
    EXPECT_EQ(s.obstruction->node, d.index_of("v2"));
    EXPECT_EQ(s.obstruction->indicator, genus_indicator(BrieskornTuple(ints({3, 2, 6}))));
    EXPECT_EQ(s.pieces.size(), 3u);
    EXPECT_TRUE(s.is_tree());
}

TEST(CoverSkeleton, ZeroWeightIsReported) {
    const SpliceDiagram d = DiagramBuilder()
                                .node("p")
                                .node("q")
                                .leaf("p", "a", 2)
                                .leaf("p", "b", 3)
                                .leaf("q", "c", 0)
                                .leaf("q", "e", 5)
                                .join("p", "q", 11, 7)
                                .build();
    const CoverSkeleton s = build_cover_skeleton(d, d.index_of("p"));
    ASSERT_TRUE(s.obstruction);
    EXPECT_EQ(s.obstruction->kind, ObstructionKind::zero_weight);
    EXPECT_TRUE(s.pieces.empty());
}

TEST(CoverSkeleton, TrivialGeneratorsReproduceTheTree) {
    std::mt19937_64 rng(53);
    std::size_t checked = 0;
    while (checked < 60) {
        const SpliceDiagram d = testing::random_diagram(rng, {5, 1, {1, 2, 3, 5, 7, 11, 13}});
        if (testing::has_nontrivial_generator(d)) continue;
        ++checked;
        for (VertexIndex special : d.nodes()) {
            const CoverSkeleton s = build_cover_skeleton(d, special);
            EXPECT_EQ(s.pieces.size(), d.nodes().size());
            EXPECT_EQ(s.tori.size(), d.node_edges().size());
            EXPECT_TRUE(s.is_tree());
            for (const auto& piece : s.pieces) {
                auto a = piece.tuple.alphas();
                auto b = d.weights_at(piece.origin_node);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                EXPECT_EQ(a, b);
            }
            for (const auto& torus : s.tori)
                if (torus.p_tilde) EXPECT_EQ(*torus.p_tilde, fiber_oracle(d, torus.origin_edge));
        }
    }
}

TEST(CoverSkeleton, TorusCountsAreGeneratorProducts) {
    for (const SpliceDiagram& d : testing::seeded_ideal_diagrams(50, 9300)) {
        const IdealGenerators g(d);
        for (VertexIndex special : d.nodes()) {
            CoverSkeleton s;
            try {
                s = build_cover_skeleton(d, special);
            } catch (const DomainError&) {
                continue;
            }
            if (s.pieces.empty()) continue;
            std::map<EdgeIndex, BigInt> tori;
            for (const auto& t : s.tori) tori[t.origin_edge] += 1;
            for (EdgeIndex e : d.node_edges()) {
                const BigInt expected = g.at({e, d.edge(e).a}) * g.at({e, d.edge(e).b});
                EXPECT_EQ(s.per_edge_torus_count.at(e), expected);
                EXPECT_EQ(tori[e], expected);
            }
        }
    }
}

TEST(CoverSkeleton, MatchesRepeatedCutting) {
    for (const SpliceDiagram& d : testing::seeded_ideal_diagrams(50, 9500)) {
        const UacDecision decision = decide_uac_qhs(d);
        if (!decision.special) continue;
        const CoverSkeleton s = build_cover_skeleton(d, *decision.special);
        std::map<std::string, std::pair<std::vector<BigInt>, BigInt>> expected;
        SpliceDiagram current = d;
        const std::string special = d.id(*decision.special);
        while (current.nodes().size() > 1) {
            VertexIndex next = 0;
            for (VertexIndex v : current.nodes())
                if (current.id(v) != special && current.is_end_node(v)) {
                    next = v;
                    break;
                }
            const CutResult cut = cut_end_node(current, next, current.index_of(special));
            auto w = cut.piece.weights_at(cut.piece.nodes()[0]);
            std::sort(w.begin(), w.end());
            expected[current.id(next)] = {w, ideal_generator(d, end_toward(d, d.index_of(current.id(next)),
                                                                          *decision.special))};
            current = cut.rest;
        }
        std::map<std::string, BigInt> copies;
        for (const auto& piece : s.pieces) {
            copies[piece.origin_id] += 1;
            if (piece.origin_id == special) continue;
            auto a = piece.tuple.alphas();
            std::sort(a.begin(), a.end());
            EXPECT_EQ(a, expected.at(piece.origin_id).first);
        }
        for (const auto& [id, entry] : expected) EXPECT_EQ(copies[id], entry.second);
        EXPECT_EQ(copies[special], 1);
    }
}

TEST(CoverSkeleton, DecideEquivalence) {
    for (const SpliceDiagram& d : testing::seeded_ideal_diagrams(80, 9700)) EXPECT_TRUE(decide_matches_skeleton(d));
    EXPECT_TRUE(decide_matches_skeleton(front_page()));
    EXPECT_TRUE(decide_matches_skeleton(two_node()));
    EXPECT_TRUE(decide_matches_skeleton(cyclic_pair()));
}

TEST(FiberIntersection, Examples) {
    const SpliceDiagram t = two_node();
    const auto yes = fiber_intersection(t, edge_of(t, "A", "B"));
    EXPECT_EQ(yes.value, 53);
    EXPECT_FALSE(yes.degenerate);
    EXPECT_EQ(fiber_oracle(t, edge_of(t, "A", "B")), 53);

    const SpliceDiagram d = front_page();
    EXPECT_EQ(fiber_intersection(d, edge_of(d, "v0", "v1")).value, 215);
    EXPECT_EQ(fiber_oracle(d, edge_of(d, "v0", "v1")), 215);
    EXPECT_EQ(fiber_intersection(d, edge_of(d, "v1", "v2")).value, fiber_oracle(d, edge_of(d, "v1", "v2")));

    const SpliceDiagram p = positive_pair();
    EXPECT_EQ(fiber_intersection(p, edge_of(p, "p", "q")).value, 77 - 6 * 10);
}

TEST(FiberIntersection, DegenerateAndInvalid) {
    const SpliceDiagram flat =
        DiagramBuilder().node("p").node("q").leaf("p", "a", 1).leaf("p", "b", 1).leaf("q", "c", 1).leaf("q", "e", 1)
            .join("p", "q", 1, 1)
            .build();
    const auto f = fiber_intersection(flat, edge_of(flat, "p", "q"));
    EXPECT_TRUE(f.degenerate);
    EXPECT_EQ(f.value, 0);

    const SpliceDiagram d = front_page();
    EXPECT_THROW(fiber_intersection(d, edge_of(d, "v0", "l3")), InputError);
    const SpliceDiagram zero = testing::reweight(positive_pair(), [](EdgeEnd, const BigInt& w) {
        return w == 3 ? BigInt(0) : w;
    });
    EXPECT_THROW(fiber_intersection(zero, edge_of(zero, "p", "q")), DomainError);
}

TEST(FiberIntersection, CoprimeCollapse) {
    std::mt19937_64 rng(59);
    std::size_t edges = 0;
    while (edges < 100) {
        const SpliceDiagram d = testing::random_diagram(rng, {4, 1, {1, 2, 3, 4, 5, 7, 9, 11, 13}, true});
        if (testing::has_nontrivial_generator(d)) continue;
        for (EdgeIndex e : d.node_edges()) {
            const auto f = fiber_intersection(d, e);
            if (f.degenerate) continue;
            EXPECT_EQ(f.value, fiber_oracle(d, e));
            ++edges;
        }
    }
}

TEST(EndPieceEuler, Examples) {
    const SpliceDiagram t = two_node();
    // -(+1) * 7 * 1^2 * 2 / (15 * -106)
    EXPECT_EQ(end_piece_euler(t, t.index_of("B"), edge_of(t, "A", "B")), make_rational(7, 795));

    const SpliceDiagram p = positive_pair();
    EXPECT_EQ(end_piece_euler(p, p.index_of("q"), edge_of(p, "p", "q")), make_rational(-11, 10 * 17));
    EXPECT_EQ(end_piece_euler(p, p.index_of("p"), edge_of(p, "p", "q")), make_rational(-7, 6 * 17));
}

// The sign of the end piece euler number is -sign(node) * sign(D).
TEST(EndPieceEuler, SignAlgebra) {
    auto pair = [](int sp, int sq) {
        return DiagramBuilder()
            .node("p", sp)
            .node("q", sq)
            .leaf("p", "a", 2)
            .leaf("p", "b", 3)
            .leaf("q", "c", 2)
            .leaf("q", "e", 5)
            .join("p", "q", 1, 1)
            .build();
    };
    const SpliceDiagram mixed = pair(-1, 1);
    const SpliceDiagram both = pair(-1, -1);
    const EdgeIndex e = edge_of(both, "p", "q");
    EXPECT_EQ(edge_determinant(mixed, e), 61);
    EXPECT_EQ(edge_determinant(both, e), -59);
    EXPECT_EQ(end_piece_euler(mixed, mixed.index_of("p"), e), make_rational(1, 6 * 61));
    EXPECT_EQ(end_piece_euler(mixed, mixed.index_of("q"), e), make_rational(-1, 10 * 61));
    EXPECT_EQ(end_piece_euler(both, both.index_of("p"), e), make_rational(-1, 6 * 59));
    const SpliceDiagram t = two_node();
    EXPECT_GT(end_piece_euler(t, t.index_of("B"), edge_of(t, "A", "B")), 0);

    std::mt19937_64 rng(67);
    std::size_t checked = 0;
    while (checked < 100) {
        const SpliceDiagram d = testing::random_diagram(rng, {2, 2, {1, 2, 3, 4, 5, 7, 11}, true});
        if (d.nodes().size() != 2 || !check_ideal_condition(d).holds) continue;
        const EdgeIndex edge = d.node_edges()[0];
        const BigInt det = edge_determinant(d, edge);
        if (det == 0) continue;
        for (VertexIndex v : d.nodes())
            EXPECT_EQ(sign(end_piece_euler(d, v, edge)), -d.sign(v) * sign(det));
        ++checked;
    }
}

TEST(EndPieceEuler, Errors) {
    const SpliceDiagram flat =
        DiagramBuilder().node("p").node("q").leaf("p", "a", 1).leaf("p", "b", 1).leaf("q", "c", 1).leaf("q", "e", 1)
            .join("p", "q", 1, 1)
            .build();
    EXPECT_THROW(end_piece_euler(flat, flat.index_of("p"), edge_of(flat, "p", "q")), DomainError);
    const SpliceDiagram d = front_page();
    EXPECT_THROW(end_piece_euler(d, d.index_of("v1"), edge_of(d, "v0", "v1")), InputError);
}

TEST(Elimination, IdentityOnRandomInstances) {
    std::mt19937_64 rng(61);
    auto rational = [&] {
        BigRational q;
        do q = make_rational(static_cast<int>(draw(rng, 0, 40)) - 20, static_cast<int>(draw(rng, 1, 9)));
        while (q == 0);
        return q;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = draw(rng, 1, 5);
        const std::size_t extra = draw(rng, 0, 2);
        const BigRational e_w = rational();
        const BigRational e_v = rational();
        const BigRational p = rational();
        const std::size_t n = 1 + k + extra;
        RationalMatrix full(n, n);
        RationalMatrix reduced(1 + extra, 1 + extra);
        full(0, 0) = e_w;
        for (std::size_t i = 1; i <= k; ++i) {
            full(i, i) = e_v;
            full(0, i) = full(i, 0) = 1 / p;
        }
        for (std::size_t i = 0; i < extra; ++i) {
            for (std::size_t j = i; j < extra; ++j) {
                const BigRational x = rational();
                full(1 + k + i, 1 + k + j) = full(1 + k + j, 1 + k + i) = x;
                reduced(1 + i, 1 + j) = reduced(1 + j, 1 + i) = x;
            }
            const BigRational c = rational();
            full(0, 1 + k + i) = full(1 + k + i, 0) = c;
            reduced(0, 1 + i) = reduced(1 + i, 0) = c;
        }
        reduced(0, 0) = eliminate_end_block(e_w, e_v, p, BigInt(k));
        EXPECT_EQ(reduced(0, 0), e_w - BigRational(static_cast<long long>(k)) / (p * p * e_v));
        BigRational scale = 1;
        for (std::size_t i = 0; i < k; ++i) scale *= e_v;
        EXPECT_EQ(exact_determinant(full), scale * exact_determinant(reduced));
        EXPECT_EQ(testing::cofactor_determinant(full), scale * testing::cofactor_determinant(reduced));
    }
}

TEST(DecompositionDeterminant, Examples) {
    const SpliceDiagram star = testing::one_node({2, 3, 5});
    const CoverSkeleton single = build_cover_skeleton(star, star.index_of("c"));
    const auto one = decomposition_determinant(single, {{"c", make_rational(-1, 30)}});
    EXPECT_EQ(one.det, make_rational(-1, 30));
    EXPECT_TRUE(one.nondegenerate);

    const SpliceDiagram p = positive_pair();
    const CoverSkeleton pair = build_cover_skeleton(p, p.index_of("p"));
    const BigRational e0 = make_rational(-5, 3);
    const BigRational e1 = end_piece_euler(p, p.index_of("q"), edge_of(p, "p", "q"));
    EXPECT_EQ(decomposition_determinant(pair, {{"p", e0}}).det, e0 * e1 - BigRational(1) / BigRational(17 * 17));

    const SpliceDiagram t = two_node();
    const CoverSkeleton s = build_cover_skeleton(t, t.index_of("A"));
    const BigRational e_a = make_rational(-1, 3);
    const BigRational e_b = make_rational(7, 795);
    const auto three = decomposition_determinant(s, {{"A", e_a}});
    EXPECT_TRUE(three.nondegenerate);
    EXPECT_EQ(three.det, e_b * e_b * eliminate_end_block(e_a, e_b, 53, 2));
    const RationalMatrix m = decomposition_matrix(s, {{"A", e_a}});
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_EQ(m(0, 1), make_rational(1, 53));
    EXPECT_EQ(m(1, 2), 0);
}

TEST(DecompositionDeterminant, MissingEulerIsAnError) {
    const SpliceDiagram t = two_node();
    const CoverSkeleton s = build_cover_skeleton(t, t.index_of("A"));
    try {
        decomposition_determinant(s);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("A#0"), std::string::npos);
    }
    const SpliceDiagram c = cyclic_pair();
    EXPECT_THROW(decomposition_determinant(build_cover_skeleton(c, c.index_of("A"))), InputError);
}

}  // namespace
}  // namespace splicekit
