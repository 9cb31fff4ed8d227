#include <gtest/gtest.h>

#include <qit/constructions.hpp>
#include <qit/hom.hpp>
#include <qit/skeleton.hpp>

using namespace qit;

namespace {

MonomialAlgebra kx2() {
    Quiver q;
    q.add_vertex("1");
    q.add_arrow("x", "1", "1");
    return MonomialAlgebra::truncated(q, 2);
}

MonomialAlgebra two_part(unsigned k) {
    Quiver q;
    q.add_vertex("u");
    q.add_vertex("w");
    q.add_arrow("p", "u", "w");
    q.add_arrow("r", "w", "u");
    return MonomialAlgebra::truncated(q, k);
}

} // namespace

TEST(Constructions, TruncatedCycle) {
    auto a = build_truncated_cycle(4, 3);
    EXPECT_EQ(a.quiver().vertex_count(), 4u);
    EXPECT_EQ(a.as_monomial().dimension(), 12u);
    EXPECT_THROW(build_truncated_cycle(3, 1), PreconditionError);
}

TEST(Constructions, SelfSyzygyModule) {
    auto ex = build_example_5_5();
    EXPECT_EQ(ex.algebra.k(), 8u);
    EXPECT_EQ(ex.module.dims, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
    auto mono = ex.algebra.as_monomial();
    check_module(mono, ex.module);
    auto omega = syzygy_rep(mono, ex.module);
    EXPECT_EQ(omega.total_dimension(), 10u);
    EXPECT_TRUE(is_isomorphic(mono, omega, direct_sum(ex.module, ex.module), 5).isomorphic);
    // top is S_1 only
    EXPECT_EQ(top_and_radical(mono.quiver(), ex.module).top_dims, (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(Constructions, GluedLoopAlgebraShape) {
    auto a = build_example_6_1(kx2());
    const auto& q = a.quiver();
    EXPECT_EQ(q.vertex_count(), 3u);
    EXPECT_TRUE(q.find_arrow("alpha_b1"));
    EXPECT_TRUE(q.find_arrow("betabar2"));
    EXPECT_EQ(q.arrow(*q.find_arrow("alpha_b1")).target, *q.find_vertex("1"));
    // every path of length 2 inside the two-vertex part is zero
    auto b1 = *q.find_arrow("beta1"), b2 = *q.find_arrow("beta2");
    EXPECT_FALSE(a.is_nonzero(Path{0, {b1, b2}}));
    EXPECT_TRUE(a.is_nonzero(Path{0, {b1}}));
    // alpha kills on both sides
    auto x = *q.find_arrow("bx"), al = *q.find_arrow("alpha_b1");
    EXPECT_FALSE(a.is_nonzero(Path{*q.find_vertex("b1"), {x, al}}));
    EXPECT_FALSE(a.is_nonzero(Path{*q.find_vertex("b1"), {al, b1}}));
    auto e = find_embedding(a, kx2(), kExample61Prefix);
    EXPECT_EQ(e.vertex.size(), 1u);
}

TEST(Constructions, GluedLoopAlgebraSimples) {
    auto a = build_example_6_1(kx2());
    const auto& q = a.quiver();
    auto s1 = simple_rep<Rational>(q, *q.find_vertex("1"));
    auto s2 = simple_rep<Rational>(q, *q.find_vertex("2"));
    auto both = direct_sum(s1, s2);
    EXPECT_TRUE(is_isomorphic(a, syzygy_rep(a, s1), both, 1).isomorphic);
    EXPECT_TRUE(is_isomorphic(a, syzygy_rep(a, s2), both, 2).isomorphic);
}

TEST(Constructions, GlueHypotheses) {
    GlueSpec ok{two_part(2), kx2(), {{"c_u", "u", "1"}, {"c_w", "w", "1"}}};
    auto g = glue_theorem_5_6(ok);
    for (const auto& h : g.hypotheses) EXPECT_TRUE(h.holds) << h.name;
    EXPECT_EQ(g.algebra.quiver().vertex_count(), 3u);

    GlueSpec missing{two_part(2), kx2(), {{"c_u", "u", "1"}}};
    try {
        glue_theorem_5_6(missing);
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("every gamma vertex"), std::string::npos) << e.what();
    }
    GlueSpec backwards{two_part(2), kx2(), {{"c_u", "u", "1"}, {"c_w", "w", "1"}, {"back", "1", "u"}}};
    EXPECT_THROW(glue_theorem_5_6(backwards), PreconditionError);
}

TEST(Constructions, RestrictExtendRoundTrip) {
    auto b = kx2();
    auto a = build_example_6_1(b);
    auto p = projective_rep<Rational>(b, 0);
    auto up = restrict_and_extend(a, b, p, Direction::Extend, kExample61Prefix);
    EXPECT_EQ(up.total_dimension(), 2u);
    auto down = restrict_and_extend(a, b, up, Direction::Restrict, kExample61Prefix);
    EXPECT_EQ(down, p);
    EXPECT_THROW(find_embedding(a, two_part(2)), PreconditionError);
}

TEST(Constructions, NakayamaIndecomposables) {
    auto c = build_truncated_cycle(2, 3);
    auto mods = nakayama_indecomposables(c);
    EXPECT_EQ(mods.size(), 6u);
    Quiver two_loops;
    two_loops.add_vertex("1");
    two_loops.add_arrow("x", "1", "1");
    two_loops.add_arrow("y", "1", "1");
    EXPECT_THROW(nakayama_indecomposables(TruncatedAlgebra(two_loops, 2)), PreconditionError);
}

TEST(Constructions, GluedLoopAlgebraBullets) {
    auto b = kx2();
    auto a = build_example_6_1(b);
    auto mods = nakayama_indecomposables(*as_truncated(b));
    auto report = verify_6_1_bullets(a, b, mods, 4);
    EXPECT_TRUE(report.b_selfinjective);
    EXPECT_TRUE(report.all_ok());
    ASSERT_EQ(report.modules.size(), 2u);
    EXPECT_TRUE(report.modules[0].k1_attempted); // the simple
    EXPECT_TRUE(report.modules[0].k1_ok) << report.modules[0].k1_detail;
}
