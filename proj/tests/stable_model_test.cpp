#include <gtest/gtest.h>

#include <random>

#include <qit/constructions.hpp>
#include <qit/resolution.hpp>
#include <qit/sampling.hpp>
#include <qit/skeleton.hpp>
#include <qit/stable_model.hpp>

#include "oracles.hpp"

using namespace qit;

namespace {

Quiver from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Quiver q;
    for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    std::size_t i = 0;
    for (auto [s, t] : edges) q.add_arrow("a" + std::to_string(++i), s, t);
    return q;
}

// loops at 1 and 2, 1 -> 2, 2 -> 1
Quiver full_two() { return from_edges(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}); }

StableClass cls(std::size_t v, unsigned l) { return {v, l}; }

std::vector<TruncatedAlgebra> random_algebras(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<TruncatedAlgebra> out;
    while (static_cast<int>(out.size()) < count) {
        const std::size_t n = 1 + rng() % 4;
        auto q = random_quiver(n, rng() % 7, rng);
        out.emplace_back(q, 2 + rng() % 3);
    }
    return out;
}

} // namespace

TEST(StableModel, EnumerationFlags) {
    StableModel c3(build_truncated_cycle(3, 2));
    EXPECT_EQ(c3.classes().size(), 3u);
    EXPECT_EQ(c3.k0_basis().size(), 3u);

    StableModel line(TruncatedAlgebra(from_edges(2, {{0, 1}}), 2));
    ASSERT_EQ(line.classes().size(), 2u);
    EXPECT_FALSE(line.info(cls(0, 1)).realizable);
    EXPECT_TRUE(line.info(cls(1, 1)).realizable);
    EXPECT_TRUE(line.is_projective(cls(1, 1)));
    EXPECT_FALSE(line.is_projective(cls(0, 1)));

    StableModel ex(build_example_5_5().algebra);
    EXPECT_EQ(ex.classes().size(), 35u);
    EXPECT_EQ(ex.k0_basis().size(), 35u);
}

TEST(StableModel, SyzygyExamples) {
    StableModel c3(build_truncated_cycle(3, 2));
    EXPECT_EQ(c3.syzygy_class(cls(0, 1)).nonprojective, (ClassVector{{cls(1, 1), 1}}));
    // permutation matrix
    const auto& l = c3.syzygy_matrix();
    for (std::size_t c = 0; c < 3; ++c) {
        long s = 0;
        for (std::size_t r = 0; r < 3; ++r) s += l(r, c).get_si();
        EXPECT_EQ(s, 1);
    }
    StableModel loop(build_truncated_cycle(1, 3));
    EXPECT_EQ(loop.syzygy_class(cls(0, 1)).nonprojective, (ClassVector{{cls(0, 2), 1}}));
    EXPECT_EQ(loop.syzygy_class(cls(0, 2)).nonprojective, (ClassVector{{cls(0, 1), 1}}));

    // radical square zero: Omega(S_v) = sum over arrows v -> w of S_w
    StableModel rsz(TruncatedAlgebra(full_two(), 2));
    EXPECT_EQ(rsz.syzygy_class(cls(0, 1)).nonprojective, (ClassVector{{cls(0, 1), 1}, {cls(1, 1), 1}}));
}

TEST(StableModel, SyzygyMatchesPathEnumeration) {
    for (const auto& a : random_algebras(3, 40)) {
        StableModel m(a);
        const auto& q = a.quiver();
        for (const auto& info : m.classes()) {
            const auto c = info.cls;
            EXPECT_EQ(info.projective, oracle::projective(q, a.k(), {c.vertex, c.level}));
            if (info.projective) {
                EXPECT_TRUE(m.syzygy_class(c).nonprojective.empty());
                continue;
            }
            auto s = m.syzygy_class(c);
            std::map<oracle::Cls, long> got;
            for (const auto& [d, k] : s.nonprojective) got[{d.vertex, d.level}] += k;
            for (const auto& [d, k] : s.projective) got[{d.vertex, d.level}] += k;
            EXPECT_EQ(got, oracle::omega(q, a.k(), {c.vertex, c.level}));
        }
    }
}

TEST(StableModel, SquareOfSyzygyCountsLengthKPaths) {
    for (const auto& a : random_algebras(4, 40)) {
        StableModel m(a);
        for (const auto& c : m.k0_basis()) {
            auto twice = m.syzygy_power({{c, 1}}, 2);
            auto counts = oracle::paths_from(a.quiver(), c.vertex, a.k());
            for (std::size_t w = 0; w < counts.size(); ++w) {
                const StableClass target{w, c.level};
                const long expect = m.is_projective(target) ? 0 : counts[w];
                const long got = twice.count(target) ? static_cast<long>(twice.at(target)) : 0;
                EXPECT_EQ(got, expect);
            }
        }
    }
}

TEST(StableModel, PhiAndPdAgreeWithOracle) {
    for (const auto& a : random_algebras(9, 40)) {
        StableModel m(a);
        auto ref = oracle::k0(a.quiver(), a.k());
        ASSERT_EQ(ref.basis.size(), m.k0_basis().size());
        for (const auto& c : m.k0_basis()) {
            auto pd = m.pd_class(c);
            auto expect = oracle::pd(ref, {c.vertex, c.level});
            EXPECT_EQ(pd.finite, expect.has_value());
            if (pd.finite && expect) {
                EXPECT_EQ(pd.value, *expect);
            }
            EXPECT_EQ(m.phi({{c, 1}}), oracle::phi(ref, {{c.vertex, c.level}}));
        }
        ClassVector all;
        std::set<oracle::Cls> all_ref;
        for (const auto& c : m.k0_basis()) {
            all[c] = 2;
            all_ref.insert({c.vertex, c.level});
        }
        EXPECT_EQ(m.phi(all), oracle::phi(ref, all_ref));
    }
}

TEST(StableModel, PdOnLinearQuiverMatchesResolution) {
    TruncatedAlgebra a(from_edges(3, {{0, 1}, {1, 2}}), 2);
    StableModel m(a);
    for (const auto& info : m.classes()) {
        auto pd = m.pd_class(info.cls);
        ASSERT_TRUE(pd.finite);
        auto r = rep_pd(a.as_monomial(), class_rep<Rational>(a, info.cls), 1);
        ASSERT_EQ(r.kind, RepPdKind::Finite);
        EXPECT_EQ(pd.value, r.value) << m.name(info.cls);
    }
    EXPECT_EQ(m.pd_class(cls(0, 1)).value, 2u);
}

TEST(StableModel, StronglyConnectedMeansInfinitePd) {
    for (const auto& a : random_algebras(12, 60)) {
        if (!is_strongly_connected(a.quiver())) continue;
        StableModel m(a);
        for (const auto& c : m.k0_basis()) {
            auto pd = m.pd_class(c);
            EXPECT_FALSE(pd.finite);
            ASSERT_FALSE(pd.cycle_witness.empty());
            // the witness is a cycle: its last class has the first as a syzygy summand
            EXPECT_TRUE(m.syzygy_class(pd.cycle_witness.back()).nonprojective.count(pd.cycle_witness.front()));
        }
        ClassVector x{{m.k0_basis().front(), 1}};
        EXPECT_EQ(m.psi(x), m.phi(x));
    }
}

TEST(StableModel, PhiExamples) {
    TruncatedAlgebra a(full_two(), 3);
    StableModel m(a);
    ClassVector x = m.level_sum(1);
    for (const auto& [c, k] : m.level_sum(2)) x[c] += k;
    EXPECT_GE(m.phi(x), 1u);
    EXPECT_EQ(m.phi(x), oracle::phi(oracle::k0(a.quiver(), 3), {{0, 1}, {1, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(m.phi({}), 0u);
    EXPECT_EQ(m.psi({}), 0u);
    EXPECT_EQ(m.findim_add({}), 0u);

    // all nonprojective classes of C3 k=2 form a 0-IT subcategory; quotient is zero
    StableModel c3(build_truncated_cycle(3, 2));
    SubcategorySpec d{{cls(0, 1), cls(1, 1), cls(2, 1)}, false};
    EXPECT_TRUE(c3.validate_0IT(d).ok);
    EXPECT_EQ(c3.phi({{cls(0, 1), 1}}, d), 0u);
}

TEST(StableModel, PsiCountsFinitePd) {
    TruncatedAlgebra a(from_edges(3, {{0, 1}, {1, 2}}), 2);
    StableModel m(a);
    ClassVector s1{{cls(0, 1), 1}};
    // S_1 -> S_2 -> S_3 projective: phi = psi = pd = 2
    EXPECT_EQ(m.phi(s1), 2u);
    EXPECT_EQ(m.psi(s1), 2u);
    EXPECT_EQ(m.findim_add(s1), 2u);
}

TEST(StableModel, Validation) {
    StableModel m(TruncatedAlgebra(full_two(), 3));
    auto bad = m.validate_0IT({{cls(0, 1), cls(1, 1)}, false});
    EXPECT_FALSE(bad.ok);
    EXPECT_NE(bad.reason.find("syzygy-closed"), std::string::npos);
    EXPECT_THROW(m.phi({{cls(0, 1), 1}}, {{cls(0, 1)}, false}), PreconditionError);
    EXPECT_TRUE(m.validate_0IT({}).ok);
}

TEST(StableModel, Gamma) {
    StableModel rsz(TruncatedAlgebra(full_two(), 2));
    for (const auto& c : rsz.k0_basis()) EXPECT_GE(rsz.gamma({{c, 1}}), 1u);
    EXPECT_EQ(rsz.gamma({}), 0u);

    auto ex = build_example_5_5();
    StableModel m(ex.algebra);
    // M is M[4]@1 and its syzygy is two copies of it
    EXPECT_EQ(skeleton_decompose(ex.algebra, ex.module), (ClassVector{{cls(0, 4), 2}}));
    ClassVector x{{cls(0, 4), 1}};
    EXPECT_EQ(m.gamma(x), 0u);
    EXPECT_EQ(m.phi(x), 0u);
}

TEST(StableModel, Classification) {
    auto ex = build_example_5_5();
    StableModel m(ex.algebra);
    auto r = m.classify_trivial_0IT();
    ASSERT_EQ(r.verdict, TrivialVerdict::NontrivialWitness);
    EXPECT_TRUE(m.validate_0IT(*r.witness).ok);
    // the class of M generates a 0-IT subcategory too
    EXPECT_TRUE(m.validate_0IT({m.syzygy_closure({cls(0, 4)}), false}).ok);

    StableModel rsz(TruncatedAlgebra(full_two(), 2));
    EXPECT_EQ(rsz.classify_trivial_0IT().verdict, TrivialVerdict::OnlyTrivial);

    StableModel line(TruncatedAlgebra(from_edges(2, {{0, 1}}), 2));
    EXPECT_EQ(line.classify_trivial_0IT().verdict, TrivialVerdict::Inconclusive);
}

TEST(StableModel, OnlyTrivialMeansNoSmallZeroPhiClosedSet) {
    for (const auto& a : random_algebras(21, 60)) {
        StableModel m(a);
        auto r = m.classify_trivial_0IT();
        if (r.verdict != TrivialVerdict::OnlyTrivial) continue;
        const auto& b = m.k0_basis();
        const std::size_t n = b.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = j; k < n; ++k) {
                    std::set<StableClass> s{b[i], b[j], b[k]};
                    if (m.closure_violation(s)) continue;
                    EXPECT_FALSE(m.validate_0IT({s, false}).ok);
                }
    }
}

TEST(StableModel, LitWitness) {
    StableModel c3(build_truncated_cycle(3, 2));
    auto cert = c3.lit_witness();
    EXPECT_EQ(cert.n, 1u);
    EXPECT_EQ(cert.v_classes, (ClassVector{{cls(0, 1), 1}, {cls(1, 1), 1}, {cls(2, 1), 1}}));
    EXPECT_EQ(cert.findim_bound, 2u);

    auto ex = build_example_5_5();
    StableModel m(ex.algebra);
    auto w = m.classify_trivial_0IT().witness;
    ASSERT_TRUE(w);
    auto small = m.lit_witness(*w);
    EXPECT_LT(small.v_classes.size(), m.lit_witness().v_classes.size());
    EXPECT_THROW(m.lit_witness({{cls(0, 1)}, false}), PreconditionError);
}
