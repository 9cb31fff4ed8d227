#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hom.hpp"
#include "monomial_algebra.hpp"
#include "quiver.hpp"
#include "representation.hpp"
#include "resolution.hpp"
#include "stable_model.hpp"
#include "syzygy.hpp"

namespace qit {

inline TruncatedAlgebra build_truncated_cycle(std::size_t n, unsigned k) {
    if (n < 1) throw PreconditionError("cycle needs at least one vertex");
    return {cycle_quiver(n), k};
}

struct Example55 {
    TruncatedAlgebra algebra;
    Representation<Rational> module;
};

inline Example55 build_example_5_5() {
    Quiver q;
    for (const char* v : {"1", "2", "3", "4", "5"}) q.add_vertex(v);
    q.add_arrow("a21", "2", "1");
    q.add_arrow("a31", "3", "1");
    q.add_arrow("a14", "1", "4");
    q.add_arrow("a45", "4", "5");
    q.add_arrow("a53", "5", "3");
    q.add_arrow("a52", "5", "2");
    Representation<Rational> m;
    m.dims.assign(5, 1);
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        Matrix<Rational> t(1, 1);
        if (a >= 2) t(0, 0) = 1; // the two arrows into 1 act by zero
        m.maps.push_back(t);
    }
    return {TruncatedAlgebra(std::move(q), 8), std::move(m)};
}

/// Truncated monomial algebras come back as TruncatedAlgebra when possible.
inline std::optional<TruncatedAlgebra> as_truncated(const MonomialAlgebra& a) {
    if (!a.is_truncated() || *a.truncation() < 2) return std::nullopt;
    return TruncatedAlgebra(a.quiver(), *a.truncation());
}

struct AlphaArrow {
    std::string name;
    std::string source; ///< vertex of the gamma part
    std::string target; ///< vertex of the gammabar part
};

struct GlueSpec {
    MonomialAlgebra gamma_part;
    MonomialAlgebra gammabar_part;
    std::vector<AlphaArrow> alpha_arrows;
};

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct GlueResult {
    MonomialAlgebra algebra;
    std::vector<Hypothesis> hypotheses;
    bool conclusion_applicable = false;
    std::string gammabar_verdict; ///< classification of the gammabar part, or why none was made
};

namespace detail {

// Appends the quiver of `part` to `q` and returns the arrow index map.
inline std::vector<ArrowId> append_quiver(Quiver& q, const Quiver& part) {
    for (const auto& v : part.vertices()) {
        if (q.find_vertex(v)) throw PreconditionError("glue: quivers not disjoint (vertex '" + v + "' in both parts)");
        q.add_vertex(v);
    }
    std::vector<ArrowId> map;
    for (const auto& a : part.arrows()) {
        if (q.find_arrow(a.name)) throw PreconditionError("glue: quivers not disjoint (arrow '" + a.name + "' in both parts)");
        map.push_back(q.add_arrow(a.name, part.vertex_name(a.source), part.vertex_name(a.target)));
    }
    return map;
}

inline Path remap_path(const Path& p, const Quiver& from, const Quiver& to, const std::vector<ArrowId>& arrows) {
    Path out{*to.find_vertex(from.vertex_name(p.start)), {}};
    for (ArrowId a : p.arrows) out.arrows.push_back(arrows[a]);
    return out;
}

} // namespace detail

/// The algebra of the gluing theorem: both parts, the alpha arrows from the
/// gamma part into the gammabar part, and every length-two path through an
/// alpha arrow set to zero.
inline GlueResult glue_theorem_5_6(const GlueSpec& spec) {
    const Quiver& g = spec.gamma_part.quiver();
    const Quiver& gb = spec.gammabar_part.quiver();
    GlueResult out;
    auto require = [&](const std::string& name, bool holds, const std::string& detail) {
        out.hypotheses.push_back({name, holds, detail});
        if (!holds) throw PreconditionError("glue hypothesis violated: " + name + " (" + detail + ")");
    };

    std::set<std::string> names(g.vertices().begin(), g.vertices().end());
    std::string clash;
    for (const auto& v : gb.vertices())
        if (names.count(v)) clash = v;
    require("disjoint quivers", clash.empty(), clash.empty() ? "vertex sets disjoint" : "vertex '" + clash + "' in both parts");

    const auto flags = structural_flags(gb);
    require("no sinks", flags.sinks.empty(),
            flags.sinks.empty() ? "every gammabar vertex has an outgoing arrow"
                                : "gammabar vertex '" + gb.vertex_name(*flags.sinks.begin()) + "' is a sink");

    std::set<std::string> covered;
    for (const auto& al : spec.alpha_arrows) {
        const bool backwards = gb.find_vertex(al.source) && g.find_vertex(al.target);
        require("no arrows from gammabar to gamma", !backwards,
                backwards ? "arrow '" + al.name + "' goes " + al.source + " -> " + al.target : "arrow '" + al.name + "' ok");
        if (!g.find_vertex(al.source) || !gb.find_vertex(al.target))
            throw PreconditionError("glue: alpha arrow '" + al.name + "' must go from the gamma part to the gammabar part");
        covered.insert(al.source);
    }
    std::string uncovered;
    for (const auto& v : g.vertices())
        if (!covered.count(v)) uncovered = v;
    require("alpha arrow from every gamma vertex", uncovered.empty(),
            uncovered.empty() ? "all gamma vertices covered" : "gamma vertex '" + uncovered + "' has no alpha arrow");

    Quiver q;
    auto gb_arrows = detail::append_quiver(q, gb);
    auto g_arrows = detail::append_quiver(q, g);
    std::vector<ArrowId> alphas;
    for (const auto& al : spec.alpha_arrows) alphas.push_back(q.add_arrow(al.name, al.source, al.target));

    std::vector<Path> relations;
    auto add = [&](Path p) {
        if (std::find(relations.begin(), relations.end(), p) == relations.end()) relations.push_back(std::move(p));
    };
    for (const auto& r : spec.gammabar_part.explicit_relations()) add(detail::remap_path(r, gb, q, gb_arrows));
    for (const auto& r : spec.gamma_part.explicit_relations()) add(detail::remap_path(r, g, q, g_arrows));
    for (ArrowId al : alphas) {
        const Arrow& arr = q.arrow(al);
        for (ArrowId d : q.arrows_into(arr.source)) add(Path{q.arrow(d).source, {d, al}});
        for (ArrowId b : q.arrows_from(arr.target)) add(Path{arr.source, {al, b}});
    }
    out.hypotheses.push_back({"cross arrows annihilate", true, "alpha*beta and delta*alpha added as relations"});
    out.algebra = MonomialAlgebra(std::move(q), std::move(relations));

    if (auto t = as_truncated(spec.gammabar_part)) {
        if (!is_strongly_connected(t->quiver())) {
            out.gammabar_verdict = "Inconclusive (gammabar quiver not strongly connected)";
        } else {
            auto verdict = StableModel(*t).classify_trivial_0IT().verdict;
            out.gammabar_verdict = to_string(verdict);
            out.conclusion_applicable = verdict == TrivialVerdict::OnlyTrivial;
        }
    } else {
        out.gammabar_verdict = "Inconclusive (gammabar part is not a truncated path algebra)";
    }
    return out;
}

inline constexpr const char* kExample61Prefix = "b";

/// C = kQ'/J^2 on two vertices 1, 2 with beta1: 1 -> 2, beta2: 2 -> 1 and loops.
inline MonomialAlgebra example_6_1_c_part() {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("beta1", "1", "2");
    q.add_arrow("beta2", "2", "1");
    q.add_arrow("betabar1", "1", "1");
    q.add_arrow("betabar2", "2", "2");
    return MonomialAlgebra::truncated(std::move(q), 2);
}

/// b with every vertex and arrow name prefixed, relations kept (truncation made explicit).
inline MonomialAlgebra renamed(const MonomialAlgebra& b, const std::string& prefix) {
    Quiver q;
    for (const auto& v : b.quiver().vertices()) q.add_vertex(prefix + v);
    for (const auto& a : b.quiver().arrows()) q.add_arrow(prefix + a.name, a.source, a.target);
    if (b.is_truncated()) return MonomialAlgebra::truncated(std::move(q), *b.truncation());
    return {std::move(q), b.relations(), b.truncation()};
}

inline GlueSpec example_6_1_spec(const MonomialAlgebra& b) {
    GlueSpec spec{renamed(b, kExample61Prefix), example_6_1_c_part(), {}};
    for (const auto& v : spec.gamma_part.quiver().vertices()) spec.alpha_arrows.push_back({"alpha_" + v, v, "1"});
    return spec;
}

/// A = k Gamma / I_A: Q' (vertices 1, 2) first, then b's vertices with prefix "b".
inline MonomialAlgebra build_example_6_1(const MonomialAlgebra& b) { return glue_theorem_5_6(example_6_1_spec(b)).algebra; }

/// Vertex and arrow embedding of a small algebra in a big one by name (small name = prefix + big name).
struct Embedding {
    std::vector<VertexId> vertex;
    std::vector<ArrowId> arrow;
};

inline Embedding find_embedding(const MonomialAlgebra& big, const MonomialAlgebra& small, const std::string& prefix = "") {
    const Quiver& bq = big.quiver();
    const Quiver& sq = small.quiver();
    Embedding e;
    for (const auto& v : sq.vertices()) {
        auto w = bq.find_vertex(prefix + v);
        if (!w) throw PreconditionError("incompatible quivers: vertex '" + prefix + v + "' missing");
        e.vertex.push_back(*w);
    }
    for (const auto& a : sq.arrows()) {
        auto b = bq.find_arrow(prefix + a.name);
        if (!b || bq.arrow(*b).source != e.vertex[a.source] || bq.arrow(*b).target != e.vertex[a.target])
            throw PreconditionError("incompatible quivers: arrow '" + prefix + a.name + "' missing or misplaced");
        e.arrow.push_back(*b);
    }
    std::set<VertexId> image(e.vertex.begin(), e.vertex.end());
    std::set<ArrowId> arrows(e.arrow.begin(), e.arrow.end());
    for (ArrowId a = 0; a < bq.arrow_count(); ++a)
        if (image.count(bq.arrow(a).source) && image.count(bq.arrow(a).target) && !arrows.count(a))
            throw PreconditionError("incompatible quivers: not a full subquiver (arrow '" + bq.arrow(a).name + "')");
    return e;
}

enum class Direction { Restrict, Extend };

template <class F>
Representation<F> restrict_and_extend(const MonomialAlgebra& big, const MonomialAlgebra& small, const Representation<F>& r,
                                      Direction direction, const std::string& prefix = "") {
    const auto e = find_embedding(big, small, prefix);
    if (direction == Direction::Restrict) {
        check_shape(big.quiver(), r);
        Representation<F> out;
        for (VertexId v : e.vertex) out.dims.push_back(r.dims[v]);
        for (ArrowId a : e.arrow) out.maps.push_back(r.maps[a]);
        return out;
    }
    check_shape(small.quiver(), r);
    Representation<F> out;
    out.dims.assign(big.quiver().vertex_count(), 0);
    for (std::size_t v = 0; v < e.vertex.size(); ++v) out.dims[e.vertex[v]] = r.dims[v];
    for (const auto& arr : big.quiver().arrows()) out.maps.emplace_back(out.dims[arr.target], out.dims[arr.source]);
    for (std::size_t a = 0; a < e.arrow.size(); ++a) out.maps[e.arrow[a]] = r.maps[a];
    if (auto bad = relation_violation(big, out)) throw PreconditionError("extension by zero violates relation " + *bad);
    return out;
}

/// Indecomposable modules of a truncated cycle algebra: e_v A / J^l, 1 <= l <= k.
template <class F = Rational>
std::vector<Representation<F>> nakayama_indecomposables(const TruncatedAlgebra& a) {
    if (!is_oriented_cycle(a.quiver())) throw PreconditionError("nakayama_indecomposables: quiver is not an oriented cycle");
    const auto mono = a.as_monomial();
    std::vector<Representation<F>> out;
    for (VertexId v = 0; v < a.quiver().vertex_count(); ++v)
        for (unsigned l = 1; l <= a.k(); ++l) out.push_back(truncated_cyclic_rep<F>(mono, v, l));
    return out;
}

/// Selfinjectivity of a Nakayama-style truncation from the representations:
/// each indecomposable projective has a simple socle and the socle vertices
/// form a permutation. Other shapes fall back to the path-count test.
inline Selfinjectivity selfinjectivity_by_socle(const TruncatedAlgebra& a) {
    if (!is_oriented_cycle(a.quiver())) return truncated_selfinjectivity(a);
    const auto mono = a.as_monomial();
    std::set<VertexId> socles;
    for (VertexId v = 0; v < a.quiver().vertex_count(); ++v) {
        auto soc = socle_dims(a.quiver(), projective_rep<Rational>(mono, v));
        std::size_t total = 0;
        VertexId where = 0;
        for (VertexId w = 0; w < soc.size(); ++w)
            if (soc[w]) total += soc[w], where = w;
        if (total != 1) return Selfinjectivity::NotSelfinjective;
        socles.insert(where);
    }
    return socles.size() == a.quiver().vertex_count() ? Selfinjectivity::Selfinjective : Selfinjectivity::NotSelfinjective;
}

struct Bullet61Check {
    std::size_t module_index = 0;
    bool decomposition_ok = false; ///< Omega_A(M) = Omega_B(M) + S_1^{dim Top M}
    std::string decomposition_detail;
    RepPd pd;
    bool pd_ok = false; ///< pd 0, or a repeating fingerprint
    bool projective_in_b = false;
    bool k1_attempted = false;
    bool k1_ok = false; ///< 0 -> V_B + S_1^{Top W_B} -> P -> W_B -> 0 built and exact
    std::string k1_detail;
    bool probabilistic = false;
};

struct Bullet61Report {
    bool b_selfinjective = false;
    std::vector<Bullet61Check> modules;
    bool all_ok() const {
        for (const auto& m : modules)
            if (!m.decomposition_ok || !m.pd_ok || (m.k1_attempted && !m.k1_ok)) return false;
        return true;
    }
};

/// Check the glued algebra `a` (built from b by build_example_6_1) against its expected syzygy behaviour
/// on a list of b-modules.
inline Bullet61Report verify_6_1_bullets(const MonomialAlgebra& a, const MonomialAlgebra& b,
                                          const std::vector<Representation<Rational>>& modules, std::uint64_t seed = 1) {
    find_embedding(a, b, kExample61Prefix);
    const auto expected = build_example_6_1(b);
    if (!(expected.quiver() == a.quiver())) throw PreconditionError("verify_6_1_bullets: a is not the glued algebra built from b");
    const VertexId s1_vertex = *a.quiver().find_vertex("1");
    const auto s1 = simple_rep<Rational>(a.quiver(), s1_vertex);
    auto ext = [&](const Representation<Rational>& r) { return restrict_and_extend(a, b, r, Direction::Extend, kExample61Prefix); };

    Bullet61Report report;
    if (auto t = as_truncated(b)) report.b_selfinjective = selfinjectivity_by_socle(*t) == Selfinjectivity::Selfinjective;

    std::vector<Representation<Rational>> omega_b;
    for (const auto& m : modules) omega_b.push_back(syzygy_rep(b, m));

    for (std::size_t i = 0; i < modules.size(); ++i) {
        const auto& m = modules[i];
        Bullet61Check c;
        c.module_index = i;
        c.projective_in_b = omega_b[i].is_zero();
        std::size_t top = 0;
        for (auto d : top_and_radical(b.quiver(), m).top_dims) top += d;
        const auto predicted = direct_sum(ext(omega_b[i]), power(s1, top, a.quiver()));
        const auto actual = syzygy_rep(a, ext(m));
        auto iso = is_isomorphic(a, actual, predicted, seed + i);
        c.decomposition_ok = iso.isomorphic;
        c.decomposition_detail = iso.reason;
        c.probabilistic = c.probabilistic || iso.probabilistic;

        c.pd = rep_pd(a, ext(m), seed + i);
        c.pd_ok = (c.pd.kind == RepPdKind::Finite && c.pd.value == 0) || c.pd.kind == RepPdKind::Infinite;

        if (report.b_selfinjective && !c.projective_in_b) {
            // m plays V_B; look for W_B in the list with Omega_B(W_B) = V_B
            c.k1_attempted = true;
            c.k1_detail = "no W_B with Omega_B(W_B) = V_B in the module list";
            for (std::size_t j = 0; j < modules.size(); ++j) {
                if (omega_b[j].dims != m.dims || !is_isomorphic(b, omega_b[j], m, seed + 7 * j).isomorphic) continue;
                const auto seq = cover_sequence(a, ext(modules[j]));
                std::size_t top_w = 0;
                for (auto d : top_and_radical(b.quiver(), modules[j]).top_dims) top_w += d;
                const auto left = direct_sum(ext(m), power(s1, top_w, a.quiver()));
                if (auto bad = exactness_violation(a.quiver(), seq)) {
                    c.k1_detail = "sequence not exact: " + *bad;
                    break;
                }
                auto li = is_isomorphic(a, seq.left, left, seed + 13 * j);
                c.probabilistic = c.probabilistic || li.probabilistic;
                c.k1_ok = li.isomorphic;
                c.k1_detail = li.isomorphic ? "W_B = module " + std::to_string(j) + ", exact, kernel matches"
                                            : "kernel differs from V_B + S_1^{Top W_B}";
                break;
            }
        }
        report.modules.push_back(std::move(c));
    }
    return report;
}

} // namespace qit
