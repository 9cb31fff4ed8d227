#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "monomial_algebra.hpp"
#include "representation.hpp"

namespace qit {

/// Paths from v grouped by target vertex, in the basis order used by projective_rep.
inline std::vector<std::vector<Path>> projective_basis(const MonomialAlgebra& a, VertexId v) {
    std::vector<std::vector<Path>> out(a.quiver().vertex_count());
    for (const auto& p : a.paths_from(v)) out[a.quiver().path_target(p)].push_back(p);
    return out;
}

/// Projective cover P(M) -> M together with the kernel.
template <class F>
struct CoverData {
    std::vector<VertexId> generator_vertices;     ///< one indecomposable projective per top generator
    std::vector<std::vector<F>> generators;       ///< chosen top basis vectors (in M at their vertex)
    Representation<F> cover;
    std::vector<Matrix<F>> surjection;            ///< per vertex: dims(M) x dims(cover)
    SubspaceFamily<F> kernel_basis;               ///< per vertex, inside the cover
    Representation<F> syzygy;
};

/// Matrix at vertex w of the map P -> N sending the i-th generator e_{v_i} to
/// images[i]; P = direct sum of the projectives at `vertices`.
template <class F>
std::vector<Matrix<F>> map_from_projective(const MonomialAlgebra& a, const Representation<F>& n,
                                           const std::vector<VertexId>& vertices,
                                           const std::vector<std::vector<F>>& images) {
    const Quiver& q = a.quiver();
    std::vector<Matrix<F>> out;
    for (VertexId w = 0; w < q.vertex_count(); ++w) out.emplace_back(n.dims[w], 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto basis = projective_basis(a, vertices[i]);
        for (VertexId w = 0; w < q.vertex_count(); ++w) {
            Matrix<F> block(n.dims[w], basis[w].size());
            for (std::size_t j = 0; j < basis[w].size(); ++j) block.set_column(j, path_action(q, n, basis[w][j]).apply(images[i]));
            out[w] = hstack(out[w], block);
        }
    }
    return out;
}

template <class F>
CoverData<F> projective_cover_and_syzygy(const MonomialAlgebra& a, const Representation<F>& r) {
    const Quiver& q = a.quiver();
    check_shape(q, r);
    CoverData<F> out;
    const auto rad = arrow_image(q, r, whole_space(r));
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        const std::size_t d = r.dims[v];
        auto piv = independent_columns(hstack(rad[v], Matrix<F>::identity(d)));
        for (auto p : piv) {
            if (p < rad[v].cols()) continue;
            std::vector<F> e(d, F(0));
            e[p - rad[v].cols()] = F(1);
            out.generator_vertices.push_back(v);
            out.generators.push_back(std::move(e));
        }
    }
    std::vector<Representation<F>> parts;
    for (VertexId v : out.generator_vertices) parts.push_back(projective_rep<F>(a, v));
    out.cover = direct_sum(parts, q);
    out.surjection = map_from_projective(a, r, out.generator_vertices, out.generators);
    for (VertexId w = 0; w < q.vertex_count(); ++w) {
        if (rank(out.surjection[w]) != r.dims[w])
            throw ConsistencyError("projective cover is not surjective at vertex " + q.vertex_name(w));
        out.kernel_basis.push_back(nullspace(out.surjection[w]));
    }
    out.syzygy = subrepresentation(q, out.cover, out.kernel_basis);
    return out;
}

template <class F>
Representation<F> syzygy_rep(const MonomialAlgebra& a, const Representation<F>& r) {
    return projective_cover_and_syzygy(a, r).syzygy;
}

template <class F>
bool is_projective_rep(const MonomialAlgebra& a, const Representation<F>& r) {
    return syzygy_rep(a, r).is_zero();
}

/// 0 -> left -> middle -> right -> 0 with vertex-indexed maps.
template <class F>
struct SES {
    Representation<F> left, middle, right;
    std::vector<Matrix<F>> inj, surj;
};

/// Reason the sequence fails to be a short exact sequence of modules, if any.
template <class F>
std::optional<std::string> exactness_violation(const Quiver& q, const SES<F>& s) {
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        const std::string at = " at vertex " + q.vertex_name(v);
        const auto& i = s.inj[v];
        const auto& p = s.surj[v];
        if (i.rows() != s.middle.dims[v] || i.cols() != s.left.dims[v]) return "inj has wrong shape" + at;
        if (p.rows() != s.right.dims[v] || p.cols() != s.middle.dims[v]) return "surj has wrong shape" + at;
        if (rank(i) != i.cols()) return "inj not injective" + at;
        if (rank(p) != p.rows()) return "surj not surjective" + at;
        if (!(p * i).is_zero_matrix()) return "composite not zero" + at;
        if (i.cols() + p.rows() != s.middle.dims[v]) return "not exact in the middle" + at;
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        if (!(s.inj[arr.target] * s.left.maps[a] == s.middle.maps[a] * s.inj[arr.source]))
            return "inj does not commute with arrow " + arr.name;
        if (!(s.surj[arr.target] * s.middle.maps[a] == s.right.maps[a] * s.surj[arr.source]))
            return "surj does not commute with arrow " + arr.name;
    }
    return std::nullopt;
}

template <class F>
SES<F> cover_sequence(const MonomialAlgebra& a, const Representation<F>& m) {
    auto c = projective_cover_and_syzygy(a, m);
    return {c.syzygy, c.cover, m, c.kernel_basis, c.surjection};
}

/// From 0 -> C1 -> M -> C2 -> 0 build 0 -> Omega(C2) -> C1 + P(C2) -> M -> 0,
/// the middle column of the pullback of M -> C2 along P(C2) -> C2.
template <class F>
SES<F> syzygy_sequence(const MonomialAlgebra& a, const SES<F>& s) {
    const Quiver& q = a.quiver();
    if (auto bad = exactness_violation(q, s)) throw PreconditionError("syzygy_sequence: input not exact: " + *bad);
    auto c2 = projective_cover_and_syzygy(a, s.right);
    // lift the generators of C2 through surj
    std::vector<std::vector<F>> lifted;
    for (std::size_t i = 0; i < c2.generators.size(); ++i) {
        VertexId v = c2.generator_vertices[i];
        lifted.push_back(right_inverse(s.surj[v]).apply(c2.generators[i]));
    }
    auto g = map_from_projective(a, s.middle, c2.generator_vertices, lifted);
    SES<F> out;
    out.left = c2.syzygy;
    out.middle = direct_sum(s.left, c2.cover);
    out.right = s.middle;
    for (VertexId w = 0; w < q.vertex_count(); ++w) {
        out.surj.push_back(hstack(s.inj[w], g[w]));
        const Matrix<F>& k = c2.kernel_basis[w];
        Matrix<F> pre = solve_in_basis(s.inj[w], g[w] * k);
        Matrix<F> neg(pre.rows(), pre.cols());
        out.inj.push_back(vstack(neg - pre, k));
    }
    if (auto bad = exactness_violation(q, out)) throw ConsistencyError("syzygy_sequence: output not exact: " + *bad);
    return out;
}

} // namespace qit
