#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "monomial_algebra.hpp"
#include "representation.hpp"
#include "syzygy.hpp"

namespace qit {

/// A vertex-indexed family of matrices (a module homomorphism).
template <class F>
using Morphism = std::vector<Matrix<F>>;

/// Hom(M, N) parametrized by the images of the top generators of M: a
/// homomorphism is determined by y_i in N_{v_i}, subject to the cover's
/// kernel mapping to zero.
template <class F>
struct HomSpace {
    CoverData<F> m_cover;
    std::vector<std::size_t> offsets; ///< start of y_i in the unknown vector
    Matrix<F> basis;                  ///< columns: solutions y
    std::size_t dimension() const { return basis.cols(); }
};

template <class F>
HomSpace<F> hom_space(const MonomialAlgebra& a, const Representation<F>& m, const Representation<F>& n) {
    const Quiver& q = a.quiver();
    check_shape(q, n);
    HomSpace<F> h;
    h.m_cover = projective_cover_and_syzygy(a, m);
    const auto& gv = h.m_cover.generator_vertices;
    std::size_t unknowns = 0;
    for (VertexId v : gv) {
        h.offsets.push_back(unknowns);
        unknowns += n.dims[v];
    }
    // The map P(M) -> N at w, as a linear function of y: column (i, p) of
    // P(M)_w goes to T_p y_i.
    Matrix<F> constraints(0, unknowns);
    for (VertexId w = 0; w < q.vertex_count(); ++w) {
        const Matrix<F>& kern = h.m_cover.kernel_basis[w];
        if (kern.cols() == 0 || n.dims[w] == 0) continue;
        std::vector<std::pair<std::size_t, Matrix<F>>> columns; // (generator, T_p) per cover basis vector at w
        for (std::size_t i = 0; i < gv.size(); ++i) {
            const auto paths = projective_basis(a, gv[i]);
            for (const auto& p : paths[w]) columns.emplace_back(i, path_action(q, n, p));
        }
        for (std::size_t c = 0; c < kern.cols(); ++c) {
            Matrix<F> rows(n.dims[w], unknowns);
            for (std::size_t j = 0; j < columns.size(); ++j) {
                const F coeff = kern(j, c);
                if (is_zero(coeff)) continue;
                const auto& [i, t] = columns[j];
                for (std::size_t r = 0; r < t.rows(); ++r)
                    for (std::size_t s = 0; s < t.cols(); ++s) rows(r, h.offsets[i] + s) += coeff * t(r, s);
            }
            constraints = vstack(constraints, rows);
        }
        auto e = rref(constraints);
        constraints = e.reduced.row_block(0, e.pivots.size());
    }
    h.basis = nullspace(constraints);
    return h;
}

template <class F>
std::size_t hom_space_dim(const MonomialAlgebra& a, const Representation<F>& m, const Representation<F>& n) {
    return hom_space(a, m, n).dimension();
}

/// The homomorphism M -> N for a given generator-image vector y.
template <class F>
Morphism<F> hom_element(const MonomialAlgebra& a, const HomSpace<F>& h, const Representation<F>& n, const std::vector<F>& y) {
    const auto& gv = h.m_cover.generator_vertices;
    std::vector<std::vector<F>> images;
    for (std::size_t i = 0; i < gv.size(); ++i)
        images.emplace_back(y.begin() + static_cast<std::ptrdiff_t>(h.offsets[i]),
                            y.begin() + static_cast<std::ptrdiff_t>(h.offsets[i] + n.dims[gv[i]]));
    auto g = map_from_projective(a, n, gv, images);
    Morphism<F> f;
    for (std::size_t w = 0; w < g.size(); ++w) {
        const auto& pi = h.m_cover.surjection[w];
        f.push_back(pi.rows() == 0 ? Matrix<F>(n.dims[w], 0) : g[w] * right_inverse(pi));
    }
    return f;
}

template <class F>
bool is_homomorphism(const Quiver& q, const Representation<F>& m, const Representation<F>& n, const Morphism<F>& f) {
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        if (!(n.maps[a] * f[arr.source] == f[arr.target] * m.maps[a])) return false;
    }
    return true;
}

struct IsoResult {
    bool isomorphic = false;
    bool probabilistic = false; ///< negative answer reached by exhausting random trials
    std::string reason;
};

inline constexpr int kIsoTrials = 8;

template <class F>
IsoResult is_isomorphic(const MonomialAlgebra& a, const Representation<F>& m, const Representation<F>& n, std::uint64_t seed) {
    if (m.dims != n.dims) return {false, false, "dimension vectors differ"};
    const auto mn = hom_space(a, m, n);
    const std::size_t nm = hom_space_dim(a, n, m);
    if (mn.dimension() != nm) return {false, false, "hom dimensions differ"};
    if (hom_space_dim(a, m, m) != hom_space_dim(a, n, n)) return {false, false, "endomorphism dimensions differ"};
    if (m.total_dimension() == 0) return {true, false, "zero modules"};
    const long bound = static_cast<long>(m.total_dimension());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    for (int trial = 0; trial < kIsoTrials; ++trial) {
        std::vector<F> y(mn.basis.rows(), F(0));
        for (std::size_t b = 0; b < mn.basis.cols(); ++b) {
            const F c = FieldTraits<F>::from_integer(coeff(rng));
            for (std::size_t r = 0; r < y.size(); ++r) y[r] += c * mn.basis(r, b);
        }
        auto f = hom_element(a, mn, n, y);
        bool invertible = true;
        for (const auto& x : f) invertible = invertible && is_invertible(x);
        if (invertible) return {true, false, "invertible homomorphism found on trial " + std::to_string(trial + 1)};
    }
    return {false, true, "no invertible homomorphism in " + std::to_string(kIsoTrials) + " random trials"};
}

} // namespace qit
