#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "monomial_algebra.hpp"
#include "representation.hpp"
#include "stable_model.hpp"

namespace qit {

/// Smallest subrepresentation containing the given vectors (vertex, vector).
template <class F>
SubspaceFamily<F> generated_submodule(const Quiver& q, const Representation<F>& r,
                                      const std::vector<std::pair<VertexId, std::vector<F>>>& gens) {
    SubspaceFamily<F> u;
    for (VertexId v = 0; v < q.vertex_count(); ++v) u.emplace_back(r.dims[v], 0);
    for (const auto& [v, x] : gens) {
        Matrix<F> col(r.dims[v], 1);
        col.set_column(0, x);
        u[v] = hstack(u[v], col);
    }
    for (auto& m : u) m = column_space(m);
    while (true) {
        bool grew = false;
        auto img = arrow_image(q, r, u);
        for (VertexId v = 0; v < q.vertex_count(); ++v) {
            Matrix<F> joined = column_space(hstack(u[v], img[v]));
            if (joined.cols() > u[v].cols()) {
                u[v] = std::move(joined);
                grew = true;
            }
        }
        if (!grew) return u;
    }
}

/// e_v A modulo the submodule generated by a few random vectors of the radical.
template <class F = Rational, class Rng>
Representation<F> random_cyclic_quotient(const MonomialAlgebra& a, Rng& rng, std::size_t max_generators = 2) {
    const Quiver& q = a.quiver();
    std::uniform_int_distribution<VertexId> pick_vertex(0, q.vertex_count() - 1);
    const VertexId v = pick_vertex(rng);
    const auto p = projective_rep<F>(a, v);
    std::vector<std::pair<VertexId, std::vector<F>>> gens;
    std::uniform_int_distribution<std::size_t> count(0, max_generators);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const std::size_t n = count(rng);
    const auto rad = arrow_image(q, p, whole_space(p));
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId w = pick_vertex(rng);
        if (rad[w].cols() == 0) continue;
        std::vector<F> x(p.dims[w], F(0));
        for (std::size_t c = 0; c < rad[w].cols(); ++c) {
            const F t = FieldTraits<F>::from_integer(coeff(rng));
            for (std::size_t r = 0; r < x.size(); ++r) x[r] += t * rad[w](r, c);
        }
        gens.emplace_back(w, std::move(x));
    }
    return quotient(q, p, generated_submodule(q, p, gens)).rep;
}

/// Random quiver with the given vertex count and arrow count (loops and
/// multiple arrows allowed), vertices "1".."n", arrows "a1"..
template <class Rng>
Quiver random_quiver(std::size_t vertices, std::size_t arrows, Rng& rng) {
    Quiver q;
    for (std::size_t i = 1; i <= vertices; ++i) q.add_vertex(std::to_string(i));
    std::uniform_int_distribution<VertexId> pick(0, vertices - 1);
    for (std::size_t i = 1; i <= arrows; ++i) q.add_arrow("a" + std::to_string(i), pick(rng), pick(rng));
    return q;
}

} // namespace qit
