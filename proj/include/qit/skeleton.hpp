#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "representation.hpp"
#include "stable_model.hpp"
#include "syzygy.hpp"

namespace qit {

/// A skeleton element: top generator i extended by a path, with its vector.
template <class F>
struct SkeletonPath {
    std::size_t generator = 0;
    Path path;
    std::vector<F> vector;
};

template <class F>
struct Skeleton {
    std::vector<std::vector<SkeletonPath<F>>> layers;
    std::vector<SkeletonPath<F>> critical; ///< one-arrow extensions outside the skeleton, length < k
};

/// Greedy layered skeleton: layer 0 is the cover's top basis; layer L+1 keeps
/// the extensions q*alpha (layer-L order, arrows in declaration order) that
/// stay independent modulo J^{L+2} M.
template <class F>
Skeleton<F> build_skeleton(const TruncatedAlgebra& a, const Representation<F>& r) {
    const Quiver& q = a.quiver();
    const MonomialAlgebra mono = a.as_monomial();
    auto cover = projective_cover_and_syzygy(mono, r);
    auto series = radical_series(q, r);
    auto below = [&](std::size_t layer, VertexId w) {
        return layer < series.size() ? series[layer][w] : Matrix<F>(r.dims[w], 0);
    };
    Skeleton<F> sk;
    std::vector<SkeletonPath<F>> layer;
    for (std::size_t i = 0; i < cover.generators.size(); ++i)
        layer.push_back({i, Path{cover.generator_vertices[i], {}}, cover.generators[i]});
    std::size_t depth = 0;
    while (!layer.empty()) {
        std::vector<SkeletonPath<F>> next;
        std::vector<Matrix<F>> spanned;
        for (VertexId w = 0; w < q.vertex_count(); ++w) spanned.push_back(below(depth + 2, w));
        for (const auto& s : layer) {
            for (ArrowId alpha : q.arrows_from(q.path_target(s.path))) {
                SkeletonPath<F> ext{s.generator, s.path, r.maps[alpha].apply(s.vector)};
                ext.path.arrows.push_back(alpha);
                const VertexId w = q.arrow(alpha).target;
                Matrix<F> col(r.dims[w], 1);
                col.set_column(0, ext.vector);
                Matrix<F> trial = hstack(spanned[w], col);
                if (rank(trial) > spanned[w].cols()) {
                    spanned[w] = std::move(trial);
                    next.push_back(std::move(ext));
                } else if (ext.path.length() < a.k()) {
                    sk.critical.push_back(std::move(ext));
                }
            }
        }
        sk.layers.push_back(std::move(layer));
        layer = std::move(next);
        ++depth;
    }
    return sk;
}

/// Omega(M) as the multiset of classes rho A over the critical paths rho of a
/// skeleton (projective classes included). Cross-checked against the kernel
/// dimension of the projective cover.
template <class F>
ClassVector skeleton_decompose(const TruncatedAlgebra& a, const Representation<F>& r) {
    const StableModel model(a);
    const auto sk = build_skeleton(a, r);
    ClassVector out;
    for (const auto& c : sk.critical) {
        StableClass cls{a.quiver().path_target(c.path), static_cast<unsigned>(c.path.length())};
        out[cls] += 1;
    }
    std::size_t predicted = 0;
    for (const auto& [cls, mult] : out) predicted += mult * model.class_dimension(cls);
    auto cover = projective_cover_and_syzygy(a.as_monomial(), r);
    const std::size_t kernel = cover.syzygy.total_dimension();
    if (predicted != kernel)
        throw ConsistencyError("skeleton prediction has dimension " + std::to_string(predicted) + " but the syzygy has dimension " +
                               std::to_string(kernel));
    return out;
}

/// Representation of the stable class M^l_v: e_v A modulo paths of length >= k - l.
template <class F = Rational>
Representation<F> class_rep(const TruncatedAlgebra& a, const StableClass& c) {
    if (c.level < 1 || c.level >= a.k()) throw PreconditionError("class level out of range");
    return truncated_cyclic_rep<F>(a.as_monomial(), c.vertex, a.k() - c.level);
}

/// Direct sum of the class representations with multiplicities.
template <class F = Rational>
Representation<F> class_vector_rep(const TruncatedAlgebra& a, const ClassVector& x) {
    Representation<F> sum = Representation<F>::zero(a.quiver());
    for (const auto& [c, mult] : x)
        for (unsigned long i = 0; i < mult; ++i) sum = direct_sum(sum, class_rep<F>(a, c));
    return sum;
}

} // namespace qit
