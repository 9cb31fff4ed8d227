#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "monomial_algebra.hpp"
#include "quiver.hpp"

namespace qit {

/// A right module over kQ/I as a quiver representation: a vector space per
/// vertex and a dims(target) x dims(source) matrix per arrow. The path a1 a2
/// acts as T_{a2} * T_{a1}.
template <class F = Rational>
struct Representation {
    std::vector<std::size_t> dims;
    std::vector<Matrix<F>> maps;

    std::size_t total_dimension() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
    bool is_zero() const { return total_dimension() == 0; }

    static Representation zero(const Quiver& q) {
        Representation r;
        r.dims.assign(q.vertex_count(), 0);
        for (const Arrow& a : q.arrows()) r.maps.emplace_back(0, 0), (void)a;
        return r;
    }

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// A subspace family: at each vertex, a matrix whose columns are a basis.
template <class F>
using SubspaceFamily = std::vector<Matrix<F>>;

template <class F>
void check_shape(const Quiver& q, const Representation<F>& r) {
    if (r.dims.size() != q.vertex_count() || r.maps.size() != q.arrow_count())
        throw PreconditionError("representation does not match the quiver");
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        if (r.maps[a].rows() != r.dims[arr.target] || r.maps[a].cols() != r.dims[arr.source])
            throw PreconditionError("map of arrow '" + arr.name + "' has shape " + std::to_string(r.maps[a].rows()) + "x" +
                                    std::to_string(r.maps[a].cols()) + ", expected " + std::to_string(r.dims[arr.target]) +
                                    "x" + std::to_string(r.dims[arr.source]));
    }
}

/// Matrix by which path p acts (dims(t(p)) x dims(s(p))).
template <class F>
Matrix<F> path_action(const Quiver& q, const Representation<F>& r, const Path& p) {
    Matrix<F> m = Matrix<F>::identity(r.dims[p.start]);
    for (ArrowId a : p.arrows) m = r.maps[a] * m;
    (void)q;
    return m;
}

/// Image of the subspace family under one application of the arrows:
/// at w, the span of T_a U_{s(a)} over arrows a into w.
template <class F>
SubspaceFamily<F> arrow_image(const Quiver& q, const Representation<F>& r, const SubspaceFamily<F>& u) {
    SubspaceFamily<F> out;
    for (VertexId w = 0; w < q.vertex_count(); ++w) {
        Matrix<F> gens(r.dims[w], 0);
        for (ArrowId a : q.arrows_into(w)) gens = hstack(gens, r.maps[a] * u[q.arrow(a).source]);
        out.push_back(column_space(gens));
    }
    return out;
}

template <class F>
SubspaceFamily<F> whole_space(const Representation<F>& r) {
    SubspaceFamily<F> out;
    for (auto d : r.dims) out.push_back(Matrix<F>::identity(d));
    return out;
}

/// J^0 M, J^1 M, ... until zero (the zero family is included last).
template <class F>
std::vector<SubspaceFamily<F>> radical_series(const Quiver& q, const Representation<F>& r) {
    std::vector<SubspaceFamily<F>> series{whole_space(r)};
    while (true) {
        const auto& last = series.back();
        bool zero = std::all_of(last.begin(), last.end(), [](const Matrix<F>& m) { return m.cols() == 0; });
        if (zero) break;
        auto next = arrow_image(q, r, last);
        bool same = true;
        for (std::size_t v = 0; v < next.size(); ++v) same = same && next[v].cols() == last[v].cols();
        if (same) throw PreconditionError("radical series does not terminate (representation is not nilpotent)");
        series.push_back(std::move(next));
    }
    return series;
}

/// Dimensions of J^L M / J^{L+1} M per layer L and vertex.
template <class F>
std::vector<std::vector<std::size_t>> layer_profile(const Quiver& q, const Representation<F>& r) {
    auto series = radical_series(q, r);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t L = 0; L + 1 < series.size(); ++L) {
        std::vector<std::size_t> layer;
        for (VertexId v = 0; v < q.vertex_count(); ++v) layer.push_back(series[L][v].cols() - series[L + 1][v].cols());
        out.push_back(std::move(layer));
    }
    return out;
}

/// Induced representation on an invariant subspace family.
template <class F>
Representation<F> subrepresentation(const Quiver& q, const Representation<F>& r, const SubspaceFamily<F>& u) {
    Representation<F> s;
    for (VertexId v = 0; v < q.vertex_count(); ++v) s.dims.push_back(u[v].cols());
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        s.maps.push_back(solve_in_basis(u[arr.target], r.maps[a] * u[arr.source]));
    }
    return s;
}

/// Quotient by an invariant subspace family. The complement at each vertex is
/// spanned by the first unit vectors independent of the subspace.
template <class F>
struct Quotient {
    Representation<F> rep;
    std::vector<Matrix<F>> projection; ///< per vertex: dims(quotient) x dims(r)
};

template <class F>
Quotient<F> quotient(const Quiver& q, const Representation<F>& r, const SubspaceFamily<F>& u) {
    Quotient<F> out;
    std::vector<Matrix<F>> complement;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        const std::size_t d = r.dims[v];
        auto piv = independent_columns(hstack(u[v], Matrix<F>::identity(d)));
        std::vector<std::size_t> extra;
        for (auto p : piv)
            if (p >= u[v].cols()) extra.push_back(p - u[v].cols());
        Matrix<F> c = Matrix<F>::identity(d).select_columns(extra);
        // coordinates in [U | C]; the projection keeps the C part
        Matrix<F> full = hstack(u[v], c);
        Matrix<F> coords = solve_in_basis(full, Matrix<F>::identity(d));
        out.projection.push_back(coords.row_block(u[v].cols(), c.cols()));
        out.rep.dims.push_back(c.cols());
        complement.push_back(std::move(c));
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        out.rep.maps.push_back(out.projection[arr.target] * (r.maps[a] * complement[arr.source]));
    }
    return out;
}

template <class F>
Representation<F> direct_sum(const Representation<F>& a, const Representation<F>& b) {
    Representation<F> s;
    for (std::size_t v = 0; v < a.dims.size(); ++v) s.dims.push_back(a.dims[v] + b.dims[v]);
    for (std::size_t i = 0; i < a.maps.size(); ++i) s.maps.push_back(block_diagonal(a.maps[i], b.maps[i]));
    return s;
}

template <class F>
Representation<F> direct_sum(const std::vector<Representation<F>>& parts, const Quiver& q) {
    Representation<F> s = Representation<F>::zero(q);
    for (const auto& p : parts) s = direct_sum(s, p);
    return s;
}

template <class F>
Representation<F> power(const Representation<F>& r, std::size_t n, const Quiver& q) {
    return direct_sum(std::vector<Representation<F>>(n, r), q);
}

template <class F = Rational>
Representation<F> simple_rep(const Quiver& q, VertexId v) {
    Representation<F> r = Representation<F>::zero(q);
    r.dims[v] = 1;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) r.maps[a] = Matrix<F>(r.dims[q.arrow(a).target], r.dims[q.arrow(a).source]);
    return r;
}

/// The module generated by one path-labeled basis: paths in `paths` (all
/// starting at one vertex, closed under the algebra's right action modulo the
/// dropped ones) with arrow b sending p to pb when pb is in the list, else 0.
template <class F>
Representation<F> path_span_rep(const MonomialAlgebra& a, const std::vector<Path>& paths) {
    const Quiver& q = a.quiver();
    Representation<F> r;
    r.dims.assign(q.vertex_count(), 0);
    std::map<Path, std::pair<VertexId, std::size_t>> pos;
    for (const auto& p : paths) {
        VertexId t = q.path_target(p);
        pos[p] = {t, r.dims[t]++};
    }
    for (ArrowId b = 0; b < q.arrow_count(); ++b) {
        const Arrow& arr = q.arrow(b);
        Matrix<F> m(r.dims[arr.target], r.dims[arr.source]);
        for (const auto& p : paths) {
            if (q.path_target(p) != arr.source) continue;
            Path pb = p;
            pb.arrows.push_back(b);
            auto it = pos.find(pb);
            if (it != pos.end()) m(it->second.second, pos[p].second) = F(1);
        }
        r.maps.push_back(std::move(m));
    }
    return r;
}

/// e_v A with basis the nonzero paths from v.
template <class F = Rational>
Representation<F> projective_rep(const MonomialAlgebra& a, VertexId v) {
    return path_span_rep<F>(a, a.paths_from(v));
}

/// e_v A modulo the paths of length >= len (the stable class M^{k-len}_v in a truncated algebra).
template <class F = Rational>
Representation<F> truncated_cyclic_rep(const MonomialAlgebra& a, VertexId v, std::size_t len) {
    std::vector<Path> paths;
    for (const auto& p : a.paths_from(v))
        if (p.length() < len) paths.push_back(p);
    return path_span_rep<F>(a, paths);
}

/// The right ideal pA, basis the nonzero paths pq.
template <class F = Rational>
Representation<F> path_ideal_rep(const MonomialAlgebra& a, const Path& p) {
    std::vector<Path> paths;
    for (const auto& b : a.basis()) {
        if (b.start != p.start || b.length() < p.length()) continue;
        if (std::equal(p.arrows.begin(), p.arrows.end(), b.arrows.begin())) paths.push_back(b);
    }
    if (paths.empty()) throw PreconditionError("path_ideal_rep: path is zero in the algebra");
    return path_span_rep<F>(a, paths);
}

/// Name of the first relation the representation fails, if any.
template <class F>
std::optional<std::string> relation_violation(const MonomialAlgebra& a, const Representation<F>& r) {
    const Quiver& q = a.quiver();
    check_shape(q, r);
    for (const auto& rel : a.relations())
        if (!path_action(q, r, rel).is_zero_matrix()) return q.path_name(rel);
    if (auto k = a.truncation()) {
        // J^k M is spanned by the images of paths of length k
        auto u = whole_space(r);
        for (unsigned j = 0; j < *k; ++j) u = arrow_image(q, r, u);
        for (const auto& m : u)
            if (m.cols()) return "J^" + std::to_string(*k);
    }
    return std::nullopt;
}

template <class F>
void check_module(const MonomialAlgebra& a, const Representation<F>& r) {
    if (auto bad = relation_violation(a, r)) throw PreconditionError("representation violates relation " + *bad);
}

template <class F>
struct TopAndRadical {
    std::vector<std::size_t> top_dims;
    SubspaceFamily<F> radical_basis;
    Representation<F> radical;
};

template <class F>
TopAndRadical<F> top_and_radical(const Quiver& q, const Representation<F>& r) {
    TopAndRadical<F> out;
    out.radical_basis = arrow_image(q, r, whole_space(r));
    for (VertexId v = 0; v < q.vertex_count(); ++v) out.top_dims.push_back(r.dims[v] - out.radical_basis[v].cols());
    out.radical = subrepresentation(q, r, out.radical_basis);
    return out;
}

/// Socle dimensions: vectors killed by every arrow leaving the vertex.
template <class F>
std::vector<std::size_t> socle_dims(const Quiver& q, const Representation<F>& r) {
    std::vector<std::size_t> out;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        Matrix<F> stacked(0, r.dims[v]);
        for (ArrowId a : q.arrows_from(v)) stacked = vstack(stacked, r.maps[a]);
        out.push_back(r.dims[v] - rank(stacked));
    }
    return out;
}

/// Splits a representation along the connected components of its support
/// graph (basis vectors joined when some arrow matrix entry links them). Each
/// component is a direct summand; components are not necessarily indecomposable.
template <class F>
std::vector<Representation<F>> split_components(const Quiver& q, const Representation<F>& r) {
    std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
    for (VertexId v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + r.dims[v];
    const std::size_t n = offset.back();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        for (std::size_t i = 0; i < r.dims[arr.target]; ++i)
            for (std::size_t j = 0; j < r.dims[arr.source]; ++j)
                if (!is_zero(r.maps[a](i, j))) parent[find(offset[arr.target] + i)] = find(offset[arr.source] + j);
    }
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> groups; // root -> per-vertex local indices
    std::vector<std::size_t> order;
    for (VertexId v = 0; v < q.vertex_count(); ++v)
        for (std::size_t i = 0; i < r.dims[v]; ++i) {
            std::size_t root = find(offset[v] + i);
            auto [it, fresh] = groups.try_emplace(root, std::vector<std::vector<std::size_t>>(q.vertex_count()));
            if (fresh) order.push_back(root);
            it->second[v].push_back(i);
        }
    std::vector<Representation<F>> parts;
    for (auto root : order) {
        const auto& idx = groups[root];
        Representation<F> part;
        for (VertexId v = 0; v < q.vertex_count(); ++v) part.dims.push_back(idx[v].size());
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            const Arrow& arr = q.arrow(a);
            part.maps.push_back(r.maps[a].select_rows(idx[arr.target]).select_columns(idx[arr.source]));
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

template <class To>
Representation<To> convert_rep(const Representation<Rational>& r) {
    Representation<To> out;
    out.dims = r.dims;
    for (const auto& m : r.maps) out.maps.push_back(convert_matrix<To>(m));
    return out;
}

} // namespace qit
