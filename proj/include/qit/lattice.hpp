#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "error.hpp"
#include "int_matrix.hpp"

namespace qit {

namespace detail {

// Row-style Hermite normal form in place; returns the number of nonzero rows,
// which are moved to the front. Pivots are positive, entries above a pivot
// are reduced into [0, pivot).
inline std::size_t hermite_rows(std::vector<IntVector>& rows, std::size_t width) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (sgn(rows[r][col]) == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool cleared = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (sgn(rows[r][col]) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                for (std::size_t c = col; c < width; ++c) rows[r][c] -= q * rows[pivot_row][c];
                if (sgn(rows[r][col]) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (sgn(rows[pivot_row][col]) == 0) continue;
        if (sgn(rows[pivot_row][col]) < 0)
            for (std::size_t c = col; c < width; ++c) rows[pivot_row][c] = -rows[pivot_row][c];
        const Integer& p = rows[pivot_row][col];
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), p.get_mpz_t());
            if (sgn(q) != 0)
                for (std::size_t c = col; c < width; ++c) rows[r][c] -= q * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace detail

/// Finitely generated subgroup of Z^n. The canonical basis is the nonzero part
/// of the row Hermite normal form of the generators and is computed eagerly.
class Lattice {
public:
    explicit Lattice(std::size_t ambient_rank = 0) : ambient_(ambient_rank) {}

    Lattice(std::size_t ambient_rank, std::vector<IntVector> generators) : ambient_(ambient_rank) {
        for (const auto& g : generators)
            if (g.size() != ambient_) throw PreconditionError("Lattice: generator has wrong length");
        basis_ = std::move(generators);
        std::size_t r = detail::hermite_rows(basis_, ambient_);
        basis_.resize(r);
    }

    static Lattice full(std::size_t n) {
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        return {n, std::move(gens)};
    }

    /// Subgroup generated by the standard basis vectors e_i, i in `coords`.
    static Lattice coordinate(std::size_t n, const std::set<std::size_t>& coords) {
        std::vector<IntVector> gens;
        for (std::size_t i : coords) {
            if (i >= n) throw PreconditionError("Lattice::coordinate: index out of range");
            IntVector e(n);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        return {n, std::move(gens)};
    }

    std::size_t ambient_rank() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<IntVector>& basis() const noexcept { return basis_; }

    bool contains(const IntVector& v) const {
        std::vector<IntVector> rows = basis_;
        rows.push_back(v);
        Lattice extended(ambient_, std::move(rows));
        return extended.basis_ == basis_;
    }

    bool contains(const Lattice& other) const {
        std::vector<IntVector> rows = basis_;
        rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
        Lattice joined(ambient_, std::move(rows));
        return joined.basis_ == basis_;
    }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<IntVector> basis_;
};

inline std::size_t lattice_rank(const Lattice& x) { return x.rank(); }

/// The lattice generated by l*g over the generators g of x.
inline Lattice image_lattice(const IntMatrix& l, const Lattice& x) {
    if (l.cols() != x.ambient_rank()) throw PreconditionError("image_lattice: dimension mismatch");
    std::vector<IntVector> gens;
    gens.reserve(x.rank());
    for (const auto& g : x.basis()) gens.push_back(l.apply(g));
    return {l.rows(), std::move(gens)};
}

/// Ranks of x, l x, l^2 x, ... up to and including index `steps`.
inline std::vector<std::size_t> image_rank_sequence(const IntMatrix& l, const Lattice& x, std::size_t steps) {
    std::vector<std::size_t> ranks{x.rank()};
    Lattice current = x;
    for (std::size_t m = 0; m < steps; ++m) {
        current = image_lattice(l, current);
        ranks.push_back(current.rank());
    }
    return ranks;
}

/// Fitting index: the least k such that l is injective on l^m(x) for every
/// m >= k. Over a free abelian group injectivity on Y is rank(lY) = rank(Y),
/// and the rank sequence is constant from index ambient_rank on, so the
/// answer is one past the last strict rank drop.
inline std::size_t eta_fitting(const IntMatrix& l, const Lattice& x) {
    if (!l.square()) throw PreconditionError("eta_fitting: matrix is not square");
    if (l.cols() != x.ambient_rank()) throw PreconditionError("eta_fitting: dimension mismatch");
    auto ranks = image_rank_sequence(l, x, x.ambient_rank() + 1);
    std::size_t eta = 0;
    for (std::size_t m = 0; m + 1 < ranks.size(); ++m)
        if (ranks[m + 1] < ranks[m]) eta = m + 1;
    return eta;
}

/// Matrix of the endomorphism induced on Z^n / <e_i : i in d_coords>. Requires
/// l(D) inside D, i.e. every column indexed by d_coords is supported in d_coords.
inline IntMatrix project_quotient(const IntMatrix& l, const std::set<std::size_t>& d_coords) {
    if (!l.square()) throw PreconditionError("project_quotient: matrix is not square");
    for (std::size_t c : d_coords) {
        if (c >= l.cols()) throw PreconditionError("project_quotient: coordinate out of range");
        for (std::size_t r = 0; r < l.rows(); ++r)
            if (sgn(l(r, c)) != 0 && !d_coords.count(r))
                throw PreconditionError("project_quotient: L(D) not contained in D (column " + std::to_string(c) +
                                        " has entry in row " + std::to_string(r) + ")");
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < l.rows(); ++i)
        if (!d_coords.count(i)) keep.push_back(i);
    IntMatrix q(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) q(r, c) = l(keep[r], keep[c]);
    return q;
}

/// Image of x in the quotient by the coordinate subgroup (coordinates deleted).
inline Lattice project_lattice(const Lattice& x, const std::set<std::size_t>& d_coords) {
    std::vector<IntVector> gens;
    for (const auto& g : x.basis()) {
        IntVector h;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!d_coords.count(i)) h.push_back(g[i]);
        gens.push_back(std::move(h));
    }
    return {x.ambient_rank() - d_coords.size(), std::move(gens)};
}

} // namespace qit
