#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hom.hpp"
#include "representation.hpp"
#include "syzygy.hpp"

namespace qit {

enum class RepPdKind { Finite, Infinite, Unresolved };

inline std::string to_string(RepPdKind k) {
    switch (k) {
    case RepPdKind::Finite: return "finite";
    case RepPdKind::Infinite: return "infinite";
    default: return "unresolved";
    }
}

/// Projective dimension at representation level. Infinite only when a
/// nonprojective summand type reappears among the summands of its own
/// syzygies; the fingerprint lists the dimension vectors around that cycle.
struct RepPd {
    RepPdKind kind = RepPdKind::Unresolved;
    std::size_t value = 0; ///< pd when finite, the cutoff when unresolved
    std::vector<std::vector<std::size_t>> fingerprint;
};

inline constexpr std::size_t kDefaultPdCutoff = 12;

/// Summand types met while iterating syzygies, identified up to isomorphism.
/// Types are the support components of the modules (direct summands, not
/// necessarily indecomposable).
template <class F>
class SyzygyTypeGraph {
public:
    SyzygyTypeGraph(const MonomialAlgebra& a, std::uint64_t seed, std::size_t max_types = 96)
        : a_(a), seed_(seed), max_types_(max_types) {}

    /// Type indices of the nonzero components of r.
    std::vector<std::size_t> intern_components(const Representation<F>& r) {
        std::vector<std::size_t> out;
        for (auto& part : split_components(a_.quiver(), r)) {
            if (part.is_zero()) continue;
            out.push_back(intern(std::move(part)));
        }
        return out;
    }

    std::size_t intern(Representation<F> r) {
        for (std::size_t i = 0; i < types_.size(); ++i)
            if (types_[i].dims == r.dims && is_isomorphic(a_, types_[i], r, seed_ + i).isomorphic) return i;
        types_.push_back(std::move(r));
        children_.emplace_back();
        expanded_.push_back(false);
        return types_.size() - 1;
    }

    /// Expand syzygies breadth first from the roots for `depth` levels.
    void explore(const std::vector<std::size_t>& roots, std::size_t depth) {
        std::vector<std::size_t> frontier = roots;
        for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
            std::vector<std::size_t> next;
            for (std::size_t t : frontier) {
                if (expanded_[t]) continue;
                if (types_.size() >= max_types_) return;
                expanded_[t] = true;
                auto omega = syzygy_rep(a_, types_[t]);
                auto kids = intern_components(omega);
                children_[t] = kids;
                next.insert(next.end(), kids.begin(), kids.end());
            }
            frontier = std::move(next);
        }
    }

    RepPd pd(const std::vector<std::size_t>& roots, std::size_t cutoff) {
        explore(roots, cutoff);
        state_.assign(types_.size(), 0);
        memo_.assign(types_.size(), RepPd{});
        RepPd best{RepPdKind::Finite, 0, {}};
        for (std::size_t r : roots) {
            RepPd sub = visit(r);
            best = combine(best, sub);
        }
        if (best.kind == RepPdKind::Unresolved) best.value = cutoff;
        return best;
    }

    const Representation<F>& type(std::size_t i) const { return types_[i]; }
    std::size_t type_count() const { return types_.size(); }
    const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }

private:
    static RepPd combine(const RepPd& a, const RepPd& b) {
        if (a.kind == RepPdKind::Infinite) return a;
        if (b.kind == RepPdKind::Infinite) return b;
        if (a.kind == RepPdKind::Unresolved) return a;
        if (b.kind == RepPdKind::Unresolved) return b;
        return a.value >= b.value ? a : b;
    }

    RepPd visit(std::size_t t) {
        if (state_[t] == 2) return memo_[t];
        if (!expanded_[t]) return RepPd{RepPdKind::Unresolved, 0, {}};
        state_[t] = 1;
        stack_.push_back(t);
        RepPd out{RepPdKind::Finite, 0, {}};
        if (!children_[t].empty()) {
            RepPd worst{RepPdKind::Finite, 0, {}};
            for (std::size_t c : children_[t]) {
                if (state_[c] == 1) {
                    auto it = std::find(stack_.begin(), stack_.end(), c);
                    RepPd cyc{RepPdKind::Infinite, 0, {}};
                    for (; it != stack_.end(); ++it) cyc.fingerprint.push_back(types_[*it].dims);
                    worst = cyc;
                    break;
                }
                worst = combine(worst, visit(c));
                if (worst.kind == RepPdKind::Infinite) break;
            }
            out = worst;
            if (out.kind == RepPdKind::Finite) out.value += 1;
        }
        stack_.pop_back();
        state_[t] = 2;
        memo_[t] = out;
        return out;
    }

    const MonomialAlgebra& a_;
    std::uint64_t seed_;
    std::size_t max_types_;
    std::vector<Representation<F>> types_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<bool> expanded_;
    std::vector<int> state_;
    std::vector<RepPd> memo_;
    std::vector<std::size_t> stack_;
};

template <class F>
RepPd rep_pd(const MonomialAlgebra& a, const Representation<F>& m, std::uint64_t seed, std::size_t cutoff = kDefaultPdCutoff) {
    SyzygyTypeGraph<F> g(a, seed);
    auto roots = g.intern_components(m);
    return g.pd(roots, cutoff);
}

} // namespace qit
