#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "quiver.hpp"

namespace qit {

/// kQ/I with I generated by paths: an explicit list of monomial relations
/// (each of length >= 2), optionally together with all paths of length k
/// (the truncation J^k). The nonzero paths form a finite basis, enumerated
/// and cached at construction.
class MonomialAlgebra {
public:
    MonomialAlgebra() = default;

    MonomialAlgebra(Quiver quiver, std::vector<Path> relations, std::optional<unsigned> truncation = std::nullopt)
        : quiver_(std::move(quiver)), relations_(std::move(relations)), truncation_(truncation) {
        if (truncation_ && *truncation_ < 1) throw PreconditionError("truncation exponent must be positive");
        for (const auto& r : relations_) {
            if (r.length() < 2) throw PreconditionError("relation '" + quiver_.path_name(r) + "' has length < 2");
            if (!quiver_.composable(r)) throw PreconditionError("relation is not a composable path");
            relation_set_.insert(r.arrows);
            max_relation_ = std::max(max_relation_, r.length());
        }
        if (!is_finite_dimensional())
            throw PreconditionError("monomial algebra is infinite dimensional (nonzero paths of unbounded length)");
        enumerate_basis();
    }

    static MonomialAlgebra truncated(Quiver quiver, unsigned k) { return {std::move(quiver), {}, k}; }

    const Quiver& quiver() const noexcept { return quiver_; }
    const std::vector<Path>& relations() const noexcept { return relations_; }
    std::optional<unsigned> truncation() const noexcept { return truncation_; }

    /// kQ/J^k with no further relations.
    bool is_truncated() const noexcept { return truncation_.has_value() && relations_.empty(); }

    /// Path basis of the algebra: every nonzero path, grouped by start vertex
    /// and then ordered by length and arrow sequence.
    const std::vector<Path>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    std::optional<std::size_t> basis_index(const Path& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool is_nonzero(const Path& p) const {
        if (!quiver_.composable(p)) return false;
        if (truncation_ && p.length() >= *truncation_) return false;
        for (std::size_t i = 0; i < p.arrows.size(); ++i)
            for (std::size_t len = 2; len <= max_relation_ && i + len <= p.arrows.size(); ++len)
                if (relation_set_.count(std::vector<ArrowId>(p.arrows.begin() + i, p.arrows.begin() + i + len)))
                    return false;
        return true;
    }

    /// Paths from v in basis order (the basis of e_v A).
    std::vector<Path> paths_from(VertexId v) const {
        std::vector<Path> out;
        for (const auto& p : basis_)
            if (p.start == v) out.push_back(p);
        return out;
    }

    std::size_t max_nonzero_length() const {
        std::size_t m = 0;
        for (const auto& p : basis_) m = std::max(m, p.length());
        return m;
    }

    /// Relations plus every length-k path when truncated, as an explicit list.
    std::vector<Path> explicit_relations() const {
        std::vector<Path> out = relations_;
        if (!truncation_) return out;
        const unsigned k = *truncation_;
        if (k < 2) throw PreconditionError("explicit_relations: truncation below 2 kills arrows");
        std::vector<Path> layer;
        for (VertexId v = 0; v < quiver_.vertex_count(); ++v) layer.push_back({v, {}});
        for (unsigned len = 0; len < k; ++len) {
            std::vector<Path> next;
            for (const auto& p : layer)
                for (ArrowId a : quiver_.arrows_from(quiver_.path_target(p))) {
                    Path q = p;
                    q.arrows.push_back(a);
                    next.push_back(std::move(q));
                }
            layer = std::move(next);
        }
        for (auto& p : layer)
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        return out;
    }

private:
    bool is_finite_dimensional() const {
        if (truncation_) return true;
        const std::size_t state_len = max_relation_ == 0 ? 0 : max_relation_ - 1;
        // States: nonzero paths of length state_len; an edge appends an arrow
        // and drops the first arrow. A cycle means arbitrarily long nonzero paths.
        std::vector<Path> states;
        std::vector<Path> layer;
        for (VertexId v = 0; v < quiver_.vertex_count(); ++v) layer.push_back({v, {}});
        for (std::size_t len = 0; len < state_len; ++len) {
            std::vector<Path> next;
            for (const auto& p : layer)
                for (ArrowId a : quiver_.arrows_from(quiver_.path_target(p))) {
                    Path q = p;
                    q.arrows.push_back(a);
                    if (is_nonzero(q)) next.push_back(std::move(q));
                }
            layer = std::move(next);
        }
        states = layer;
        auto key = [](const Path& p) { return std::make_pair(p.start, p.arrows); };
        std::map<std::pair<VertexId, std::vector<ArrowId>>, std::size_t> id;
        for (std::size_t i = 0; i < states.size(); ++i) id[key(states[i])] = i;
        std::vector<std::vector<std::size_t>> succ(states.size());
        for (std::size_t i = 0; i < states.size(); ++i)
            for (ArrowId a : quiver_.arrows_from(quiver_.path_target(states[i]))) {
                Path q = states[i];
                q.arrows.push_back(a);
                if (!is_nonzero(q)) continue;
                Path s;
                if (state_len == 0) {
                    s.start = quiver_.arrow(a).target;
                } else {
                    s.arrows.assign(q.arrows.begin() + 1, q.arrows.end());
                    s.start = quiver_.arrow(s.arrows.front()).source;
                }
                auto it = id.find(key(s));
                if (it != id.end()) succ[i].push_back(it->second);
            }
        // Iterative DFS cycle detection.
        std::vector<int> color(states.size(), 0);
        for (std::size_t root = 0; root < states.size(); ++root) {
            if (color[root]) continue;
            std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
            color[root] = 1;
            while (!stack.empty()) {
                auto& [node, next] = stack.back();
                if (next < succ[node].size()) {
                    std::size_t w = succ[node][next++];
                    if (color[w] == 1) return false;
                    if (color[w] == 0) {
                        color[w] = 1;
                        stack.push_back({w, 0});
                    }
                } else {
                    color[node] = 2;
                    stack.pop_back();
                }
            }
        }
        return true;
    }

    void enumerate_basis() {
        for (VertexId v = 0; v < quiver_.vertex_count(); ++v) {
            std::vector<Path> layer{{v, {}}};
            while (!layer.empty()) {
                std::vector<Path> next;
                for (const auto& p : layer) {
                    index_.emplace(p, basis_.size());
                    basis_.push_back(p);
                    for (ArrowId a : quiver_.arrows_from(quiver_.path_target(p))) {
                        Path q = p;
                        q.arrows.push_back(a);
                        if (extension_nonzero(q)) next.push_back(std::move(q));
                    }
                }
                layer = std::move(next);
            }
        }
    }

    // p is a one-arrow extension of a nonzero path, so only suffixes can be relations.
    bool extension_nonzero(const Path& p) const {
        if (truncation_ && p.length() >= *truncation_) return false;
        for (std::size_t len = 2; len <= max_relation_ && len <= p.arrows.size(); ++len)
            if (relation_set_.count(std::vector<ArrowId>(p.arrows.end() - len, p.arrows.end()))) return false;
        return true;
    }

    Quiver quiver_;
    std::vector<Path> relations_;
    std::optional<unsigned> truncation_;
    std::set<std::vector<ArrowId>> relation_set_;
    std::size_t max_relation_ = 0;
    std::vector<Path> basis_;
    std::map<Path, std::size_t> index_;
};

} // namespace qit
