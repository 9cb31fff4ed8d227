#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "int_matrix.hpp"

namespace qit {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
    std::string name;
    VertexId source;
    VertexId target;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path as a sequence of arrow indices; the empty path at a vertex is
/// represented by `start` with no arrows.
struct Path {
    VertexId start = 0;
    std::vector<ArrowId> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Finite quiver with named vertices and arrows. Vertex and arrow order is
/// declaration order; every matrix produced from a quiver is indexed that way.
class Quiver {
public:
    Quiver() = default;

    VertexId add_vertex(const std::string& name) {
        if (name.empty()) throw PreconditionError("vertex name must be nonempty");
        if (vertex_index_.count(name)) throw PreconditionError("duplicate vertex '" + name + "'");
        vertex_index_.emplace(name, vertices_.size());
        vertices_.push_back(name);
        return vertices_.size() - 1;
    }

    ArrowId add_arrow(const std::string& name, VertexId source, VertexId target) {
        if (name.empty()) throw PreconditionError("arrow name must be nonempty");
        if (arrow_index_.count(name)) throw PreconditionError("duplicate arrow '" + name + "'");
        if (source >= vertices_.size() || target >= vertices_.size())
            throw PreconditionError("arrow '" + name + "' has an undeclared endpoint");
        arrow_index_.emplace(name, arrows_.size());
        arrows_.push_back({name, source, target});
        return arrows_.size() - 1;
    }

    ArrowId add_arrow(const std::string& name, const std::string& source, const std::string& target) {
        auto s = find_vertex(source);
        auto t = find_vertex(target);
        if (!s || !t) throw PreconditionError("arrow '" + name + "' has an undeclared endpoint");
        return add_arrow(name, *s, *t);
    }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

    std::optional<VertexId> find_vertex(const std::string& name) const {
        auto it = vertex_index_.find(name);
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<ArrowId> find_arrow(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<ArrowId> arrows_from(VertexId v) const {
        std::vector<ArrowId> out;
        for (ArrowId a = 0; a < arrows_.size(); ++a)
            if (arrows_[a].source == v) out.push_back(a);
        return out;
    }
    std::vector<ArrowId> arrows_into(VertexId v) const {
        std::vector<ArrowId> out;
        for (ArrowId a = 0; a < arrows_.size(); ++a)
            if (arrows_[a].target == v) out.push_back(a);
        return out;
    }

    VertexId path_target(const Path& p) const { return p.arrows.empty() ? p.start : arrows_[p.arrows.back()].target; }

    bool composable(const Path& p) const {
        VertexId at = p.start;
        for (ArrowId a : p.arrows) {
            if (a >= arrows_.size() || arrows_[a].source != at) return false;
            at = arrows_[a].target;
        }
        return true;
    }

    std::string path_name(const Path& p) const {
        if (p.arrows.empty()) return "e_" + vertices_[p.start];
        std::string s;
        for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? " " : "") + arrows_[p.arrows[i]].name;
        return s;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::unordered_map<std::string, ArrowId> arrow_index_;
};

/// Entry (i,j) counts arrows i -> j.
inline IntMatrix adjacency_matrix(const Quiver& q) {
    IntMatrix m(q.vertex_count(), q.vertex_count());
    for (const Arrow& a : q.arrows()) m(a.source, a.target) += 1;
    return m;
}

/// Entry (v,w) counts paths of length `length` from v to w.
inline IntMatrix path_count_matrix(const Quiver& q, unsigned length) {
    return adjacency_matrix(q).power(length);
}

/// Every ordered pair (v,w), including v = w, is joined by a path of length
/// at least one. A single vertex without arrows also counts as strongly connected.
inline bool is_strongly_connected(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;
    std::vector<std::vector<VertexId>> succ(n);
    for (const Arrow& a : q.arrows()) succ[a.source].push_back(a.target);
    for (VertexId start = 0; start < n; ++start) {
        std::vector<bool> seen(n, false);
        std::queue<VertexId> frontier;
        for (VertexId w : succ[start])
            if (!seen[w]) { seen[w] = true; frontier.push(w); }
        while (!frontier.empty()) {
            VertexId v = frontier.front();
            frontier.pop();
            for (VertexId w : succ[v])
                if (!seen[w]) { seen[w] = true; frontier.push(w); }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    }
    return true;
}

struct StructuralFlags {
    bool has_loop = false;
    std::set<VertexId> sinks;
    std::set<VertexId> sources;
};

inline StructuralFlags structural_flags(const Quiver& q) {
    StructuralFlags f;
    std::vector<std::size_t> out(q.vertex_count(), 0), in(q.vertex_count(), 0);
    for (const Arrow& a : q.arrows()) {
        if (a.source == a.target) f.has_loop = true;
        ++out[a.source];
        ++in[a.target];
    }
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        if (out[v] == 0) f.sinks.insert(v);
        if (in[v] == 0) f.sources.insert(v);
    }
    return f;
}

/// True when the quiver is a single oriented cycle C^n (n >= 1).
inline bool is_oriented_cycle(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    if (n == 0 || q.arrow_count() != n) return false;
    std::vector<std::size_t> out(n, 0), in(n, 0);
    for (const Arrow& a : q.arrows()) { ++out[a.source]; ++in[a.target]; }
    for (VertexId v = 0; v < n; ++v)
        if (out[v] != 1 || in[v] != 1) return false;
    return is_strongly_connected(q);
}

/// The oriented cycle 1 -> 2 -> ... -> n -> 1 with arrows a1..an.
inline Quiver cycle_quiver(std::size_t n) {
    if (n == 0) throw PreconditionError("cycle_quiver: n must be at least 1");
    Quiver q;
    for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) q.add_arrow("a" + std::to_string(i + 1), i, (i + 1) % n);
    return q;
}

} // namespace qit
