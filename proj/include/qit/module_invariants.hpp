#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hom.hpp"
#include "lattice.hpp"
#include "representation.hpp"
#include "skeleton.hpp"
#include "stable_model.hpp"

namespace qit {

/// A module over a truncated algebra, seen in K_0: support components that
/// match a stable class are counted as that class; any other nonprojective
/// component becomes an extra generator whose syzygy is read off a skeleton.
/// Extra components are assumed indecomposable.
struct ModuleClasses {
    ClassVector classes;
    std::vector<ClassVector> extra_syzygies;
    std::vector<std::vector<std::size_t>> extra_dims;
    std::size_t projective_components = 0;
    bool probabilistic = false;
};

inline ModuleClasses module_classes(const StableModel& model, const Representation<Rational>& m, std::uint64_t seed) {
    const TruncatedAlgebra& a = model.algebra();
    const auto mono = a.as_monomial();
    check_module(mono, m);
    ModuleClasses out;
    std::vector<std::pair<StableClass, Representation<Rational>>> reps;
    for (const auto& info : model.classes()) reps.emplace_back(info.cls, class_rep<Rational>(a, info.cls));
    std::size_t index = 0;
    for (const auto& part : split_components(a.quiver(), m)) {
        ++index;
        if (part.is_zero()) continue;
        if (is_projective_rep(mono, part)) {
            ++out.projective_components;
            continue;
        }
        bool matched = false;
        for (const auto& [cls, rep] : reps) {
            if (rep.dims != part.dims) continue;
            auto iso = is_isomorphic(mono, rep, part, seed + index);
            if (iso.isomorphic) {
                out.classes[cls] += 1;
                matched = true;
                break;
            }
            out.probabilistic = out.probabilistic || iso.probabilistic;
        }
        if (matched) continue;
        ClassVector syz;
        for (const auto& [cls, mult] : skeleton_decompose(a, part))
            if (!model.is_projective(cls)) syz[cls] += mult;
        out.extra_syzygies.push_back(std::move(syz));
        out.extra_dims.push_back(part.dims);
    }
    return out;
}

namespace detail {

inline std::set<StableClass> support(const ClassVector& x) {
    std::set<StableClass> s;
    for (const auto& [c, m] : x)
        if (m) s.insert(c);
    return s;
}

} // namespace detail

/// phi_[D] of classes plus extra generators (extras sit outside D and nothing maps onto them).
inline std::size_t phi_with_extras(const StableModel& model, const ClassVector& x, const std::vector<ClassVector>& extras,
                                   const SubcategorySpec& d = {}) {
    if (extras.empty()) return model.phi(x, d);
    model.phi({}, d); // validates d
    const std::size_t n = model.k0_basis().size();
    const std::size_t e = extras.size();
    IntMatrix l(n + e, n + e);
    const IntMatrix& base = model.syzygy_matrix();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) l(r, c) = base(r, c);
    for (std::size_t j = 0; j < e; ++j)
        for (const auto& [cls, mult] : extras[j])
            if (auto idx = model.k0_index(cls)) l(*idx, n + j) += mult;
    std::set<std::size_t> d_coords, x_coords;
    for (const auto& c : d.classes)
        if (auto idx = model.k0_index(c)) d_coords.insert(*idx);
    for (const auto& [c, mult] : x)
        if (mult)
            if (auto idx = model.k0_index(c)) x_coords.insert(*idx);
    for (std::size_t j = 0; j < e; ++j) x_coords.insert(n + j);
    const IntMatrix reduced = project_quotient(l, d_coords);
    return eta_fitting(reduced, project_lattice(Lattice::coordinate(n + e, x_coords), d_coords));
}

/// Projective dimension of an extra generator: one more than its syzygy's.
inline PdResult extra_pd(const StableModel& model, const ClassVector& syzygy) {
    std::size_t best = 0;
    for (const auto& [c, m] : syzygy) {
        auto pd = model.pd_class(c);
        if (!pd.finite) return pd;
        best = std::max(best, pd.value);
    }
    return PdResult::Finite(best + 1);
}

struct ModuleInvariants {
    std::size_t phi = 0;
    std::size_t psi = 0;
    std::size_t gamma = 0;
    PdResult pd;
};

inline ModuleInvariants module_invariants(const StableModel& model, const ModuleClasses& mc, const SubcategorySpec& d = {}) {
    ModuleInvariants out;
    out.phi = phi_with_extras(model, mc.classes, mc.extra_syzygies, d);

    // psi: findim of add(Omega^phi(M))
    std::size_t findim = 0;
    if (out.phi == 0) {
        findim = model.findim_add(mc.classes);
        for (const auto& s : mc.extra_syzygies) {
            auto pd = extra_pd(model, s);
            if (pd.finite) findim = std::max(findim, pd.value);
        }
    } else {
        ClassVector shifted = model.syzygy_power(mc.classes, out.phi);
        for (const auto& s : mc.extra_syzygies)
            for (const auto& [c, m] : model.syzygy_power(s, out.phi - 1)) shifted[c] += m;
        findim = model.findim_add(shifted);
    }
    out.psi = out.phi + findim;

    std::set<StableClass> seed = detail::support(mc.classes);
    for (const auto& s : mc.extra_syzygies)
        for (const auto& c : detail::support(s)) seed.insert(c);
    out.gamma = phi_with_extras(model, StableModel::as_vector(model.syzygy_closure(seed)), mc.extra_syzygies);

    out.pd = PdResult::Finite(0);
    auto worse = [&](const PdResult& p) {
        if (!out.pd.finite) return;
        if (!p.finite || p.value > out.pd.value) out.pd = p;
    };
    for (const auto& [c, m] : mc.classes)
        if (m) worse(model.pd_class(c));
    for (const auto& s : mc.extra_syzygies) worse(extra_pd(model, s));
    return out;
}

} // namespace qit
