#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial_algebra.hpp"
#include "stable_model.hpp"

namespace qit {

/// Two-sided ideal generated by paths.
struct MonomialIdeal {
    std::vector<Path> generators;
};

inline void check_ideal(const MonomialAlgebra& a, const MonomialIdeal& i) {
    for (const auto& g : i.generators)
        if (!a.is_nonzero(g)) throw PreconditionError("ideal generator " + a.quiver().path_name(g) + " is zero in the algebra");
}

namespace detail {

inline bool has_factor(const Path& p, const Path& g, const Quiver& q) {
    if (g.length() == 0) {
        if (p.start == g.start) return true;
        for (ArrowId a : p.arrows)
            if (q.arrow(a).target == g.start) return true;
        return false;
    }
    if (g.length() > p.length()) return false;
    for (std::size_t s = 0; s + g.length() <= p.length(); ++s)
        if (std::equal(g.arrows.begin(), g.arrows.end(), p.arrows.begin() + static_cast<std::ptrdiff_t>(s))) return true;
    return false;
}

inline Path subpath(const Path& p, const Quiver& q, std::size_t from, std::size_t to) {
    Path out;
    out.start = from == 0 ? p.start : q.arrow(p.arrows[from - 1]).target;
    out.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(from), p.arrows.begin() + static_cast<std::ptrdiff_t>(to));
    return out;
}

} // namespace detail

/// Whether the path lies in the ideal (some generator is a factor).
inline bool in_ideal(const MonomialAlgebra& a, const MonomialIdeal& i, const Path& p) {
    for (const auto& g : i.generators)
        if (detail::has_factor(p, g, a.quiver())) return true;
    return false;
}

struct IdealConditions {
    bool ji_zero = false;
    bool rad_i_zero = false;
    bool rad_power_zero = false;
    std::string ji_witness;  ///< a nonzero path of JI, if any
    std::string rad_witness; ///< a nonzero path of rad(A) I, if any
};

/// JI = 0, rad(A) I = 0 and rad^{2n+1}(A) = 0, read off the path basis: a
/// nonzero path lies in JI iff it splits as (path of J)(path of I).
inline IdealConditions ideal_conditions(const MonomialAlgebra& a, const MonomialIdeal& i, const MonomialIdeal& j, std::size_t n) {
    if (n < 1) throw PreconditionError("ideal_conditions: n must be at least 1");
    check_ideal(a, i);
    check_ideal(a, j);
    const Quiver& q = a.quiver();
    IdealConditions out;
    out.ji_zero = true;
    out.rad_i_zero = true;
    for (const auto& p : a.basis()) {
        for (std::size_t s = 0; s <= p.length(); ++s) {
            const Path head = detail::subpath(p, q, 0, s);
            const Path tail = detail::subpath(p, q, s, p.length());
            if (!in_ideal(a, i, tail)) continue;
            if (out.ji_zero && in_ideal(a, j, head)) {
                out.ji_zero = false;
                out.ji_witness = q.path_name(p);
            }
            if (out.rad_i_zero && s >= 1) {
                out.rad_i_zero = false;
                out.rad_witness = q.path_name(p);
            }
        }
    }
    out.rad_power_zero = a.max_nonzero_length() < 2 * n + 1;
    return out;
}

struct CaseVerdict {
    bool applicable = false;
    TrivialVerdict verdict = TrivialVerdict::Inconclusive;
    std::vector<std::string> failed; ///< hypotheses that do not hold
};

struct Prop54Report {
    InvertibilityReading reading = InvertibilityReading::Rational;
    StructuralReport structure;
    CaseVerdict case1; ///< rad-square-zero, strongly connected, singular, not selfinjective
    CaseVerdict case2; ///< truncated, strongly connected, with a loop, singular
};

inline Prop54Report criteria_prop_5_4(const TruncatedAlgebra& a, InvertibilityReading reading = InvertibilityReading::Rational) {
    Prop54Report r;
    r.reading = reading;
    r.structure = structural_report(a);
    const auto& s = r.structure;
    auto decide = [](CaseVerdict& c) {
        c.applicable = c.failed.empty();
        c.verdict = c.applicable ? TrivialVerdict::OnlyTrivial : TrivialVerdict::Inconclusive;
    };
    if (a.k() != 2) r.case1.failed.push_back("k = 2");
    if (!s.strongly_connected) r.case1.failed.push_back("strongly connected");
    if (!s.singular(reading)) r.case1.failed.push_back("adjacency not invertible");
    if (s.selfinjective == Selfinjectivity::Selfinjective) r.case1.failed.push_back("not selfinjective");
    if (s.selfinjective == Selfinjectivity::Undetermined) r.case1.failed.push_back("not selfinjective (undetermined)");
    decide(r.case1);
    if (!s.strongly_connected) r.case2.failed.push_back("strongly connected");
    if (!s.has_loop) r.case2.failed.push_back("has a loop");
    if (!s.singular(reading)) r.case2.failed.push_back("adjacency not invertible");
    decide(r.case2);
    return r;
}

} // namespace qit
