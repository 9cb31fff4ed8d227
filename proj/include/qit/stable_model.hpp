#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "int_matrix.hpp"
#include "lattice.hpp"
#include "monomial_algebra.hpp"
#include "quiver.hpp"

namespace qit {

/// kQ/J^k, k >= 2.
class TruncatedAlgebra {
public:
    TruncatedAlgebra(Quiver quiver, unsigned k) : quiver_(std::move(quiver)), k_(k) {
        if (k_ < 2) throw PreconditionError("truncated path algebra needs k >= 2 (got " + std::to_string(k) + ")");
    }

    const Quiver& quiver() const noexcept { return quiver_; }
    unsigned k() const noexcept { return k_; }

    MonomialAlgebra as_monomial() const { return MonomialAlgebra::truncated(quiver_, k_); }

    friend bool operator==(const TruncatedAlgebra& a, const TruncatedAlgebra& b) {
        return a.k_ == b.k_ && a.quiver_ == b.quiver_;
    }

private:
    Quiver quiver_;
    unsigned k_;
};

/// The class M^l_v: e_v A modulo the paths of length >= k - l (top S_v).
struct StableClass {
    VertexId vertex = 0;
    unsigned level = 1;

    friend auto operator<=>(const StableClass&, const StableClass&) = default;
};

/// Multiset of stable classes; the class of a direct sum in K_0 modulo projectives.
using ClassVector = std::map<StableClass, unsigned long>;

struct ClassInfo {
    StableClass cls;
    bool realizable = false; ///< some path of length `level` ends at the vertex
    bool projective = false; ///< no path of length k - level starts at the vertex
};

/// Syzygy of a class, split into the K_0 part and the projective summands.
struct ClassSyzygy {
    ClassVector nonprojective;
    ClassVector projective;
};

/// Projective dimension: finite, or infinite with a syzygy cycle as witness.
struct PdResult {
    bool finite = true;
    std::size_t value = 0;
    std::vector<StableClass> cycle_witness;

    static PdResult Finite(std::size_t n) { return {true, n, {}}; }
    static PdResult Infinite(std::vector<StableClass> cycle) { return {false, 0, std::move(cycle)}; }
};

struct SubcategorySpec {
    std::set<StableClass> classes;
    bool validated_0IT = false;
};

enum class InvertibilityReading { Rational, Integer };

enum class Selfinjectivity { Selfinjective, NotSelfinjective, Undetermined };

inline std::string to_string(Selfinjectivity s) {
    switch (s) {
    case Selfinjectivity::Selfinjective: return "selfinjective";
    case Selfinjectivity::NotSelfinjective: return "not_selfinjective";
    default: return "undetermined";
    }
}

/// Structural data consumed by the trivial-0-IT criteria.
struct StructuralReport {
    bool strongly_connected = false;
    bool has_loop = false;
    Integer adjacency_determinant = 0;
    bool singular_rational = false; ///< det == 0
    bool singular_integer = false;  ///< det not in {1, -1}
    Selfinjectivity selfinjective = Selfinjectivity::Undetermined;

    bool singular(InvertibilityReading r) const {
        return r == InvertibilityReading::Rational ? singular_rational : singular_integer;
    }
};

enum class TrivialVerdict { OnlyTrivial, NontrivialWitness, Inconclusive };

inline std::string to_string(TrivialVerdict v) {
    switch (v) {
    case TrivialVerdict::OnlyTrivial: return "OnlyTrivial";
    case TrivialVerdict::NontrivialWitness: return "NontrivialWitness";
    default: return "Inconclusive";
    }
}

struct TrivialClassification {
    TrivialVerdict verdict = TrivialVerdict::Inconclusive;
    std::optional<SubcategorySpec> witness;
    std::map<StableClass, std::size_t> gamma_values; ///< gamma of every nonprojective class checked
    StructuralReport structure;
};

struct ValidationResult {
    bool ok = false;
    std::string reason;
};

struct LITCertificate {
    std::size_t n = 1;
    ClassVector v_classes; ///< summands of V
    SubcategorySpec d;
    std::size_t findim_bound = 0; ///< psi_[D](V) + n + 1
};

/// Decide selfinjectivity of kQ/J^k where the socle argument is conclusive:
/// oriented cycles (and arrowless quivers) are selfinjective; a non-simple
/// socle of some indecomposable projective rules it out.
inline Selfinjectivity truncated_selfinjectivity(const TruncatedAlgebra& a) {
    const Quiver& q = a.quiver();
    if (q.arrow_count() == 0 || is_oriented_cycle(q)) return Selfinjectivity::Selfinjective;
    const auto flags = structural_flags(q);
    const unsigned k = a.k();
    std::vector<IntMatrix> powers;
    for (unsigned j = 0; j < k; ++j) powers.push_back(path_count_matrix(q, j));
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        // right-maximal paths from v: length k-1, or shorter ending at a sink
        Integer right = powers[k - 1].row_sum(v);
        Integer left = powers[k - 1].column_sum(v);
        for (unsigned j = 0; j + 1 < k; ++j) {
            for (VertexId s : flags.sinks) right += powers[j](v, s);
            for (VertexId s : flags.sources) left += powers[j](s, v);
        }
        if (right != 1 || left != 1) return Selfinjectivity::NotSelfinjective;
    }
    return Selfinjectivity::Undetermined;
}

inline StructuralReport structural_report(const TruncatedAlgebra& a) {
    StructuralReport r;
    r.strongly_connected = is_strongly_connected(a.quiver());
    r.has_loop = structural_flags(a.quiver()).has_loop;
    r.adjacency_determinant = adjacency_matrix(a.quiver()).determinant();
    r.singular_rational = sgn(r.adjacency_determinant) == 0;
    r.singular_integer = abs(r.adjacency_determinant) != 1;
    r.selfinjective = truncated_selfinjectivity(a);
    return r;
}

/// Symbolic syzygy calculus on the stable classes of a truncated path algebra.
/// Everything is computed eagerly at construction; the object is immutable
/// afterwards and can be shared between threads.
class StableModel {
public:
    explicit StableModel(TruncatedAlgebra algebra) : algebra_(std::move(algebra)) {
        const Quiver& q = algebra_.quiver();
        const unsigned k = algebra_.k();
        for (unsigned j = 0; j <= k; ++j) powers_.push_back(path_count_matrix(q, j));
        for (VertexId v = 0; v < q.vertex_count(); ++v)
            for (unsigned l = 1; l < k; ++l) {
                ClassInfo info;
                info.cls = {v, l};
                info.realizable = sgn(powers_[l].column_sum(v)) > 0;
                info.projective = sgn(powers_[k - l].row_sum(v)) == 0;
                position_[info.cls] = classes_.size();
                classes_.push_back(info);
                if (!info.projective) {
                    k0_index_[info.cls] = k0_basis_.size();
                    k0_basis_.push_back(info.cls);
                }
            }
        syzygy_matrix_ = IntMatrix(k0_basis_.size(), k0_basis_.size());
        for (std::size_t c = 0; c < k0_basis_.size(); ++c)
            for (const auto& [cls, mult] : syzygy_class(k0_basis_[c]).nonprojective)
                syzygy_matrix_(k0_index_.at(cls), c) = mult;
        compute_pd();
    }

    const TruncatedAlgebra& algebra() const noexcept { return algebra_; }

    /// All (v, l), 1 <= l <= k-1, vertex-major.
    const std::vector<ClassInfo>& classes() const noexcept { return classes_; }

    /// Nonprojective classes in K_0 index order.
    const std::vector<StableClass>& k0_basis() const noexcept { return k0_basis_; }

    const ClassInfo& info(const StableClass& c) const {
        auto it = position_.find(c);
        if (it == position_.end()) throw PreconditionError("unknown stable class " + name(c));
        return classes_[it->second];
    }

    bool is_projective(const StableClass& c) const { return info(c).projective; }

    std::optional<std::size_t> k0_index(const StableClass& c) const {
        auto it = k0_index_.find(c);
        if (it == k0_index_.end()) return std::nullopt;
        return it->second;
    }

    std::string name(const StableClass& c) const {
        return "M[" + std::to_string(c.level) + "]@" + algebra_.quiver().vertex_name(c.vertex);
    }

    /// Dimension of M^l_v: the paths from v of length < k - l.
    std::size_t class_dimension(const StableClass& c) const {
        Integer d = 0;
        for (unsigned j = 0; j + c.level < algebra_.k(); ++j) d += powers_[j].row_sum(c.vertex);
        return d.get_ui();
    }

    /// Omega(M^l_v) = sum over paths rho from v of length k-l of M^{k-l}_{t(rho)}.
    ClassSyzygy syzygy_class(const StableClass& c) const {
        ClassSyzygy out;
        if (info(c).projective) return out;
        const unsigned len = algebra_.k() - c.level;
        for (VertexId w = 0; w < algebra_.quiver().vertex_count(); ++w) {
            const Integer& count = powers_[len](c.vertex, w);
            if (sgn(count) == 0) continue;
            StableClass target{w, len};
            auto& bucket = info(target).projective ? out.projective : out.nonprojective;
            bucket[target] += count.get_ui();
        }
        return out;
    }

    /// Omega applied to a class vector (projective summands dropped).
    ClassVector syzygy(const ClassVector& x) const {
        ClassVector out;
        for (const auto& [c, mult] : x) {
            if (mult == 0) continue;
            for (const auto& [d, m2] : syzygy_class(c).nonprojective) out[d] += mult * m2;
        }
        return out;
    }

    ClassVector syzygy_power(ClassVector x, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) x = syzygy(x);
        return x;
    }

    /// Matrix of the syzygy endomorphism of K_0 in the k0_basis() order.
    const IntMatrix& syzygy_matrix() const noexcept { return syzygy_matrix_; }

    PdResult pd_class(const StableClass& c) const {
        if (info(c).projective) return PdResult::Finite(0);
        return pd_.at(c);
    }

    /// Nonprojective classes reachable from `seed` by repeated syzygies, seed included.
    std::set<StableClass> syzygy_closure(const std::set<StableClass>& seed) const {
        std::set<StableClass> out;
        std::vector<StableClass> stack;
        for (const auto& c : seed)
            if (!info(c).projective && out.insert(c).second) stack.push_back(c);
        while (!stack.empty()) {
            StableClass c = stack.back();
            stack.pop_back();
            for (const auto& [d, mult] : syzygy_class(c).nonprojective)
                if (out.insert(d).second) stack.push_back(d);
        }
        return out;
    }

    /// First nonprojective syzygy summand of a member that escapes d, if any.
    std::optional<std::pair<StableClass, StableClass>> closure_violation(const std::set<StableClass>& d) const {
        for (const auto& c : d)
            for (const auto& [e, mult] : syzygy_class(c).nonprojective)
                if (!d.count(e)) return std::make_pair(c, e);
        return std::nullopt;
    }

    /// phi_[D](x): Fitting index of the syzygy endomorphism induced on K_0/<D>,
    /// evaluated on the lattice spanned by the distinct classes of x. An empty
    /// d gives the Igusa-Todorov phi.
    std::size_t phi(const ClassVector& x, const SubcategorySpec& d = {}) const {
        for (const auto& c : d.classes) info(c);
        if (auto bad = closure_violation(d.classes))
            throw PreconditionError("subcategory is not syzygy-closed: " + name(bad->second) + " is a summand of the syzygy of " +
                                    name(bad->first));
        std::set<std::size_t> d_coords;
        for (const auto& c : d.classes)
            if (auto idx = k0_index(c)) d_coords.insert(*idx);
        const IntMatrix reduced = project_quotient(syzygy_matrix_, d_coords);
        std::set<std::size_t> x_coords;
        for (const auto& [c, mult] : x) {
            info(c);
            if (mult == 0) continue;
            if (auto idx = k0_index(c)) x_coords.insert(*idx);
        }
        const Lattice x_lattice = project_lattice(Lattice::coordinate(k0_basis_.size(), x_coords), d_coords);
        return eta_fitting(reduced, x_lattice);
    }

    /// Largest finite projective dimension among the classes of x; 0 if none.
    std::size_t findim_add(const ClassVector& x) const {
        std::size_t best = 0;
        for (const auto& [c, mult] : x) {
            if (mult == 0) continue;
            auto pd = pd_class(c);
            if (pd.finite) best = std::max(best, pd.value);
        }
        return best;
    }

    std::size_t psi(const ClassVector& x, const SubcategorySpec& d = {}) const {
        const std::size_t f = phi(x, d);
        return f + findim_add(syzygy_power(x, f));
    }

    /// phi-dimension of the additive closure of all syzygy summands of x.
    std::size_t gamma(const ClassVector& x) const {
        std::set<StableClass> support;
        for (const auto& [c, mult] : x)
            if (mult) support.insert(c);
        return phi(as_vector(syzygy_closure(support)));
    }

    ValidationResult validate_0IT(const SubcategorySpec& d) const {
        for (const auto& c : d.classes) {
            if (!position_.count(c)) return {false, "unknown class " + name(c)};
        }
        if (auto bad = closure_violation(d.classes))
            return {false, "not syzygy-closed: " + name(bad->second) + " is a summand of the syzygy of " + name(bad->first)};
        const std::size_t p = phi(as_vector(d.classes));
        if (p != 0) return {false, "phi-dimension is " + std::to_string(p) + ", not 0"};
        return {true, "syzygy-closed with phi-dimension 0"};
    }

    /// Only-trivial-0-IT test over stable classes. Decisive for strongly
    /// connected quivers, where every 0-IT subcategory contains the syzygy
    /// closure of some nonprojective stable class.
    TrivialClassification classify_trivial_0IT() const {
        TrivialClassification out;
        out.structure = structural_report(algebra_);
        if (!out.structure.strongly_connected) return out;
        for (const auto& c : k0_basis_) {
            const std::size_t g = gamma(ClassVector{{c, 1}});
            out.gamma_values[c] = g;
            if (g == 0 && !out.witness) {
                SubcategorySpec w{syzygy_closure({c}), true};
                out.witness = w;
            }
        }
        out.verdict = out.witness ? TrivialVerdict::NontrivialWitness : TrivialVerdict::OnlyTrivial;
        return out;
    }

    /// (1, V, D) with V the nonprojective classes outside D: every first
    /// syzygy is a sum of stable classes, so add(V) and D cover Omega(mod A).
    LITCertificate lit_witness(const SubcategorySpec& d = {}) const {
        if (!d.classes.empty()) {
            auto v = validate_0IT(d);
            if (!v.ok) throw PreconditionError("lit_witness: D is not 0-Igusa-Todorov: " + v.reason);
        }
        LITCertificate cert;
        cert.n = 1;
        cert.d = d;
        cert.d.validated_0IT = true;
        for (const auto& c : k0_basis_)
            if (!d.classes.count(c)) cert.v_classes[c] = 1;
        cert.findim_bound = psi(cert.v_classes, cert.d) + cert.n + 1;
        return cert;
    }

    static ClassVector as_vector(const std::set<StableClass>& s) {
        ClassVector v;
        for (const auto& c : s) v[c] = 1;
        return v;
    }

    /// The direct sum of all classes of level l (M^l(A)), nonprojective part.
    ClassVector level_sum(unsigned l) const {
        ClassVector v;
        for (const auto& info : classes_)
            if (info.cls.level == l && !info.projective) v[info.cls] = 1;
        return v;
    }

private:
    void compute_pd() {
        // 0 = unvisited, 1 = on stack, 2 = done
        std::map<StableClass, int> state;
        for (const auto& root : k0_basis_) {
            if (state[root] == 2) continue;
            std::vector<StableClass> path;
            visit(root, state, path);
        }
    }

    void visit(const StableClass& c, std::map<StableClass, int>& state, std::vector<StableClass>& path) {
        state[c] = 1;
        path.push_back(c);
        std::size_t best = 0;
        std::optional<std::vector<StableClass>> cycle;
        for (const auto& [d, mult] : syzygy_class(c).nonprojective) {
            if (state[d] == 1) {
                auto it = std::find(path.begin(), path.end(), d);
                cycle = std::vector<StableClass>(it, path.end());
                break;
            }
            if (state[d] == 0) visit(d, state, path);
            const PdResult& sub = pd_.at(d);
            if (!sub.finite) {
                cycle = sub.cycle_witness;
                break;
            }
            best = std::max(best, sub.value);
        }
        // A nonprojective class whose syzygy is projective has pd 1.
        pd_[c] = cycle ? PdResult::Infinite(*cycle) : PdResult::Finite(best + 1);
        path.pop_back();
        state[c] = 2;
    }

    TruncatedAlgebra algebra_;
    std::vector<IntMatrix> powers_;
    std::vector<ClassInfo> classes_;
    std::map<StableClass, std::size_t> position_;
    std::vector<StableClass> k0_basis_;
    std::map<StableClass, std::size_t> k0_index_;
    IntMatrix syzygy_matrix_;
    std::map<StableClass, PdResult> pd_;
};

} // namespace qit
