#pragma once

// Extension elements, middle terms and the bounded search for reducing
// sequences 0 → M_{i-1}^{⊕a} → M_i → Ω^n M_{i-1}^{⊕b} → 0, plus growth
// estimates for Betti numbers, Bass numbers and Ext lengths.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "redhom/complex.hpp"
#include "redhom/torsionfree.hpp"

namespace redhom {

/// Ext^1(C,A) = coker(Hom(P_0,A) → Hom(ΩC,A)) with a fixed complement basis.
class Ext1Space {
public:
    Ext1Space(Module c, Module a);

    const Module& source() const { return c_; }
    const Module& target() const { return a_; }
    std::size_t dim() const { return basis_.size(); }
    const SyzygyResult& resolution() const { return syz_; }
    const HomSpace& hom() const { return hom_; }

    /// ΩC → A for the coordinates against the complement basis.
    Matrix representative(const std::vector<Scalar>& coords) const;

private:
    Module c_;
    Module a_;
    SyzygyResult syz_;
    HomSpace hom_;
    std::vector<std::vector<Scalar>> basis_;  // coordinates in Hom(ΩC,A)
};

struct ExtElement {
    std::vector<Scalar> coords;
    Matrix rep;  // ΩC → A
};

/// Enumeration of Ext^1 elements up to nonzero scalars: exhaustive in
/// lexicographic coordinate order when p^dim <= cap, otherwise the zero
/// element, basis vectors, pairwise sums and seeded random samples.
class Ext1Enumeration {
public:
    Ext1Enumeration(const Ext1Space& space, std::uint64_t cap, std::size_t random_samples, std::uint64_t seed);

    bool exhaustive() const { return exhaustive_; }
    /// Upper end of the index range. Some indices are skipped (not scalar-normalized).
    std::uint64_t index_count() const;
    /// Coordinates for an index, or nullopt if the index is skipped.
    std::optional<std::vector<Scalar>> at(std::uint64_t index) const;
    ExtElement element(const std::vector<Scalar>& coords) const;
    /// Number of distinct elements visited (scalar orbits when exhaustive).
    std::uint64_t element_count() const;

private:
    const Ext1Space* space_;
    bool exhaustive_ = false;
    std::uint64_t total_ = 0;
    std::vector<std::vector<Scalar>> samples_;
};

struct ShortExact {
    Module sub;         // A
    Module middle;      // N
    Module quotient;    // C
    ModuleComplex sequence;  // A (2) → N (1) → C (0)
};

/// Pushout of 0 → ΩC → P_0 → C → 0 along rep: N = (A ⊕ P_0)/{(rep z, -z)}.
ShortExact middle_term(const Ext1Space& space, const Matrix& rep);
bool verify_short_exact(const ShortExact& s);

enum class ReduceMode { Red, Ured };
enum class ReduceTarget { Pd, Gdim };
std::string to_string(ReduceMode m);
std::string to_string(ReduceTarget t);

struct SearchLimits {
    std::size_t max_steps = 2;
    std::size_t n_max = 1;
    std::size_t ab_max = 2;
    std::uint64_t cap = 2'000'000;
    std::uint64_t seed = 0;
    std::size_t tr_bound = 4;
    bool dimension_filter = true;
    std::size_t random_samples = 64;
    std::size_t max_frontier = 4096;
};

struct ReductionStep {
    std::size_t n = 0, a = 1, b = 1;
    std::vector<Scalar> coords;  // the extension element
    ShortExact sequence;
};

struct ReductionWitness {
    ReduceMode mode = ReduceMode::Red;
    ReduceTarget target = ReduceTarget::Pd;
    Module input;
    std::vector<ReductionStep> steps;
    std::size_t bound = 0;  // for the gdim terminal test
    std::size_t depth() const { return steps.size(); }
    const Module& terminal() const { return steps.empty() ? input : steps.back().sequence.middle; }
};

struct SearchResult {
    std::optional<ReductionWitness> witness;
    bool exhaustive = true;        // every skipped candidate was covered by a sound filter or full enumeration
    std::uint64_t examined = 0;    // middle terms built
    std::uint64_t pruned = 0;      // candidate groups removed by the dimension filter
    std::size_t levels_searched = 0;
};

/// Terminal test: free for pd, totally reflexive up to `bound` for gdim.
bool terminal_ok(const Module& m, ReduceTarget target, std::size_t bound);

/// Breadth-first over the number of steps, candidates in the order
/// (frontier module, n, a, b, element). REDHOM_THREADS sets the worker count;
/// the first witness in that order is returned either way.
SearchResult search_reducing(const Module& m, ReduceMode mode, ReduceTarget target, const SearchLimits& limits);

/// Re-checks every step from scratch; throws InvariantError on failure.
void verify_witness(const ReductionWitness& w);

// ---------------------------------------------------------------- growth

enum class GrowthKind { Betti, Bass, ExtLengths };
std::string to_string(GrowthKind k);

struct GrowthEstimate {
    enum class Verdict { Poly, Exponential, Inconclusive };
    GrowthKind kind = GrowthKind::Betti;
    std::vector<std::size_t> values;
    std::size_t window_start = 1;
    std::optional<std::size_t> fitted_degree;
    bool exponential = false;
    Verdict verdict = Verdict::Inconclusive;

    /// Degree as an integer, with exponential growth as "infinite" (nullopt
    /// together with verdict Exponential).
    std::string describe() const;
};

struct GrowthOptions {
    std::size_t window_start = 1;
    double epsilon = 0.15;
    std::size_t min_tail = 6;
};

GrowthEstimate growth_estimate(const std::vector<std::size_t>& values, GrowthKind kind, const GrowthOptions& opts = {});

/// Betti numbers β_0..β_bound.
std::vector<std::size_t> betti_numbers(const Module& m, std::size_t bound);

inline constexpr std::size_t kInfiniteComplexity = std::numeric_limits<std::size_t>::max();
/// poly(d) ↦ d, exponential ↦ kInfiniteComplexity, inconclusive ↦ nullopt.
std::optional<std::size_t> complexity_value(const GrowthEstimate& g);

struct ComplexityChainStep {
    std::size_t n = 0;
    std::vector<Scalar> coords;
    ShortExact sequence;
    std::size_t cx_before = 0, cx_after = 0;
};

struct ComplexityChain {
    bool found = false;
    std::vector<ComplexityChainStep> steps;
    std::size_t cx_input = 0;
};

/// Repeated 0 → M → N → Ω^n M → 0 with a smaller complexity estimate, down to 0.
ComplexityChain reducible_complexity_search(const Module& m, const SearchLimits& limits, std::size_t bound = 10);

struct InequalityCheck {
    std::size_t step = 0;  // index in the witness
    std::size_t n = 0;
    std::size_t checked = 0;  // number of i values
    bool holds = true;
    std::optional<std::size_t> first_failure;
};

struct Theorem4Report {
    GrowthEstimate cx;
    SearchResult ured;
    bool consistent = true;   // witness s ⇒ cx-estimate <= s
    std::optional<bool> equality;  // cx == s when both are known
    std::vector<InequalityCheck> inequalities;
};

/// β_{i+n}(M) <= β_i(N) + β_{i-1}(M) for 1 <= i <= imax.
InequalityCheck check_betti_inequality(const Module& m, const Module& n_mod, std::size_t n, std::size_t imax);

Theorem4Report theorem4_check(const Module& m, const SearchLimits& limits, std::size_t bound = 10);

struct GorensteinSideReport {
    GrowthEstimate gcx;
    SearchResult ured_gdim;
    GrowthEstimate px;  // Bass numbers of Λ
    bool consistent = true;  // witness s ⇒ gcx-estimate <= s
    /// For M = k: a witness forces finite plexity of Λ.
    std::optional<bool> plexity_implication;
};

GorensteinSideReport gorenstein_side_check(const Module& m, const SearchLimits& limits, std::size_t bound = 10);

}  // namespace redhom
