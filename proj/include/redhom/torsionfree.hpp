#pragma once

// (m,n)-torsionfree classification and the exact sequences characterizing it.
//
// M is (m,n)-torsionfree when Ext^i(M,Λ) = 0 for 1 <= i <= m and
// Ext^j(tr M,Λ) = 0 for 1 <= j <= n. Infinite m, n are replaced everywhere
// by a finite certification bound B.

#include <optional>
#include <string>
#include <vector>

#include "redhom/complex.hpp"
#include "redhom/error.hpp"

namespace redhom {

struct TorsionfreeVerdict {
    std::size_t bound = 0;
    std::size_t m_max = 0;  // largest m <= bound with M in G_{m0}
    std::size_t n_max = 0;  // largest n <= bound with M in G_{0n}
    bool totally_reflexive_up_to_bound = false;
    ExtTable ext_module;     // Ext^i(M,Λ)
    ExtTable ext_transpose;  // Ext^j(tr M,Λ)

    /// Membership in G_{mn} = G_{m0} ∩ G_{0n}, for m, n <= bound.
    bool in_class(std::size_t m, std::size_t n) const { return m <= m_max && n <= n_max; }
};

TorsionfreeVerdict torsionfree_classify(const Module& m, std::size_t bound);

/// 0 → M → F_{-1} → … → F_{-n} obtained by dualizing a resolution of tr M.
struct Pushforward {
    ModuleComplex sequence;  // zero at position 1, M at 0, frees at -1..-n
    std::vector<ExactnessVerdict> exactness;  // at positions 0, -1, …, -(n-1)
    std::vector<std::size_t> transpose_ext;   // Ext^j(tr M,Λ), j = 0..n
    bool exact = false;
    bool dual_surjects_onto_dual = false;
};

Pushforward pushforward(const Module& m, std::size_t n);

/// Thrown when a sequence is requested for a module outside G_{mn}.
class RefusedError : public InputError {
public:
    RefusedError(std::string msg, bool transpose_side, std::size_t failing_index)
        : InputError(std::move(msg)), transpose_side(transpose_side), failing_index(failing_index) {}
    bool transpose_side;        // false: Ext^i(M,Λ) ≠ 0; true: Ext^i(tr M,Λ) ≠ 0
    std::size_t failing_index;  // the i above
};

/// P_{m+1} → … → P_0 --∂--> P_{-1} → … → P_{-n}: a minimal resolution of M
/// spliced with the pushforward. Built without checking membership.
FreeComplex theorem3_splice(const Module& m, std::size_t mm, std::size_t n);

struct Theorem3Sequence {
    FreeComplex complex;
    Module image;          // im ∂ ⊆ P_{-1}
    Matrix image_witness;  // M → im ∂, invertible
};

/// Refuses (RefusedError) unless M ∈ G_{mn}; requires n >= 1. The result is
/// checked for exactness, dual exactness and im ∂ ≅ M before it is returned.
Theorem3Sequence build_theorem3_sequence(const Module& m, std::size_t mm, std::size_t n);

enum class Theorem3Condition {
    AllTermsInClass,  // every term in G_{mn}
    SplitClasses,     // G_{m0} for 0 <= i <= m+1, G_{0n} for -n <= i <= -1
};

struct Theorem3Verdict {
    bool sequence_exact = false;
    bool dual_exact = false;
    std::vector<ExactnessVerdict> exactness;       // interior positions of C
    std::vector<ExactnessVerdict> dual_exactness;  // interior positions of C*
    std::vector<int> membership_failures;          // positions whose term fails its class
    bool holds = false;                            // all hypotheses met
    TorsionfreeVerdict image_classification;       // direct classification of im ∂
    bool image_in_class = false;
    /// holds ⇒ image_in_class
    bool consistent() const { return !holds || image_in_class; }
};

/// C must span positions m+1 … -n with n >= 1.
Theorem3Verdict verify_theorem3_sequence(const ModuleComplex& c, std::size_t mm, std::size_t n, Theorem3Condition mode);

struct GdimReport {
    enum class Verdict { Zero, InfiniteUpToBound };
    std::size_t bound = 0;
    ExtTable ext;
    std::optional<std::size_t> sup_with_zero;  // sup{0 <= i <= B : Ext^i ≠ 0}
    std::optional<std::size_t> sup_positive;   // sup{1 <= i <= B : Ext^i ≠ 0}
    bool tail_zero = false;                    // Ext^i = 0 for sup_positive < i <= B, with a nonempty tail
    /// The sup formula's value with sup ∅ read as 0 for nonzero M.
    std::optional<std::size_t> formula_value;
    Verdict verdict = Verdict::InfiniteUpToBound;
};

GdimReport gdim_report(const Module& m, std::size_t bound);

std::string to_string(GdimReport::Verdict v);

}  // namespace redhom
