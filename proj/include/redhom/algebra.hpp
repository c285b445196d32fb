#pragma once

// Finite-dimensional commutative local GF(p)-algebras given either as
// monomial quotients k[x_1..x_n]/I or by explicit structure constants.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redhom/linalg.hpp"

namespace redhom {

/// Coefficient vector of an algebra element against the algebra's basis.
using Element = std::vector<Scalar>;

struct RingSpec {
    enum class Mode { MonomialQuotient, StructureConstants };

    Mode mode = Mode::MonomialQuotient;
    std::uint32_t p = 2;

    // monomial_quotient
    std::vector<std::string> variables;
    std::vector<std::vector<int>> ideal;  // exponent vectors of the monomial generators

    // structure_constants
    std::vector<std::string> labels;                // labels[0] is the unit
    std::vector<std::vector<Element>> table;        // table[a][b] = e_a * e_b
    std::vector<std::string> generator_labels;      // empty: pick a basis of m/m^2
    std::optional<std::vector<int>> grading;
    std::optional<bool> declared_ci;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    static AlgebraPtr build_monomial_quotient(const RingSpec& spec);
    static AlgebraPtr build_from_structure_constants(const RingSpec& spec);
    /// Dispatches on spec.mode.
    static AlgebraPtr build(const RingSpec& spec);

    std::uint32_t p() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }
    std::size_t dim() const { return dim_; }
    std::size_t num_generators() const { return generators_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<std::vector<int>>& grading() const { return grading_; }

    /// Coefficient of e_c in e_a * e_b.
    Scalar structure_constant(std::size_t a, std::size_t b, std::size_t c) const {
        return mult_[(a * dim_ + b) * dim_ + c];
    }
    Element basis_product(std::size_t a, std::size_t b) const;
    Element multiply(const Element& u, const Element& v) const;
    Element unit() const;
    Element basis_element(std::size_t i) const;
    Element zero() const { return Element(dim_, 0); }
    const Element& generator(std::size_t i) const { return generators_.at(i); }
    /// An element is a unit iff its coefficient on the identity is nonzero.
    bool is_unit(const Element& e) const { return e.at(0) != 0; }
    bool is_zero(const Element& e) const;

    /// D×D matrix of multiplication by e_b (column a holds e_b * e_a).
    const Matrix& regular_action(std::size_t b) const { return regular_.at(b); }
    /// D×D matrix of multiplication by an arbitrary element.
    Matrix multiplication_matrix(const Element& e) const;

    /// Monomials in the generators (as index lists) whose values form a basis,
    /// and the matrix expressing each basis element e_b in that monomial basis
    /// (column b).
    const std::vector<std::vector<std::size_t>>& spanning_words() const { return words_; }
    const Matrix& basis_in_words() const { return basis_in_words_; }

    const Matrix& socle_basis() const { return socle_; }
    std::size_t socle_dim() const { return socle_.cols(); }
    bool is_gorenstein() const { return socle_dim() == 1; }
    bool is_field() const { return dim_ == 1; }
    /// Pure-powers test for monomial quotients; the declared flag otherwise.
    std::optional<bool> is_complete_intersection() const { return ci_; }
    bool is_monomial_ci() const { return spec_.mode == RingSpec::Mode::MonomialQuotient && ci_.value_or(false); }
    /// Smallest L with m^L = 0.
    std::size_t loewy_length() const { return loewy_length_; }

    /// The document this algebra was built from.
    const RingSpec& spec() const { return spec_; }
    /// Full structure-constant description; rebuilding from it yields an equal table.
    RingSpec to_structure_spec() const;

    std::string element_to_string(const Element& e) const;

private:
    Algebra() = default;
    void finish();  // regular reps, words, socle, flags

    std::uint32_t p_ = 2;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Scalar> mult_;
    std::vector<Element> generators_;
    std::optional<std::vector<int>> grading_;
    std::vector<Matrix> regular_;
    std::vector<std::vector<std::size_t>> words_;
    Matrix basis_in_words_;
    Matrix socle_;
    std::optional<bool> ci_;
    std::size_t loewy_length_ = 1;
    RingSpec spec_;
};

struct SocleReport {
    std::size_t socle_dim = 0;
    bool is_gorenstein = false;
    bool is_field = false;
    bool is_monomial_ci = false;
};

SocleReport socle_and_classify(const Algebra& a);

}  // namespace redhom
