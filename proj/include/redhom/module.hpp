#pragma once

// Finitely generated modules over an Algebra, realized as finite GF(p)-spaces
// with commuting action matrices, and the basic functors on them.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redhom/algebra.hpp"
#include "redhom/linalg.hpp"

namespace redhom {

/// A Λ-module. Copies share the (immutable) action data.
class Module {
public:
    /// basis_actions[b] is the action of the algebra basis element e_b.
    Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> basis_actions);

    /// Builds from one action matrix per distinguished generator and checks the
    /// module axioms; throws InputError naming the violated relation.
    static Module from_generator_actions(AlgebraPtr algebra, const std::vector<Matrix>& generator_actions);

    const AlgebraPtr& algebra() const { return data_->algebra; }
    std::size_t dim() const { return data_->dim; }
    std::uint32_t p() const { return data_->algebra->p(); }
    bool is_zero() const { return dim() == 0; }

    const Matrix& basis_action(std::size_t b) const { return data_->actions.at(b); }
    Matrix generator_action(std::size_t i) const { return action_of(algebra()->generator(i)); }
    Matrix action_of(const Element& e) const;
    std::vector<Matrix> generator_actions() const;

    /// Full module-axiom check (unit, and act(a)act(b) = act(ab) on basis pairs).
    void validate() const;

private:
    struct Data {
        AlgebraPtr algebra;
        std::size_t dim;
        std::vector<Matrix> actions;
    };
    std::shared_ptr<const Data> data_;
};

bool same_ring(const Module& a, const Module& b);

/// A Λ-linear map; mat is dim(target)×dim(source).
struct ModuleMap {
    Module source;
    Module target;
    Matrix mat;

    bool is_homomorphism() const;
};

/// Matrix over Λ; entries are algebra elements. Represents Λ^cols → Λ^rows.
class LambdaMatrix {
public:
    LambdaMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols);
    /// Column j is read from columns.col(j), a vector of Λ^rows in (row, basis) coordinates.
    static LambdaMatrix from_free_columns(AlgebraPtr algebra, std::size_t rows, const Matrix& columns);
    static LambdaMatrix identity(AlgebraPtr algebra, std::size_t n);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Element& entry(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Element& entry(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    LambdaMatrix transposed() const;
    /// this ∘ rhs
    LambdaMatrix operator*(const LambdaMatrix& rhs) const;
    bool is_zero() const;
    /// All entries lie in the maximal ideal (the map is minimal).
    bool entries_in_maximal_ideal() const;
    /// The GF(p)-matrix (rows·D)×(cols·D) of the induced linear map.
    Matrix linear_map() const;

    friend bool operator==(const LambdaMatrix& a, const LambdaMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    AlgebraPtr algebra_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

Module free_module(const AlgebraPtr& algebra, std::size_t rank);
Module residue_field(const AlgebraPtr& algebra);
Module zero_module(const AlgebraPtr& algebra);
Module direct_sum(const std::vector<Module>& summands);
Module direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& summands);
Module power(const Module& m, std::size_t copies);

/// Applies the free-module action of e_b to each column of v (a vector of Λ^r).
Matrix free_action(const Algebra& alg, std::size_t b, const Matrix& v);

/// Submodule spanned by the columns of `basis` (must be Λ-stable, full column rank).
Module submodule(const Module& m, const Matrix& basis);

struct Quotient {
    Module module;
    Matrix projection;  // dim(Q)×dim(M)
    Matrix lift;        // dim(M)×dim(Q), a linear section of the projection
};
/// M / span(columns of sub); sub must be Λ-stable. The quotient basis is the
/// set of non-pivot coordinates of the echelon form of sub.
Quotient quotient(const Module& m, const Matrix& sub);

/// Basis of m·U for a Λ-stable subspace U (columns) of M.
Matrix maximal_ideal_times(const Module& m, const Matrix& sub);
/// Columns of `sub` whose classes form a basis of U / m·U (greedy in column order).
Matrix minimal_generators(const Module& m, const Matrix& sub);

struct Cokernel {
    Module module;
    ModuleMap projection;  // from Λ^rows
};
Cokernel cokernel_of_lambda_matrix(const LambdaMatrix& a);

/// Minimal projective cover Λ^g → M.
struct Cover {
    std::size_t rank = 0;
    Matrix generators;  // dim(M)×g, the chosen minimal generators
    Matrix map;         // dim(M)×(g·D), the cover as a linear map
    Matrix section;     // (g·D)×dim(M), cover·section = I
};
Cover projective_cover(const Module& m);

struct SyzygyResult {
    Cover cover;
    Module syzygy;
    Matrix inclusion;  // (g·D)×dim(ΩM)
};
SyzygyResult projective_cover_and_syzygy(const Module& m);
Module syzygy(const Module& m, std::size_t n = 1);

/// Minimal presentation Λ^{g1} --relations--> Λ^{g0} --cover--> M → 0.
struct Presentation {
    Cover cover;
    LambdaMatrix relations;  // g0 × g1
};
Presentation minimal_presentation(const Module& m);

/// Auslander transpose, computed from the minimal presentation.
Module transpose(const Module& m);

/// Number of minimal generators dim(M/mM).
std::size_t minimal_generator_count(const Module& m);
bool is_free(const Module& m);

/// Hom_Λ(M,N) as a module, with its basis of maps.
class HomSpace {
public:
    HomSpace(Module source, Module target);

    const Module& module() const { return hom_; }
    std::size_t dim() const { return hom_.dim(); }
    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    /// Linear combination of basis maps, dim(N)×dim(M).
    Matrix map(const std::vector<Scalar>& coords) const;
    std::vector<Matrix> basis_maps() const;
    /// Coordinates of a homomorphism against the basis.
    std::vector<Scalar> coordinates(const Matrix& f) const;
    /// Coordinates of several maps at once, one column each.
    Matrix coordinate_columns(const std::vector<Matrix>& fs) const;

private:
    Module source_;
    Module target_;
    Cover cover_;
    Matrix embedding_;  // (g·dim N)×h, values on the generators
    Module hom_;
};

HomSpace hom_module(const Module& m, const Module& n);
/// M* = Hom(M, Λ).
HomSpace dual_module(const Module& m);

struct FreeSplitting {
    Module core;
    std::size_t free_rank = 0;
};
FreeSplitting split_free_summands(const Module& m);

/// Iso-invariant numbers used for quick "no" certificates and memo keys.
struct ModuleFingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> radical_series;  // dim m^i M, i = 1, 2, ...
    std::vector<std::size_t> socle_series;    // dim soc^i M
    friend bool operator==(const ModuleFingerprint&, const ModuleFingerprint&) = default;
    friend auto operator<=>(const ModuleFingerprint&, const ModuleFingerprint&) = default;
};
ModuleFingerprint fingerprint(const Module& m);

struct IsoOptions {
    std::uint64_t exhaust_cap = 2'000'000;
    std::size_t random_samples = 128;
    std::uint64_t seed = 0;
};

struct IsoVerdict {
    enum class Kind { Yes, No, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Matrix> witness;  // invertible M → N when Yes
    std::string certificate;
    bool yes() const { return kind == Kind::Yes; }
    bool no() const { return kind == Kind::No; }
};
IsoVerdict is_isomorphic(const Module& m, const Module& n, const IsoOptions& opts = {});

/// Image of a map as a submodule of the target, with the corestricted map.
Module image_module(const ModuleMap& f);

}  // namespace redhom
