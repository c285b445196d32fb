#pragma once

// Complexes of free modules and of arbitrary modules; minimal free
// resolutions; Ext, Betti and Bass numbers; dualization; exactness.
//
// Indexing is homological throughout: the differential at position i maps
// the term at i to the term at i-1.

#include <span>
#include <vector>

#include "redhom/module.hpp"

namespace redhom {

/// P_hi → … → P_lo with Λ-matrix differentials.
class FreeComplex {
public:
    FreeComplex(AlgebraPtr algebra, int lo, std::vector<std::size_t> ranks, std::vector<LambdaMatrix> differentials);

    const AlgebraPtr& algebra() const { return algebra_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank_at(int i) const;
    /// d_i : P_i → P_{i-1}, for lo < i <= hi.
    const LambdaMatrix& differential(int i) const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// Throws InvariantError when some d_{i-1}∘d_i is nonzero.
    void check_d_squared() const;

private:
    AlgebraPtr algebra_;
    int lo_;
    std::vector<std::size_t> ranks_;
    std::vector<LambdaMatrix> diffs_;
};

/// G_hi → … → G_lo with module maps; maps[i] is dim(G_{i-1})×dim(G_i).
class ModuleComplex {
public:
    ModuleComplex(int lo, std::vector<Module> modules, std::vector<Matrix> differentials);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
    const Module& at(int i) const;
    const Matrix& differential(int i) const;
    const std::vector<Module>& modules() const { return modules_; }

    void check_d_squared() const;
    /// Each differential commutes with the Λ-actions.
    bool maps_are_homomorphisms() const;

private:
    int lo_;
    std::vector<Module> modules_;
    std::vector<Matrix> diffs_;
};

ModuleComplex to_module_complex(const FreeComplex& c);

struct Resolution {
    FreeComplex complex;          // positions 0..steps
    std::vector<std::size_t> betti;
    Cover augmentation;           // P_0 → M
};

/// Minimal free resolution through P_steps; betti[i] = rank P_i.
Resolution minimal_free_resolution(const Module& m, std::size_t steps);

/// Continues a minimal resolution past d : Λ^c → Λ^r: returns the next
/// `steps` differentials e_1 : Λ^{c1} → Λ^c, e_2, … (each covering the kernel of the previous).
std::vector<LambdaMatrix> extend_resolution(const LambdaMatrix& d, std::size_t steps);

struct ExtTable {
    std::size_t bound = 0;
    std::vector<std::size_t> dims;  // dims[i] = dim_k Ext^i(M,N), 0 <= i <= bound
};

/// Ext^i(M,N) for 0 <= i <= bound via a minimal resolution of M. Lengths are
/// k-dimensions since the residue field is the coefficient field.
ExtTable ext_dims(const Module& m, const Module& n, std::size_t bound);

/// μ^i(N) = dim_k Ext^i(k, N).
std::vector<std::size_t> bass_numbers(const Module& n, std::size_t bound);

/// Term-wise Hom(-, Λ); the dual of the term at position i sits at -i.
ModuleComplex apply_dual(const ModuleComplex& c);

struct ExactnessVerdict {
    int position = 0;
    std::size_t kernel_dim = 0;
    std::size_t image_dim = 0;
    bool image_in_kernel = true;
    bool exact = false;
    /// dim ker - dim im, the homology dimension when image_in_kernel
    std::size_t defect() const { return kernel_dim >= image_dim ? kernel_dim - image_dim : 0; }
};

/// Past either end the complex is taken to be zero: exactness at hi means
/// d_hi is injective and at lo means d_{lo+1} is surjective.
std::vector<ExactnessVerdict> check_exactness(const ModuleComplex& c, std::span<const int> positions);
std::vector<int> interior_positions(int lo, int hi);

}  // namespace redhom
