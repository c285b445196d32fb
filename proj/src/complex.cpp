#include "redhom/complex.hpp"

#include <string>

#include "redhom/error.hpp"

namespace redhom {

namespace {

// Minimal generators of the Λ-stable subspace with basis `k` of Λ^r.
Matrix free_submodule_generators(const Algebra& alg, const Matrix& k) {
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < alg.num_generators(); ++i) {
        Matrix part(k.rows(), k.cols(), alg.p());
        const Element& g = alg.generator(i);
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            if (g[b] != 0) part.add_scaled(free_action(alg, b, k), g[b]);
        }
        parts.push_back(std::move(part));
    }
    Matrix msub = hstack(parts, k.rows(), alg.p());
    std::vector<std::size_t> picked;
    for (std::size_t c : independent_columns(hstack(msub, k))) {
        if (c >= msub.cols()) picked.push_back(c - msub.cols());
    }
    return k.select_columns(picked);
}

// Hom(-, N) applied to d : Λ^c → Λ^r gives N^r → N^c.
Matrix hom_into(const LambdaMatrix& d, const Module& n) {
    const std::size_t dn = n.dim();
    Matrix out(d.cols() * dn, d.rows() * dn, n.p());
    for (std::size_t j = 0; j < d.cols(); ++j) {
        for (std::size_t l = 0; l < d.rows(); ++l) {
            const Element& e = d.entry(l, j);
            if (d.algebra()->is_zero(e)) continue;
            out.set_block(j * dn, l * dn, n.action_of(e));
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- FreeComplex

FreeComplex::FreeComplex(AlgebraPtr algebra, int lo, std::vector<std::size_t> ranks, std::vector<LambdaMatrix> differentials)
    : algebra_(std::move(algebra)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
    if (ranks_.empty()) throw ContractViolation("a complex needs at least one term");
    if (diffs_.size() + 1 != ranks_.size()) throw ContractViolation("need one differential between consecutive terms");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != ranks_[k] || diffs_[k].cols() != ranks_[k + 1]) {
            throw ContractViolation("differential shape does not match the ranks");
        }
    }
}

std::size_t FreeComplex::rank_at(int i) const {
    if (i < lo() || i > hi()) return 0;
    return ranks_[static_cast<std::size_t>(i - lo_)];
}

const LambdaMatrix& FreeComplex::differential(int i) const {
    if (i <= lo() || i > hi()) throw ContractViolation("no differential at position " + std::to_string(i));
    return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

void FreeComplex::check_d_squared() const {
    for (int i = lo_ + 2; i <= hi(); ++i) {
        if (!(differential(i - 1) * differential(i)).is_zero()) {
            throw InvariantError("d∘d ≠ 0 at position " + std::to_string(i));
        }
    }
}

// ---------------------------------------------------------------- ModuleComplex

ModuleComplex::ModuleComplex(int lo, std::vector<Module> modules, std::vector<Matrix> differentials)
    : lo_(lo), modules_(std::move(modules)), diffs_(std::move(differentials)) {
    if (modules_.empty()) throw ContractViolation("a complex needs at least one term");
    if (diffs_.size() + 1 != modules_.size()) throw ContractViolation("need one map between consecutive terms");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != modules_[k].dim() || diffs_[k].cols() != modules_[k + 1].dim()) {
            throw ContractViolation("map shape does not match the term dimensions");
        }
        if (!same_ring(modules_[k], modules_[k + 1])) throw ContractViolation("complex terms over different rings");
    }
}

const Module& ModuleComplex::at(int i) const {
    if (i < lo() || i > hi()) throw ContractViolation("no term at position " + std::to_string(i));
    return modules_[static_cast<std::size_t>(i - lo_)];
}

const Matrix& ModuleComplex::differential(int i) const {
    if (i <= lo() || i > hi()) throw ContractViolation("no differential at position " + std::to_string(i));
    return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

void ModuleComplex::check_d_squared() const {
    for (int i = lo_ + 2; i <= hi(); ++i) {
        if (!(differential(i - 1) * differential(i)).is_zero()) {
            throw InvariantError("d∘d ≠ 0 at position " + std::to_string(i));
        }
    }
}

bool ModuleComplex::maps_are_homomorphisms() const {
    for (int i = lo_ + 1; i <= hi(); ++i) {
        if (!ModuleMap{at(i), at(i - 1), differential(i)}.is_homomorphism()) return false;
    }
    return true;
}

ModuleComplex to_module_complex(const FreeComplex& c) {
    std::vector<Module> mods;
    std::vector<Matrix> maps;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        mods.push_back(free_module(c.algebra(), c.rank_at(i)));
        if (i > c.lo()) maps.push_back(c.differential(i).linear_map());
    }
    return ModuleComplex(c.lo(), std::move(mods), std::move(maps));
}

// ---------------------------------------------------------------- resolutions

std::vector<LambdaMatrix> extend_resolution(const LambdaMatrix& d, std::size_t steps) {
    const Algebra& alg = *d.algebra();
    std::vector<LambdaMatrix> out;
    Matrix kernel = kernel_basis(d.linear_map());
    std::size_t rows = d.cols();
    for (std::size_t s = 0; s < steps; ++s) {
        const Matrix gens = free_submodule_generators(alg, kernel);
        out.push_back(LambdaMatrix::from_free_columns(d.algebra(), rows, gens));
        if (s + 1 < steps) kernel = kernel_basis(out.back().linear_map());
        rows = gens.cols();
    }
    return out;
}

Resolution minimal_free_resolution(const Module& m, std::size_t steps) {
    const AlgebraPtr& alg = m.algebra();
    Cover aug = projective_cover(m);
    std::vector<std::size_t> betti{aug.rank};
    std::vector<LambdaMatrix> diffs;
    if (steps > 0) {
        Matrix kernel = kernel_basis(aug.map);
        std::size_t rows = aug.rank;
        for (std::size_t s = 1; s <= steps; ++s) {
            const Matrix gens = free_submodule_generators(*alg, kernel);
            diffs.push_back(LambdaMatrix::from_free_columns(alg, rows, gens));
            betti.push_back(gens.cols());
            rows = gens.cols();
            if (s < steps) kernel = kernel_basis(diffs.back().linear_map());
        }
    }
    FreeComplex fc(alg, 0, betti, diffs);
    return Resolution{std::move(fc), std::move(betti), std::move(aug)};
}

ExtTable ext_dims(const Module& m, const Module& n, std::size_t bound) {
    if (!same_ring(m, n)) throw ContractViolation("Ext between modules over different rings");
    const Resolution res = minimal_free_resolution(m, bound + 1);
    const std::size_t dn = n.dim();
    std::vector<std::size_t> ranks;  // rank of Hom(P_i,N) → Hom(P_{i+1},N)
    for (std::size_t i = 0; i <= bound; ++i) {
        ranks.push_back(rank(hom_into(res.complex.differential(static_cast<int>(i + 1)), n)));
    }
    ExtTable t;
    t.bound = bound;
    for (std::size_t i = 0; i <= bound; ++i) {
        const std::size_t cochains = res.betti[i] * dn;
        const std::size_t incoming = i == 0 ? 0 : ranks[i - 1];
        t.dims.push_back(cochains - ranks[i] - incoming);
    }
    return t;
}

std::vector<std::size_t> bass_numbers(const Module& n, std::size_t bound) {
    return ext_dims(residue_field(n.algebra()), n, bound).dims;
}

// ---------------------------------------------------------------- duals and exactness

ModuleComplex apply_dual(const ModuleComplex& c) {
    std::vector<HomSpace> duals;
    for (int i = c.lo(); i <= c.hi(); ++i) duals.push_back(dual_module(c.at(i)));
    auto dual_at = [&](int i) -> const HomSpace& { return duals[static_cast<std::size_t>(i - c.lo())]; };

    // New positions run from -hi to -lo; the term at -i is (G_i)*.
    std::vector<Module> mods;
    std::vector<Matrix> maps;
    for (int j = -c.hi(); j <= -c.lo(); ++j) {
        mods.push_back(dual_at(-j).module());
        if (j == -c.hi()) continue;
        // differential at j: (G_{-j})* → (G_{-j+1})*, i.e. f ↦ f∘d where d = d_{1-j}: G_{1-j} → G_{-j}.
        const int i = 1 - j;
        const HomSpace& from = dual_at(i - 1);
        const HomSpace& to = dual_at(i);
        const Matrix& d = c.differential(i);
        std::vector<Matrix> composed;
        for (const Matrix& f : from.basis_maps()) composed.push_back(f * d);
        maps.push_back(composed.empty() ? Matrix(to.dim(), 0, to.module().p()) : to.coordinate_columns(composed));
    }
    return ModuleComplex(-c.hi(), std::move(mods), std::move(maps));
}

std::vector<ExactnessVerdict> check_exactness(const ModuleComplex& c, std::span<const int> positions) {
    std::vector<ExactnessVerdict> out;
    for (int i : positions) {
        if (i < c.lo() || i > c.hi()) throw ContractViolation("exactness requested outside the complex");
        ExactnessVerdict v;
        v.position = i;
        const std::size_t dim = c.at(i).dim();
        v.kernel_dim = i == c.lo() ? dim : dim - rank(c.differential(i));
        v.image_dim = i == c.hi() ? 0 : rank(c.differential(i + 1));
        if (i > c.lo() && i < c.hi()) v.image_in_kernel = (c.differential(i) * c.differential(i + 1)).is_zero();
        v.exact = v.image_in_kernel && v.kernel_dim == v.image_dim;
        out.push_back(v);
    }
    return out;
}

std::vector<int> interior_positions(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo + 1; i < hi; ++i) out.push_back(i);
    return out;
}

}  // namespace redhom
