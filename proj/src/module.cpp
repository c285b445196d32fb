#include "redhom/module.hpp"

#include <random>
#include <sstream>

#include "redhom/error.hpp"

namespace redhom {

namespace {

// Columns of `sub` independent modulo span(msub), chosen greedily left to right.
Matrix select_generators(const Matrix& msub, const Matrix& sub) {
    std::vector<std::size_t> picked;
    for (std::size_t c : independent_columns(hstack(msub, sub))) {
        if (c >= msub.cols()) picked.push_back(c - msub.cols());
    }
    return sub.select_columns(picked);
}

Matrix free_action_by(const Algebra& alg, const Element& e, const Matrix& v) {
    Matrix out(v.rows(), v.cols(), alg.p());
    for (std::size_t b = 0; b < alg.dim(); ++b) {
        if (e[b] != 0) out.add_scaled(free_action(alg, b, v), e[b]);
    }
    return out;
}

Matrix stacked_generator_columns(const Module& m, const Matrix& sub) {
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < m.algebra()->num_generators(); ++i) parts.push_back(m.generator_action(i) * sub);
    return hstack(parts, m.dim(), m.p());
}

}  // namespace

// ---------------------------------------------------------------- Module

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> basis_actions) {
    if (!algebra) throw ContractViolation("module without an algebra");
    if (basis_actions.size() != algebra->dim()) throw ContractViolation("need one action matrix per algebra basis element");
    for (const auto& a : basis_actions) {
        if (a.rows() != dim || a.cols() != dim || a.modulus() != algebra->p()) {
            throw ContractViolation("action matrix has the wrong shape or field");
        }
    }
    data_ = std::make_shared<const Data>(Data{std::move(algebra), dim, std::move(basis_actions)});
}

Module Module::from_generator_actions(AlgebraPtr algebra, const std::vector<Matrix>& generator_actions) {
    if (!algebra) throw ContractViolation("module without an algebra");
    const Algebra& alg = *algebra;
    if (generator_actions.size() != alg.num_generators()) {
        throw InputError("module needs " + std::to_string(alg.num_generators()) + " generator actions, got " +
                         std::to_string(generator_actions.size()));
    }
    std::size_t dim = 0;
    if (!generator_actions.empty()) dim = generator_actions.front().rows();
    for (const auto& a : generator_actions) {
        if (a.rows() != dim || a.cols() != dim) throw InputError("generator actions must be square of equal size");
        if (a.modulus() != alg.p()) throw InputError("generator action over the wrong prime field");
    }
    for (std::size_t i = 0; i < generator_actions.size(); ++i) {
        for (std::size_t j = i + 1; j < generator_actions.size(); ++j) {
            if (generator_actions[i] * generator_actions[j] != generator_actions[j] * generator_actions[i]) {
                throw InputError("generator actions " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
            }
        }
    }
    // Word actions, then basis actions through the change of basis.
    std::vector<Matrix> word_actions;
    for (const auto& w : alg.spanning_words()) {
        Matrix a = Matrix::identity(dim, alg.p());
        for (std::size_t g : w) a = generator_actions[g] * a;
        word_actions.push_back(std::move(a));
    }
    const Matrix& cob = alg.basis_in_words();
    std::vector<Matrix> basis_actions;
    for (std::size_t b = 0; b < alg.dim(); ++b) {
        Matrix a(dim, dim, alg.p());
        for (std::size_t w = 0; w < word_actions.size(); ++w) {
            if (cob(w, b) != 0) a.add_scaled(word_actions[w], cob(w, b));
        }
        basis_actions.push_back(std::move(a));
    }
    Module m(algebra, dim, std::move(basis_actions));
    for (std::size_t i = 0; i < generator_actions.size(); ++i) {
        if (m.generator_action(i) != generator_actions[i]) {
            throw InputError("generator action " + std::to_string(i) + " violates a relation of the algebra");
        }
    }
    m.validate();
    return m;
}

Matrix Module::action_of(const Element& e) const {
    Matrix out(dim(), dim(), p());
    for (std::size_t b = 0; b < e.size(); ++b) {
        if (e[b] != 0) out.add_scaled(data_->actions[b], e[b]);
    }
    return out;
}

std::vector<Matrix> Module::generator_actions() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < algebra()->num_generators(); ++i) out.push_back(generator_action(i));
    return out;
}

void Module::validate() const {
    const Algebra& alg = *algebra();
    if (basis_action(0) != Matrix::identity(dim(), p())) throw InputError("the unit does not act as the identity");
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            if (basis_action(a) * basis_action(b) != action_of(alg.basis_product(a, b))) {
                throw InputError("module relation fails for basis pair (" + alg.labels()[a] + "," + alg.labels()[b] + ")");
            }
        }
    }
}

bool same_ring(const Module& a, const Module& b) {
    return a.algebra() == b.algebra() || a.algebra()->spec() == b.algebra()->spec();
}

bool ModuleMap::is_homomorphism() const {
    if (mat.rows() != target.dim() || mat.cols() != source.dim()) return false;
    for (std::size_t b = 1; b < source.algebra()->dim(); ++b) {
        if (mat * source.basis_action(b) != target.basis_action(b) * mat) return false;
    }
    return true;
}

// ---------------------------------------------------------------- LambdaMatrix

LambdaMatrix::LambdaMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols),
      entries_(rows * cols, Element(algebra_->dim(), 0)) {}

LambdaMatrix LambdaMatrix::from_free_columns(AlgebraPtr algebra, std::size_t rows, const Matrix& columns) {
    const std::size_t d = algebra->dim();
    if (columns.rows() != rows * d) throw ContractViolation("free columns have the wrong length");
    LambdaMatrix out(algebra, rows, columns.cols());
    for (std::size_t j = 0; j < columns.cols(); ++j) {
        for (std::size_t l = 0; l < rows; ++l) {
            for (std::size_t c = 0; c < d; ++c) out.entry(l, j)[c] = columns(l * d + c, j);
        }
    }
    return out;
}

LambdaMatrix LambdaMatrix::identity(AlgebraPtr algebra, std::size_t n) {
    LambdaMatrix out(algebra, n, n);
    for (std::size_t i = 0; i < n; ++i) out.entry(i, i) = algebra->unit();
    return out;
}

LambdaMatrix LambdaMatrix::transposed() const {
    LambdaMatrix out(algebra_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.entry(c, r) = entry(r, c);
    }
    return out;
}

LambdaMatrix LambdaMatrix::operator*(const LambdaMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ContractViolation("Λ-matrix product: inner dimensions differ");
    const PrimeField f(algebra_->p());
    LambdaMatrix out(algebra_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            Element acc = algebra_->zero();
            for (std::size_t k = 0; k < cols_; ++k) {
                const Element prod = algebra_->multiply(entry(r, k), rhs.entry(k, c));
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], prod[i]);
            }
            out.entry(r, c) = std::move(acc);
        }
    }
    return out;
}

bool LambdaMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!algebra_->is_zero(e)) return false;
    }
    return true;
}

bool LambdaMatrix::entries_in_maximal_ideal() const {
    for (const auto& e : entries_) {
        if (e[0] != 0) return false;
    }
    return true;
}

Matrix LambdaMatrix::linear_map() const {
    const std::size_t d = algebra_->dim();
    Matrix out(rows_ * d, cols_ * d, algebra_->p());
    for (std::size_t l = 0; l < rows_; ++l) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Element& e = entry(l, j);
            if (algebra_->is_zero(e)) continue;
            out.set_block(l * d, j * d, algebra_->multiplication_matrix(e));
        }
    }
    return out;
}

// ---------------------------------------------------------------- constructions

Module free_module(const AlgebraPtr& algebra, std::size_t rank) {
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < algebra->dim(); ++b) {
        actions.push_back(block_diagonal(std::vector<Matrix>(rank, algebra->regular_action(b)), algebra->p()));
    }
    return Module(algebra, rank * algebra->dim(), std::move(actions));
}

Module residue_field(const AlgebraPtr& algebra) {
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < algebra->dim(); ++b) {
        actions.push_back(b == 0 ? Matrix::identity(1, algebra->p()) : Matrix(1, 1, algebra->p()));
    }
    return Module(algebra, 1, std::move(actions));
}

Module zero_module(const AlgebraPtr& algebra) {
    return Module(algebra, 0, std::vector<Matrix>(algebra->dim(), Matrix(0, 0, algebra->p())));
}

Module direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& summands) {
    std::size_t dim = 0;
    for (const auto& m : summands) {
        if (m.algebra() != algebra && m.algebra()->spec() != algebra->spec()) {
            throw ContractViolation("direct sum of modules over different rings");
        }
        dim += m.dim();
    }
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < algebra->dim(); ++b) {
        std::vector<Matrix> blocks;
        for (const auto& m : summands) blocks.push_back(m.basis_action(b));
        actions.push_back(block_diagonal(blocks, algebra->p()));
    }
    return Module(algebra, dim, std::move(actions));
}

Module direct_sum(const std::vector<Module>& summands) {
    if (summands.empty()) throw ContractViolation("direct sum of an empty list needs an explicit algebra");
    return direct_sum(summands.front().algebra(), summands);
}

Module power(const Module& m, std::size_t copies) {
    return direct_sum(m.algebra(), std::vector<Module>(copies, m));
}

Matrix free_action(const Algebra& alg, std::size_t b, const Matrix& v) {
    const std::size_t d = alg.dim();
    if (v.rows() % d != 0) throw ContractViolation("free_action: vector length is not a multiple of dim Λ");
    const std::size_t r = v.rows() / d;
    const Matrix& L = alg.regular_action(b);
    Matrix out(v.rows(), v.cols(), alg.p());
    for (std::size_t j = 0; j < r; ++j) out.set_block(j * d, 0, L * v.block(j * d, 0, d, v.cols()));
    return out;
}

Module submodule(const Module& m, const Matrix& basis) {
    if (basis.rows() != m.dim()) throw ContractViolation("submodule basis has the wrong length");
    if (basis.cols() == 0) return zero_module(m.algebra());
    const Matrix left = left_inverse(basis);
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < m.algebra()->dim(); ++b) {
        const Matrix image = m.basis_action(b) * basis;
        Matrix restricted = left * image;
        if (basis * restricted != image) throw InvariantError("submodule basis does not span a Λ-stable subspace");
        actions.push_back(std::move(restricted));
    }
    return Module(m.algebra(), basis.cols(), std::move(actions));
}

Quotient quotient(const Module& m, const Matrix& sub) {
    const std::size_t d = m.dim();
    if (sub.rows() != d) throw ContractViolation("quotient: subspace has the wrong ambient dimension");
    const Echelon e = row_reduce(sub.transposed());
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d; ++i) {
        if (!is_pivot[i]) keep.push_back(i);
    }
    const PrimeField f(m.p());
    Matrix proj(keep.size(), d, m.p());
    Matrix lift(d, keep.size(), m.p());
    for (std::size_t t = 0; t < keep.size(); ++t) {
        proj(t, keep[t]) = 1;
        lift(keep[t], t) = 1;
    }
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        for (std::size_t t = 0; t < keep.size(); ++t) proj(t, e.pivots[r]) = f.neg(e.reduced(r, keep[t]));
    }
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < m.algebra()->dim(); ++b) actions.push_back(proj * m.basis_action(b) * lift);
    Module q(m.algebra(), keep.size(), std::move(actions));
    return Quotient{std::move(q), std::move(proj), std::move(lift)};
}

Matrix maximal_ideal_times(const Module& m, const Matrix& sub) {
    return column_space(stacked_generator_columns(m, sub));
}

Matrix minimal_generators(const Module& m, const Matrix& sub) {
    return select_generators(stacked_generator_columns(m, sub), sub);
}

Cokernel cokernel_of_lambda_matrix(const LambdaMatrix& a) {
    Module free = free_module(a.algebra(), a.rows());
    Quotient q = quotient(free, a.linear_map());
    ModuleMap proj{free, q.module, q.projection};
    return Cokernel{q.module, std::move(proj)};
}

Cover projective_cover(const Module& m) {
    const Algebra& alg = *m.algebra();
    const std::size_t d = alg.dim();
    Cover c;
    c.generators = minimal_generators(m, Matrix::identity(m.dim(), m.p()));
    c.rank = c.generators.cols();
    c.map = Matrix(m.dim(), c.rank * d, m.p());
    for (std::size_t j = 0; j < c.rank; ++j) {
        const Matrix g = c.generators.block(0, j, m.dim(), 1);
        for (std::size_t b = 0; b < d; ++b) c.map.set_block(0, j * d + b, m.basis_action(b) * g);
    }
    auto section = solve_linear(c.map, Matrix::identity(m.dim(), m.p()));
    if (!section) throw InvariantError("projective cover is not surjective");
    c.section = std::move(*section);
    return c;
}

SyzygyResult projective_cover_and_syzygy(const Module& m) {
    Cover c = projective_cover(m);
    Matrix k = kernel_basis(c.map);
    Module free = free_module(m.algebra(), c.rank);
    Module syz = submodule(free, k);
    return SyzygyResult{std::move(c), std::move(syz), std::move(k)};
}

Module syzygy(const Module& m, std::size_t n) {
    Module cur = m;
    for (std::size_t i = 0; i < n; ++i) cur = projective_cover_and_syzygy(cur).syzygy;
    return cur;
}

Presentation minimal_presentation(const Module& m) {
    const Algebra& alg = *m.algebra();
    Cover c = projective_cover(m);
    const Matrix k = kernel_basis(c.map);
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < alg.num_generators(); ++i) parts.push_back(free_action_by(alg, alg.generator(i), k));
    const Matrix gens = select_generators(hstack(parts, k.rows(), alg.p()), k);
    LambdaMatrix rel = LambdaMatrix::from_free_columns(m.algebra(), c.rank, gens);
    return Presentation{std::move(c), std::move(rel)};
}

Module transpose(const Module& m) {
    const Presentation pres = minimal_presentation(m);
    return cokernel_of_lambda_matrix(pres.relations.transposed()).module;
}

std::size_t minimal_generator_count(const Module& m) {
    if (m.dim() == 0) return 0;
    return m.dim() - rank(stacked_generator_columns(m, Matrix::identity(m.dim(), m.p())));
}

bool is_free(const Module& m) { return m.dim() == minimal_generator_count(m) * m.algebra()->dim(); }

Module image_module(const ModuleMap& f) { return submodule(f.target, column_space(f.mat)); }

// ---------------------------------------------------------------- Hom

HomSpace::HomSpace(Module source, Module target)
    : source_(std::move(source)), target_(std::move(target)), hom_(zero_module(source_.algebra())) {
    if (!same_ring(source_, target_)) throw ContractViolation("Hom between modules over different rings");
    const Presentation pres = minimal_presentation(source_);
    cover_ = pres.cover;
    const std::size_t g0 = pres.relations.rows();
    const std::size_t g1 = pres.relations.cols();
    const std::size_t dn = target_.dim();
    // Values v_l on the generators satisfy Σ_l rel[l][j]·v_l = 0 for every relation j.
    Matrix constraints(g1 * dn, g0 * dn, target_.p());
    for (std::size_t j = 0; j < g1; ++j) {
        for (std::size_t l = 0; l < g0; ++l) {
            const Element& e = pres.relations.entry(l, j);
            if (source_.algebra()->is_zero(e)) continue;
            constraints.set_block(j * dn, l * dn, target_.action_of(e));
        }
    }
    embedding_ = kernel_basis(constraints);
    hom_ = submodule(power(target_, g0), embedding_);
}

Matrix HomSpace::map(const std::vector<Scalar>& coords) const {
    if (coords.size() != embedding_.cols()) throw ContractViolation("Hom coordinates have the wrong length");
    const Matrix v = embedding_ * Matrix::column_vector(coords, target_.p());
    const std::size_t d = source_.algebra()->dim();
    const std::size_t dn = target_.dim();
    Matrix phi(dn, cover_.rank * d, target_.p());
    for (std::size_t l = 0; l < cover_.rank; ++l) {
        const Matrix vl = v.block(l * dn, 0, dn, 1);
        for (std::size_t b = 0; b < d; ++b) phi.set_block(0, l * d + b, target_.basis_action(b) * vl);
    }
    return phi * cover_.section;
}

std::vector<Matrix> HomSpace::basis_maps() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        std::vector<Scalar> c(dim(), 0);
        c[i] = 1;
        out.push_back(map(c));
    }
    return out;
}

std::vector<Scalar> HomSpace::coordinates(const Matrix& f) const {
    const Matrix values = f * cover_.generators;  // dn × g0
    const std::size_t dn = target_.dim();
    Matrix v(cover_.rank * dn, 1, target_.p());
    for (std::size_t l = 0; l < cover_.rank; ++l) {
        for (std::size_t i = 0; i < dn; ++i) v(l * dn + i, 0) = values(i, l);
    }
    auto x = solve_linear(embedding_, v);
    if (!x) throw ContractViolation("matrix is not a homomorphism between these modules");
    return x->column(0);
}

Matrix HomSpace::coordinate_columns(const std::vector<Matrix>& fs) const {
    const std::size_t dn = target_.dim();
    Matrix v(cover_.rank * dn, fs.size(), target_.p());
    for (std::size_t s = 0; s < fs.size(); ++s) {
        const Matrix values = fs[s] * cover_.generators;
        for (std::size_t l = 0; l < cover_.rank; ++l) {
            for (std::size_t i = 0; i < dn; ++i) v(l * dn + i, s) = values(i, l);
        }
    }
    auto x = solve_linear(embedding_, v);
    if (!x) throw ContractViolation("matrix is not a homomorphism between these modules");
    return *x;
}

HomSpace hom_module(const Module& m, const Module& n) { return HomSpace(m, n); }

HomSpace dual_module(const Module& m) { return HomSpace(m, free_module(m.algebra(), 1)); }

// ---------------------------------------------------------------- free summands

FreeSplitting split_free_summands(const Module& m) {
    FreeSplitting out{m, 0};
    for (;;) {
        const Module& cur = out.core;
        if (cur.dim() == 0) break;
        const HomSpace dual = dual_module(cur);
        // f ∈ M* and x ∈ M with f(x) a unit split off Λ·x ≅ Λ.
        std::optional<Matrix> splitting;
        for (const Matrix& f : dual.basis_maps()) {
            for (std::size_t t = 0; t < cur.dim(); ++t) {
                if (f(0, t) != 0) {
                    splitting = f;
                    break;
                }
            }
            if (splitting) break;
        }
        if (!splitting) break;
        out.core = submodule(cur, kernel_basis(*splitting));
        ++out.free_rank;
    }
    return out;
}

// ---------------------------------------------------------------- isomorphism

ModuleFingerprint fingerprint(const Module& m) {
    ModuleFingerprint fp;
    fp.dim = m.dim();
    Matrix cur = Matrix::identity(m.dim(), m.p());
    while (cur.cols() > 0) {
        cur = maximal_ideal_times(m, cur);
        fp.radical_series.push_back(cur.cols());
    }
    const auto gens = m.generator_actions();
    std::size_t prev = 0;
    Matrix annihilator = Matrix::identity(m.dim(), m.p());  // rows cut out the current socle layer
    for (;;) {
        std::vector<Matrix> rows;
        for (const auto& g : gens) rows.push_back(annihilator * g);
        const Matrix layer = rows.empty() ? Matrix::identity(m.dim(), m.p())
                                          : kernel_basis(vstack(rows, m.dim(), m.p()));
        fp.socle_series.push_back(layer.cols());
        if (layer.cols() == m.dim() || layer.cols() == prev) break;
        prev = layer.cols();
        annihilator = kernel_basis(layer.transposed()).transposed();
    }
    return fp;
}

IsoVerdict is_isomorphic(const Module& m, const Module& n, const IsoOptions& opts) {
    if (!same_ring(m, n)) throw ContractViolation("isomorphism test across different rings");
    IsoVerdict v;
    if (m.dim() != n.dim()) {
        v.kind = IsoVerdict::Kind::No;
        v.certificate = "dimension " + std::to_string(m.dim()) + " vs " + std::to_string(n.dim());
        return v;
    }
    if (m.dim() == 0) {
        v.kind = IsoVerdict::Kind::Yes;
        v.witness = Matrix(0, 0, m.p());
        v.certificate = "both zero";
        return v;
    }
    const ModuleFingerprint fm = fingerprint(m);
    const ModuleFingerprint fn = fingerprint(n);
    if (fm.radical_series != fn.radical_series) {
        v.kind = IsoVerdict::Kind::No;
        v.certificate = "radical series differ";
        return v;
    }
    if (fm.socle_series != fn.socle_series) {
        v.kind = IsoVerdict::Kind::No;
        v.certificate = "socle series differ";
        return v;
    }
    const std::size_t end_m = hom_module(m, m).dim();
    const std::size_t end_n = hom_module(n, n).dim();
    if (end_m != end_n) {
        v.kind = IsoVerdict::Kind::No;
        v.certificate = "dim End(M) = " + std::to_string(end_m) + " vs dim End(N) = " + std::to_string(end_n);
        return v;
    }
    const HomSpace hom(m, n);
    if (hom.dim() != end_m) {
        v.kind = IsoVerdict::Kind::No;
        v.certificate = "dim Hom(M,N) = " + std::to_string(hom.dim()) + " differs from dim End(M)";
        return v;
    }
    const auto basis = hom.basis_maps();
    const std::size_t h = basis.size();
    const std::uint32_t p = m.p();
    const std::size_t dim = m.dim();

    long double total = 1;
    for (std::size_t i = 0; i < h; ++i) total *= p;
    if (total <= static_cast<long double>(opts.exhaust_cap)) {
        // Odometer over all coefficient vectors; each digit bump adds one basis map.
        std::vector<Scalar> digits(h, 0);
        Matrix cur(dim, dim, p);
        for (;;) {
            std::size_t i = 0;
            while (i < h) {
                cur = cur + basis[i];
                digits[i] = (digits[i] + 1) % p;
                if (digits[i] != 0) break;
                ++i;
            }
            if (i == h) break;
            if (rank(cur) == dim) {
                v.kind = IsoVerdict::Kind::Yes;
                v.witness = cur;
                v.certificate = "invertible homomorphism found by exhaustive enumeration";
                return v;
            }
        }
        v.kind = IsoVerdict::Kind::No;
        v.certificate = "exhaustive search of Hom(M,N) (" + std::to_string(h) + "-dimensional) found no isomorphism";
        return v;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Scalar> coef(0, p - 1);
    for (std::size_t s = 0; s < opts.random_samples; ++s) {
        Matrix cur(dim, dim, p);
        for (const auto& b : basis) cur.add_scaled(b, coef(rng));
        if (rank(cur) == dim) {
            v.kind = IsoVerdict::Kind::Yes;
            v.witness = cur;
            v.certificate = "invertible homomorphism found by random sampling";
            return v;
        }
    }
    v.kind = IsoVerdict::Kind::Unknown;
    v.certificate = "Hom(M,N) too large for exhaustive search and sampling found no isomorphism";
    return v;
}

}  // namespace redhom
