#pragma once

// Shared fixtures and independent oracles for the unit tests.

#include <random>

#include "redhom/catalog.hpp"
#include "redhom/complex.hpp"

namespace redhom::testing {

inline AlgebraPtr ring(const std::string& id) { return Algebra::build(catalog_ring(id)); }

inline Matrix random_matrix(std::size_t r, std::size_t c, std::uint32_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    Matrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline Matrix random_invertible(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(n, n, p, rng);
        if (rank(m) == n) return m;
    }
}

/// dim Hom(M,N) straight from F·a_M(x) = a_N(x)·F for every generator x,
/// written as a linear system in the dN·dM entries of F.
inline std::size_t hom_dim_oracle(const Module& m, const Module& n) {
    const std::size_t dm = m.dim(), dn = n.dim();
    const std::uint32_t p = m.p();
    const PrimeField f(p);
    const std::size_t g = m.algebra()->num_generators();
    Matrix sys(g * dn * dm, dn * dm, p);
    for (std::size_t k = 0; k < g; ++k) {
        const Matrix am = m.generator_action(k);
        const Matrix an = n.generator_action(k);
        // row (k, i, j) : Σ_l F(i,l) am(l,j) - Σ_l an(i,l) F(l,j)
        for (std::size_t i = 0; i < dn; ++i) {
            for (std::size_t j = 0; j < dm; ++j) {
                const std::size_t row = (k * dn + i) * dm + j;
                for (std::size_t l = 0; l < dm; ++l) sys(row, i * dm + l) = f.add(sys(row, i * dm + l), am(l, j));
                for (std::size_t l = 0; l < dn; ++l) sys(row, l * dm + j) = f.sub(sys(row, l * dm + j), an(i, l));
            }
        }
    }
    return dn * dm - rank(sys);
}

/// The same module with its basis changed by an invertible matrix.
inline Module rebased(const Module& m, const Matrix& s) {
    const Matrix sinv = *inverse(s);
    std::vector<Matrix> acts;
    for (std::size_t b = 0; b < m.algebra()->dim(); ++b) acts.push_back(sinv * m.basis_action(b) * s);
    return Module(m.algebra(), m.dim(), acts);
}

}  // namespace redhom::testing
