#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redhom/error.hpp"
#include "support.hpp"

using namespace redhom;
using namespace redhom::testing;

namespace {

LambdaMatrix row_of(const AlgebraPtr& a, const std::vector<std::string>& labels) {
    LambdaMatrix m(a, 1, labels.size());
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const auto& ls = a->labels();
        m.entry(0, j) = a->basis_element(static_cast<std::size_t>(std::find(ls.begin(), ls.end(), labels[j]) - ls.begin()));
    }
    return m;
}

}  // namespace

TEST_CASE("free modules") {
    auto r1 = ring("R1q5");
    const Module f = free_module(r1, 1);
    CHECK(f.dim() == 3);
    CHECK(f.generator_action(0) == r1->multiplication_matrix(r1->generator(0)));
    auto r2 = ring("R2q5");
    const Module f2 = free_module(r2, 2);
    CHECK(f2.dim() == 4);
    const Matrix x = f2.generator_action(0);
    CHECK_FALSE(x.is_zero());
    CHECK((x * x).is_zero());
    CHECK(free_module(r1, 0).is_zero());
}

TEST_CASE("cokernels of Λ-matrices") {
    auto r2 = ring("R2q5");
    CHECK(cokernel_of_lambda_matrix(row_of(r2, {"x"})).module.dim() == 1);
    CHECK(cokernel_of_lambda_matrix(LambdaMatrix::identity(r2, 1)).module.dim() == 0);
    auto r1 = ring("R1q5");
    const Module m = cokernel_of_lambda_matrix(row_of(r1, {"x", "y"})).module;
    CHECK(is_isomorphic(m, residue_field(r1)).yes());
}

TEST_CASE("Hom examples") {
    auto r2 = ring("R2q5");
    auto r1 = ring("R1q5");
    CHECK(hom_module(residue_field(r2), free_module(r2, 1)).dim() == 1);
    CHECK(is_isomorphic(hom_module(residue_field(r2), free_module(r2, 1)).module(), residue_field(r2)).yes());
    CHECK(hom_module(residue_field(r1), free_module(r1, 1)).dim() == 2);
    for (const char* id : {"R1q5", "R3q2", "R4q5"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 7, 3, 8)) {
            const HomSpace h = hom_module(free_module(a, 1), s.module);
            CHECK(h.dim() == s.module.dim());
            CHECK(is_isomorphic(h.module(), s.module).yes());
        }
    }
}

TEST_CASE("Hom agrees with the commuting-matrix oracle") {
    for (const char* id : {"R1q2", "R1q5", "R2q5e3", "R3q2", "R4q2"}) {
        auto a = ring(id);
        const auto samples = sample_modules(a, 19, 4, 8);
        for (const auto& m : samples) {
            for (const auto& n : samples) {
                const HomSpace h(m.module, n.module);
                CHECK(h.dim() == hom_dim_oracle(m.module, n.module));
                for (const Matrix& f : h.basis_maps()) CHECK(ModuleMap{m.module, n.module, f}.is_homomorphism());
            }
        }
    }
}

TEST_CASE("syzygies") {
    auto r1 = ring("R1q5");
    const SyzygyResult s = projective_cover_and_syzygy(residue_field(r1));
    CHECK(s.cover.rank == 1);
    CHECK(s.syzygy.dim() == 2);
    for (const Matrix& act : s.syzygy.generator_actions()) CHECK(act.is_zero());
    CHECK(syzygy(free_module(r1, 1)).is_zero());
    auto r2 = ring("R2q5");
    CHECK(is_isomorphic(syzygy(residue_field(r2)), residue_field(r2)).yes());
}

TEST_CASE("syzygy lies in m times the cover") {
    for (const char* id : {"R1q5", "R3q5", "R4q2"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 3, 4, 10)) {
            const SyzygyResult r = projective_cover_and_syzygy(s.module);
            CHECK(r.cover.rank == minimal_generator_count(s.module));
            CHECK(rank(r.cover.map) == s.module.dim());
            CHECK((r.cover.map * r.inclusion).is_zero());
            const Module free = free_module(a, r.cover.rank);
            const Matrix m_free = maximal_ideal_times(free, Matrix::identity(free.dim(), a->p()));
            CHECK(column_span_contains(m_free, r.inclusion));
        }
    }
}

TEST_CASE("transposes") {
    auto r2 = ring("R2q5");
    CHECK(is_isomorphic(transpose(residue_field(r2)), residue_field(r2)).yes());
    auto r1 = ring("R1q5");
    CHECK(transpose(free_module(r1, 1)).is_zero());

    // Independent count for tr k over R1: coker of Λ → Λ², 1 ↦ (x, y).
    // The image is spanned by (x,y)·1, (x,y)·x, (x,y)·y in the basis (1,x,y)².
    const std::size_t rank_of_image = rank(Matrix::from_rows(
        {
            {0, 0, 0},
            {1, 0, 0},
            {0, 0, 0},
            {0, 0, 0},
            {0, 0, 0},
            {1, 0, 0},
        },
        5));
    CHECK(transpose(residue_field(r1)).dim() == 6 - rank_of_image);
    CHECK(transpose(residue_field(r1)).dim() == 5);
}

TEST_CASE("splitting off free summands") {
    auto r1 = ring("R1q5");
    const Module k = residue_field(r1);
    FreeSplitting s = split_free_summands(direct_sum(r1, {free_module(r1, 1), k}));
    CHECK(s.free_rank == 1);
    CHECK(is_isomorphic(s.core, k).yes());
    s = split_free_summands(power(k, 2));
    CHECK(s.free_rank == 0);
    CHECK(s.core.dim() == 2);
    s = split_free_summands(free_module(r1, 2));
    CHECK(s.free_rank == 2);
    CHECK(s.core.is_zero());
}

TEST_CASE("isomorphism verdicts") {
    auto r2 = ring("R2q5");
    const Module k = residue_field(r2);
    const IsoVerdict v = is_isomorphic(k, k);
    REQUIRE(v.yes());
    CHECK(rank(*v.witness) == 1);
    CHECK(is_isomorphic(k, free_module(r2, 1)).no());

    auto r1 = ring("R1q5");
    const Module k1 = residue_field(r1);
    const Module trtr = split_free_summands(transpose(transpose(k1))).core;
    CHECK(is_isomorphic(trtr, k1).yes());
}

TEST_CASE("isomorphism is basis independent") {
    std::mt19937_64 rng(23);
    for (const char* id : {"R1q5", "R3q2", "R4q5"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 31, 3, 8)) {
            const Module moved = rebased(s.module, random_invertible(s.module.dim(), a->p(), rng));
            const IsoVerdict v = is_isomorphic(s.module, moved);
            REQUIRE(v.yes());
            CHECK(ModuleMap{s.module, moved, *v.witness}.is_homomorphism());
            CHECK(rank(*v.witness) == s.module.dim());
        }
    }
}

TEST_CASE("direct sums") {
    auto r1 = ring("R1q5");
    CHECK(direct_sum(r1, {}).is_zero());
    const Module m = direct_sum(r1, {residue_field(r1), free_module(r1, 2)});
    CHECK(m.dim() == 7);
    m.validate();
}

TEST_CASE("module axioms are checked") {
    auto r1 = ring("R1q5");
    // x and y acting by non-commuting matrices
    const Matrix x = Matrix::from_rows({{0, 0}, {1, 0}}, 5);
    const Matrix y = Matrix::from_rows({{0, 1}, {0, 0}}, 5);
    CHECK_THROWS_AS(Module::from_generator_actions(r1, {x, y}), InputError);
    // x acting with x^2 ≠ 0
    auto r2 = ring("R2q5");
    const Matrix n = Matrix::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 5);
    CHECK_THROWS_AS(Module::from_generator_actions(r2, {n}), InputError);
}

TEST_CASE("quotients carry a section") {
    auto r1 = ring("R1q5");
    const Module f = free_module(r1, 1);
    const Matrix mf = maximal_ideal_times(f, Matrix::identity(3, 5));
    const Quotient q = quotient(f, mf);
    CHECK(q.module.dim() == 1);
    CHECK(q.projection * q.lift == Matrix::identity(1, 5));
    CHECK(ModuleMap{f, q.module, q.projection}.is_homomorphism());
}
