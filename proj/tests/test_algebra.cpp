#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redhom/error.hpp"
#include "support.hpp"

using namespace redhom;
using redhom::testing::ring;

namespace {

RingSpec mono(std::uint32_t p, std::vector<std::string> vars, std::vector<std::vector<int>> ideal) {
    RingSpec s;
    s.p = p;
    s.variables = std::move(vars);
    s.ideal = std::move(ideal);
    return s;
}

}  // namespace

TEST_CASE("k[x,y]/(x^2,xy,y^2)") {
    auto a = Algebra::build(mono(5, {"x", "y"}, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(a->dim() == 3);
    CHECK(a->labels() == std::vector<std::string>{"1", "x", "y"});
    CHECK(a->socle_dim() == 2);
    CHECK_FALSE(a->is_gorenstein());
    CHECK_FALSE(a->is_monomial_ci());
    CHECK(a->loewy_length() == 2);
}

TEST_CASE("k[x]/(x^2)") {
    auto a = Algebra::build(mono(5, {"x"}, {{2}}));
    CHECK(a->dim() == 2);
    CHECK(a->is_gorenstein());
    CHECK(a->is_monomial_ci());
    // socle spanned by x
    CHECK(a->socle_basis() == Matrix::from_rows({{0}, {1}}, 5));
}

TEST_CASE("the prime field") {
    auto a = Algebra::build(mono(2, {}, {}));
    CHECK(a->dim() == 1);
    CHECK(a->is_field());
    CHECK(a->socle_dim() == 1);
    CHECK(a->is_gorenstein());
    const SocleReport r = socle_and_classify(*a);
    CHECK(r.is_field);
}

TEST_CASE("k[x,y]/(x^2,y^2)") {
    auto a = Algebra::build(mono(5, {"x", "y"}, {{2, 0}, {0, 2}}));
    CHECK(a->dim() == 4);
    CHECK(a->socle_dim() == 1);
    CHECK(a->is_monomial_ci());
    const auto& labels = a->labels();
    const std::size_t xy = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), "x*y") - labels.begin());
    REQUIRE(xy < 4);
    CHECK(a->socle_basis().column(0)[xy] != 0);
}

TEST_CASE("truncated polynomial rings are Gorenstein") {
    for (int e = 2; e <= 9; ++e) {
        auto a = Algebra::build(mono(2, {"x"}, {{e}}));
        CHECK(a->dim() == static_cast<std::size_t>(e));
        CHECK(a->is_gorenstein());
    }
}

TEST_CASE("missing pure power names the variable") {
    try {
        Algebra::build(mono(5, {"x", "y"}, {{2, 0}, {1, 1}}));
        FAIL("expected rejection");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("y") != std::string::npos);
    }
}

TEST_CASE("structure constants reproduce k[x]/(x^2)") {
    RingSpec s;
    s.mode = RingSpec::Mode::StructureConstants;
    s.p = 5;
    s.labels = {"1", "x"};
    s.table = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    auto a = Algebra::build(s);
    auto b = Algebra::build(mono(5, {"x"}, {{2}}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(a->basis_product(i, j) == b->basis_product(i, j));
}

TEST_CASE("five-dimensional Gorenstein algebra") {
    auto a = ring("R4q5");
    CHECK(a->dim() == 5);
    CHECK(a->is_gorenstein());
    CHECK(a->num_generators() == 3);
    CHECK_FALSE(a->is_complete_intersection().has_value());
    CHECK(a->socle_basis() == Matrix::from_rows({{0}, {0}, {0}, {0}, {1}}, 5));
}

TEST_CASE("non-commutative table is rejected with a witness") {
    RingSpec s = catalog_ring("R4q5");
    s.table[1][2] = Element{0, 0, 0, 0, 1};  // x*y = w but y*x = 0
    try {
        Algebra::build(s);
        FAIL("expected rejection");
    } catch (const InputError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("commut") != std::string::npos);
        CHECK(msg.find("x") != std::string::npos);
        CHECK(msg.find("y") != std::string::npos);
    }
}

TEST_CASE("non-associative table is rejected") {
    RingSpec s = catalog_ring("R4q5");
    s.table[1][1] = Element{0, 0, 1, 0, 0};  // x*x = y, then (x*x)*y = w but x*(x*y) = 0
    CHECK_THROWS_AS(Algebra::build(s), InputError);
}

TEST_CASE("non-local table is rejected") {
    RingSpec s;
    s.mode = RingSpec::Mode::StructureConstants;
    s.p = 5;
    s.labels = {"1", "e"};
    s.table = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}};  // e idempotent
    CHECK_THROWS_AS(Algebra::build(s), InputError);
}

TEST_CASE("unit acts as identity and the maximal ideal is nilpotent") {
    for (const char* id : {"R1q5", "R2q5e4", "R3q2a2b3", "R4q5", "R5q2"}) {
        auto a = ring(id);
        CHECK(a->regular_action(0) == Matrix::identity(a->dim(), a->p()));
        Matrix power = Matrix::identity(a->dim(), a->p());
        // a product of dim generators is zero
        for (std::size_t i = 0; i < a->dim(); ++i) {
            Matrix sum(a->dim(), a->dim(), a->p());
            for (std::size_t g = 0; g < a->num_generators(); ++g) sum = sum + a->multiplication_matrix(a->generator(g));
            power = power * sum;
        }
        if (a->num_generators() > 0) CHECK(power.is_zero());
    }
}

TEST_CASE("export and rebuild is the identity") {
    for (const char* id : {"R1q5", "R2q2e5", "R3q5a3b2", "R4q2"}) {
        auto a = ring(id);
        auto b = Algebra::build(a->to_structure_spec());
        CHECK(b->dim() == a->dim());
        CHECK(b->labels() == a->labels());
        for (std::size_t i = 0; i < a->dim(); ++i)
            for (std::size_t j = 0; j < a->dim(); ++j) CHECK(a->basis_product(i, j) == b->basis_product(i, j));
        CHECK(b->to_structure_spec() == a->to_structure_spec());
    }
}

TEST_CASE("catalog ids") {
    CHECK(ring("R1q2")->p() == 2);
    CHECK(Algebra::build(catalog_ring("R1q2", 5))->p() == 5);
    CHECK(ring("R2q5e3")->dim() == 3);
    CHECK(ring("R3q5a2b3")->dim() == 6);
    CHECK_THROWS_AS(catalog_ring("R9"), InputError);
    CHECK_THROWS_AS(catalog_ring("R1q4"), InputError);
    CHECK_THROWS_AS(catalog_ring("R1e3"), InputError);
}
