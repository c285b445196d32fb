#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redhom/error.hpp"
#include "redhom/torsionfree.hpp"
#include "support.hpp"

using namespace redhom;
using namespace redhom::testing;

namespace {

bool in_span_of_x(const AlgebraPtr& a, const Element& e) {
    // k[x]/(x^2): a nonzero multiple of x
    return e[0] == 0 && e[1] != 0 && a->dim() == 2;
}

}  // namespace

TEST_CASE("classification examples") {
    auto r1 = ring("R1q5");
    auto r2 = ring("R2q5");
    TorsionfreeVerdict v = torsionfree_classify(free_module(r1, 1), 4);
    CHECK(v.m_max == 4);
    CHECK(v.n_max == 4);
    CHECK(v.totally_reflexive_up_to_bound);

    v = torsionfree_classify(residue_field(r2), 6);
    CHECK(v.m_max == 6);
    CHECK(v.n_max == 6);
    CHECK(v.totally_reflexive_up_to_bound);

    v = torsionfree_classify(residue_field(r1), 4);
    CHECK(v.m_max == 0);
    CHECK(v.n_max == 1);
    CHECK_FALSE(v.totally_reflexive_up_to_bound);
    CHECK(v.in_class(0, 1));
    CHECK_FALSE(v.in_class(1, 0));
    CHECK_FALSE(v.in_class(0, 2));
    CHECK_THROWS_AS(torsionfree_classify(residue_field(r1), 0), ContractViolation);
}

TEST_CASE("m_max and n_max are maximal vanishing runs") {
    for (const char* id : {"R1q5", "R1q2", "R3q5", "R4q5"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 43, 4, 10)) {
            const TorsionfreeVerdict v = torsionfree_classify(s.module, 3);
            for (std::size_t i = 1; i <= v.m_max; ++i) CHECK(v.ext_module.dims[i] == 0);
            if (v.m_max < 3) CHECK(v.ext_module.dims[v.m_max + 1] != 0);
            for (std::size_t j = 1; j <= v.n_max; ++j) CHECK(v.ext_transpose.dims[j] == 0);
            if (v.n_max < 3) CHECK(v.ext_transpose.dims[v.n_max + 1] != 0);
        }
    }
}

TEST_CASE("pushforward of k over k[x]/(x^2)") {
    auto r2 = ring("R2q5");
    const Pushforward p = pushforward(residue_field(r2), 2);
    CHECK(p.exact);
    CHECK(p.dual_surjects_onto_dual);
    CHECK(p.sequence.at(-1).dim() == 2);
    CHECK(p.sequence.at(-2).dim() == 2);
    CHECK(p.sequence.maps_are_homomorphisms());
}

TEST_CASE("pushforward of Λ is the identity splice") {
    auto r1 = ring("R1q5");
    const Pushforward p = pushforward(free_module(r1, 1), 2);
    CHECK(p.exact);
    CHECK(p.sequence.at(-1).dim() == 3);
    CHECK(p.sequence.at(-2).dim() == 0);
    CHECK(rank(p.sequence.differential(0)) == 3);
}

TEST_CASE("pushforward of k over R1") {
    auto r1 = ring("R1q5");
    const Module k = residue_field(r1);
    // Ext^1(tr k, Λ) = 0, so the first position is exact
    CHECK(pushforward(k, 1).exact);
    const Pushforward p = pushforward(k, 2);
    CHECK_FALSE(p.exact);
    CHECK(p.exactness[0].exact);
    CHECK_FALSE(p.exactness[1].exact);
    CHECK(p.transpose_ext[2] != 0);
    CHECK(p.dual_surjects_onto_dual);
}

TEST_CASE("pushforward exactness tracks Ext of the transpose") {
    for (const char* id : {"R1q5", "R1q2", "R3q2", "R4q5"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 47, 3, 8)) {
            const Pushforward p = pushforward(s.module, 3);
            CHECK(p.dual_surjects_onto_dual);
            for (std::size_t j = 1; j <= 3; ++j) CHECK(p.exactness[j - 1].exact == (p.transpose_ext[j] == 0));
        }
    }
}

TEST_CASE("sequence for k over k[x]/(x^2)") {
    auto r2 = ring("R2q5");
    const Theorem3Sequence s = build_theorem3_sequence(residue_field(r2), 1, 1);
    CHECK(s.complex.lo() == -1);
    CHECK(s.complex.hi() == 2);
    CHECK(s.complex.ranks() == std::vector<std::size_t>{1, 1, 1, 1});
    for (int i = 0; i <= 2; ++i) CHECK(in_span_of_x(r2, s.complex.differential(i).entry(0, 0)));
    CHECK(is_isomorphic(s.image, residue_field(r2)).yes());
}

TEST_CASE("sequence for Λ") {
    auto r1 = ring("R1q5");
    const Theorem3Sequence s = build_theorem3_sequence(free_module(r1, 1), 2, 2);
    // positions -2 … 3: only P_0 and P_{-1} are nonzero, joined by an isomorphism
    CHECK(s.complex.ranks() == std::vector<std::size_t>{0, 1, 1, 0, 0, 0});
    CHECK(r1->is_unit(s.complex.differential(0).entry(0, 0)));
}

TEST_CASE("sequence for k ⊕ Λ") {
    auto r2 = ring("R2q5");
    const Module m = direct_sum(r2, {residue_field(r2), free_module(r2, 1)});
    const Theorem3Sequence s = build_theorem3_sequence(m, 1, 1);
    // positions -1 … 2: the free summand only contributes to P_0 and P_{-1}
    CHECK(s.complex.ranks() == std::vector<std::size_t>{2, 2, 1, 1});
    CHECK(is_isomorphic(s.image, m).yes());
}

TEST_CASE("building refuses modules outside the class") {
    auto r1 = ring("R1q5");
    const Module k = residue_field(r1);
    try {
        build_theorem3_sequence(k, 1, 1);
        FAIL("expected refusal");
    } catch (const RefusedError& e) {
        CHECK_FALSE(e.transpose_side);
        CHECK(e.failing_index == 1);
    }
    try {
        build_theorem3_sequence(k, 0, 2);
        FAIL("expected refusal");
    } catch (const RefusedError& e) {
        CHECK(e.transpose_side);
        CHECK(e.failing_index == 2);
    }
    CHECK_NOTHROW(build_theorem3_sequence(k, 0, 1));
}

TEST_CASE("verifying a built sequence") {
    auto r2 = ring("R2q5");
    const Theorem3Sequence s = build_theorem3_sequence(residue_field(r2), 1, 1);
    const Theorem3Verdict v = verify_theorem3_sequence(to_module_complex(s.complex), 1, 1, Theorem3Condition::AllTermsInClass);
    CHECK(v.holds);
    CHECK(v.image_in_class);
    CHECK(v.consistent());
    const Theorem3Verdict w = verify_theorem3_sequence(to_module_complex(s.complex), 1, 1, Theorem3Condition::SplitClasses);
    CHECK(w.holds);
}

TEST_CASE("zero maps fail exactness") {
    auto r2 = ring("R2q5");
    const Module k = residue_field(r2);
    const ModuleComplex c(-1, {k, k, free_module(r2, 1)}, {Matrix(1, 1, 5), Matrix(1, 2, 5)});
    const Theorem3Verdict v = verify_theorem3_sequence(c, 0, 1, Theorem3Condition::AllTermsInClass);
    CHECK_FALSE(v.sequence_exact);
    CHECK_FALSE(v.holds);
    CHECK_THROWS_AS(verify_theorem3_sequence(c, 1, 1, Theorem3Condition::AllTermsInClass), ContractViolation);
}

TEST_CASE("exact sequence with a non-exact dual") {
    auto r1 = ring("R1q5");
    const ModuleComplex c = to_module_complex(theorem3_splice(residue_field(r1), 1, 1));
    const Theorem3Verdict v = verify_theorem3_sequence(c, 1, 1, Theorem3Condition::AllTermsInClass);
    CHECK(v.sequence_exact);
    CHECK_FALSE(v.dual_exact);
    CHECK_FALSE(v.holds);
    bool defect_seen = false;
    for (const auto& e : v.dual_exactness) defect_seen = defect_seen || e.defect() > 0;
    CHECK(defect_seen);
    CHECK_FALSE(v.image_in_class);
}

TEST_CASE("classification and sequences agree") {
    for (const char* id : {"R1q5", "R2q5", "R3q2", "R4q2"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 53, 2, 8)) {
            const TorsionfreeVerdict t = torsionfree_classify(s.module, 2);
            for (std::size_t m = 0; m <= 2; ++m) {
                for (std::size_t n = 1; n <= 2; ++n) {
                    const Theorem3Verdict v = verify_theorem3_sequence(
                        to_module_complex(theorem3_splice(s.module, m, n)), m, n, Theorem3Condition::AllTermsInClass);
                    CHECK(v.holds == t.in_class(m, n));
                    CHECK(v.consistent());
                    if (t.in_class(m, n)) CHECK_NOTHROW(build_theorem3_sequence(s.module, m, n));
                }
            }
        }
    }
}

TEST_CASE("G-dimension reports") {
    auto r2 = ring("R2q5");
    GdimReport g = gdim_report(residue_field(r2), 6);
    CHECK(g.verdict == GdimReport::Verdict::Zero);
    CHECK_FALSE(g.sup_positive.has_value());
    CHECK(g.sup_with_zero == 0u);
    CHECK(g.formula_value == 0u);
    CHECK(g.tail_zero);

    auto r1 = ring("R1q5");
    CHECK(gdim_report(free_module(r1, 1), 4).verdict == GdimReport::Verdict::Zero);
    g = gdim_report(residue_field(r1), 5);
    CHECK(g.verdict == GdimReport::Verdict::InfiniteUpToBound);
    for (std::size_t i = 1; i <= 5; ++i) CHECK(g.ext.dims[i] != 0);
    CHECK(g.sup_positive == 5u);
    CHECK_FALSE(g.tail_zero);
    CHECK_THROWS_AS(gdim_report(residue_field(r1), 1), ContractViolation);
}

TEST_CASE("Gorenstein rings: G-dimension zero everywhere") {
    for (const char* id : {"R2q2e3", "R3q5", "R4q5"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 59, 3, 8)) {
            const GdimReport g = gdim_report(s.module, 4);
            CHECK(g.verdict == GdimReport::Verdict::Zero);
            CHECK_FALSE(g.sup_positive.has_value());
            CHECK(g.formula_value == 0u);
        }
    }
}
