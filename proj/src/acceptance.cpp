#include "redhom/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "redhom/catalog.hpp"
#include "redhom/error.hpp"
#include "redhom/reducing.hpp"
#include "redhom/torsionfree.hpp"

namespace redhom {

namespace {

AlgebraPtr ring(const std::string& id) { return Algebra::build(catalog_ring(id)); }

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

bool red_pd_example(std::ostringstream& out) {
    auto r1 = ring("R1q5");
    SearchLimits l;
    l.max_steps = 2;
    l.n_max = 1;
    l.ab_max = 2;
    const SearchResult r = search_reducing(residue_field(r1), ReduceMode::Red, ReduceTarget::Pd, l);
    if (!r.witness) {
        out << "no witness";
        return false;
    }
    verify_witness(*r.witness);
    const auto& w = *r.witness;
    out << "depth " << w.depth();
    if (w.depth() != 1) return false;
    const ReductionStep& s = w.steps[0];
    const bool lambda = is_isomorphic(s.sequence.middle, free_module(r1, 1)).yes();
    out << ", (n,a,b) = (" << s.n << "," << s.a << "," << s.b << "), middle ≅ Λ: " << (lambda ? "yes" : "no");
    return s.n == 0 && s.a == 2 && s.b == 1 && lambda;
}

bool ured_negative(std::ostringstream& out) {
    auto r1 = ring("R1q2");
    SearchLimits l;
    l.max_steps = 1;
    l.n_max = 3;
    bool ok = true;
    // Once with the dimension filter, once enumerating every extension element.
    for (bool filter : {true, false}) {
        l.dimension_filter = filter;
        const SearchResult r = search_reducing(residue_field(r1), ReduceMode::Ured, ReduceTarget::Pd, l);
        out << (filter ? "filtered: " : "; unfiltered: ") << (r.witness ? "witness found" : "no witness")
            << ", exhaustive=" << (r.exhaustive ? "true" : "false") << ", examined " << r.examined << ", pruned "
            << r.pruned;
        ok = ok && !r.witness && r.exhaustive;
    }
    return ok;
}

bool betti_examples(std::ostringstream& out) {
    std::vector<std::size_t> pow2, ones(9, 1), linear;
    for (std::size_t i = 0; i <= 8; ++i) {
        pow2.push_back(std::size_t{1} << i);
        linear.push_back(i + 1);
    }
    const auto b1 = betti_numbers(residue_field(ring("R1q5")), 8);
    const auto b2 = betti_numbers(residue_field(ring("R2q5")), 8);
    const auto b3 = betti_numbers(residue_field(ring("R3q5")), 8);
    out << "R1 (" << join(b1) << ") R2 (" << join(b2) << ") R3 (" << join(b3) << ")";
    return b1 == pow2 && b2 == ones && b3 == linear;
}

bool complexity_equality(std::ostringstream& out) {
    SearchLimits l;
    l.max_steps = 2;
    l.n_max = 1;
    bool ok = true;
    for (const auto& [id, cx, exact] : {std::tuple{"R2q5", 1u, true}, std::tuple{"R3q5", 2u, false}}) {
        const Theorem4Report r = theorem4_check(residue_field(ring(id)), l, 10);
        const auto c = complexity_value(r.cx);
        const std::size_t depth = r.ured.witness ? r.ured.witness->depth() : 0;
        out << id << ": cx " << r.cx.describe() << ", ured " << (r.ured.witness ? std::to_string(depth) : "none");
        ok = ok && c && *c == cx && r.ured.witness && (exact ? depth == cx : depth <= cx);
        if (r.ured.witness) verify_witness(*r.ured.witness);
        for (const auto& q : r.inequalities) {
            ok = ok && q.holds && q.checked == 10;
            if (!q.holds) out << " [inequality fails at step " << q.step << "]";
        }
        out << "; ";
    }
    return ok;
}

bool roundtrip(std::ostringstream& out) {
    std::size_t modules = 0, cases = 0, agree = 0;
    std::uint64_t seed = 1000;
    for (const char* id : {"R1q5", "R2q5", "R3q5", "R4q5"}) {
        auto a = ring(id);
        std::mt19937_64 rng(seed++);
        for (int k = 0; k < 6; ++k) {
            const Module m = random_module(a, rng, 12);
            ++modules;
            const TorsionfreeVerdict t = torsionfree_classify(m, 3);
            for (std::size_t mm = 0; mm <= 3; ++mm) {
                for (std::size_t n = 1; n <= 3; ++n) {
                    ++cases;
                    const bool expected = t.in_class(mm, n);
                    const Theorem3Verdict direct = verify_theorem3_sequence(
                        to_module_complex(theorem3_splice(m, mm, n)), mm, n, Theorem3Condition::AllTermsInClass);
                    bool built_ok = false;
                    try {
                        const Theorem3Sequence s = build_theorem3_sequence(m, mm, n);
                        const Theorem3Verdict v = verify_theorem3_sequence(to_module_complex(s.complex), mm, n,
                                                                           Theorem3Condition::AllTermsInClass);
                        built_ok = v.holds && v.image_in_class && v.consistent() && is_isomorphic(s.image, m).yes();
                    } catch (const RefusedError&) {
                        built_ok = false;
                    }
                    if (built_ok == expected && direct.holds == expected && direct.consistent()) ++agree;
                }
            }
        }
    }
    out << agree << "/" << cases << " cases agree over " << modules << " modules";
    return modules >= 20 && agree == cases;
}

bool transpose_duality(std::ostringstream& out) {
    const IsoOptions opts{1u << 22, 256, 0};
    std::size_t total = 0, yes = 0;
    for (const char* id : {"R1q2", "R2q2", "R2q2e3", "R3q2", "R4q2", "R5q2"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 71, 6, 8)) {
            ++total;
            const Module lhs = split_free_summands(transpose(transpose(s.module))).core;
            const Module rhs = split_free_summands(s.module).core;
            if (is_isomorphic(lhs, rhs, opts).yes()) ++yes;
        }
    }
    out << yes << "/" << total << " modules";
    return total > 0 && yes == total;
}

bool gorenstein_suite(std::ostringstream& out) {
    SearchLimits l;
    l.max_steps = 1;
    l.tr_bound = 6;
    std::size_t total = 0, good = 0;
    for (const char* id : {"R2q5", "R3q5", "R4q5"}) {
        auto a = ring(id);
        for (const auto& s : sample_modules(a, 73, 5, 10)) {
            ++total;
            const GdimReport g = gdim_report(s.module, 6);
            bool ok = g.verdict == GdimReport::Verdict::Zero;
            for (std::size_t i = 1; i <= 6; ++i) ok = ok && g.ext.dims[i] == 0;
            for (ReduceMode mode : {ReduceMode::Red, ReduceMode::Ured}) {
                const SearchResult r = search_reducing(s.module, mode, ReduceTarget::Gdim, l);
                ok = ok && r.witness && r.witness->depth() == 0;
            }
            if (ok) ++good;
        }
    }
    auto r1 = ring("R1q5");
    const auto e1 = ext_dims(residue_field(r1), free_module(r1, 1), 6).dims;
    bool r1_ok = true;
    for (std::size_t i = 1; i <= 6; ++i) r1_ok = r1_ok && e1[i] != 0;
    out << good << "/" << total << " Gorenstein samples; Ext^i(k,Λ) over R1 = (" << join(e1) << ")";
    return good == total && r1_ok;
}

bool bass_plexity(std::ostringstream& out) {
    auto r1 = ring("R1q5");
    const auto mu1 = bass_numbers(free_module(r1, 1), 8);
    const GrowthEstimate g1 = growth_estimate(mu1, GrowthKind::Bass);
    auto r2 = ring("R2q5");
    const auto mu2 = bass_numbers(free_module(r2, 1), 8);
    const GrowthEstimate g2 = growth_estimate(mu2, GrowthKind::Bass);
    std::vector<std::size_t> expected2(9, 0);
    expected2[0] = 1;
    out << "μ(R1) = (" << join(mu1) << ") " << g1.describe() << "; μ(R2) = (" << join(mu2) << ") " << g2.describe();
    return mu1[0] == 2 && g1.exponential && mu2 == expected2 && g2.describe() == "poly(0)";
}

bool oracle_equivalence(std::ostringstream& out) {
    std::size_t total = 0, good = 0;
    for (const char* id : {"R1q2", "R1q5", "R2q5", "R2q2e3", "R3q5", "R3q2a2b3", "R4q5", "R5q2"}) {
        auto a = ring(id);
        const Module lambda = free_module(a, 1);
        for (const auto& s : sample_modules(a, 79, 4, 10)) {
            const std::size_t bound = 3;
            const auto dims = ext_dims(s.module, lambda, bound).dims;
            const ModuleComplex dual =
                apply_dual(to_module_complex(minimal_free_resolution(s.module, bound + 1).complex));
            for (std::size_t i = 0; i <= bound; ++i) {
                const std::vector<int> at{-static_cast<int>(i)};
                ++total;
                if (check_exactness(dual, at)[0].defect() == dims[i]) ++good;
            }
        }
    }
    out << good << "/" << total << " Ext dimensions agree";
    return total > 0 && good == total;
}

struct Criterion {
    int id;
    const char* name;
    double limit;
    bool (*run)(std::ostringstream&);
};

constexpr Criterion kCriteria[] = {
    {1, "red-pd of k over R1 is 1 via 0 -> k^2 -> R -> k -> 0", 5, red_pd_example},
    {2, "no one-step upper reduction of k over GF(2)-R1", 60, ured_negative},
    {3, "Betti numbers of k over R1, R2, R3", 5, betti_examples},
    {4, "complexity equals upper reducing pd on complete intersections", 30, complexity_equality},
    {5, "torsionfree classification round-trip through exact sequences", 60, roundtrip},
    {6, "tr tr M agrees with M up to free summands", 30, transpose_duality},
    {7, "Gorenstein rings: Ext vanishing and G-dimension zero", 30, gorenstein_suite},
    {8, "Bass numbers and plexity", 10, bass_plexity},
    {9, "Ext via resolution equals homology of the dual complex", 20, oracle_equivalence},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (const Criterion& c : kCriteria) {
        CriterionResult r{c.id, c.name, false, 0, c.limit, ""};
        std::ostringstream detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << " exception: " << e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.pass = ok && r.seconds < r.limit_seconds;
        if (ok && !r.pass) detail << " (over time budget)";
        r.detail = detail.str();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", r.seconds, r.limit_seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + buf + "): " +
           r.detail;
}

}  // namespace redhom
