#include "redhom/torsionfree.hpp"

#include <algorithm>
#include <string>

namespace redhom {

namespace {

// Largest k <= bound with dims[1..k] all zero.
std::size_t vanishing_run(const ExtTable& t) {
    std::size_t k = 0;
    while (k < t.bound && t.dims[k + 1] == 0) ++k;
    return k;
}

struct Splice {
    Resolution res;
    std::vector<LambdaMatrix> tail;  // e_2, …, e_{n+1} continuing d_1ᵀ
};

Splice make_splice(const Module& m, std::size_t mm, std::size_t n) {
    Resolution res = minimal_free_resolution(m, std::max<std::size_t>(mm + 1, 1));
    const LambdaMatrix d1t = res.complex.differential(1).transposed();
    std::vector<LambdaMatrix> tail = extend_resolution(d1t, n);
    return Splice{std::move(res), std::move(tail)};
}

// M → P_{-1} = Q_2*, induced by e_2ᵀ through the cover of M.
Matrix coevaluation(const Splice& s) {
    return s.tail.front().transposed().linear_map() * s.res.augmentation.section;
}

FreeComplex splice_complex(const AlgebraPtr& alg, const Splice& s, std::size_t mm, std::size_t n) {
    std::vector<std::size_t> ranks;
    std::vector<LambdaMatrix> diffs;
    for (int pos = -static_cast<int>(n); pos <= static_cast<int>(mm) + 1; ++pos) {
        if (pos < 0) {
            const std::size_t j = static_cast<std::size_t>(-pos);
            ranks.push_back(s.tail[j - 1].cols());
            if (j < n) diffs.push_back(s.tail[j].transposed());
        } else {
            ranks.push_back(s.res.betti[static_cast<std::size_t>(pos)]);
            diffs.push_back(pos == 0 ? s.tail.front().transposed() : s.res.complex.differential(pos));
        }
    }
    FreeComplex c(alg, -static_cast<int>(n), std::move(ranks), std::move(diffs));
    c.check_d_squared();
    return c;
}

std::size_t bound_for(std::size_t mm, std::size_t n) { return std::max<std::size_t>({mm, n, 1}); }

}  // namespace

TorsionfreeVerdict torsionfree_classify(const Module& m, std::size_t bound) {
    if (bound < 1) throw ContractViolation("classification bound must be at least 1");
    const Module lambda = free_module(m.algebra(), 1);
    TorsionfreeVerdict v;
    v.bound = bound;
    v.ext_module = ext_dims(m, lambda, bound);
    v.ext_transpose = ext_dims(transpose(m), lambda, bound);
    v.m_max = vanishing_run(v.ext_module);
    v.n_max = vanishing_run(v.ext_transpose);
    v.totally_reflexive_up_to_bound = v.m_max == bound && v.n_max == bound;
    return v;
}

Pushforward pushforward(const Module& m, std::size_t n) {
    if (n < 1) throw ContractViolation("pushforward needs n >= 1");
    const AlgebraPtr& alg = m.algebra();
    const Splice s = make_splice(m, 0, n);

    // Positions -n … 1; tail[j] = e_{j+2} : Q_{j+2} → Q_{j+1}, and F_{-j} = Q_{j+1}*.
    std::vector<Module> mods;
    std::vector<Matrix> maps;
    for (int pos = -static_cast<int>(n); pos <= -1; ++pos) {
        const std::size_t j = static_cast<std::size_t>(-pos);
        mods.push_back(free_module(alg, s.tail[j - 1].cols()));
        if (pos > -static_cast<int>(n)) {
            // differential at pos: F_{pos} → F_{pos-1}, the transpose of e_{j+2}
            maps.push_back(s.tail[j].transposed().linear_map());
        }
    }
    mods.push_back(m);
    maps.push_back(coevaluation(s));
    mods.push_back(zero_module(alg));
    maps.push_back(Matrix(m.dim(), 0, m.p()));

    Pushforward out{ModuleComplex(-static_cast<int>(n), std::move(mods), std::move(maps)), {}, {}, false, false};
    out.sequence.check_d_squared();
    std::vector<int> positions;
    for (int pos = 0; pos > -static_cast<int>(n); --pos) positions.push_back(pos);
    out.exactness = check_exactness(out.sequence, positions);
    out.exact = std::all_of(out.exactness.begin(), out.exactness.end(), [](const ExactnessVerdict& v) { return v.exact; });
    out.transpose_ext = ext_dims(transpose(m), free_module(alg, 1), n).dims;

    // F_{-1}* → M* is onto: its image has the full dimension of M*.
    const ModuleComplex dual = apply_dual(out.sequence);
    out.dual_surjects_onto_dual = rank(dual.differential(1)) == dual.at(0).dim();
    return out;
}

FreeComplex theorem3_splice(const Module& m, std::size_t mm, std::size_t n) {
    if (n < 1) throw ContractViolation("the splice needs n >= 1");
    return splice_complex(m.algebra(), make_splice(m, mm, n), mm, n);
}

Theorem3Sequence build_theorem3_sequence(const Module& m, std::size_t mm, std::size_t n) {
    if (n < 1) throw ContractViolation("the sequence needs n >= 1");
    const TorsionfreeVerdict v = torsionfree_classify(m, bound_for(mm, n));
    if (mm > v.m_max) {
        throw RefusedError("module is not in G_{" + std::to_string(mm) + "0}: Ext^" + std::to_string(v.m_max + 1) +
                               "(M,Λ) ≠ 0",
                           false, v.m_max + 1);
    }
    if (n > v.n_max) {
        throw RefusedError("module is not in G_{0" + std::to_string(n) + "}: Ext^" + std::to_string(v.n_max + 1) +
                               "(tr M,Λ) ≠ 0",
                           true, v.n_max + 1);
    }

    const Splice s = make_splice(m, mm, n);
    FreeComplex c = splice_complex(m.algebra(), s, mm, n);
    const ModuleComplex mc = to_module_complex(c);
    const auto interior = interior_positions(mc.lo(), mc.hi());
    for (const auto& e : check_exactness(mc, interior)) {
        if (!e.exact) throw InvariantError("spliced sequence not exact at position " + std::to_string(e.position));
    }
    const ModuleComplex dual = apply_dual(mc);
    for (const auto& e : check_exactness(dual, interior_positions(dual.lo(), dual.hi()))) {
        if (!e.exact) throw InvariantError("dual of spliced sequence not exact at position " + std::to_string(e.position));
    }

    const Matrix phi = coevaluation(s);
    if (rank(phi) != m.dim()) throw InvariantError("M → P_{-1} is not injective");
    const Matrix basis = column_space(phi);
    Module image = submodule(mc.at(-1), basis);
    auto witness = solve_linear(basis, phi);
    if (!witness) throw InvariantError("image comparison failed");
    if (!ModuleMap{m, image, *witness}.is_homomorphism()) throw InvariantError("M → im ∂ is not Λ-linear");
    return Theorem3Sequence{std::move(c), std::move(image), std::move(*witness)};
}

Theorem3Verdict verify_theorem3_sequence(const ModuleComplex& c, std::size_t mm, std::size_t n,
                                         Theorem3Condition mode) {
    if (n < 1 || c.lo() != -static_cast<int>(n) || c.hi() != static_cast<int>(mm) + 1) {
        throw ContractViolation("sequence must span positions " + std::to_string(mm + 1) + " … -" + std::to_string(n));
    }
    c.check_d_squared();
    Theorem3Verdict v;
    v.exactness = check_exactness(c, interior_positions(c.lo(), c.hi()));
    const ModuleComplex dual = apply_dual(c);
    v.dual_exactness = check_exactness(dual, interior_positions(dual.lo(), dual.hi()));
    auto all_exact = [](const std::vector<ExactnessVerdict>& vs) {
        return std::all_of(vs.begin(), vs.end(), [](const ExactnessVerdict& e) { return e.exact; });
    };
    v.sequence_exact = all_exact(v.exactness);
    v.dual_exact = all_exact(v.dual_exactness);

    const std::size_t bound = bound_for(mm, n);
    for (int i = c.lo(); i <= c.hi(); ++i) {
        const TorsionfreeVerdict t = torsionfree_classify(c.at(i), bound);
        bool ok = false;
        if (mode == Theorem3Condition::AllTermsInClass) {
            ok = t.in_class(mm, n);
        } else {
            ok = i >= 0 ? t.in_class(mm, 0) : t.in_class(0, n);
        }
        if (!ok) v.membership_failures.push_back(i);
    }
    v.holds = v.sequence_exact && v.dual_exact && v.membership_failures.empty();

    const Module image = image_module(ModuleMap{c.at(0), c.at(-1), c.differential(0)});
    v.image_classification = torsionfree_classify(image, bound);
    v.image_in_class = v.image_classification.in_class(mm, n);
    return v;
}

GdimReport gdim_report(const Module& m, std::size_t bound) {
    if (bound < 2) throw ContractViolation("G-dimension report needs a bound of at least 2");
    const TorsionfreeVerdict t = torsionfree_classify(m, bound);
    GdimReport r;
    r.bound = bound;
    r.ext = t.ext_module;
    for (std::size_t i = 0; i <= bound; ++i) {
        if (r.ext.dims[i] == 0) continue;
        r.sup_with_zero = i;
        if (i >= 1) r.sup_positive = i;
    }
    const std::size_t last = r.sup_positive.value_or(0);
    r.tail_zero = last < bound;
    if (!m.is_zero()) r.formula_value = last;
    r.verdict = t.totally_reflexive_up_to_bound ? GdimReport::Verdict::Zero : GdimReport::Verdict::InfiniteUpToBound;
    return r;
}

std::string to_string(GdimReport::Verdict v) {
    return v == GdimReport::Verdict::Zero ? "gdim = 0 (up to B)" : "infinite-up-to-B";
}

}  // namespace redhom
