#include "redhom/reducing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "redhom/error.hpp"

namespace redhom {

namespace {

std::size_t worker_count() {
    if (const char* env = std::getenv("REDHOM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp<std::size_t>(hw, 1, 8);
}

// Smallest index in [0, count) with pred(index) true. Chunks are handed out
// in increasing order and a worker only stops once its chunk starts past the
// best hit, so the answer does not depend on scheduling.
template <class Pred>
std::optional<std::uint64_t> parallel_first(std::uint64_t count, Pred pred) {
    constexpr std::uint64_t kChunk = 64;
    const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
    const std::size_t workers = std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(chunks, 1));
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{count};
    std::exception_ptr error;
    std::mutex error_mu;

    auto run = [&] {
        try {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= chunks) return;
                const std::uint64_t start = c * kChunk;
                if (start >= best.load()) return;
                const std::uint64_t end = std::min(count, start + kChunk);
                for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
                    if (pred(i)) {
                        std::uint64_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            best.store(0);
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    if (best.load() >= count) return std::nullopt;
    return best.load();
}

bool same_module(const Module& a, const Module& b) {
    if (!same_ring(a, b) || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.algebra()->dim(); ++i) {
        if (!(a.basis_action(i) == b.basis_action(i))) return false;
    }
    return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t v : parts) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// p^d, or nullopt when it exceeds cap.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t d, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (v > cap / p) return std::nullopt;
        v *= p;
    }
    if (v > cap) return std::nullopt;
    return v;
}

// First nonzero coordinate scaled to 1.
void normalize(std::vector<Scalar>& v, const PrimeField& f) {
    for (Scalar c : v) {
        if (c == 0) continue;
        const Scalar inv = f.inv(c);
        for (Scalar& x : v) x = f.mul(x, inv);
        return;
    }
}

}  // namespace

// ---------------------------------------------------------------- Ext^1

Ext1Space::Ext1Space(Module c, Module a)
    : c_(std::move(c)), a_(std::move(a)), syz_(projective_cover_and_syzygy(c_)), hom_(syz_.syzygy, a_) {
    if (!same_ring(c_, a_)) throw ContractViolation("Ext between modules over different rings");
    const Algebra& alg = *c_.algebra();
    const std::size_t d = alg.dim();
    const std::size_t g = syz_.cover.rank;
    const std::size_t da = a_.dim();
    const std::size_t h = hom_.dim();

    // Restrictions of Hom(P_0, A) to ΩC, in Hom(ΩC, A) coordinates.
    Matrix restricted(h, g * da, a_.p());
    for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t t = 0; t < da; ++t) {
            Matrix f(da, g * d, a_.p());
            for (std::size_t b = 0; b < d; ++b) {
                const Matrix& act = a_.basis_action(b);
                for (std::size_t r = 0; r < da; ++r) f(r, j * d + b) = act(r, t);
            }
            const auto coords = hom_.coordinates(f * syz_.inclusion);
            for (std::size_t r = 0; r < h; ++r) restricted(r, j * da + t) = coords[r];
        }
    }
    const Echelon e = row_reduce(hstack(restricted, Matrix::identity(h, a_.p())));
    for (std::size_t col : e.pivots) {
        if (col < restricted.cols()) continue;
        std::vector<Scalar> v(h, 0);
        v[col - restricted.cols()] = 1;
        basis_.push_back(std::move(v));
    }
}

Matrix Ext1Space::representative(const std::vector<Scalar>& coords) const {
    if (coords.size() != dim()) throw ContractViolation("Ext coordinates have the wrong length");
    const PrimeField f(a_.p());
    std::vector<Scalar> h(hom_.dim(), 0);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        for (std::size_t r = 0; r < h.size(); ++r) h[r] = f.add(h[r], f.mul(coords[k], basis_[k][r]));
    }
    return hom_.map(h);
}

Ext1Enumeration::Ext1Enumeration(const Ext1Space& space, std::uint64_t cap, std::size_t random_samples,
                                 std::uint64_t seed)
    : space_(&space) {
    const std::uint64_t p = space.target().p();
    const std::size_t d = space.dim();
    if (auto total = bounded_power(p, d, cap)) {
        exhaustive_ = true;
        total_ = *total;
        return;
    }
    const PrimeField f(static_cast<std::uint32_t>(p));
    samples_.emplace_back(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Scalar> v(d, 0);
        v[i] = 1;
        samples_.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<Scalar> v(d, 0);
            v[i] = v[j] = 1;
            samples_.push_back(std::move(v));
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (std::size_t s = 0; s < random_samples; ++s) {
        std::vector<Scalar> v(d);
        for (auto& x : v) x = static_cast<Scalar>(dist(rng));
        normalize(v, f);
        samples_.push_back(std::move(v));
    }
}

std::uint64_t Ext1Enumeration::index_count() const { return exhaustive_ ? total_ : samples_.size(); }

std::optional<std::vector<Scalar>> Ext1Enumeration::at(std::uint64_t index) const {
    if (!exhaustive_) return samples_.at(index);
    const std::uint64_t p = space_->target().p();
    const std::size_t d = space_->dim();
    std::vector<Scalar> v(d, 0);
    for (std::size_t k = d; k-- > 0;) {
        v[k] = static_cast<Scalar>(index % p);
        index /= p;
    }
    for (Scalar c : v) {
        if (c == 0) continue;
        if (c != 1) return std::nullopt;
        break;
    }
    return v;
}

ExtElement Ext1Enumeration::element(const std::vector<Scalar>& coords) const {
    return ExtElement{coords, space_->representative(coords)};
}

std::uint64_t Ext1Enumeration::element_count() const {
    if (!exhaustive_) return samples_.size();
    const std::uint64_t p = space_->target().p();
    return 1 + (total_ - 1) / (p - 1);
}

// ---------------------------------------------------------------- middle terms

ShortExact middle_term(const Ext1Space& space, const Matrix& rep) {
    const Module& a = space.target();
    const Module& c = space.source();
    const SyzygyResult& syz = space.resolution();
    const std::uint32_t p = a.p();
    const std::size_t g = syz.cover.rank;
    const std::size_t gd = g * a.algebra()->dim();

    const Module ambient = direct_sum(a.algebra(), {a, free_module(a.algebra(), g)});
    const Matrix graph = vstack(rep, syz.inclusion.scaled(p - 1));
    Quotient q = quotient(ambient, graph);

    const Matrix into = q.projection * vstack(Matrix::identity(a.dim(), p), Matrix(gd, a.dim(), p));
    const Matrix onto = hstack(Matrix(c.dim(), a.dim(), p), syz.cover.map) * q.lift;
    ModuleComplex seq(0, {c, q.module, a}, {onto, into});
    return ShortExact{a, q.module, c, std::move(seq)};
}

bool verify_short_exact(const ShortExact& s) {
    const ModuleComplex& c = s.sequence;
    if (c.lo() != 0 || c.hi() != 2) return false;
    if (!(c.differential(1) * c.differential(2)).is_zero()) return false;
    if (!c.maps_are_homomorphisms()) return false;
    const std::vector<int> all{0, 1, 2};
    for (const auto& v : check_exactness(c, all)) {
        if (!v.exact) return false;
    }
    return true;
}

std::string to_string(ReduceMode m) { return m == ReduceMode::Red ? "red" : "ured"; }
std::string to_string(ReduceTarget t) { return t == ReduceTarget::Pd ? "pd" : "gdim"; }

// ---------------------------------------------------------------- search

bool terminal_ok(const Module& m, ReduceTarget target, std::size_t bound) {
    if (target == ReduceTarget::Pd) return is_free(m);
    const Module lambda = free_module(m.algebra(), 1);
    const auto zero_tail = [](const ExtTable& t) {
        return std::all_of(t.dims.begin() + 1, t.dims.end(), [](std::size_t v) { return v == 0; });
    };
    if (!zero_tail(ext_dims(m, lambda, bound))) return false;
    return zero_tail(ext_dims(transpose(m), lambda, bound));
}

namespace {

struct SearchNode {
    Module module;
    int parent = -1;
    std::optional<ReductionStep> step;
    ModuleFingerprint print;
};

bool dimension_possible(const Module& a, const Module& c) {
    const std::size_t d = a.algebra()->dim();
    const std::size_t total = a.dim() + c.dim();
    if (total % d != 0) return false;
    const std::size_t r = total / d;
    return r >= minimal_generator_count(c) && r <= minimal_generator_count(a) + minimal_generator_count(c);
}

ReductionWitness assemble(const std::vector<SearchNode>& nodes, int leaf, ReduceMode mode, ReduceTarget target,
                          const Module& input, std::size_t bound, std::optional<ReductionStep> last) {
    ReductionWitness w{mode, target, input, {}, bound};
    std::vector<ReductionStep> rev;
    if (last) rev.push_back(std::move(*last));
    for (int i = leaf; i >= 0 && nodes[static_cast<std::size_t>(i)].step; i = nodes[static_cast<std::size_t>(i)].parent) {
        rev.push_back(*nodes[static_cast<std::size_t>(i)].step);
    }
    w.steps.assign(std::make_move_iterator(rev.rbegin()), std::make_move_iterator(rev.rend()));
    return w;
}

}  // namespace

SearchResult search_reducing(const Module& m, ReduceMode mode, ReduceTarget target, const SearchLimits& limits) {
    if (limits.max_steps == 0 || limits.cap == 0) throw ContractViolation("search limits must be positive");
    const std::size_t bound = limits.tr_bound;
    SearchResult result;
    if (terminal_ok(m, target, bound)) {
        result.witness = ReductionWitness{mode, target, m, {}, bound};
        return result;
    }

    const std::size_t ab_max = mode == ReduceMode::Ured ? 1 : std::max<std::size_t>(limits.ab_max, 1);
    const bool use_filter = limits.dimension_filter && target == ReduceTarget::Pd;
    const IsoOptions dedupe{4096, 8, limits.seed};

    std::vector<SearchNode> nodes;
    nodes.push_back(SearchNode{m, -1, std::nullopt, fingerprint(m)});
    std::vector<int> frontier{0};

    struct Group {
        int node_id;
        std::size_t n, a, b;
        bool possible;
        std::unique_ptr<Ext1Space> space;
        std::unique_ptr<Ext1Enumeration> en;
    };

    for (std::size_t level = 1; level <= limits.max_steps; ++level) {
        result.levels_searched = level;
        const bool last_level = level == limits.max_steps;

        // Pass 1: terminal tests in candidate order. The first hit is the witness.
        std::vector<Group> groups;
        for (int node_id : frontier) {
            const Module prev = nodes[static_cast<std::size_t>(node_id)].module;
            Module omega = prev;
            for (std::size_t n = 0; n <= limits.n_max; ++n) {
                if (n > 0) omega = syzygy(omega, 1);
                for (std::size_t a = 1; a <= ab_max; ++a) {
                    for (std::size_t b = 1; b <= ab_max; ++b) {
                        const Module amod = power(prev, a);
                        const Module cmod = power(omega, b);
                        const bool possible = !use_filter || dimension_possible(amod, cmod);
                        if (!possible) ++result.pruned;
                        if (!possible && last_level) continue;

                        Group g{node_id, n, a, b, possible, std::make_unique<Ext1Space>(cmod, amod), nullptr};
                        g.en = std::make_unique<Ext1Enumeration>(
                            *g.space, limits.cap, limits.random_samples,
                            mix_seed(limits.seed, {level, static_cast<std::uint64_t>(node_id), n, a, b}));
                        if (!g.en->exhaustive()) result.exhaustive = false;

                        if (possible) {
                            std::atomic<std::uint64_t> examined{0};
                            const auto hit = parallel_first(g.en->index_count(), [&](std::uint64_t i) {
                                const auto coords = g.en->at(i);
                                if (!coords) return false;
                                ++examined;
                                const ShortExact s = middle_term(*g.space, g.space->representative(*coords));
                                return terminal_ok(s.middle, target, bound);
                            });
                            result.examined += examined.load();
                            if (hit) {
                                const auto coords = *g.en->at(*hit);
                                ReductionStep step{n, a, b, coords, middle_term(*g.space, g.space->representative(coords))};
                                result.witness = assemble(nodes, node_id, mode, target, m, bound, std::move(step));
                                return result;
                            }
                        }
                        if (!last_level) groups.push_back(std::move(g));
                    }
                }
            }
        }
        if (last_level) break;

        // Pass 2: the next frontier, one node per isomorphism class of middle term.
        std::vector<int> next;
        std::map<ModuleFingerprint, std::vector<int>> buckets;
        for (const Group& g : groups) {
            for (std::uint64_t i = 0; i < g.en->index_count(); ++i) {
                const auto coords = g.en->at(i);
                if (!coords) continue;
                if (!g.possible) ++result.examined;
                ReductionStep step{g.n, g.a, g.b, *coords, middle_term(*g.space, g.space->representative(*coords))};
                const ModuleFingerprint print = fingerprint(step.sequence.middle);
                auto& bucket = buckets[print];
                bool seen = false;
                for (int other : bucket) {
                    if (is_isomorphic(nodes[static_cast<std::size_t>(other)].module, step.sequence.middle, dedupe).yes()) {
                        seen = true;
                        break;
                    }
                }
                if (seen) continue;
                if (next.size() >= limits.max_frontier) {
                    result.exhaustive = false;
                    continue;
                }
                Module middle = step.sequence.middle;
                nodes.push_back(SearchNode{std::move(middle), g.node_id, std::move(step), print});
                next.push_back(static_cast<int>(nodes.size()) - 1);
                bucket.push_back(next.back());
            }
        }
        frontier = std::move(next);
    }
    return result;
}

void verify_witness(const ReductionWitness& w) {
    Module prev = w.input;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const ReductionStep& s = w.steps[i];
        const std::string where = "witness step " + std::to_string(i + 1);
        if (w.mode == ReduceMode::Ured && (s.a != 1 || s.b != 1)) throw InvariantError(where + ": a, b must be 1");
        if (s.a == 0 || s.b == 0) throw InvariantError(where + ": a, b must be positive");
        if (!same_module(s.sequence.sub, power(prev, s.a))) throw InvariantError(where + ": wrong submodule");
        if (!same_module(s.sequence.quotient, power(syzygy(prev, s.n), s.b))) {
            throw InvariantError(where + ": wrong quotient");
        }
        if (!verify_short_exact(s.sequence)) throw InvariantError(where + ": sequence is not short exact");
        prev = s.sequence.middle;
    }
    if (!terminal_ok(prev, w.target, w.bound)) throw InvariantError("witness terminal module fails the terminal test");
}

// ---------------------------------------------------------------- growth

std::string to_string(GrowthKind k) {
    switch (k) {
        case GrowthKind::Betti: return "betti";
        case GrowthKind::Bass: return "bass";
        case GrowthKind::ExtLengths: return "ext";
    }
    return "?";
}

std::string GrowthEstimate::describe() const {
    switch (verdict) {
        case Verdict::Poly: return "poly(" + std::to_string(*fitted_degree) + ")";
        case Verdict::Exponential: return "exponential";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

GrowthEstimate growth_estimate(const std::vector<std::size_t>& values, GrowthKind kind, const GrowthOptions& opts) {
    GrowthEstimate g;
    g.kind = kind;
    g.values = values;
    g.window_start = opts.window_start;
    if (values.size() < opts.window_start + opts.min_tail) return g;
    const std::vector<std::size_t> tail(values.begin() + static_cast<std::ptrdiff_t>(opts.window_start), values.end());

    std::size_t trailing_zeros = 0;
    while (trailing_zeros < tail.size() && tail[tail.size() - 1 - trailing_zeros] == 0) ++trailing_zeros;
    if (2 * trailing_zeros >= tail.size()) {
        g.fitted_degree = 0;
        g.verdict = GrowthEstimate::Verdict::Poly;
        return g;
    }
    if (std::any_of(tail.begin(), tail.end(), [](std::size_t v) { return v == 0; })) return g;

    // Ratio test on the later half of the window.
    bool exponential = true;
    for (std::size_t i = tail.size() / 2; i + 1 < tail.size(); ++i) {
        if (static_cast<double>(tail[i + 1]) < (1.0 + opts.epsilon) * static_cast<double>(tail[i])) exponential = false;
    }
    if (exponential) {
        g.exponential = true;
        g.verdict = GrowthEstimate::Verdict::Exponential;
        return g;
    }

    // Least-squares slope of log v against log i.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(tail.size());
    for (std::size_t k = 0; k < tail.size(); ++k) {
        const double x = std::log(static_cast<double>(opts.window_start + k + (opts.window_start == 0 ? 1 : 0)));
        const double y = std::log(static_cast<double>(tail[k]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    const double slope = denom == 0 ? 0.0 : (n * sxy - sx * sy) / denom;
    g.fitted_degree = static_cast<std::size_t>(std::max(1.0, std::round(1.0 + slope)));
    g.verdict = GrowthEstimate::Verdict::Poly;
    return g;
}

std::vector<std::size_t> betti_numbers(const Module& m, std::size_t bound) {
    return minimal_free_resolution(m, bound).betti;
}

std::optional<std::size_t> complexity_value(const GrowthEstimate& g) {
    switch (g.verdict) {
        case GrowthEstimate::Verdict::Poly: return g.fitted_degree;
        case GrowthEstimate::Verdict::Exponential: return kInfiniteComplexity;
        case GrowthEstimate::Verdict::Inconclusive: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

std::optional<std::size_t> cx_of(const Module& m, std::size_t bound) {
    return complexity_value(growth_estimate(betti_numbers(m, bound), GrowthKind::Betti));
}

bool complexity_dfs(const Module& m, std::size_t cx, std::size_t depth, const SearchLimits& limits, std::size_t bound,
                    std::vector<ComplexityChainStep>& chain) {
    if (cx == 0) return true;
    if (depth == limits.max_steps) return false;
    Module omega = m;
    for (std::size_t n = 0; n <= limits.n_max; ++n) {
        if (n > 0) omega = syzygy(omega, 1);
        const Ext1Space space(omega, m);
        const Ext1Enumeration en(space, limits.cap, limits.random_samples,
                                 mix_seed(limits.seed, {depth, n, m.dim()}));
        for (std::uint64_t i = 0; i < en.index_count(); ++i) {
            const auto coords = en.at(i);
            if (!coords) continue;
            ShortExact s = middle_term(space, space.representative(*coords));
            const auto cx_n = cx_of(s.middle, bound);
            if (!cx_n || *cx_n >= cx) continue;
            const Module next = s.middle;
            chain.push_back(ComplexityChainStep{n, *coords, std::move(s), cx, *cx_n});
            if (complexity_dfs(next, *cx_n, depth + 1, limits, bound, chain)) return true;
            chain.pop_back();
        }
    }
    return false;
}

}  // namespace

ComplexityChain reducible_complexity_search(const Module& m, const SearchLimits& limits, std::size_t bound) {
    ComplexityChain out;
    const auto cx = cx_of(m, bound);
    if (!cx) return out;
    out.cx_input = *cx;
    out.found = complexity_dfs(m, *cx, 0, limits, bound, out.steps);
    if (!out.found) out.steps.clear();
    return out;
}

InequalityCheck check_betti_inequality(const Module& m, const Module& n_mod, std::size_t n, std::size_t imax) {
    const auto bm = betti_numbers(m, imax + n);
    const auto bn = betti_numbers(n_mod, imax);
    InequalityCheck c;
    c.n = n;
    for (std::size_t i = 1; i <= imax; ++i) {
        ++c.checked;
        if (bm[i + n] > bn[i] + bm[i - 1]) {
            c.holds = false;
            if (!c.first_failure) c.first_failure = i;
        }
    }
    return c;
}

Theorem4Report theorem4_check(const Module& m, const SearchLimits& limits, std::size_t bound) {
    Theorem4Report r;
    r.cx = growth_estimate(betti_numbers(m, bound), GrowthKind::Betti);
    r.ured = search_reducing(m, ReduceMode::Ured, ReduceTarget::Pd, limits);
    const auto cx = complexity_value(r.cx);
    if (r.ured.witness) {
        const std::size_t s = r.ured.witness->depth();
        r.consistent = cx.has_value() && *cx <= s;
        if (cx) r.equality = *cx == s;
        Module prev = m;
        for (std::size_t i = 0; i < r.ured.witness->steps.size(); ++i) {
            const ReductionStep& step = r.ured.witness->steps[i];
            InequalityCheck c = check_betti_inequality(prev, step.sequence.middle, step.n, 10);
            c.step = i + 1;
            r.inequalities.push_back(c);
            prev = step.sequence.middle;
        }
    }
    return r;
}

GorensteinSideReport gorenstein_side_check(const Module& m, const SearchLimits& limits, std::size_t bound) {
    GorensteinSideReport r;
    const Module lambda = free_module(m.algebra(), 1);
    r.gcx = growth_estimate(ext_dims(m, lambda, bound).dims, GrowthKind::ExtLengths);
    r.ured_gdim = search_reducing(m, ReduceMode::Ured, ReduceTarget::Gdim, limits);
    r.px = growth_estimate(bass_numbers(lambda, bound), GrowthKind::Bass);
    const auto gcx = complexity_value(r.gcx);
    if (r.ured_gdim.witness) {
        r.consistent = gcx.has_value() && *gcx <= r.ured_gdim.witness->depth();
        if (m.dim() == 1) {
            const auto px = complexity_value(r.px);
            r.plexity_implication = px.has_value() && *px != kInfiniteComplexity;
        }
    }
    return r;
}

}  // namespace redhom
