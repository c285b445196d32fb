#include "redhom/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "redhom/acceptance.hpp"
#include "redhom/catalog.hpp"
#include "redhom/error.hpp"
#include "redhom/io.hpp"

namespace redhom {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

// A catalog id, or a path to a RingSpec JSON document.
RingSpec load_ring(const std::string& arg, std::uint32_t p) {
    const std::optional<std::uint32_t> p_override = p ? std::optional<std::uint32_t>(p) : std::nullopt;
    if (arg.ends_with(".json") || std::filesystem::is_regular_file(arg)) {
        RingSpec s = ring_spec_from_json(read_json_file(arg));
        if (p_override) s.p = *p_override;
        return s;
    }
    return catalog_ring(arg, p_override);
}

struct Options {
    std::string ring = "R1";
    std::string module = "k";
    std::uint32_t p = 0;
    std::string target = "lambda";
    std::size_t bound = 4;
    std::size_t check_bound = 0;  // 0: the check's own default
    std::size_t steps = 6;
    std::size_t m = 1, n = 1;
    std::string file;
    std::string out_file;
    std::string condition = "all";
    std::string mode = "red";
    std::string reduce_target = "pd";
    std::string kind = "betti";
    std::string config;
    bool no_filter = false;
    SearchLimits limits;
};

struct Outcome {
    Json results;
    std::string summary;
    int code = 0;
};

class Runner {
public:
    Runner(const Options& o) : o_(o) {}

    AlgebraPtr algebra() {
        if (!alg_) {
            spec_ = load_ring(o_.ring, o_.p);
            alg_ = Algebra::build(*spec_);
        }
        return alg_;
    }
    Module module() { return parse_module(algebra(), o_.module); }
    const std::optional<RingSpec>& spec() const { return spec_; }

    SearchLimits limits(CLI::App* sub) const {
        SearchLimits l;
        if (!o_.config.empty()) {
            const Json j = read_json_file(o_.config);
            l.max_steps = j.value("max_steps", l.max_steps);
            l.n_max = j.value("n_max", l.n_max);
            l.ab_max = j.value("ab_max", l.ab_max);
            l.cap = j.value("cap", l.cap);
            l.seed = j.value("seed", l.seed);
            l.tr_bound = j.value("tr_bound", l.tr_bound);
            l.dimension_filter = j.value("dimension_filter", l.dimension_filter);
            l.random_samples = j.value("random_samples", l.random_samples);
            l.max_frontier = j.value("max_frontier", l.max_frontier);
        }
        // Flags given on the command line win over the config file.
        auto given = [&](const char* name) { return sub->count(name) > 0; };
        if (given("--max-steps")) l.max_steps = o_.limits.max_steps;
        if (given("--n-max")) l.n_max = o_.limits.n_max;
        if (given("--ab-max")) l.ab_max = o_.limits.ab_max;
        if (given("--cap")) l.cap = o_.limits.cap;
        if (given("--seed")) l.seed = o_.limits.seed;
        if (given("--tr-bound")) l.tr_bound = o_.limits.tr_bound;
        if (given("--random-samples")) l.random_samples = o_.limits.random_samples;
        if (given("--max-frontier")) l.max_frontier = o_.limits.max_frontier;
        if (o_.no_filter) l.dimension_filter = false;
        return l;
    }

private:
    const Options& o_;
    std::optional<RingSpec> spec_;
    AlgebraPtr alg_;
};

Json module_echo(const std::string& spec, const Module& m) { return Json{{"spec", spec}, {"dim", m.dim()}}; }

ReduceMode parse_mode(const std::string& s) {
    if (s == "red") return ReduceMode::Red;
    if (s == "ured") return ReduceMode::Ured;
    throw InputError("unknown mode " + s);
}

ReduceTarget parse_target(const std::string& s) {
    if (s == "pd") return ReduceTarget::Pd;
    if (s == "gdim") return ReduceTarget::Gdim;
    throw InputError("unknown target " + s);
}

std::string describe_search(const SearchResult& r, const SearchLimits& l) {
    if (r.witness) return "witness s=" + std::to_string(r.witness->depth());
    return "no witness: > " + std::to_string(l.max_steps) + " within limits (exhaustive: " + (r.exhaustive ? "yes" : "no") +
           ")";
}

void add_ring(CLI::App* s, Options& o) {
    s->add_option("--ring", o.ring, "catalog id (R1..R5 with q/e/a/b suffixes) or RingSpec JSON file");
    s->add_option("--p", o.p, "field characteristic for catalog rings")->check(CLI::IsMember({2u, 5u}));
}

void add_module(CLI::App* s, Options& o) {
    add_ring(s, o);
    s->add_option("--module", o.module, "module spec, e.g. k, free:2, syzygy:1:k, file:m.json");
}

void add_limits(CLI::App* s, Options& o) {
    s->add_option("--max-steps", o.limits.max_steps);
    s->add_option("--n-max", o.limits.n_max);
    s->add_option("--ab-max", o.limits.ab_max);
    s->add_option("--cap", o.limits.cap, "enumerate Ext^1 exhaustively when p^dim <= cap");
    s->add_option("--seed", o.limits.seed);
    s->add_option("--tr-bound", o.limits.tr_bound, "bound for the totally reflexive test");
    s->add_option("--random-samples", o.limits.random_samples);
    s->add_option("--max-frontier", o.limits.max_frontier);
    s->add_flag("--no-filter", o.no_filter, "disable the dimension filter");
    s->add_option("--config", o.config, "JSON file with search limits");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact homological algebra over finite-dimensional local GF(p)-algebras", kToolName};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;

    auto* ring = app.add_subcommand("ring", "catalog and RingSpec validation");
    ring->require_subcommand(1);
    auto* ring_list = ring->add_subcommand("list", "list catalog rings");
    ring_list->add_option("--p", o.p)->check(CLI::IsMember({2u, 5u}));
    auto* ring_show = ring->add_subcommand("show", "describe a ring");
    add_ring(ring_show, o);
    auto* ring_validate = ring->add_subcommand("validate", "validate a RingSpec file");
    ring_validate->add_option("file", o.file)->required();

    auto* resolve = app.add_subcommand("resolve", "minimal free resolution and Betti numbers");
    add_module(resolve, o);
    resolve->add_option("--steps", o.steps);

    auto* ext = app.add_subcommand("ext", "dimensions of Ext^i(M, N)");
    add_module(ext, o);
    ext->add_option("--target", o.target, "module spec for N (default Λ)");
    ext->add_option("--bound", o.bound);

    auto* classify = app.add_subcommand("classify", "(m,n)-torsionfree classes and G-dimension");
    add_module(classify, o);
    classify->add_option("--bound", o.bound);

    auto* seq = app.add_subcommand("seq", "exact sequences for the (m,n)-torsionfree classes");
    seq->require_subcommand(1);
    auto* seq_build = seq->add_subcommand("build", "build the sequence for M");
    add_module(seq_build, o);
    seq_build->add_option("--m", o.m);
    seq_build->add_option("--n", o.n);
    seq_build->add_option("--out", o.out_file, "write the SequenceFile here");
    auto* seq_verify = seq->add_subcommand("verify", "verify a SequenceFile");
    add_ring(seq_verify, o);
    seq_verify->add_option("file", o.file)->required();
    seq_verify->add_option("--m", o.m);
    seq_verify->add_option("--n", o.n);
    seq_verify->add_option("--condition", o.condition)->check(CLI::IsMember({"all", "split"}));

    auto* reduce = app.add_subcommand("reduce", "search for reducing sequences");
    add_module(reduce, o);
    reduce->add_option("--mode", o.mode)->check(CLI::IsMember({"red", "ured"}));
    reduce->add_option("--target", o.reduce_target)->check(CLI::IsMember({"pd", "gdim"}));
    add_limits(reduce, o);

    auto* growth = app.add_subcommand("growth", "growth of Betti numbers, Bass numbers or Ext lengths");
    add_module(growth, o);
    growth->add_option("--kind", o.kind)->check(CLI::IsMember({"betti", "bass", "ext"}));
    growth->add_option("--bound", o.bound);

    auto* check = app.add_subcommand("check", "bundled cross-checks");
    check->require_subcommand(1);
    std::vector<CLI::App*> checks;
    for (const char* name : {"thm4", "prop7", "cor20", "thm3"}) {
        auto* c = check->add_subcommand(name);
        add_module(c, o);
        c->add_option("--bound", o.check_bound, "default 10 for thm4/prop7, 6 for cor20, 3 for thm3");
        add_limits(c, o);
        checks.push_back(c);
    }

    auto* suite = app.add_subcommand("suite", "test batteries");
    suite->require_subcommand(1);
    auto* acceptance = suite->add_subcommand("acceptance", "run the acceptance battery");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string command = kToolName;
    for (const auto& a : args) command += " " + a;

    const auto t0 = std::chrono::steady_clock::now();
    Runner run(o);
    Json limits_json = nullptr;
    std::uint64_t seed = 0;

    auto emit = [&](const Outcome& oc) {
        Json report;
        report["tool"] = Json{{"name", kToolName}, {"version", kVersion}};
        report["command"] = command;
        report["ring"] = run.spec() ? ring_spec_to_json(*run.spec()) : Json(nullptr);
        report["seed"] = seed;
        report["limits"] = limits_json;
        report["results"] = oc.results;
        report["timing"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        out << report.dump(2) << "\n";
        if (!oc.summary.empty()) err << oc.summary << "\n";
        return oc.code;
    };
    auto fail = [&](const char* kind, const std::string& message, Json extra, int code) {
        Outcome oc;
        oc.results = Json{{"error", Json{{"kind", kind}, {"message", message}}}};
        for (auto& [k, v] : extra.items()) oc.results["error"][k] = v;
        oc.summary = std::string(kind) + " error: " + message;
        oc.code = code;
        return emit(oc);
    };

    try {
        Outcome oc;
        if (ring_list->parsed()) {
            Json rings = Json::array();
            for (const auto& e : catalog_entries(o.p ? o.p : 5)) rings.push_back(Json{{"id", e.id}, {"description", e.description}});
            oc.results = Json{{"rings", rings}};
            oc.summary = std::to_string(rings.size()) + " catalog rings";
        } else if (ring_show->parsed() || ring_validate->parsed()) {
            AlgebraPtr a;
            if (ring_validate->parsed()) {
                o.ring = o.file;
            }
            a = run.algebra();
            Json ci = a->is_complete_intersection() ? Json(*a->is_complete_intersection()) : Json(nullptr);
            oc.results = Json{{"valid", true},
                              {"dim", a->dim()},
                              {"labels", a->labels()},
                              {"generators", a->num_generators()},
                              {"socle_dim", a->socle_dim()},
                              {"gorenstein", a->is_gorenstein()},
                              {"complete_intersection", ci},
                              {"loewy_length", a->loewy_length()}};
            oc.summary = "dim " + std::to_string(a->dim()) + (a->is_gorenstein() ? ", Gorenstein" : ", not Gorenstein");
        } else if (resolve->parsed()) {
            const Module m = run.module();
            const Resolution r = minimal_free_resolution(m, o.steps);
            oc.results = Json{{"module", module_echo(o.module, m)},
                              {"betti", r.betti},
                              {"differentials", free_complex_to_json(r.complex)}};
            std::ostringstream s;
            s << "betti:";
            for (auto b : r.betti) s << " " << b;
            oc.summary = s.str();
        } else if (ext->parsed()) {
            const Module m = run.module();
            const Module n = parse_module(run.algebra(), o.target);
            const ExtTable t = ext_dims(m, n, o.bound);
            oc.results = Json{{"module", module_echo(o.module, m)}, {"target", module_echo(o.target, n)}, {"ext", to_json(t)}};
            std::ostringstream s;
            s << "ext dims:";
            for (auto d : t.dims) s << " " << d;
            oc.summary = s.str();
        } else if (classify->parsed()) {
            const Module m = run.module();
            const TorsionfreeVerdict v = torsionfree_classify(m, o.bound);
            oc.results = Json{{"module", module_echo(o.module, m)}, {"torsionfree", to_json(v)}};
            if (o.bound >= 2) {
                const GdimReport g = gdim_report(m, o.bound);
                oc.results["gdim"] = to_json(g);
            } else {
                oc.results["gdim"] = nullptr;
            }
            oc.summary = "totally_reflexive_up_to_B=" + std::string(v.totally_reflexive_up_to_bound ? "true" : "false") +
                         " m_max=" + std::to_string(v.m_max) + " n_max=" + std::to_string(v.n_max) + " (B=" +
                         std::to_string(o.bound) + ")";
        } else if (seq_build->parsed()) {
            const Module m = run.module();
            try {
                const Theorem3Sequence s = build_theorem3_sequence(m, o.m, o.n);
                const ModuleComplex mc = to_module_complex(s.complex);
                const Theorem3Verdict v = verify_theorem3_sequence(mc, o.m, o.n, Theorem3Condition::AllTermsInClass);
                const Json file = module_complex_to_json(mc);
                if (!o.out_file.empty()) {
                    std::ofstream f(o.out_file);
                    if (!f) throw InputError("cannot write " + o.out_file);
                    f << file.dump(2) << "\n";
                }
                oc.results = Json{{"module", module_echo(o.module, m)},
                                  {"m", o.m},
                                  {"n", o.n},
                                  {"ranks", s.complex.ranks()},
                                  {"differentials", free_complex_to_json(s.complex)},
                                  {"sequence", file},
                                  {"verification", to_json(v)}};
                oc.summary = "built; verification holds=" + std::string(v.holds ? "true" : "false");
            } catch (const RefusedError& e) {
                return fail("refused", e.what(),
                            Json{{"transpose_side", e.transpose_side}, {"failing_index", e.failing_index}}, 2);
            }
        } else if (seq_verify->parsed()) {
            const ModuleComplex c = module_complex_from_json(run.algebra(), read_json_file(o.file));
            const Theorem3Condition cond =
                o.condition == "split" ? Theorem3Condition::SplitClasses : Theorem3Condition::AllTermsInClass;
            const Theorem3Verdict v = verify_theorem3_sequence(c, o.m, o.n, cond);
            oc.results = Json{{"file", o.file}, {"m", o.m}, {"n", o.n}, {"condition", o.condition}, {"verdict", to_json(v)}};
            oc.summary = "holds=" + std::string(v.holds ? "true" : "false") +
                         " image_in_class=" + (v.image_in_class ? "true" : "false");
            if (!v.consistent()) throw InvariantError("verified sequence whose image is outside the class");
        } else if (reduce->parsed()) {
            const Module m = run.module();
            const SearchLimits l = run.limits(reduce);
            limits_json = to_json(l);
            seed = l.seed;
            const SearchResult r = search_reducing(m, parse_mode(o.mode), parse_target(o.reduce_target), l);
            if (r.witness) verify_witness(*r.witness);
            oc.results = Json{{"module", module_echo(o.module, m)},
                              {"mode", o.mode},
                              {"target", o.reduce_target},
                              {"search", to_json(r, l)}};
            oc.summary = o.mode + "-" + o.reduce_target + ": " + describe_search(r, l);
        } else if (growth->parsed()) {
            const Module m = run.module();
            GrowthEstimate g;
            if (o.kind == "betti") g = growth_estimate(betti_numbers(m, o.bound), GrowthKind::Betti);
            if (o.kind == "bass") g = growth_estimate(bass_numbers(m, o.bound), GrowthKind::Bass);
            if (o.kind == "ext") {
                g = growth_estimate(ext_dims(m, free_module(run.algebra(), 1), o.bound).dims, GrowthKind::ExtLengths);
            }
            oc.results = Json{{"module", module_echo(o.module, m)}, {"growth", to_json(g)}};
            oc.summary = o.kind + " growth: " + g.describe();
        } else if (std::any_of(checks.begin(), checks.end(), [](CLI::App* c) { return c->parsed(); })) {
            CLI::App* c = *std::find_if(checks.begin(), checks.end(), [](CLI::App* x) { return x->parsed(); });
            const std::string name = c->get_name();
            const Module m = run.module();
            const SearchLimits l = run.limits(c);
            limits_json = to_json(l);
            seed = l.seed;
            auto bound_or = [&](std::size_t d) { return o.check_bound ? o.check_bound : d; };
            oc.results = Json{{"module", module_echo(o.module, m)}, {"check", name}};
            bool ok = true;
            if (name == "thm4") {
                const Theorem4Report r = theorem4_check(m, l, bound_or(10));
                oc.results["report"] = to_json(r, l);
                for (const auto& q : r.inequalities) ok = ok && q.holds;
                ok = ok && r.consistent;
                oc.summary = "cx " + r.cx.describe() + ", ured-pd " + describe_search(r.ured, l);
            } else if (name == "prop7") {
                const GorensteinSideReport r = gorenstein_side_check(m, l, bound_or(10));
                oc.results["report"] = to_json(r, l);
                ok = r.consistent && r.plexity_implication.value_or(true);
                oc.summary = "gcx " + r.gcx.describe() + ", ured-gdim " + describe_search(r.ured_gdim, l);
            } else if (name == "cor20") {
                const std::size_t b = std::max<std::size_t>(bound_or(6), 2);
                const GdimReport g = gdim_report(m, b);
                SearchLimits lg = l;
                lg.tr_bound = b;
                const SearchResult red = search_reducing(m, ReduceMode::Red, ReduceTarget::Gdim, lg);
                if (red.witness) verify_witness(*red.witness);
                // Artinian, so gdim is 0 or infinite. With a witness the sup formula must match:
                // 0 when totally reflexive, otherwise Ext^i(M,Λ) still nonzero at the bound.
                const bool zero = g.verdict == GdimReport::Verdict::Zero && g.formula_value == 0u;
                const bool infinite = g.verdict == GdimReport::Verdict::InfiniteUpToBound && g.sup_positive == b;
                ok = !red.witness || zero || infinite;
                oc.results["gdim"] = to_json(g);
                oc.results["red_gdim"] = to_json(red, lg);
                oc.summary = to_string(g.verdict) + ", red-gdim " + describe_search(red, lg);
            } else {
                const std::size_t b = bound_or(3);
                const TorsionfreeVerdict t = torsionfree_classify(m, b);
                Json table = Json::array();
                std::size_t agree = 0, total = 0;
                for (std::size_t mm = 0; mm <= b; ++mm) {
                    for (std::size_t n = 1; n <= b; ++n) {
                        const Theorem3Verdict v = verify_theorem3_sequence(to_module_complex(theorem3_splice(m, mm, n)), mm,
                                                                           n, Theorem3Condition::AllTermsInClass);
                        const bool same = v.holds == t.in_class(mm, n) && v.consistent();
                        ++total;
                        if (same) ++agree;
                        table.push_back(Json{{"m", mm}, {"n", n}, {"classified", t.in_class(mm, n)}, {"sequence_holds", v.holds}, {"agree", same}});
                    }
                }
                ok = agree == total;
                oc.results["classification"] = to_json(t);
                oc.results["cases"] = table;
                oc.summary = std::to_string(agree) + "/" + std::to_string(total) + " (m,n) cases agree";
            }
            oc.results["ok"] = ok;
            oc.code = ok ? 0 : 1;
        } else if (acceptance->parsed()) {
            Json rows = Json::array();
            std::size_t passed = 0;
            const auto results = run_acceptance([&](const CriterionResult& r) {
                err << format_line(r) << "\n";
                err.flush();
            });
            for (const auto& r : results) {
                if (r.pass) ++passed;
                rows.push_back(Json{{"id", r.id},
                                    {"name", r.name},
                                    {"pass", r.pass},
                                    {"limit_seconds", r.limit_seconds},
                                    {"detail", r.detail}});
            }
            oc.results = Json{{"criteria", rows}, {"passed", passed}, {"total", results.size()}};
            oc.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed";
            oc.code = passed == results.size() ? 0 : 1;
        }
        return emit(oc);
    } catch (const InputError& e) {
        return fail("input", e.what(), Json::object(), 2);
    } catch (const ContractViolation& e) {
        return fail("input", e.what(), Json::object(), 2);
    } catch (const InvariantError& e) {
        return fail("invariant", e.what(), Json::object(), 3);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), Json::object(), 3);
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_run(args, std::cout, std::cerr);
}

}  // namespace redhom
