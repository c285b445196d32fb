#include "redhom/io.hpp"

#include <sstream>

#include "redhom/error.hpp"

namespace redhom {

namespace {

template <class T>
T get(const Json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const std::exception& e) {
        throw InputError(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<int> parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
    std::vector<int> exps(vars.size(), 0);
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.empty() || factor == "1") continue;
        std::string name = factor;
        int e = 1;
        if (const auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            try {
                e = std::stoi(factor.substr(caret + 1));
            } catch (const std::exception&) {
                throw InputError("bad exponent in monomial '" + text + "'");
            }
        }
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw InputError("monomial '" + text + "' uses unknown variable '" + name + "'");
        exps[static_cast<std::size_t>(it - vars.begin())] += e;
    }
    return exps;
}

Element element_from_json(const Json& j, std::size_t d, std::uint32_t p) {
    const PrimeField f(p);
    Element e(d, 0);
    if (!j.is_array() || j.size() != d) throw InputError("algebra element must list " + std::to_string(d) + " coefficients");
    for (std::size_t i = 0; i < d; ++i) e[i] = f.from_int(j[i].get<long long>());
    return e;
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw InputError("unknown basis label '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

RingSpec ring_spec_from_json(const Json& j) {
    RingSpec s;
    const std::string mode = get<std::string>(j, "mode");
    s.p = get<std::uint32_t>(j, "p");
    if (!is_prime(s.p)) throw InputError("p = " + std::to_string(s.p) + " is not prime");
    if (mode == "monomial_quotient") {
        s.mode = RingSpec::Mode::MonomialQuotient;
        s.variables = j.value("variables", std::vector<std::string>{});
        for (const auto& g : j.value("ideal", Json::array())) {
            if (g.is_string()) {
                s.ideal.push_back(parse_monomial(g.get<std::string>(), s.variables));
            } else {
                auto v = g.get<std::vector<int>>();
                if (v.size() != s.variables.size()) throw InputError("exponent vector length differs from variable count");
                s.ideal.push_back(std::move(v));
            }
        }
        return s;
    }
    if (mode != "structure_constants") throw InputError("unknown ring mode '" + mode + "'");
    s.mode = RingSpec::Mode::StructureConstants;
    s.labels = get<std::vector<std::string>>(j, "labels");
    const std::size_t d = s.labels.size();
    if (d == 0) throw InputError("a ring needs at least the unit");
    s.table.assign(d, std::vector<Element>(d, Element(d, 0)));
    if (j.contains("table")) {
        const Json& t = j.at("table");
        if (!t.is_array() || t.size() != d) throw InputError("table must have one row per basis element");
        for (std::size_t a = 0; a < d; ++a) {
            if (!t[a].is_array() || t[a].size() != d) throw InputError("table row " + s.labels[a] + " has the wrong length");
            for (std::size_t b = 0; b < d; ++b) s.table[a][b] = element_from_json(t[a][b], d, s.p);
        }
    } else {
        // Sparse form: the unit row and column are filled in, every listed product overrides.
        for (std::size_t b = 0; b < d; ++b) {
            s.table[0][b][b] = 1;
            s.table[b][0][b] = 1;
        }
        const PrimeField f(s.p);
        const Json products = get<Json>(j, "products");
        for (const auto& [key, value] : products.items()) {
            const auto star = key.find('*');
            if (star == std::string::npos) throw InputError("product key '" + key + "' must look like a*b");
            const std::size_t a = label_index(s.labels, key.substr(0, star));
            const std::size_t b = label_index(s.labels, key.substr(star + 1));
            Element e(d, 0);
            for (const auto& [lab, c] : value.items()) e[label_index(s.labels, lab)] = f.from_int(c.get<long long>());
            s.table[a][b] = e;
        }
    }
    s.generator_labels = j.value("generators", std::vector<std::string>{});
    if (j.contains("grading")) s.grading = j.at("grading").get<std::vector<int>>();
    if (j.contains("ci")) s.declared_ci = j.at("ci").get<bool>();
    return s;
}

Json ring_spec_to_json(const RingSpec& s) {
    Json j;
    if (s.mode == RingSpec::Mode::MonomialQuotient) {
        j["mode"] = "monomial_quotient";
        j["p"] = s.p;
        j["variables"] = s.variables;
        j["ideal"] = s.ideal;
        return j;
    }
    j["mode"] = "structure_constants";
    j["p"] = s.p;
    j["labels"] = s.labels;
    j["table"] = s.table;
    if (!s.generator_labels.empty()) j["generators"] = s.generator_labels;
    if (s.grading) j["grading"] = *s.grading;
    if (s.declared_ci) j["ci"] = *s.declared_ci;
    return j;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        rows.push_back(std::vector<Scalar>(row.begin(), row.end()));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::uint32_t p) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<long long>>());
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw InputError("matrix rows have different lengths");
    }
    return Matrix::from_rows(rows, p);
}

Json module_to_json(const Module& m) {
    Json j;
    j["dim"] = m.dim();
    Json acts = Json::array();
    for (const Matrix& a : m.generator_actions()) acts.push_back(matrix_to_json(a));
    j["actions"] = acts;
    return j;
}

Module module_from_json(const AlgebraPtr& alg, const Json& j) {
    if (j.contains("presentation")) {
        const Json& rows = j.at("presentation");
        if (!rows.is_array() || rows.empty()) throw InputError("presentation must be a nonempty array of rows");
        const std::size_t cols = rows[0].size();
        LambdaMatrix a(alg, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw InputError("presentation rows have different lengths");
            for (std::size_t c = 0; c < cols; ++c) a.entry(r, c) = element_from_json(rows[r][c], alg->dim(), alg->p());
        }
        return cokernel_of_lambda_matrix(a).module;
    }
    const std::size_t dim = get<std::size_t>(j, "dim");
    std::vector<Matrix> acts;
    for (const auto& a : get<Json>(j, "actions")) {
        Matrix m = a.empty() ? Matrix(dim, dim, alg->p()) : matrix_from_json(a, alg->p());
        if (m.rows() != dim || m.cols() != dim) throw InputError("action matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
        acts.push_back(std::move(m));
    }
    if (acts.size() != alg->num_generators()) {
        throw InputError("module lists " + std::to_string(acts.size()) + " actions, ring has " +
                         std::to_string(alg->num_generators()) + " generators");
    }
    if (dim == 0) return zero_module(alg);
    return Module::from_generator_actions(alg, acts);
}

Json lambda_matrix_to_json(const LambdaMatrix& a) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a.entry(r, c));
        rows.push_back(row);
    }
    return rows;
}

Json free_complex_to_json(const FreeComplex& c) {
    Json j;
    j["lo"] = c.lo();
    j["hi"] = c.hi();
    j["ranks"] = c.ranks();
    Json d = Json::array();
    for (int i = c.lo() + 1; i <= c.hi(); ++i) d.push_back(lambda_matrix_to_json(c.differential(i)));
    j["differentials"] = d;
    return j;
}

Json module_complex_to_json(const ModuleComplex& c) {
    Json j;
    j["lo"] = c.lo();
    Json mods = Json::array();
    for (const Module& m : c.modules()) mods.push_back(module_to_json(m));
    j["modules"] = mods;
    Json maps = Json::array();
    for (int i = c.lo() + 1; i <= c.hi(); ++i) maps.push_back(matrix_to_json(c.differential(i)));
    j["maps"] = maps;
    return j;
}

ModuleComplex module_complex_from_json(const AlgebraPtr& alg, const Json& j) {
    const int lo = get<int>(j, "lo");
    std::vector<Module> mods;
    for (const auto& m : get<Json>(j, "modules")) mods.push_back(module_from_json(alg, m));
    std::vector<Matrix> maps;
    const Json jm = get<Json>(j, "maps");
    if (jm.size() + 1 != mods.size()) throw InputError("sequence needs one map fewer than modules");
    for (std::size_t k = 0; k < jm.size(); ++k) {
        // Empty arrays are ambiguous in shape, so the shape comes from the modules.
        Matrix m = jm[k].empty() ? Matrix(mods[k].dim(), mods[k + 1].dim(), alg->p()) : matrix_from_json(jm[k], alg->p());
        if (m.rows() != mods[k].dim() || m.cols() != mods[k + 1].dim()) {
            throw InputError("map " + std::to_string(k) + " has the wrong shape");
        }
        maps.push_back(std::move(m));
    }
    ModuleComplex c(lo, std::move(mods), std::move(maps));
    if (!c.maps_are_homomorphisms()) throw InputError("sequence maps are not Λ-linear");
    return c;
}

Json to_json(const ExtTable& t) {
    return Json{{"bound", t.bound}, {"dims", t.dims}};
}

Json to_json(const ExactnessVerdict& v) {
    return Json{{"position", v.position},   {"kernel_dim", v.kernel_dim}, {"image_dim", v.image_dim},
                {"image_in_kernel", v.image_in_kernel}, {"exact", v.exact}, {"defect", v.defect()}};
}

Json to_json(const TorsionfreeVerdict& v) {
    return Json{{"bound", v.bound},
                {"m_max", v.m_max},
                {"n_max", v.n_max},
                {"totally_reflexive_up_to_B", v.totally_reflexive_up_to_bound},
                {"ext_module", v.ext_module.dims},
                {"ext_transpose", v.ext_transpose.dims}};
}

Json to_json(const GdimReport& r) {
    Json j{{"bound", r.bound}, {"ext", r.ext.dims}};
    j["sup_with_zero"] = r.sup_with_zero ? Json(*r.sup_with_zero) : Json(nullptr);
    j["sup_positive"] = r.sup_positive ? Json(*r.sup_positive) : Json(nullptr);
    j["tail_zero"] = r.tail_zero;
    j["formula_value"] = r.formula_value ? Json(*r.formula_value) : Json(nullptr);
    j["verdict"] = to_string(r.verdict);
    return j;
}

Json to_json(const GrowthEstimate& g) {
    Json j{{"kind", to_string(g.kind)}, {"values", g.values}, {"window_start", g.window_start}};
    j["fitted_degree"] = g.fitted_degree ? Json(*g.fitted_degree) : Json(nullptr);
    j["exponential"] = g.exponential;
    j["verdict"] = g.describe();
    j["note"] = "estimate from a finite window";
    return j;
}

Json to_json(const SearchLimits& l) {
    return Json{{"max_steps", l.max_steps}, {"n_max", l.n_max},       {"ab_max", l.ab_max},
                {"cap", l.cap},             {"seed", l.seed},         {"tr_bound", l.tr_bound},
                {"dimension_filter", l.dimension_filter}, {"random_samples", l.random_samples},
                {"max_frontier", l.max_frontier}};
}

Json to_json(const SearchResult& r, const SearchLimits& l) {
    Json j;
    j["examined"] = r.examined;
    j["pruned"] = r.pruned;
    j["exhaustive"] = r.exhaustive;
    j["levels_searched"] = r.levels_searched;
    if (!r.witness) {
        j["witness"] = nullptr;
        j["lower"] = "> " + std::to_string(l.max_steps) + " within limits (exhaustive: " + (r.exhaustive ? "yes" : "no") + ")";
        return j;
    }
    const ReductionWitness& w = *r.witness;
    Json wj;
    wj["mode"] = to_string(w.mode);
    wj["target"] = to_string(w.target);
    wj["depth"] = w.depth();
    Json steps = Json::array();
    for (const ReductionStep& s : w.steps) {
        steps.push_back(Json{{"n", s.n},
                             {"a", s.a},
                             {"b", s.b},
                             {"ext_coords", s.coords},
                             {"middle", module_to_json(s.sequence.middle)},
                             {"sequence", module_complex_to_json(s.sequence.sequence)}});
    }
    wj["steps"] = steps;
    wj["terminal_dim"] = w.terminal().dim();
    wj["terminal_verdict"] = w.target == ReduceTarget::Pd ? "free (finite pd)"
                                                          : "totally reflexive up to " + std::to_string(w.bound);
    j["witness"] = wj;
    return j;
}

Json to_json(const Theorem3Verdict& v) {
    Json ex = Json::array(), dex = Json::array();
    for (const auto& e : v.exactness) ex.push_back(to_json(e));
    for (const auto& e : v.dual_exactness) dex.push_back(to_json(e));
    return Json{{"sequence_exact", v.sequence_exact},
                {"dual_exact", v.dual_exact},
                {"exactness", ex},
                {"dual_exactness", dex},
                {"membership_failures", v.membership_failures},
                {"holds", v.holds},
                {"image_classification", to_json(v.image_classification)},
                {"image_in_class", v.image_in_class},
                {"consistent", v.consistent()}};
}

Json to_json(const Pushforward& p) {
    Json ex = Json::array();
    for (const auto& e : p.exactness) ex.push_back(to_json(e));
    return Json{{"sequence", module_complex_to_json(p.sequence)},
                {"exactness", ex},
                {"transpose_ext", p.transpose_ext},
                {"exact", p.exact},
                {"dual_surjects_onto_dual", p.dual_surjects_onto_dual}};
}

Json to_json(const InequalityCheck& c) {
    Json j{{"step", c.step}, {"n", c.n}, {"checked", c.checked}, {"holds", c.holds}};
    j["first_failure"] = c.first_failure ? Json(*c.first_failure) : Json(nullptr);
    return j;
}

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const Theorem4Report& r, const SearchLimits& l) {
    Json ineq = Json::array();
    for (const auto& c : r.inequalities) ineq.push_back(to_json(c));
    return Json{{"cx", to_json(r.cx)},
                {"ured_pd", to_json(r.ured, l)},
                {"consistent", r.consistent},
                {"equality", optional_bool(r.equality)},
                {"inequalities", ineq}};
}

Json to_json(const GorensteinSideReport& r, const SearchLimits& l) {
    return Json{{"gcx", to_json(r.gcx)},
                {"ured_gdim", to_json(r.ured_gdim, l)},
                {"px", to_json(r.px)},
                {"consistent", r.consistent},
                {"plexity_implication", optional_bool(r.plexity_implication)}};
}

Json to_json(const ComplexityChain& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        steps.push_back(Json{{"n", s.n},
                             {"ext_coords", s.coords},
                             {"cx_before", s.cx_before},
                             {"cx_after", s.cx_after},
                             {"middle", module_to_json(s.sequence.middle)}});
    }
    return Json{{"found", c.found}, {"cx_input", c.cx_input}, {"steps", steps}};
}

}  // namespace redhom
