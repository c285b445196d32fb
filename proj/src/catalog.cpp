#include "redhom/catalog.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "redhom/error.hpp"
#include "redhom/io.hpp"

namespace redhom {

namespace {

RingSpec monomial(std::uint32_t p, std::vector<std::string> vars, std::vector<std::vector<int>> ideal) {
    RingSpec s;
    s.mode = RingSpec::Mode::MonomialQuotient;
    s.p = p;
    s.variables = std::move(vars);
    s.ideal = std::move(ideal);
    return s;
}

RingSpec five_dimensional_gorenstein(std::uint32_t p) {
    RingSpec s;
    s.mode = RingSpec::Mode::StructureConstants;
    s.p = p;
    s.labels = {"1", "x", "y", "z", "w"};
    const std::size_t d = 5;
    s.table.assign(d, std::vector<Element>(d, Element(d, 0)));
    for (std::size_t b = 0; b < d; ++b) {
        s.table[0][b][b] = 1;
        s.table[b][0][b] = 1;
    }
    for (std::size_t v = 1; v <= 3; ++v) s.table[v][v][4] = 1;
    s.generator_labels = {"x", "y", "z"};
    s.grading = std::vector<int>{0, 1, 1, 1, 2};
    return s;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size() || v < 0) throw std::invalid_argument(text);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("bad " + what + " '" + text + "'");
    }
}

}  // namespace

std::vector<CatalogEntry> catalog_entries(std::uint32_t p) {
    const std::string q = "q" + std::to_string(p);
    return {
        {"R1" + q, "GF(" + std::to_string(p) + ")[x,y]/(x^2,xy,y^2)"},
        {"R2" + q, "GF(" + std::to_string(p) + ")[x]/(x^2); R2" + q + "eE for x^E"},
        {"R3" + q, "GF(" + std::to_string(p) + ")[x,y]/(x^2,y^2); R3" + q + "aAbB for (x^A,y^B)"},
        {"R4" + q, "GF(" + std::to_string(p) + ")<1,x,y,z,w>, x^2=y^2=z^2=w, other products of x,y,z zero"},
        {"R5" + q, "GF(" + std::to_string(p) + ")"},
    };
}

RingSpec catalog_ring(const std::string& id, std::optional<std::uint32_t> p_override) {
    static const std::regex pattern(R"(R([1-5])(?:q(\d+))?(?:e(\d+))?(?:a(\d+)b(\d+))?)");
    std::smatch m;
    if (!std::regex_match(id, m, pattern)) throw InputError("unknown ring id '" + id + "'");
    const int which = std::stoi(m[1].str());
    std::uint32_t p = m[2].matched ? static_cast<std::uint32_t>(parse_count(m[2].str(), "characteristic")) : 5;
    if (p_override) p = *p_override;
    if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (m[3].matched && which != 2) throw InputError("exponent suffix e only applies to R2: '" + id + "'");
    if (m[4].matched && which != 3) throw InputError("exponent suffix aAbB only applies to R3: '" + id + "'");

    switch (which) {
        case 1: return monomial(p, {"x", "y"}, {{2, 0}, {1, 1}, {0, 2}});
        case 2: {
            const int e = m[3].matched ? static_cast<int>(parse_count(m[3].str(), "exponent")) : 2;
            if (e < 1) throw InputError("R2 needs e >= 1");
            return monomial(p, {"x"}, {{e}});
        }
        case 3: {
            const int a = m[4].matched ? static_cast<int>(parse_count(m[4].str(), "exponent")) : 2;
            const int b = m[5].matched ? static_cast<int>(parse_count(m[5].str(), "exponent")) : 2;
            if (a < 1 || b < 1) throw InputError("R3 needs positive exponents");
            return monomial(p, {"x", "y"}, {{a, 0}, {0, b}});
        }
        case 4: return five_dimensional_gorenstein(p);
        default: return monomial(p, {}, {});
    }
}

Module parse_module(const AlgebraPtr& alg, const std::string& spec) {
    if (spec == "k") return residue_field(alg);
    if (spec == "zero") return zero_module(alg);
    if (spec == "lambda" || spec == "R") return free_module(alg, 1);

    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("unknown module '" + spec + "'");
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    auto split_once = [&](const std::string& s) -> std::pair<std::string, std::string> {
        const auto c = s.find(':');
        if (c == std::string::npos) throw InputError("module '" + spec + "' is missing an argument");
        return {s.substr(0, c), s.substr(c + 1)};
    };

    if (head == "free") return free_module(alg, parse_count(rest, "rank"));
    if (head == "syzygy") {
        auto [n, inner] = split_once(rest);
        return syzygy(parse_module(alg, inner), parse_count(n, "syzygy index"));
    }
    if (head == "transpose") return transpose(parse_module(alg, rest));
    if (head == "dual") return dual_module(parse_module(alg, rest)).module();
    if (head == "power") {
        auto [r, inner] = split_once(rest);
        return power(parse_module(alg, inner), parse_count(r, "power"));
    }
    if (head == "sum") {
        const auto bar = rest.find('|');
        if (bar == std::string::npos) throw InputError("sum needs two modules separated by '|'");
        return direct_sum(alg, {parse_module(alg, rest.substr(0, bar)), parse_module(alg, rest.substr(bar + 1))});
    }
    if (head == "cyclic") {
        std::vector<std::size_t> idx;
        std::stringstream ss(rest);
        std::string label;
        while (std::getline(ss, label, ',')) {
            const auto& labels = alg->labels();
            auto it = std::find(labels.begin(), labels.end(), label);
            if (it == labels.end()) throw InputError("no basis element '" + label + "' in the ring");
            idx.push_back(static_cast<std::size_t>(it - labels.begin()));
        }
        LambdaMatrix a(alg, 1, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) a.entry(0, j) = alg->basis_element(idx[j]);
        return cokernel_of_lambda_matrix(a).module;
    }
    if (head == "random") {
        auto [seed, maxdim] = split_once(rest);
        std::mt19937_64 rng(parse_count(seed, "seed"));
        return random_module(alg, rng, parse_count(maxdim, "dimension bound"));
    }
    if (head == "file") {
        std::ifstream in(rest);
        if (!in) throw InputError("cannot open module file '" + rest + "'");
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw InputError("module file '" + rest + "': " + e.what());
        }
        return module_from_json(alg, j);
    }
    throw InputError("unknown module '" + spec + "'");
}

Module random_module(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_dim) {
    if (max_dim == 0) throw ContractViolation("random modules need a positive dimension bound");
    const std::size_t d = alg->dim();
    std::uniform_int_distribution<std::uint32_t> coef(0, alg->p() - 1);
    std::uniform_int_distribution<std::size_t> rows_dist(1, 2), cols_dist(1, 3);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const std::size_t rows = rows_dist(rng);
        const std::size_t cols = cols_dist(rng);
        LambdaMatrix a(alg, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                Element e(d, 0);
                for (std::size_t b = 1; b < d; ++b) e[b] = coef(rng);
                a.entry(r, c) = std::move(e);
            }
        }
        Module m = cokernel_of_lambda_matrix(a).module;
        if (m.dim() > 0 && m.dim() <= max_dim) return m;
    }
    return residue_field(alg);
}

std::vector<SampleModule> sample_modules(const AlgebraPtr& alg, std::uint64_t seed, std::size_t random_count,
                                         std::size_t max_dim) {
    std::vector<SampleModule> out;
    const Module k = residue_field(alg);
    out.push_back({"k", k});
    out.push_back({"free:1", free_module(alg, 1)});
    if (!alg->is_field()) {
        out.push_back({"syzygy:1:k", syzygy(k, 1)});
        out.push_back({"transpose:k", transpose(k)});
    }
    out.push_back({"sum:k|free:1", direct_sum(alg, {k, free_module(alg, 1)})});
    std::erase_if(out, [&](const SampleModule& s) { return s.module.dim() > max_dim; });
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        const std::uint64_t s = rng();
        std::mt19937_64 local(s);
        out.push_back({"random:" + std::to_string(s) + ":" + std::to_string(max_dim), random_module(alg, local, max_dim)});
    }
    return out;
}

}  // namespace redhom
