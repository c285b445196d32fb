#include "redhom/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "redhom/error.hpp"

namespace redhom {

namespace {

bool divides(const std::vector<int>& g, const std::vector<int>& m) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > m[i]) return false;
    }
    return true;
}

std::string monomial_label(const std::vector<int>& exps, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

// Graded order with x before y at equal degree (reverse lexicographic on exponent tuples).
bool monomial_before(const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0;
    int db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a > b;
}

}  // namespace

AlgebraPtr Algebra::build(const RingSpec& spec) {
    return spec.mode == RingSpec::Mode::MonomialQuotient ? build_monomial_quotient(spec)
                                                          : build_from_structure_constants(spec);
}

AlgebraPtr Algebra::build_monomial_quotient(const RingSpec& spec) {
    if (spec.mode != RingSpec::Mode::MonomialQuotient) throw ContractViolation("expected a monomial_quotient spec");
    if (!is_prime(spec.p)) throw InputError("characteristic " + std::to_string(spec.p) + " is not prime");
    const std::size_t n = spec.variables.size();
    for (const auto& g : spec.ideal) {
        if (g.size() != n) throw InputError("ideal generator has the wrong number of exponents");
        for (int e : g) {
            if (e < 0) throw InputError("negative exponent in ideal generator");
        }
        if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) {
            throw InputError("ideal contains the unit monomial; the quotient is the zero ring");
        }
    }
    // A pure power of each variable bounds the standard monomials.
    std::vector<int> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        int best = 0;
        for (const auto& g : spec.ideal) {
            bool pure = g[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w) {
                if (w != v && g[w] != 0) pure = false;
            }
            if (pure && (best == 0 || g[v] < best)) best = g[v];
        }
        if (best == 0) {
            throw InputError("quotient is infinite-dimensional: no pure power of variable '" + spec.variables[v] +
                             "' lies in the ideal");
        }
        bound[v] = best;
    }

    std::vector<std::vector<int>> monomials;
    std::vector<int> cur(n, 0);
    for (;;) {
        bool in_ideal = false;
        for (const auto& g : spec.ideal) {
            if (divides(g, cur)) {
                in_ideal = true;
                break;
            }
        }
        if (!in_ideal) monomials.push_back(cur);
        std::size_t v = 0;
        while (v < n) {
            if (++cur[v] < bound[v]) break;
            cur[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(monomials.begin(), monomials.end(), monomial_before);

    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->p_ = spec.p;
    alg->dim_ = monomials.size();
    alg->spec_ = spec;
    const std::size_t d = alg->dim_;
    alg->mult_.assign(d * d * d, 0);
    std::vector<int> grading(d);
    for (std::size_t a = 0; a < d; ++a) {
        alg->labels_.push_back(monomial_label(monomials[a], spec.variables));
        int deg = 0;
        for (int e : monomials[a]) deg += e;
        grading[a] = deg;
        for (std::size_t b = 0; b < d; ++b) {
            std::vector<int> prod(n);
            for (std::size_t v = 0; v < n; ++v) prod[v] = monomials[a][v] + monomials[b][v];
            auto it = index.find(prod);
            if (it != index.end()) alg->mult_[(a * d + b) * d + it->second] = 1;
        }
    }
    alg->grading_ = grading;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> e(n, 0);
        e[v] = 1;
        Element g(d, 0);
        auto it = index.find(e);
        if (it != index.end()) g[it->second] = 1;
        alg->generators_.push_back(std::move(g));
    }

    // Minimal generators of I; the quotient is a complete intersection iff they are pure powers.
    bool ci = true;
    for (std::size_t i = 0; i < spec.ideal.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < spec.ideal.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(spec.ideal[j], spec.ideal[i]) && (spec.ideal[j] != spec.ideal[i] || j < i)) redundant = true;
        }
        if (redundant) continue;
        int support = 0;
        for (int e : spec.ideal[i]) support += e > 0 ? 1 : 0;
        if (support > 1) ci = false;
    }
    alg->ci_ = ci;
    alg->finish();
    return alg;
}

AlgebraPtr Algebra::build_from_structure_constants(const RingSpec& spec) {
    if (spec.mode != RingSpec::Mode::StructureConstants) throw ContractViolation("expected a structure_constants spec");
    if (!is_prime(spec.p)) throw InputError("characteristic " + std::to_string(spec.p) + " is not prime");
    const std::size_t d = spec.labels.size();
    if (d == 0) throw InputError("structure-constant algebra needs at least the unit basis element");
    if (spec.table.size() != d) throw InputError("multiplication table must have one row per basis element");
    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->p_ = spec.p;
    alg->dim_ = d;
    alg->labels_ = spec.labels;
    alg->spec_ = spec;
    alg->mult_.assign(d * d * d, 0);
    const PrimeField f(spec.p);
    for (std::size_t a = 0; a < d; ++a) {
        if (spec.table[a].size() != d) throw InputError("multiplication table row " + spec.labels[a] + " has wrong length");
        for (std::size_t b = 0; b < d; ++b) {
            const auto& v = spec.table[a][b];
            if (v.size() != d) {
                throw InputError("product " + spec.labels[a] + "*" + spec.labels[b] + " has wrong coefficient count");
            }
            for (std::size_t c = 0; c < d; ++c) {
                if (v[c] >= spec.p) throw InputError("structure constant out of range for GF(p)");
                alg->mult_[(a * d + b) * d + c] = v[c];
            }
        }
    }
    const auto& L = spec.labels;
    auto witness = [&](const char* axiom, std::initializer_list<std::size_t> idx) {
        std::ostringstream os;
        os << axiom << " fails; witness (";
        bool first = true;
        for (std::size_t i : idx) {
            os << (first ? "" : ",") << L[i];
            first = false;
        }
        os << ")";
        return InputError(os.str());
    };
    for (std::size_t a = 0; a < d; ++a) {
        if (alg->basis_product(0, a) != alg->basis_element(a) || alg->basis_product(a, 0) != alg->basis_element(a)) {
            throw witness("unit axiom", {0, a});
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            if (alg->basis_product(a, b) != alg->basis_product(b, a)) throw witness("commutativity", {a, b});
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const Element ab = alg->basis_product(a, b);
            for (std::size_t c = 0; c < d; ++c) {
                const Element bc = alg->basis_product(b, c);
                if (alg->multiply(ab, alg->basis_element(c)) != alg->multiply(alg->basis_element(a), bc)) {
                    throw witness("associativity", {a, b, c});
                }
            }
        }
    }
    for (std::size_t a = 1; a < d; ++a) {
        for (std::size_t b = 1; b < d; ++b) {
            if (alg->structure_constant(a, b, 0) != 0) throw witness("locality (span of non-unit basis is an ideal)", {a, b});
        }
    }
    alg->grading_ = spec.grading;
    if (spec.grading && spec.grading->size() != d) throw InputError("grading must list one degree per basis element");
    alg->ci_ = spec.declared_ci;

    if (spec.generator_labels.empty()) {
        // A basis of m/m^2 chosen among the basis labels, in order.
        std::vector<Matrix> cols;
        for (std::size_t a = 1; a < d; ++a) {
            for (std::size_t b = 1; b < d; ++b) {
                cols.push_back(Matrix::column_vector(alg->basis_product(a, b), spec.p));
            }
        }
        Matrix span = hstack(cols, d, spec.p);
        for (std::size_t a = 1; a < d; ++a) {
            Matrix e = Matrix::column_vector(alg->basis_element(a), spec.p);
            if (!column_span_contains(span, e)) {
                alg->generators_.push_back(alg->basis_element(a));
                span = hstack(span, e);
            }
        }
    } else {
        for (const auto& lbl : spec.generator_labels) {
            auto it = std::find(L.begin(), L.end(), lbl);
            if (it == L.end()) throw InputError("generator label '" + lbl + "' is not a basis label");
            const auto idx = static_cast<std::size_t>(it - L.begin());
            if (idx == 0) throw InputError("the unit cannot be a generator of the maximal ideal");
            alg->generators_.push_back(alg->basis_element(idx));
        }
    }
    alg->finish();
    return alg;
}

void Algebra::finish() {
    const std::size_t d = dim_;
    regular_.clear();
    for (std::size_t b = 0; b < d; ++b) {
        Matrix m(d, d, p_);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t c = 0; c < d; ++c) m(c, a) = structure_constant(b, a, c);
        }
        regular_.push_back(std::move(m));
    }

    // Nilpotency of m = span(e_1..e_{D-1}): the power chain must reach zero.
    {
        Matrix power(d, d > 0 ? d - 1 : 0, p_);
        for (std::size_t a = 1; a < d; ++a) power(a, a - 1) = 1;
        std::size_t length = 1;
        while (power.cols() > 0) {
            std::vector<Matrix> next;
            for (std::size_t a = 1; a < d; ++a) next.push_back(regular_[a] * power);
            Matrix nm = column_space(hstack(next, d, p_));
            if (nm.cols() == power.cols()) {
                throw InputError("algebra is not local: m^" + std::to_string(length) + " = m^" +
                                 std::to_string(length + 1) + " is nonzero (dimension " +
                                 std::to_string(nm.cols()) + ")");
            }
            power = std::move(nm);
            ++length;
        }
        loewy_length_ = length;
    }

    for (const auto& g : generators_) {
        if (g.size() != d || g[0] != 0) throw InputError("generators must lie in the maximal ideal");
    }

    // Monomial words in the generators spanning the algebra.
    words_.clear();
    std::vector<Element> values;
    Matrix span(d, 0, p_);
    auto try_add = [&](std::vector<std::size_t> w, Element v) {
        Matrix col = Matrix::column_vector(v, p_);
        if (column_span_contains(span, col)) return false;
        span = hstack(span, col);
        words_.push_back(std::move(w));
        values.push_back(std::move(v));
        return true;
    };
    try_add({}, unit());
    for (std::size_t head = 0; head < words_.size(); ++head) {
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            std::vector<std::size_t> w = words_[head];
            w.push_back(i);
            std::sort(w.begin(), w.end());
            try_add(std::move(w), multiply(generators_[i], values[head]));
        }
    }
    if (words_.size() != d) {
        throw InputError("the distinguished generators do not generate the maximal ideal");
    }
    basis_in_words_ = *inverse(span);

    // socle = common kernel of multiplication by the generators
    if (generators_.empty()) {
        socle_ = Matrix::identity(d, p_);
    } else {
        std::vector<Matrix> stack;
        for (const auto& g : generators_) stack.push_back(multiplication_matrix(g));
        socle_ = kernel_basis(vstack(stack, d, p_));
    }
}

Element Algebra::basis_product(std::size_t a, std::size_t b) const {
    Element out(dim_);
    for (std::size_t c = 0; c < dim_; ++c) out[c] = structure_constant(a, b, c);
    return out;
}

Element Algebra::multiply(const Element& u, const Element& v) const {
    const PrimeField f(p_);
    Element out(dim_, 0);
    for (std::size_t a = 0; a < dim_; ++a) {
        if (u[a] == 0) continue;
        for (std::size_t b = 0; b < dim_; ++b) {
            if (v[b] == 0) continue;
            const Scalar s = f.mul(u[a], v[b]);
            const Scalar* row = mult_.data() + (a * dim_ + b) * dim_;
            for (std::size_t c = 0; c < dim_; ++c) {
                if (row[c] != 0) out[c] = f.add(out[c], f.mul(s, row[c]));
            }
        }
    }
    return out;
}

Element Algebra::unit() const { return basis_element(0); }

Element Algebra::basis_element(std::size_t i) const {
    Element e(dim_, 0);
    e.at(i) = 1;
    return e;
}

bool Algebra::is_zero(const Element& e) const {
    return std::all_of(e.begin(), e.end(), [](Scalar v) { return v == 0; });
}

Matrix Algebra::multiplication_matrix(const Element& e) const {
    Matrix m(dim_, dim_, p_);
    for (std::size_t b = 0; b < dim_; ++b) {
        if (e[b] != 0) m.add_scaled(regular_[b], e[b]);
    }
    return m;
}

RingSpec Algebra::to_structure_spec() const {
    RingSpec s;
    s.mode = RingSpec::Mode::StructureConstants;
    s.p = p_;
    s.labels = labels_;
    s.table.assign(dim_, std::vector<Element>(dim_));
    for (std::size_t a = 0; a < dim_; ++a) {
        for (std::size_t b = 0; b < dim_; ++b) s.table[a][b] = basis_product(a, b);
    }
    for (const auto& g : generators_) {
        // generators of built algebras are basis elements in both construction modes
        for (std::size_t i = 1; i < dim_; ++i) {
            if (g == basis_element(i)) {
                s.generator_labels.push_back(labels_[i]);
                break;
            }
        }
    }
    if (s.generator_labels.size() != generators_.size()) s.generator_labels.clear();
    s.grading = grading_;
    s.declared_ci = ci_;
    return s;
}

std::string Algebra::element_to_string(const Element& e) const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (e[i] != 1 || i == 0) out += std::to_string(e[i]);
        if (i != 0) out += (e[i] != 1 ? "*" : "") + labels_[i];
    }
    return out.empty() ? "0" : out;
}

SocleReport socle_and_classify(const Algebra& a) {
    return SocleReport{a.socle_dim(), a.is_gorenstein(), a.is_field(), a.is_monomial_ci()};
}

}  // namespace redhom
