#include "valgcd/poly.hpp"

#include <algorithm>
#include <sstream>

#include "valgcd/errors.hpp"

namespace valgcd {

Polynomial Polynomial::constant(Integer c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
    return p;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.vars_ = {name};
    p.terms_.emplace(Monomial({1}), Integer(1));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, TermMap terms) {
    Polynomial p;
    p.vars_ = std::move(vars);
    for (auto& [m, c] : terms) {
        if (m.size() != p.vars_.size())
            throw precondition_error("from_terms: monomial length does not match variable count");
        if (c != 0) p.terms_.emplace(m, c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

std::optional<long> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total_degree();
}

std::optional<long> Polynomial::degree_in(std::size_t var) const {
    if (terms_.empty()) return std::nullopt;
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
    return d;
}

const Integer& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw precondition_error("leading_coefficient of zero polynomial");
    return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw precondition_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

Integer Polynomial::constant_term() const {
    Monomial m(std::vector<std::uint32_t>(vars_.size(), 0));
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer Polynomial::content() const {
    Integer g = 0;
    for (const auto& [m, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Integer g = content();
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
    return r;
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& superset) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(superset.begin(), superset.end(), vars_[i]);
        if (it == superset.end() || *it != vars_[i])
            throw precondition_error("with_variables: not a superset");
        where[i] = static_cast<std::size_t>(it - superset.begin());
    }
    Polynomial r;
    r.vars_ = superset;
    for (const auto& [m, c] : terms_) {
        Monomial nm(std::vector<std::uint32_t>(superset.size(), 0));
        for (std::size_t i = 0; i < vars_.size(); ++i) nm[where[i]] = m[i];
        r.terms_.emplace(nm, c);
    }
    return r;
}

Polynomial Polynomial::trimmed() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (m[i] > 0) used[i] = true;
    std::vector<std::string> keep;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            keep.push_back(vars_[i]);
            idx.push_back(i);
        }
    Polynomial r;
    r.vars_ = keep;
    for (const auto& [m, c] : terms_) {
        Monomial nm(std::vector<std::uint32_t>(keep.size(), 0));
        for (std::size_t j = 0; j < idx.size(); ++j) nm[j] = m[idx[j]];
        r.terms_.emplace(nm, c);
    }
    return r;
}

void Polynomial::insert_term(const Monomial& m, const Integer& c) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    auto [a, b] = unify(*this, rhs);
    for (const auto& [m, c] : b.terms_) a.insert_term(m, c);
    return a;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    auto [a, b] = unify(*this, rhs);
    for (const auto& [m, c] : b.terms_) a.insert_term(m, -c);
    return a;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    auto [a, b] = unify(*this, rhs);
    Polynomial r;
    r.vars_ = a.vars_;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.insert_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Integer& c) const {
    Polynomial r;
    r.vars_ = vars_;
    if (c != 0)
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (vars_ == rhs.vars_) return terms_ == rhs.terms_;
    auto [a, b] = unify(*this, rhs);
    return a.terms_ == b.terms_;
}

Integer Polynomial::eval(const Point& p) const {
    if (p.size() != vars_.size()) throw precondition_error("eval: dimension mismatch");
    std::vector<std::vector<Integer>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) powers[i].push_back(1);
    Integer sum = 0, term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            std::uint32_t e = m[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= e) pw.push_back(pw.back() * p[i]);
            term *= pw[e];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::coefficient_of(std::size_t var, std::uint32_t k) const {
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Monomial nm = m;
        nm[var] = 0;
        r.terms_.emplace(nm, c);
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    long d = degree_in(var).value_or(0);
    std::vector<Polynomial> out;
    for (long k = 0; k <= d; ++k) out.push_back(coefficient_of(var, static_cast<std::uint32_t>(k)));
    return out;
}

Polynomial Polynomial::from_coefficients_in(std::size_t var, const std::vector<Polynomial>& coeffs) {
    if (coeffs.empty()) return Polynomial();
    Polynomial r;
    r.vars_ = coeffs[0].vars_;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [m, c] : coeffs[k].terms_) {
            Monomial nm = m;
            nm[var] += static_cast<std::uint32_t>(k);
            r.insert_term(nm, c);
        }
    }
    return r;
}

std::vector<std::string> Polynomial::merged_variables(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> out;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(out));
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.total_degree() > 0;
        if (!has_vars || a != 1) {
            os << a.get_str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << vars_[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> unify(const Polynomial& a, const Polynomial& b) {
    if (a.variables() == b.variables()) return {a, b};
    auto merged = Polynomial::merged_variables(a, b);
    return {a.with_variables(merged), b.with_variables(merged)};
}

std::vector<Polynomial> unify_family(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return {};
    std::vector<std::string> merged = polys[0].variables();
    for (std::size_t i = 1; i < polys.size(); ++i) {
        std::vector<std::string> next;
        std::set_union(merged.begin(), merged.end(), polys[i].variables().begin(),
                       polys[i].variables().end(), std::back_inserter(next));
        merged = std::move(next);
    }
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.with_variables(merged));
    return out;
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (images.size() != p.dimension())
        throw precondition_error("compose: one image per variable required");
    std::vector<std::string> target = images.empty() ? std::vector<std::string>{} : images[0].variables();
    for (const auto& im : images)
        if (im.variables() != target)
            throw precondition_error("compose: images must share one variable list");

    // lazily extended power tables per variable
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Polynomial::constant(1).with_variables(target));

    Polynomial sum;
    bool sum_init = false;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(c).with_variables(target);
        for (std::size_t i = 0; i < images.size(); ++i) {
            std::uint32_t e = m[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
            term = term * pw[e];
        }
        sum = sum_init ? sum + term : term;
        sum_init = true;
    }
    if (!sum_init) sum = Polynomial().with_variables(target);
    return sum;
}

Polynomial substitute_line(const Polynomial& p, const Point& a, const std::string& tvar) {
    if (a.size() != p.dimension()) throw precondition_error("substitute_line: dimension mismatch");
    Polynomial t = Polynomial::variable(tvar);
    std::vector<Polynomial> images;
    images.reserve(a.size());
    for (const auto& ai : a) images.push_back(t * ai);
    return compose(p, images);
}

Polynomial substitute_affine(const Polynomial& p, const Point& n, const Point& a,
                             const std::string& uvar, const std::string& tvar) {
    if (n.size() != p.dimension() || a.size() != p.dimension())
        throw precondition_error("substitute_affine: dimension mismatch");
    auto [u, t] = unify(Polynomial::variable(uvar), Polynomial::variable(tvar));
    std::vector<Polynomial> images;
    images.reserve(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) images.push_back(u * n[i] + t * a[i]);
    return compose(p, images);
}

Polynomial substitute_translate(const Polynomial& p, const Point& c) {
    if (c.size() != p.dimension()) throw precondition_error("substitute_translate: dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Polynomial xi = Polynomial::variable(p.variables()[i]).with_variables(p.variables());
        images.push_back(xi + Polynomial::constant(c[i]).with_variables(p.variables()));
    }
    return compose(p, images);
}

Polynomial substitute_partial(const Polynomial& p, const std::map<std::string, Integer>& values) {
    std::vector<std::string> remaining;
    for (const auto& v : p.variables())
        if (!values.count(v)) remaining.push_back(v);
    std::vector<Polynomial> images;
    images.reserve(p.dimension());
    for (const auto& v : p.variables()) {
        auto it = values.find(v);
        if (it != values.end())
            images.push_back(Polynomial::constant(it->second).with_variables(remaining));
        else
            images.push_back(Polynomial::variable(v).with_variables(remaining));
    }
    return compose(p, images);
}

Polynomial reduce_mod_p(const Polynomial& p, const Integer& prime) {
    if (!is_prime(prime)) throw precondition_error("reduce_mod_p: modulus is not prime");
    Polynomial::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
        Integer r = c % prime;
        if (r < 0) r += prime;
        if (r != 0) terms.emplace(m, r);
    }
    return Polynomial::from_terms(p.variables(), std::move(terms));
}

std::pair<Integer, Polynomial> content_and_primitive(const Polynomial& p) {
    return {p.content(), p.primitive_part()};
}

Integer Box::point_count() const {
    Integer n = 1;
    for (const auto& [lo, hi] : ranges) {
        if (hi < lo) return 0;
        n *= hi - lo + 1;
    }
    return n;
}

Point Box::point_at(const Integer& index) const {
    Point p(ranges.size());
    Integer rest = index;
    for (std::size_t i = ranges.size(); i-- > 0;) {
        Integer width = ranges[i].second - ranges[i].first + 1;
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), width.get_mpz_t());
        p[i] = ranges[i].first + r;
        rest = q;
    }
    return p;
}

Box Box::cube(const Integer& lo, const Integer& hi, std::size_t r) {
    Box b;
    b.ranges.assign(r, {lo, hi});
    return b;
}

} // namespace valgcd
