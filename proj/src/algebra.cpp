#include "valgcd/algebra.hpp"

#include <algorithm>
#include <cassert>

#include "valgcd/errors.hpp"
#include "valgcd/parallel.hpp"

namespace valgcd {

namespace {

// ------------------------------------------------------------------
// shared helpers for the Z[x] / F_p[x] gcd machinery; mod == nullptr
// means coefficients in Z, otherwise canonical representatives mod p.
// ------------------------------------------------------------------

Polynomial redm(const Polynomial& p, const Integer* mod) {
    if (!mod) return p;
    Polynomial::TermMap t;
    for (const auto& [m, c] : p.terms()) {
        Integer r = c % *mod;
        if (r < 0) r += *mod;
        if (r != 0) t.emplace(m, r);
    }
    return Polynomial::from_terms(p.variables(), std::move(t));
}

Polynomial poly_one(const std::vector<std::string>& vars) {
    return Polynomial::constant(1).with_variables(vars);
}

long degv(const Polynomial& p, std::size_t v) { return p.degree_in(v).value_or(-1); }

Polynomial mul_var_pow(const Polynomial& p, std::size_t v, std::uint32_t k) {
    if (k == 0) return p;
    Polynomial::TermMap t;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm = m;
        nm[v] += k;
        t.emplace(nm, c);
    }
    return Polynomial::from_terms(p.variables(), std::move(t));
}

// Pseudo-remainder in variable v: lc_v(B)^(degA-degB+1) * A = S*B + R.
// Requires deg_v A >= deg_v B >= 1 (or 0) and B nonzero in v.
Polynomial prem(const Polynomial& A, const Polynomial& B, std::size_t v, const Integer* mod) {
    long dB = degv(B, v);
    Polynomial lcB = B.coefficient_of(v, static_cast<std::uint32_t>(dB));
    Polynomial R = A;
    long e = degv(A, v) - dB + 1;
    while (!R.is_zero() && degv(R, v) >= dB) {
        long dR = degv(R, v);
        Polynomial lcR = R.coefficient_of(v, static_cast<std::uint32_t>(dR));
        R = redm(lcB * R - mul_var_pow(lcR * B, v, static_cast<std::uint32_t>(dR - dB)), mod);
        --e;
    }
    while (e-- > 0) R = redm(R * lcB, mod);
    return R;
}

std::optional<Polynomial> divide_exact_impl(const Polynomial& num, const Polynomial& den,
                                            const Integer* mod) {
    auto [N, D] = unify(num, den);
    if (D.is_zero()) return std::nullopt;
    if (N.is_zero()) return N;
    const Monomial ltDm = D.leading_monomial();
    const Integer ltDc = D.leading_coefficient();
    Integer inv;
    if (mod && mpz_invert(inv.get_mpz_t(), ltDc.get_mpz_t(), mod->get_mpz_t()) == 0)
        return std::nullopt;
    Polynomial Q = Polynomial().with_variables(N.variables());
    Polynomial R = N;
    while (!R.is_zero()) {
        const Monomial& m = R.leading_monomial();
        if (!ltDm.divides(m)) return std::nullopt;
        Integer c;
        if (mod) {
            c = R.leading_coefficient() * inv % *mod;
            if (c < 0) c += *mod;
        } else {
            if (!mpz_divisible_p(R.leading_coefficient().get_mpz_t(), ltDc.get_mpz_t()))
                return std::nullopt;
            c = R.leading_coefficient() / ltDc;
        }
        Polynomial::TermMap tm;
        tm.emplace(m / ltDm, c);
        Polynomial term = Polynomial::from_terms(N.variables(), std::move(tm));
        Q = Q + term;
        R = redm(R - term * D, mod);
    }
    return Q;
}

Polynomial divide_exact_or_bug(const Polynomial& num, const Polynomial& den, const Integer* mod) {
    auto q = divide_exact_impl(num, den, mod);
    if (!q) throw verification_error("internal exact polynomial division failed");
    return *q;
}

Polynomial normalize_gcd(const Polynomial& g, const Integer* mod) {
    if (g.is_zero()) return g;
    if (mod) {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), g.leading_coefficient().get_mpz_t(), mod->get_mpz_t());
        return redm(g * inv, mod);
    }
    return g.leading_coefficient() < 0 ? -g : g;
}

Polynomial gcd_rec(const Polynomial& A0, const Polynomial& B0, const Integer* mod);

// gcd of the coefficient polynomials of P viewed in variable v.
Polynomial content_wrt(const Polynomial& P, std::size_t v, const Integer* mod) {
    Polynomial c = Polynomial().with_variables(P.variables());
    long d = degv(P, v);
    for (long k = 0; k <= d; ++k) {
        Polynomial coef = P.coefficient_of(v, static_cast<std::uint32_t>(k));
        if (coef.is_zero()) continue;
        c = gcd_rec(c, coef, mod);
        if (c.is_constant() && (mod || c.leading_coefficient() == 1)) break;
    }
    return c;
}

// Subresultant-PRS gcd over Z[x] (mod == nullptr) or F_p[x]. Recursion on
// the last occurring variable with content/primitive-part bookkeeping; the
// remainder sequence divides by g*h^d, which keeps coefficients from
// exploding without per-step content extraction.
Polynomial gcd_rec(const Polynomial& A0, const Polynomial& B0, const Integer* mod) {
    if (A0.is_zero()) return normalize_gcd(B0, mod);
    if (B0.is_zero()) return normalize_gcd(A0, mod);
    if (A0.is_constant() || B0.is_constant()) {
        if (mod) return poly_one(A0.variables());
        return Polynomial::constant(int_gcd(A0.content(), B0.content()))
            .with_variables(A0.variables());
    }
    std::size_t dim = A0.dimension();
    std::size_t v = dim;
    for (std::size_t i = dim; i-- > 0;) {
        if (degv(A0, i) > 0 || degv(B0, i) > 0) {
            v = i;
            break;
        }
    }
    assert(v < dim);
    long dA = degv(A0, v), dB = degv(B0, v);
    if (dA == 0) return gcd_rec(A0, content_wrt(B0, v, mod), mod);
    if (dB == 0) return gcd_rec(content_wrt(A0, v, mod), B0, mod);

    Polynomial cA = content_wrt(A0, v, mod);
    Polynomial cB = content_wrt(B0, v, mod);
    Polynomial c = gcd_rec(cA, cB, mod);
    Polynomial a = divide_exact_or_bug(A0, cA, mod);
    Polynomial b = divide_exact_or_bug(B0, cB, mod);
    if (degv(a, v) < degv(b, v)) std::swap(a, b);

    Polynomial g = poly_one(a.variables());
    Polynomial h = g;
    Polynomial res;
    for (;;) {
        long d = degv(a, v) - degv(b, v);
        Polynomial r = prem(a, b, v, mod);
        if (r.is_zero()) {
            res = b;
            break;
        }
        if (degv(r, v) == 0) {
            res = poly_one(a.variables());
            break;
        }
        a = b;
        b = divide_exact_or_bug(r, redm(g * h.pow(static_cast<unsigned>(d)), mod), mod);
        g = a.coefficient_of(v, static_cast<std::uint32_t>(degv(a, v)));
        if (d > 0)
            h = divide_exact_or_bug(redm(g.pow(static_cast<unsigned>(d)), mod),
                                    redm(h.pow(static_cast<unsigned>(d - 1)), mod), mod);
    }
    if (degv(res, v) > 0) res = divide_exact_or_bug(res, content_wrt(res, v, mod), mod);
    return normalize_gcd(redm(c * res, mod), mod);
}

// ------------------------------------------------------------------
// dense univariate helpers (ascending coefficients, no trailing zeros)
// ------------------------------------------------------------------

using DensePoly = std::vector<Integer>;

void dense_trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long dense_deg(const DensePoly& p) { return static_cast<long>(p.size()) - 1; }

DensePoly to_dense(const Polynomial& p, std::size_t v) {
    DensePoly d(static_cast<std::size_t>(degv(p, v)) + 1, Integer(0));
    for (const auto& [m, c] : p.terms()) d[m[v]] = c;
    dense_trim(d);
    return d;
}

// Pseudo-remainder for dense polynomials: lc(B)^(degA-degB+1) A = S B + R.
DensePoly dense_prem(const DensePoly& A, const DensePoly& B) {
    DensePoly R = A;
    const Integer& lcB = B.back();
    long e = dense_deg(A) - dense_deg(B) + 1;
    while (!R.empty() && dense_deg(R) >= dense_deg(B)) {
        long k = dense_deg(R) - dense_deg(B);
        Integer lcR = R.back();
        for (auto& c : R) c *= lcB;
        for (std::size_t i = 0; i < B.size(); ++i) R[i + k] -= lcR * B[i];
        dense_trim(R);
        --e;
    }
    if (e > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lcB.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : R) c *= f;
    }
    return R;
}

Rational rational_pow(const Integer& base, long e) {
    Integer b;
    mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r(b);
    if (e < 0) r = 1 / r;
    return r;
}

// ------------------------------------------------------------------
// dense arithmetic over F_p (coefficients reduced mod p, ascending)
// ------------------------------------------------------------------

struct ModCtx {
    Integer p;
    Integer red(const Integer& x) const {
        Integer r = x % p;
        if (r < 0) r += p;
        return r;
    }
    Integer inv(const Integer& x) const {
        Integer r;
        mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        return r;
    }
};

DensePoly dense_monic_mod(DensePoly a, const ModCtx& F) {
    dense_trim(a);
    if (a.empty()) return a;
    Integer s = F.inv(a.back());
    for (auto& c : a) c = F.red(c * s);
    return a;
}

// remainder of a by monic b
DensePoly dense_rem_mod(DensePoly a, const DensePoly& b, const ModCtx& F) {
    dense_trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        Integer lc = a.back();
        std::size_t k = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] = F.red(a[i + k] - lc * b[i]);
        dense_trim(a);
    }
    return a;
}

DensePoly dense_mulrem_mod(const DensePoly& a, const DensePoly& b, const DensePoly& m,
                           const ModCtx& F) {
    if (a.empty() || b.empty()) return {};
    DensePoly prod(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = F.red(prod[i + j] + a[i] * b[j]);
    return dense_rem_mod(std::move(prod), m, F);
}

DensePoly dense_gcd_mod(DensePoly a, DensePoly b, const ModCtx& F) {
    a = dense_monic_mod(std::move(a), F);
    b = dense_monic_mod(std::move(b), F);
    while (!b.empty()) {
        DensePoly r = dense_rem_mod(a, b, F);
        a = std::move(b);
        b = dense_monic_mod(std::move(r), F);
    }
    return a;
}

// Finds the single variable occurring across the family; throws when some
// input genuinely involves two or more variables. Constant-only families
// report no variable.
std::optional<std::string> common_variable(const std::vector<Polynomial>& polys,
                                           const char* who) {
    std::optional<std::string> var;
    for (const auto& p : polys) {
        Polynomial t = p.trimmed();
        if (t.dimension() > 1)
            throw precondition_error(std::string(who) + ": inputs must be univariate");
        if (t.dimension() == 1) {
            if (var && *var != t.variables()[0])
                throw precondition_error(std::string(who) +
                                         ": inputs must share one common variable");
            var = t.variables()[0];
        }
    }
    return var;
}

// ------------------------------------------------------------------
// dense univariate arithmetic over Q, for the Bezout identity
// ------------------------------------------------------------------

using QPoly = std::vector<Rational>;

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    q_trim(r);
    return r;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    q_trim(r);
    return r;
}

// quotient of a by b (b nonzero)
QPoly q_div(QPoly a, const QPoly& b) {
    QPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t k = a.size() - b.size();
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
        q_trim(a);
    }
    return q;
}

struct QXgcd {
    QPoly g, s, t; // s*a + t*b = g, g monic (or zero)
};

QXgcd q_xgcd(QPoly a, QPoly b) {
    QPoly s0 = {Rational(1)}, s1 = {};
    QPoly t0 = {}, t1 = {Rational(1)};
    q_trim(a);
    q_trim(b);
    while (!b.empty()) {
        QPoly q = q_div(a, b);
        QPoly r = q_sub(a, q_mul(q, b));
        a = std::move(b);
        b = std::move(r);
        QPoly s2 = q_sub(s0, q_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        QPoly t2 = q_sub(t0, q_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
        for (auto& c : s0) c /= lc;
        for (auto& c : t0) c /= lc;
    }
    return {std::move(a), std::move(s0), std::move(t0)};
}

QPoly q_dense(const Polynomial& p, std::size_t v) {
    QPoly d(static_cast<std::size_t>(degv(p, v)) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) d[m[v]] = Rational(c);
    q_trim(d);
    return d;
}

Polynomial poly_from_q_cleared(const QPoly& q, const std::string& var, const Integer& scale) {
    // q scaled by `scale` must be integral
    Polynomial x = Polynomial::variable(var);
    Polynomial out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rational c = q[i] * Rational(scale);
        if (c.get_den() != 1) throw verification_error("denominator clearing failed");
        Polynomial::TermMap tm;
        tm.emplace(Monomial({static_cast<std::uint32_t>(i)}), Integer(c.get_num()));
        out = out + Polynomial::from_terms({var}, std::move(tm));
    }
    return out;
}

} // namespace

void BezoutCertificate::verify(const std::vector<Polynomial>& polys) const {
    if (cofactors.size() != polys.size())
        throw verification_error("bezout certificate: cofactor count mismatch");
    Polynomial sum;
    for (std::size_t i = 0; i < polys.size(); ++i) sum = sum + cofactors[i] * polys[i];
    if (!(sum == Polynomial::constant(delta)))
        throw verification_error("bezout certificate: identity does not re-expand to delta");
}

Polynomial gcd_z(const Polynomial& a, const Polynomial& b) {
    auto [A, B] = unify(a, b);
    return gcd_rec(A, B, nullptr);
}

Polynomial gcd_q(const std::vector<Polynomial>& polys) {
    if (polys.empty()) throw precondition_error("gcd_q: empty input");
    auto fam = unify_family(polys);
    bool any = false;
    for (const auto& p : fam) any = any || !p.is_zero();
    if (!any) throw precondition_error("gcd_q: all inputs are zero");
    Polynomial g = Polynomial().with_variables(fam[0].variables());
    for (const auto& p : fam) {
        g = gcd_rec(g, p, nullptr);
        if (g.is_constant() && !g.is_zero()) break;
    }
    if (g.is_constant()) return poly_one(fam[0].variables());
    Polynomial r = g.primitive_part();
    return r.leading_coefficient() < 0 ? -r : r;
}

bool coprime_q(const std::vector<Polynomial>& polys) {
    return gcd_q(polys).degree() == 0;
}

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
    return divide_exact_impl(num, den, nullptr);
}

bool divides_q(const Polynomial& den, const Polynomial& num) {
    if (den.is_zero()) return num.is_zero();
    if (num.is_zero()) return true;
    return divide_exact_impl(num.primitive_part(), den.primitive_part(), nullptr).has_value();
}

Polynomial gcd_mod_p_family(const std::vector<Polynomial>& polys, const Integer& p) {
    if (!is_prime(p)) throw precondition_error("gcd_mod_p_family: modulus is not prime");
    auto fam = unify_family(polys);
    Polynomial g = Polynomial().with_variables(fam.empty() ? std::vector<std::string>{}
                                                           : fam[0].variables());
    for (const auto& q : fam) {
        Polynomial r = reduce_mod_p(q, p);
        if (r.is_zero()) continue;
        g = gcd_rec(g, r, &p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

BezoutCertificate bezout_delta(const std::vector<Polynomial>& polys) {
    if (polys.size() < 2) throw precondition_error("bezout_delta: need at least two polynomials");
    for (const auto& p : polys)
        if (p.is_zero()) throw precondition_error("bezout_delta: zero polynomial input");
    auto var = common_variable(polys, "bezout_delta");
    std::string v = var.value_or("x");

    std::vector<QPoly> dense;
    for (const auto& p : polys) {
        Polynomial t = p.trimmed();
        dense.push_back(t.dimension() == 0 ? QPoly{Rational(t.constant_term())}
                                           : q_dense(t, 0));
    }

    QPoly g = dense[0];
    std::vector<QPoly> cof(polys.size());
    cof[0] = {Rational(1)};
    for (std::size_t i = 1; i < dense.size(); ++i) {
        QXgcd x = q_xgcd(g, dense[i]);
        for (std::size_t j = 0; j < i; ++j) cof[j] = q_mul(cof[j], x.s);
        cof[i] = x.t;
        g = x.g;
    }
    if (g.size() != 1)
        throw precondition_error("bezout_delta: inputs are not coprime over Q");
    // g is monic, i.e. the constant 1: sum cof_i * P_i = 1 already.

    Integer scale = 1;
    for (const auto& c : cof)
        for (const auto& q : c) scale = int_lcm(scale, Integer(q.get_den()));

    BezoutCertificate cert;
    cert.variable = v;
    cert.delta = scale;
    for (const auto& c : cof) cert.cofactors.push_back(poly_from_q_cleared(c, v, scale));
    cert.verify(polys);
    return cert;
}

Integer resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) throw precondition_error("resultant: zero input");
    std::vector<Polynomial> pair = {p, q};
    auto var = common_variable(pair, "resultant");
    if (!var) return 1; // two constants: empty Sylvester matrix
    auto fam = unify_family({p.trimmed().dimension() ? p.trimmed() : p,
                             q.trimmed().dimension() ? q.trimmed() : q});
    DensePoly A = to_dense(fam[0].trimmed().dimension() ? fam[0] : fam[0], 0);
    DensePoly B = to_dense(fam[1], 0);

    Rational acc(1);
    for (;;) {
        long dA = dense_deg(A), dB = dense_deg(B);
        if (dB == 0) {
            acc *= rational_pow(B[0], dA);
            break;
        }
        if (dA < dB) {
            std::swap(A, B);
            if ((dA & 1) && (dB & 1)) acc = -acc;
            continue;
        }
        DensePoly R = dense_prem(A, B);
        if (R.empty()) return 0;
        long dR = dense_deg(R);
        long e = dA - dB + 1;
        Integer c = B.back();
        Integer cont = 0;
        for (const auto& x : R) cont = int_gcd(cont, x);
        for (auto& x : R) x /= cont;
        if ((dA & 1) && (dB & 1)) acc = -acc;
        acc *= rational_pow(cont, dB);
        acc *= rational_pow(c, dA - e * dB - dR);
        A = std::move(B);
        B = std::move(R);
    }
    if (acc.get_den() != 1) throw verification_error("resultant: non-integral accumulator");
    return Integer(acc.get_num());
}

PrimeScanReport coprime_mod_p_scan(const std::vector<Polynomial>& polys, const Integer& bound) {
    if (!coprime_q(polys))
        throw precondition_error(
            "coprime_mod_p_scan: inputs are not coprime over Q (see gcd_q)");
    auto fam = unify_family(polys);
    PrimeScanReport report;
    report.bound = bound;
    if (bound < 2) return report;
    auto primes = primes_up_to(bound.get_ui());

    struct Local {
        std::vector<PrimeScanReport::BadPrime> bad;
        std::vector<Integer> degenerate;
    };
    std::size_t chunks = std::min<std::size_t>(default_chunks(primes.size()), primes.size());
    std::vector<Local> locals(chunks);
    parallel_chunks(primes.size(), chunks, [&](std::size_t ci, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) {
            Integer p(static_cast<unsigned long>(primes[i]));
            bool degenerate = false;
            std::vector<Polynomial> reduced;
            for (const auto& q : fam) {
                Polynomial r = reduce_mod_p(q, p);
                if (r.is_zero()) {
                    degenerate = true;
                    break;
                }
                reduced.push_back(std::move(r));
            }
            if (degenerate) {
                locals[ci].degenerate.push_back(p);
                continue;
            }
            Polynomial g = Polynomial().with_variables(fam[0].variables());
            for (const auto& r : reduced) {
                g = gcd_rec(g, r, &p);
                if (g.is_constant()) break;
            }
            if (g.degree().value_or(0) >= 1) locals[ci].bad.push_back({p, g});
        }
    });
    for (auto& l : locals) {
        report.bad_primes.insert(report.bad_primes.end(), l.bad.begin(), l.bad.end());
        report.degenerate_primes.insert(report.degenerate_primes.end(), l.degenerate.begin(),
                                        l.degenerate.end());
    }
    return report;
}

// Candidate completeness: a prime p can only divide every value of a
// polynomial P with some coefficient not divisible by p if the nonzero
// reduction of P vanishes on all of F_p^r. A nonzero polynomial of total
// degree d over F_p has at most d*p^(r-1) zeros in F_p^r (the counting
// lemma with S = F_p), and d*p^(r-1) < p^r whenever d < p. So any such
// prime satisfies p <= deg P, and all remaining candidates divide every
// coefficient, i.e. divide the gcd of the contents.
std::vector<Integer> fixed_prime_divisors(const std::vector<Polynomial>& polys) {
    if (polys.empty()) throw precondition_error("fixed_prime_divisors: empty input");
    for (const auto& p : polys)
        if (p.is_zero()) throw precondition_error("fixed_prime_divisors: zero polynomial input");
    auto fam = unify_family(polys);
    std::size_t r = fam[0].dimension();

    Integer content_gcd = 0;
    long max_deg = 0;
    for (const auto& p : fam) {
        content_gcd = int_gcd(content_gcd, p.content());
        max_deg = std::max(max_deg, p.degree().value_or(0));
    }
    std::vector<Integer> candidates;
    for (auto q : primes_up_to(static_cast<std::uint64_t>(max_deg)))
        candidates.push_back(Integer(static_cast<unsigned long>(q)));
    if (content_gcd > 1)
        for (const auto& [q, e] : factorize(content_gcd))
            if (std::find(candidates.begin(), candidates.end(), q) == candidates.end())
                candidates.push_back(q);
    std::sort(candidates.begin(), candidates.end());

    std::vector<Integer> out;
    for (const auto& p : candidates) {
        bool fixed = true;
        for (const auto& poly : fam) {
            Polynomial red = reduce_mod_p(poly, p);
            if (red.is_zero()) continue;
            if (poly.degree().value_or(0) < p) {
                fixed = false; // nonzero of degree < p cannot vanish identically
                break;
            }
            // exhaustive check over [0,p)^r
            Box box = Box::cube(0, p - 1, r);
            Integer total = box.point_count();
            for (Integer i = 0; i < total && fixed; ++i) {
                Integer val = red.eval(box.point_at(i)) % p;
                if (val != 0) fixed = false;
            }
            if (!fixed) break;
        }
        if (fixed) out.push_back(p);
    }
    return out;
}

Integer count_common_roots_mod_p(const std::vector<Polynomial>& polys, const Integer& p) {
    if (!is_prime(p)) throw precondition_error("count_common_roots_mod_p: not a prime");
    auto var = common_variable(polys, "count_common_roots_mod_p");
    ModCtx F{p};
    DensePoly g;
    bool all_zero = true;
    for (const auto& q : polys) {
        Polynomial red = reduce_mod_p(q.trimmed(), p);
        if (red.is_zero()) continue;
        all_zero = false;
        DensePoly d = red.trimmed().dimension() == 0
                          ? DensePoly{red.constant_term()}
                          : to_dense(red.trimmed(), 0);
        g = g.empty() ? dense_monic_mod(std::move(d), F) : dense_gcd_mod(std::move(g), std::move(d), F);
        if (dense_deg(g) == 0) return 0;
    }
    if (all_zero) return p; // every residue is a common root
    if (g.empty() || dense_deg(g) == 0) return 0;

    // x^p mod g by square-and-multiply, then gcd(g, x^p - x)
    DensePoly x = dense_rem_mod({Integer(0), Integer(1)}, g, F);
    DensePoly acc = {Integer(1)};
    DensePoly base = x;
    Integer e = p;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = dense_mulrem_mod(acc, base, g, F);
        e >>= 1;
        if (e > 0) base = dense_mulrem_mod(base, base, g, F);
    }
    // acc = x^p mod g; subtract x
    if (acc.size() < 2) acc.resize(2, Integer(0));
    acc[1] = F.red(acc[1] - 1);
    dense_trim(acc);
    DensePoly h = dense_gcd_mod(std::move(g), std::move(acc), F);
    return Integer(std::max<long>(dense_deg(h), 0));
}

} // namespace valgcd
