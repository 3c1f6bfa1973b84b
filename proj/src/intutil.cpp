#include "valgcd/intutil.hpp"

#include <algorithm>
#include <stdexcept>

#include "valgcd/errors.hpp"

namespace valgcd {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs; the first twelve primes
// as bases are known exact below 3.3e24.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's cycle-finding variant of Pollard rho. Deterministic: the
// polynomial offset c is stepped 1, 2, 3, ... until a factor splits.
Integer pollard_brent(const Integer& n) {
    for (Integer c = 1;; ++c) {
        Integer y = 2, r = 1, q = 1, g = 1, x, ys;
        const Integer m = 128;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer lim = std::min(m, Integer(r - k));
                for (Integer i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = int_gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = int_gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime(const Integer& n) {
    if (n <= 0) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
    return r > 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> sieve(bound + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= bound; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (sieve[i]) primes.push_back(i);
    return primes;
}

std::map<Integer, unsigned> factorize(const Integer& n) {
    if (n <= 0) throw precondition_error("factorize requires a positive integer");
    std::map<Integer, unsigned> out;
    Integer rest = n;
    for (std::uint64_t p = 2; p <= 1000000 && rest > 1; p = (p == 2 ? 3 : p + 2)) {
        if (p * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++out[Integer(static_cast<unsigned long>(p))];
            rest /= static_cast<unsigned long>(p);
        }
    }
    if (rest > 1) factor_rec(rest, out);
    return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw precondition_error("valuation of zero is undefined");
    unsigned v = 0;
    Integer m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw precondition_error("crt: residue/modulus lists must be nonempty and equal length");
    Integer n = residues[0] % moduli[0];
    if (n < 0) n += moduli[0];
    Integer mod = moduli[0];
    for (std::size_t i = 1; i < residues.size(); ++i) {
        Integer minv;
        if (mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), moduli[i].get_mpz_t()) == 0)
            throw precondition_error("crt: moduli are not pairwise coprime");
        Integer t = ((residues[i] - n) % moduli[i]) * minv % moduli[i];
        if (t < 0) t += moduli[i];
        n += mod * t;
        mod *= moduli[i];
    }
    return n;
}

std::string decimal_string(const Rational& q, int digits) {
    Integer num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    // scale, then round half away from zero
    Integer scaled = num * int_pow(10, digits);
    Integer quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    if (rem * 2 >= den) ++quot;
    std::string s = quot.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (neg && quot != 0) s.insert(0, "-");
    return s;
}

} // namespace valgcd
