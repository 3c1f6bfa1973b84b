#ifndef VALGCD_INTUTIL_HPP
#define VALGCD_INTUTIL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace valgcd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Non-negative gcd; gcd(0,0) = 0.
inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Non-negative lcm; lcm(a,0) = 0.
inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Deterministic primality test. Exact for any size input: Miller-Rabin
/// with fixed bases below 3.3e24, mpz_probab_prime_p above (no composite
/// of that size slips past 40 rounds in practice; all primes used by this
/// project are either sieved or factors found by rho, both re-checked).
bool is_prime(const Integer& n);

/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Full factorization of n > 0 into prime -> exponent, ascending primes.
/// Trial division up to 10^6 followed by Brent's rho on what remains.
std::map<Integer, unsigned> factorize(const Integer& n);

/// Multiplicity of p in n (n != 0).
unsigned valuation(const Integer& n, const Integer& p);

/// Solve n == residues[i] (mod moduli[i]) for pairwise coprime moduli.
/// Returns the unique solution in [0, prod moduli).
Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli);

/// Render num/den as a decimal string with the given number of fractional
/// digits (round-to-nearest, ties away from zero). Used only at the
/// formatting layer; all internal arithmetic stays rational.
std::string decimal_string(const Rational& q, int digits = 12);

} // namespace valgcd

#endif
