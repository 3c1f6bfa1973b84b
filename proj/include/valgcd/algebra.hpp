#ifndef VALGCD_ALGEBRA_HPP
#define VALGCD_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "valgcd/poly.hpp"

namespace valgcd {

/// An exact identity sum B_i * P_i = delta with delta a positive integer.
/// Construction re-expands the identity and refuses to exist otherwise.
struct BezoutCertificate {
    std::vector<Polynomial> cofactors;
    Integer delta;
    std::string variable;

    /// Re-expands sum B_i * P_i and compares with delta; throws
    /// verification_error on mismatch.
    void verify(const std::vector<Polynomial>& polys) const;
};

/// Result of scanning primes p <= bound for non-coprime reduction.
struct PrimeScanReport {
    Integer bound;
    struct BadPrime {
        Integer p;
        Polynomial gcd_mod_p; // monic, degree >= 1
    };
    std::vector<BadPrime> bad_primes;
    /// Primes where some input reduces to the zero polynomial. Reported
    /// apart from bad primes: the coprimality conditions concern nonzero
    /// reductions.
    std::vector<Integer> degenerate_primes;
};

/// gcd in Z[x] of two polynomials (true UFD gcd, integer content included),
/// normalized to a positive graded-lex leading coefficient. gcd_z(0,0) = 0.
Polynomial gcd_z(const Polynomial& a, const Polynomial& b);

/// gcd in Q[x] of a family, returned as a primitive polynomial in Z[x] with
/// positive leading coefficient; the constant 1 when the family is coprime.
/// Errors if every input is zero.
Polynomial gcd_q(const std::vector<Polynomial>& polys);

/// True when gcd_q is constant.
bool coprime_q(const std::vector<Polynomial>& polys);

/// Exact quotient num/den over Z, or nullopt when den does not divide num.
std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

/// Whether den divides num in Q[x] (degree-respecting divisibility).
bool divides_q(const Polynomial& den, const Polynomial& num);

/// Monic gcd of the family in F_p[x]; inputs are reduced mod p first and
/// zero reductions are skipped. Returns 0 iff every reduction is zero.
Polynomial gcd_mod_p_family(const std::vector<Polynomial>& polys, const Integer& p);

/// Extended Euclid over Q[x] with denominators cleared. Inputs must be
/// nonzero, univariate in one common variable and coprime over Q.
BezoutCertificate bezout_delta(const std::vector<Polynomial>& polys);

/// Exact resultant of two nonzero univariate polynomials in one common
/// variable (pseudo-remainder recursion with content stripping).
Integer resultant(const Polynomial& p, const Polynomial& q);

/// For every prime <= bound, the gcd of the reduced family in F_p[x].
/// Precondition: the family is coprime over Q.
PrimeScanReport coprime_mod_p_scan(const std::vector<Polynomial>& polys, const Integer& bound);

/// The exact finite set of primes p such that every input vanishes
/// identically as a function on F_p^r.
std::vector<Integer> fixed_prime_divisors(const std::vector<Polynomial>& polys);

/// Number of n in F_p with P_i(n) = 0 mod p for every i: the count of
/// distinct roots of the family gcd, via deg gcd(G, x^p - x). Needs no
/// enumeration, so p may be arbitrarily large. Univariate families only.
Integer count_common_roots_mod_p(const std::vector<Polynomial>& polys, const Integer& p);

} // namespace valgcd

#endif
