#ifndef VALGCD_POLY_HPP
#define VALGCD_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valgcd/intutil.hpp"

namespace valgcd {

/// Exponent vector of a term, one entry per ambient variable.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    long total_degree() const {
        long d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
        return r;
    }

    /// Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
        return r;
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  private:
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order, descending, so that map iteration starts at
/// the leading term.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Integer point in Z^r; coordinate i matches variable i of the ambient list.
using Point = std::vector<Integer>;

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. The variable list is sorted by name and shared by all
/// monomials; the term map never stores a zero coefficient, which makes
/// the representation canonical (graded-lex term order).
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Integer, GrlexGreater>;

    Polynomial() = default;

    static Polynomial constant(Integer c);
    static Polynomial variable(const std::string& name);
    /// Builds from raw data; drops zero coefficients. Variable list must be
    /// sorted and duplicate-free.
    static Polynomial from_terms(std::vector<std::string> vars, TermMap terms);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t dimension() const { return vars_.size(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; nullopt is the minus-infinity marker for the zero
    /// polynomial.
    std::optional<long> degree() const;
    /// Degree in one variable; nullopt for the zero polynomial.
    std::optional<long> degree_in(std::size_t var) const;

    const Integer& leading_coefficient() const;
    const Monomial& leading_monomial() const;
    Integer constant_term() const;

    /// Non-negative gcd of all coefficients; 0 for the zero polynomial.
    Integer content() const;
    /// P divided by its content (sign preserved); 0 for the zero polynomial.
    Polynomial primitive_part() const;

    /// Re-expresses the polynomial over a superset of its variables.
    Polynomial with_variables(const std::vector<std::string>& superset) const;
    /// Drops ambient variables that occur in no term.
    Polynomial trimmed() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Integer& c) const;
    Polynomial pow(unsigned e) const;

    /// Semantic equality: same polynomial after unifying variable lists.
    bool operator==(const Polynomial& rhs) const;

    /// Exact value at an integer point (dimension must match).
    Integer eval(const Point& p) const;

    /// Coefficient of var^k, as a polynomial with the var-exponent zeroed out
    /// (same ambient variables).
    Polynomial coefficient_of(std::size_t var, std::uint32_t k) const;
    /// Coefficients in one variable, ascending degree 0..deg.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients_in(std::size_t var,
                                           const std::vector<Polynomial>& coeffs);

    /// Canonical rendering, graded-lex descending, explicit '*'.
    std::string to_string() const;

    /// Merged sorted variable list of two polynomials.
    static std::vector<std::string> merged_variables(const Polynomial& a, const Polynomial& b);

  private:
    void insert_term(const Monomial& m, const Integer& c);

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Integer& c, const Polynomial& p) { return p * c; }

/// Lifts both polynomials to their merged variable list.
std::pair<Polynomial, Polynomial> unify(const Polynomial& a, const Polynomial& b);
/// Lifts a whole family to a common variable list (sorted union).
std::vector<Polynomial> unify_family(const std::vector<Polynomial>& polys);

/// Substitutes images[i] for variable i; all images must share one ambient
/// variable list, which becomes the result's.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images);

/// x |-> t*a, output univariate in `tvar`.
Polynomial substitute_line(const Polynomial& p, const Point& a, const std::string& tvar = "t");
/// x |-> u*n + t*a, output in the two variables {tvar, uvar}.
Polynomial substitute_affine(const Polynomial& p, const Point& n, const Point& a,
                             const std::string& uvar = "u", const std::string& tvar = "t");
/// x |-> x + c.
Polynomial substitute_translate(const Polynomial& p, const Point& c);
/// Fixes a subset of variables to integer values; they leave the ambient list.
Polynomial substitute_partial(const Polynomial& p, const std::map<std::string, Integer>& values);

/// Coefficient-wise reduction to canonical representatives in [0, p);
/// requires p prime. May return the zero polynomial.
Polynomial reduce_mod_p(const Polynomial& p, const Integer& prime);

/// (content, primitive part); content(0) = (0, 0) by convention.
std::pair<Integer, Polynomial> content_and_primitive(const Polynomial& p);

/// Axis-aligned integer box, inclusive bounds per coordinate.
struct Box {
    std::vector<std::pair<Integer, Integer>> ranges;

    std::size_t dimension() const { return ranges.size(); }
    Integer point_count() const;
    /// Row-major decode: index 0 is the all-lower-bounds corner; the last
    /// coordinate varies fastest.
    Point point_at(const Integer& index) const;
    /// Uniform box [lo, hi]^r.
    static Box cube(const Integer& lo, const Integer& hi, std::size_t r);
};

} // namespace valgcd

#endif
