#pragma once

#include <itop/ints.hpp>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace itop {

/// Dense univariate polynomial with exact integer coefficients.
/// coeffs()[k] is the coefficient of x^k. Trailing zero coefficients are
/// always stripped, so the zero polynomial has an empty coefficient vector
/// and two polynomials are equal iff their coefficient vectors are.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  static IntPolynomial one();
  static IntPolynomial x_power(std::size_t k);
  /// (1 - x)^k
  static IntPolynomial one_minus_x_pow(std::size_t k);

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  Int coeff(std::size_t k) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial scaled(const Int& s) const;
  bool operator==(const IntPolynomial& o) const = default;

  /// Dense rendering with explicit exponents, e.g. "1x^0+3x^1+3x^2".
  /// Zero coefficients below the degree are kept ("1x^0+0x^1-1x^2");
  /// the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  std::vector<Int> c_;
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Power series truncated at a fixed order, with exact rational coefficients.
/// coeff(k) for k = 0..order() are stored; arithmetic between series of
/// different truncation orders is refused (throws std::invalid_argument)
/// rather than silently re-truncated.
class PowerSeriesTrunc {
 public:
  explicit PowerSeriesTrunc(std::size_t order);
  PowerSeriesTrunc(std::size_t order, std::vector<Rat> coeffs);

  static PowerSeriesTrunc from_poly(const IntPolynomial& p, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const;

  PowerSeriesTrunc operator+(const PowerSeriesTrunc& o) const;
  PowerSeriesTrunc operator-(const PowerSeriesTrunc& o) const;
  PowerSeriesTrunc operator*(const PowerSeriesTrunc& o) const;
  bool operator==(const PowerSeriesTrunc& o) const = default;

  /// True when every stored coefficient is an integer.
  bool is_integral() const;
  /// Requires is_integral(); the truncated coefficients as a polynomial
  /// (trailing zeros stripped).
  IntPolynomial to_int_poly() const;

  std::string to_string() const;

 private:
  std::vector<Rat> c_;  // size order+1
  void check_same_order(const PowerSeriesTrunc& o) const;
};

std::ostream& operator<<(std::ostream& os, const PowerSeriesTrunc& s);

/// p(x) / (1-x)^n truncated at `order`, computed exactly via the binomial
/// expansion 1/(1-x)^n = sum_s C(s+n-1, n-1) x^s.
PowerSeriesTrunc series_from_poly_over_power(const IntPolynomial& p,
                                             std::size_t n, std::size_t order);

/// Laurent polynomial in two variables v, z with exact integer coefficients
/// and possibly negative exponents. Terms are kept in a deterministic order:
/// z exponent descending, then v exponent ascending.
class LaurentPoly2 {
 public:
  struct Term {
    long v;
    long z;
    Int c;
    bool operator==(const Term& o) const = default;
  };

  LaurentPoly2() = default;
  static LaurentPoly2 one();
  static LaurentPoly2 monomial(const Int& c, long vexp, long zexp);
  static LaurentPoly2 from_terms(const std::vector<Term>& terms);

  bool is_zero() const { return t_.empty(); }
  std::vector<Term> terms() const;
  Int coeff(long vexp, long zexp) const;

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  LaurentPoly2 pow(unsigned long e) const;
  bool operator==(const LaurentPoly2& o) const = default;

  /// The coefficient of z^zexp as a polynomial in v alone (all returned
  /// terms have z exponent 0).
  LaurentPoly2 coeff_of_z(long zexp) const;
  /// Largest z exponent with a nonzero coefficient; nullopt when zero.
  std::optional<long> max_z_degree() const;
  /// Smallest z exponent with a nonzero coefficient; nullopt when zero.
  std::optional<long> min_z_degree() const;

  /// Rendering such as "1v^3z^3+3v^5z+2v^7z^-1"; exponent 1 is printed bare
  /// ("v", "z"), exponent 0 omits the variable, coefficients always printed.
  std::string to_string() const;

 private:
  struct KeyCmp {
    // z descending, then v ascending
    bool operator()(const std::pair<long, long>& a,
                    const std::pair<long, long>& b) const {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    }
  };
  std::map<std::pair<long, long>, Int, KeyCmp> t_;  // key = (z, v)
  void add_term(long vexp, long zexp, const Int& c);
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

}  // namespace itop
