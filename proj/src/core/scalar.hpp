#pragma once

// Exact coefficients for forms.
//
// A Scalar is a finite sum  sum_s R_s(t) * s  where R_s is a rational function
// of the single parameter t with rational coefficients and s is a radical
// signature prod_b b^{e_b} with every e_b in (0,1).  Bases are either primes
// (constant radicals such as 2^(1/3)) or primitive integer linear polynomials
// a + b*t normalised so that a > 0 (or a == 0, b == 1, i.e. plain t).
//
// Distinct signatures are linearly independent over Q(t), so the map
// signature -> R_s is a canonical form: equality and zero tests are exact.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace sugeom {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Dense polynomial in t over Q; coefficients stored low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial t();
  static Polynomial linear(const Rational& a, const Rational& b);  // a + b*t

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& q) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  /// Euclidean division; throws on division by zero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  static Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero
  Polynomial monic() const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Reduced quotient num/den with monic den.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  explicit RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant() const { return num_.coeff(0); }  // valid when is_constant()
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;
  RationalFunction derivative() const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::string str() const;

 private:
  Polynomial num_, den_;
};

/// Radical base: a prime p (b == 0) or a normalised linear polynomial a + b*t.
struct RadicalBase {
  long a = 0;
  long b = 0;
  bool is_prime() const { return b == 0; }
  Polynomial poly() const { return Polynomial::linear(Rational(a), Rational(b)); }
  auto operator<=>(const RadicalBase&) const = default;
  std::string str() const;
};

using Signature = std::map<RadicalBase, Rational>;

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);               // NOLINT(google-explicit-constructor)
  explicit Scalar(RationalFunction r);
  static Scalar t();
  static Scalar from_terms(std::map<Signature, RationalFunction> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational as_rational() const;  // throws unless is_rational()
  bool is_t_free() const;        // no dependence on t (constant radicals allowed)
  bool is_single_term() const { return terms_.size() == 1; }
  const std::map<Signature, RationalFunction>& terms() const { return terms_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(long n) const;
  /// Real power with rational exponent.  Non-integer exponents need a single
  /// signature whose rational part splits into linear factors over Q.
  Scalar pow(const Rational& e) const;
  Scalar diff() const;  // d/dt

  /// Substitute a rational value for t; the result is t-free.
  Scalar substitute(const Rational& t0) const;
  /// IEEE evaluation.  Throws Domain for poles or even roots of negatives.
  double eval(const Rational& t0) const;
  double eval(double t0) const;

  std::string str() const;

 private:
  std::map<Signature, RationalFunction> terms_;
};

std::string to_string(const Scalar& s);

}  // namespace sugeom
