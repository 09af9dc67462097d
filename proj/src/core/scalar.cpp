#include "scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace sugeom {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) fail(ErrorKind::Parse, "bad rational '" + text + "'");
  if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) {
  constant.canonicalize();
  c_.push_back(std::move(constant));
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Polynomial Polynomial::t() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) {
  return Polynomial(std::vector<Rational>{a, b});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& q) const {
  Polynomial r = *this;
  for (auto& x : r.c_) x *= q;
  r.trim();
  return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) fail(ErrorKind::Domain, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  for (int k = a.degree(); k >= b.degree(); --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / b.lead();
    quo[k - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= f * b.c_[j];
  }
  q = Polynomial(std::move(quo));
  r = Polynomial(std::move(rem));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lead());
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(long(k));
  return Polynomial(std::move(d));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

// Ascending powers: "2 - 3*t", "-8*t + 6*t^2 - t^3".
std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational mag = abs(c_[k]);
    bool neg = c_[k] < 0;
    std::string body;
    if (k == 0) {
      body = to_string(mag);
    } else {
      std::string mono = k == 1 ? "t" : "t^" + std::to_string(k);
      body = mag == 1 ? mono : to_string(mag) + "*" + mono;
    }
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) fail(ErrorKind::Domain, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  Polynomial q, r;
  Polynomial::divmod(num, g, num_, r);
  Polynomial::divmod(den, g, q, r);
  Rational l = q.lead();
  num_ = num_.scaled(1 / l);
  den_ = q.scaled(1 / l);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_constant() && b.den_.is_constant()) {
    RationalFunction r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::Domain, "division by zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::derivative() const {
  if (den_.is_constant()) return RationalFunction(num_.derivative());
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) fail(ErrorKind::Domain, "pole at t = " + to_string(x));
  return num_.eval(x) / d;
}

double RationalFunction::eval(double x) const {
  double d = den_.eval(x);
  if (d == 0) fail(ErrorKind::Domain, "pole at t = " + std::to_string(x));
  return num_.eval(x) / d;
}

namespace {

// Scale a polynomial to integer coefficients with content 1 and positive
// constant term (or positive lowest nonzero coefficient).  Returns the factor
// f with p = f * result.
Rational primitive_part(const Polynomial& p, Polynomial& out) {
  mpz_class l(1), g(0);
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  for (const auto& c : p.coeffs()) g = gcd(g, mpz_class(c * l));
  Rational f = Rational(g) / Rational(l);
  for (const auto& c : p.coeffs())
    if (c != 0) {
      if (c < 0) f = -f;
      break;
    }
  out = p.scaled(1 / f);
  return f;
}

bool has_several_terms(const Polynomial& p) {
  return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; }) > 1;
}

}  // namespace

namespace {

std::string wrap_sum(const Polynomial& p) {
  return has_several_terms(p) ? "(" + p.str() + ")" : p.str();
}

// Content pulled out of numerator and denominator: "(2 - 3*t)/2",
// "2/(2 - t)", "-1/8*t^3".
std::string render(const RationalFunction& r) {
  Polynomial pn, pd;
  Rational c = primitive_part(r.num(), pn) / primitive_part(r.den(), pd);
  const mpz_class a = c.get_num(), b = c.get_den();
  const bool unit_num = pn.is_constant();
  if (pd.is_constant()) {
    if (unit_num) return to_string(c);
    if (c == 1) return pn.str();
    if (c == -1) return "-" + wrap_sum(pn);
    if (b == 1) return a.get_str() + "*" + wrap_sum(pn);
    if (abs(a) == 1) return (a < 0 ? "-" : "") + wrap_sum(pn) + "/" + b.get_str();
    return to_string(c) + "*" + wrap_sum(pn);
  }
  std::string num;
  if (unit_num)
    num = a.get_str();
  else if (a == 1)
    num = wrap_sum(pn);
  else if (a == -1)
    num = "-" + wrap_sum(pn);
  else
    num = a.get_str() + "*" + wrap_sum(pn);
  std::string den = b == 1 ? wrap_sum(pd) : "(" + b.get_str() + "*" + wrap_sum(pd) + ")";
  return num + "/" + den;
}

bool is_sum_text(const std::string& s) {
  int depth = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] == ' ') return true;
  }
  return false;
}

}  // namespace

std::string RationalFunction::str() const { return render(*this); }

// ---------------------------------------------------------------------------
// Integer factorisation for constant radicals.

namespace {

std::map<long, long> factor_integer(mpz_class n) {
  std::map<long, long> out;
  if (n < 0) n = -n;
  for (long p = 2; p <= 1000000 && mpz_class(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (!n.fits_slong_p() || mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      fail(ErrorKind::Unsupported, "radicand too large to factor: " + n.get_str());
    ++out[n.get_si()];
  }
  return out;
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

RationalFunction base_power(const RadicalBase& b, long n) {
  Polynomial p = b.poly();
  Polynomial acc(Rational(1));
  for (long i = 0; i < std::labs(n); ++i) acc = acc * p;
  if (n >= 0) return RationalFunction(acc);
  return RationalFunction(Polynomial(Rational(1)), acc);
}

// Multiply two signatures; integer overflow of exponents is pushed into
// `factor`.
Signature multiply_signatures(const Signature& a, const Signature& b, RationalFunction& factor) {
  Signature out = a;
  for (const auto& [base, e] : b) {
    Rational& slot = out[base];
    slot += e;
    if (slot >= 1) {
      slot -= 1;
      factor = factor * RationalFunction(base.poly());
    }
    if (slot == 0) out.erase(base);
  }
  return out;
}

// Accumulate  coeff * prod base^{E}  (arbitrary rational E) into (R, sig).
void absorb_power(const RadicalBase& base, const Rational& E, RationalFunction& R, Signature& sig) {
  if (E == 0) return;
  Rational total = E;
  auto it = sig.find(base);
  if (it != sig.end()) {
    total += it->second;
    sig.erase(it);
  }
  Rational fl = floor_of(total);
  Rational frac = total - fl;
  R = R * base_power(base, fl.get_num().get_si());
  if (frac != 0) sig[base] = frac;
}

// Real q-th root convention: negative rational to power P/Q requires odd Q.
// Returns the sign and accumulates prime exponents.
int absorb_constant_power(const Rational& c, const Rational& e, RationalFunction& R, Signature& sig) {
  if (c == 0) fail(ErrorKind::Domain, "zero raised to a fractional power");
  int sign = 1;
  if (c < 0) {
    if (e.get_den() % 2 == 0) fail(ErrorKind::Domain, "even root of a negative constant");
    if (e.get_num() % 2 != 0) sign = -1;
  }
  for (const auto& [p, m] : factor_integer(c.get_num())) absorb_power({p, 0}, e * m, R, sig);
  for (const auto& [p, m] : factor_integer(c.get_den())) absorb_power({p, 0}, -e * m, R, sig);
  return sign;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{mpz_class(1)};
  for (const auto& [p, m] : factor_integer(n)) {
    size_t base = ds.size();
    mpz_class pk(1);
    for (long k = 1; k <= m; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// Split p = c * prod L_i^{k_i} over Q into normalised linear bases.
// Throws Unsupported when an irreducible factor of degree >= 2 remains.
void split_linear(Polynomial p, Rational& c, std::map<RadicalBase, long>& factors, long sign) {
  while (p.degree() >= 1) {
    if (p.coeff(0) == 0) {
      Polynomial q, r;
      Polynomial::divmod(p, Polynomial::t(), q, r);
      p = q;
      factors[{0, 1}] += sign;
      continue;
    }
    Polynomial prim;
    primitive_part(p, prim);
    mpz_class a0 = prim.coeff(0).get_num(), an = prim.lead().get_num();
    bool found = false;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rational root(num * s, den);
          root.canonicalize();
          if (p.eval(root) != 0) continue;
          // t - root = f * (a + b t), with a > 0
          long ra = root.get_num().get_si(), rb = root.get_den().get_si();
          RadicalBase base = ra < 0 ? RadicalBase{-ra, rb} : RadicalBase{ra, -rb};
          Polynomial q, r;
          Polynomial::divmod(p, base.poly(), q, r);
          p = q;
          factors[base] += sign;
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) fail(ErrorKind::Unsupported, "radicand does not split into linear factors over Q");
  }
  if (sign > 0)
    c *= p.coeff(0);
  else
    c /= p.coeff(0);
}

double real_pow(double v, const Rational& e) {
  if (v >= 0) return std::pow(v, e.get_d());
  if (e.get_den() % 2 == 0) fail(ErrorKind::Domain, "even root of a negative value");
  double mag = std::pow(-v, e.get_d());
  return e.get_num() % 2 != 0 ? -mag : mag;
}

// Solve M y = rhs over Q(t) by Gauss-Jordan elimination; M is square and
// nonsingular.
std::vector<RationalFunction> solve_rf(std::vector<std::vector<RationalFunction>> m,
                                       std::vector<RationalFunction> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) fail(ErrorKind::Domain, "division by zero");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    RationalFunction inv = m[col][col].inverse();
    for (size_t j = col; j < n; ++j) m[col][j] = m[col][j] * inv;
    rhs[col] = rhs[col] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RationalFunction f = m[r][col];
      for (size_t j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

std::string RadicalBase::str() const {
  if (is_prime()) return std::to_string(a);
  return "(" + poly().str() + ")";
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& q) {
  if (q != 0) terms_.emplace(Signature{}, RationalFunction(q));
}

Scalar::Scalar(RationalFunction r) {
  if (!r.is_zero()) terms_.emplace(Signature{}, std::move(r));
}

Scalar Scalar::t() { return Scalar(RationalFunction(Polynomial::t())); }

Scalar Scalar::from_terms(std::map<Signature, RationalFunction> terms) {
  Scalar s;
  for (auto& [sig, r] : terms)
    if (!r.is_zero()) s.terms_.emplace(sig, std::move(r));
  return s;
}

bool Scalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_constant();
}

Rational Scalar::as_rational() const {
  if (!is_rational()) fail(ErrorKind::Unsupported, "expected a rational constant, got " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second.constant();
}

bool Scalar::is_t_free() const {
  for (const auto& [sig, r] : terms_) {
    if (!r.is_constant()) return false;
    for (const auto& [b, e] : sig)
      if (!b.is_prime()) return false;
  }
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [sig, rf] : r.terms_) rf = -rf;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  for (const auto& [sig, rf] : b.terms_) {
    auto it = r.terms_.find(sig);
    if (it == r.terms_.end()) {
      r.terms_.emplace(sig, rf);
    } else {
      it->second = it->second + rf;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [sa, ra] : a.terms_)
    for (const auto& [sb, rb] : b.terms_) {
      RationalFunction factor = ra * rb;
      Signature s = multiply_signatures(sa, sb, factor);
      auto it = r.terms_.find(s);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(s), std::move(factor));
      } else {
        it->second = it->second + factor;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::Domain, "division by zero");
  if (terms_.size() == 1) {
    const auto& [sig, r] = *terms_.begin();
    // (R * prod b^e)^{-1} = R^{-1} * prod b^{-1} * prod b^{1-e}
    RationalFunction inv = r.inverse();
    Signature out;
    for (const auto& [b, e] : sig) {
      inv = inv * base_power(b, -1);
      out[b] = 1 - e;
    }
    Scalar s;
    s.terms_.emplace(std::move(out), std::move(inv));
    return s;
  }
  // Enumerate the finite group of signatures generated by this scalar's
  // signatures and solve x * y = 1 there.
  std::vector<Signature> group{Signature{}};
  std::map<Signature, size_t> index{{Signature{}, 0}};
  for (size_t i = 0; i < group.size(); ++i)
    for (const auto& [gen, r] : terms_) {
      RationalFunction dummy(Rational(1));
      Signature s = multiply_signatures(group[i], gen, dummy);
      if (index.emplace(s, group.size()).second) group.push_back(s);
    }
  const size_t n = group.size();
  std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n));
  for (size_t h = 0; h < n; ++h)
    for (const auto& [s, r] : terms_) {
      RationalFunction factor = r;
      Signature prod = multiply_signatures(s, group[h], factor);
      size_t row = index.at(prod);
      m[row][h] = m[row][h] + factor;
    }
  std::vector<RationalFunction> rhs(n);
  rhs[0] = RationalFunction(Rational(1));
  std::vector<RationalFunction> y = solve_rf(std::move(m), std::move(rhs));
  std::map<Signature, RationalFunction> terms;
  for (size_t h = 0; h < n; ++h) terms.emplace(group[h], y[h]);
  return from_terms(std::move(terms));
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar acc(Rational(1)), base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Scalar Scalar::pow(const Rational& e) const {
  if (e.get_den() == 1) return pow(e.get_num().get_si());
  if (is_zero()) {
    if (e > 0) return {};
    fail(ErrorKind::Domain, "zero raised to a negative power");
  }
  if (terms_.size() != 1) fail(ErrorKind::Unsupported, "fractional power of a sum of radicals: " + str());
  const auto& [sig, r] = *terms_.begin();

  Rational c(1);
  std::map<RadicalBase, long> lin;
  split_linear(r.num(), c, lin, +1);
  split_linear(r.den(), c, lin, -1);

  RationalFunction out(Rational(1));
  Signature out_sig;
  int sign = absorb_constant_power(c, e, out, out_sig);
  for (const auto& [b, k] : lin) absorb_power(b, e * k, out, out_sig);
  for (const auto& [b, ex] : sig) absorb_power(b, ex * e, out, out_sig);
  if (sign < 0) out = -out;
  Scalar s;
  s.terms_.emplace(std::move(out_sig), std::move(out));
  return s;
}

Scalar Scalar::diff() const {
  Scalar out;
  for (const auto& [sig, r] : terms_) {
    RationalFunction d = r.derivative();
    for (const auto& [b, e] : sig) {
      if (b.is_prime()) continue;
      // d/dt (a + b t)^e = e * b / (a + b t) * (a + b t)^e
      d = d + r * RationalFunction(Polynomial(e * b.b), b.poly());
    }
    if (!d.is_zero()) out = out + Scalar::from_terms({{sig, d}});
  }
  return out;
}

Scalar Scalar::substitute(const Rational& t0) const {
  Scalar out;
  for (const auto& [sig, r] : terms_) {
    Scalar term(r.eval(t0));
    for (const auto& [b, e] : sig) {
      Rational v = b.poly().eval(t0);
      if (v == 0) {
        term = Scalar();
        break;
      }
      term = term * Scalar(v).pow(e);
    }
    out = out + term;
  }
  return out;
}

double Scalar::eval(const Rational& t0) const {
  double acc = 0;
  for (const auto& [sig, r] : terms_) {
    double v = r.eval(t0).get_d();
    for (const auto& [b, e] : sig) v *= real_pow(b.poly().eval(t0).get_d(), e);
    acc += v;
  }
  return acc;
}

double Scalar::eval(double t0) const {
  double acc = 0;
  for (const auto& [sig, r] : terms_) {
    double v = r.eval(t0);
    for (const auto& [b, e] : sig) v *= real_pow(b.poly().eval(t0), e);
    acc += v;
  }
  return acc;
}

namespace {

std::string coefficient_prefix(const RationalFunction& r) {
  if (r == RationalFunction(Rational(1))) return "";
  if (r == RationalFunction(Rational(-1))) return "-";
  std::string t = render(r);
  if (is_sum_text(t)) t = "(" + t + ")";
  return t + "*";
}

std::string radical_text(const std::string& inner, const Rational& e) {
  bool bare = std::all_of(inner.begin(), inner.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
  return (bare ? inner : "(" + inner + ")") + "^(" + to_string(e) + ")";
}

// One term R * prod b^e.  Besides the canonical spelling, try grouping all
// radicals under a single root (shifting exponents by integers and
// optionally absorbing a rational coefficient) and keep the shortest text.
std::string render_term(const Signature& sig, const RationalFunction& r) {
  if (sig.empty()) return render(r);
  std::string best = coefficient_prefix(r);
  {
    std::string rad;
    for (const auto& [b, e] : sig) rad += (rad.empty() ? "" : "*") + b.str() + "^(" + to_string(e) + ")";
    best += rad;
  }
  mpz_class q(1);
  for (const auto& [b, e] : sig) q = lcm(q, e.get_den());
  std::vector<std::pair<RadicalBase, Rational>> items(sig.begin(), sig.end());
  if (items.size() > 6 || !q.fits_slong_p()) return best;
  const long root = q.get_si();
  for (unsigned mask = 0; mask < (1u << items.size()); ++mask) {
    RationalFunction coeff = r;
    RationalFunction inner(Rational(1));
    mpz_class g = q;
    for (size_t i = 0; i < items.size(); ++i) {
      Rational e = items[i].second;
      if (mask & (1u << i)) {
        e -= 1;
        coeff = coeff * base_power(items[i].first, 1);
      }
      Rational scaled = e * Rational(q);
      g = gcd(g, scaled.get_num());
      inner = inner * base_power(items[i].first, scaled.get_num().get_si());
    }
    // inner^(1/q) with every exponent divisible by g: take the g-th root
    if (g > 1) {
      RationalFunction reduced(Rational(1));
      for (size_t i = 0; i < items.size(); ++i) {
        Rational e = items[i].second - ((mask & (1u << i)) ? 1 : 0);
        Rational ex = e * Rational(q) / Rational(g);
        reduced = reduced * base_power(items[i].first, ex.get_num().get_si());
      }
      inner = reduced;
    }
    const long k = root / g.get_si();
    std::vector<std::string> options = {coefficient_prefix(coeff) + radical_text(render(inner), Rational(1, k))};
    if (coeff.is_constant() && (coeff.constant() > 0 || k % 2 == 1)) {
      Rational c = coeff.constant(), ck(1);
      for (long j = 0; j < k; ++j) ck *= c;
      options.push_back(radical_text(render(inner * RationalFunction(ck)), Rational(1, k)));
    }
    for (const auto& o : options)
      if (o.size() < best.size()) best = o;
  }
  return best;
}

}  // namespace

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [sig, r] : terms_) {
    std::string term = render_term(sig, r);
    if (!sig.empty() || terms_.size() == 1) {
      // fine as is
    } else if (is_sum_text(term)) {
      term = "(" + term + ")";
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace sugeom
