#include "algebra.hpp"

#include <algorithm>
#include <cctype>

namespace sugeom {

LieAlgebra::LieAlgebra(int dimension, std::vector<Form> differentials, std::string label)
    : dim_(dimension), d_(std::move(differentials)), label_(std::move(label)) {
  if (dimension < 1 || dimension > kMaxDimension)
    fail(ErrorKind::Dimension, "algebra dimension " + std::to_string(dimension) + " outside 1..9");
  if (static_cast<int>(d_.size()) > dimension) fail(ErrorKind::Dimension, "more differentials than generators");
  while (static_cast<int>(d_.size()) < dimension) d_.emplace_back(dimension, 2);
  for (auto& f : d_) {
    if (f.dimension() != dimension) fail(ErrorKind::Dimension, "differential lives in the wrong dimension");
    if (f.is_zero()) f = Form(dimension, 2);
    if (f.degree() != 2) fail(ErrorKind::Dimension, "differential of a generator must be a 2-form");
  }
}

LieAlgebra LieAlgebra::abelian(int dimension) { return LieAlgebra(dimension, {}); }

Form LieAlgebra::d(const Form& a) const { return exterior_derivative(d_, a); }

bool LieAlgebra::is_rational() const {
  for (const auto& f : d_)
    if (!f.is_rational()) return false;
  return true;
}

bool LieAlgebra::is_t_free() const {
  for (const auto& f : d_)
    if (!f.is_t_free()) return false;
  return true;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& f : d_)
    if (!f.is_zero()) return false;
  return true;
}

std::string LieAlgebra::compact() const {
  std::string out = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) out += ",";
    const Form& f = d_[i];
    if (f.is_zero()) {
      out += "0";
      continue;
    }
    bool first = true;
    for (const auto& [m, c] : f.coeffs()) {
      if (c != Scalar(1) && c != Scalar(-1)) return {};
      if (c == Scalar(-1))
        out += "-";
      else if (!first)
        out += "+";
      out += m.str().substr(1);
      first = false;
    }
  }
  return out + ")";
}

std::string LieAlgebra::str() const {
  std::string out;
  for (int i = 1; i <= dim_; ++i) out += "de" + std::to_string(i) + " = " + d_[i - 1].str() + "\n";
  return out;
}

LieAlgebra parse_compact(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail(ErrorKind::Parse, "compact notation must be a parenthesised list: '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> entries;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      entries.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  entries.push_back(cur);
  const int n = static_cast<int>(entries.size());
  if (n > kMaxDimension) fail(ErrorKind::Parse, "compact notation is limited to dimension 9");
  std::vector<Form> d;
  for (const auto& entry : entries) {
    Form f(n, 2);
    if (entry == "0") {
      d.push_back(f);
      continue;
    }
    size_t pos = 0;
    while (pos < entry.size()) {
      int sign = 1;
      if (entry[pos] == '+' || entry[pos] == '-') {
        sign = entry[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        fail(ErrorKind::Parse, "malformed token in '" + entry + "'");
      }
      if (pos + 2 > entry.size() || !std::isdigit(static_cast<unsigned char>(entry[pos])) ||
          !std::isdigit(static_cast<unsigned char>(entry[pos + 1])) ||
          (pos + 2 < entry.size() && std::isdigit(static_cast<unsigned char>(entry[pos + 2]))))
        fail(ErrorKind::Parse, "malformed token in '" + entry + "': expected two-digit index pairs");
      int i = entry[pos] - '0', j = entry[pos + 1] - '0';
      if (i < 1 || j < 1 || i > n || j > n)
        fail(ErrorKind::Parse, "index out of range in '" + entry + "' (dimension " + std::to_string(n) + ")");
      if (i == j) fail(ErrorKind::Parse, "repeated index in '" + entry + "'");
      const int idx[2] = {i, j};
      f += Form::monomial(n, idx, Scalar(sign));
      pos += 2;
    }
    d.push_back(f);
  }
  return LieAlgebra(n, std::move(d));
}

// ---------------------------------------------------------------------------

std::string JacobiReport::str() const {
  if (pass) return "jacobi: pass\n";
  std::string out = "jacobi: FAIL\n";
  for (const auto& [i, f] : residuals) out += "  d^2 e" + std::to_string(i) + " = " + f.str() + "\n";
  return out;
}

JacobiReport check_jacobi(const LieAlgebra& algebra) {
  JacobiReport r;
  for (int i = 1; i <= algebra.dimension(); ++i) {
    Form dd = algebra.d(algebra.d_generator(i));
    if (!dd.is_zero()) {
      r.pass = false;
      r.residuals.emplace_back(i, dd);
    }
  }
  return r;
}

Matrix<Scalar> differential_matrix(const LieAlgebra& algebra, int degree) {
  const int n = algebra.dimension();
  auto src = basis_indices(n, degree);
  auto dst = basis_indices(n, degree + 1);
  Matrix<Scalar> m(dst.size(), std::vector<Scalar>(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    Form e(n, degree);
    e.add(src[j], Scalar(1));
    Form de = algebra.d(e);
    for (size_t i = 0; i < dst.size(); ++i) m[i][j] = de.coeff(dst[i]);
  }
  return m;
}

std::string CohomologyReport::str() const {
  std::string out;
  for (const auto& d : degrees) {
    out += "H^" + std::to_string(d.degree) + ": b" + std::to_string(d.degree) + " = " + std::to_string(d.betti);
    if (!d.representatives.empty()) {
      out += "  <";
      for (size_t i = 0; i < d.representatives.size(); ++i)
        out += (i ? ", [" : "[") + d.representatives[i].str() + "]";
      out += ">";
    }
    out += "\n";
  }
  if (euler_characteristic) out += "euler characteristic: " + std::to_string(*euler_characteristic) + "\n";
  return out;
}

CohomologyReport ce_cohomology(const LieAlgebra& algebra, int max_degree) {
  if (!algebra.is_t_free())
    fail(ErrorKind::Precondition, "cohomology needs t-free structure constants");
  const int n = algebra.dimension();
  const int top = std::min(max_degree, n);
  CohomologyReport report;
  Matrix<Scalar> prev;  // d_{k-1}
  for (int k = 0; k <= top; ++k) {
    const auto idx = basis_indices(n, k);
    Matrix<Scalar> dk = k < n ? differential_matrix(algebra, k) : Matrix<Scalar>{};
    Matrix<Scalar> kernel = k < n ? nullspace(dk, idx.size()) : identity_matrix<Scalar>(idx.size());
    SpanBuilder<Scalar> span(idx.size());
    if (k > 0) {
      for (const auto& col : transpose(prev)) span.add(col);
    }
    CohomologyDegree deg{k, 0, {}};
    for (const auto& v : kernel)
      if (span.add(v)) deg.representatives.push_back(from_coordinates(n, k, v));
    deg.betti = deg.representatives.size();
    report.degrees.push_back(std::move(deg));
    prev = std::move(dk);
  }
  if (top == n) {
    long chi = 0;
    for (const auto& d : report.degrees) chi += (d.degree % 2 ? -1 : 1) * static_cast<long>(d.betti);
    report.euler_characteristic = chi;
  }
  return report;
}

LieAlgebra extend_by_line(const LieAlgebra& algebra) {
  const int n = algebra.dimension() + 1;
  if (n > kMaxDimension) fail(ErrorKind::Dimension, "extension would exceed dimension 9");
  std::vector<Form> d;
  for (const auto& f : algebra.differentials()) {
    Form g(n, 2);
    for (const auto& [m, c] : f.coeffs()) g.add(m, c);
    d.push_back(g);
  }
  d.emplace_back(n, 2);
  return LieAlgebra(n, std::move(d), algebra.label().empty() ? "" : algebra.label() + " x R");
}

LieAlgebra central_extension(const LieAlgebra& algebra, const Form& omega) {
  if (omega.dimension() != algebra.dimension() || (omega.degree() != 2 && !omega.is_zero()))
    fail(ErrorKind::Dimension, "curvature form must be a 2-form on the base algebra");
  Form dOmega = algebra.d(omega);
  if (!dOmega.is_zero()) fail(ErrorKind::Precondition, "curvature form is not closed: d Omega = " + dOmega.str());
  LieAlgebra ext = extend_by_line(algebra);
  std::vector<Form> d = ext.differentials();
  Form lifted(ext.dimension(), 2);
  for (const auto& [m, c] : omega.coeffs()) lifted.add(m, c);
  d.back() = lifted;
  return LieAlgebra(ext.dimension(), std::move(d));
}

bool is_exact(const LieAlgebra& algebra, const Form& form) {
  if (form.is_zero()) return true;
  if (form.degree() == 0) return false;
  Matrix<Scalar> dm = differential_matrix(algebra, form.degree() - 1);
  SpanBuilder<Scalar> span(dm.size());
  for (const auto& col : transpose(dm)) span.add(col);
  return span.contains(coordinates(form));
}

Form rewrite_in_basis(const Form& a, const Matrix<Scalar>& m_inverse) {
  // e^j = sum_k (M^-1)_jk f^k : a coframe map with matrix M^-1.
  return CoframeMap(m_inverse).apply(a);
}

std::string BasisChangeReport::str() const {
  std::string out = pass ? "basis change: pass\n" : "basis change: FAIL\n";
  for (size_t i = 0; i < computed.size(); ++i) {
    out += "  df" + std::to_string(i + 1) + " = " + computed[i].str();
    if (computed[i] != target[i]) out += "   (target " + target[i].str() + ")";
    out += "\n";
  }
  if (!pass && diagonal_scaling) {
    out += "  hint: matches the target up to diagonal scaling (";
    for (size_t i = 0; i < diagonal_scaling->size(); ++i)
      out += (i ? ", " : "") + (*diagonal_scaling)[i].str();
    out += ")\n";
  }
  return out;
}

BasisChangeReport verify_basis_change(const LieAlgebra& algebra, const Matrix<Scalar>& m,
                                      const LieAlgebra& target) {
  const int n = algebra.dimension();
  if (static_cast<int>(m.size()) != n || target.dimension() != n)
    fail(ErrorKind::Dimension, "basis change must be square of the algebra's dimension");
  auto inv = inverse(m);
  if (!inv) fail(ErrorKind::Precondition, "basis change matrix is singular");
  BasisChangeReport r;
  r.pass = true;
  for (int i = 0; i < n; ++i) {
    Form df(n, 2);
    for (int j = 0; j < n; ++j)
      if (!m[i][j].is_zero()) df += m[i][j] * algebra.d_generator(j + 1);
    Form in_f = rewrite_in_basis(df, *inv);
    r.computed.push_back(in_f);
    r.target.push_back(target.d_generator(i + 1));
    if (in_f != target.d_generator(i + 1)) r.pass = false;
  }
  // diagonal scaling hint: computed_i = s_i * target_i with s_i a scalar
  std::vector<Scalar> scale;
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    const Form& c = r.computed[i];
    const Form& t = r.target[i];
    if (c.is_zero() && t.is_zero()) {
      scale.emplace_back(1);
      continue;
    }
    if (c.is_zero() || t.is_zero()) {
      ok = false;
      break;
    }
    const auto& [m0, t0] = *t.coeffs().begin();
    Scalar s = c.coeff(m0) / t0;
    ok = (s * t == c);
    scale.push_back(s);
  }
  if (ok) r.diagonal_scaling = scale;
  return r;
}

}  // namespace sugeom
