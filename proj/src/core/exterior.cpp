#include "exterior.hpp"

#include <algorithm>

namespace sugeom {

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 16; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string MultiIndex::str() const {
  if (mask_ == 0) return "1";
  std::string s = "e";
  for (int i : indices()) s += std::to_string(i);
  return s;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  unsigned a = mask_, b = o.mask_;
  while (a && b) {
    unsigned la = a & -a, lb = b & -b;
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return !a && b;
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  unsigned bm = b.mask();
  while (bm) {
    unsigned low = bm & -bm;
    inversions += __builtin_popcount(a.mask() & ~((low << 1) - 1));
    bm ^= low;
  }
  return inversions % 2 ? -1 : 1;
}

// ---------------------------------------------------------------------------

Form::Form(int dimension, int degree) : dim_(dimension), deg_(degree) {
  if (dimension < 0 || dimension > kMaxDimension)
    fail(ErrorKind::Dimension, "dimension " + std::to_string(dimension) + " outside 0..9");
  if (degree < 0 || degree > dimension)
    fail(ErrorKind::Dimension, "degree " + std::to_string(degree) + " invalid in dimension " +
                                   std::to_string(dimension));
}

Form Form::generator(int dimension, int i) {
  if (i < 1 || i > dimension)
    fail(ErrorKind::Dimension, "generator e" + std::to_string(i) + " outside dimension " + std::to_string(dimension));
  Form f(dimension, 1);
  f.coeffs_.emplace(MultiIndex::single(i), Scalar(1));
  return f;
}

Form Form::constant(int dimension, const Scalar& c) {
  Form f(dimension, 0);
  f.add(MultiIndex(), c);
  return f;
}

Form Form::monomial(int dimension, std::span<const int> indices, const Scalar& c) {
  Form f(dimension, static_cast<int>(indices.size()));
  MultiIndex acc;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > dimension)
      fail(ErrorKind::Dimension, "generator e" + std::to_string(i) + " outside dimension " + std::to_string(dimension));
    MultiIndex single = MultiIndex::single(i);
    int s = wedge_sign(acc, single);
    if (s == 0) return f;
    sign *= s;
    acc = MultiIndex(acc.mask() | single.mask());
  }
  f.add(acc, sign > 0 ? c : -c);
  return f;
}

Scalar Form::coeff(MultiIndex m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void Form::set(MultiIndex m, const Scalar& c) {
  if (c.is_zero())
    coeffs_.erase(m);
  else
    coeffs_[m] = c;
}

void Form::add(MultiIndex m, const Scalar& c) {
  if (c.is_zero()) return;
  if (m.degree() != deg_) fail(ErrorKind::Dimension, "term of wrong degree");
  auto it = coeffs_.find(m);
  if (it == coeffs_.end()) {
    coeffs_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool Form::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_rational(); });
}

bool Form::is_t_free() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_t_free(); });
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [m, c] : r.coeffs_) c = -c;
  return r;
}

namespace {
void check_same_shape(const Form& a, const Form& b) {
  if (a.dimension() != b.dimension())
    fail(ErrorKind::Dimension, "dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                                   std::to_string(b.dimension()));
  if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    fail(ErrorKind::Dimension, "degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                   std::to_string(b.degree()));
}
}  // namespace

Form operator+(const Form& a, const Form& b) {
  check_same_shape(a, b);
  if (a.is_zero() && a.deg_ != b.deg_) return b;
  Form r = a;
  for (const auto& [m, c] : b.coeffs_) r.add(m, c);
  return r;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const Scalar& c, const Form& a) {
  Form r(a.dim_, a.deg_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.coeffs_) r.add(m, c * x);
  return r;
}

Scalar Form::evaluate(std::span<const int> frame_indices) const {
  if (static_cast<int>(frame_indices.size()) != deg_) fail(ErrorKind::Dimension, "wrong number of vectors");
  Form probe = monomial(dim_, frame_indices);
  if (probe.is_zero()) return Scalar();
  const auto& [m, sign] = *probe.coeffs_.begin();
  return sign * coeff(m);
}

namespace {

// A top-level " + " or " - " makes a coefficient need parentheses.
bool is_sum(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ' ' && depth == 0) return true;
  }
  return false;
}

}  // namespace

std::string Form::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : coeffs_) {
    std::string cs = c.str();
    bool neg = false;
    bool compound = is_sum(cs);
    if (!compound && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body;
    if (m.mask() == 0)
      body = compound ? "(" + cs + ")" : cs;
    else if (cs == "1")
      body = m.str();
    else
      body = (compound ? "(" + cs + ")" : cs) + " " + m.str();
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

// ---------------------------------------------------------------------------

Form wedge(const Form& a, const Form& b) {
  if (a.dimension() != b.dimension())
    fail(ErrorKind::Dimension, "wedge of forms in dimensions " + std::to_string(a.dimension()) + " and " +
                                   std::to_string(b.dimension()));
  const int deg = a.degree() + b.degree();
  if (deg > a.dimension()) return Form(a.dimension(), 0);
  Form r(a.dimension(), deg);
  for (const auto& [ma, ca] : a.coeffs())
    for (const auto& [mb, cb] : b.coeffs()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      r.add(MultiIndex(ma.mask() | mb.mask()), s > 0 ? c : -c);
    }
  return r;
}

Form power(const Form& a, int k) {
  Form acc = Form::constant(a.dimension(), Scalar(1));
  for (int i = 0; i < k; ++i) acc = wedge(acc, a);
  return acc;
}

Form contract(std::span<const Scalar> x, const Form& a) {
  if (a.degree() == 0) fail(ErrorKind::Dimension, "contraction of a 0-form");
  if (static_cast<int>(x.size()) != a.dimension()) fail(ErrorKind::Dimension, "vector of wrong length");
  Form r(a.dimension(), a.degree() - 1);
  for (const auto& [m, c] : a.coeffs()) {
    int pos = 0;
    for (int i : m.indices()) {
      const Scalar& xi = x[i - 1];
      if (!xi.is_zero()) {
        MultiIndex rest(std::uint16_t(m.mask() & ~MultiIndex::single(i).mask()));
        Scalar v = xi * c;
        r.add(rest, pos % 2 ? -v : v);
      }
      ++pos;
    }
  }
  return r;
}

Form contract_frame(int i, const Form& a) {
  std::vector<Scalar> x(a.dimension());
  x.at(i - 1) = Scalar(1);
  return contract(x, a);
}

Form partial_t(const Form& a) {
  Form r(a.dimension(), a.degree());
  for (const auto& [m, c] : a.coeffs()) r.add(m, c.diff());
  return r;
}

Form exterior_derivative(std::span<const Form> dgen, const Form& a) {
  const int n = a.dimension();
  if (static_cast<int>(dgen.size()) != n)
    fail(ErrorKind::Dimension, "form of dimension " + std::to_string(n) + " differentiated in a " +
                                   std::to_string(dgen.size()) + "-dimensional algebra");
  if (a.degree() + 1 > n) return Form(n, 0);
  Form r(n, a.degree() + 1);
  for (const auto& [m, c] : a.coeffs()) {
    MultiIndex prefix;
    int pos = 0;
    for (int i : m.indices()) {
      const std::uint16_t bit = MultiIndex::single(i).mask();
      MultiIndex suffix(std::uint16_t(m.mask() & ~(prefix.mask() | bit)));
      for (const auto& [md, cd] : dgen[i - 1].coeffs()) {
        int s1 = wedge_sign(prefix, md);
        if (s1 == 0) continue;
        MultiIndex mid(std::uint16_t(prefix.mask() | md.mask()));
        int s2 = wedge_sign(mid, suffix);
        if (s2 == 0) continue;
        int sign = s1 * s2 * (pos % 2 ? -1 : 1);
        Scalar v = c * cd;
        r.add(MultiIndex(std::uint16_t(mid.mask() | suffix.mask())), sign > 0 ? v : -v);
      }
      prefix = MultiIndex(std::uint16_t(prefix.mask() | bit));
      ++pos;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

CoframeMap::CoframeMap(Matrix<Scalar> m) : m_(std::move(m)) {
  for (const auto& row : m_)
    if (row.size() != m_.size()) fail(ErrorKind::Dimension, "coframe map must be square");
}

CoframeMap CoframeMap::identity(int n) { return CoframeMap(identity_matrix<Scalar>(n)); }

Form CoframeMap::image_of_generator(int i) const {
  const int n = dimension();
  Form f(n, 1);
  for (int j = 1; j <= n; ++j) f.add(MultiIndex::single(j), at(i, j));
  return f;
}

Form CoframeMap::apply(const Form& a) const {
  if (a.dimension() != dimension()) fail(ErrorKind::Dimension, "coframe map dimension mismatch");
  std::vector<Form> images;
  for (int i = 1; i <= dimension(); ++i) images.push_back(image_of_generator(i));
  Form r(a.dimension(), a.degree());
  for (const auto& [m, c] : a.coeffs()) {
    Form acc = Form::constant(a.dimension(), c);
    for (int i : m.indices()) acc = wedge(acc, images[i - 1]);
    r += acc;
  }
  return r;
}

CoframeMap CoframeMap::compose(const CoframeMap& o) const {
  // (J o K) e^i = J(K e^i) = sum_j K_ij J e^j = sum_j K_ij J_jk e^k
  return CoframeMap(multiply(o.m_, m_));
}

bool CoframeMap::squares_to_minus_identity() const {
  Matrix<Scalar> sq = multiply(m_, m_);
  for (size_t i = 0; i < sq.size(); ++i)
    for (size_t j = 0; j < sq.size(); ++j)
      if (sq[i][j] != Scalar(i == j ? -1 : 0)) return false;
  return true;
}

bool CoframeMap::is_orthogonal() const {
  Matrix<Scalar> p = multiply(m_, transpose(m_));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (p[i][j] != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

std::string CoframeMap::str() const {
  std::string out;
  for (int i = 1; i <= dimension(); ++i) {
    if (i > 1) out += ", ";
    out += "e" + std::to_string(i) + " -> " + image_of_generator(i).str();
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<MultiIndex> basis_indices(int dimension, int degree) {
  std::vector<MultiIndex> out;
  for (unsigned m = 0; m < (1u << dimension); ++m)
    if (__builtin_popcount(m) == degree) out.emplace_back(std::uint16_t(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Scalar> coordinates(const Form& a) {
  std::vector<Scalar> v;
  for (const auto& m : basis_indices(a.dimension(), a.degree())) v.push_back(a.coeff(m));
  return v;
}

Form from_coordinates(int dimension, int degree, const std::vector<Scalar>& v) {
  Form f(dimension, degree);
  auto idx = basis_indices(dimension, degree);
  for (size_t i = 0; i < idx.size(); ++i) f.add(idx[i], v[i]);
  return f;
}

namespace {

SpanResult greedy_span(const std::vector<std::vector<Scalar>>& items) {
  SpanResult r;
  if (items.empty()) return r;
  SpanBuilder<Scalar> span(items[0].size());
  for (size_t i = 0; i < items.size(); ++i)
    if (span.add(items[i])) r.basis_indices.push_back(i);
  r.rank = span.dimension();
  return r;
}

}  // namespace

SpanResult span_rank(const std::vector<std::vector<Scalar>>& items, const std::optional<Rational>& t0) {
  for (const auto& v : items)
    if (v.size() != items[0].size()) fail(ErrorKind::Dimension, "span of items with mixed shapes");
  bool parametric = false;
  for (const auto& v : items)
    for (const auto& x : v)
      if (!x.is_t_free()) parametric = true;
  if (!parametric) return greedy_span(items);
  if (!t0) fail(ErrorKind::Precondition, "parametric span needs an evaluation point t0");

  auto at = [&](const Rational& p) {
    std::vector<std::vector<Scalar>> sub;
    for (const auto& v : items) {
      std::vector<Scalar> w;
      for (const auto& x : v) w.push_back(x.substitute(p));
      sub.push_back(std::move(w));
    }
    return greedy_span(sub);
  };
  SpanResult first = at(*t0);
  first.parametric = true;
  first.ranks_at.emplace_back(*t0, first.rank);
  // second point: first candidate where every coefficient is defined
  for (const Rational& delta : {Rational(1, 7), Rational(-3, 11), Rational(5, 13), Rational(-17, 19)}) {
    try {
      SpanResult second = at(*t0 + delta);
      first.ranks_at.emplace_back(*t0 + delta, second.rank);
      break;
    } catch (const Error&) {
    }
  }
  return first;
}

SpanResult span_rank(const std::vector<Form>& items, const std::optional<Rational>& t0) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : items) {
    if (f.dimension() != items[0].dimension() || f.degree() != items[0].degree())
      fail(ErrorKind::Dimension, "span of forms with mixed shapes");
    rows.push_back(coordinates(f));
  }
  return span_rank(rows, t0);
}

}  // namespace sugeom
