#include "connection.hpp"

#include <numeric>

namespace sugeom {

namespace {

Christoffel zero_gamma(int n) {
  return Christoffel(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
}

// c[a][b][d] = g([e_a, e_b], e_d) = -de^d(e_a, e_b)
Christoffel brackets(const LieAlgebra& g) {
  const int n = g.dimension();
  Christoffel c = zero_gamma(n);
  for (int d = 0; d < n; ++d)
    for (const auto& [m, v] : g.d_generator(d + 1).coeffs()) {
      auto idx = m.indices();
      int a = idx[0] - 1, b = idx[1] - 1;
      c[a][b][d] = -v;
      c[b][a][d] = v;
    }
  return c;
}

MultiIndex pair_index(int a, int b) { return MultiIndex(static_cast<std::uint16_t>((1u << (a - 1)) | (1u << (b - 1)))); }

ConnectionSheet assemble(int n, Christoffel gamma, const Form& T) {
  ConnectionSheet c;
  c.n = n;
  c.gamma = std::move(gamma);
  c.torsion = T;
  c.omega.assign(n, std::vector<Form>(n, Form(n, 1)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!c.gamma[i][j][k].is_zero()) c.omega[i][j].add(MultiIndex::single(k + 1), c.gamma[i][j][k]);
  c.tau.assign(n, Form(n, 2));
  for (const auto& [m, v] : T.coeffs()) {
    // T = sum_{a<b<c} T_abc e^abc; tau^a gets T_abc e^bc, etc.
    auto idx = m.indices();
    int a = idx[0], b = idx[1], d = idx[2];
    c.tau[a - 1].add(pair_index(b, d), v);
    c.tau[b - 1].add(pair_index(a, d), -v);
    c.tau[d - 1].add(pair_index(a, b), v);
  }
  return c;
}

void require_frame(const MetricFrame& m) {
  if (m.J.dimension() != m.algebra.dimension()) fail(ErrorKind::Precondition, "complex structure J missing");
  if (!m.J.is_orthogonal()) fail(ErrorKind::Precondition, "J is not compatible with the metric sum e^i (x) e^i");
}

}  // namespace

Scalar TorsionResult::component(int i, int j, int k) const {
  const int idx[3] = {i, j, k};
  return T.evaluate(idx);
}

TorsionResult torsion_form(const MetricFrame& m, const Form& F) {
  require_frame(m);
  if (m.J.apply(F) != F) fail(ErrorKind::Precondition, "J F != F");
  TorsionResult r;
  r.T = m.J.apply(m.algebra.d(F));
  const int n = m.algebra.dimension();
  r.tau = assemble(n, zero_gamma(n), r.T).tau;
  return r;
}

ConnectionSheet levi_civita(const MetricFrame& m) {
  const int n = m.algebra.dimension();
  Christoffel c = brackets(m.algebra);
  Christoffel gamma = zero_gamma(n);
  const Scalar half(Rational(1, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) gamma[i][j][k] = half * (c[k][j][i] - c[j][i][k] + c[i][k][j]);
  return assemble(n, std::move(gamma), Form(n, 3));
}

ConnectionSheet bismut_connection(const MetricFrame& m, const Form& F) {
  require_frame(m);
  if (hermitian_metric(F, m.J) != identity_matrix<Scalar>(m.algebra.dimension()))
    fail(ErrorKind::Precondition, "F(X, JY) is not the frame metric");
  TorsionResult t = torsion_form(m, F);
  ConnectionSheet lc = levi_civita(m);
  const int n = lc.n;
  const Scalar half(Rational(1, 2));
  Christoffel gamma = lc.gamma;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar tk = t.component(k + 1, j + 1, i + 1);
        if (!tk.is_zero()) gamma[i][j][k] += half * tk;
      }
  return assemble(n, std::move(gamma), t.T);
}

ConnectionSheet solve_first_structure_equation(const LieAlgebra& g, const Form& T) {
  const int n = g.dimension();
  // unknowns x(a, b, k) = G^a_bk for a < b
  auto var = [n](int a, int b, int k) { return ((a * (2 * n - a - 1)) / 2 + (b - a - 1)) * n + k; };
  const int unknowns = n * (n - 1) / 2 * n;
  ConnectionSheet shape = assemble(n, zero_gamma(n), T);
  Matrix<Scalar> sys;
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        // coefficient of e^pq:  G^i_qp - G^i_pq = tau^i_pq - (de^i)_pq
        std::vector<Scalar> row(unknowns + 1);
        auto put = [&](int j, int k, int sign) {
          if (i == j) return;
          if (i < j)
            row[var(i, j, k)] += Scalar(sign);
          else
            row[var(j, i, k)] -= Scalar(sign);
        };
        put(q, p, 1);
        put(p, q, -1);
        MultiIndex pq(static_cast<std::uint16_t>((1u << p) | (1u << q)));
        row[unknowns] = shape.tau[i].coeff(pq) - g.d_generator(i + 1).coeff(pq);
        sys.push_back(std::move(row));
      }
  Echelon<Scalar> e = row_reduce(sys);
  if (e.rank() != static_cast<size_t>(unknowns) || e.pivots.back() == static_cast<size_t>(unknowns))
    fail(ErrorKind::Precondition, "first structure equation has no unique metric solution");
  Christoffel gamma = zero_gamma(n);
  for (size_t r = 0; r < e.rank(); ++r) {
    int u = e.pivots[r];
    int k = u % n, pair = u / n;
    int a = 0;
    while (pair >= n - a - 1) pair -= n - a - 1, ++a;
    int b = a + 1 + pair;
    gamma[a][b][k] = e.rows[r][unknowns];
    gamma[b][a][k] = -e.rows[r][unknowns];
  }
  return assemble(n, std::move(gamma), T);
}

std::vector<Form> first_structure_residual(const LieAlgebra& g, const ConnectionSheet& c) {
  std::vector<Form> out;
  for (int i = 0; i < c.n; ++i) {
    Form r = g.d_generator(i + 1) - c.tau[i];
    for (int j = 0; j < c.n; ++j) r += wedge(c.omega[i][j], Form::generator(c.n, j + 1));
    out.push_back(r);
  }
  return out;
}

bool is_metric(const ConnectionSheet& c) {
  for (int i = 0; i < c.n; ++i)
    for (int j = i; j < c.n; ++j)
      if (!(c.omega[i][j] + c.omega[j][i]).is_zero()) return false;
  return true;
}

bool preserves(const ConnectionSheet& c, const CoframeMap& J) {
  const auto& M = J.matrix();
  for (int k = 0; k < c.n; ++k) {
    Matrix<Scalar> G(c.n, std::vector<Scalar>(c.n));
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.n; ++j) G[i][j] = c.gamma[i][j][k];
    if (multiply(G, M) != multiply(M, G)) return false;
  }
  return true;
}

std::string render_factored(const Form& a) {
  if (a.coeffs().size() < 2 || !a.is_rational()) return a.str();
  mpz_class num = 0, den = 1;
  for (const auto& [m, c] : a.coeffs()) {
    Rational q = c.as_rational();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  Rational g(num, den);
  g.canonicalize();
  if (a.coeffs().begin()->second.as_rational() < 0) g = -g;
  if (g == 1) return a.str();
  if (g == -1) return "-(" + (Scalar(-1) * a).str() + ")";
  if (g.get_den() != 1) return a.str();
  return to_string(g) + "(" + (Scalar(Rational(1) / g) * a).str() + ")";
}

std::string ConnectionSheet::str() const {
  std::string out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!omega[i][j].is_zero())
        out += "omega^" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + " = " + render_factored(omega[i][j]) +
               "\n";
  if (out.empty()) out = "all connection forms vanish\n";
  return out;
}

// ---------------------------------------------------------------------------

std::string CurvatureSheet::str() const {
  std::string out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!Omega[i][j].is_zero())
        out += "Omega^" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + " = " + render_factored(Omega[i][j]) +
               "\n";
  if (out.empty()) out = "flat\n";
  return out;
}

CurvatureSheet curvature(const LieAlgebra& g, const ConnectionSheet& c) {
  CurvatureSheet R;
  R.n = c.n;
  R.Omega.assign(c.n, std::vector<Form>(c.n, Form(c.n, 2)));
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      Form f = g.d(c.omega[i][j]);
      for (int r = 0; r < c.n; ++r) f += wedge(c.omega[i][r], c.omega[r][j]);
      R.Omega[i][j] = f;
    }
  return R;
}

std::vector<Form> bianchi_residual(const CurvatureSheet& R) {
  std::vector<Form> out;
  for (int i = 0; i < R.n; ++i) {
    Form f(R.n, 3);
    for (int j = 0; j < R.n; ++j) f += wedge(R.Omega[i][j], Form::generator(R.n, j + 1));
    out.push_back(f);
  }
  return out;
}

std::uint64_t Tensor::key(int upper, const std::vector<int>& lower) {
  std::uint64_t k = static_cast<std::uint64_t>(upper);
  for (int x : lower) k = (k << 4) | static_cast<std::uint64_t>(x);
  return k;
}

void Tensor::unpack(std::uint64_t key, int count, int& upper, std::vector<int>& lower) {
  lower.assign(count, 0);
  for (int s = count - 1; s >= 0; --s) {
    lower[s] = static_cast<int>(key & 15u);
    key >>= 4;
  }
  upper = static_cast<int>(key);
}

Scalar Tensor::at(int upper, const std::vector<int>& lower) const {
  auto it = entries_.find(key(upper, lower));
  return it == entries_.end() ? Scalar() : it->second;
}

void Tensor::add(int upper, const std::vector<int>& lower, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(key(upper, lower), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Tensor curvature_tensor(const CurvatureSheet& R) {
  Tensor S(R.n, 3);
  for (int i = 0; i < R.n; ++i)
    for (int j = 0; j < R.n; ++j)
      for (const auto& [m, v] : R.Omega[i][j].coeffs()) {
        auto idx = m.indices();
        int k = idx[0] - 1, l = idx[1] - 1;
        S.add(i, {j, k, l}, v);
        S.add(i, {j, l, k}, -v);
      }
  return S;
}

Tensor covariant_derivative(const ConnectionSheet& c, const Tensor& S) {
  const int n = c.n;
  // fwd[b][m]: (a, G^a_bm);  inv[a][m]: (b, G^a_bm)
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> fwd(
      n, std::vector<std::vector<std::pair<int, Scalar>>>(n)),
      inv = fwd;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m)
        if (!c.gamma[a][b][m].is_zero()) {
          fwd[b][m].emplace_back(a, c.gamma[a][b][m]);
          inv[a][m].emplace_back(b, c.gamma[a][b][m]);
        }
  Tensor out(n, S.lower() + 1);
  int upper;
  std::vector<int> lower;
  for (const auto& [k, v] : S.entries()) {
    Tensor::unpack(k, S.lower(), upper, lower);
    std::vector<int> L = lower;
    L.push_back(0);
    for (int m = 0; m < n; ++m) {
      L.back() = m;
      for (const auto& [i, g] : fwd[upper][m]) out.add(i, L, g * v);
      for (int s = 0; s < S.lower(); ++s) {
        int r = lower[s];
        for (const auto& [q, g] : inv[r][m]) {
          std::vector<int> L2 = L;
          L2[s] = q;
          out.add(upper, L2, -(g * v));
        }
      }
    }
  }
  return out;
}

Form derivative_form(const Tensor& dR, int i, int j, int m) {
  const int n = dR.n();
  Form f(n, 2);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      Scalar v = dR.at(i - 1, {j - 1, k, l, m - 1});
      if (!v.is_zero()) f.add(MultiIndex(static_cast<std::uint16_t>((1u << k) | (1u << l))), v);
    }
  return f;
}

std::vector<Tensor> covariant_derivative_curvature(const ConnectionSheet& c, const CurvatureSheet& R, int order) {
  if (order < 1) fail(ErrorKind::Precondition, "order must be at least 1");
  std::vector<Tensor> out;
  Tensor S = curvature_tensor(R);
  for (int g = 0; g < order; ++g) {
    S = covariant_derivative(c, S);
    out.push_back(S);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool HolonomyReport::is_full_su() const {
  return contained_in_su_n && dimension == static_cast<size_t>(n / 2 * n / 2 - 1);
}

std::string HolonomyReport::str() const {
  std::string out = "holonomy: dim=" + std::to_string(dimension) + ", su(" + std::to_string(n / 2) +
                    ")=" + (contained_in_su_n ? "yes" : "no") + ", u(" + std::to_string(n / 2) +
                    ")=" + (contained_in_u_n ? "yes" : "no");
  out += stabilized_at_order ? ", stabilized at order " + std::to_string(*stabilized_at_order)
                             : ", not stabilized";
  out += "\n  span by generation:";
  for (size_t g = 0; g < generation_dimensions.size(); ++g)
    out += (g ? ", " : " ") + std::to_string(generation_dimensions[g]);
  out += "\n  invariant under the connection: ";
  out += invariant ? "yes" : "no";
  out += ", closed under brackets: ";
  out += subalgebra ? "yes" : "no";
  out += "\n  curvature 2-form span by generation:";
  for (size_t g = 0; g < form_span_dimensions.size(); ++g)
    out += (g ? ", " : " ") + std::to_string(form_span_dimensions[g]);
  out += "\n";
  if (is_full_su()) out += "  holonomy algebra = su(" + std::to_string(n / 2) + ")\n";
  return out;
}

HolonomyReport holonomy_algebra(const MetricFrame& m, const ConnectionSheet& c, int max_order,
                                const std::vector<int>& frame_order) {
  const int n = c.n;
  for (const auto& a : c.gamma)
    for (const auto& b : a)
      for (const auto& x : b)
        if (!x.is_t_free()) fail(ErrorKind::Unsupported, "holonomy needs t-free connection coefficients");
  std::vector<int> order = frame_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) fail(ErrorKind::Dimension, "frame order must list every index");

  HolonomyReport rep;
  rep.n = n;
  SpanBuilder<Scalar> span(n * n);
  CurvatureSheet R = curvature(m.algebra, c);
  Tensor S = curvature_tensor(R);
  for (int g = 0; g <= max_order; ++g) {
    if (g > 0) S = covariant_derivative(c, S);
    const int extra = S.lower() - 3;
    // enumerate lower tuples (k < l, m1..m_extra) in the given frame order
    std::vector<std::vector<int>> tuples;
    std::vector<int> pos(2 + extra, 0);
    while (true) {
      std::vector<int> t(2 + extra);
      for (int s = 0; s < 2 + extra; ++s) t[s] = order[pos[s]];
      if (t[0] < t[1]) tuples.push_back(t);
      int s = 1 + extra;
      while (s >= 0 && ++pos[s] == n) pos[s--] = 0;
      if (s < 0) break;
    }
    size_t before = span.dimension();
    for (const auto& t : tuples) {
      std::vector<Scalar> flat(n * n);
      bool any = false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<int> L = {j};
          L.insert(L.end(), t.begin(), t.end());
          Scalar v = S.at(i, L);
          if (!v.is_zero()) {
            flat[i * n + j] = v;
            any = true;
          }
        }
      if (any && span.add(flat)) {
        Matrix<Scalar> A(n, std::vector<Scalar>(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) A[i][j] = flat[i * n + j];
        rep.basis.push_back(A);
      }
    }
    rep.generation_dimensions.push_back(span.dimension());
    if (g > 0 && span.dimension() == before) {
      rep.stabilized_at_order = g - 1;
      break;
    }
    if (S.entries().empty()) {
      rep.stabilized_at_order = g;
      break;
    }
  }
  rep.dimension = span.dimension();
  const auto& M = m.J.matrix();
  rep.contained_in_u_n = true;
  rep.contained_in_su_n = true;
  for (const auto& A : rep.basis) {
    if (multiply(A, M) != multiply(M, A)) rep.contained_in_u_n = false;
    Matrix<Scalar> JA = multiply(M, A);
    Scalar tr;
    for (int i = 0; i < n; ++i) tr += JA[i][i];
    if (!tr.is_zero()) rep.contained_in_su_n = false;
  }
  if (!rep.contained_in_u_n) rep.contained_in_su_n = false;

  rep.invariant = true;
  for (int z = 0; z < n && rep.invariant; ++z) {
    Matrix<Scalar> w(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i][j] = c.gamma[i][j][z];
    for (const auto& A : rep.basis) {
      Matrix<Scalar> wa = multiply(w, A), aw = multiply(A, w);
      std::vector<Scalar> flat(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[i * n + j] = wa[i][j] - aw[i][j];
      if (!span.contains(flat)) {
        rep.invariant = false;
        break;
      }
    }
  }

  rep.subalgebra = true;
  for (size_t a = 0; a < rep.basis.size() && rep.subalgebra; ++a)
    for (size_t b = a + 1; b < rep.basis.size(); ++b) {
      Matrix<Scalar> ab = multiply(rep.basis[a], rep.basis[b]), ba = multiply(rep.basis[b], rep.basis[a]);
      std::vector<Scalar> flat(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[i * n + j] = ab[i][j] - ba[i][j];
      if (!span.contains(flat)) {
        rep.subalgebra = false;
        break;
      }
    }

  auto indices = basis_indices(n, 2);
  SpanBuilder<Scalar> forms(indices.size());
  auto add_form = [&](const Form& f) {
    std::vector<Scalar> v;
    v.reserve(indices.size());
    for (const auto& mi : indices) v.push_back(f.coeff(mi));
    forms.add(v);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add_form(R.Omega[i][j]);
  rep.form_span_dimensions.push_back(forms.dimension());
  if (max_order >= 1) {
    Tensor dR = covariant_derivative(c, curvature_tensor(R));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int z = 1; z <= n; ++z) add_form(derivative_form(dR, i, j, z));
    rep.form_span_dimensions.push_back(forms.dimension());
  }
  return rep;
}

}  // namespace sugeom
