#include "structures.hpp"

namespace sugeom {

std::string render_flags(const std::vector<Flag>& flags) {
  std::string out;
  for (const auto& f : flags) {
    out += "  " + f.name + ": " + (f.pass ? "yes" : "NO");
    if (!f.detail.empty()) out += "  (" + f.detail + ")";
    out += "\n";
  }
  return out;
}

std::string render_residuals(const std::vector<Residual>& residuals) {
  std::string out;
  for (const auto& r : residuals) out += "  " + r.name + " = " + r.value.str() + "\n";
  return out;
}

bool all_pass(const std::vector<Flag>& flags) {
  return std::all_of(flags.begin(), flags.end(), [](const Flag& f) { return f.pass; });
}

bool all_zero(const std::vector<Residual>& residuals) {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.zero(); });
}

Matrix<Scalar> form_matrix(const Form& a) {
  const int n = a.dimension();
  Matrix<Scalar> w(n, std::vector<Scalar>(n));
  if (a.is_zero()) return w;
  if (a.degree() != 2) fail(ErrorKind::Dimension, "form_matrix needs a 2-form");
  for (const auto& [m, c] : a.coeffs()) {
    auto idx = m.indices();
    w[idx[0] - 1][idx[1] - 1] = c;
    w[idx[1] - 1][idx[0] - 1] = -c;
  }
  return w;
}

int sign_of(const Scalar& s) {
  if (s.is_zero()) return 0;
  if (s.is_rational()) return sgn(s.as_rational());
  if (!s.is_t_free()) fail(ErrorKind::Precondition, "sign of a parametric scalar needs a value of t");
  return s.eval(Rational(0)) > 0 ? 1 : -1;
}

bool is_symmetric(const Matrix<Scalar>& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

bool is_positive_definite(const Matrix<Scalar>& m) {
  for (size_t k = 1; k <= m.size(); ++k) {
    Matrix<Scalar> minor(k, std::vector<Scalar>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
    if (sign_of(determinant(minor)) <= 0) return false;
  }
  return true;
}

Matrix<Scalar> substitute(const Matrix<Scalar>& m, const Rational& t0) {
  Matrix<Scalar> out = m;
  for (auto& row : out)
    for (auto& x : row) x = x.substitute(t0);
  return out;
}

namespace {

bool matrix_is_t_free(const Matrix<Scalar>& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_t_free()) return false;
  return true;
}

Matrix<Scalar> negate(Matrix<Scalar> m) {
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return m;
}

bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) { return a == b; }

// Positivity of a possibly parametric matrix at the sample points.
Flag positivity_flag(const std::string& name, const Matrix<Scalar>& m, const std::vector<Rational>& samples) {
  if (matrix_is_t_free(m)) return {name, is_positive_definite(m), ""};
  if (samples.empty()) fail(ErrorKind::Precondition, "parametric structure needs sample values of t");
  std::string failed;
  for (const auto& t0 : samples) {
    bool ok = false;
    try {
      ok = is_positive_definite(substitute(m, t0));
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) failed += (failed.empty() ? "fails at t = " : ", ") + to_string(t0);
  }
  std::string detail = failed.empty() ? "checked at " + std::to_string(samples.size()) + " sample values of t" : failed;
  return {name, failed.empty(), detail};
}

}  // namespace

// ---------------------------------------------------------------------------

std::string SU2Validation::str() const {
  return std::string("su2 structure: ") + (pass ? "valid" : "INVALID") + "\n" + render_flags(checks);
}

SU2Validation validate_su2(const SU2Structure& s, const std::vector<Rational>& samples) {
  const int n = s.algebra.dimension();
  if (n != 5) fail(ErrorKind::Dimension, "SU(2)-structures live on 5-dimensional algebras");
  if (s.eta.is_zero()) fail(ErrorKind::Precondition, "eta is zero");
  for (const Form* f : {&s.eta, &s.omega1, &s.omega2, &s.omega3})
    if (f->dimension() != n) fail(ErrorKind::Dimension, "structure forms live in the wrong dimension");
  if (s.eta.degree() != 1) fail(ErrorKind::Dimension, "eta must be a 1-form");

  SU2Validation r;
  const Form* w[3] = {&s.omega1, &s.omega2, &s.omega3};
  r.volume = wedge(s.omega1, s.omega1);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Form p = wedge(*w[i], *w[j]);
      std::string name = "w" + std::to_string(i + 1) + "^w" + std::to_string(j + 1);
      if (i == j)
        r.checks.push_back({name + " = v", p == r.volume, i ? p.str() : "v = " + p.str()});
      else
        r.checks.push_back({name + " = 0", p.is_zero(), p.is_zero() ? "" : p.str()});
    }
  Form top = wedge(r.volume, s.eta);
  r.checks.push_back({"v^eta != 0", !top.is_zero(), top.str()});

  // endomorphisms on ker eta
  Matrix<Scalar> eta_row(1, std::vector<Scalar>(n));
  for (int j = 0; j < n; ++j) eta_row[0][j] = s.eta.coeff(MultiIndex::single(j + 1));
  Matrix<Scalar> ker = nullspace(eta_row, n);  // 4 vectors
  Matrix<Scalar> basis_t = transpose(ker);     // n x 4
  auto restrict = [&](const Form& a) { return multiply(multiply(ker, form_matrix(a)), basis_t); };
  Matrix<Scalar> W1 = restrict(s.omega1), W2 = restrict(s.omega2), W3 = restrict(s.omega3);
  auto W3inv = inverse(W3);
  r.checks.push_back({"w3 nondegenerate on ker eta", W3inv.has_value(), ""});
  if (!W3inv) {
    r.pass = false;
    return r;
  }
  Matrix<Scalar> A = multiply(*W3inv, W1), B = multiply(*W3inv, W2);
  Matrix<Scalar> minus_id = negate(identity_matrix<Scalar>(4));
  r.checks.push_back({"A^2 = -1", equal(multiply(A, A), minus_id), ""});
  r.checks.push_back({"B^2 = -1", equal(multiply(B, B), minus_id), ""});
  r.checks.push_back({"AB = -BA", equal(multiply(A, B), negate(multiply(B, A))), ""});
  Matrix<Scalar> g_ker = negate(multiply(W2, A));
  r.checks.push_back({"g symmetric", is_symmetric(g_ker), ""});
  r.checks.push_back(positivity_flag("g positive definite", g_ker, samples));

  // Reeb vector: common kernel of the omegas with eta(xi) = 1
  Matrix<Scalar> stacked;
  for (const Form* f : w)
    for (const auto& row : form_matrix(*f)) stacked.push_back(row);
  Matrix<Scalar> common = nullspace(stacked, n);
  bool reeb_ok = common.size() == 1;
  Scalar eta_xi;
  if (reeb_ok) {
    for (int j = 0; j < n; ++j) eta_xi += eta_row[0][j] * common[0][j];
    reeb_ok = !eta_xi.is_zero();
  }
  r.checks.push_back({"Reeb vector", reeb_ok, ""});
  if (reeb_ok) {
    // basis P = [ker, xi] as columns; G_P = diag(g_ker, 1); G = P^-T G_P P^-1
    Matrix<Scalar> P(n, std::vector<Scalar>(n));
    for (int a = 0; a < 4; ++a)
      for (int j = 0; j < n; ++j) P[j][a] = ker[a][j];
    Scalar inv_eta = Scalar(1) / eta_xi;
    for (int j = 0; j < n; ++j) P[j][4] = common[0][j] * inv_eta;
    Matrix<Scalar> GP(n, std::vector<Scalar>(n));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) GP[a][b] = g_ker[a][b];
    GP[4][4] = Scalar(1);
    auto Pinv = inverse(P);
    if (Pinv) r.metric = multiply(multiply(transpose(*Pinv), GP), *Pinv);
  }
  r.pass = all_pass(r.checks);
  return r;
}

std::string ResidualReport::str() const { return render_residuals(residuals); }

ResidualReport balanced_su2(const SU2Structure& s) {
  const LieAlgebra& g = s.algebra;
  ResidualReport r;
  r.residuals = {{"d(w1^eta)", g.d(wedge(s.omega1, s.eta))},
                 {"d(w2^eta)", g.d(wedge(s.omega2, s.eta))},
                 {"d(w3^w3)", g.d(wedge(s.omega3, s.omega3))}};
  r.pass = all_zero(r.residuals);
  return r;
}

ResidualReport hypo(const SU2Structure& s) {
  const LieAlgebra& g = s.algebra;
  ResidualReport r;
  r.residuals = {{"d(w1^eta)", g.d(wedge(s.omega1, s.eta))},
                 {"d(w2^eta)", g.d(wedge(s.omega2, s.eta))},
                 {"d w3", g.d(s.omega3)}};
  r.pass = all_zero(r.residuals);
  return r;
}

ResidualReport su2_candidate_identities(const SU2Structure& s) {
  const LieAlgebra& g = s.algebra;
  ResidualReport r;
  r.residuals = {{"d(w1^eta)", g.d(wedge(s.omega1, s.eta))},
                 {"d(w2^eta)", g.d(wedge(s.omega2, s.eta))},
                 {"d(w3^eta)", g.d(wedge(s.omega3, s.eta))},
                 {"d(w2^w2)", g.d(wedge(s.omega2, s.omega2))},
                 {"d(w3^w3)", g.d(wedge(s.omega3, s.omega3))}};
  r.pass = all_zero(r.residuals);
  return r;
}

// ---------------------------------------------------------------------------

Matrix<Scalar> hermitian_metric(const Form& F, const CoframeMap& J) {
  // (J_v)^i_k = M_ik, so F(X, JY) = x^T W_F M y
  return multiply(form_matrix(F), J.matrix());
}

std::string SUnValidation::str() const {
  std::string out = std::string("su(n) structure: ") + (pass ? "valid" : "INVALID") + "\n" + render_flags(checks);
  if (normalization) out += "  normalization constant: " + normalization->str() + "\n";
  return out;
}

namespace {

// The complex volume form Psi wedge conj(Psi), rotated by the unit that
// makes it a positive multiple of the volume on the standard model.
Form psi_volume(const SUnStructure& s) {
  const int n = s.n();
  if (n % 2 == 1) return wedge(s.psi_plus, s.psi_minus);
  Form q = wedge(s.psi_plus, s.psi_plus) + wedge(s.psi_minus, s.psi_minus);
  // even n: Psi ^ conj(Psi) = Psi+^2 + Psi-^2, up to (-1)^{n(n-1)/2 + n/2}
  return ((n * (n - 1) / 2 + n / 2) % 2) ? -q : q;
}

}  // namespace

SUnValidation validate_sun(const SUnStructure& s) {
  const int dim = s.algebra.dimension();
  if (dim % 2) fail(ErrorKind::Dimension, "SU(n)-structures need an even-dimensional algebra");
  if (s.J.dimension() != dim) fail(ErrorKind::Precondition, "complex structure J missing or of the wrong size");
  const int n = dim / 2;
  SUnValidation r;
  Matrix<Scalar> M = s.J.matrix();
  r.checks.push_back({"J^2 = -1", s.J.squares_to_minus_identity(), ""});
  r.checks.push_back({"J F = F", s.J.apply(s.F) == s.F, ""});
  Matrix<Scalar> g = hermitian_metric(s.F, s.J);
  r.metric = g;
  bool sym = is_symmetric(g);
  r.checks.push_back({"g symmetric", sym, ""});
  r.checks.push_back({"g positive definite", sym && matrix_is_t_free(g) && is_positive_definite(g), ""});
  // J Psi = i^n Psi
  Form jp = s.J.apply(s.psi_plus), jm = s.J.apply(s.psi_minus);
  bool type_ok = false;
  switch (n % 4) {
    case 0: type_ok = jp == s.psi_plus && jm == s.psi_minus; break;
    case 1: type_ok = jp == -s.psi_minus && jm == s.psi_plus; break;
    case 2: type_ok = jp == -s.psi_plus && jm == -s.psi_minus; break;
    case 3: type_ok = jp == s.psi_minus && jm == -s.psi_plus; break;
  }
  r.checks.push_back({"Psi of type (" + std::to_string(n) + ",0)", type_ok, ""});
  Form vol = psi_volume(s);
  Form fn = power(s.F, n);
  bool prop = false;
  if (!fn.is_zero() && !vol.is_zero()) {
    const auto& [m, c] = *fn.coeffs().begin();
    Scalar lambda = vol.coeff(m) / c;
    prop = lambda * fn == vol;
    if (prop) r.normalization = lambda;
  }
  bool positive = false;
  if (r.normalization) {
    try {
      positive = sign_of(*r.normalization) > 0;
    } catch (const Error&) {
      positive = false;
    }
  }
  r.checks.push_back({"Psi volume = c F^" + std::to_string(n) + " with c > 0", prop && positive,
                      r.normalization ? "c = " + r.normalization->str() : vol.str()});
  r.pass = all_pass(r.checks);
  return r;
}

std::string SUnBalanced::str() const {
  std::string out = render_residuals(residuals);
  out += "  dF = " + dF.str() + "\n";
  out += std::string("  balanced: ") + (pass ? "yes" : "NO") + ", kaehler: " + (kaehler ? "yes" : "no") + "\n";
  return out;
}

SUnBalanced balanced_sun(const SUnStructure& s) {
  const int n = s.n();
  const LieAlgebra& g = s.algebra;
  SUnBalanced r;
  r.dF = g.d(s.F);
  r.residuals = {{"dF^" + std::to_string(n - 1), g.d(power(s.F, n - 1))},
                 {"dPsi+", g.d(s.psi_plus)},
                 {"dPsi-", g.d(s.psi_minus)}};
  r.pass = all_zero(r.residuals);
  r.kaehler = r.dF.is_zero();
  if (n == 3) r.half_flat = r.residuals[0].zero() && r.residuals[1].zero();
  return r;
}

// ---------------------------------------------------------------------------

Form drop_generator(const Form& a, int k) {
  const int n = a.dimension();
  Form out(n - 1, a.is_zero() ? 0 : a.degree());
  for (const auto& [m, c] : a.coeffs()) {
    if (m.contains(k)) continue;
    std::uint16_t low = m.mask() & ((1u << (k - 1)) - 1);
    std::uint16_t high = m.mask() >> k;
    out.add(MultiIndex(static_cast<std::uint16_t>(low | (high << (k - 1)))), c);
  }
  return out;
}

LieAlgebra drop_generator(const LieAlgebra& g, int k) {
  std::vector<Form> d;
  for (int i = 1; i <= g.dimension(); ++i)
    if (i != k) d.push_back(drop_generator(g.d_generator(i), k));
  for (auto& f : d)
    if (f.is_zero()) f = Form(g.dimension() - 1, 2);
  return LieAlgebra(g.dimension() - 1, d);
}

Form lift(const Form& a, int dimension) {
  Form out(dimension, a.is_zero() ? 0 : a.degree());
  for (const auto& [m, c] : a.coeffs()) out.add(m, c);
  return out;
}

std::string Restriction::str() const {
  std::string out = "restriction to the complement of e_" + std::to_string(dropped) + "\n";
  out += std::string("  hypersurface algebra is a subalgebra: ") + (subalgebra ? "yes" : "no") + "\n";
  out += "  eta = " + structure.eta.str() + "\n  w1 = " + structure.omega1.str() + "\n  w2 = " +
         structure.omega2.str() + "\n  w3 = " + structure.omega3.str() + "\n";
  return out;
}

Restriction restrict_to_hypersurface(const SUnStructure& s, const std::vector<Scalar>& u) {
  const int n = s.algebra.dimension();
  if (n != 6) fail(ErrorKind::Dimension, "restriction needs an SU(3)-structure");
  if (static_cast<int>(u.size()) != n) fail(ErrorKind::Dimension, "vector of wrong length");
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (!u[i].is_zero()) {
      if (k) fail(ErrorKind::Unsupported, "U must be a multiple of a single frame vector");
      k = i + 1;
    }
  if (!k) fail(ErrorKind::Precondition, "U is zero");
  Matrix<Scalar> g = hermitian_metric(s.F, s.J);
  if (u[k - 1] * u[k - 1] * g[k - 1][k - 1] != Scalar(1)) fail(ErrorKind::Precondition, "U is not a unit vector");
  for (int j = 0; j < n; ++j)
    if (j != k - 1 && !g[k - 1][j].is_zero())
      fail(ErrorKind::Unsupported, "the orthogonal complement of U is not spanned by the other frame vectors");

  Restriction r;
  r.dropped = k;
  r.structure.algebra = drop_generator(s.algebra, k);
  r.structure.eta = drop_generator(-contract(u, s.F), k);
  r.structure.omega1 = drop_generator(contract(u, s.psi_minus), k);
  r.structure.omega2 = drop_generator(-contract(u, s.psi_plus), k);
  r.structure.omega3 = drop_generator(s.F, k);
  // ker e^k is a subalgebra iff de^k is divisible by e^k
  r.subalgebra = wedge(s.algebra.d_generator(k), Form::generator(n, k)).is_zero();
  return r;
}

SUnStructure suspend_su2(const SU2Structure& s) {
  SU2Validation v = validate_su2(s);
  if (!v.pass || !v.metric) fail(ErrorKind::Precondition, "suspension needs a valid SU(2)-structure");
  SUnStructure out;
  out.algebra = extend_by_line(s.algebra);
  const int n = out.algebra.dimension();
  Form dt = Form::generator(n, n);
  Form eta = lift(s.eta, n), w1 = lift(s.omega1, n), w2 = lift(s.omega2, n), w3 = lift(s.omega3, n);
  out.F = w3 + wedge(eta, dt);
  out.psi_plus = wedge(w1, eta) - wedge(w2, dt);
  out.psi_minus = wedge(w2, eta) + wedge(w1, dt);
  Matrix<Scalar> G(n, std::vector<Scalar>(n));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) G[i][j] = (*v.metric)[i][j];
  G[n - 1][n - 1] = Scalar(1);
  auto WFinv = inverse(form_matrix(out.F));
  if (!WFinv) fail(ErrorKind::Precondition, "suspended F is degenerate");
  out.J = CoframeMap(multiply(*WFinv, G));
  return out;
}

// ---------------------------------------------------------------------------

std::string CircleBundle::str() const {
  std::string out = std::string("circle bundle preconditions: ") + (pass ? "satisfied" : "VIOLATED") + "\n" +
                    render_flags(checks);
  if (structure) out += "  total space: " + structure->algebra.compact() + "\n";
  return out;
}

CircleBundle circle_bundle_structure(const LieAlgebra& x, const Form& omega1, const Form& omega2,
                                     const Form& omega3, const Form& curvature, const Scalar& c,
                                     const Scalar& s) {
  if (x.dimension() != 4) fail(ErrorKind::Dimension, "the base of the circle bundle must be 4-dimensional");
  CircleBundle r;
  auto zero_flag = [&](const std::string& name, const Form& f) {
    r.checks.push_back({name, f.is_zero(), f.is_zero() ? "" : f.str()});
  };
  r.checks.push_back({"cos^2 + sin^2 = 1", c * c + s * s == Scalar(1), ""});
  zero_flag("d w1 = 0", x.d(omega1));
  zero_flag("d w2 = 0", x.d(omega2));
  Form q1 = wedge(omega1, omega1), q2 = wedge(omega2, omega2), q3 = wedge(omega3, omega3);
  r.checks.push_back({"w1^2 = w2^2 = w3^2 != 0", q1 == q2 && q2 == q3 && !q1.is_zero(), q1.str()});
  zero_flag("w1^w2 = 0", wedge(omega1, omega2));
  zero_flag("w1^w3 = 0", wedge(omega1, omega3));
  zero_flag("w2^w3 = 0", wedge(omega2, omega3));
  zero_flag("d Omega = 0", x.d(curvature));
  Form r1 = c * omega1 + s * omega2;
  Form r2 = -s * omega1 + c * omega2;
  zero_flag("Omega^w1(theta) = 0", wedge(curvature, r1));
  zero_flag("Omega^w2(theta) = 0", wedge(curvature, r2));
  r.pass = all_pass(r.checks);
  if (!r.pass) return r;
  SU2Structure out;
  out.algebra = central_extension(x, curvature);
  out.eta = Form::generator(5, 5);
  out.omega1 = lift(r1, 5);
  out.omega2 = lift(r2, 5);
  out.omega3 = lift(omega3, 5);
  r.structure = out;
  return r;
}

std::string ConformalCouple::str() const {
  std::string out = std::string("conformal symplectic couple: ") + (pass ? "yes" : "NO") + "\n" + render_flags(checks);
  out += "  w1^2 = " + square1.str() + "\n  w2^2 = " + square2.str() + "\n  w3^2 = " + square3.str() + "\n";
  out += "  d w3 = " + d_omega3.str() + "\n";
  return out;
}

ConformalCouple check_conformal_couple(const LieAlgebra& x, const Form& omega1, const Form& omega2,
                                       const Form& omega3) {
  ConformalCouple r;
  Form d1 = x.d(omega1), d2 = x.d(omega2);
  r.checks.push_back({"d w1 = 0", d1.is_zero(), d1.is_zero() ? "" : d1.str()});
  r.checks.push_back({"d w2 = 0", d2.is_zero(), d2.is_zero() ? "" : d2.str()});
  Form w12 = wedge(omega1, omega2), w13 = wedge(omega1, omega3), w23 = wedge(omega2, omega3);
  r.checks.push_back({"w1^w2 = 0", w12.is_zero(), ""});
  r.checks.push_back({"w1^w3 = 0", w13.is_zero(), ""});
  r.checks.push_back({"w2^w3 = 0", w23.is_zero(), ""});
  r.square1 = wedge(omega1, omega1);
  r.square2 = wedge(omega2, omega2);
  r.square3 = wedge(omega3, omega3);
  r.checks.push_back({"w1^2 = w2^2 = w3^2", r.square1 == r.square2 && r.square2 == r.square3, ""});
  r.checks.push_back({"w1^2 nonzero", !r.square1.is_zero(), ""});
  r.d_omega3 = x.d(omega3);
  r.pass = all_pass(r.checks);
  return r;
}

}  // namespace sugeom
