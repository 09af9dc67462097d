#include "evolution.hpp"

namespace sugeom {

std::vector<Rational> ParamFamily::samples() const {
  if (domain.empty()) return Interval{}.samples();
  std::vector<Rational> out;
  for (const auto& i : domain)
    for (const auto& t0 : i.samples()) out.push_back(t0);
  return out;
}

Form total_d(const LieAlgebra& extended, const Form& a) {
  const int n = extended.dimension();
  return extended.d(a) + wedge(Form::generator(n, n), partial_t(a));
}

std::string EvolutionReport::str() const {
  std::string out = render_residuals(residuals);
  out += std::string("  evolution equations: ") + (pass ? "satisfied" : "NOT satisfied") + "\n";
  out += std::string("  balanced for all t: ") + (balanced_all_t ? "yes" : "no") + "\n";
  if (!balanced_all_t) out += render_residuals(balanced);
  return out;
}

namespace {

void fill_balanced(const ParamFamily& f, EvolutionReport& r) {
  auto b = balanced_su2(f.structure);
  r.balanced = b.residuals;
  r.balanced_all_t = b.pass;
}

}  // namespace

EvolutionReport verify_balanced_evolution(const ParamFamily& f) {
  const SU2Structure& s = f.structure;
  const LieAlgebra& g = s.algebra;
  if (!g.is_t_free()) fail(ErrorKind::Precondition, "structure constants must not depend on t");
  EvolutionReport r;
  Form w1e = wedge(s.omega1, s.eta), w2e = wedge(s.omega2, s.eta);
  r.residuals = {
      {"d/dt(w1^eta) + d w2", partial_t(w1e) + g.d(s.omega2)},
      {"d/dt(w2^eta) - d w1", partial_t(w2e) - g.d(s.omega1)},
      {"d/dt(w3^w3) + 2 d(w3^eta)", partial_t(wedge(s.omega3, s.omega3)) + Scalar(2) * g.d(wedge(s.omega3, s.eta))}};
  r.pass = all_zero(r.residuals);
  fill_balanced(f, r);
  return r;
}

EvolutionReport verify_hypo_evolution(const ParamFamily& f) {
  const SU2Structure& s = f.structure;
  const LieAlgebra& g = s.algebra;
  if (!g.is_t_free()) fail(ErrorKind::Precondition, "structure constants must not depend on t");
  EvolutionReport r;
  r.residuals = {{"d/dt(w1^eta) + d w2", partial_t(wedge(s.omega1, s.eta)) + g.d(s.omega2)},
                 {"d/dt(w2^eta) - d w1", partial_t(wedge(s.omega2, s.eta)) - g.d(s.omega1)},
                 {"d/dt w3 + d eta", partial_t(s.omega3) + g.d(s.eta)}};
  r.pass = all_zero(r.residuals);
  fill_balanced(f, r);
  return r;
}

std::string SuspendedStructure::str() const {
  std::string out = "F = " + structure.F.str() + "\nPsi+ = " + structure.psi_plus.str() +
                    "\nPsi- = " + structure.psi_minus.str() + "\n";
  out += render_residuals(closedness);
  out += std::string("  balanced hermitian: ") + (closed ? "yes" : "no") + "\n";
  out += "  dF = " + dF.str() + "\n";
  return out;
}

SuspendedStructure suspend_family(const ParamFamily& f) {
  const SU2Structure& s = f.structure;
  SuspendedStructure out;
  out.base = f;
  SUnStructure& six = out.structure;
  six.algebra = extend_by_line(s.algebra);
  const int n = six.algebra.dimension();
  Form dt = Form::generator(n, n);
  Form eta = lift(s.eta, n), w1 = lift(s.omega1, n), w2 = lift(s.omega2, n), w3 = lift(s.omega3, n);
  six.F = w3 + wedge(eta, dt);
  six.psi_plus = wedge(w1, eta) - wedge(w2, dt);
  six.psi_minus = wedge(w2, eta) + wedge(w1, dt);

  // J from F and g = g_t + dt^2, when the family is valid
  SU2Validation v = validate_su2(s, f.samples());
  if (v.pass && v.metric) {
    Matrix<Scalar> G(n, std::vector<Scalar>(n));
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) G[i][j] = (*v.metric)[i][j];
    G[n - 1][n - 1] = Scalar(1);
    if (auto inv = inverse(form_matrix(six.F))) six.J = CoframeMap(multiply(*inv, G));
  }

  out.dF = total_d(six.algebra, six.F);
  out.closedness = {{"dF^2", total_d(six.algebra, wedge(six.F, six.F))},
                    {"dPsi+", total_d(six.algebra, six.psi_plus)},
                    {"dPsi-", total_d(six.algebra, six.psi_minus)}};
  out.closed = all_zero(out.closedness);
  return out;
}

std::string CoframeReport::str() const {
  std::string out = std::string("orthonormal coframe: ") + (pass ? "yes" : "NO") + "\n";
  if (!pass)
    for (size_t i = 0; i < gram.size(); ++i)
      for (size_t j = i; j < gram.size(); ++j) {
        Scalar expect = i == j ? Scalar(1) : Scalar();
        if (gram[i][j] != expect)
          out += "  g(a" + std::to_string(i + 1) + ", a" + std::to_string(j + 1) + ") = " + gram[i][j].str() + "\n";
      }
  return out;
}

CoframeReport verify_orthonormal_coframe(const SuspendedStructure& s, const std::vector<Form>& alphas) {
  const SUnStructure& six = s.structure;
  const int n = six.algebra.dimension();
  if (static_cast<int>(alphas.size()) != n) fail(ErrorKind::Dimension, "need one 1-form per dimension");
  if (six.J.dimension() != n) fail(ErrorKind::Precondition, "the suspended structure has no metric");
  Matrix<Scalar> A;
  for (const auto& a : alphas) {
    if (a.dimension() != n || (!a.is_zero() && a.degree() != 1))
      fail(ErrorKind::Dimension, "coframe entries must be 1-forms on the product");
    std::vector<Scalar> row(n);
    for (int j = 0; j < n; ++j) row[j] = a.coeff(MultiIndex::single(j + 1));
    A.push_back(row);
  }
  auto Ginv = inverse(hermitian_metric(six.F, six.J));
  if (!Ginv) fail(ErrorKind::Precondition, "degenerate metric");
  CoframeReport r;
  r.gram = multiply(multiply(A, *Ginv), transpose(A));
  r.pass = r.gram == identity_matrix<Scalar>(n);
  return r;
}

std::string VolumeReport::str() const {
  std::string out = "w1^w1^eta = (" + coefficient.str() + ") e12345\n";
  for (const auto& s : signs)
    out += "  on " + s.interval.str() + ": " + (s.sign > 0 ? "positive" : s.sign < 0 ? "negative" : "indefinite") +
           "\n";
  return out;
}

VolumeReport family_volume(const ParamFamily& f) {
  const SU2Structure& s = f.structure;
  const int n = s.algebra.dimension();
  VolumeReport r;
  Form top = wedge(wedge(s.omega1, s.omega1), s.eta);
  r.coefficient = top.coeff(MultiIndex(static_cast<std::uint16_t>((1u << n) - 1)));
  std::vector<Interval> domain = f.domain.empty() ? std::vector<Interval>{Interval{}} : f.domain;
  for (const auto& i : domain) {
    int sign = 0;
    bool first = true;
    for (const auto& t0 : i.samples()) {
      double x = r.coefficient.eval(t0);
      int sx = x > 0 ? 1 : x < 0 ? -1 : 0;
      if (first) {
        sign = sx;
        first = false;
      } else if (sx != sign) {
        sign = 0;
      }
    }
    r.signs.push_back({i, sign});
  }
  return r;
}

}  // namespace sugeom
