#include "report.hpp"

#include <algorithm>

namespace sugeom {

namespace {

void put_bool(Facts& facts, const std::string& key, bool v) { facts[key] = {v ? "true" : "false", {}, {}}; }
void put_int(Facts& facts, const std::string& key, long v) { facts[key] = {std::to_string(v), {}, {}}; }
void put_text(Facts& facts, const std::string& key, std::string v) { facts[key] = {std::move(v), {}, {}}; }
void put_form(Facts& facts, const std::string& key, const Form& a) { facts[key] = {a.str(), a, {}}; }
void put_scalar(Facts& facts, const std::string& key, const Scalar& s) { facts[key] = {s.str(), {}, s}; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string indent(const std::string& text, const std::string& pad = "  ") {
  std::string out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out += pad + text.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

void merge(CommandReport& into, const CommandReport& part) {
  into.pass = into.pass && part.pass;
  into.text += part.text;
  for (const auto& [k, v] : part.facts) into.facts[k] = v;
}

std::string algebra_header(const LieAlgebra& g) {
  std::string out;
  if (!g.label().empty()) out += "label: " + g.label() + "\n";
  std::string c = g.compact();
  out += "algebra: " + (c.empty() ? "dim " + std::to_string(g.dimension()) : c) + "\n";
  out += indent(g.str());
  return out;
}

std::vector<Rational> family_samples(const StructureFile& f) {
  std::vector<Rational> out;
  for (const auto& iv : f.domain)
    for (const auto& x : iv.samples()) out.push_back(x);
  return out;
}

bool has_t(const Form& a) { return !a.is_t_free(); }

std::vector<int> connection_indices(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

std::string sup_sub(const std::string& head, int i, int j) {
  return head + "^" + std::to_string(i) + "_" + std::to_string(j);
}

bool frame_is_orthonormal(const SUnStructure& s) {
  return hermitian_metric(s.F, s.J) == identity_matrix<Scalar>(s.algebra.dimension());
}

CommandReport circle_bundle_section(const StructureFile& f) {
  CommandReport r;
  const Form *w1 = f.form("omega1"), *w2 = f.form("omega2"), *w3 = f.form("omega3");
  Scalar c = f.scalar("cos_theta").value_or(Scalar(1)), s = f.scalar("sin_theta").value_or(Scalar(0));
  auto couple = check_conformal_couple(f.algebra, *w1, *w2, *w3);
  put_bool(r.facts, "conformal_couple", couple.pass);
  r.text += "conformal symplectic couple: " + std::string(yes_no(couple.pass)) + "\n" + indent(couple.str());
  for (const auto& v : f.structure.values) {
    if (!v.is_form || v.name.rfind("Omega", 0) != 0) continue;
    const std::string& name = v.name;
    bool annihilates = wedge(v.form, *w1).is_zero() && wedge(v.form, *w2).is_zero();
    put_bool(r.facts, name + ":annihilates", annihilates);
    auto cb = circle_bundle_structure(f.algebra, *w1, *w2, *w3, v.form, c, s);
    put_bool(r.facts, name + ":admissible", cb.pass);
    r.text += "circle bundle with curvature " + name + " = " + v.form.str() + "\n";
    r.text += "  " + name + " ^ omega1 = 0 and " + name + " ^ omega2 = 0: " + yes_no(annihilates) + "\n";
    if (!cb.structure) {
      r.text += indent(cb.str(), "    ");
      r.pass = false;
      continue;
    }
    const SU2Structure& su = *cb.structure;
    auto val = validate_su2(su);
    auto bal = balanced_su2(su);
    auto hy = hypo(su);
    put_bool(r.facts, name + ":su2", val.pass);
    put_bool(r.facts, name + ":balanced", bal.pass);
    put_bool(r.facts, name + ":hypo", hy.pass);
    std::string compact = su.algebra.compact();
    put_text(r.facts, name + ":algebra", compact);
    r.text += "  total space: " + (compact.empty() ? su.algebra.str() : compact) + "\n";
    r.text += "  eta = " + su.eta.str() + "\n";
    r.text += std::string("  SU(2)-structure: ") + yes_no(val.pass) + ", balanced: " + yes_no(bal.pass) +
              ", hypo: " + yes_no(hy.pass) + "\n";
    r.text += indent(hy.str(), "    ");
    r.pass = r.pass && val.pass && bal.pass;
  }
  return r;
}

CommandReport su2_section(const StructureFile& f, const SU2Structure& s, bool candidates) {
  CommandReport r;
  auto val = validate_su2(s, family_samples(f));
  put_bool(r.facts, "su2", val.pass);
  r.text += std::string("SU(2)-structure: ") + (val.pass ? "valid" : "INVALID") + "\n" + indent(val.str());
  auto bal = balanced_su2(s);
  put_bool(r.facts, "balanced_su2", bal.pass);
  r.text += std::string("balanced: ") + yes_no(bal.pass) + "\n" + indent(bal.str());
  auto hy = hypo(s);
  put_bool(r.facts, "hypo", hy.pass);
  r.text += std::string("hypo: ") + yes_no(hy.pass) + "\n" + indent(hy.str());
  if (candidates) {
    auto cand = su2_candidate_identities(s);
    r.text += "candidate identities:\n" + indent(cand.str());
    for (const auto& res : cand.residuals) put_bool(r.facts, "zero:" + res.name, res.zero());
  }
  r.pass = val.pass;
  return r;
}

CommandReport sun_section(const SUnStructure& s, bool has_psi) {
  CommandReport r;
  const int n = s.n();
  std::string tag = "SU(" + std::to_string(n) + ")";
  bool ortho = frame_is_orthonormal(s);
  put_bool(r.facts, "orthonormal_frame", ortho);
  r.text += "J: " + s.J.str() + "\n";
  r.text += std::string("frame orthonormal for g = F(., J.): ") + yes_no(ortho) + "\n";
  if (has_psi) {
    auto v = validate_sun(s);
    put_bool(r.facts, "sun", v.pass);
    if (v.normalization) put_scalar(r.facts, "normalization", *v.normalization);
    r.text += tag + "-structure: " + (v.pass ? "valid" : "INVALID") + "\n" + indent(v.str());
    r.pass = v.pass;
  } else {
    bool j2 = s.J.squares_to_minus_identity(), jf = s.J.apply(s.F) == s.F;
    put_bool(r.facts, "hermitian", j2 && jf && ortho);
    r.text += std::string("hermitian: J^2 = -1: ") + yes_no(j2) + ", J F = F: " + yes_no(jf) + "\n";
    r.pass = j2 && jf;
  }
  Form dF = s.algebra.d(s.F);
  put_form(r.facts, "dF", dF);
  r.text += "dF = " + dF.str() + "\n";
  Form Fk = s.F;
  for (int k = 2; k < n + 1; ++k) {
    Fk = wedge(Fk, s.F);
    Form d = s.algebra.d(Fk);
    put_form(r.facts, "d(F^" + std::to_string(k) + ")", d);
    r.text += "d(F^" + std::to_string(k) + ") = " + d.str() + "\n";
  }
  Form top = s.algebra.d(power(s.F, n - 1));
  put_bool(r.facts, "balanced", top.is_zero());
  put_bool(r.facts, "kaehler", dF.is_zero());
  r.text += std::string("balanced (d F^") + std::to_string(n - 1) + " = 0): " + yes_no(top.is_zero()) + "\n";
  if (has_psi) {
    auto b = balanced_sun(s);
    put_bool(r.facts, "balanced_sun", b.pass);
    if (n == 3) put_bool(r.facts, "half_flat", b.half_flat);
    r.text += "balanced " + tag + " (d Psi = 0 as well): " + yes_no(b.pass) + "\n" + indent(b.str());
  }
  return r;
}

}  // namespace

std::optional<SU2Structure> su2_of(const StructureFile& f) {
  const Form *eta = f.form("eta"), *w1 = f.form("omega1"), *w2 = f.form("omega2"), *w3 = f.form("omega3");
  if (!eta || !w1 || !w2 || !w3) return std::nullopt;
  if (f.algebra.dimension() != 5) fail(ErrorKind::Dimension, "an SU(2)-structure needs a 5-dimensional algebra");
  return SU2Structure{f.algebra, *eta, *w1, *w2, *w3};
}

std::optional<SUnStructure> sun_of(const StructureFile& f) {
  const Form* F = f.form("F");
  if (!F || !f.J) return std::nullopt;
  const int n = f.algebra.dimension();
  if (n % 2) fail(ErrorKind::Dimension, "an SU(n)-structure needs an even-dimensional algebra");
  const Form *pp = f.form("Psi_plus"), *pm = f.form("Psi_minus");
  return SUnStructure{f.algebra, *F, pp ? *pp : Form(n, n / 2), pm ? *pm : Form(n, n / 2), *f.J};
}

std::optional<ParamFamily> family_of(const StructureFile& f) {
  if (!f.has_family) return std::nullopt;
  auto s = su2_of(f);
  if (!s) return std::nullopt;
  return ParamFamily{*s, f.domain};
}

CommandReport validate_file(const StructureFile& f) {
  CommandReport r;
  r.text = algebra_header(f.algebra);
  auto jac = check_jacobi(f.algebra);
  put_bool(r.facts, "jacobi", jac.pass);
  r.text += std::string("jacobi (d^2 = 0): ") + (jac.pass ? "ok" : "FAILED") + "\n";
  if (!jac.pass) r.text += indent(jac.str());
  r.pass = jac.pass;
  if (!jac.pass) return r;
  if (auto s = su2_of(f)) merge(r, su2_section(f, *s, false));
  if (auto s = sun_of(f)) merge(r, sun_section(*s, f.form("Psi_plus") != nullptr));
  return r;
}

CommandReport cohomology_file(const StructureFile& f, int max_degree) {
  CommandReport r;
  r.text = algebra_header(f.algebra);
  auto jac = check_jacobi(f.algebra);
  if (!jac.pass) {
    r.pass = false;
    r.text += "jacobi (d^2 = 0): FAILED\n" + indent(jac.str());
    return r;
  }
  auto coh = ce_cohomology(f.algebra, max_degree);
  r.text += coh.str();
  for (const auto& d : coh.degrees) {
    put_int(r.facts, "b" + std::to_string(d.degree), static_cast<long>(d.betti));
    std::string reps;
    for (const auto& a : d.representatives) reps += (reps.empty() ? "" : ", ") + a.str();
    put_text(r.facts, "H" + std::to_string(d.degree), reps);
  }
  return r;
}

CommandReport check_file(const StructureFile& f, CheckKind kind) {
  CommandReport r;
  r.text = algebra_header(f.algebra);
  auto jac = check_jacobi(f.algebra);
  if (!jac.pass) {
    r.pass = false;
    r.text += "jacobi (d^2 = 0): FAILED\n" + indent(jac.str());
    return r;
  }
  auto su2 = su2_of(f);
  auto sun = sun_of(f);
  const bool has_psi = f.form("Psi_plus") != nullptr;
  auto need = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorKind::Precondition, std::string("the file does not define ") + what);
  };
  switch (kind) {
    case CheckKind::SU2: {
      need(su2.has_value(), "an SU(2)-structure (eta, omega1, omega2, omega3)");
      auto v = validate_su2(*su2, family_samples(f));
      r.pass = v.pass;
      put_bool(r.facts, "su2", v.pass);
      r.text += std::string("SU(2)-structure: ") + (v.pass ? "valid" : "INVALID") + "\n" + indent(v.str());
      break;
    }
    case CheckKind::SU3:
    case CheckKind::SU4: {
      const int want = kind == CheckKind::SU3 ? 3 : 4;
      need(sun.has_value() && has_psi, "an SU(n)-structure (F, Psi, J)");
      if (sun->n() != want)
        fail(ErrorKind::Precondition, "the structure is SU(" + std::to_string(sun->n()) + "), not SU(" +
                                          std::to_string(want) + ")");
      auto v = validate_sun(*sun);
      r.pass = v.pass;
      put_bool(r.facts, "sun", v.pass);
      r.text += "SU(" + std::to_string(want) + ")-structure: " + (v.pass ? "valid" : "INVALID") + "\n" +
                indent(v.str());
      break;
    }
    case CheckKind::Balanced: {
      need(su2 || sun, "an SU(2)- or SU(n)-structure");
      if (su2) {
        auto b = balanced_su2(*su2);
        r.pass = b.pass;
        r.text += std::string("balanced: ") + yes_no(b.pass) + "\n" + indent(b.str());
      } else {
        auto part = sun_section(*sun, has_psi);
        r.text += part.text;
        r.facts = part.facts;
        r.pass = part.facts["balanced"].text == "true" && (!has_psi || part.facts["balanced_sun"].text == "true");
      }
      break;
    }
    case CheckKind::Hypo: {
      need(su2.has_value(), "an SU(2)-structure (eta, omega1, omega2, omega3)");
      auto h = hypo(*su2);
      r.pass = h.pass;
      r.text += std::string("hypo: ") + yes_no(h.pass) + "\n" + indent(h.str());
      break;
    }
    case CheckKind::Default: {
      need(su2 || sun, "an SU(2)- or SU(n)-structure");
      if (su2) {
        auto part = su2_section(f, *su2, false);
        merge(r, part);
        r.pass = part.facts["su2"].text == "true" && part.facts["balanced_su2"].text == "true";
      } else {
        auto part = sun_section(*sun, has_psi);
        merge(r, part);
        r.pass = r.pass && part.facts["balanced"].text == "true";
      }
      break;
    }
  }
  return r;
}

CommandReport evolve_file(const StructureFile& f) {
  auto fam = family_of(f);
  if (!fam) fail(ErrorKind::Precondition, "the file does not define a [family] with eta, omega1, omega2, omega3");
  CommandReport r;
  r.text = algebra_header(f.algebra);
  r.text += "domain:";
  for (const auto& iv : f.domain) r.text += " " + iv.str();
  r.text += "\n";
  auto val = validate_su2(fam->structure, fam->samples());
  put_bool(r.facts, "su2", val.pass);
  r.text += std::string("SU(2)-structure at the sample points: ") + (val.pass ? "valid" : "INVALID") + "\n";
  if (!val.pass) r.text += indent(val.str());

  auto ev = verify_balanced_evolution(*fam);
  put_bool(r.facts, "balanced_evolution", ev.pass);
  put_bool(r.facts, "balanced_all_t", ev.balanced_all_t);
  r.text += "balanced evolution equations:\n" + indent(ev.str());
  auto hy = verify_hypo_evolution(*fam);
  put_bool(r.facts, "hypo_evolution", hy.pass);
  r.text += std::string("hypo evolution equations: ") + (hy.pass ? "satisfied" : "not satisfied") + "\n";

  auto sus = suspend_family(*fam);
  put_bool(r.facts, "suspension_closed", sus.closed);
  put_form(r.facts, "suspended:F", sus.structure.F);
  put_form(r.facts, "suspended:Psi_plus", sus.structure.psi_plus);
  put_form(r.facts, "suspended:Psi_minus", sus.structure.psi_minus);
  r.text += "suspension:\n" + indent(sus.str());

  bool coframe_ok = true;
  if (f.form("alpha1")) {
    std::vector<Form> alphas;
    for (int i = 1; i <= 5; ++i) {
      const Form* a = f.form("alpha" + std::to_string(i));
      if (!a) fail(ErrorKind::Precondition, "alpha1..alpha5 must all be given");
      alphas.push_back(lift(*a, 6));
    }
    alphas.push_back(Form::generator(6, 6));
    auto co = verify_orthonormal_coframe(sus, alphas);
    coframe_ok = co.pass;
    put_bool(r.facts, "coframe", co.pass);
    r.text += "orthonormal coframe alpha1..alpha5, alpha6 = e6:\n" + indent(co.str());
  }
  auto vol = family_volume(*fam);
  put_scalar(r.facts, "volume", vol.coefficient);
  std::string signs;
  for (const auto& s : vol.signs) signs += (signs.empty() ? "" : ", ") + std::to_string(s.sign);
  put_text(r.facts, "volume_signs", signs);
  r.text += "volume:\n" + indent(vol.str());
  r.pass = val.pass && ev.pass && ev.balanced_all_t && sus.closed && coframe_ok;
  return r;
}

SuspendOutput suspend_file(const StructureFile& f) {
  SuspendOutput out;
  StructureFile six;
  if (auto fam = family_of(f)) {
    auto sus = suspend_family(*fam);
    out.report.pass = sus.closed;
    out.report.text = "suspension of the family:\n" + indent(sus.str());
    put_bool(out.report.facts, "suspension_closed", sus.closed);
    six.algebra = sus.structure.algebra;
    six.has_family = true;
    six.domain = f.domain;
    six.family.values = {{"F", true, Scalar(), sus.structure.F, 0},
                         {"Psi_plus", true, Scalar(), sus.structure.psi_plus, 0},
                         {"Psi_minus", true, Scalar(), sus.structure.psi_minus, 0}};
    bool t_free = true;
    for (const auto& row : sus.structure.J.matrix())
      for (const auto& x : row) t_free = t_free && x.is_t_free();
    if (t_free) six.J = sus.structure.J;
  } else if (auto s = su2_of(f)) {
    SUnStructure sun = suspend_su2(*s);
    auto v = validate_sun(sun);
    auto b = balanced_sun(sun);
    out.report.pass = v.pass;
    out.report.text = "suspension: " + std::string(v.pass ? "valid" : "INVALID") + " SU(3)-structure\n" +
                      indent(v.str()) + "balanced: " + yes_no(b.pass) + "\n" + indent(b.str());
    put_bool(out.report.facts, "sun", v.pass);
    put_bool(out.report.facts, "balanced_sun", b.pass);
    six.algebra = sun.algebra;
    six.structure.values = {{"F", true, Scalar(), sun.F, 0},
                            {"Psi_plus", true, Scalar(), sun.psi_plus, 0},
                            {"Psi_minus", true, Scalar(), sun.psi_minus, 0}};
    six.J = sun.J;
  } else {
    fail(ErrorKind::Precondition, "the file does not define an SU(2)-structure or family");
  }
  if (!f.algebra.label().empty()) six.algebra.set_label(f.algebra.label() + " x R");
  out.file = render_structure_file(six);
  if (six.has_family) out.file = "# forms on N x I with e6 = dt; closure is taken with d + dt ^ d/dt\n" + out.file;
  return out;
}

namespace {

struct BismutData {
  MetricFrame frame;
  TorsionResult torsion;
  ConnectionSheet connection;
  CurvatureSheet curvature;
};

BismutData bismut_data(const StructureFile& f) {
  auto s = sun_of(f);
  if (!s) fail(ErrorKind::Precondition, "the file does not define F and J");
  if (!f.algebra.is_t_free() || has_t(s->F))
    fail(ErrorKind::Unsupported, "connections are computed for t-free structures only");
  BismutData d{{f.algebra, s->J}, {}, {}, {}};
  d.torsion = torsion_form(d.frame, s->F);
  d.connection = bismut_connection(d.frame, s->F);
  d.curvature = curvature(f.algebra, d.connection);
  return d;
}

}  // namespace

CommandReport bismut_file(const StructureFile& f, unsigned show) {
  BismutData d = bismut_data(f);
  const int n = d.connection.n;
  CommandReport r;
  put_form(r.facts, "torsion", d.torsion.T);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Scalar c = d.torsion.component(i, j, k);
        if (!c.is_zero()) put_scalar(r.facts, "T_" + std::to_string(i) + std::to_string(j) + std::to_string(k), c);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      put_form(r.facts, sup_sub("omega", i, j), d.connection.omega[i - 1][j - 1]);
      put_form(r.facts, sup_sub("Omega", i, j), d.curvature.Omega[i - 1][j - 1]);
    }
  bool structure_ok = true;
  for (const auto& res : first_structure_residual(f.algebra, d.connection)) structure_ok = structure_ok && res.is_zero();
  bool solved = solve_first_structure_equation(f.algebra, d.torsion.T).gamma == d.connection.gamma;
  put_bool(r.facts, "first_structure_equation", structure_ok);
  put_bool(r.facts, "linear_solve_agrees", solved);
  put_bool(r.facts, "preserves_J", preserves(d.connection, d.frame.J));

  if (show & ShowTorsion) {
    r.text += "torsion: T = " + d.torsion.T.str() + "\n";
    std::string comps;
    for (const auto& [k, v] : r.facts)
      if (k.rfind("T_", 0) == 0) comps += "  " + k + " = " + v.text + "\n";
    r.text += comps;
  }
  if (show & ShowConnection) {
    r.text += "connection forms:\n" + indent(d.connection.str());
    r.text += std::string("  first structure equation: ") + (structure_ok ? "ok" : "FAILED") +
              ", linear solve agrees: " + yes_no(solved) + "\n";
  }
  if (show & ShowCurvature) r.text += "curvature forms:\n" + indent(d.curvature.str());
  if (show & ShowNabla) {
    Tensor dR = covariant_derivative_curvature(d.connection, d.curvature, 1)[0];
    r.text += "covariant derivatives of curvature:\n";
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int m : connection_indices(n)) {
          Form a = derivative_form(dR, i, j, m);
          std::string key = "nabla_E" + std::to_string(m) + " " + sup_sub("Omega", i, j);
          put_form(r.facts, key, a);
          if (!a.is_zero()) r.text += "  " + key + " = " + render_factored(a) + "\n";
        }
  }
  r.pass = structure_ok && solved;
  return r;
}

CommandReport holonomy_file(const StructureFile& f, int max_order) {
  BismutData d = bismut_data(f);
  auto h = holonomy_algebra(d.frame, d.connection, max_order);
  CommandReport r;
  r.text = h.str();
  put_int(r.facts, "holonomy_dim", static_cast<long>(h.dimension));
  put_bool(r.facts, "su_n", h.contained_in_su_n);
  put_bool(r.facts, "u_n", h.contained_in_u_n);
  put_bool(r.facts, "holonomy_invariant", h.invariant);
  put_bool(r.facts, "holonomy_subalgebra", h.subalgebra);
  put_bool(r.facts, "full_su", h.is_full_su());
  std::string spans;
  for (size_t k : h.form_span_dimensions) spans += (spans.empty() ? "" : ", ") + std::to_string(k);
  put_text(r.facts, "form_span", spans);
  if (!h.form_span_dimensions.empty()) put_int(r.facts, "curvature_form_span", long(h.form_span_dimensions[0]));
  if (!h.generation_dimensions.empty()) put_int(r.facts, "curvature_span", long(h.generation_dimensions[0]));
  std::string gens;
  for (size_t k : h.generation_dimensions) gens += (gens.empty() ? "" : ", ") + std::to_string(k);
  put_text(r.facts, "holonomy_generations", gens);
  return r;
}

CommandReport full_report(const StructureFile& f, int max_order) {
  CommandReport r = validate_file(f);
  if (r.facts["jacobi"].text != "true") return r;
  if (f.algebra.is_t_free()) {
    auto coh = cohomology_file(f, std::min(2, f.algebra.dimension()));
    coh.text = coh.text.substr(algebra_header(f.algebra).size());
    r.text += "cohomology:\n" + indent(coh.text);
    for (const auto& [k, v] : coh.facts) r.facts[k] = v;
  }
  auto su2 = su2_of(f);
  if (su2) {
    // validate_file already covered the SU(2) checks; add the residual tables
    auto part = su2_section(f, *su2, true);
    r.text += part.text.substr(part.text.find("balanced: "));
    for (const auto& [k, v] : part.facts) r.facts[k] = v;
  }
  if (f.has_family && su2) {
    auto ev = evolve_file(f);
    r.text += ev.text.substr(algebra_header(f.algebra).size());
    for (const auto& [k, v] : ev.facts) r.facts[k] = v;
  }
  if (!su2 && f.algebra.dimension() == 4 && f.form("omega1") && f.form("omega2") && f.form("omega3"))
    merge(r, circle_bundle_section(f));
  if (auto sun = sun_of(f); sun && f.algebra.is_t_free()) {
    if (r.facts.count("orthonormal_frame") && r.facts["orthonormal_frame"].text == "true") {
      merge(r, bismut_file(f, ShowAll));
      merge(r, holonomy_file(f, max_order));
    }
  }
  if (f.basis && f.target) {
    auto bc = verify_basis_change(f.algebra, *f.basis, *f.target);
    put_bool(r.facts, "basis_change", bc.pass);
    r.text += std::string("basis change to the target algebra: ") + (bc.pass ? "verified" : "FAILED") + "\n" +
              indent(bc.str());
    r.pass = r.pass && bc.pass;
  }
  return r;
}

}  // namespace sugeom
