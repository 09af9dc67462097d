#include "doctest.h"
#include "evolution.hpp"
#include "helpers.hpp"

using namespace sugeom;
using testing_util::e;
using testing_util::forms;

namespace {

Form f5(const std::string& s) { return parse_form(s, 5); }
Form f6(const std::string& s) { return parse_form(s, 6); }

Interval below(const Rational& x) { return {std::nullopt, x}; }
Interval above(const Rational& x) { return {x, std::nullopt}; }

ParamFamily kodaira_thurston_family() {
  ParamFamily f;
  f.structure = {parse_compact("(0,0,0,-23,0)"), f5("e5"), f5("e12 + e3 (e4 - t e5)"), f5("e13 + (e4 - t e5) e2"),
                 f5("e1 (e4 - t e5) + e23")};
  return f;
}

const char* kC = "cbrt((2 - 3t)/2)";
const char* kCinv = "cbrt(2/(2 - 3t))";

std::string sub(std::string s) {
  for (auto [from, to] : {std::pair<std::string, std::string>{"C~", kCinv}, {"C", kC}}) {
    size_t p;
    while ((p = s.find(from)) != std::string::npos) s.replace(p, from.size(), to);
  }
  return s;
}

ParamFamily cube_root_family() {
  ParamFamily f;
  f.structure = {parse_compact("(0,0,0,12,14)"), f5(sub("C e1")),
                 f5(sub("1/2 (C~ - (2 - 3t)/2) e23 + C e24 - C~ e35")), f5(sub("C~ e25 + C e34")),
                 f5(sub("e23 - 1/2 (1 - (2 - 3t)/2 C) e24 + e45"))};
  f.domain = {below(Rational(2, 3)), above(Rational(2, 3))};
  return f;
}

ParamFamily polynomial_family() {
  ParamFamily f;
  f.structure = {parse_compact("(0,0,12,13,23)"), f5("2/(2 - t) e3"), f5("(2 - t)/2 (e15 + e42)"),
                 f5("t (2 - t) (t - 4)/4 e12 + (2 - t)/2 (e14 + e25)"),
                 f5("e12 - t (2 - t)^2 (t - 4)/8 e25 - (2 - t)^2/4 e45")};
  f.domain = {below(Rational(2)), above(Rational(2))};
  return f;
}

ParamFamily constant_abelian() {
  ParamFamily f;
  f.structure = {LieAlgebra::abelian(5), e(5, 1), forms(5, {{2, 4}, {-3, 5}}), forms(5, {{2, 5}, {3, 4}}),
                 forms(5, {{2, 3}, {4, 5}})};
  return f;
}

}  // namespace

TEST_CASE("Kodaira-Thurston family") {
  ParamFamily f = kodaira_thurston_family();
  auto r = verify_balanced_evolution(f);
  CHECK_MESSAGE(r.pass, r.str());
  CHECK(r.balanced_all_t);
  auto h = verify_hypo_evolution(f);
  CHECK_FALSE(h.pass);
  CHECK(h.residuals[2].value == -forms(5, {{1, 5}}));

  auto s = suspend_family(f);
  CHECK(s.closed);
  CHECK(s.structure.F == f6("e14 + e23 - t e15 + e5 e6"));
  CHECK(s.structure.psi_plus == f6("e125 + e345 - (e13 - e24 + t e25) e6"));
  CHECK(s.structure.psi_minus == f6("e135 - e245 + (e12 + e34 - t e35) e6"));
  CHECK_FALSE(s.dF.is_zero());
}

TEST_CASE("cube-root family on (0,0,0,12,14)") {
  ParamFamily f = cube_root_family();
  auto v = validate_su2(f.structure, f.samples());
  CHECK_MESSAGE(v.pass, v.str());

  auto r = verify_balanced_evolution(f);
  CHECK_MESSAGE(r.pass, r.str());
  CHECK(r.balanced_all_t);

  auto s = suspend_family(f);
  CHECK(s.closed);
  CHECK(s.structure.F == f6(sub("e23 - 1/2 e24 + e45 + (2 - 3t)/4 C e24 + C e1 e6")));
  CHECK(s.structure.psi_plus ==
        f6(sub("1/2 e123 - e135 - (2 - 3t)/4 C e123 + C^2 e124 - (C~ e25 + C e34) e6")));
  CHECK(s.structure.psi_minus ==
        f6(sub("e125 + C^2 e134 + (1/2 C~ e23 - (2 - 3t)/4 e23 + C e24 - C~ e35) e6")));

  std::vector<Form> alphas = {f6("e2"), f6("e3"), f6(sub("C e4")), f6(sub("1/2 C~ (e2 + 2 e5) - (2 - 3t)/4 e2")),
                              f6(sub("C e1")), f6("e6")};
  auto c = verify_orthonormal_coframe(s, alphas);
  CHECK_MESSAGE(c.pass, c.str());

  auto vol = family_volume(f);
  CHECK(vol.coefficient == Scalar(2) * parse_scalar(kC));
  REQUIRE(vol.signs.size() == 2);
  CHECK(vol.signs[0].sign * vol.signs[1].sign == -1);
  CHECK(vol.coefficient.eval(Rational(2, 3)) == doctest::Approx(0.0));
}

TEST_CASE("polynomial family on (0,0,12,13,23)") {
  ParamFamily f = polynomial_family();
  auto v = validate_su2(f.structure, f.samples());
  CHECK_MESSAGE(v.pass, v.str());
  auto r = verify_balanced_evolution(f);
  CHECK_MESSAGE(r.pass, r.str());
  CHECK(r.balanced_all_t);

  auto s = suspend_family(f);
  CHECK(s.closed);
  CHECK(s.structure.F == f6("e12 - t (2 - t)^2 (t - 4)/8 e25 - (2 - t)^2/4 e45 + 2/(2 - t) e3 e6"));
  CHECK(s.structure.psi_plus == f6("-e135 + e234 - (2 - t)/2 (t (t - 4)/2 e12 + e14 + e25) e6"));
  CHECK(s.structure.psi_minus == f6("-e134 - e235 + t (t - 4)/2 e123 + (2 - t)/2 (e15 - e24) e6"));

  std::vector<Form> alphas = {f6("e1"), f6("e2"), f6("(2 - t)/2 e5"), f6("t (2 - t) (t - 4)/4 e2 + (2 - t)/2 e4"),
                              f6("2/(2 - t) e3"), f6("e6")};
  auto c = verify_orthonormal_coframe(s, alphas);
  CHECK_MESSAGE(c.pass, c.str());

  auto vol = family_volume(f);
  // by hand: w1^2 = -(2-t)^2/2 e1245, then ^ 2/(2-t) e3; not constant
  CHECK(vol.coefficient == parse_scalar("t - 2"));
  REQUIRE(vol.signs.size() == 2);
  CHECK(vol.signs[0].sign == -1);
  CHECK(vol.signs[1].sign == 1);
}

TEST_CASE("constant family on the abelian algebra") {
  ParamFamily f = constant_abelian();
  CHECK(verify_balanced_evolution(f).pass);
  auto h = verify_hypo_evolution(f);
  CHECK(h.pass);
  auto s = suspend_family(f);
  CHECK(s.closed);
  CHECK(s.dF.is_zero());
  std::vector<Form> alphas;
  for (int i = 1; i <= 6; ++i) alphas.push_back(e(6, i));
  CHECK(verify_orthonormal_coframe(s, alphas).pass);
  CHECK(family_volume(f).coefficient == Scalar(2));

  alphas[0] = Scalar(2) * alphas[0];
  CHECK_FALSE(verify_orthonormal_coframe(s, alphas).pass);
  alphas.pop_back();
  CHECK_THROWS_AS(verify_orthonormal_coframe(s, alphas), Error);
}

TEST_CASE("suspension closedness agrees with the evolution equations") {
  // Perturb known solutions; closedness and (balanced + evolution) must agree.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-2, 2);
  std::vector<ParamFamily> bases = {kodaira_thurston_family(), polynomial_family(), constant_abelian()};
  for (int trial = 0; trial < 30; ++trial) {
    ParamFamily f = bases[trial % bases.size()];
    if (trial >= 3) {
      Form* w[] = {&f.structure.omega1, &f.structure.omega2, &f.structure.omega3};
      Form bump = Scalar(pick(rng)) * Scalar::t() * e(5, 1 + trial % 5);
      Form* target = w[trial % 3];
      *target = *target + wedge(bump, e(5, 1 + (trial + 2) % 5));
    }
    auto r = verify_balanced_evolution(f);
    auto s = suspend_family(f);
    CHECK(s.closed == (r.pass && r.balanced_all_t));
  }
}

TEST_CASE("hypo evolution implies balanced evolution") {
  // w3(t) = w3 - t d eta on (0,0,0,0,12) with eta = e5 solves the hypo equations
  ParamFamily f;
  f.structure = {parse_compact("(0,0,0,0,12)"), e(5, 5), f5("e13 + e42"), f5("e14 + e23"), f5("e12 + e34 - t e12")};
  auto h = verify_hypo_evolution(f);
  CHECK(h.residuals[2].zero());
  if (h.pass) {
    CHECK(verify_balanced_evolution(f).pass);
    CHECK(suspend_family(f).dF.is_zero());
  }
  ParamFamily c = constant_abelian();
  REQUIRE(verify_hypo_evolution(c).pass);
  CHECK(verify_balanced_evolution(c).pass);
  CHECK(suspend_family(c).dF.is_zero());
}

TEST_CASE("d/dt commutes with d on parametric forms") {
  std::mt19937 rng(99);
  LieAlgebra g = parse_compact("(0,0,12,13,23)");
  for (int trial = 0; trial < 25; ++trial) {
    Form a = testing_util::random_form(rng, 5, 1 + trial % 3, true);
    CHECK(partial_t(g.d(a)) == g.d(partial_t(a)));
  }
}
