#include <algorithm>

#include "connection.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "parser.hpp"

using namespace sugeom;
using testing_util::e;

namespace {

CoframeMap standard_j(int n) {
  Matrix<Scalar> m(n, std::vector<Scalar>(n));
  for (int k = 0; k < n; k += 2) {
    m[k][k + 1] = Scalar(-1);
    m[k + 1][k] = Scalar(1);
  }
  return CoframeMap(m);
}

Form standard_f(int n) {
  Form f(n, 2);
  for (int k = 1; k < n; k += 2) f += wedge(e(n, k), e(n, k + 1));
  return f;
}

LieAlgebra from_equations(int n, std::initializer_list<std::pair<int, const char*>> eqs) {
  std::vector<Form> d(n, Form(n, 2));
  for (auto [i, text] : eqs) d[i - 1] = parse_form(text, n);
  return LieAlgebra(n, d);
}

LieAlgebra iwasawa() { return parse_compact("(0,0,0,0,13-24,14+23)"); }
LieAlgebra case_two() {
  return from_equations(6, {{3, "e13 - e24"}, {4, "e14 + e23"}, {5, "-e15 + e26"}, {6, "-e16 - e25"}});
}
LieAlgebra solv6() {
  return from_equations(6, {{3, "e13"}, {4, "-e14"}, {5, "e15"}, {6, "-e16"}});
}
LieAlgebra ex43() {
  return from_equations(8, {{5, "-e13 + e24"}, {6, "-e14 - e23"}, {7, "-2(e15 - e26)"}, {8, "-2(e16 + e25)"}});
}
LieAlgebra ex44(const Rational& c) {
  std::string cs = "(" + to_string(c) + ")", c1 = "(1 + " + to_string(c) + ")";
  std::vector<Form> d(8, Form(8, 2));
  d[2] = parse_form("e13 - e24", 8);
  d[3] = parse_form("e14 + e23", 8);
  d[4] = parse_form(cs + "(e15 - e26)", 8);
  d[5] = parse_form(cs + "(e16 + e25)", 8);
  d[6] = parse_form("-" + c1 + "(e17 - e28)", 8);
  d[7] = parse_form("-" + c1 + "(e18 + e27)", 8);
  return LieAlgebra(8, d);
}

Form w6(const char* s) { return parse_form(s, 6); }
Form w8(const char* s) { return parse_form(s, 8); }

struct Computed {
  MetricFrame frame;
  ConnectionSheet bismut;
  CurvatureSheet R;
};

Computed compute(const LieAlgebra& g, const CoframeMap& J, const Form& F) {
  Computed c{{g, J}, {}, {}};
  c.bismut = bismut_connection(c.frame, F);
  c.R = curvature(g, c.bismut);
  return c;
}

// all nonzero w^i_j with i < j must match the listing exactly
void check_omega(const ConnectionSheet& c, std::vector<std::tuple<int, int, Form>> listing) {
  for (auto& [i, j, f] : listing) CHECK_MESSAGE(c.omega[i - 1][j - 1] == f, "omega^", i, "_", j);
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j) {
      bool listed = std::any_of(listing.begin(), listing.end(), [&](const auto& t) {
        return std::get<0>(t) == i && std::get<1>(t) == j;
      });
      if (!listed) CHECK_MESSAGE(c.omega[i - 1][j - 1].is_zero(), "omega^", i, "_", j, " should vanish");
    }
}

}  // namespace

TEST_CASE("torsion T = J dF") {
  MetricFrame m{iwasawa(), standard_j(6)};
  auto t = torsion_form(m, standard_f(6));
  CHECK(t.T == w6("-e135 - e146 - e236 + e245"));

  Matrix<Scalar> js(6, std::vector<Scalar>(6));
  js[0][1] = Scalar(-1), js[1][0] = Scalar(1);
  js[2][4] = Scalar(-1), js[4][2] = Scalar(1);
  js[3][5] = Scalar(-1), js[5][3] = Scalar(1);
  MetricFrame s{solv6(), CoframeMap(js)};
  Form F = w6("e12 + e35 + e46");
  CHECK(s.algebra.d(F) == w6("2(e135 - e146)"));
  auto ts = torsion_form(s, F);
  CHECK(ts.T == w6("2(e246 - e235)"));
  CHECK(ts.component(2, 3, 5) == Scalar(-2));
  CHECK(ts.component(2, 4, 6) == Scalar(2));
  CHECK(ts.component(3, 2, 5) == Scalar(2));

  MetricFrame flat{LieAlgebra::abelian(6), standard_j(6)};
  CHECK(torsion_form(flat, standard_f(6)).T.is_zero());
}

TEST_CASE("Iwasawa: Bismut connection, curvature and holonomy") {
  Computed c = compute(iwasawa(), standard_j(6), standard_f(6));
  check_omega(c.bismut, {{1, 5, w6("-e3")},
                         {1, 6, w6("-e4")},
                         {2, 5, w6("e4")},
                         {2, 6, w6("-e3")},
                         {3, 5, w6("e1")},
                         {3, 6, w6("e2")},
                         {4, 5, w6("-e2")},
                         {4, 6, w6("e1")}});
  CHECK(c.R.Omega[0][1] == w6("2 e34"));
  CHECK(c.R.Omega[0][2] == w6("-e13 - e24"));
  CHECK(c.R.Omega[1][2] == w6("e14 - e23"));
  CHECK(c.R.Omega[2][3] == w6("2 e12"));

  auto d = covariant_derivative_curvature(c.bismut, c.R, 1);
  CHECK(derivative_form(d[0], 1, 2, 1) == w6("-2(e36 - e45)"));
  CHECK(derivative_form(d[0], 1, 2, 2) == w6("2(e35 + e46)"));
  CHECK(derivative_form(d[0], 3, 4, 3) == w6("2(e16 - e25)"));
  CHECK(derivative_form(d[0], 3, 4, 4) == w6("-2(e15 + e26)"));
  CHECK(render_factored(derivative_form(d[0], 1, 2, 1)) == "-2(e36 - e45)");

  auto h = holonomy_algebra(c.frame, c.bismut);
  REQUIRE(h.generation_dimensions.size() >= 2);
  CHECK(h.generation_dimensions[0] == 4);
  CHECK(h.generation_dimensions[1] == 8);
  CHECK(h.dimension == 8);
  CHECK(h.contained_in_su_n);
  CHECK(h.is_full_su());
  CHECK(h.invariant);
  CHECK(h.subalgebra);
  CHECK(h.form_span_dimensions == std::vector<size_t>{4, 8});
  REQUIRE(h.stabilized_at_order);
  CHECK(*h.stabilized_at_order == 1);
}

TEST_CASE("Levi-Civita and Bismut: two independent paths") {
  for (const auto& g : {iwasawa(), case_two(), solv6()}) {
    Matrix<Scalar> js = standard_j(6).matrix();
    MetricFrame m{g, standard_j(6)};
    Form F = standard_f(6);
    if (g.differentials() == solv6().differentials()) {
      js = Matrix<Scalar>(6, std::vector<Scalar>(6));
      js[0][1] = Scalar(-1), js[1][0] = Scalar(1);
      js[2][4] = Scalar(-1), js[4][2] = Scalar(1);
      js[3][5] = Scalar(-1), js[5][3] = Scalar(1);
      m.J = CoframeMap(js);
      F = w6("e12 + e35 + e46");
    }
    ConnectionSheet lc = levi_civita(m);
    ConnectionSheet b = bismut_connection(m, F);
    for (const auto& r : first_structure_residual(g, lc)) CHECK(r.is_zero());
    for (const auto& r : first_structure_residual(g, b)) CHECK(r.is_zero());
    CHECK(is_metric(lc));
    CHECK(is_metric(b));
    CHECK(preserves(b, m.J));

    ConnectionSheet solved = solve_first_structure_equation(g, b.torsion);
    CHECK(solved.gamma == b.gamma);
    ConnectionSheet solved_lc = solve_first_structure_equation(g, Form(6, 3));
    CHECK(solved_lc.gamma == lc.gamma);

    // Bismut = LC + T/2 componentwise
    auto t = torsion_form(m, F);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
          CHECK(b.gamma[i][j][k] - lc.gamma[i][j][k] == Scalar(Rational(1, 2)) * t.component(k + 1, j + 1, i + 1));
  }
}

TEST_CASE("case (II): recomputed connection and holonomy") {
  Computed c = compute(case_two(), standard_j(6), standard_f(6));
  CHECK(c.frame.algebra.d(standard_f(6)) == w6("2(e134 - e156)"));
  CHECK(c.bismut.torsion == w6("-2(e234 - e256)"));
  // the listed curvature forms
  CHECK(c.R.Omega[0][2] == w6("-e13 - e24"));
  CHECK(c.R.Omega[0][3] == w6("-e14 + e23"));
  CHECK(c.R.Omega[0][4] == w6("-e15 - e26"));
  CHECK(c.R.Omega[0][5] == w6("-e16 + e25"));
  CHECK(c.R.Omega[2][3] == w6("-2 e34"));
  CHECK(c.R.Omega[2][4] == w6("e35 + e46"));
  CHECK(c.R.Omega[2][5] == w6("e36 - e45"));
  CHECK(c.R.Omega[4][5] == w6("-2 e56"));
  auto h = holonomy_algebra(c.frame, c.bismut);
  CHECK(h.dimension == 8);
  CHECK(h.is_full_su());
}

TEST_CASE("6d completely solvable example") {
  Matrix<Scalar> js(6, std::vector<Scalar>(6));
  js[0][1] = Scalar(-1), js[1][0] = Scalar(1);
  js[2][4] = Scalar(-1), js[4][2] = Scalar(1);
  js[3][5] = Scalar(-1), js[5][3] = Scalar(1);
  Computed c = compute(solv6(), CoframeMap(js), w6("e12 + e35 + e46"));
  check_omega(c.bismut, {{1, 3, w6("-e3")},
                         {1, 4, w6("e4")},
                         {1, 5, w6("-e5")},
                         {1, 6, w6("e6")},
                         {2, 3, w6("e5")},
                         {2, 4, w6("-e6")},
                         {2, 5, w6("-e3")},
                         {2, 6, w6("e4")},
                         {3, 5, w6("e2")},
                         {4, 6, w6("-e2")}});
  // w^3_4 vanishes: a nonzero w^3_4 would contradict W^3_4 = e34 + e56
  CHECK(c.R.Omega[0][1] == w6("2(e35 + e46)"));
  CHECK(c.R.Omega[0][2] == w6("-e13 - e25"));
  CHECK(c.R.Omega[0][4] == w6("-e15 + e23"));
  CHECK(c.R.Omega[1][5] == w6("-e14 - e26"));
  CHECK(c.R.Omega[2][3] == w6("e34 + e56"));
  CHECK(c.R.Omega[2][4] == w6("-2 e35"));
  CHECK(c.R.Omega[3][4] == w6("e36 + e45"));
  CHECK(c.R.Omega[3][5] == w6("-2 e46"));
  CHECK(c.R.Omega[4][5] == w6("e34 + e56"));
  auto h = holonomy_algebra(c.frame, c.bismut);
  CHECK(h.dimension == 8);
  CHECK(h.is_full_su());
}

TEST_CASE("8d example: curvature forms and first derivatives") {
  Computed c = compute(ex43(), standard_j(8), standard_f(8));
  CHECK(c.bismut.torsion == w8("e135 + e146 + 2e157 + 2e168 + e236 - e245 + 2e258 - 2e267"));
  CHECK(c.bismut.omega[0][4] == w8("e3"));
  CHECK(c.bismut.omega[4][6] == w8("-2 e1"));
  CHECK(c.R.Omega[6][7] == w8("-8(e12 + e56)"));
  CHECK(c.R.Omega[4][5] == w8("2(3 e12 - e34)"));
  auto d = covariant_derivative_curvature(c.bismut, c.R, 1);
  CHECK(derivative_form(d[0], 3, 4, 5) == w8("-4(e18 - e27)"));
  CHECK(derivative_form(d[0], 3, 4, 6) == w8("4(e17 + e28)"));
  CHECK(derivative_form(d[0], 1, 3, 5) == w8("-2(e37 + e48)"));
  CHECK(derivative_form(d[0], 1, 3, 6) == w8("-2(e38 - e47)"));
  // these two agree with the published values only modulo curvature forms
  Form d212 = derivative_form(d[0], 1, 2, 2), d615 = derivative_form(d[0], 1, 5, 6);
  CHECK(d212 == w8("-16(e57 + e68)") - Scalar(3) * c.R.Omega[4][6]);
  CHECK(d615 == w8("-8(e58 - e67)") - Scalar(2) * c.R.Omega[4][7]);
  auto h = holonomy_algebra(c.frame, c.bismut);
  CHECK(h.dimension == 15);
  CHECK(h.is_full_su());
}

TEST_CASE("8d family at rational values of c") {
  for (const Rational& cv : {Rational(1), Rational(2), Rational(-1, 2), Rational(-3)}) {
    Computed c = compute(ex44(cv), standard_j(8), standard_f(8));
    CHECK(balanced_sun({c.frame.algebra, standard_f(8), Form(8, 4), Form(8, 4), standard_j(8)}).residuals[0].zero());
    CHECK(c.R.Omega[2][3] == w8("-2 e34"));
    Scalar c2 = Scalar(cv) * Scalar(cv);
    CHECK(c.R.Omega[0][4] == -c2 * w8("e15 + e26"));
    auto h = holonomy_algebra(c.frame, c.bismut, 2);
    CHECK_MESSAGE(h.dimension == 15, "c = ", to_string(cv));
    CHECK(h.is_full_su());
  }
}

TEST_CASE("holonomy is independent of frame enumeration order") {
  Computed c = compute(iwasawa(), standard_j(6), standard_f(6));
  std::vector<int> order = {5, 3, 0, 4, 1, 2};
  auto a = holonomy_algebra(c.frame, c.bismut);
  auto b = holonomy_algebra(c.frame, c.bismut, 3, order);
  CHECK(a.dimension == b.dimension);
  CHECK(a.generation_dimensions == b.generation_dimensions);
}

TEST_CASE("flat abelian") {
  Computed c = compute(LieAlgebra::abelian(6), standard_j(6), standard_f(6));
  for (const auto& row : c.bismut.omega)
    for (const auto& f : row) CHECK(f.is_zero());
  for (const auto& row : c.R.Omega)
    for (const auto& f : row) CHECK(f.is_zero());
  auto h = holonomy_algebra(c.frame, c.bismut);
  CHECK(h.dimension == 0);
  CHECK(c.R.str() == "flat\n");
}

TEST_CASE("connection errors") {
  Matrix<Scalar> bad = standard_j(6).matrix();
  bad[1][5] = Scalar(4);  // not orthogonal
  bad[1][0] = Scalar(0);
  MetricFrame m{iwasawa(), CoframeMap(bad)};
  CHECK_THROWS_AS(bismut_connection(m, standard_f(6)), Error);
  MetricFrame ok{iwasawa(), standard_j(6)};
  CHECK_THROWS_AS(bismut_connection(ok, Scalar(2) * standard_f(6)), Error);
}

TEST_CASE("h2 with an irrational basis change") {
  LieAlgebra g = from_equations(6, {{5, "e13 - e24"}, {6, "-2 e12 + e14 + e23 + 2 e34"}});
  Computed c = compute(g, standard_j(6), standard_f(6));
  CHECK(g.d(standard_f(6)) == w6("e136 - e246 + 2e125 - e145 - e235 - 2e345"));
  CHECK(c.bismut.torsion == w6("-2 e126 - e135 - e146 - e236 + e245 + 2 e346"));
  CHECK(c.R.Omega[0][1] == w6("-2(2e12 - e14 - e23 - 3e34)"));
  CHECK(c.R.Omega[0][2] == w6("-(e13 + e24)"));
  CHECK(c.R.Omega[0][3] == w6("-(e14 - e23)"));
  CHECK(c.R.Omega[0][4] == w6("-2e46"));
  CHECK(c.R.Omega[0][5] == w6("2e36"));
  CHECK(c.R.Omega[2][3] == w6("2(3e12 - e14 - e23 - 2e34)"));
  CHECK(c.R.Omega[2][4] == w6("-2e26"));
  CHECK(c.R.Omega[2][5] == w6("2e16"));
  auto h = holonomy_algebra(c.frame, c.bismut);
  CHECK(h.dimension == 8);
  CHECK(h.is_full_su());

  Scalar r3 = parse_scalar("sqrt(3)");
  Scalar z(0), one(1), two(2);
  Matrix<Scalar> m = {{z, -two, r3, one, z, z},   {one, -r3, two, z, z, z},  {z, two, r3, -one, z, z},
                      {one, r3, two, z, z, z},   {z, z, z, z, -r3, -one}, {z, z, z, z, -r3, one}};
  auto r = verify_basis_change(g, m, parse_compact("(0,0,0,0,12,34)"));
  CHECK_MESSAGE(r.pass, r.str());
}

TEST_CASE("h19- with an orthogonal complex structure") {
  LieAlgebra g = parse_compact("(0,0,0,12,23,14-35)");
  // as printed, Je2 = 4e6 and Je6 = -e2/4 is not g-orthogonal
  Matrix<Scalar> printed(6, std::vector<Scalar>(6));
  printed[0][2] = Scalar(1), printed[1][5] = Scalar(4), printed[2][0] = Scalar(-1);
  printed[3][4] = Scalar(-1), printed[4][3] = Scalar(1), printed[5][1] = Scalar(Rational(-1, 4));
  CHECK(CoframeMap(printed).squares_to_minus_identity());
  CHECK_FALSE(CoframeMap(printed).is_orthogonal());

  Matrix<Scalar> js = printed;
  js[1][5] = Scalar(1), js[5][1] = Scalar(-1);
  Form F = w6("-e13 - e26 + e45");
  Computed c = compute(g, CoframeMap(js), F);
  CHECK(g.d(F) == w6("-e124 + e125 - e234 - e235"));
  CHECK(c.bismut.torsion == w6("e146 - e156 - e346 - e356"));
  check_omega(c.bismut, {{1, 2, w6("-1/2 e4")},
                         {1, 4, w6("-1/2 e2 - e6")},
                         {1, 5, w6("1/2 e6")},
                         {1, 6, w6("-1/2 e5")},
                         {2, 3, w6("-1/2 e5")},
                         {2, 4, w6("1/2 e1")},
                         {2, 5, w6("-1/2 e3")},
                         {3, 4, w6("1/2 e6")},  // listed under w^2_6
                         {3, 5, w6("1/2 e2 + e6")},
                         {3, 6, w6("-1/2 e4")},
                         {4, 6, w6("1/2 e3")},
                         {5, 6, w6("1/2 e1")}});
  CHECK(c.R.Omega[0][1] == w6("-1/4 (3 e12 + 2 e16 + e36)"));
  CHECK(c.R.Omega[0][2] == w6("1/2 (e26 + e45)"));
  CHECK(c.R.Omega[0][3] == w6("-3/4 (e14 - e35)"));
  CHECK(c.R.Omega[0][4] == w6("1/4 (2e14 - e15 - e34 - 2e35)"));
  // dw^1_6 + w^1_4 ^ w^4_6 + w^1_5 ^ w^5_6 by hand; sign of e36 differs from the listing
  CHECK(c.R.Omega[0][5] == w6("-1/4 (e16 + 3e23 - 2e36)"));
  CHECK(c.R.Omega[1][3] == w6("1/4 (e24 - 2e46 - e56)"));
  CHECK(c.R.Omega[1][4] == w6("1/4 (e25 + e46 - 2e56)"));
  CHECK(c.R.Omega[1][5] == w6("1/2 (e13 - e45)"));
  auto h = holonomy_algebra(c.frame, c.bismut);
  CHECK(h.dimension == 8);
  CHECK(h.is_full_su());
}

TEST_CASE("8d example with full su(4) curvature") {
  LieAlgebra g = from_equations(8, {{3, "e13 - e24"},
                                    {4, "e14 + e23"},
                                    {5, "-2(e15 - e26)"},
                                    {6, "-2(e16 + e25)"},
                                    {7, "-e13 + e17 + e24 - e28"},
                                    {8, "-e14 + e18 - e23 + e27"}});
  Computed c = compute(g, standard_j(8), standard_f(8));
  CHECK(g.d(standard_f(8)) == w8("2e134 - e138 + e147 - 4e156 + 2e178 + e237 + e248"));
  CHECK(c.bismut.torsion == w8("e137 + e148 - 2e234 + e238 - e247 + 4e256 - 2e278"));
  CHECK(c.bismut.omega[0][6] == w8("e3 - e7"));
  CHECK(c.bismut.omega[4][5] == w8("-4 e2"));
  CHECK(c.R.Omega[0][2] == w8("-2e13 + e17 - 2e24 + e28"));
  CHECK(c.R.Omega[4][5] == w8("-8 e56"));
  CHECK(c.R.Omega[6][7] == w8("-2(e12 + e34 - e38 + e47 + e78)"));
  auto h = holonomy_algebra(c.frame, c.bismut, 1);
  CHECK(h.generation_dimensions[0] == 15);
  CHECK(h.is_full_su());
}

TEST_CASE("8d example with a 6-dimensional holonomy algebra") {
  LieAlgebra g = from_equations(8, {{3, "e13 - e24"},
                                    {4, "e14 + e23"},
                                    {5, "-e15 + e26"},
                                    {6, "-e16 - e25"},
                                    {7, "-e35 + e46"},
                                    {8, "-e36 - e45"}});
  // printed Je4 = -e3 gives J^2 != -1; Je4 = e3 is the standard structure
  Matrix<Scalar> printed = standard_j(8).matrix();
  printed[3][2] = Scalar(-1);
  CHECK_FALSE(CoframeMap(printed).squares_to_minus_identity());

  Form F = standard_f(8);
  Computed c = compute(g, standard_j(8), F);
  CHECK(g.d(F) == w8("2(e134 - e156) - e358 + e468 + e367 + e457"));
  CHECK(g.d(power(F, 3)).is_zero());
  CHECK(c.bismut.torsion == w8("2(e256 - e234) - e467 + e357 + e458 + e368"));
  check_omega(c.bismut, {{1, 3, w8("-e3")}, {1, 4, w8("-e4")}, {1, 5, w8("e5")},  {1, 6, w8("e6")},
                         {2, 3, w8("e4")},  {2, 4, w8("-e3")}, {2, 5, w8("-e6")}, {2, 6, w8("e5")},
                         {3, 4, w8("2e2")}, {3, 7, w8("e5")},  {3, 8, w8("e6")},  {4, 7, w8("-e6")},
                         {4, 8, w8("e5")},  {5, 6, w8("-2e2")}, {5, 7, w8("-e3")}, {5, 8, w8("-e4")},
                         {6, 7, w8("e4")},  {6, 8, w8("-e3")}});
  CHECK(c.R.Omega[0][1] == w8("2(e34 + e56)"));
  CHECK(c.R.Omega[2][3] == w8("2(-e34 + e56)"));
  CHECK(c.R.Omega[6][7] == w8("-2(e56 + e34)"));
  auto h = holonomy_algebra(c.frame, c.bismut);
  CHECK(h.generation_dimensions[0] == 6);
  // the 2-forms W^i_j and nabla W^i_j span 15 dimensions, but the curvature
  // endomorphisms already span an algebra invariant under the connection
  CHECK(h.form_span_dimensions == std::vector<size_t>{6, 15});
  CHECK(h.invariant);
  CHECK(h.subalgebra);
  CHECK(h.dimension == 6);
  CHECK(h.contained_in_su_n);
  CHECK_FALSE(h.is_full_su());
}
