#include "doctest.h"
#include "helpers.hpp"

using namespace sugeom;
using testing_util::e;
using testing_util::forms;

namespace {

LieAlgebra solvable5() {
  std::vector<Form> d(5, Form(5, 2));
  d[2] = forms(5, {{1, 3}});
  d[3] = forms(5, {{-1, 4}});
  d[4] = forms(5, {{3, 4}});
  return LieAlgebra(5, d);
}

LieAlgebra iwasawa() { return parse_compact("(0,0,0,0,13-24,14+23)"); }

size_t binomial(int n, int k) {
  size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("compact notation") {
  LieAlgebra kt = parse_compact("(0,0,0,0,12)");
  CHECK(kt.dimension() == 5);
  CHECK(kt.d_generator(5) == forms(5, {{1, 2}}));
  for (int i = 1; i <= 4; ++i) CHECK(kt.d_generator(i).is_zero());

  LieAlgebra h19 = parse_compact("(0,0,0,12,23,14-35)");
  CHECK(h19.d_generator(6) == forms(6, {{1, 4}, {-3, 5}}));
  CHECK(h19.compact() == "(0,0,0,12,23,14-35)");

  LieAlgebra ab = parse_compact("(0, 0)");
  CHECK(ab.dimension() == 2);
  CHECK(ab.is_abelian());

  CHECK_THROWS_AS(parse_compact("(0,0,1x)"), Error);
  CHECK_THROWS_AS(parse_compact("(0,0,17)"), Error);
  CHECK_THROWS_AS(parse_compact("(0,0,0,0,0,0,0,0,0,0)"), Error);
  CHECK_THROWS_AS(parse_compact("(0,0,123)"), Error);
}

TEST_CASE("jacobi") {
  for (const char* s : {"(0,0,0,12,14)", "(0,0,12,13,23)", "(0,0,12,13,14+23)", "(0,0,0,0,12)",
                        "(0,0,0,12,23,14-35)", "(0,0,0,0,0,0)"})
    CHECK(check_jacobi(parse_compact(s)).pass);
  CHECK(check_jacobi(solvable5()).pass);

  // d(e34) = de3 ^ e4 - e3 ^ de4 = -e3 ^ e12 = -e123
  JacobiReport bad = check_jacobi(parse_compact("(0,0,0,12,34)"));
  REQUIRE_FALSE(bad.pass);
  REQUIRE(bad.residuals.size() == 1);
  CHECK(bad.residuals[0].first == 5);
  CHECK(bad.residuals[0].second == forms(5, {{-1, 2, 3}}));
}

TEST_CASE("cohomology of the solvable example") {
  CohomologyReport h = ce_cohomology(solvable5(), 2);
  REQUIRE(h.degrees.size() == 3);
  CHECK(h.degrees[0].betti == 1);
  CHECK(h.degrees[1].betti == 2);
  CHECK(h.degrees[1].representatives == std::vector<Form>{e(5, 1), e(5, 2)});
  CHECK(h.degrees[2].betti == 1);
  CHECK(h.degrees[2].representatives == std::vector<Form>{forms(5, {{1, 2}})});
  CHECK_FALSE(h.euler_characteristic);
}

TEST_CASE("cohomology of abelian and Iwasawa algebras") {
  CohomologyReport ab = ce_cohomology(LieAlgebra::abelian(5), 5);
  for (int k = 0; k <= 5; ++k) CHECK(ab.degrees[k].betti == binomial(5, k));
  CHECK(*ab.euler_characteristic == 0);

  CohomologyReport iw = ce_cohomology(iwasawa(), 6);
  CHECK(iw.degrees[1].betti == 4);
  CHECK(iw.degrees[6].betti == 1);
  CHECK(*iw.euler_characteristic == 0);
}

TEST_CASE("cohomology rejects parametric algebras") {
  std::vector<Form> d(3, Form(3, 2));
  d[2] = Scalar::t() * forms(3, {{1, 2}});
  CHECK_THROWS_AS(ce_cohomology(LieAlgebra(3, d), 2), Error);
}

TEST_CASE("euler characteristic and top degree on nilpotent algebras") {
  for (const char* s : {"(0,0,0,12,14)", "(0,0,12,13,23)", "(0,0,12,13,14+23)", "(0,0,0,0,12)",
                        "(0,0,0,12,23,14-35)", "(0,0,0,0,13-24,14+23)"}) {
    LieAlgebra g = parse_compact(s);
    CohomologyReport h = ce_cohomology(g, g.dimension());
    CHECK(h.degrees[0].betti == 1);
    CHECK(h.degrees.back().betti == 1);
    CHECK(*h.euler_characteristic == 0);
  }
}

TEST_CASE("extensions") {
  LieAlgebra kt = parse_compact("(0,0,0,0,12)");
  LieAlgebra s = extend_by_line(kt);
  CHECK(s.dimension() == 6);
  CHECK(s.d_generator(6).is_zero());
  CHECK(s.d_generator(5) == forms(6, {{1, 2}}));
  CHECK(extend_by_line(extend_by_line(LieAlgebra::abelian(2))).is_abelian());

  // torus with Omega = e12 - e34
  LieAlgebra t4 = LieAlgebra::abelian(4);
  LieAlgebra ext = central_extension(t4, forms(4, {{1, 2}, {-3, 4}}));
  CHECK(ext.d_generator(5) == forms(5, {{1, 2}, {-3, 4}}));
  CHECK(central_extension(t4, Form(4, 2)).is_abelian());

  // d e4 = -e23 and a non-closed candidate
  std::vector<Form> d(4, Form(4, 2));
  d[3] = forms(4, {{-2, 3}});
  LieAlgebra x(4, d);
  CHECK_THROWS_AS(central_extension(x, forms(4, {{1, 4}})), Error);
  LieAlgebra n = central_extension(x, forms(4, {{2, 3}}));
  CHECK(check_jacobi(n).pass);
}

TEST_CASE("first betti number of a central extension") {
  std::vector<Form> d(4, Form(4, 2));
  d[3] = forms(4, {{-2, 3}});
  LieAlgebra x(4, d);
  size_t b1 = ce_cohomology(x, 1).degrees[1].betti;
  for (const Form& omega : {forms(4, {{2, 3}}), forms(4, {{1, 2}}), forms(4, {{1, 2}, {-3, 4}}), Form(4, 2)}) {
    if (!x.d(omega).is_zero()) continue;
    size_t expect = b1 + (is_exact(x, omega) ? 1 : 0);
    CHECK(ce_cohomology(central_extension(x, omega), 1).degrees[1].betti == expect);
  }
}

TEST_CASE("basis change verification") {
  LieAlgebra g = parse_compact("(0,0,0,12,14)");
  BasisChangeReport id = verify_basis_change(g, identity_matrix<Scalar>(5), g);
  CHECK(id.pass);

  LieAlgebra ab = LieAlgebra::abelian(4);
  Matrix<Scalar> perm(4, std::vector<Scalar>(4));
  perm[0][2] = perm[1][0] = perm[2][3] = perm[3][1] = Scalar(1);
  CHECK(verify_basis_change(ab, perm, ab).pass);

  Matrix<Scalar> singular(5, std::vector<Scalar>(5));
  CHECK_THROWS_AS(verify_basis_change(g, singular, g), Error);

  // f^4 = 2 e^4 gives d f^4 = 2 f^12: only a diagonal-scaling hint
  Matrix<Scalar> m = identity_matrix<Scalar>(5);
  m[3][3] = Scalar(2);
  BasisChangeReport r = verify_basis_change(g, m, g);
  CHECK_FALSE(r.pass);
  REQUIRE(r.diagonal_scaling);
  CHECK((*r.diagonal_scaling)[3] == Scalar(2));
  CHECK((*r.diagonal_scaling)[4] == Scalar(Rational(1, 2)));
}

TEST_CASE("basis change is symmetric") {
  // f = M e maps the solvable algebra to some L'; then M^-1 maps back.
  LieAlgebra g = solvable5();
  Matrix<Scalar> m = identity_matrix<Scalar>(5);
  m[0][1] = Scalar(1);
  m[4][2] = Scalar(Rational(-1, 3));
  m[2][2] = Scalar(3);
  auto inv = *inverse(m);
  BasisChangeReport forward = verify_basis_change(g, m, g);
  LieAlgebra target(5, forward.computed);
  CHECK(verify_basis_change(g, m, target).pass);
  CHECK(verify_basis_change(target, inv, g).pass);
}
