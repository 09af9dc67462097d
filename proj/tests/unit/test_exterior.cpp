#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace sugeom;
using testing_util::e;
using testing_util::forms;

TEST_CASE("wedge products") {
  CHECK(wedge(e(2, 1), e(2, 2)) == forms(2, {{1, 2}}));
  Form a = forms(4, {{1, 2}, {-3, 4}});
  Form b = forms(4, {{1, 2}, {3, 4}});
  CHECK(wedge(a, b).is_zero());

  // (e12 + e34 + e56)^3: six orderings of three commuting 2-forms
  Form f = forms(6, {{1, 2}, {3, 4}, {5, 6}});
  const int all[6] = {1, 2, 3, 4, 5, 6};
  CHECK(power(f, 3) == Form::monomial(6, all, Scalar(6)));
}

TEST_CASE("descending shorthand normalises") {
  const int idx[2] = {5, 3};
  Form f = Form::monomial(5, idx);
  CHECK(f == forms(5, {{-3, 5}}));
  CHECK(f.str() == "-e35");
}

TEST_CASE("contraction") {
  CHECK(contract_frame(1, forms(3, {{1, 2}})) == e(3, 2));
  CHECK(contract_frame(1, forms(3, {{2, 3}})).is_zero());
  Form F = forms(6, {{1, 4}, {2, 3}, {5, 6}});
  CHECK(-contract_frame(6, F) == e(6, 5));
}

TEST_CASE("coframe map on the Iwasawa torsion") {
  Matrix<Scalar> m(6, std::vector<Scalar>(6));
  // J e1 = -e2, J e2 = e1, J e3 = -e4, J e4 = e3, J e5 = -e6, J e6 = e5
  for (int i = 0; i < 3; ++i) {
    m[2 * i][2 * i + 1] = Scalar(-1);
    m[2 * i + 1][2 * i] = Scalar(1);
  }
  CoframeMap J(m);
  CHECK(J.squares_to_minus_identity());
  Form dF = forms(6, {{1, 3, 6}, {-1, 4, 5}, {-2, 3, 5}, {-2, 4, 6}});
  CHECK(J.apply(dF) == forms(6, {{-1, 3, 5}, {-1, 4, 6}, {-2, 3, 6}, {2, 4, 5}}));
  Form F = forms(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(J.apply(F) == F);
}

TEST_CASE("standard (3,0)-form rotates under J") {
  // Psi = (e1 + i e2)(e3 + i e4)(e5 + i e6), expanded by hand
  Form psi_plus = forms(6, {{1, 3, 5}, {-1, 4, 6}, {-2, 3, 6}, {-2, 4, 5}});
  Form psi_minus = forms(6, {{1, 3, 6}, {1, 4, 5}, {2, 3, 5}, {-2, 4, 6}});
  Matrix<Scalar> m(6, std::vector<Scalar>(6));
  for (int i = 0; i < 3; ++i) {
    m[2 * i][2 * i + 1] = Scalar(-1);
    m[2 * i + 1][2 * i] = Scalar(1);
  }
  CHECK(CoframeMap(m).apply(psi_plus) == psi_minus);
}

TEST_CASE("exterior derivative") {
  std::vector<Form> d(6, Form(6, 2));
  d[4] = forms(6, {{1, 3}, {-2, 4}});
  d[5] = forms(6, {{1, 4}, {2, 3}});
  Form F = forms(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(exterior_derivative(d, F) == forms(6, {{1, 3, 6}, {-1, 4, 5}, {-2, 3, 5}, {-2, 4, 6}}));

  std::vector<Form> d2(5, Form(5, 2));
  d2[2] = forms(5, {{1, 2}});
  d2[3] = forms(5, {{1, 3}});
  d2[4] = forms(5, {{2, 3}});
  CHECK(exterior_derivative(d2, forms(5, {{2, 3}})).is_zero());

  std::vector<Form> flat(4, Form(4, 2));
  CHECK(exterior_derivative(flat, forms(4, {{1}, {-3}})).is_zero());
}

TEST_CASE("partial t") {
  Scalar t = Scalar::t();
  Form w = wedge(e(5, 1), e(5, 4) - t * e(5, 5));
  CHECK(partial_t(w) == forms(5, {{-1, 5}}));
  CHECK(partial_t(forms(5, {{1, 2}})).is_zero());
  Scalar base = (Scalar(2) - Scalar(3) * t) / Scalar(2);
  Form eta = base.pow(Rational(1, 3)) * e(5, 1);
  CHECK(partial_t(eta) == (Scalar(Rational(-1, 2)) * base.pow(Rational(-2, 3))) * e(5, 1));
}

TEST_CASE("span rank") {
  CHECK(span_rank({forms(4, {{1, 2}}), forms(4, {{3, 4}}), forms(4, {{1, 2}, {3, 4}})}).rank == 2);
  CHECK(span_rank(std::vector<Form>{}).rank == 0);
  std::vector<Form> curv = {Scalar(2) * forms(6, {{3, 4}}), forms(6, {{-1, 3}, {-2, 4}}),
                            forms(6, {{1, 4}, {-2, 3}}), Scalar(2) * forms(6, {{1, 2}})};
  CHECK(span_rank(curv).rank == 4);
  Scalar t = Scalar::t();
  std::vector<Form> par = {t * e(3, 1), e(3, 1)};
  CHECK_THROWS(span_rank(par));
  SpanResult r = span_rank(par, Rational(1));
  CHECK(r.parametric);
  CHECK(r.rank == 1);
}

TEST_CASE("rendering") {
  CHECK(forms(6, {{1, 2}, {3, 4}, {5, 6}}).str() == "e12 + e34 + e56");
  CHECK((Scalar(2) * forms(6, {{3, 4}})).str() == "2 e34");
  CHECK((Scalar(Rational(-1, 2)) * e(6, 4)).str() == "-1/2 e4");
  CHECK(Form(6, 2).str() == "0");
}

// ---------------------------------------------------------------------------
// randomized laws

TEST_CASE("graded anticommutativity and associativity") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + trial % 4;
    int p = 1 + trial % 3, q = 1 + (trial / 3) % 3, r = 1;
    Form a = testing_util::random_form(rng, n, p, trial % 2);
    Form b = testing_util::random_form(rng, n, q);
    Form c = testing_util::random_form(rng, n, r, true);
    Scalar sign((p * q) % 2 ? -1 : 1);
    CHECK(wedge(a, b) == sign * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("contraction is an antiderivation") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5;
    int p = 1 + trial % 3, q = 1 + (trial / 3) % 2;
    Form a = testing_util::random_form(rng, n, p);
    Form b = testing_util::random_form(rng, n, q, true);
    std::vector<Scalar> x;
    for (int i = 0; i < n; ++i) x.emplace_back(coef(rng));
    Scalar sign(p % 2 ? -1 : 1);
    CHECK(contract(x, wedge(a, b)) == wedge(contract(x, a), b) + sign * wedge(a, contract(x, b)));
  }
}

TEST_CASE("coframe map is multiplicative and squares to (-1)^k") {
  Matrix<Scalar> m(6, std::vector<Scalar>(6));
  for (int i = 0; i < 3; ++i) {
    m[2 * i][2 * i + 1] = Scalar(-1);
    m[2 * i + 1][2 * i] = Scalar(1);
  }
  CoframeMap J(m);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 1 + trial % 3, q = 1 + trial % 2;
    Form a = testing_util::random_form(rng, 6, p);
    Form b = testing_util::random_form(rng, 6, q);
    CHECK(J.apply(wedge(a, b)) == wedge(J.apply(a), J.apply(b)));
    Scalar sign(p % 2 ? -1 : 1);
    CHECK(J.apply(J.apply(a)) == sign * a);
  }
}

TEST_CASE("span rank ignores ordering") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Form> items;
    for (int i = 0; i < 6; ++i) items.push_back(testing_util::random_form(rng, 5, 2));
    items.push_back(items[0] + items[1]);
    size_t r = span_rank(items).rank;
    std::shuffle(items.begin(), items.end(), rng);
    CHECK(span_rank(items).rank == r);
  }
}
