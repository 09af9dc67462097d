#include "doctest.h"
#include "helpers.hpp"
#include "parser.hpp"

using namespace sugeom;
using testing_util::e;
using testing_util::forms;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_structure_file(text);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Parse);
    return err.what();
  }
  return "";
}

}  // namespace

TEST_CASE("structure equations") {
  StructureFile f = parse_structure_file(
      "[algebra]\n"
      "dim = 6\n"
      "d e5 = e13 - e24\n"
      "d e6 = -2 e12 + e14 + e23 + 2 e34   # sixth differential\n");
  CHECK(f.algebra.dimension() == 6);
  CHECK(f.algebra.d_generator(6) == forms(6, {{1, 4}, {2, 3}}) + Scalar(-2) * forms(6, {{1, 2}}) +
                                        Scalar(2) * forms(6, {{3, 4}}));
  CHECK(f.algebra.d_generator(1).is_zero());
  CHECK(f.algebra.d_generator(5) == forms(6, {{1, 3}, {-2, 4}}));
}

TEST_CASE("case II differentials") {
  StructureFile f = parse_structure_file("dim = 6\nd e3 = e13 - e24\nde4 = e14 + e23\n");
  CHECK(f.algebra.d_generator(3) == forms(6, {{1, 3}, {-2, 4}}));
  CHECK(f.algebra.d_generator(4) == forms(6, {{1, 4}, {2, 3}}));
}

TEST_CASE("parametric forms and wedge notation") {
  StructureFile f = parse_structure_file(
      "[algebra]\ncompact = (0,0,0,0,12)\n"
      "[family]\nparam = t\ndomain = (-inf, inf)\n"
      "eta = e5\n"
      "omega3 = e1^(e4 - t*e5) + e23\n"
      "omega1 = e12 + e3 (e4 - t e5)\n");
  Scalar t = Scalar::t();
  const Form* w3 = f.form("omega3");
  REQUIRE(w3);
  CHECK(*w3 == forms(5, {{1, 4}, {2, 3}}) - t * forms(5, {{1, 5}}));
  CHECK(*f.form("omega1") == forms(5, {{1, 2}, {3, 4}}) - t * forms(5, {{3, 5}}));
  CHECK(f.has_family);
  REQUIRE(f.domain.size() == 1);
  CHECK_FALSE(f.domain[0].lo);
}

TEST_CASE("radical coefficients and named references") {
  StructureFile f = parse_structure_file(
      "(0,0,0,12,14)\n"
      "[family]\n"
      "domain = (-inf, 2/3), (2/3, inf)\n"
      "c = ((2 - 3*t)/2)^(1/3)\n"
      "eta = c e1\n"
      "alpha = 2/(2 - t) * e3\n");
  Scalar t = Scalar::t();
  Scalar c = ((Scalar(2) - Scalar(3) * t) / Scalar(2)).pow(Rational(1, 3));
  CHECK(*f.form("eta") == c * e(5, 1));
  CHECK(*f.scalar("c") == c);
  CHECK(*f.form("alpha") == (Scalar(2) / (Scalar(2) - t)) * e(5, 3));
  REQUIRE(f.domain.size() == 2);
  CHECK(*f.domain[0].hi == Rational(2, 3));
  CHECK(*f.domain[1].lo == Rational(2, 3));
}

TEST_CASE("complex structure map and complex forms") {
  StructureFile f = parse_structure_file(
      "[algebra]\ndim = 6\nd e5 = e13 - e24\nd e6 = e14 + e23\n"
      "[structure]\n"
      "F = e12 + e34 + e56\n"
      "Psi = (e1 + i e2)^(e3 + i*e4)^(e5 + i e6)\n"
      "J: e1 -> -e2, e2 -> e1, e3 -> -e4, e4 -> e3, e5 -> -e6, e6 -> e5\n");
  REQUIRE(f.J);
  CHECK(f.J->squares_to_minus_identity());
  CHECK(f.J->image_of_generator(1) == -e(6, 2));
  const Form* pp = f.form("Psi_plus");
  const Form* pm = f.form("Psi_minus");
  REQUIRE(pp);
  REQUIRE(pm);
  CHECK(*pp == forms(6, {{1, 3, 5}, {-1, 4, 6}, {-2, 3, 6}, {-2, 4, 5}}));
  CHECK(*pm == forms(6, {{1, 3, 6}, {1, 4, 5}, {2, 3, 5}, {-2, 4, 6}}));
}

TEST_CASE("descending shorthand and scalar functions") {
  Form w = parse_form("e24 + e53", 5);
  CHECK(w == forms(5, {{2, 4}, {-3, 5}}));
  CHECK(parse_form("sqrt(3) e3 - 2 e2", 4) == Scalar(3).pow(Rational(1, 2)) * e(4, 3) - Scalar(2) * e(4, 2));
  CHECK(parse_scalar("2^(2/3) * 2^(1/3)") == Scalar(2));
  CHECK(parse_scalar("(t*(2-t)^2*(t-4))/8").diff() ==
        parse_scalar("((2-t)^2*(t-4) - 2*t*(2-t)*(t-4) + t*(2-t)^2)/8"));
}

TEST_CASE("basis and target sections") {
  StructureFile f = parse_structure_file(
      "[algebra]\ncompact = (0,0,0,12,14)\n"
      "[basis]\nf1 = e1\nf2 = e2\nf3 = e3\nf4 = 2 e4\nf5 = e5 + e1\n"
      "[target]\ndim = 5\nd e4 = e12\n");
  REQUIRE(f.basis);
  CHECK((*f.basis)[3][3] == Scalar(2));
  CHECK((*f.basis)[4][0] == Scalar(1));
  REQUIRE(f.target);
  CHECK(f.target->d_generator(4) == forms(5, {{1, 2}}));
  CHECK(f.target->d_generator(5).is_zero());
}

TEST_CASE("errors carry line and column") {
  CHECK(error_of("dim = 5\nd e6 = e12\n").find("line 2") != std::string::npos);
  CHECK(error_of("dim = 5\nd e4 = e17\n").find("exceeds the declared dimension") != std::string::npos);
  CHECK(error_of("dim = 5\nd e4 = e12\nd e4 = e13\n").find("duplicate definition of d e4") != std::string::npos);
  CHECK(error_of("dim = 5\n[structure]\nw = e12\nw = e13\n").find("duplicate definition of 'w'") !=
        std::string::npos);
  CHECK(error_of("dim = 5\nd e4 = e12 +\n").find("line 2, column 13") != std::string::npos);
  CHECK(error_of("dim = 5\nd e4 = e1\n").find("must be a 2-form") != std::string::npos);
  CHECK(error_of("dim = 5\nd e4 = (e12\n").find("expected ')'") != std::string::npos);
  CHECK(error_of("d e4 = e12\n").find("before 'dim") != std::string::npos);
  CHECK(error_of("dim = 4\n[structure]\nw = e12 + e1\n").find("cannot add") != std::string::npos);
  CHECK(error_of("dim = 4\n[bogus]\n").find("unknown section") != std::string::npos);
  CHECK(error_of("dim = 4\n[structure]\nw = foo e12\n").find("unknown name 'foo'") != std::string::npos);
  CHECK(error_of("dim = 4\n[structure]\nJ: e1 -> -e2, e2 -> e1\n").find("every generator") != std::string::npos);
  CHECK(error_of("dim = 4\n[structure]\nw = 1.5 e12\n").find("decimal") != std::string::npos);
  CHECK(error_of("").find("no [algebra]") != std::string::npos);
}

TEST_CASE("rendered files parse back to the same data") {
  const std::string text =
      "[algebra]\nlabel = test algebra (with punctuation.)\ndim = 5\nd e4 = e12\nd e5 = e14\n"
      "[structure]\nw = 1/2 e12 - e35\nc = 3/4\n"
      "[family]\ndomain = (-inf, 2/3)\n"
      "eta = ((2 - 3*t)/2)^(1/3) e1\nomega = t*(2-t)/(4 - t) e25 + 2^(1/3) e34\n";
  StructureFile a = parse_structure_file(text);
  StructureFile b = parse_structure_file(render_structure_file(a));
  CHECK(a.algebra.label() == "test algebra (with punctuation.)");
  CHECK(b.algebra.label() == a.algebra.label());
  CHECK(b.algebra.differentials() == a.algebra.differentials());
  CHECK(*b.form("w") == *a.form("w"));
  CHECK(*b.scalar("c") == *a.scalar("c"));
  CHECK(*b.form("eta") == *a.form("eta"));
  CHECK(*b.form("omega") == *a.form("omega"));
  CHECK(b.domain.size() == 1);
}
