#pragma once

#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "doctest.h"
#include "exterior.hpp"

namespace doctest {
template <>
struct StringMaker<sugeom::Form> {
  static String convert(const sugeom::Form& f) {
    return ("[deg " + std::to_string(f.degree()) + "] " + f.str()).c_str();
  }
};
template <>
struct StringMaker<sugeom::Scalar> {
  static String convert(const sugeom::Scalar& s) { return s.str().c_str(); }
};
}  // namespace doctest

namespace testing_util {

using namespace sugeom;

// Signed sum of unit monomials, e.g. mono(6, {{1,3,6}, {-1,4,5}}) where a
// leading negative index flips the sign of that term.
inline Form forms(int n, std::initializer_list<std::vector<int>> terms) {
  Form out(n, 0);
  bool first = true;
  for (const auto& t : terms) {
    std::vector<int> idx = t;
    int sign = 1;
    if (idx[0] < 0) {
      sign = -1;
      idx[0] = -idx[0];
    }
    Form m = Form::monomial(n, idx, Scalar(sign));
    if (first) {
      out = m;
      first = false;
    } else {
      out += m;
    }
  }
  return out;
}

inline Form e(int n, int i) { return Form::generator(n, i); }

inline Form random_form(std::mt19937& rng, int n, int k, bool parametric = false) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Form f(n, k);
  for (const auto& m : basis_indices(n, k)) {
    int c = coef(rng);
    if (c == 0) continue;
    Scalar s(c);
    if (parametric && coef(rng) > 1) s = s * Scalar::t() + Scalar(coef(rng));
    f.add(m, s);
  }
  return f;
}

}  // namespace testing_util
