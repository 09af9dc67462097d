#pragma once

// Structure files (.alg): a line-oriented format with sections
//
//   [algebra]   dim = n | d e<k> = <expr> | compact = (0,0,12,...) | label = text
//   [structure] <name> = <expr> | J: e1 -> -e2, e2 -> e1, ...
//   [family]    param = t | domain = (-inf, 2/3), (2/3, inf) | <name> = <expr>
//   [basis]     f<k> = <1-form expr>
//   [target]    same statements as [algebra]
//
// Expressions mix scalars and forms: juxtaposition, '*' and '^' between
// forms are wedge products, '^' on a scalar is a rational power, 'i' is the
// imaginary unit (complex values are stored as <name>_plus / <name>_minus).

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace sugeom {

struct Interval {
  std::optional<Rational> lo, hi;  // nullopt: unbounded
  bool contains(const Rational& x) const;
  /// Deterministic interior sample points (a few, spread over the interval).
  std::vector<Rational> samples() const;
  std::string str() const;
};

struct NamedValue {
  std::string name;
  bool is_form = false;
  Scalar scalar;
  Form form;
  int line = 0;
};

struct Section {
  std::vector<NamedValue> values;
  const NamedValue* find(const std::string& name) const;
  bool empty() const { return values.empty(); }
};

struct StructureFile {
  LieAlgebra algebra;
  Section structure;
  std::optional<CoframeMap> J;

  bool has_family = false;
  std::string param = "t";
  std::vector<Interval> domain;
  Section family;

  std::optional<Matrix<Scalar>> basis;  // rows: f^i in terms of e^j
  std::optional<LieAlgebra> target;

  /// Form lookup in [structure] then [family]; nullptr when absent.
  const Form* form(const std::string& name) const;
  std::optional<Scalar> scalar(const std::string& name) const;
};

StructureFile parse_structure_file(const std::string& text);
StructureFile load_structure_file(const std::string& path);

/// Standalone expressions (no named references).
Form parse_form(const std::string& text, int dimension);
Scalar parse_scalar(const std::string& text);

/// Render a structure file back to text accepted by parse_structure_file.
std::string render_structure_file(const StructureFile& file);

}  // namespace sugeom
