#pragma once

// One-parameter families of SU(2)-structures and their suspensions
// N x I with e6 = dt.

#include <optional>
#include <string>
#include <vector>

#include "parser.hpp"
#include "structures.hpp"

namespace sugeom {

struct ParamFamily {
  SU2Structure structure;        // coefficients in t
  std::vector<Interval> domain;  // empty: the whole line
  std::vector<Rational> samples() const;
};

/// d_N(a) + e^{n+1} ^ d/dt(a), for a form living on the extended algebra.
Form total_d(const LieAlgebra& extended, const Form& a);

struct EvolutionReport {
  bool pass = false;  // evolution residuals vanish
  std::vector<Residual> residuals;
  bool balanced_all_t = false;
  std::vector<Residual> balanced;
  std::string str() const;
};

/// d/dt(w1^eta) + d w2, d/dt(w2^eta) - d w1, d/dt(w3^w3) + 2 d(w3^eta).
EvolutionReport verify_balanced_evolution(const ParamFamily& f);
/// d/dt(w1^eta) + d w2, d/dt(w2^eta) - d w1, d/dt w3 + d eta.
EvolutionReport verify_hypo_evolution(const ParamFamily& f);

struct SuspendedStructure {
  ParamFamily base;
  SUnStructure structure;  // J from the family metric; algebra is the product with the line
  std::vector<Residual> closedness;  // d F^2, d Psi+, d Psi- with the total differential
  bool closed = false;
  Form dF;  // total dF
  std::string str() const;
};

SuspendedStructure suspend_family(const ParamFamily& f);

struct CoframeReport {
  bool pass = false;
  Matrix<Scalar> gram;  // g(alpha^i, alpha^j)
  std::string str() const;
};

/// Orthonormality of 1-forms for the metric of the suspension: the metric
/// tensor must equal sum_i alpha^i (x) alpha^i.
CoframeReport verify_orthonormal_coframe(const SuspendedStructure& s, const std::vector<Form>& alphas);

struct VolumeReport {
  Scalar coefficient;  // of e12345 in w1 ^ w1 ^ eta
  struct IntervalSign {
    Interval interval;
    int sign = 0;  // +1, -1, or 0 when it changes or vanishes at a sample
  };
  std::vector<IntervalSign> signs;
  std::string str() const;
};

VolumeReport family_volume(const ParamFamily& f);

}  // namespace sugeom
