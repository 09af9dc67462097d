#pragma once

// SU(2)-structures on 5-dimensional algebras and SU(n)-structures on
// 2n-dimensional ones.

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace sugeom {

/// A named yes/no outcome with optional detail text.
struct Flag {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// A named form that is expected to vanish.
struct Residual {
  std::string name;
  Form value;
  bool zero() const { return value.is_zero(); }
};

std::string render_flags(const std::vector<Flag>& flags);
std::string render_residuals(const std::vector<Residual>& residuals);
bool all_pass(const std::vector<Flag>& flags);
bool all_zero(const std::vector<Residual>& residuals);

/// Matrix W with W_ab = a(e_a, e_b) for a 2-form a.
Matrix<Scalar> form_matrix(const Form& two_form);

/// Sylvester's criterion.  Entries must be t-free; irrational entries are
/// signed by floating-point evaluation (they are exactly nonzero first).
bool is_positive_definite(const Matrix<Scalar>& m);
bool is_symmetric(const Matrix<Scalar>& m);
int sign_of(const Scalar& s);  // t-free input only
Matrix<Scalar> substitute(const Matrix<Scalar>& m, const Rational& t0);

// ---------------------------------------------------------------------------

struct SU2Structure {
  LieAlgebra algebra;
  Form eta, omega1, omega2, omega3;
};

struct SU2Validation {
  bool pass = false;
  std::vector<Flag> checks;
  Form volume;                           // v = omega_i ^ omega_i
  std::optional<Matrix<Scalar>> metric;  // 5x5 in the e-frame, when constructed
  std::string str() const;
};

/// Parametric structures need sample values of t for the positivity check.
SU2Validation validate_su2(const SU2Structure& s, const std::vector<Rational>& samples = {});

struct ResidualReport {
  bool pass = false;
  std::vector<Residual> residuals;
  std::string str() const;
};

ResidualReport balanced_su2(const SU2Structure& s);  // d(w1^eta), d(w2^eta), d(w3^w3)
ResidualReport hypo(const SU2Structure& s);          // d(w1^eta), d(w2^eta), d w3
/// d(w1^eta), d(w2^eta), d(w3^eta), d(w2^w2), d(w3^w3).
ResidualReport su2_candidate_identities(const SU2Structure& s);

// ---------------------------------------------------------------------------

struct SUnStructure {
  LieAlgebra algebra;
  Form F, psi_plus, psi_minus;
  CoframeMap J;
  int n() const { return algebra.dimension() / 2; }
};

struct SUnValidation {
  bool pass = false;
  std::vector<Flag> checks;
  std::optional<Scalar> normalization;  // psi-volume / F^n
  std::optional<Matrix<Scalar>> metric;
  std::string str() const;
};

/// Metric g(X, Y) = F(X, JY) as a matrix in the e-frame.
Matrix<Scalar> hermitian_metric(const Form& F, const CoframeMap& J);

SUnValidation validate_sun(const SUnStructure& s);

struct SUnBalanced {
  bool pass = false;  // dF^{n-1} = dPsi+ = dPsi- = 0
  std::vector<Residual> residuals;
  Form dF;
  bool kaehler = false;
  bool half_flat = false;  // n = 3 only: dF^2 = 0 and dPsi+ = 0
  std::string str() const;
};

SUnBalanced balanced_sun(const SUnStructure& s);

// ---------------------------------------------------------------------------

struct Restriction {
  SU2Structure structure;
  int dropped = 0;  // frame index removed
  /// ker e^k is a subalgebra, so the 5d algebra is a genuine hypersurface
  /// and pullback commutes with d.
  bool subalgebra = false;
  std::string str() const;
};

/// u: components of U in the frame.  U must be +-e_k with g(U,U) = 1 and
/// g-orthogonal to the other frame vectors.
Restriction restrict_to_hypersurface(const SUnStructure& s, const std::vector<Scalar>& u);

/// F = w3 + eta^e6, Psi+ = w1^eta - w2^e6, Psi- = w2^eta + w1^e6 on the
/// algebra extended by a closed e6; J from F and g = g5 + e6^2.
SUnStructure suspend_su2(const SU2Structure& s);

/// Drop frame index k (1-based) and renumber the rest.
Form drop_generator(const Form& a, int k);
LieAlgebra drop_generator(const LieAlgebra& g, int k);
/// Put a form into a larger algebra (same indices).
Form lift(const Form& a, int dimension);

// ---------------------------------------------------------------------------

struct CircleBundle {
  bool pass = false;  // all preconditions
  std::vector<Flag> checks;
  std::optional<SU2Structure> structure;
  std::string str() const;
};

CircleBundle circle_bundle_structure(const LieAlgebra& x, const Form& omega1, const Form& omega2,
                                     const Form& omega3, const Form& curvature, const Scalar& cos_theta,
                                     const Scalar& sin_theta);

struct ConformalCouple {
  bool pass = false;
  std::vector<Flag> checks;
  Form square1, square2, square3;
  Form d_omega3;
  std::string str() const;
};

ConformalCouple check_conformal_couple(const LieAlgebra& x, const Form& omega1, const Form& omega2,
                                       const Form& omega3);

}  // namespace sugeom
