#pragma once

// Lie algebras given by structure equations de^i = sum c^i_jk e^jk.

#include <optional>
#include <string>
#include <vector>

#include "exterior.hpp"

namespace sugeom {

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Missing differentials are zero.  Every differential must be a 2-form.
  LieAlgebra(int dimension, std::vector<Form> differentials, std::string label = {});
  static LieAlgebra abelian(int dimension);

  int dimension() const { return dim_; }
  const std::vector<Form>& differentials() const { return d_; }
  const Form& d_generator(int i) const { return d_.at(i - 1); }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  Form d(const Form& a) const;
  bool is_rational() const;
  bool is_t_free() const;
  bool is_abelian() const;

  /// "(0,0,0,12,14)" when every differential is a signed sum of unit
  /// 2-forms; otherwise empty.
  std::string compact() const;
  std::string str() const;  // one "de<i> = ..." line per generator

 private:
  int dim_ = 0;
  std::vector<Form> d_;
  std::string label_;
};

/// Parse "(0,0,0,12,14)" / "(0,0,0,12,23,14-35)".
LieAlgebra parse_compact(const std::string& text);

struct JacobiReport {
  bool pass = true;
  std::vector<std::pair<int, Form>> residuals;  // (i, d(de^i)) for nonzero ones
  std::string str() const;
};

JacobiReport check_jacobi(const LieAlgebra& algebra);

struct CohomologyDegree {
  int degree = 0;
  size_t betti = 0;
  std::vector<Form> representatives;
};

struct CohomologyReport {
  std::vector<CohomologyDegree> degrees;
  std::optional<long> euler_characteristic;  // set when all degrees were computed
  std::string str() const;
};

/// Chevalley-Eilenberg cohomology up to max_degree (clamped to the
/// dimension).  Coefficients must be t-free.
CohomologyReport ce_cohomology(const LieAlgebra& algebra, int max_degree);

/// Matrix of d restricted to k-forms: rows index (k+1)-forms, columns
/// k-forms, both in basis_indices order.
Matrix<Scalar> differential_matrix(const LieAlgebra& algebra, int degree);

/// g + R with a new closed generator e^{n+1} (playing the role of dt).
LieAlgebra extend_by_line(const LieAlgebra& algebra);

/// Central extension by a closed 2-form: new generator e^{n+1} with
/// d e^{n+1} = omega.
LieAlgebra central_extension(const LieAlgebra& algebra, const Form& omega);

/// Is `form` exact (in the image of d on forms of one degree lower)?
bool is_exact(const LieAlgebra& algebra, const Form& form);

struct BasisChangeReport {
  bool pass = false;
  std::vector<Form> computed;  // d f^i written in the f-basis
  std::vector<Form> target;
  /// computed_i = scaling_i * target_i, when such a constant exists for
  /// every i (hint only; never counts as a pass).
  std::optional<std::vector<Scalar>> diagonal_scaling;
  std::string str() const;
};

/// f^i = sum_j M_ij e^j.  Throws Precondition when M is singular.
BasisChangeReport verify_basis_change(const LieAlgebra& algebra, const Matrix<Scalar>& m,
                                      const LieAlgebra& target);

/// Rewrite a form given in the e-basis in terms of f = M e.
Form rewrite_in_basis(const Form& a, const Matrix<Scalar>& m_inverse);

}  // namespace sugeom
