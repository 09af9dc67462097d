#pragma once

// Metric connections on a Lie algebra with an orthonormal coframe: torsion
// T = J dF, Levi-Civita and Bismut connections, curvature, covariant
// derivatives of curvature and the infinitesimal holonomy algebra.
//
// Conventions: d a(X, Y) = -a([X, Y]);  nabla_{e_k} e_j = sum_i G^i_jk e_i;
// w^i_j = sum_k G^i_jk e^k;  R^i_jkl = W^i_j(e_k, e_l).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structures.hpp"

namespace sugeom {

struct MetricFrame {
  LieAlgebra algebra;  // e^1..e^n declared orthonormal
  CoframeMap J;
};

/// Connection coefficients G[i][j][k] = G^i_jk (0-based).
using Christoffel = std::vector<std::vector<std::vector<Scalar>>>;

struct ConnectionSheet {
  int n = 0;
  Christoffel gamma;
  std::vector<std::vector<Form>> omega;  // omega[i][j] = w^i_j
  std::vector<Form> tau;                 // torsion 2-forms
  Form torsion;                          // T as a 3-form (zero for Levi-Civita)
  std::string str() const;               // nonzero w^i_j, i < j
};

struct TorsionResult {
  Form T;
  std::vector<Form> tau;  // tau^i = sum_{j<k} T_ijk e^jk
  Scalar component(int i, int j, int k) const;  // 1-based
};

TorsionResult torsion_form(const MetricFrame& m, const Form& F);

ConnectionSheet levi_civita(const MetricFrame& m);
ConnectionSheet bismut_connection(const MetricFrame& m, const Form& F);

/// The metric connection with skew torsion T obtained by solving the first
/// structure equation as a linear system.  Independent of the Koszul path.
ConnectionSheet solve_first_structure_equation(const LieAlgebra& g, const Form& T);

/// de^i + sum_j w^i_j ^ e^j - tau^i for each i.
std::vector<Form> first_structure_residual(const LieAlgebra& g, const ConnectionSheet& c);
bool is_metric(const ConnectionSheet& c);                           // w^i_j + w^j_i = 0
bool preserves(const ConnectionSheet& c, const CoframeMap& J);      // nabla J = 0

struct CurvatureSheet {
  int n = 0;
  std::vector<std::vector<Form>> Omega;
  std::string str() const;  // nonzero W^i_j, i < j
};

CurvatureSheet curvature(const LieAlgebra& g, const ConnectionSheet& c);

/// sum_j W^i_j ^ e^j, printed for diagnostics.
std::vector<Form> bianchi_residual(const CurvatureSheet& R);

/// Sparse tensor with one upper index and a tuple of lower indices
/// (0-based).  Key packs (upper, lower...) in base 16.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, int lower) : n_(n), lower_(lower) {}
  int n() const { return n_; }
  int lower() const { return lower_; }
  const std::map<std::uint64_t, Scalar>& entries() const { return entries_; }
  Scalar at(int upper, const std::vector<int>& lower) const;
  void add(int upper, const std::vector<int>& lower, const Scalar& v);
  static std::uint64_t key(int upper, const std::vector<int>& lower);
  static void unpack(std::uint64_t key, int count, int& upper, std::vector<int>& lower);

 private:
  int n_ = 0, lower_ = 0;
  std::map<std::uint64_t, Scalar> entries_;
};

Tensor curvature_tensor(const CurvatureSheet& R);
/// One more covariant derivative; the direction becomes the last lower index.
Tensor covariant_derivative(const ConnectionSheet& c, const Tensor& S);

/// nabla_{E_m} W^i_j for order 1 (1-based arguments).
Form derivative_form(const Tensor& dR, int i, int j, int m);

/// Iterated derivatives nabla^1 R .. nabla^order R.
std::vector<Tensor> covariant_derivative_curvature(const ConnectionSheet& c, const CurvatureSheet& R, int order);

struct HolonomyReport {
  int n = 0;
  std::vector<size_t> generation_dimensions;  // span after each generation
  std::vector<Matrix<Scalar>> basis;
  size_t dimension = 0;
  bool contained_in_u_n = false;
  bool contained_in_su_n = false;
  std::optional<int> stabilized_at_order;
  /// [w(Z), A] stays in the span for every frame vector Z and basis element A.
  bool invariant = false;
  bool subalgebra = false;  // [A, B] stays in the span
  /// Span of the 2-forms W^i_j, then together with all nabla_{E_m} W^i_j.
  /// Differs from the endomorphism span when R lacks pair symmetry.
  std::vector<size_t> form_span_dimensions;
  bool is_full_su() const;
  std::string str() const;
};

/// Frame vectors are enumerated in the given order (identity when empty).
HolonomyReport holonomy_algebra(const MetricFrame& m, const ConnectionSheet& c, int max_order = 3,
                                const std::vector<int>& frame_order = {});

/// "-2(e36 - e45)" when the rational coefficients share a factor.
std::string render_factored(const Form& a);

}  // namespace sugeom
