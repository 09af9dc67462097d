#pragma once

// Exterior algebra over an n-dimensional coframe e^1..e^n (n <= 9) with
// Scalar coefficients.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace sugeom {

inline constexpr int kMaxDimension = 9;

/// Strictly increasing index tuple, stored as a bitmask (bit i-1 for e^i).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::uint16_t mask) : mask_(mask) {}
  static MultiIndex single(int i) { return MultiIndex(std::uint16_t(1u << (i - 1))); }

  std::uint16_t mask() const { return mask_; }
  int degree() const { return __builtin_popcount(mask_); }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  std::vector<int> indices() const;
  std::string str() const;  // "e135", or "1" for the empty index

  /// Lexicographic order on the index tuples.
  bool operator<(const MultiIndex& o) const;
  bool operator==(const MultiIndex& o) const { return mask_ == o.mask_; }

 private:
  std::uint16_t mask_ = 0;
};

/// Sign of the permutation sorting the concatenation (a, b); 0 when they
/// share an index.
int wedge_sign(MultiIndex a, MultiIndex b);

class Form {
 public:
  Form() = default;
  Form(int dimension, int degree);
  static Form generator(int dimension, int i);  // e^i
  static Form constant(int dimension, const Scalar& c);
  /// Signed index shorthand: e^{i_1...i_k} in the given order (e.g. {5,3}
  /// gives -e^{35}).  Repeated indices give zero.
  static Form monomial(int dimension, std::span<const int> indices, const Scalar& c = Scalar(1));

  int dimension() const { return dim_; }
  int degree() const { return deg_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(MultiIndex m) const;
  void set(MultiIndex m, const Scalar& c);
  void add(MultiIndex m, const Scalar& c);

  bool is_rational() const;
  bool is_t_free() const;

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const Scalar& c, const Form& a);
  Form& operator+=(const Form& o) { return *this = *this + o; }
  Form& operator-=(const Form& o) { return *this = *this - o; }
  /// Zero forms compare equal whatever their nominal degree.
  bool operator==(const Form& o) const {
    if (is_zero() && o.is_zero()) return dim_ == o.dim_;
    return dim_ == o.dim_ && deg_ == o.deg_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Form& o) const { return !(*this == o); }

  /// Value on frame vectors e_{i_1}, ..., e_{i_k} (any order).
  Scalar evaluate(std::span<const int> frame_indices) const;

  /// Deterministic rendering: "e12 + e34 + e56", "2 e34", "-1/2 e4", "0".
  std::string str() const;

 private:
  int dim_ = 0;
  int deg_ = 0;
  std::map<MultiIndex, Scalar> coeffs_;
};

Form wedge(const Form& a, const Form& b);
Form power(const Form& a, int k);  // a ^ a ^ ... ^ a

/// Interior product i_X a with X given by its components in the dual frame.
Form contract(std::span<const Scalar> x, const Form& a);
Form contract_frame(int i, const Form& a);  // i_{e_i}

/// Coefficient-wise d/dt.
Form partial_t(const Form& a);

/// Lie-algebra differential: the antiderivation determined by the degree-2
/// images of the generators.
Form exterior_derivative(std::span<const Form> generator_differentials, const Form& a);

/// Linear action on the coframe, J e^i = sum_j M_ij e^j, extended to k-forms
/// as an algebra homomorphism.
class CoframeMap {
 public:
  CoframeMap() = default;
  explicit CoframeMap(Matrix<Scalar> m);
  static CoframeMap identity(int n);

  int dimension() const { return static_cast<int>(m_.size()); }
  const Matrix<Scalar>& matrix() const { return m_; }
  const Scalar& at(int i, int j) const { return m_[i - 1][j - 1]; }  // 1-based
  Form image_of_generator(int i) const;
  Form apply(const Form& a) const;
  CoframeMap compose(const CoframeMap& o) const;  // (this o other)
  bool squares_to_minus_identity() const;
  bool is_orthogonal() const;  // M M^T = Id
  std::string str() const;     // "e1 -> -e2, e2 -> e1, ..."

 private:
  Matrix<Scalar> m_;
};

/// Coordinates of a k-form in the basis of increasing multi-indices of
/// degree k, ordered lexicographically.
std::vector<MultiIndex> basis_indices(int dimension, int degree);
std::vector<Scalar> coordinates(const Form& a);
Form from_coordinates(int dimension, int degree, const std::vector<Scalar>& v);

struct SpanResult {
  size_t rank = 0;
  std::vector<size_t> basis_indices;  // positions in the input that were kept
  bool parametric = false;
  // For parametric input: rank at each substituted value of t.
  std::vector<std::pair<Rational, size_t>> ranks_at;
};

/// Rank of a list of forms (or flattened matrices).  Rational input is
/// reduced exactly over Q.  Parametric input needs an evaluation point; the
/// rank is computed at t0 and at a second point chosen by the engine.
SpanResult span_rank(const std::vector<Form>& items, const std::optional<Rational>& t0 = std::nullopt);
SpanResult span_rank(const std::vector<std::vector<Scalar>>& items,
                     const std::optional<Rational>& t0 = std::nullopt);

}  // namespace sugeom
