// types.hpp
// Dense complex operators and pure states carrying explicit tensor-factor structure.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncl {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Raised when a desk-scale size guard would be exceeded. The CLI maps this
/// to exit code 3.
class guard_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest amplitude-vector dimension we materialize (2^20 entries).
inline constexpr Index kMaxStateDim = Index{1} << 20;
/// Largest dense square matrix we materialize.
inline constexpr Index kMaxOperatorDim = 4096;

/// Product of factor dimensions, guarded against `limit`.
Index checked_dim_product(const std::vector<Index>& factor_dims, Index limit);

/// Square complex matrix with the ordered list of subsystem dimensions whose
/// product equals its size. Value type; instances are treated as immutable.
struct Operator {
  Matrix mat;
  std::vector<Index> factor_dims;

  Operator() = default;
  Operator(Matrix m, std::vector<Index> dims);
  explicit Operator(Matrix m);  // single tensor factor

  Index dim() const { return mat.rows(); }

  static Operator identity(Index d);
  static Operator identity(std::vector<Index> dims);
  static Operator zero(std::vector<Index> dims);
};

/// Normalized amplitude vector with tensor-factor structure.
struct PureState {
  Vector amps;
  std::vector<Index> factor_dims;

  PureState() = default;
  PureState(Vector a, std::vector<Index> dims);
  explicit PureState(Vector a);

  Index dim() const { return amps.size(); }
  double norm() const { return amps.norm(); }

  /// Rank-one projector |psi><psi| with the same factor structure.
  Operator projector() const;

  /// Computational basis state |k> in dimension d.
  static PureState basis(Index d, Index k);
};

bool is_hermitian(const Operator& a, double tol = 1e-12);
bool is_density(const Operator& a, double trace_tol = 1e-10, double eig_tol = 1e-10);
bool is_unitary(const Matrix& u, double tol = 1e-12);

/// Throws std::invalid_argument unless `a` is Hermitian within `tol`.
void require_hermitian(const Operator& a, double tol = 1e-12, const std::string& what = "operator");
/// Throws std::invalid_argument unless `a` is a density operator.
void require_density(const Operator& a, double trace_tol = 1e-10, double eig_tol = 1e-10,
                     const std::string& what = "operator");
void require_same_dim(const Operator& a, const Operator& b);

}  // namespace ncl
