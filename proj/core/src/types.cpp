#include "ncl/types.hpp"

#include <Eigen/Eigenvalues>

namespace ncl {

Index checked_dim_product(const std::vector<Index>& factor_dims, Index limit) {
  if (factor_dims.empty()) throw std::invalid_argument("factor_dims must be non-empty");
  Index prod = 1;
  for (Index d : factor_dims) {
    if (d < 1) throw std::invalid_argument("factor dimensions must be positive");
    if (prod > limit / d) throw guard_error("dimension product exceeds size guard");
    prod *= d;
  }
  return prod;
}

Operator::Operator(Matrix m, std::vector<Index> dims) : mat(std::move(m)), factor_dims(std::move(dims)) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("operator matrix must be square");
  if (checked_dim_product(factor_dims, kMaxOperatorDim) != mat.rows())
    throw std::invalid_argument("factor_dims product does not match operator dimension");
}

Operator::Operator(Matrix m) : mat(std::move(m)) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("operator matrix must be square");
  if (mat.rows() < 1) throw std::invalid_argument("empty operator");
  factor_dims = {mat.rows()};
}

Operator Operator::identity(Index d) { return identity(std::vector<Index>{d}); }

Operator Operator::identity(std::vector<Index> dims) {
  Index d = checked_dim_product(dims, kMaxOperatorDim);
  return Operator(Matrix::Identity(d, d), std::move(dims));
}

Operator Operator::zero(std::vector<Index> dims) {
  Index d = checked_dim_product(dims, kMaxOperatorDim);
  return Operator(Matrix::Zero(d, d), std::move(dims));
}

PureState::PureState(Vector a, std::vector<Index> dims) : amps(std::move(a)), factor_dims(std::move(dims)) {
  if (checked_dim_product(factor_dims, kMaxStateDim) != amps.size())
    throw std::invalid_argument("factor_dims product does not match state dimension");
}

PureState::PureState(Vector a) : amps(std::move(a)) {
  if (amps.size() < 1) throw std::invalid_argument("empty state vector");
  factor_dims = {amps.size()};
}

Operator PureState::projector() const {
  if (dim() > kMaxOperatorDim) throw guard_error("projector dimension exceeds matrix guard");
  return Operator(amps * amps.adjoint(), factor_dims);
}

PureState PureState::basis(Index d, Index k) {
  if (k < 0 || k >= d) throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(d);
  v(k) = 1.0;
  return PureState(std::move(v));
}

bool is_hermitian(const Operator& a, double tol) {
  return (a.mat - a.mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_density(const Operator& a, double trace_tol, double eig_tol) {
  if (!is_hermitian(a, 1e-10)) return false;
  if (std::abs(a.mat.trace().real() - 1.0) > trace_tol) return false;
  if (std::abs(a.mat.trace().imag()) > trace_tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -eig_tol;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix res = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return res.cwiseAbs().maxCoeff() <= tol;
}

void require_hermitian(const Operator& a, double tol, const std::string& what) {
  if (!is_hermitian(a, tol)) throw std::invalid_argument(what + " is not Hermitian");
}

void require_density(const Operator& a, double trace_tol, double eig_tol, const std::string& what) {
  if (!is_density(a, trace_tol, eig_tol)) throw std::invalid_argument(what + " is not a density operator");
}

void require_same_dim(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
}

}  // namespace ncl
