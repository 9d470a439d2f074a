#include "ncl/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace ncl {

namespace {

std::vector<Index> concat_dims(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_permutation(const std::vector<int>& perm, std::size_t k) {
  if (perm.size() != k) throw std::invalid_argument("permutation length does not match factor count");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= k || seen[p])
      throw std::invalid_argument("invalid permutation");
    seen[p] = true;
  }
}

// Mixed-radix unrank: digits of x in the given dims, most significant first.
void unrank(Index x, const std::vector<Index>& dims, std::vector<Index>& digits) {
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = x % dims[i];
    x /= dims[i];
  }
}

Index rank(const std::vector<Index>& digits, const std::vector<Index>& dims) {
  Index x = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) x = x * dims[i] + digits[i];
  return x;
}

}  // namespace

Operator tensor_product(const Operator& a, const Operator& b) {
  Index da = a.dim(), db = b.dim();
  if (da * db > kMaxOperatorDim) throw guard_error("tensor product exceeds matrix guard");
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.mat(i, j) * b.mat;
  return Operator(std::move(out), concat_dims(a.factor_dims, b.factor_dims));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  Index da = a.dim(), db = b.dim();
  if (da * db > kMaxStateDim) throw guard_error("tensor product exceeds state guard");
  Vector out(da * db);
  for (Index i = 0; i < da; ++i) out.segment(i * db, db) = a.amps(i) * b.amps;
  return PureState(std::move(out), concat_dims(a.factor_dims, b.factor_dims));
}

PureState tensor_power(const PureState& s, int l) {
  if (l < 1) throw std::invalid_argument("tensor power requires l >= 1");
  PureState out = s;
  for (int i = 1; i < l; ++i) out = tensor_product(out, s);
  return out;
}

Operator partial_trace(const Operator& rho, const std::vector<int>& keep) {
  const auto& dims = rho.factor_dims;
  const std::size_t k = dims.size();
  std::vector<bool> kept(k, false);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int idx = keep[i];
    if (idx < 0 || static_cast<std::size_t>(idx) >= k) throw std::invalid_argument("keep index out of range");
    if (kept[idx]) throw std::invalid_argument("duplicate keep index");
    if (i > 0 && keep[i] <= keep[i - 1]) throw std::invalid_argument("keep indices must be ascending");
    kept[idx] = true;
  }

  std::vector<Index> keep_dims, trace_dims;
  std::vector<std::size_t> trace_pos;
  for (std::size_t i = 0; i < k; ++i) {
    if (kept[i]) keep_dims.push_back(dims[i]);
    else {
      trace_dims.push_back(dims[i]);
      trace_pos.push_back(i);
    }
  }
  if (keep_dims.empty()) throw std::invalid_argument("keep set must be non-empty");
  if (trace_dims.empty()) return rho;

  Index dk = 1;
  for (Index d : keep_dims) dk *= d;
  Index dt = 1;
  for (Index d : trace_dims) dt *= d;

  Matrix out = Matrix::Zero(dk, dk);
  std::vector<Index> row_digits(k), col_digits(k), kd(keep_dims.size()), td(trace_dims.size());
  for (Index r = 0; r < dk; ++r) {
    unrank(r, keep_dims, kd);
    for (Index c = 0; c < dk; ++c) {
      std::vector<Index> cd(keep_dims.size());
      unrank(c, keep_dims, cd);
      Cplx sum = 0.0;
      for (Index t = 0; t < dt; ++t) {
        unrank(t, trace_dims, td);
        std::size_t ik = 0, it = 0;
        for (std::size_t f = 0; f < k; ++f) {
          if (kept[f]) {
            row_digits[f] = kd[ik];
            col_digits[f] = cd[ik];
            ++ik;
          } else {
            row_digits[f] = td[it];
            col_digits[f] = td[it];
            ++it;
          }
        }
        sum += rho.mat(rank(row_digits, dims), rank(col_digits, dims));
      }
      out(r, c) = sum;
    }
  }
  return Operator(std::move(out), std::move(keep_dims));
}

Eigen::VectorXd hermitian_eigenvalues(const Operator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::pair<Eigen::VectorXd, Matrix> hermitian_eig(const Operator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat);
  return {es.eigenvalues(), es.eigenvectors()};
}

double min_eigenvalue(const Operator& a) { return hermitian_eigenvalues(a).minCoeff(); }

Operator psd_sqrt(const Operator& a) {
  require_hermitian(a, 1e-10, "psd_sqrt input");
  auto [vals, vecs] = hermitian_eig(a);
  Eigen::VectorXd roots(vals.size());
  for (Index i = 0; i < vals.size(); ++i) {
    double v = vals(i);
    if (v < -1e-10) throw std::invalid_argument("psd_sqrt: operator is not PSD");
    roots(i) = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  Matrix root = vecs * roots.asDiagonal() * vecs.adjoint();
  // Symmetrize away round-off so downstream Hermitian solvers stay happy.
  root = 0.5 * (root + root.adjoint().eval());
  return Operator(std::move(root), a.factor_dims);
}

double uhlmann_fidelity(const Operator& rho, const Operator& sigma) {
  require_same_dim(rho, sigma);
  require_hermitian(rho, 1e-10, "fidelity argument");
  require_hermitian(sigma, 1e-10, "fidelity argument");
  Operator root = psd_sqrt(rho);
  Matrix inner = root.mat * sigma.mat * root.mat;
  inner = 0.5 * (inner + inner.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(inner, Eigen::EigenvaluesOnly);
  double acc = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()(i);
    if (v > 0.0) acc += std::sqrt(v);
  }
  return acc * acc;
}

double trace_distance(const Operator& rho, const Operator& sigma) {
  require_same_dim(rho, sigma);
  Operator diff(rho.mat - sigma.mat, rho.factor_dims);
  require_hermitian(diff, 1e-10, "trace_distance difference");
  Eigen::VectorXd ev = hermitian_eigenvalues(diff);
  return 0.5 * ev.cwiseAbs().sum();
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

namespace {

// Index map for a factor permutation: entry x of the output equals entry
// src_of[x] of the input.
std::vector<Index> reorder_index_map(const std::vector<Index>& dims, const std::vector<int>& perm) {
  check_permutation(perm, dims.size());
  std::vector<Index> new_dims(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) new_dims[i] = dims[perm[i]];
  Index total = 1;
  for (Index d : dims) total *= d;
  std::vector<Index> map(total);
  std::vector<Index> digits(dims.size()), src_digits(dims.size());
  for (Index x = 0; x < total; ++x) {
    unrank(x, new_dims, digits);
    for (std::size_t i = 0; i < dims.size(); ++i) src_digits[perm[i]] = digits[i];
    map[x] = rank(src_digits, dims);
  }
  return map;
}

}  // namespace

Operator reorder_systems(const Operator& x, const std::vector<int>& perm) {
  auto map = reorder_index_map(x.factor_dims, perm);
  Index d = x.dim();
  Matrix out(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out(i, j) = x.mat(map[i], map[j]);
  std::vector<Index> new_dims(x.factor_dims.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_dims[i] = x.factor_dims[perm[i]];
  return Operator(std::move(out), std::move(new_dims));
}

PureState reorder_systems(const PureState& x, const std::vector<int>& perm) {
  auto map = reorder_index_map(x.factor_dims, perm);
  Vector out(x.dim());
  for (Index i = 0; i < x.dim(); ++i) out(i) = x.amps(map[i]);
  std::vector<Index> new_dims(x.factor_dims.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_dims[i] = x.factor_dims[perm[i]];
  return PureState(std::move(out), std::move(new_dims));
}

double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

PureState max_entangled(Index d) {
  if (d * d > kMaxStateDim) throw guard_error("max_entangled exceeds state guard");
  Vector v = Vector::Zero(d * d);
  double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i) v(i * d + i) = amp;
  return PureState(std::move(v), {d, d});
}

}  // namespace ncl
