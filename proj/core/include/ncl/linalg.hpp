// linalg.hpp
// Dense complex linear-algebra kernel: tensor products, partial traces,
// Hermitian eigendecomposition, PSD square roots, fidelity and trace distance.
//
// Conventions: all operations are pure; transposition is always with respect
// to the computational basis; tolerances are absolute (1e-10 for algebraic
// identities, 1e-9 for chained square-root computations).
#pragma once

#include <utility>
#include <vector>

#include "ncl/types.hpp"

namespace ncl {

/// Kronecker product; factor lists concatenate.
Operator tensor_product(const Operator& a, const Operator& b);
PureState tensor_product(const PureState& a, const PureState& b);

/// l-fold Kronecker power of a state (l >= 1).
PureState tensor_power(const PureState& s, int l);

/// Trace out every factor not listed in `keep` (ascending positions into
/// factor_dims). Trace is preserved: Tr(result) = Tr(rho).
Operator partial_trace(const Operator& rho, const std::vector<int>& keep);

/// Eigenvalues of a Hermitian operator, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Operator& a);

/// Eigendecomposition (values ascending, matching eigenvector columns).
std::pair<Eigen::VectorXd, Matrix> hermitian_eig(const Operator& a);

double min_eigenvalue(const Operator& a);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clipped to
/// zero; anything below -1e-10 is rejected as not PSD.
Operator psd_sqrt(const Operator& a);

/// Uhlmann fidelity (Tr |sqrt(rho) sqrt(sigma)|)^2 for PSD operators of equal
/// dimension, computed as (sum_i sqrt(eig_i(sqrt(rho) sigma sqrt(rho))))^2.
double uhlmann_fidelity(const Operator& rho, const Operator& sigma);

/// (1/2) sum |eig(rho - sigma)|.
double trace_distance(const Operator& rho, const Operator& sigma);

/// Permutes tensor factors: output factor k is input factor perm[k].
/// The identity permutation is a no-op and reorder(reorder(x,p),inv(p)) = x.
Operator reorder_systems(const Operator& x, const std::vector<int>& perm);
PureState reorder_systems(const PureState& x, const std::vector<int>& perm);

std::vector<int> inverse_permutation(const std::vector<int>& perm);

/// Frobenius distance ||a - b||_F.
double frobenius_distance(const Matrix& a, const Matrix& b);

/// Maximally entangled state (1/sqrt(d)) sum_i |i>|i> on C^d x C^d.
PureState max_entangled(Index d);

}  // namespace ncl
