#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace weylmoe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Design envelope: dense matrices, d <= 16 single systems, composite
// dimensions <= 256.

/// Explicit 64-bit seed for every random operation in the library.
/// Identical seed + parameters produce bit-identical outputs.
struct RngSeed {
  std::uint64_t value = 0;
};

/// Statelessly derives an independent child seed from (seed, index).
/// Used to give each optimizer start / sweep cell / trial its own stream,
/// so serial and parallel execution select identical results.
RngSeed derive_seed(RngSeed base, std::uint64_t index);

std::mt19937_64 make_rng(RngSeed seed);

/// Hermitian, positive semidefinite, unit-trace matrix.
/// Construction validates: ||A - A^dag||_F <= 1e-12, |Tr A - 1| <= 1e-12,
/// min eigenvalue >= -1e-10.
class DensityOperator {
 public:
  explicit DensityOperator(CMatrix m);
  static DensityOperator pure(const CVector& psi);

  const CMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  CMatrix mat_;
};

/// Kronecker product, dimensions multiply.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Trace over the first tensor factor: x acts on a (d*k)-dimensional
/// space ordered as (first factor, second factor); returns the k x k
/// reduced matrix. Trace is preserved.
CMatrix partial_trace_left(const CMatrix& x, Eigen::Index d, Eigen::Index k);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized
/// as (a + a^dag)/2 first; inputs farther than 1e-10 from Hermitian are
/// rejected. Eigenvalues ascending, eigenvector columns unitary.
std::pair<RVector, CMatrix> hermitian_eig(const CMatrix& a);

/// Unit vector drawn uniformly from the sphere (normalized complex
/// Gaussian).
CVector random_pure_state(Eigen::Index d, RngSeed seed);

/// G G^dag / Tr(G G^dag) for complex Gaussian G.
DensityOperator random_density(Eigen::Index d, RngSeed seed);

/// Haar-distributed isometry, rows >= cols, V^dag V = I. QR of a complex
/// Gaussian matrix with the R-diagonal phases absorbed so the
/// distribution is unitarily invariant.
CMatrix haar_isometry(Eigen::Index rows, Eigen::Index cols, RngSeed seed);

}  // namespace weylmoe
