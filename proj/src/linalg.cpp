#include "weylmoe/linalg.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace weylmoe {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kEigHermitianTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, RngSeed seed) {
  std::mt19937_64 rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

RngSeed derive_seed(RngSeed base, std::uint64_t index) {
  return RngSeed{splitmix64(splitmix64(base.value) ^ splitmix64(index))};
}

std::mt19937_64 make_rng(RngSeed seed) { return std::mt19937_64(seed.value); }

DensityOperator::DensityOperator(CMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("DensityOperator: matrix must be square");
  }
  const double herm = (mat_ - mat_.adjoint()).norm();
  if (herm > kHermitianTol) {
    throw std::invalid_argument("DensityOperator: not Hermitian, defect " +
                                std::to_string(herm));
  }
  const double trace_err = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    throw std::invalid_argument("DensityOperator: trace differs from 1 by " +
                                std::to_string(trace_err));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(
      ((mat_ + mat_.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw std::invalid_argument(
        "DensityOperator: negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityOperator DensityOperator::pure(const CVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) {
    throw std::invalid_argument("DensityOperator::pure: zero vector");
  }
  const CVector unit = psi / n;
  return DensityOperator((unit * unit.adjoint()).eval());
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix partial_trace_left(const CMatrix& x, Eigen::Index d, Eigen::Index k) {
  if (x.rows() != x.cols() || x.rows() != d * k) {
    throw std::invalid_argument(
        "partial_trace_left: expected a square matrix of side d*k");
  }
  CMatrix out = CMatrix::Zero(k, k);
  for (Eigen::Index a = 0; a < d; ++a) {
    out += x.block(a * k, a * k, k, k);
  }
  return out;
}

std::pair<RVector, CMatrix> hermitian_eig(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  }
  const double defect = (a - a.adjoint()).norm();
  if (defect > kEigHermitianTol) {
    throw std::invalid_argument("hermitian_eig: non-Hermitian input, defect " +
                                std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(((a + a.adjoint()) / 2.0).eval());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

CVector random_pure_state(Eigen::Index d, RngSeed seed) {
  if (d < 1) {
    throw std::invalid_argument("random_pure_state: d must be >= 1");
  }
  CVector v = complex_gaussian(d, 1, seed).col(0);
  return v / v.norm();
}

DensityOperator random_density(Eigen::Index d, RngSeed seed) {
  if (d < 1) {
    throw std::invalid_argument("random_density: d must be >= 1");
  }
  const CMatrix g = complex_gaussian(d, d, seed);
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(((m + m.adjoint()) / 2.0).eval());
}

CMatrix haar_isometry(Eigen::Index rows, Eigen::Index cols, RngSeed seed) {
  if (rows < cols || cols < 1) {
    throw std::invalid_argument("haar_isometry: need rows >= cols >= 1");
  }
  const CMatrix g = complex_gaussian(rows, cols, seed);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const CMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  // Absorb the R-diagonal phases so the distribution is exactly Haar.
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0) ? (rjj / mag) : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace weylmoe
