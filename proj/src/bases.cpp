#include "weylmoe/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weylmoe {

namespace {

Complex unit_phase(double angle) {
  return Complex(std::cos(angle), std::sin(angle));
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

Basis computational_basis(int d) {
  if (d < 1) throw std::invalid_argument("computational_basis: d must be >= 1");
  return Basis{CMatrix::Identity(d, d)};
}

Basis fourier_basis(int d) {
  if (d < 1) throw std::invalid_argument("fourier_basis: d must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix v(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      v(k, j) = scale * unit_phase(2.0 * std::numbers::pi * j * k / d);
    }
  }
  return Basis{std::move(v)};
}

BasisFamily mub_family(int d) {
  if (!is_prime(d)) {
    throw std::invalid_argument("mub_family: d must be prime");
  }
  BasisFamily family;
  family.d = d;
  family.bases.reserve(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int s = 0; s < d; ++s) {
    CMatrix v(d, d);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        // gamma^(s k^2) omega^(j k); for d = 2 gamma = i, i.e. a quarter
        // turn per unit exponent instead of a half turn.
        double angle;
        if (d == 2) {
          angle = std::numbers::pi / 2.0 * (s * k * k) +
                  std::numbers::pi * (j * k);
        } else {
          angle = 2.0 * std::numbers::pi * ((s * k * k + j * k) % d) / d;
        }
        v(k, j) = scale * unit_phase(angle);
      }
    }
    family.bases.push_back(Basis{std::move(v)});
  }
  return family;
}

double unbiasedness_defect(const Basis& a, const Basis& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("unbiasedness_defect: dimension mismatch");
  }
  const double target = 1.0 / std::sqrt(static_cast<double>(a.dim()));
  const CMatrix overlaps = a.vectors.adjoint() * b.vectors;
  double defect = 0.0;
  for (Eigen::Index i = 0; i < overlaps.rows(); ++i) {
    for (Eigen::Index j = 0; j < overlaps.cols(); ++j) {
      defect = std::max(defect, std::abs(std::abs(overlaps(i, j)) - target));
    }
  }
  return defect;
}

double orthonormality_defect(const Basis& b) {
  const CMatrix gram = b.vectors.adjoint() * b.vectors;
  return (gram - CMatrix::Identity(b.dim(), b.dim()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace weylmoe
