#pragma once

#include <vector>

#include "weylmoe/linalg.hpp"

namespace weylmoe {

/// Orthonormal basis of C^d; column j of `vectors` is the j-th basis
/// vector. |<v_i|v_j> - delta_ij| <= 1e-12.
struct Basis {
  CMatrix vectors;

  Eigen::Index dim() const { return vectors.rows(); }
  CVector vector(Eigen::Index j) const { return vectors.col(j); }
};

/// d orthonormal bases of C^d, indexed s = 0..d-1, pairwise mutually
/// unbiased: every cross-basis overlap has modulus 1/sqrt(d) to 1e-10.
struct BasisFamily {
  int d = 0;
  std::vector<Basis> bases;
};

bool is_prime(int n);

Basis computational_basis(int d);

/// Fourier basis: vector j has component k equal to
/// (1/sqrt d) exp(2 pi i j k / d).
Basis fourier_basis(int d);

/// Family of d mutually unbiased bases for prime d. Basis s = 0 is the
/// Fourier basis; component k of vector j in basis s is
/// (1/sqrt d) gamma^(s k^2) omega^(j k), omega = exp(2 pi i / d),
/// gamma = omega for odd d and gamma = i for d = 2. Every member is also
/// unbiased with the computational basis.
BasisFamily mub_family(int d);

/// max over i,j of | |<a_i|b_j>| - 1/sqrt(d) |.
double unbiasedness_defect(const Basis& a, const Basis& b);

/// max over i,j of |<v_i|v_j> - delta_ij|; diagnostic for Basis invariants.
double orthonormality_defect(const Basis& b);

}  // namespace weylmoe
