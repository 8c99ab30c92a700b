#pragma once

#include <variant>
#include <vector>

#include "weylmoe/linalg.hpp"

namespace weylmoe {

/// Parameters of the two-parameter Weyl mixture family on C^d.
/// Valid region: r, p >= 0 and (d-1)(r + d p) <= 1.
struct ChannelParams {
  int d = 2;
  double r = 0.0;
  double p = 0.0;
};

/// Random-unitary channel x -> sum_{m,n} c[m][n] W_{m,n} x W_{m,n}^dag.
/// coeffs(m, n) >= 0 and sum to 1 (within 1e-12) for a valid channel.
/// Aggregate construction is unchecked on purpose; builders validate.
struct WeylMixSpec {
  int d = 0;
  Eigen::MatrixXd coeffs;
};

/// General channel as a finite Kraus list, sum K^dag K = I_in within 1e-10.
struct KrausChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<CMatrix> kraus;
};

using Channel = std::variant<WeylMixSpec, KrausChannel>;

void validate(const WeylMixSpec& ch);
void validate(const KrausChannel& ch);

int dim_in(const Channel& ch);
int dim_out(const Channel& ch);

/// W_{m,n} = sum_k exp(2 pi i k n / d) |k+m mod d><k|, unitary.
CMatrix weyl_operator(int d, int m, int n);

/// Channel with c[0][0] = 1 - (d-1)(r + d p), c[m][0] = r for m >= 1,
/// c[m][n] = p for n >= 1. Bistochastic. Throws if any weight is negative.
WeylMixSpec weyl_channel(const ChannelParams& params);

WeylMixSpec identity_channel(int d);

/// Weyl mixture with r = p = q/d^2; acts as x -> (1-q) x + (q/d) I.
/// q in [0,1] by default; `extended_range` admits q up to d^2/(d^2-1).
WeylMixSpec depolarizing(int d, double q, bool extended_range = false);

/// Weyl mixture with r = (1/d)(1 - ((d-1)/d) q), p = q/d^2,
/// 0 <= q <= d/(d-1). Measures in the Fourier basis and emits
/// basis-conditional states.
WeylMixSpec qc_channel(int d, double q);

/// Phase damping: c[0][0] = (1+(d-1)lam)/d, c[m][0] = (1-lam)/d for
/// m >= 1, no n >= 1 terms. Leaves Fourier projectors fixed.
WeylMixSpec phase_damping(int d, double lam);

/// E(x) = (1/d) sum_m W_{m,0} x W_{m,0}^dag; projects onto the algebra
/// of Fourier-basis projectors. Idempotent.
DensityOperator conditional_expectation(const DensityOperator& x);
CMatrix conditional_expectation_matrix(const CMatrix& x);

/// Kraus representation; for a Weyl mixture these are sqrt(c) W with
/// zero-weight terms dropped.
std::vector<CMatrix> kraus_operators(const Channel& ch);

/// Channel action on a raw matrix (no state validation; linear).
CMatrix apply_matrix(const Channel& ch, const CMatrix& x);

/// Channel action on a state; the output is validated as a state.
DensityOperator apply(const Channel& ch, const DensityOperator& x);

/// Matrix of the channel action on column-stacked operators:
/// apply(ch, x) = unvec(S vec(x)).
CMatrix superop_matrix(const Channel& ch);

/// outer after inner. Two Weyl mixtures compose to a Weyl mixture
/// (cyclic convolution of the coefficient tables); any Kraus operand
/// yields a Kraus result.
Channel compose(const Channel& outer, const Channel& inner);

/// Convex blend lam * a + (1-lam) * b, 0 <= lam <= 1.
Channel mix(double lam, const Channel& a, const Channel& b);

/// Tensor product channel on the composite space (first factor = a).
KrausChannel tensor(const Channel& a, const Channel& b);

/// (ch x Id)(|Omega><Omega|), |Omega> = sum_k |kk>/sqrt(d_in).
CMatrix choi_matrix(const Channel& ch);

struct CptpDefect {
  double cp = 0.0;  // max(0, -min eig of Choi)
  double tp = 0.0;  // ||Tr_out(d Choi) - I||_F
};
CptpDefect cptp_defect(const Channel& ch);

/// max over `samples` random (U, x) pairs of
/// ||ch(U x U^dag) - U ch(x) U^dag||_F, with U diagonal in the Fourier
/// basis with uniform random phases.
double covariance_defect(const Channel& ch, int samples, RngSeed seed);

/// Kraus operators sliced from a Haar isometry of shape
/// (d * kraus_rank) x d; trace preserving by construction.
KrausChannel random_channel(int d, int kraus_rank, RngSeed seed);

}  // namespace weylmoe
