#pragma once

#include "weylmoe/channels.hpp"
#include "weylmoe/linalg.hpp"

namespace weylmoe {

enum class LogBase { two, natural };

struct EntropyConfig {
  LogBase log_base = LogBase::two;
  double eig_clip = 1e-12;
};

/// log in the configured base.
double log_in_base(double x, const EntropyConfig& cfg);

/// -sum lambda log lambda over the spectrum, with 0 log 0 = 0 and
/// eigenvalues below eig_clip treated as zero. Accepts any Hermitian PSD
/// input, unit trace or not; eigenvalues below -1e-8 are an error.
double von_neumann_entropy(const CMatrix& a, const EntropyConfig& cfg = {});

/// Entropy of the spectrum directly (same clipping rules).
double spectrum_entropy(const RVector& eigenvalues, const EntropyConfig& cfg);

/// S(ch(|psi><psi|)).
double output_entropy(const Channel& ch, const CVector& psi,
                      const EntropyConfig& cfg = {});

/// Minimal output entropy of the depolarizing channel:
/// -(1 - ((d-1)/d) q) log(1 - ((d-1)/d) q) - (d-1)(q/d) log(q/d).
/// Accepts 0 <= q <= d^2/(d^2-1).
double chi_dep_closed(int d, double q, const EntropyConfig& cfg = {});

/// Minimal output entropy of the q-c channel; the same expression as
/// chi_dep_closed, valid for 0 <= q <= d/(d-1).
double chi_qc_closed(int d, double q, const EntropyConfig& cfg = {});

/// Result of a multi-start minimal-output-entropy search.
struct ChiEstimate {
  double value = 0.0;       // best output entropy found (upper bound on chi)
  CVector argmin_state;     // pure input achieving `value`
  int starts = 0;
  long iterations_total = 0;
  double spread = 0.0;      // max - min over converged starts
};

/// Multi-start projected-gradient minimization of S(ch(|psi><psi|)) over
/// unit vectors. Each start refines until the objective change is below
/// 1e-11 or 10^4 iterations. Start i draws its state from
/// derive_seed(seed, i), so the selected minimum is identical whether
/// starts run serially or in parallel. threads = 0 picks
/// WEYL_MOE_THREADS or hardware concurrency.
ChiEstimate minimize_output_entropy(const Channel& ch, int starts,
                                    RngSeed seed,
                                    const EntropyConfig& cfg = {},
                                    int threads = 0);

/// Independent brute-force check: min of output_entropy over n_samples
/// random pure states.
double sample_chi_oracle(const Channel& ch, int n_samples, RngSeed seed,
                         const EntropyConfig& cfg = {});

}  // namespace weylmoe
