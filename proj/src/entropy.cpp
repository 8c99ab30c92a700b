#include "weylmoe/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylmoe/parallel.hpp"

namespace weylmoe {

namespace {

constexpr double kNegEigError = -1e-8;
constexpr double kObjectiveTol = 1e-11;  // per-start stopping rule
constexpr int kMaxIterations = 10000;
constexpr double kRangeSlack = 1e-12;

double ln_of_base(const EntropyConfig& cfg) {
  return cfg.log_base == LogBase::two ? std::numbers::ln2 : 1.0;
}

// t log t in the configured base, with t <= clip treated as 0.
double plogp(double t, double clip, double ln_base) {
  if (t <= clip) return 0.0;
  return t * std::log(t) / ln_base;
}

/// Output entropy of a fixed Kraus list as a function of the pure input,
/// with an analytic gradient through the spectral decomposition.
class OutputEntropyObjective {
 public:
  OutputEntropyObjective(const Channel& ch, const EntropyConfig& cfg)
      : kraus_(kraus_operators(ch)),
        dim_in_(dim_in(ch)),
        dim_out_(dim_out(ch)),
        cfg_(cfg),
        ln_base_(ln_of_base(cfg)) {}

  Eigen::Index input_dim() const { return dim_in_; }

  CMatrix output_state(const CVector& psi) const {
    CMatrix rho = CMatrix::Zero(dim_out_, dim_out_);
    for (const CMatrix& k : kraus_) {
      const CVector v = k * psi;
      rho.noalias() += v * v.adjoint();
    }
    return rho;
  }

  double value(const CVector& psi) const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(output_state(psi),
                                              Eigen::EigenvaluesOnly);
    return spectrum_entropy(es.eigenvalues(), cfg_);
  }

  // Returns the objective and fills `grad` with the Euclidean gradient of
  // the entropy seen as a function on the real sphere S^{2D-1}:
  // grad = -2 (Phi^*(ln rho) psi + psi) / ln(base).
  double value_and_grad(const CVector& psi, CVector& grad) const {
    std::vector<CVector> images;
    images.reserve(kraus_.size());
    CMatrix rho = CMatrix::Zero(dim_out_, dim_out_);
    for (const CMatrix& k : kraus_) {
      images.push_back(k * psi);
      rho.noalias() += images.back() * images.back().adjoint();
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
    const RVector& eigs = es.eigenvalues();
    const CMatrix& vecs = es.eigenvectors();

    const double f = spectrum_entropy(eigs, cfg_);

    RVector log_eigs(eigs.size());
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
      log_eigs(i) = std::log(std::max(eigs(i), 1e-300));
    }
    const CMatrix log_rho =
        vecs * log_eigs.asDiagonal() * vecs.adjoint();

    CVector pull = CVector::Zero(dim_in_);
    for (std::size_t i = 0; i < kraus_.size(); ++i) {
      pull.noalias() += kraus_[i].adjoint() * (log_rho * images[i]);
    }
    grad = (-2.0 / ln_base_) * (pull + psi);
    return f;
  }

 private:
  std::vector<CMatrix> kraus_;
  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
  EntropyConfig cfg_;
  double ln_base_;
};

struct StartResult {
  double value = std::numeric_limits<double>::infinity();
  CVector state;
  long iterations = 0;
  bool converged = false;
};

// Projected gradient descent on the unit sphere with backtracking
// (Armijo) line search and an adaptive initial step.
StartResult local_minimize(const OutputEntropyObjective& obj, CVector psi) {
  StartResult result;
  double step = 1.0;
  CVector grad(psi.size());
  double f = obj.value_and_grad(psi, grad);
  for (long iter = 0; iter < kMaxIterations; ++iter) {
    result.iterations = iter + 1;
    CVector tangent = grad - psi * psi.dot(grad).real();
    const double tangent_norm2 = tangent.squaredNorm();
    if (tangent_norm2 < 1e-26) {
      result.converged = true;
      break;
    }
    bool accepted = false;
    double f_next = f;
    CVector psi_next;
    int backtracks = 0;
    for (; backtracks < 60; ++backtracks) {
      psi_next = (psi - step * tangent).normalized();
      f_next = obj.value(psi_next);
      if (f_next <= f - 1e-4 * step * tangent_norm2) {
        accepted = true;
        break;
      }
      step *= 0.5;
      if (step < 1e-18) break;
    }
    if (!accepted) {
      result.converged = true;
      break;
    }
    if (backtracks == 0) step = std::min(step * 2.0, 1e6);
    const double delta = f - f_next;
    psi = psi_next;
    f = obj.value_and_grad(psi, grad);
    if (delta < kObjectiveTol) {
      result.converged = true;
      break;
    }
  }
  result.value = f;
  result.state = psi;
  return result;
}

}  // namespace

int resolve_threads(int override_count) {
  if (override_count > 0) return override_count;
  if (const char* env = std::getenv("WEYL_MOE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

double log_in_base(double x, const EntropyConfig& cfg) {
  return std::log(x) / ln_of_base(cfg);
}

double spectrum_entropy(const RVector& eigenvalues, const EntropyConfig& cfg) {
  if (cfg.eig_clip <= 0.0) {
    throw std::invalid_argument("EntropyConfig: eig_clip must be positive");
  }
  const double ln_base = ln_of_base(cfg);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues(i);
    if (lambda < kNegEigError) {
      throw std::invalid_argument(
          "entropy: eigenvalue " + std::to_string(lambda) +
          " below the PSD tolerance");
    }
    sum -= plogp(lambda, cfg.eig_clip, ln_base);
  }
  return sum;
}

double von_neumann_entropy(const CMatrix& a, const EntropyConfig& cfg) {
  const auto [eigs, vecs] = hermitian_eig(a);
  return spectrum_entropy(eigs, cfg);
}

double output_entropy(const Channel& ch, const CVector& psi,
                      const EntropyConfig& cfg) {
  if (psi.size() != dim_in(ch)) {
    throw std::invalid_argument("output_entropy: state dimension mismatch");
  }
  return von_neumann_entropy(
      apply_matrix(ch, (psi * psi.adjoint()).eval()), cfg);
}

double chi_dep_closed(int d, double q, const EntropyConfig& cfg) {
  const double q_max = static_cast<double>(d) * d / (d * d - 1.0);
  if (q < -kRangeSlack || q > q_max + kRangeSlack) {
    throw std::invalid_argument("chi_dep_closed: q outside [0, " +
                                std::to_string(q_max) + "]");
  }
  const double ln_base = ln_of_base(cfg);
  const double top = 1.0 - (d - 1.0) / d * q;
  return -plogp(top, 0.0, ln_base) - (d - 1) * plogp(q / d, 0.0, ln_base);
}

double chi_qc_closed(int d, double q, const EntropyConfig& cfg) {
  const double q_max = static_cast<double>(d) / (d - 1);
  if (q < -kRangeSlack || q > q_max + kRangeSlack) {
    throw std::invalid_argument("chi_qc_closed: q outside [0, " +
                                std::to_string(q_max) + "]");
  }
  const double ln_base = ln_of_base(cfg);
  const double top = 1.0 - (d - 1.0) / d * q;
  return -plogp(top, 0.0, ln_base) - (d - 1) * plogp(q / d, 0.0, ln_base);
}

ChiEstimate minimize_output_entropy(const Channel& ch, int starts,
                                    RngSeed seed, const EntropyConfig& cfg,
                                    int threads) {
  if (starts < 1) {
    throw std::invalid_argument("minimize_output_entropy: starts must be >= 1");
  }
  const OutputEntropyObjective obj(ch, cfg);
  std::vector<StartResult> results(starts);
  parallel_for(starts, threads, [&](int i) {
    const CVector psi0 =
        random_pure_state(obj.input_dim(), derive_seed(seed, i));
    results[i] = local_minimize(obj, psi0);
  });

  int best = 0;
  for (int i = 1; i < starts; ++i) {
    if (results[i].value < results[best].value) best = i;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  long total_iterations = 0;
  for (const StartResult& r : results) {
    total_iterations += r.iterations;
    if (r.converged) {
      lo = std::min(lo, r.value);
      hi = std::max(hi, r.value);
    }
  }
  if (!(lo <= hi)) {
    lo = hi = results[best].value;
  }

  ChiEstimate estimate;
  estimate.value = results[best].value;
  estimate.argmin_state = results[best].state;
  estimate.starts = starts;
  estimate.iterations_total = total_iterations;
  estimate.spread = hi - lo;
  return estimate;
}

double sample_chi_oracle(const Channel& ch, int n_samples, RngSeed seed,
                         const EntropyConfig& cfg) {
  if (n_samples < 1) {
    throw std::invalid_argument("sample_chi_oracle: n_samples must be >= 1");
  }
  const OutputEntropyObjective obj(ch, cfg);
  std::vector<double> values(n_samples);
  parallel_for(n_samples, 0, [&](int i) {
    values[i] = obj.value(random_pure_state(obj.input_dim(),
                                            derive_seed(seed, i)));
  });
  return *std::min_element(values.begin(), values.end());
}

}  // namespace weylmoe
