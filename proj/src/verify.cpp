#include "weylmoe/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace weylmoe {

namespace {

constexpr double kDegenerateWidth = 1e-14;

// Reduced operator d * Tr_H((|h><h| x I_K) x), computed as the sandwich
// (<h| x I_K) x (|h> x I_K).
CMatrix reduced_term(const CVector& h, const CMatrix& x, int dim_k) {
  const int d = static_cast<int>(h.size());
  CMatrix embed = CMatrix::Zero(static_cast<Eigen::Index>(d) * dim_k, dim_k);
  for (int a = 0; a < d; ++a) {
    embed.block(static_cast<Eigen::Index>(a) * dim_k, 0, dim_k, dim_k) =
        h(a) * CMatrix::Identity(dim_k, dim_k);
  }
  CMatrix out = static_cast<double>(d) * (embed.adjoint() * x * embed);
  return ((out + out.adjoint()) / 2.0).eval();
}

double basis_term_entropy(const CMatrix& op, const EntropyConfig& cfg,
                          TheoremVariant variant) {
  if (variant == TheoremVariant::literal) {
    return von_neumann_entropy(op, cfg);
  }
  const double weight = op.trace().real();
  if (weight <= cfg.eig_clip) return 0.0;
  return weight * von_neumann_entropy((op / weight).eval(), cfg);
}

int composite_k(int d, const DensityOperator& x, const char* who) {
  const Eigen::Index total = x.dim();
  if (total % d != 0) {
    throw std::invalid_argument(std::string(who) +
                                ": state dimension is not a multiple of d");
  }
  return static_cast<int>(total / d);
}

}  // namespace

const char* variant_name(TheoremVariant v) {
  return v == TheoremVariant::literal ? "literal" : "normalized";
}

bool in_theorem_region(int d, double r, double p) {
  if (!is_prime(d)) return false;
  if (p < 0.0 || r < p) return false;
  const double r_max = (1.0 - d * (d - 1.0) * p) / d;
  return r <= r_max + 1e-15;
}

void require_theorem_region(int d, double r, double p) {
  if (!is_prime(d)) {
    throw std::invalid_argument("theorem hypothesis: d must be prime");
  }
  if (p < 0.0) {
    throw std::invalid_argument("theorem hypothesis: p must be >= 0");
  }
  if (r < p) {
    throw std::invalid_argument("theorem hypothesis: requires p <= r");
  }
  const double r_max = (1.0 - d * (d - 1.0) * p) / d;
  if (r > r_max + 1e-15) {
    throw std::invalid_argument(
        "theorem hypothesis: requires r <= (1/d)(1 - d(d-1)p) = " +
        std::to_string(r_max));
  }
}

double decompose_lambda(int d, double r, double p) {
  require_theorem_region(d, r, p);
  const double upper = (1.0 - d * (d - 1.0) * p) / d;
  const double width = upper - p;
  if (width <= kDegenerateWidth) return 1.0;  // p = 1/d^2 forces r = p
  const double lambda = (upper - r) / width;
  return std::clamp(lambda, 0.0, 1.0);
}

double theorem_rhs(int d, double r, double p, const Channel& psi,
                   const DensityOperator& x, const BasisFamily& bases,
                   const EntropyConfig& cfg, TheoremVariant variant,
                   Eigen::MatrixXd* terms_out) {
  require_theorem_region(d, r, p);
  if (static_cast<int>(bases.bases.size()) != d) {
    throw std::invalid_argument("theorem_rhs: expected d bases");
  }
  const int k = composite_k(d, x, "theorem_rhs");
  if (dim_in(psi) != k || dim_out(psi) != k) {
    throw std::invalid_argument("theorem_rhs: Psi dimension mismatch");
  }
  const double chi_term = chi_dep_closed(d, d * d * p, cfg);
  Eigen::MatrixXd terms(d, d);
  double sum = 0.0;
  for (int s = 0; s < d; ++s) {
    for (int j = 0; j < d; ++j) {
      const CMatrix reduced =
          reduced_term(bases.bases[s].vector(j), x.matrix(), k);
      const double term =
          basis_term_entropy(apply_matrix(psi, reduced), cfg, variant);
      terms(s, j) = term;
      sum += term;
    }
  }
  if (terms_out != nullptr) *terms_out = terms;
  return chi_term + sum / (static_cast<double>(d) * d);
}

TheoremReport theorem_margin(int d, double r, double p, const Channel& psi,
                             const DensityOperator& x,
                             const EntropyConfig& cfg,
                             TheoremVariant variant) {
  require_theorem_region(d, r, p);
  const int k = composite_k(d, x, "theorem_margin");
  if (dim_in(psi) != k || dim_out(psi) != k) {
    throw std::invalid_argument("theorem_margin: Psi dimension mismatch");
  }
  const Channel phi = weyl_channel(ChannelParams{d, r, p});
  const KrausChannel joint = tensor(phi, psi);

  TheoremReport report;
  report.d = d;
  report.r = r;
  report.p = p;
  report.lambda = decompose_lambda(d, r, p);
  report.variant = variant;
  report.lhs =
      von_neumann_entropy(apply_matrix(joint, x.matrix()), cfg);
  report.rhs = theorem_rhs(d, r, p, psi, x, mub_family(d), cfg, variant,
                           &report.per_basis_terms);
  report.margin = report.lhs - report.rhs;
  return report;
}

TheoremReport theorem2_margin(int d, double q, const DensityOperator& x,
                              const EntropyConfig& cfg,
                              TheoremVariant variant) {
  if (!is_prime(d)) {
    throw std::invalid_argument("theorem2_margin: d must be prime");
  }
  const double q_max = static_cast<double>(d) * d / (d * d - 1.0);
  if (q < 0.0 || q > q_max + 1e-12) {
    throw std::invalid_argument("theorem2_margin: q outside [0, " +
                                std::to_string(q_max) + "]");
  }
  const int k = composite_k(d, x, "theorem2_margin");
  const Channel dep = depolarizing(d, q, /*extended_range=*/true);
  const KrausChannel joint = tensor(dep, identity_channel(k));

  TheoremReport report;
  report.d = d;
  report.r = q / (d * d);
  report.p = q / (d * d);
  report.lambda = 1.0;
  report.variant = variant;
  report.lhs = von_neumann_entropy(apply_matrix(joint, x.matrix()), cfg);

  const BasisFamily fam = mub_family(d);
  const double chi_term = chi_dep_closed(d, q, cfg);
  Eigen::MatrixXd terms(d, d);
  double sum = 0.0;
  for (int s = 0; s < d; ++s) {
    for (int j = 0; j < d; ++j) {
      const CMatrix reduced =
          reduced_term(fam.bases[s].vector(j), x.matrix(), k);
      const double term = basis_term_entropy(reduced, cfg, variant);
      terms(s, j) = term;
      sum += term;
    }
  }
  report.per_basis_terms = terms;
  report.rhs = chi_term + sum / (static_cast<double>(d) * d);
  report.margin = report.lhs - report.rhs;
  return report;
}

double additivity_gap(const ChannelParams& phi_params, const Channel& psi,
                      int starts, RngSeed seed, const EntropyConfig& cfg) {
  require_theorem_region(phi_params.d, phi_params.r, phi_params.p);
  const Channel phi = weyl_channel(phi_params);
  const KrausChannel joint = tensor(phi, psi);
  const double chi_joint =
      minimize_output_entropy(joint, starts, derive_seed(seed, 1), cfg).value;
  const double chi_phi =
      minimize_output_entropy(phi, starts, derive_seed(seed, 2), cfg).value;
  const double chi_psi =
      minimize_output_entropy(psi, starts, derive_seed(seed, 3), cfg).value;
  return chi_joint - chi_phi - chi_psi;
}

ChannelParams sample_theorem_region(int d, RngSeed seed) {
  if (!is_prime(d)) {
    throw std::invalid_argument("sample_theorem_region: d must be prime");
  }
  std::mt19937_64 rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = unit(rng) / (d * d);
  const double r_max = (1.0 - d * (d - 1.0) * p) / d;
  const double r = p + unit(rng) * (r_max - p);
  return ChannelParams{d, r, p};
}

}  // namespace weylmoe
