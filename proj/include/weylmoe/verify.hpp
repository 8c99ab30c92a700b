#pragma once

#include <string>

#include "weylmoe/bases.hpp"
#include "weylmoe/channels.hpp"
#include "weylmoe/entropy.hpp"

namespace weylmoe {

/// Which reading of the per-basis terms S(Psi(x_j^s)) is used.
/// `literal` keeps x_j^s = d Tr_H((|h_j^s><h_j^s| x I_K) x) as written,
/// so the operators may have non-unit trace and the PSD-extended entropy
/// applies; it is the normative variant. `normalized` rescales each
/// x_j^s to unit trace and weights its entropy by the outcome
/// probability; diagnostic only.
enum class TheoremVariant { literal, normalized };

struct TheoremReport {
  int d = 0;
  double r = 0.0;
  double p = 0.0;
  double lambda = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;               // lhs - rhs
  Eigen::MatrixXd per_basis_terms;   // (s, j) -> S(Psi(x_j^s))
  TheoremVariant variant = TheoremVariant::literal;
};

/// Hypothesis of the tensor-product bound: d prime and
/// p <= r <= (1/d)(1 - d(d-1)p) (which forces p <= 1/d^2).
bool in_theorem_region(int d, double r, double p);
void require_theorem_region(int d, double r, double p);

/// The unique lambda in [0,1] with
/// r = lambda p + (1-lambda)(1/d)(1 - d(d-1)p); the degenerate case
/// p = 1/d^2 (zero-width region) returns 1.
double decompose_lambda(int d, double r, double p);

/// Right-hand side of the tensor-product bound:
/// chi_dep_closed(d, d^2 p) + (1/d^2) sum_{s,j} S(Psi(x_j^s)) with
/// x_j^s = d Tr_H((|h_j^s><h_j^s| x I_K) x) over the given basis family.
/// `terms_out`, when non-null, receives the d x d table of entropy terms.
double theorem_rhs(int d, double r, double p, const Channel& psi,
                   const DensityOperator& x, const BasisFamily& bases,
                   const EntropyConfig& cfg = {},
                   TheoremVariant variant = TheoremVariant::literal,
                   Eigen::MatrixXd* terms_out = nullptr);

/// Full evaluation of S((Phi x Psi)(x)) >= rhs for the Weyl channel
/// Phi(d, r, p), with the MUB family as the bases. Margin >= -1e-8 is a
/// pass.
TheoremReport theorem_margin(int d, double r, double p, const Channel& psi,
                             const DensityOperator& x,
                             const EntropyConfig& cfg = {},
                             TheoremVariant variant = TheoremVariant::literal);

/// The depolarizing-channel bound: lhs = S((Phi_dep x Id)(x)),
/// rhs = chi_dep_closed(d, q) + (1/d^2) sum S(x_j^s);
/// 0 <= q <= d^2/(d^2-1), d prime. x lives on H x K with dim(x) = d * k.
TheoremReport theorem2_margin(int d, double q, const DensityOperator& x,
                              const EntropyConfig& cfg = {},
                              TheoremVariant variant = TheoremVariant::literal);

/// chi(Phi x Psi) - chi(Phi) - chi(Psi), all three estimated by the
/// multi-start optimizer with seeds derived from `seed`. Phi must satisfy
/// the theorem hypothesis. Product inputs force gap <= 0 up to optimizer
/// tolerance; the tensor-product bound forces gap >= 0 likewise.
double additivity_gap(const ChannelParams& phi_params, const Channel& psi,
                      int starts, RngSeed seed,
                      const EntropyConfig& cfg = {});

/// Uniform sample from the theorem region: p in [0, 1/d^2], then
/// r in [p, (1/d)(1 - d(d-1)p)].
ChannelParams sample_theorem_region(int d, RngSeed seed);

const char* variant_name(TheoremVariant v);

}  // namespace weylmoe
