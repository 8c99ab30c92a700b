#include "weylmoe/channels.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "weylmoe/bases.hpp"

namespace weylmoe {

namespace {

constexpr double kCoeffTol = 1e-12;
constexpr double kTpTol = 1e-10;
constexpr double kRangeSlack = 1e-12;

Complex unit_phase(double angle) {
  return Complex(std::cos(angle), std::sin(angle));
}

int mod(int a, int d) { return ((a % d) + d) % d; }

}  // namespace

void validate(const WeylMixSpec& ch) {
  if (ch.d < 1 || ch.coeffs.rows() != ch.d || ch.coeffs.cols() != ch.d) {
    throw std::invalid_argument("WeylMixSpec: coefficient table must be d x d");
  }
  if (ch.coeffs.minCoeff() < -kCoeffTol) {
    throw std::invalid_argument("WeylMixSpec: negative coefficient " +
                                std::to_string(ch.coeffs.minCoeff()));
  }
  const double sum = ch.coeffs.sum();
  if (std::abs(sum - 1.0) > kCoeffTol) {
    throw std::invalid_argument("WeylMixSpec: coefficients sum to " +
                                std::to_string(sum));
  }
}

void validate(const KrausChannel& ch) {
  if (ch.kraus.empty()) {
    throw std::invalid_argument("KrausChannel: empty Kraus list");
  }
  CMatrix sum = CMatrix::Zero(ch.dim_in, ch.dim_in);
  for (const CMatrix& k : ch.kraus) {
    if (k.rows() != ch.dim_out || k.cols() != ch.dim_in) {
      throw std::invalid_argument("KrausChannel: operator shape mismatch");
    }
    sum += k.adjoint() * k;
  }
  const double defect =
      (sum - CMatrix::Identity(ch.dim_in, ch.dim_in)).norm();
  if (defect > kTpTol) {
    throw std::invalid_argument("KrausChannel: not trace preserving, defect " +
                                std::to_string(defect));
  }
}

int dim_in(const Channel& ch) {
  if (const auto* w = std::get_if<WeylMixSpec>(&ch)) return w->d;
  return std::get<KrausChannel>(ch).dim_in;
}

int dim_out(const Channel& ch) {
  if (const auto* w = std::get_if<WeylMixSpec>(&ch)) return w->d;
  return std::get<KrausChannel>(ch).dim_out;
}

CMatrix weyl_operator(int d, int m, int n) {
  if (d < 1 || m < 0 || m >= d || n < 0 || n >= d) {
    throw std::invalid_argument("weyl_operator: indices must lie in [0, d)");
  }
  CMatrix w = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    w((k + m) % d, k) = unit_phase(2.0 * std::numbers::pi * k * n / d);
  }
  return w;
}

WeylMixSpec weyl_channel(const ChannelParams& params) {
  const int d = params.d;
  const double r = params.r;
  const double p = params.p;
  if (d < 1) throw std::invalid_argument("weyl_channel: d must be >= 1");
  if (r < 0.0 || p < 0.0) {
    throw std::invalid_argument("weyl_channel: r and p must be nonnegative");
  }
  const double identity_weight = 1.0 - (d - 1) * (r + d * p);
  if (identity_weight < -kCoeffTol) {
    throw std::invalid_argument(
        "weyl_channel: (d-1)(r+dp) exceeds 1, identity weight " +
        std::to_string(identity_weight));
  }
  WeylMixSpec ch;
  ch.d = d;
  ch.coeffs = Eigen::MatrixXd::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      if (m == 0 && n == 0) {
        ch.coeffs(m, n) = std::max(identity_weight, 0.0);
      } else if (n == 0) {
        ch.coeffs(m, n) = r;
      } else {
        ch.coeffs(m, n) = p;
      }
    }
  }
  return ch;
}

WeylMixSpec identity_channel(int d) {
  return weyl_channel(ChannelParams{d, 0.0, 0.0});
}

WeylMixSpec depolarizing(int d, double q, bool extended_range) {
  const double q_max =
      extended_range ? static_cast<double>(d) * d / (d * d - 1.0) : 1.0;
  if (q < -kRangeSlack || q > q_max + kRangeSlack) {
    throw std::invalid_argument("depolarizing: q outside [0, " +
                                std::to_string(q_max) + "]");
  }
  const double w = q / (d * d);
  return weyl_channel(ChannelParams{d, w, w});
}

WeylMixSpec qc_channel(int d, double q) {
  const double q_max = static_cast<double>(d) / (d - 1);
  if (q < -kRangeSlack || q > q_max + kRangeSlack) {
    throw std::invalid_argument("qc_channel: q outside [0, " +
                                std::to_string(q_max) + "]");
  }
  const double r = (1.0 - (d - 1.0) / d * q) / d;
  const double p = q / (d * d);
  WeylMixSpec ch = weyl_channel(ChannelParams{d, r, p});
  // The q-c table has weight r on every W_{m,0} conjugation including the
  // identity; the generic builder reproduces that identically here, since
  // 1 - (d-1)(r + dp) = r on this parameter line.
  return ch;
}

WeylMixSpec phase_damping(int d, double lam) {
  if (lam < -kRangeSlack || lam > 1.0 + kRangeSlack) {
    throw std::invalid_argument("phase_damping: lambda outside [0, 1]");
  }
  WeylMixSpec ch;
  ch.d = d;
  ch.coeffs = Eigen::MatrixXd::Zero(d, d);
  ch.coeffs(0, 0) = (1.0 + (d - 1) * lam) / d;
  for (int m = 1; m < d; ++m) {
    ch.coeffs(m, 0) = (1.0 - lam) / d;
  }
  return ch;
}

CMatrix conditional_expectation_matrix(const CMatrix& x) {
  const int d = static_cast<int>(x.rows());
  CMatrix out = CMatrix::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    const CMatrix w = weyl_operator(d, m, 0);
    out += w * x * w.adjoint();
  }
  return out / static_cast<double>(d);
}

DensityOperator conditional_expectation(const DensityOperator& x) {
  CMatrix e = conditional_expectation_matrix(x.matrix());
  return DensityOperator(((e + e.adjoint()) / 2.0).eval());
}

std::vector<CMatrix> kraus_operators(const Channel& ch) {
  if (const auto* k = std::get_if<KrausChannel>(&ch)) return k->kraus;
  const auto& w = std::get<WeylMixSpec>(ch);
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(w.d) * w.d);
  for (int m = 0; m < w.d; ++m) {
    for (int n = 0; n < w.d; ++n) {
      const double c = w.coeffs(m, n);
      if (c < 0.0) {
        throw std::invalid_argument(
            "kraus_operators: negative Weyl mixture weight");
      }
      if (c > 0.0) {
        ops.push_back(std::sqrt(c) * weyl_operator(w.d, m, n));
      }
    }
  }
  return ops;
}

CMatrix apply_matrix(const Channel& ch, const CMatrix& x) {
  if (x.rows() != dim_in(ch) || x.cols() != dim_in(ch)) {
    throw std::invalid_argument("apply: state dimension mismatch");
  }
  if (const auto* w = std::get_if<WeylMixSpec>(&ch)) {
    CMatrix out = CMatrix::Zero(w->d, w->d);
    for (int m = 0; m < w->d; ++m) {
      for (int n = 0; n < w->d; ++n) {
        const double c = w->coeffs(m, n);
        if (c == 0.0) continue;
        const CMatrix op = weyl_operator(w->d, m, n);
        out += c * (op * x * op.adjoint());
      }
    }
    return out;
  }
  const auto& k = std::get<KrausChannel>(ch);
  CMatrix out = CMatrix::Zero(k.dim_out, k.dim_out);
  for (const CMatrix& op : k.kraus) {
    out += op * x * op.adjoint();
  }
  return out;
}

DensityOperator apply(const Channel& ch, const DensityOperator& x) {
  CMatrix out = apply_matrix(ch, x.matrix());
  return DensityOperator(((out + out.adjoint()) / 2.0).eval());
}

CMatrix superop_matrix(const Channel& ch) {
  // Column-stacking convention: vec(K x K^dag) = (conj(K) kron K) vec(x).
  const int din = dim_in(ch);
  const int dout = dim_out(ch);
  CMatrix s = CMatrix::Zero(dout * dout, din * din);
  if (const auto* w = std::get_if<WeylMixSpec>(&ch)) {
    for (int m = 0; m < w->d; ++m) {
      for (int n = 0; n < w->d; ++n) {
        const double c = w->coeffs(m, n);
        if (c == 0.0) continue;
        const CMatrix op = weyl_operator(w->d, m, n);
        s += c * kron(op.conjugate(), op);
      }
    }
    return s;
  }
  for (const CMatrix& op : std::get<KrausChannel>(ch).kraus) {
    s += kron(op.conjugate(), op);
  }
  return s;
}

Channel compose(const Channel& outer, const Channel& inner) {
  if (dim_in(outer) != dim_out(inner)) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  const auto* wo = std::get_if<WeylMixSpec>(&outer);
  const auto* wi = std::get_if<WeylMixSpec>(&inner);
  if (wo && wi) {
    // Conjugation by W_a W_b equals conjugation by W_{a+b}: the composed
    // mixture is the cyclic convolution of the two tables.
    const int d = wo->d;
    WeylMixSpec out;
    out.d = d;
    out.coeffs = Eigen::MatrixXd::Zero(d, d);
    for (int m1 = 0; m1 < d; ++m1) {
      for (int n1 = 0; n1 < d; ++n1) {
        const double a = wo->coeffs(m1, n1);
        if (a == 0.0) continue;
        for (int m2 = 0; m2 < d; ++m2) {
          for (int n2 = 0; n2 < d; ++n2) {
            out.coeffs(mod(m1 + m2, d), mod(n1 + n2, d)) +=
                a * wi->coeffs(m2, n2);
          }
        }
      }
    }
    return out;
  }
  KrausChannel out;
  out.dim_in = dim_in(inner);
  out.dim_out = dim_out(outer);
  for (const CMatrix& a : kraus_operators(outer)) {
    for (const CMatrix& b : kraus_operators(inner)) {
      out.kraus.push_back(a * b);
    }
  }
  return out;
}

Channel mix(double lam, const Channel& a, const Channel& b) {
  if (lam < -kRangeSlack || lam > 1.0 + kRangeSlack) {
    throw std::invalid_argument("mix: lambda outside [0, 1]");
  }
  lam = std::clamp(lam, 0.0, 1.0);
  if (dim_in(a) != dim_in(b) || dim_out(a) != dim_out(b)) {
    throw std::invalid_argument("mix: dimension mismatch");
  }
  const auto* wa = std::get_if<WeylMixSpec>(&a);
  const auto* wb = std::get_if<WeylMixSpec>(&b);
  if (wa && wb) {
    WeylMixSpec out;
    out.d = wa->d;
    out.coeffs = lam * wa->coeffs + (1.0 - lam) * wb->coeffs;
    return out;
  }
  KrausChannel out;
  out.dim_in = dim_in(a);
  out.dim_out = dim_out(a);
  for (const CMatrix& k : kraus_operators(a)) {
    if (lam > 0.0) out.kraus.push_back(std::sqrt(lam) * k);
  }
  for (const CMatrix& k : kraus_operators(b)) {
    if (lam < 1.0) out.kraus.push_back(std::sqrt(1.0 - lam) * k);
  }
  return out;
}

KrausChannel tensor(const Channel& a, const Channel& b) {
  KrausChannel out;
  out.dim_in = dim_in(a) * dim_in(b);
  out.dim_out = dim_out(a) * dim_out(b);
  const auto ka = kraus_operators(a);
  const auto kb = kraus_operators(b);
  out.kraus.reserve(ka.size() * kb.size());
  for (const CMatrix& x : ka) {
    for (const CMatrix& y : kb) {
      out.kraus.push_back(kron(x, y));
    }
  }
  return out;
}

CMatrix choi_matrix(const Channel& ch) {
  const int din = dim_in(ch);
  const int dout = dim_out(ch);
  CMatrix choi = CMatrix::Zero(dout * din, dout * din);
  for (int k = 0; k < din; ++k) {
    for (int l = 0; l < din; ++l) {
      CMatrix unit = CMatrix::Zero(din, din);
      unit(k, l) = Complex(1.0, 0.0);
      CMatrix ekl = CMatrix::Zero(din, din);
      ekl(k, l) = Complex(1.0, 0.0);
      choi += kron(apply_matrix(ch, unit), ekl);
    }
  }
  return choi / static_cast<double>(din);
}

CptpDefect cptp_defect(const Channel& ch) {
  const int din = dim_in(ch);
  const int dout = dim_out(ch);
  const CMatrix choi = choi_matrix(ch);
  const auto [eigs, vecs] = hermitian_eig(choi);
  CptpDefect defect;
  defect.cp = std::max(0.0, -eigs.minCoeff());
  const CMatrix reduced =
      partial_trace_left((static_cast<double>(din) * choi).eval(), dout, din);
  defect.tp = (reduced - CMatrix::Identity(din, din)).norm();
  return defect;
}

double covariance_defect(const Channel& ch, int samples, RngSeed seed) {
  const int d = dim_in(ch);
  const CMatrix f = fourier_basis(d).vectors;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, 2 * i));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    CVector phases(d);
    for (int j = 0; j < d; ++j) phases(j) = unit_phase(angle(rng));
    const CMatrix u = f * phases.asDiagonal() * f.adjoint();
    const CMatrix x = random_density(d, derive_seed(seed, 2 * i + 1)).matrix();
    const CMatrix lhs = apply_matrix(ch, (u * x * u.adjoint()).eval());
    const CMatrix rhs = u * apply_matrix(ch, x) * u.adjoint();
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

KrausChannel random_channel(int d, int kraus_rank, RngSeed seed) {
  if (kraus_rank < 1) {
    throw std::invalid_argument("random_channel: kraus_rank must be >= 1");
  }
  const CMatrix v = haar_isometry(
      static_cast<Eigen::Index>(d) * kraus_rank, d, seed);
  KrausChannel ch;
  ch.dim_in = d;
  ch.dim_out = d;
  ch.kraus.reserve(kraus_rank);
  for (int i = 0; i < kraus_rank; ++i) {
    ch.kraus.push_back(v.block(i * d, 0, d, d));
  }
  return ch;
}

}  // namespace weylmoe
