#include "weylmoe/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace weylmoe {

namespace {

nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("channel JSON: matrix must be a row array");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("channel JSON: ragged matrix rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& cell = row.at(c);
      if (!cell.is_array() || cell.size() != 2) {
        throw std::invalid_argument(
            "channel JSON: entries must be [re, im] pairs");
      }
      m(i, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

nlohmann::json channel_to_json(const Channel& ch) {
  nlohmann::json j;
  if (const auto* w = std::get_if<WeylMixSpec>(&ch)) {
    j["kind"] = "weyl";
    j["d"] = w->d;
    nlohmann::json coeffs = nlohmann::json::array();
    for (int m = 0; m < w->d; ++m) {
      nlohmann::json row = nlohmann::json::array();
      for (int n = 0; n < w->d; ++n) row.push_back(w->coeffs(m, n));
      coeffs.push_back(std::move(row));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
  }
  const auto& k = std::get<KrausChannel>(ch);
  if (k.dim_in != k.dim_out) {
    throw std::invalid_argument(
        "channel JSON: only square Kraus channels are serializable");
  }
  j["kind"] = "kraus";
  j["d"] = k.dim_in;
  nlohmann::json ops = nlohmann::json::array();
  for (const CMatrix& op : k.kraus) ops.push_back(matrix_to_json(op));
  j["kraus"] = std::move(ops);
  return j;
}

Channel channel_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int d = j.at("d").get<int>();
  if (d < 1) throw std::invalid_argument("channel JSON: d must be >= 1");
  if (kind == "weyl") {
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != d) {
      throw std::invalid_argument("channel JSON: coeffs must be d x d");
    }
    WeylMixSpec w;
    w.d = d;
    w.coeffs = Eigen::MatrixXd(d, d);
    for (int m = 0; m < d; ++m) {
      const auto& row = coeffs.at(m);
      if (static_cast<int>(row.size()) != d) {
        throw std::invalid_argument("channel JSON: coeffs must be d x d");
      }
      for (int n = 0; n < d; ++n) w.coeffs(m, n) = row.at(n).get<double>();
    }
    validate(w);
    return w;
  }
  if (kind == "kraus") {
    KrausChannel k;
    k.dim_in = d;
    k.dim_out = d;
    for (const auto& op : j.at("kraus")) {
      CMatrix m = matrix_from_json(op);
      if (m.rows() != d || m.cols() != d) {
        throw std::invalid_argument("channel JSON: Kraus operator not d x d");
      }
      k.kraus.push_back(std::move(m));
    }
    validate(k);
    return k;
  }
  throw std::invalid_argument("channel JSON: unknown kind \"" + kind + "\"");
}

Channel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open channel file: " + path);
  }
  nlohmann::json j;
  in >> j;
  return channel_from_json(j);
}

nlohmann::json report_to_json(const TheoremReport& rep, RngSeed seed,
                              const std::string& psi_spec) {
  nlohmann::json j;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["p"] = rep.p;
  j["lambda"] = rep.lambda;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["margin"] = rep.margin;
  j["variant"] = variant_name(rep.variant);
  j["seed"] = seed.value;
  j["psi_spec"] = psi_spec;
  nlohmann::json terms = nlohmann::json::array();
  for (Eigen::Index s = 0; s < rep.per_basis_terms.rows(); ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index i = 0; i < rep.per_basis_terms.cols(); ++i) {
      row.push_back(rep.per_basis_terms(s, i));
    }
    terms.push_back(std::move(row));
  }
  j["per_basis_terms"] = std::move(terms);
  return j;
}

std::string format_real(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << x;
  return os.str();
}

std::string report_csv_header() {
  return "d,r,p,lambda,lhs,rhs,margin,variant,seed,psi_spec";
}

std::string report_csv_row(const TheoremReport& rep, RngSeed seed,
                           const std::string& psi_spec) {
  std::ostringstream os;
  os << rep.d << ',' << format_real(rep.r) << ',' << format_real(rep.p) << ','
     << format_real(rep.lambda) << ',' << format_real(rep.lhs) << ','
     << format_real(rep.rhs) << ',' << format_real(rep.margin) << ','
     << variant_name(rep.variant) << ',' << seed.value << ',' << psi_spec;
  return os.str();
}

}  // namespace weylmoe
