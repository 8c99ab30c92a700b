#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "weylmoe/channels.hpp"
#include "weylmoe/verify.hpp"

namespace weylmoe {

/// Channel wire format:
///   {"kind": "weyl",  "d": int, "coeffs": [[real]]}
///   {"kind": "kraus", "d": int, "kraus": [[[ [re, im], ... ]]]}
/// where "kraus" is a list of dim x dim matrices, each a list of rows,
/// each row a list of [re, im] pairs.
nlohmann::json channel_to_json(const Channel& ch);
Channel channel_from_json(const nlohmann::json& j);

Channel load_channel(const std::string& path);

/// Theorem report rows: {d, r, p, lambda, lhs, rhs, margin, variant,
/// seed, psi_spec} plus the per-basis term table.
nlohmann::json report_to_json(const TheoremReport& rep, RngSeed seed,
                              const std::string& psi_spec);

std::string report_csv_header();
std::string report_csv_row(const TheoremReport& rep, RngSeed seed,
                           const std::string& psi_spec);

/// Fixed-width decimal formatting for CSV cells: '.' decimal separator,
/// 12 significant digits, no grouping.
std::string format_real(double x);

}  // namespace weylmoe
