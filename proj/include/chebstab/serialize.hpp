#pragma once

#include <string>
#include <vector>

#include "chebstab/geometry.hpp"
#include "chebstab/verify.hpp"
#include "json.hpp"

namespace chebstab {

using Json = nlohmann::json;

// "%.17g": enough digits for a lossless double round trip.
std::string format_number(double v);

// Pretty-prints with two-space indentation, sorted keys, numeric arrays on
// one line and every floating-point value through format_number. Output is
// a pure function of the value.
std::string dump_document(const Json& doc);

Json cloud_to_json(const PointCloud& cloud);
PointCloud cloud_from_json(const Json& doc);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& doc);

// Fields: check_name, seed, trials_run, passed, violation_count,
// violations[], max_ratio{value, witness}, stats{}.
Json report_to_json(const CheckReport& report);

inline constexpr const char* kCsvHeader = "check,trial,alpha_mw,alpha_cheb,ratio\n";

// One line per row, without header.
std::string rows_to_csv(std::string_view check, const std::vector<TrialRow>& rows);
Json rows_to_json(const std::vector<TrialRow>& rows);

}  // namespace chebstab
