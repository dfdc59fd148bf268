#include "chebstab/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace chebstab {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

bool is_flat_numeric(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& e : j) {
    if (!e.is_number()) return false;
  }
  return true;
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& e : j) {
    if (!is_flat_numeric(e)) return false;
  }
  return true;
}

void write_scalar(std::ostream& os, const Json& j) {
  switch (j.type()) {
    case Json::value_t::number_float:
      os << format_number(j.get<double>());
      break;
    default:
      os << j.dump();
  }
}

void write_inline_array(std::ostream& os, const Json& j) {
  os << '[';
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i > 0) os << ", ";
    write_scalar(os, j[i]);
  }
  os << ']';
}

void write(std::ostream& os, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(key).dump() << ": ";
      write(os, value, depth + 1);
    }
    os << '\n' << close_pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
    } else if (is_flat_numeric(j)) {
      write_inline_array(os, j);
    } else if (is_matrix(j)) {
      // Point lists: one row per line.
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) os << ",\n";
        os << pad;
        write_inline_array(os, j[i]);
      }
      os << '\n' << close_pad << ']';
    } else {
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) os << ",\n";
        os << pad;
        write(os, j[i], depth + 1);
      }
      os << '\n' << close_pad << ']';
    }
  } else {
    write_scalar(os, j);
  }
}

}  // namespace

std::string dump_document(const Json& doc) {
  std::ostringstream os;
  write(os, doc, 0);
  os << '\n';
  return os.str();
}

Json cloud_to_json(const PointCloud& cloud) {
  Json points = Json::array();
  for (const Vector& p : cloud) {
    Json row = Json::array();
    for (double c : p.coords()) row.push_back(c);
    points.push_back(std::move(row));
  }
  return {{"dim", cloud.dim()}, {"points", std::move(points)}};
}

PointCloud cloud_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points")) {
    throw InputError("cloud document needs fields 'dim' and 'points'");
  }
  const Json& dim_field = doc.at("dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    throw InputError("cloud field 'dim' must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_field.get<long long>());
  const Json& rows = doc.at("points");
  if (!rows.is_array()) throw InputError("cloud field 'points' must be a list");
  if (rows.empty()) throw InputError("cloud has no points");
  std::vector<Vector> points;
  points.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "row " + std::to_string(i + 1);
    const Json& row = rows[i];
    if (!row.is_array()) throw InputError(where + ": expected a list of numbers");
    if (row.size() != dim) {
      throw InputError(where + ": expected " + std::to_string(dim) + " coordinates, got " +
                       std::to_string(row.size()));
    }
    std::vector<double> coords;
    coords.reserve(dim);
    for (const Json& c : row) {
      if (!c.is_number()) throw InputError(where + ": coordinate is not a number");
      coords.push_back(c.get<double>());
    }
    try {
      points.emplace_back(std::move(coords));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return PointCloud(std::move(points));
}

Json witness_to_json(const Witness& w) {
  return {{"trial", w.trial}, {"label", w.label},          {"param", w.param},
          {"lhs", w.lhs},     {"rhs", w.rhs},              {"ratio", w.ratio},
          {"slack", w.slack}, {"m", cloud_to_json(w.m)},   {"w", cloud_to_json(w.w)}};
}

Witness witness_from_json(const Json& doc) {
  return Witness{doc.at("trial").get<std::size_t>(),
                 doc.at("label").get<std::string>(),
                 doc.at("param").get<double>(),
                 cloud_from_json(doc.at("m")),
                 cloud_from_json(doc.at("w")),
                 doc.at("lhs").get<double>(),
                 doc.at("rhs").get<double>(),
                 doc.at("ratio").get<double>(),
                 doc.at("slack").get<double>()};
}

Json report_to_json(const CheckReport& report) {
  Json violations = Json::array();
  for (const Witness& w : report.violations) violations.push_back(witness_to_json(w));
  Json max_ratio = {{"value", report.max_ratio.value}, {"witness", nullptr}};
  if (report.max_ratio.witness) max_ratio["witness"] = witness_to_json(*report.max_ratio.witness);
  Json stats = Json::object();
  for (const auto& [k, v] : report.stats) stats[k] = v;
  return {{"check_name", report.check_name},
          {"seed", report.seed},
          {"trials_run", report.trials_run},
          {"passed", report.passed()},
          {"violation_count", report.violation_count},
          {"violations", std::move(violations)},
          {"max_ratio", std::move(max_ratio)},
          {"stats", std::move(stats)}};
}

std::string rows_to_csv(std::string_view check, const std::vector<TrialRow>& rows) {
  std::string out;
  for (const TrialRow& r : rows) {
    out += std::string(check) + ',' + std::to_string(r.trial) + ',' + format_number(r.alpha) + ',' +
           format_number(r.lhs) + ',' + format_number(r.ratio) + '\n';
  }
  return out;
}

Json rows_to_json(const std::vector<TrialRow>& rows) {
  Json out = Json::array();
  for (const TrialRow& r : rows) {
    out.push_back({{"trial", r.trial}, {"alpha_mw", r.alpha}, {"alpha_cheb", r.lhs},
                   {"ratio", r.ratio}});
  }
  return out;
}

}  // namespace chebstab
