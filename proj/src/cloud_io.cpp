#include "chebstab/cloud_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "chebstab/serialize.hpp"

namespace chebstab {

CloudFormat parse_cloud_format(std::string_view name) {
  if (name == "doc") return CloudFormat::doc;
  if (name == "rows") return CloudFormat::rows;
  throw InputError("unknown format '" + std::string(name) + "' (expected doc or rows)");
}

namespace {

bool is_separator(char c) {
  return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\r';
}

PointCloud parse_rows(std::string_view text) {
  std::vector<Vector> points;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    std::vector<double> coords;
    std::size_t i = 0;
    const std::string where = "row " + std::to_string(points.size() + 1) + " (line " +
                              std::to_string(line_no) + ")";
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_separator(line[j])) ++j;
      const std::string_view token = line.substr(i, j - i);
      double v = 0.0;
      const char* first = token.data();
      if (!token.empty() && token.front() == '+') ++first;
      const auto [end, ec] = std::from_chars(first, token.data() + token.size(), v);
      if (ec != std::errc() || end != token.data() + token.size()) {
        throw InputError(where + ": cannot parse '" + std::string(token) + "' as a number");
      }
      coords.push_back(v);
      i = j;
    }
    if (coords.empty()) continue;
    if (dim == 0) dim = coords.size();
    if (coords.size() != dim) {
      throw InputError(where + ": expected " + std::to_string(dim) + " coordinates, got " +
                       std::to_string(coords.size()));
    }
    try {
      points.emplace_back(std::move(coords));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (points.empty()) throw InputError("cloud has no points");
  return PointCloud(std::move(points));
}

}  // namespace

PointCloud parse_cloud(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("malformed cloud document: ") + e.what());
    }
    return cloud_from_json(doc);
  }
  return parse_rows(text);
}

PointCloud read_cloud_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_cloud(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_cloud(const PointCloud& cloud, CloudFormat format) {
  if (format == CloudFormat::doc) return dump_document(cloud_to_json(cloud));
  std::string out;
  for (const Vector& p : cloud) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (j > 0) out += ',';
      out += format_number(p[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace chebstab
