#pragma once

#include <string>
#include <string_view>

#include "chebstab/geometry.hpp"

namespace chebstab {

enum class CloudFormat { doc, rows };

CloudFormat parse_cloud_format(std::string_view name);

// Accepts either a document {"dim": d, "points": [[...], ...]} or delimited
// rows (one point per line, coordinates separated by commas or whitespace,
// '#' starts a comment). The format is detected from the first non-blank
// character. Errors name the offending row.
PointCloud parse_cloud(std::string_view text);

PointCloud read_cloud_file(const std::string& path);

std::string format_cloud(const PointCloud& cloud, CloudFormat format);

}  // namespace chebstab
