#pragma once

#include <string>
#include <string_view>

#include "schlicht/classify.hpp"
#include "schlicht/harness.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

inline constexpr int kReportSchema = 1;

/// {"order": N, "coeffs": [[re, im], ...]}, one coefficient per line.
std::string series_to_json(const Series& s);
/// Throws ParseError carrying the 1-based line of the problem.
Series series_from_json(std::string_view text);
/// Reads and parses a series file; ParseError messages name the path.
Series load_series_file(const std::string& path);

std::string verdict_to_json(const Verdict& v, const std::string& function_label, const DiskGrid& grid);
std::string report_to_json(const ExperimentReport& r);
std::string catalog_to_json(const CatalogReport& r);

}  // namespace schlicht
