#include "schlicht/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schlicht/error.hpp"

namespace schlicht {

namespace {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

int line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the k-th element of the "coeffs" array, or of the key itself.
int coeff_line(std::string_view text, std::size_t k) {
  const std::size_t key = text.find("\"coeffs\"");
  if (key == std::string_view::npos) return 1;
  std::size_t pos = text.find('[', key);
  if (pos == std::string_view::npos) return line_of(text, key);
  int depth = 0;
  std::size_t index = 0;
  bool in_string = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_string) {
      if (ch == '\\') ++i;
      else if (ch == '"') in_string = false;
      continue;
    }
    if (ch == '"') {
      in_string = true;
    } else if (ch == '[' || ch == '{') {
      ++depth;
      if (depth == 2 && index == k) return line_of(text, i);
    } else if (ch == ']' || ch == '}') {
      --depth;
      if (depth == 0) break;
    } else if (ch == ',' && depth == 1) {
      ++index;
    } else if (depth == 1 && index == k && !std::isspace(static_cast<unsigned char>(ch))) {
      return line_of(text, i);
    }
  }
  return line_of(text, key);
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(status_name(v.status));
  j["class"] = v.class_label;
  j["margin"] = number(v.margin);
  j["witness"] = complex_json(v.witness);
  j["reliable"] = v.reliable;
  j["division_near_zero"] = v.division_near_zero;
  j["nondegeneracy_ok"] = v.nondegeneracy_ok;
  j["nondegeneracy_gap"] = number(v.nondegeneracy_gap);
  Json rm = Json::array();
  for (double m : v.radius_margins) rm.push_back(number(m));
  j["radius_margins"] = std::move(rm);
  j["series_order"] = v.series_order;
  return j;
}

Json grid_json(const DiskGrid& g) {
  Json j;
  j["radii"] = g.radii;
  j["angles_per_radius"] = g.angles_per_radius;
  return j;
}

Json point_json(const ParameterPoint& p, const TheoremEntry& e) {
  Json j;
  j["lambda"] = p.lambda;
  if (e.uses_beta) j["beta"] = p.beta;
  if (e.uses_eta) j["eta"] = p.eta;
  j["c"] = p.c;
  if (e.uses_sigma) j["sigma"] = p.sigma;
  return j;
}

Json counts_json(const OutcomeCounts& c) {
  Json j;
  j["confirmed"] = c.confirmed;
  j["vacuous"] = c.vacuous;
  j["inconclusive"] = c.inconclusive;
  j["counterexample_flagged"] = c.counterexample_flagged;
  return j;
}

Json hypotheses_json(const std::vector<HypothesisRecord>& hs) {
  Json arr = Json::array();
  for (const auto& h : hs) {
    Json j;
    j["name"] = h.name;
    j["margin"] = number(h.margin);
    j["reliable"] = h.reliable;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json report_json(const ExperimentReport& r) {
  const ExperimentConfig& cfg = r.config;
  const TheoremEntry& e = theorem_entry(cfg.theorem, cfg.companion_variant);
  Json j;
  j["schema"] = kReportSchema;
  j["theorem"] = std::string(theorem_name(cfg.theorem));
  j["statement"] = r.statement;
  j["unconditional"] = r.unconditional;
  Json c;
  c["sample_count"] = cfg.sample_count;
  c["seed"] = cfg.seed;
  c["grid"] = grid_json(cfg.grid);
  c["refinement_levels"] = cfg.refinement_levels;
  c["series_order"] = cfg.eval.series_order;
  c["max_series_order"] = cfg.eval.max_series_order;
  c["companion_variant"] = cfg.companion_variant == CompanionVariant::symmetric ? "symmetric" : "as_stated";
  Json pts = Json::array();
  for (const auto& p : cfg.points) pts.push_back(point_json(p, e));
  c["points"] = std::move(pts);
  j["config"] = std::move(c);
  j["counts"] = counts_json(r.counts);
  j["hypothesis_hits"] = r.hypothesis_hits;
  j["hypothesis_hit_rate"] = r.hypothesis_hit_rate();

  Json per_point = Json::array();
  for (const auto& ps : r.points) {
    Json pj;
    pj["point"] = point_json(ps.point, e);
    pj["counts"] = counts_json(ps.counts);
    pj["hypothesis_hits"] = ps.hypothesis_hits;
    pj["hypothesis_hit_rate"] = ps.counts.total() ? static_cast<double>(ps.hypothesis_hits) / ps.counts.total() : 0.0;
    per_point.push_back(std::move(pj));
  }
  j["points"] = std::move(per_point);

  Json flagged = Json::array();
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json sj;
    sj["point"] = s.point_index;
    sj["sample"] = s.sample_index;
    sj["seed"] = s.seed;
    sj["function"] = s.function_label;
    if (!s.companion_label.empty()) sj["companion"] = s.companion_label;
    sj["outcome"] = std::string(outcome_name(s.outcome));
    sj["hypothesis_hit"] = s.hypothesis_hit;
    sj["hypotheses"] = hypotheses_json(s.hypotheses);
    sj["conclusion"] = s.conclusion ? verdict_json(*s.conclusion) : Json(nullptr);
    Json trail = Json::array();
    for (const auto& st : s.refinement) {
      Json tj;
      tj["level"] = st.level;
      tj["angles_per_radius"] = st.angles_per_radius;
      tj["outer_radius"] = st.outer_radius;
      tj["max_series_order"] = st.series_order;
      tj["min_hypothesis_margin"] = number(st.min_hypothesis_margin);
      tj["hypotheses"] = hypotheses_json(st.hypotheses);
      tj["conclusion"] = verdict_json(st.conclusion);
      tj["outcome"] = std::string(outcome_name(st.outcome));
      trail.push_back(std::move(tj));
    }
    sj["refinement"] = std::move(trail);
    if (!s.note.empty()) sj["note"] = s.note;
    if (s.outcome == Outcome::counterexample_flagged) flagged.push_back(sj);
    samples.push_back(std::move(sj));
  }
  j["counterexamples"] = std::move(flagged);
  j["samples"] = std::move(samples);
  return j;
}

}  // namespace

std::string series_to_json(const Series& s) {
  std::ostringstream out;
  out << "{\n  \"order\": " << s.order() << ",\n  \"coeffs\": [\n";
  const auto c = s.coeffs();
  for (std::size_t n = 0; n < c.size(); ++n) {
    out << "    [" << Json(c[n].real()).dump() << ", " << Json(c[n].imag()).dump() << "]"
        << (n + 1 < c.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

Series series_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!j.is_object()) throw ParseError("series file must hold a JSON object", 1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "order" && it.key() != "coeffs") {
      const std::size_t at = text.find("\"" + it.key() + "\"");
      throw ParseError("unknown key '" + it.key() + "'", line_of(text, at == std::string_view::npos ? 0 : at));
    }
  }
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("missing \"coeffs\" array", coeff_line(text, 0));
  const Json& arr = j["coeffs"];
  std::vector<Complex> c;
  c.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const Json& e = arr[k];
    if (e.is_number()) {
      c.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      c.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ParseError("coefficient " + std::to_string(k) + " must be [re, im]", coeff_line(text, k));
    }
  }
  if (c.size() < 2) throw ParseError("a series needs at least two coefficients", coeff_line(text, 0));
  if (j.contains("order")) {
    const Json& o = j["order"];
    if (!o.is_number_integer() || o.get<long long>() != static_cast<long long>(c.size()) - 1) {
      const std::size_t at = text.find("\"order\"");
      throw ParseError("\"order\" must equal the number of coefficients minus one", line_of(text, at));
    }
  }
  return Series(std::move(c));
}

Series load_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open series file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return series_from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.detail(), e.line());
  }
}

std::string verdict_to_json(const Verdict& v, const std::string& function_label, const DiskGrid& grid) {
  Json j;
  j["schema"] = kReportSchema;
  j["function"] = function_label;
  Json body = verdict_json(v);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  j["grid"] = grid_json(grid);
  return j.dump(2) + "\n";
}

std::string report_to_json(const ExperimentReport& r) { return report_json(r).dump(2) + "\n"; }

std::string catalog_to_json(const CatalogReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["seed"] = r.seed;
  OutcomeCounts total;
  Json arr = Json::array();
  for (const auto& t : r.theorems) {
    total.confirmed += t.counts.confirmed;
    total.vacuous += t.counts.vacuous;
    total.inconclusive += t.counts.inconclusive;
    total.counterexample_flagged += t.counts.counterexample_flagged;
    arr.push_back(report_json(t));
  }
  j["counts"] = counts_json(total);
  j["theorems"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace schlicht
