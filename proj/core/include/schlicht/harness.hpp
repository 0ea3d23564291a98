#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schlicht/catalog.hpp"
#include "schlicht/classify.hpp"
#include "schlicht/function.hpp"
#include "schlicht/grid.hpp"

namespace schlicht {

struct ExperimentConfig {
  TheoremId theorem = TheoremId::T2_7;
  /// Explicit parameter points; empty means default_points(theorem).
  std::vector<ParameterPoint> points;
  int sample_count = 50;
  std::uint64_t seed = 1;
  DiskGrid grid = DiskGrid::default_grid();
  int refinement_levels = 2;
  EvalOptions eval;
  CompanionVariant companion_variant = CompanionVariant::as_stated;
  /// Worker threads; 0 means SCHLICHT_THREADS or the hardware count.
  int threads = 0;
};

enum class Outcome { confirmed, vacuous, inconclusive, counterexample_flagged };
std::string_view outcome_name(Outcome o);

struct HypothesisRecord {
  std::string name;
  double margin = 0.0;
  bool reliable = true;
};

struct RefinementStep {
  int level = 0;
  int angles_per_radius = 0;
  double outer_radius = 0.0;
  int series_order = 0;
  double min_hypothesis_margin = 0.0;
  std::vector<HypothesisRecord> hypotheses;
  Verdict conclusion;
  Outcome outcome = Outcome::inconclusive;
};

struct SampleRecord {
  int point_index = 0;
  int sample_index = 0;
  std::uint64_t seed = 0;
  std::string function_label;
  std::string companion_label;  // empty without a companion
  std::vector<HypothesisRecord> hypotheses;
  bool hypothesis_hit = false;
  std::optional<Verdict> conclusion;
  Outcome outcome = Outcome::inconclusive;
  std::vector<RefinementStep> refinement;
  std::string note;
};

struct OutcomeCounts {
  int confirmed = 0;
  int vacuous = 0;
  int inconclusive = 0;
  int counterexample_flagged = 0;

  void add(Outcome o);
  int total() const noexcept { return confirmed + vacuous + inconclusive + counterexample_flagged; }
};

struct PointSummary {
  ParameterPoint point;
  OutcomeCounts counts;
  int hypothesis_hits = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string statement;
  bool unconditional = false;
  OutcomeCounts counts;
  int hypothesis_hits = 0;
  std::vector<PointSummary> points;
  std::vector<SampleRecord> samples;  // sorted by (point, sample)

  double hypothesis_hit_rate() const noexcept {
    return samples.empty() ? 0.0 : static_cast<double>(hypothesis_hits) / static_cast<double>(samples.size());
  }
};

/// Everything needed to re-evaluate one sample.
struct SampleContext {
  TheoremId theorem = TheoremId::T2_7;
  CompanionVariant companion_variant = CompanionVariant::as_stated;
  ParameterPoint point;
  AnalyticFunction f = AnalyticFunction::identity();
  std::optional<AnalyticFunction> companion;
  DiskGrid grid = DiskGrid::default_grid();
  EvalOptions eval;
};

struct SampleEvaluation {
  std::vector<HypothesisRecord> hypotheses;
  bool hypothesis_hit = false;
  std::optional<Verdict> conclusion;
  Outcome outcome = Outcome::inconclusive;
};

/// Hypotheses and (when they all hold) the conclusion at refinement level
/// `level`: grid.refined(level) and series orders scaled by 2^level.
SampleEvaluation evaluate_sample(const SampleContext& ctx, int level = 0);

/// Conclusion verdict at refinement level `level`, computed regardless of the hypotheses.
Verdict refine(const SampleContext& ctx, int level);

/// Generates, checks and refines every sample of the experiment.
/// Throws ConfigError for points outside the theorem's domain.
ExperimentReport run_theorem(const ExperimentConfig& cfg);

struct CatalogReport {
  std::uint64_t seed = 0;
  std::vector<ExperimentReport> theorems;
};

/// run_theorem for every catalog entry with the defaults of `base`.
CatalogReport run_catalog(const ExperimentConfig& base);

/// Worker count from cfg.threads, SCHLICHT_THREADS and the hardware.
int worker_count(int requested);

}  // namespace schlicht
