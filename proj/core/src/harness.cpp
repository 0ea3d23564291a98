#include "schlicht/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "schlicht/error.hpp"
#include "schlicht/generate.hpp"
#include "schlicht/random.hpp"

namespace schlicht {

namespace {

AnalyticFunction subject_of(Subject s, const AnalyticFunction& f, const ParameterPoint& p) {
  return s == Subject::jks_of_f ? AnalyticFunction::applied(OperatorSpec::jks(p.sigma), f) : f;
}

EvalOptions scaled(const EvalOptions& eval, int level) {
  EvalOptions e = eval;
  e.series_order <<= level;
  e.max_series_order <<= level;
  return e;
}

void add_class_margin(std::vector<HypothesisRecord>& out, const std::string& prefix, const Verdict& v) {
  out.push_back({prefix + v.class_label, v.margin, v.reliable});
  if (v.nondegeneracy_gap > 0.0 || !v.nondegeneracy_ok) {
    out.push_back({"nondegeneracy:" + v.class_label, v.nondegeneracy_gap - kDegeneracyFloor, v.reliable});
  }
}

SampleEvaluation evaluate(const SampleContext& ctx, int level, bool force_conclusion) {
  const TheoremEntry& entry = theorem_entry(ctx.theorem, ctx.companion_variant);
  const ParameterPoint& p = ctx.point;
  const DiskGrid grid = ctx.grid.refined(level);
  CertifyOptions copts;
  copts.eval = scaled(ctx.eval, level);

  SampleEvaluation ev;
  if (entry.companion) {
    const ClassSpec gspec = resolve_class(*entry.companion, p);
    add_class_margin(ev.hypotheses, "companion:", certify(*ctx.companion, gspec, grid, std::nullopt, copts));
  }
  const ClassSpec hspec = resolve_class(entry.hypothesis, p);
  add_class_margin(ev.hypotheses, "class:", certify(subject_of(entry.hypothesis.subject, ctx.f, p), hspec, grid,
                                                    ctx.companion, copts));
  for (const SideClause& s : entry.sides) {
    HypothesisParams hp;
    hp.op = *resolve_lift(s.op, p);
    hp.lambda = p.lambda;
    hp.shift = resolve_shift(s.shift, p);
    const HypothesisMargin m =
        hypothesis_margin(subject_of(s.subject, ctx.f, p), s.id, hp, grid, ctx.companion, copts.eval);
    ev.hypotheses.push_back({std::string(hypothesis_name(s.id)) + ":" + hp.op.label(), m.margin, m.reliable});
  }

  bool failed = false;
  bool unreliable = false;
  for (const HypothesisRecord& h : ev.hypotheses) {
    if (!h.reliable || !std::isfinite(h.margin)) {
      unreliable = true;
    } else if (h.margin <= kMarginFloor) {
      failed = true;
    }
  }
  ev.hypothesis_hit = !failed && !unreliable;

  if (ev.hypothesis_hit || force_conclusion) {
    const ClassSpec cspec = resolve_class(entry.conclusion, p);
    ev.conclusion = certify(subject_of(entry.conclusion.subject, ctx.f, p), cspec, grid, ctx.companion, copts);
  }
  if (failed) {
    ev.outcome = Outcome::vacuous;
  } else if (unreliable) {
    ev.outcome = Outcome::inconclusive;
  } else if (ev.conclusion->status == Status::member) {
    ev.outcome = Outcome::confirmed;
  } else if (ev.conclusion->status == Status::non_member && ev.conclusion->margin < -kMarginFloor) {
    ev.outcome = Outcome::counterexample_flagged;
  } else {
    ev.outcome = Outcome::inconclusive;
  }
  return ev;
}

double min_margin(const std::vector<HypothesisRecord>& hs) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& h : hs) m = std::min(m, h.margin);
  return m;
}

SampleRecord run_sample(const ExperimentConfig& cfg, const ParameterPoint& point, int point_index, int sample_index) {
  const TheoremEntry& entry = theorem_entry(cfg.theorem, cfg.companion_variant);
  SampleRecord rec;
  rec.point_index = point_index;
  rec.sample_index = sample_index;
  rec.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(cfg.theorem), static_cast<std::uint64_t>(point_index),
                      static_cast<std::uint64_t>(sample_index));

  SampleContext ctx;
  ctx.theorem = cfg.theorem;
  ctx.companion_variant = cfg.companion_variant;
  ctx.point = point;
  ctx.grid = cfg.grid;
  ctx.eval = cfg.eval;
  GenerateOptions gopts;
  gopts.certify.eval = cfg.eval;
  try {
    if (entry.companion) {
      ctx.companion = generate_members(resolve_class(*entry.companion, point), 1, mix_seed(rec.seed, 1), cfg.grid,
                                       std::nullopt, gopts)
                          .front();
      rec.companion_label = ctx.companion->label();
    }
    ctx.f = generate_members(resolve_class(entry.hypothesis, point), 1, mix_seed(rec.seed, 2), cfg.grid,
                             ctx.companion, gopts)
                .front();
    rec.function_label = ctx.f.label();
  } catch (const GenerationExhausted& e) {
    rec.outcome = Outcome::inconclusive;
    rec.note = e.what();
    return rec;
  }

  try {
    SampleEvaluation ev = evaluate(ctx, 0, false);
    rec.hypotheses = std::move(ev.hypotheses);
    rec.hypothesis_hit = ev.hypothesis_hit;
    rec.conclusion = std::move(ev.conclusion);
    rec.outcome = ev.outcome;
    for (int level = 1; level <= cfg.refinement_levels && rec.outcome == Outcome::counterexample_flagged; ++level) {
      SampleEvaluation r = evaluate(ctx, level, true);
      RefinementStep step;
      step.level = level;
      const DiskGrid g = cfg.grid.refined(level);
      step.angles_per_radius = g.angles_per_radius;
      step.outer_radius = g.radii.back();
      step.series_order = scaled(cfg.eval, level).max_series_order;
      step.min_hypothesis_margin = min_margin(r.hypotheses);
      step.hypotheses = std::move(r.hypotheses);
      step.conclusion = *r.conclusion;
      step.outcome = r.outcome;
      rec.refinement.push_back(std::move(step));
      rec.outcome = r.outcome;
    }
  } catch (const Error& e) {
    rec.outcome = Outcome::inconclusive;
    rec.note = e.what();
  }
  return rec;
}

}  // namespace

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::confirmed: return "confirmed";
    case Outcome::vacuous: return "vacuous";
    case Outcome::inconclusive: return "inconclusive";
    case Outcome::counterexample_flagged: return "counterexample_flagged";
  }
  return "?";
}

void OutcomeCounts::add(Outcome o) {
  switch (o) {
    case Outcome::confirmed: ++confirmed; break;
    case Outcome::vacuous: ++vacuous; break;
    case Outcome::inconclusive: ++inconclusive; break;
    case Outcome::counterexample_flagged: ++counterexample_flagged; break;
  }
}

SampleEvaluation evaluate_sample(const SampleContext& ctx, int level) { return evaluate(ctx, level, false); }

Verdict refine(const SampleContext& ctx, int level) { return *evaluate(ctx, level, true).conclusion; }

int worker_count(int requested) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SCHLICHT_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) n = std::min(n > 0 ? n : cap, cap);
    }
  }
  return std::max(1, n);
}

ExperimentReport run_theorem(const ExperimentConfig& cfg) {
  if (cfg.sample_count < 1) throw ConfigError("sample_count must be >= 1");
  if (cfg.refinement_levels < 0) throw ConfigError("refinement_levels must be >= 0");
  try {
    cfg.grid.validate();
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  ExperimentReport report;
  report.config = cfg;
  if (report.config.points.empty()) report.config.points = default_points(cfg.theorem);
  for (const ParameterPoint& p : report.config.points) check_domain(cfg.theorem, p);
  const TheoremEntry& entry = theorem_entry(cfg.theorem, cfg.companion_variant);
  report.statement = entry.statement;
  report.unconditional = entry.unconditional;

  const auto& points = report.config.points;
  const std::size_t per_point = static_cast<std::size_t>(cfg.sample_count);
  const std::size_t total = points.size() * per_point;
  report.samples.resize(total);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const int pi = static_cast<int>(i / per_point);
      const int si = static_cast<int>(i % per_point);
      report.samples[i] = run_sample(cfg, points[static_cast<std::size_t>(pi)], pi, si);
    }
  };
  const int workers = std::min<int>(worker_count(cfg.threads), static_cast<int>(std::max<std::size_t>(1, total)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  report.points.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) report.points[i].point = points[i];
  for (const SampleRecord& s : report.samples) {
    PointSummary& ps = report.points[static_cast<std::size_t>(s.point_index)];
    ps.counts.add(s.outcome);
    report.counts.add(s.outcome);
    if (s.hypothesis_hit) {
      ++ps.hypothesis_hits;
      ++report.hypothesis_hits;
    }
  }
  return report;
}

CatalogReport run_catalog(const ExperimentConfig& base) {
  CatalogReport out;
  out.seed = base.seed;
  for (TheoremId id : kAllTheorems) {
    ExperimentConfig cfg = base;
    cfg.theorem = id;
    cfg.points.clear();
    out.theorems.push_back(run_theorem(cfg));
  }
  return out;
}

}  // namespace schlicht
