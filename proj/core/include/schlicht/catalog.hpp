#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schlicht/classify.hpp"

namespace schlicht {

enum class TheoremId {
  T2_1_i, T2_1_ii, T2_2_i, T2_2_ii, T2_3, C2_4, C2_4_wide, T2_5_i, T2_5_ii, C2_6_i, C2_6_ii,
  T2_7, T2_8_i, T2_8_ii, T2_9_i, T2_9_ii, T2_10, C2_11, T2_12, C2_13,
};

inline constexpr std::array<TheoremId, 20> kAllTheorems = {
    TheoremId::T2_1_i, TheoremId::T2_1_ii, TheoremId::T2_2_i, TheoremId::T2_2_ii, TheoremId::T2_3,
    TheoremId::C2_4,   TheoremId::C2_4_wide, TheoremId::T2_5_i, TheoremId::T2_5_ii, TheoremId::C2_6_i,
    TheoremId::C2_6_ii, TheoremId::T2_7,  TheoremId::T2_8_i, TheoremId::T2_8_ii, TheoremId::T2_9_i,
    TheoremId::T2_9_ii, TheoremId::T2_10, TheoremId::C2_11, TheoremId::T2_12, TheoremId::C2_13,
};

std::string_view theorem_name(TheoremId id);
/// Accepts the names printed by theorem_name; throws ConfigError otherwise.
TheoremId parse_theorem(std::string_view name);

/// Which operator a clause refers to, relative to a parameter point.
enum class LiftRef { none, c, c_plus_1, sigma };
/// Function a clause is evaluated on: f itself or I^sigma f.
enum class Subject { f, jks_of_f };
/// Additive constant in the derivative side conditions.
enum class ShiftRef { zero, c, c_plus_1 };

struct ClassClause {
  ClassKind kind = ClassKind::starlike;
  LiftRef lift = LiftRef::none;
  Subject subject = Subject::f;
};

struct SideClause {
  HypothesisId id = HypothesisId::re_difference;
  LiftRef op = LiftRef::c;
  ShiftRef shift = ShiftRef::zero;
  Subject subject = Subject::f;
};

/// Constraint on c beyond c > -1.
enum class CDomain { any, ge_minus_lambda, ge_lambda, closed_band, open_band };

/// How the companion class of the second part of the close-to-convex
/// inclusion is read: literally, or lifted like the first part.
enum class CompanionVariant { as_stated, symmetric };

struct TheoremEntry {
  TheoremId id{};
  std::string statement;
  ClassClause hypothesis;
  std::vector<SideClause> sides;
  std::optional<ClassClause> companion;
  ClassClause conclusion;
  CDomain domain = CDomain::any;
  bool uses_beta = false;
  bool uses_eta = false;
  bool uses_sigma = false;
  /// Membership is produced by the generator, so every point must confirm.
  bool unconditional = false;
  std::optional<TheoremId> dual;
};

const TheoremEntry& theorem_entry(TheoremId id, CompanionVariant variant = CompanionVariant::as_stated);

/// Structural problems of the catalog table; empty when consistent.
/// Checks that every conditional inclusion compares against the operator
/// of its hypothesis class and that dual parts swap source and target.
std::vector<std::string> check_catalog();

struct ParameterPoint {
  double lambda = 0.0;
  double beta = 0.0;
  double eta = 1.0;
  double c = 0.0;
  double sigma = 1.0;

  friend bool operator==(const ParameterPoint&, const ParameterPoint&) = default;
};

/// Defaults lambda {0, 0.25, 0.5}, beta {0, 0.25}, eta {0.5, 1},
/// c {-0.25, 0, 1, 2}, sigma {0.5, 1, 2}, restricted to the parameters the
/// theorem uses and filtered by its domain.
std::vector<ParameterPoint> default_points(TheoremId id);

bool in_domain(TheoremId id, const ParameterPoint& p);
/// Throws ConfigError naming the violated condition.
void check_domain(TheoremId id, const ParameterPoint& p);

std::optional<OperatorSpec> resolve_lift(LiftRef ref, const ParameterPoint& p);
double resolve_shift(ShiftRef ref, const ParameterPoint& p);
ClassSpec resolve_class(const ClassClause& clause, const ParameterPoint& p);

}  // namespace schlicht
