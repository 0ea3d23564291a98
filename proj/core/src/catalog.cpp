#include "schlicht/catalog.hpp"


#include "schlicht/error.hpp"

namespace schlicht {

namespace {

using enum ClassKind;

ClassClause cls(ClassKind kind, LiftRef lift, Subject subject = Subject::f) { return {kind, lift, subject}; }

SideClause side(HypothesisId id, LiftRef op, ShiftRef shift = ShiftRef::zero, Subject subject = Subject::f) {
  return {id, op, shift, subject};
}

std::vector<TheoremEntry> build_catalog(CompanionVariant variant) {
  using H = HypothesisId;
  using L = LiftRef;
  std::vector<TheoremEntry> t;
  auto add = [&](TheoremId id, std::string statement) -> TheoremEntry& {
    TheoremEntry e;
    e.id = id;
    e.statement = std::move(statement);
    t.push_back(std::move(e));
    return t.back();
  };

  {
    auto& e = add(TheoremId::T2_1_i, "Re{zf'/f - z(L_c f)'/L_c f} > 0: S*_c(lambda) within S*_{c+1}(lambda)");
    e.hypothesis = cls(starlike, L::c);
    e.sides = {side(H::re_difference, L::c)};
    e.conclusion = cls(starlike, L::c_plus_1);
    e.dual = TheoremId::T2_1_ii;
  }
  {
    auto& e = add(TheoremId::T2_1_ii, "Re{zf'/f - z(L_{c+1} f)'/L_{c+1} f} > 0: S*_{c+1}(lambda) within S*_c(lambda)");
    e.hypothesis = cls(starlike, L::c_plus_1);
    e.sides = {side(H::re_difference, L::c_plus_1)};
    e.conclusion = cls(starlike, L::c);
    e.dual = TheoremId::T2_1_i;
  }
  {
    auto& e = add(TheoremId::T2_2_i, "Re{zf'/f - z(L_c f)'/L_c f} > 0: C_c(lambda) within C_{c+1}(lambda)");
    e.hypothesis = cls(convex, L::c);
    e.sides = {side(H::re_difference, L::c)};
    e.conclusion = cls(convex, L::c_plus_1);
    e.dual = TheoremId::T2_2_ii;
  }
  {
    auto& e = add(TheoremId::T2_2_ii, "Re{zf'/f - z(L_{c+1} f)'/L_{c+1} f} > 0: C_{c+1}(lambda) within C_c(lambda)");
    e.hypothesis = cls(convex, L::c_plus_1);
    e.sides = {side(H::re_difference, L::c_plus_1)};
    e.conclusion = cls(convex, L::c);
    e.dual = TheoremId::T2_2_i;
  }
  {
    auto& e = add(TheoremId::T2_3, "c >= -lambda: f in S*(lambda) implies f in S*_c(lambda)");
    e.hypothesis = cls(starlike, L::none);
    e.conclusion = cls(starlike, L::c);
    e.domain = CDomain::ge_minus_lambda;
    e.unconditional = true;
  }
  {
    auto& e = add(TheoremId::C2_4, "c >= lambda: f in C(lambda) implies f in C_c(lambda)");
    e.hypothesis = cls(convex, L::none);
    e.conclusion = cls(convex, L::c);
    e.domain = CDomain::ge_lambda;
    e.unconditional = true;
  }
  {
    auto& e = add(TheoremId::C2_4_wide, "c >= -lambda: f in C(lambda) implies f in C_c(lambda)");
    e.hypothesis = cls(convex, L::none);
    e.conclusion = cls(convex, L::c);
    e.domain = CDomain::ge_minus_lambda;
    e.unconditional = true;
  }
  {
    auto& e = add(TheoremId::T2_5_i,
                  "|arg(zf'/f - lambda)| <= |arg(z(L_c f)'/L_c f - lambda)|: ST_c(eta,lambda) within ST_{c+1}(eta,lambda)");
    e.hypothesis = cls(strongly_starlike, L::c);
    e.sides = {side(H::arg_comparison, L::c)};
    e.conclusion = cls(strongly_starlike, L::c_plus_1);
    e.uses_eta = true;
    e.dual = TheoremId::T2_5_ii;
  }
  {
    auto& e = add(TheoremId::T2_5_ii,
                  "|arg(zf'/f - lambda)| <= |arg(z(L_{c+1} f)'/L_{c+1} f - lambda)|: ST_{c+1}(eta,lambda) within "
                  "ST_c(eta,lambda)");
    e.hypothesis = cls(strongly_starlike, L::c_plus_1);
    e.sides = {side(H::arg_comparison, L::c_plus_1)};
    e.conclusion = cls(strongly_starlike, L::c);
    e.uses_eta = true;
    e.dual = TheoremId::T2_5_i;
  }
  {
    auto& e = add(TheoremId::C2_6_i,
                  "|arg(zf'/f - lambda)| <= |arg(z(L_c f)'/L_c f - lambda)|: CV_c(eta,lambda) within CV_{c+1}(eta,lambda)");
    e.hypothesis = cls(strongly_convex, L::c);
    e.sides = {side(H::arg_comparison, L::c)};
    e.conclusion = cls(strongly_convex, L::c_plus_1);
    e.uses_eta = true;
    e.dual = TheoremId::C2_6_ii;
  }
  {
    auto& e = add(TheoremId::C2_6_ii,
                  "|arg(zf'/f - lambda)| <= |arg(z(L_{c+1} f)'/L_{c+1} f - lambda)|: CV_{c+1}(eta,lambda) within "
                  "CV_c(eta,lambda)");
    e.hypothesis = cls(strongly_convex, L::c_plus_1);
    e.sides = {side(H::arg_comparison, L::c_plus_1)};
    e.conclusion = cls(strongly_convex, L::c);
    e.uses_eta = true;
    e.dual = TheoremId::C2_6_i;
  }
  {
    auto& e = add(TheoremId::T2_7, "c > -1: CV_c(eta,lambda) within ST_c(eta,lambda)");
    e.hypothesis = cls(strongly_convex, L::c);
    e.conclusion = cls(strongly_starlike, L::c);
    e.uses_eta = true;
    e.unconditional = true;
  }
  {
    auto& e = add(TheoremId::T2_8_i,
                  "g in S*_c(lambda), Re{z(L_c zf'/L_c g)'/(z(L_c g)'/L_c g + c)} > 0 and "
                  "Re{zg'/g - z(L_c g)'/L_c g} > 0: K_c(beta,lambda) within K_{c+1}(beta,lambda)");
    e.companion = cls(starlike, L::c);
    e.hypothesis = cls(close_to_convex, L::c);
    e.sides = {side(H::close_to_convex_derivative, L::c, ShiftRef::c), side(H::companion_re_difference, L::c)};
    e.conclusion = cls(close_to_convex, L::c_plus_1);
    e.uses_beta = true;
    e.dual = TheoremId::T2_8_ii;
  }
  {
    auto& e = add(TheoremId::T2_8_ii,
                  "g in S*(lambda), Re{z(L_{c+1} zf'/L_{c+1} g)'/(z(L_{c+1} g)'/L_{c+1} g + c)} > 0 and "
                  "Re{zg'/g - z(L_{c+1} g)'/L_{c+1} g} > 0: K_{c+1}(beta,lambda) within K_c(beta,lambda)");
    e.companion = cls(starlike, variant == CompanionVariant::symmetric ? L::c_plus_1 : L::none);
    e.hypothesis = cls(close_to_convex, L::c_plus_1);
    e.sides = {side(H::close_to_convex_derivative, L::c_plus_1, ShiftRef::c),
               side(H::companion_re_difference, L::c_plus_1)};
    e.conclusion = cls(close_to_convex, L::c);
    e.uses_beta = true;
    e.dual = TheoremId::T2_8_i;
  }
  {
    auto& e = add(TheoremId::T2_9_i,
                  "g in C_c(lambda), Re{z((L_c zf')'/(L_c g)')'/(z(L_c g)''/(L_c g)' + c + 1)} > 0 and "
                  "Re{zg'/g - z(L_c g)'/L_c g} > 0: K*_c(beta,lambda) within K*_{c+1}(beta,lambda)");
    e.companion = cls(convex, L::c);
    e.hypothesis = cls(quasi_convex, L::c);
    e.sides = {side(H::quasi_convex_derivative, L::c, ShiftRef::c_plus_1), side(H::companion_re_difference, L::c)};
    e.conclusion = cls(quasi_convex, L::c_plus_1);
    e.uses_beta = true;
    e.dual = TheoremId::T2_9_ii;
  }
  {
    auto& e = add(TheoremId::T2_9_ii,
                  "g in C_{c+1}(lambda), Re{z((L_{c+1} zf')'/(L_{c+1} g)')'/(z(L_{c+1} g)''/(L_{c+1} g)' + c + 1)} > 0 "
                  "and Re{zg'/g - z(L_{c+1} g)'/L_{c+1} g} > 0: K*_{c+1}(beta,lambda) within K*_c(beta,lambda)");
    e.companion = cls(convex, L::c_plus_1);
    e.hypothesis = cls(quasi_convex, L::c_plus_1);
    e.sides = {side(H::quasi_convex_derivative, L::c_plus_1, ShiftRef::c_plus_1),
               side(H::companion_re_difference, L::c_plus_1)};
    e.conclusion = cls(quasi_convex, L::c);
    e.uses_beta = true;
    e.dual = TheoremId::T2_9_i;
  }
  {
    auto& e = add(TheoremId::T2_10, "-lambda <= c <= 1 - 2 lambda: f in S*_sigma(lambda) implies I^sigma f in S*_c(lambda)");
    e.hypothesis = cls(starlike, L::sigma);
    e.conclusion = cls(starlike, L::c, Subject::jks_of_f);
    e.domain = CDomain::closed_band;
    e.uses_sigma = true;
    e.unconditional = true;
  }
  {
    auto& e = add(TheoremId::C2_11, "-lambda < c < 1 - 2 lambda: f in C_sigma(lambda) implies I^sigma f in C_c(lambda)");
    e.hypothesis = cls(convex, L::sigma);
    e.conclusion = cls(convex, L::c, Subject::jks_of_f);
    e.domain = CDomain::open_band;
    e.uses_sigma = true;
    e.unconditional = true;
  }
  {
    auto& e = add(TheoremId::T2_12,
                  "c >= -lambda, z(L_c I^sigma f)'/L_c I^sigma f != lambda: f in ST_sigma(eta,lambda) implies "
                  "I^sigma f in ST_c(eta,lambda)");
    e.hypothesis = cls(strongly_starlike, L::sigma);
    e.sides = {side(H::nondegenerate_starlike, L::c, ShiftRef::zero, Subject::jks_of_f)};
    e.conclusion = cls(strongly_starlike, L::c, Subject::jks_of_f);
    e.domain = CDomain::ge_minus_lambda;
    e.uses_eta = true;
    e.uses_sigma = true;
    e.unconditional = true;
  }
  {
    auto& e = add(TheoremId::C2_13,
                  "c >= lambda, (z(L_c I^sigma f)')'/(L_c I^sigma f)' != lambda: f in CV_sigma(eta,lambda) implies "
                  "I^sigma f in CV_c(eta,lambda)");
    e.hypothesis = cls(strongly_convex, L::sigma);
    e.sides = {side(H::nondegenerate_convex, L::c, ShiftRef::zero, Subject::jks_of_f)};
    e.conclusion = cls(strongly_convex, L::c, Subject::jks_of_f);
    e.domain = CDomain::ge_lambda;
    e.uses_eta = true;
    e.uses_sigma = true;
    e.unconditional = true;
  }
  return t;
}

const std::vector<TheoremEntry>& catalog(CompanionVariant variant) {
  static const std::vector<TheoremEntry> stated = build_catalog(CompanionVariant::as_stated);
  static const std::vector<TheoremEntry> symmetric = build_catalog(CompanionVariant::symmetric);
  return variant == CompanionVariant::symmetric ? symmetric : stated;
}

bool compares_operator(HypothesisId id) {
  return id == HypothesisId::re_difference || id == HypothesisId::arg_comparison ||
         id == HypothesisId::close_to_convex_derivative || id == HypothesisId::quasi_convex_derivative ||
         id == HypothesisId::companion_re_difference;
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1_i: return "T2_1_i";
    case TheoremId::T2_1_ii: return "T2_1_ii";
    case TheoremId::T2_2_i: return "T2_2_i";
    case TheoremId::T2_2_ii: return "T2_2_ii";
    case TheoremId::T2_3: return "T2_3";
    case TheoremId::C2_4: return "C2_4";
    case TheoremId::C2_4_wide: return "C2_4_wide";
    case TheoremId::T2_5_i: return "T2_5_i";
    case TheoremId::T2_5_ii: return "T2_5_ii";
    case TheoremId::C2_6_i: return "C2_6_i";
    case TheoremId::C2_6_ii: return "C2_6_ii";
    case TheoremId::T2_7: return "T2_7";
    case TheoremId::T2_8_i: return "T2_8_i";
    case TheoremId::T2_8_ii: return "T2_8_ii";
    case TheoremId::T2_9_i: return "T2_9_i";
    case TheoremId::T2_9_ii: return "T2_9_ii";
    case TheoremId::T2_10: return "T2_10";
    case TheoremId::C2_11: return "C2_11";
    case TheoremId::T2_12: return "T2_12";
    case TheoremId::C2_13: return "C2_13";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view name) {
  for (TheoremId id : kAllTheorems) {
    if (theorem_name(id) == name) return id;
  }
  throw ConfigError("unknown theorem id '" + std::string(name) + "'");
}

const TheoremEntry& theorem_entry(TheoremId id, CompanionVariant variant) {
  return catalog(variant).at(static_cast<std::size_t>(id));
}

std::vector<std::string> check_catalog() {
  std::vector<std::string> problems;
  for (CompanionVariant variant : {CompanionVariant::as_stated, CompanionVariant::symmetric}) {
    const auto& table = catalog(variant);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const TheoremEntry& e = table[i];
      const std::string name(theorem_name(e.id));
      if (static_cast<std::size_t>(e.id) != i) problems.push_back(name + ": table order does not match the id");
      const bool moves_lift = e.hypothesis.lift != e.conclusion.lift && e.hypothesis.lift != LiftRef::none &&
                              e.hypothesis.lift != LiftRef::sigma;
      bool has_comparison = false;
      for (const SideClause& s : e.sides) {
        if (!compares_operator(s.id)) continue;
        has_comparison = true;
        if (s.op != e.hypothesis.lift) problems.push_back(name + ": side condition uses another operator than the hypothesis class");
      }
      if (moves_lift && !has_comparison) problems.push_back(name + ": inclusion between lifted classes without a comparison hypothesis");
      if (e.unconditional && has_comparison) problems.push_back(name + ": unconditional entry carries a comparison hypothesis");
      if (e.hypothesis.kind == ClassKind::close_to_convex || e.hypothesis.kind == ClassKind::quasi_convex) {
        if (!e.companion) problems.push_back(name + ": companion class missing");
      }
      if (e.dual) {
        const TheoremEntry& d = table.at(static_cast<std::size_t>(*e.dual));
        if (!d.dual || *d.dual != e.id) problems.push_back(name + ": dual link is not symmetric");
        if (d.hypothesis.lift != e.conclusion.lift || d.conclusion.lift != e.hypothesis.lift ||
            d.hypothesis.kind != e.hypothesis.kind || d.conclusion.kind != e.conclusion.kind) {
          problems.push_back(name + ": dual part does not swap source and target classes");
        }
      }
    }
  }
  return problems;
}

std::vector<ParameterPoint> default_points(TheoremId id) {
  const TheoremEntry& e = theorem_entry(id);
  const std::vector<double> lambdas{0.0, 0.25, 0.5};
  const std::vector<double> betas = e.uses_beta ? std::vector<double>{0.0, 0.25} : std::vector<double>{0.0};
  const std::vector<double> etas = e.uses_eta ? std::vector<double>{0.5, 1.0} : std::vector<double>{1.0};
  const std::vector<double> cs{-0.25, 0.0, 1.0, 2.0};
  const std::vector<double> sigmas = e.uses_sigma ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{1.0};
  std::vector<ParameterPoint> out;
  for (double lambda : lambdas) {
    for (double beta : betas) {
      for (double eta : etas) {
        for (double c : cs) {
          for (double sigma : sigmas) {
            ParameterPoint p{lambda, beta, eta, c, sigma};
            if (in_domain(id, p)) out.push_back(p);
          }
        }
      }
    }
  }
  return out;
}

bool in_domain(TheoremId id, const ParameterPoint& p) {
  try {
    check_domain(id, p);
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

void check_domain(TheoremId id, const ParameterPoint& p) {
  const TheoremEntry& e = theorem_entry(id);
  const std::string name(theorem_name(id));
  if (!(p.lambda >= 0.0 && p.lambda < 1.0)) throw ConfigError(name + ": lambda must lie in [0, 1)");
  if (!(p.beta >= 0.0 && p.beta < 1.0)) throw ConfigError(name + ": beta must lie in [0, 1)");
  if (!(p.eta > 0.0 && p.eta <= 1.0)) throw ConfigError(name + ": eta must lie in (0, 1]");
  if (!(p.c > -1.0)) throw ConfigError(name + ": c must exceed -1");
  if (e.uses_sigma && !(p.sigma > 0.0)) throw ConfigError(name + ": sigma must be positive");
  switch (e.domain) {
    case CDomain::any: break;
    case CDomain::ge_minus_lambda:
      if (!(p.c >= -p.lambda)) throw ConfigError(name + ": requires c >= -lambda");
      break;
    case CDomain::ge_lambda:
      if (!(p.c >= p.lambda)) throw ConfigError(name + ": requires c >= lambda");
      break;
    case CDomain::closed_band:
      if (!(p.c >= -p.lambda && p.c <= 1.0 - 2.0 * p.lambda)) throw ConfigError(name + ": requires -lambda <= c <= 1 - 2 lambda");
      break;
    case CDomain::open_band:
      if (!(p.c > -p.lambda && p.c < 1.0 - 2.0 * p.lambda)) throw ConfigError(name + ": requires -lambda < c < 1 - 2 lambda");
      break;
  }
}

std::optional<OperatorSpec> resolve_lift(LiftRef ref, const ParameterPoint& p) {
  switch (ref) {
    case LiftRef::none: return std::nullopt;
    case LiftRef::c: return OperatorSpec::bernardi(p.c);
    case LiftRef::c_plus_1: return OperatorSpec::bernardi(p.c + 1.0);
    case LiftRef::sigma: return OperatorSpec::jks(p.sigma);
  }
  return std::nullopt;
}

double resolve_shift(ShiftRef ref, const ParameterPoint& p) {
  switch (ref) {
    case ShiftRef::zero: return 0.0;
    case ShiftRef::c: return p.c;
    case ShiftRef::c_plus_1: return p.c + 1.0;
  }
  return 0.0;
}

ClassSpec resolve_class(const ClassClause& clause, const ParameterPoint& p) {
  ClassSpec s;
  s.kind = clause.kind;
  s.lambda = p.lambda;
  s.beta = p.beta;
  s.eta = p.eta;
  if (clause.kind != ClassKind::close_to_convex && clause.kind != ClassKind::quasi_convex) s.beta = 0.0;
  if (clause.kind != ClassKind::strongly_starlike && clause.kind != ClassKind::strongly_convex) s.eta = 1.0;
  s.lift = resolve_lift(clause.lift, p);
  return s;
}

}  // namespace schlicht
