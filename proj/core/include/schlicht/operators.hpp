#pragma once

#include <array>
#include <string_view>

#include "schlicht/function.hpp"
#include "schlicht/operator_spec.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// Absolute tolerance of the quadrature backend.
inline constexpr double kQuadratureTolerance = 1e-10;

/// Coefficient n multiplied by the operator's diagonal multiplier.
///
/// A nonzero a_0 under Bernardi(c <= 0) has no convergent integral and throws
/// InvalidParameter. The coefficient a_1 is left bit-identical (its multiplier is 1).
Series apply_multiplier(const OperatorSpec& op, const Series& a);

/// The operator evaluated through its defining integral at z.
///
/// Bernardi uses u = v^(1/(c+1)), JKS splits at u = 1/e with w = -log u and
/// s = w^sigma on the inner piece. Requires f(0) = 0 and, for JKS, sigma > 0.
/// Throws InvalidParameter, OutsideDisk or QuadratureFailure.
Complex apply_quadrature(const OperatorSpec& op, const AnalyticFunction& f, Complex z);

/// F, F', F'' of F = op(f) at z through the integral representation
/// F^(k)(z) = int K(u) u^k f^(k)(zu) du.
Triple quadrature_triple(const OperatorSpec& op, const AnalyticFunction& f, Complex z);

/// Exact operator identities, checked coefficient by coefficient.
enum class IdentityId {
  id_1_7,   // z (I^s L_c f)' = (c+1) I^s f - c I^s L_c f
  id_1_8,   // z (L_c I^s f)' = (c+1) I^s f - c L_c I^s f
  id_2_5,   // z (L_c f)' + c L_c f = (c+1) f
  id_2_8,   // z (L_{c+1} f)' + (c+1) L_{c+1} f = (c+2) f
  id_2_18,  // z(L_c g)' + c L_c g = (c+1)/(c+2) [z(L_{c+1} g)' + (c+1) L_{c+1} g],  g = z f'
  id_2_19,  // the same with g = f
  commute,  // L_c I^s f = I^s L_c f
};

inline constexpr std::array<IdentityId, 7> kAllIdentities = {
    IdentityId::id_1_7,  IdentityId::id_1_8,  IdentityId::id_2_5, IdentityId::id_2_8,
    IdentityId::id_2_18, IdentityId::id_2_19, IdentityId::commute,
};

std::string_view identity_name(IdentityId id);
/// Accepts the names printed by identity_name ("Id_1_7", ..., "Commute").
IdentityId parse_identity(std::string_view name);

/// Max absolute coefficient difference between the two sides. Throws
/// InvalidParameter for c <= -1.
double check_identity(IdentityId id, const Series& a, double c, double sigma);

}  // namespace schlicht
