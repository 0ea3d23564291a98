#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schlicht/classify.hpp"
#include "schlicht/function.hpp"
#include "schlicht/grid.hpp"

namespace schlicht {

struct GenerateOptions {
  CertifyOptions certify;
  /// Try the identity function (a zero-amplitude perturbation) first.
  bool include_identity = false;
  /// Truncation order for preimages under an operator lift.
  int preimage_order = 2048;
  /// Rejections allowed per requested function.
  int rejections_per_member = 1000;
};

/// Accept-reject sampling of certified members of `spec`.
///
/// Candidates come from the generalized Koebe family (lambda' >= lambda,
/// |x| = 1), seeded polynomial perturbations of the identity and, for the
/// classes with a companion g, functions with z f' = g p for a small
/// perturbation p of 1. Convex-type classes use the coefficient map
/// b_n = a_n / n of a starlike-type candidate; lifted classes use the exact
/// preimage under the operator's multipliers. A candidate is accepted when
/// certify() says Member with margin > 10 kMarginFloor and the
/// nondegeneracy check passes.
///
/// Deterministic in `seed`. Throws GenerationExhausted after
/// count * rejections_per_member rejections.
std::vector<AnalyticFunction> generate_members(const ClassSpec& spec, int count, std::uint64_t seed,
                                               const DiskGrid& grid,
                                               const std::optional<AnalyticFunction>& companion = std::nullopt,
                                               const GenerateOptions& options = {});

/// Exact preimage of f under the multipliers of op, truncated at `order`
/// (polynomials stay polynomials).
AnalyticFunction multiplier_preimage(const OperatorSpec& op, const AnalyticFunction& f, int order);

/// b_n = a_n / n: the function whose z-derivative is f.
AnalyticFunction z_antiderivative(const AnalyticFunction& f, int order);

}  // namespace schlicht
