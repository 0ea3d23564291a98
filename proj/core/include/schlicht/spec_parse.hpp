#pragma once

#include <string_view>

#include "schlicht/catalog.hpp"
#include "schlicht/classify.hpp"
#include "schlicht/function.hpp"
#include "schlicht/grid.hpp"
#include "schlicht/operator_spec.hpp"

namespace schlicht {

/// Text specs used by the command line. Every parser throws ParseError.

/// "0.5", "-2i", "i", "0.5+0.25i", "1e-3-2i".
Complex parse_complex(std::string_view text);
double parse_real(std::string_view text);

/// "bernardi:c=1", "jks:sigma=0.5", "libera" (= bernardi:c=1).
OperatorSpec parse_operator(std::string_view text);

/// "identity", "koebe:lambda=0.25,x=1" (or theta=<radians>), "half-plane",
/// "poly:a2=0.1,a3=0.05i", "perturbed:seed=3,degree=12,amplitude=0.5",
/// "series:path=f.json", and "<operator>(<function>)" such as
/// "bernardi:c=1(koebe:lambda=0,x=1)". Labels printed by the library parse back.
AnalyticFunction parse_function(std::string_view text);

/// "starlike:lambda=0.5", "convex:lambda=0", "close-to-convex:beta=0.25,lambda=0",
/// "quasi-convex:beta=0,lambda=0", "strongly-starlike:eta=0.5,lambda=0",
/// "strongly-convex:eta=1,lambda=0.25"; add "c=<c>" or "sigma=<s>" for the
/// lifted class. Missing parameters default to lambda = beta = 0, eta = 1.
ClassSpec parse_class(std::string_view text);

/// "default", "default:level=1" (refined), or "radii=0.1/0.5/0.9,angles=128".
DiskGrid parse_grid(std::string_view text);

/// "lambda=0.25,c=0.25,sigma=1" (eta, beta likewise; unspecified fields default).
ParameterPoint parse_point(std::string_view text);

}  // namespace schlicht
