#include "schlicht/spec_parse.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "schlicht/error.hpp"
#include "schlicht/json_io.hpp"

namespace schlicht {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Spec {
  std::string name;
  std::map<std::string, std::string, std::less<>> params;
};

Spec split_spec(std::string_view text) {
  text = trim(text);
  Spec spec;
  const std::size_t colon = text.find(':');
  spec.name = std::string(trim(text.substr(0, colon)));
  if (spec.name.empty()) throw ParseError("empty spec");
  if (colon == std::string_view::npos) return spec;
  const std::string_view rest = text.substr(colon + 1);
  if (trim(rest).empty()) return spec;
  for (std::string_view kv : split(rest, ',')) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(text) + "'");
    std::string key(trim(kv.substr(0, eq)));
    if (spec.params.count(key)) throw ParseError("duplicate key '" + key + "' in '" + std::string(text) + "'");
    spec.params.emplace(std::move(key), std::string(trim(kv.substr(eq + 1))));
  }
  return spec;
}

void allow_only(const Spec& s, std::initializer_list<std::string_view> keys) {
  for (const auto& [k, v] : s.params) {
    bool ok = false;
    for (std::string_view a : keys) ok = ok || a == k;
    if (!ok) throw ParseError("unknown key '" + k + "' for '" + s.name + "'");
  }
}

double real_or(const Spec& s, std::string_view key, double fallback) {
  auto it = s.params.find(key);
  return it == s.params.end() ? fallback : parse_real(it->second);
}

const std::string& required(const Spec& s, std::string_view key) {
  auto it = s.params.find(key);
  if (it == s.params.end()) throw ParseError("'" + s.name + "' needs " + std::string(key) + "=");
  return it->second;
}

long long parse_integer(std::string_view text) {
  text = trim(text);
  long long v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

// Index of the '(' matching a final ')', or npos.
std::size_t outer_paren(std::string_view s) {
  if (s.empty() || s.back() != ')') return std::string_view::npos;
  int depth = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] == ')') ++depth;
    if (s[i] == '(' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

template <typename F>
auto rethrow_as_parse(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("expected a complex number, got ''");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not an exponent sign and not leading
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  auto imag_of = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    if (s.front() == '+') s.remove_prefix(1);
    return parse_real(s);
  };
  if (split_at == std::string_view::npos) return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

OperatorSpec parse_operator(std::string_view text) {
  const Spec s = split_spec(text);
  return rethrow_as_parse([&] {
    if (s.name == "bernardi") {
      allow_only(s, {"c"});
      return OperatorSpec::bernardi(parse_real(required(s, "c")));
    }
    if (s.name == "jks") {
      allow_only(s, {"sigma"});
      return OperatorSpec::jks(parse_real(required(s, "sigma")));
    }
    if (s.name == "libera") {
      allow_only(s, {});
      return OperatorSpec::bernardi(1.0);
    }
    throw ParseError("unknown operator '" + s.name + "' (expected bernardi, jks or libera)");
  });
}

AnalyticFunction parse_function(std::string_view text) {
  text = trim(text);
  if (const std::size_t paren = outer_paren(text); paren != std::string_view::npos && paren > 0) {
    const OperatorSpec op = parse_operator(text.substr(0, paren));
    const AnalyticFunction inner = parse_function(text.substr(paren + 1, text.size() - paren - 2));
    return AnalyticFunction::applied(op, inner);
  }
  const Spec s = split_spec(text);
  return rethrow_as_parse([&] {
    if (s.name == "identity") {
      allow_only(s, {});
      return AnalyticFunction::identity();
    }
    if (s.name == "half-plane") {
      allow_only(s, {});
      return AnalyticFunction::half_plane();
    }
    if (s.name == "koebe") {
      allow_only(s, {"lambda", "x", "theta"});
      if (s.params.count("x") && s.params.count("theta")) throw ParseError("koebe takes x= or theta=, not both");
      Complex x = 1.0;
      if (auto it = s.params.find("x"); it != s.params.end()) x = parse_complex(it->second);
      if (auto it = s.params.find("theta"); it != s.params.end()) x = std::polar(1.0, parse_real(it->second));
      return AnalyticFunction::koebe(real_or(s, "lambda", 0.0), x);
    }
    if (s.name == "poly") {
      std::vector<Complex> c(2);
      c[1] = 1.0;
      for (const auto& [k, v] : s.params) {
        if (k.size() < 2 || k[0] != 'a') throw ParseError("poly keys are a<n>, got '" + k + "'");
        const long long n = parse_integer(std::string_view(k).substr(1));
        if (n < 0 || n > 100000) throw ParseError("poly coefficient index out of range: '" + k + "'");
        if (c.size() <= static_cast<std::size_t>(n)) c.resize(static_cast<std::size_t>(n) + 1);
        c[static_cast<std::size_t>(n)] = parse_complex(v);
      }
      return AnalyticFunction::polynomial(std::move(c));
    }
    if (s.name == "perturbed") {
      allow_only(s, {"seed", "degree", "amplitude"});
      const long long seed = parse_integer(required(s, "seed"));
      const long long degree = parse_integer(required(s, "degree"));
      if (seed < 0) throw ParseError("perturbed: seed must be >= 0");
      if (degree < 1 || degree > 100000) throw ParseError("perturbed: degree out of range");
      return generate_perturbed(static_cast<std::uint64_t>(seed), static_cast<int>(degree),
                                parse_real(required(s, "amplitude")));
    }
    if (s.name == "series") {
      allow_only(s, {"path"});
      const std::string& path = required(s, "path");
      return AnalyticFunction::from_series(load_series_file(path), "series:path=" + path);
    }
    throw ParseError("unknown function '" + s.name +
                     "' (expected identity, koebe, half-plane, poly, perturbed, series or op(fn))");
  });
}

ClassSpec parse_class(std::string_view text) {
  const Spec s = split_spec(text);
  return rethrow_as_parse([&] {
    ClassSpec c;
    if (s.name == "starlike") {
      c.kind = ClassKind::starlike;
      allow_only(s, {"lambda", "c", "sigma"});
    } else if (s.name == "convex") {
      c.kind = ClassKind::convex;
      allow_only(s, {"lambda", "c", "sigma"});
    } else if (s.name == "close-to-convex") {
      c.kind = ClassKind::close_to_convex;
      allow_only(s, {"beta", "lambda", "c", "sigma"});
    } else if (s.name == "quasi-convex") {
      c.kind = ClassKind::quasi_convex;
      allow_only(s, {"beta", "lambda", "c", "sigma"});
    } else if (s.name == "strongly-starlike") {
      c.kind = ClassKind::strongly_starlike;
      allow_only(s, {"eta", "lambda", "c", "sigma"});
    } else if (s.name == "strongly-convex") {
      c.kind = ClassKind::strongly_convex;
      allow_only(s, {"eta", "lambda", "c", "sigma"});
    } else {
      throw ParseError("unknown class '" + s.name + "'");
    }
    c.lambda = real_or(s, "lambda", 0.0);
    c.beta = real_or(s, "beta", 0.0);
    c.eta = real_or(s, "eta", 1.0);
    if (s.params.count("c") && s.params.count("sigma")) throw ParseError("a class takes c= or sigma=, not both");
    if (auto it = s.params.find("c"); it != s.params.end()) c.lift = OperatorSpec::bernardi(parse_real(it->second));
    if (auto it = s.params.find("sigma"); it != s.params.end()) c.lift = OperatorSpec::jks(parse_real(it->second));
    c.validate();
    return c;
  });
}

DiskGrid parse_grid(std::string_view text) {
  const Spec s = split_spec(text);
  return rethrow_as_parse([&] {
    DiskGrid g;
    if (s.name == "default") {
      allow_only(s, {"level"});
      g = DiskGrid::default_grid();
      if (auto it = s.params.find("level"); it != s.params.end()) {
        const long long level = parse_integer(it->second);
        if (level < 0 || level > 8) throw ParseError("grid level must lie in [0, 8]");
        g = g.refined(static_cast<int>(level));
      }
    } else if (s.name.starts_with("radii=")) {
      // "radii=...,angles=..." has no name part; reparse as parameters
      const Spec p = split_spec("grid:" + std::string(trim(text)));
      allow_only(p, {"radii", "angles"});
      for (std::string_view r : split(required(p, "radii"), '/')) g.radii.push_back(parse_real(r));
      g.angles_per_radius = 256;
      if (auto it = p.params.find("angles"); it != p.params.end()) {
        const long long m = parse_integer(it->second);
        if (m < 8 || m > (1 << 20)) throw ParseError("angles must lie in [8, 2^20]");
        g.angles_per_radius = static_cast<int>(m);
      }
    } else {
      throw ParseError("unknown grid '" + std::string(text) + "' (expected default or radii=a/b/c,angles=M)");
    }
    g.validate();
    return g;
  });
}

ParameterPoint parse_point(std::string_view text) {
  const Spec s = split_spec("point:" + std::string(trim(text)));
  allow_only(s, {"lambda", "beta", "eta", "c", "sigma"});
  ParameterPoint p;
  p.lambda = real_or(s, "lambda", p.lambda);
  p.beta = real_or(s, "beta", p.beta);
  p.eta = real_or(s, "eta", p.eta);
  p.c = real_or(s, "c", p.c);
  p.sigma = real_or(s, "sigma", p.sigma);
  return p;
}

}  // namespace schlicht
