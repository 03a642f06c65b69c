#include "compnorm/report.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>

#include "compnorm/errors.h"

namespace compnorm {

namespace {

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  const double k = 1.0 / (2.0 * std::sqrt(2.0));
  out.push_back({"single-prime-disc",
                 "3/2 + (2^{-s} + 2i 4^{-s} + 8^{-s})/(2 sqrt 2): one prime, maps onto D(3/2, 1)",
                 PolySymbol(1.5, DirichletPoly{{2, k}, {4, cplx(0, 2 * k)}, {8, k}}, 1.0)});
  out.push_back({"annulus-a", "3/2 + (3/4) 2^{-s} + (1/4) 3^{-s}; annulus inner radius 1/2",
                 AffineSymbol(1.5, {0.75, 0.25, 0.0})});
  out.push_back({"annulus-b", "3/2 + (1/2) 2^{-s} + (1/2) 3^{-s}; annulus inner radius 0",
                 AffineSymbol(1.5, {0.5, 0.5, 0.0})});
  out.push_back({"annulus-c", "3/2 + (4/6) 2^{-s} + (1/6) 3^{-s} + (1/6) 5^{-s}; inner radius 1/3",
                 AffineSymbol(1.5, {4.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0})});

  InnerSymbolParams inner;
  for (int j = 1; j <= 8; ++j) {
    inner.lambdas.push_back(std::ldexp(1.0, -j));
    inner.thetas.push_back(double(j));
  }
  inner.c = 1.5;
  inner.r = 1.0;
  inner.omitted_lambda = std::ldexp(1.0, -8);
  out.push_back({"inner-symbol",
                 "Mobius image of exp(-sum 2^{-j} (e^{ij} + p_j^{-s})/(e^{ij} - p_j^{-s})), j <= 8, "
                 "into D(3/2, 1)",
                 inner});

  out.push_back({"phi-alpha-0.5", "phi_alpha with alpha = 1/2; norm^2 = 4", PhiAlphaFixture{0.5}});
  out.push_back({"phi-alpha-1", "phi_alpha with alpha = 1; norm^2 = 2", PhiAlphaFixture{1.0}});
  out.push_back({"phi-alpha-1.4", "phi_alpha with alpha = 1.4; norm^2 = 2/1.4",
                 PhiAlphaFixture{1.4}});
  out.push_back({"two-s-family", "c + r 2^{-s} across interior and boundary cases",
                 TwoSFamily{{{1.5, 1.0},
                             {0.625, 0.125},
                             {0.75, 0.25},
                             {2.0, 1.0},
                             {2.0, 1.5},
                             {3.0, 2.5},
                             {3.5, 3.0},
                             {cplx(1.2, 3.0), 0.4}}}});
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

const Fixture& find_fixture(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw PreconditionError("unknown fixture: " + name);
}

double sig15(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format15(x));
}

std::string format15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

nlohmann::json report_header(const std::string& command, const nlohmann::json& args,
                             std::optional<std::uint64_t> seed) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  nlohmann::json h;
  h["command"] = command;
  h["args"] = args;
  h["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  h["artifact_version"] = kArtifactVersion;
  h["timestamp"] = stamp;
  return h;
}

nlohmann::json to_json(cplx z) { return {sig15(z.real()), sig15(z.imag())}; }

nlohmann::json to_json(const AffineSymbol& phi) {
  nlohmann::json j;
  j["c"] = to_json(phi.c());
  nlohmann::json coeffs = nlohmann::json::array(), twist = nlohmann::json::array();
  for (double v : phi.coeffs().entries()) coeffs.push_back(sig15(v));
  for (cplx t : phi.twist()) twist.push_back(to_json(t));
  j["coeffs"] = coeffs;
  j["twist"] = twist;
  j["r"] = sig15(phi.r());
  return j;
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& e : report.entries) {
    entries[e.name] = {{"value", e.applicable ? nlohmann::json(sig15(e.value)) : nullptr},
                       {"applicable", e.applicable},
                       {"kind", e.is_lower ? "lower" : "upper"},
                       {"provenance", e.provenance}};
  }
  return {{"entries", entries},
          {"max_lower", sig15(report.max_lower())},
          {"min_upper", sig15(report.min_upper())},
          {"consistent", report.consistent()}};
}

nlohmann::json to_json(const MeasureEstimate& m) {
  return {{"estimate", sig15(m.estimate)},
          {"ci95", sig15(m.ci95)},
          {"n_samples", m.n_samples},
          {"seed", m.seed}};
}

nlohmann::json to_json(const PowerSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (cplx a : f.coeffs()) coeffs.push_back(to_json(a));
  return {{"coeffs", coeffs}};
}

nlohmann::json to_json(const InnerSymbolParams& p) {
  nlohmann::json l = nlohmann::json::array(), t = nlohmann::json::array();
  for (double v : p.lambdas) l.push_back(sig15(v));
  for (double v : p.thetas) t.push_back(sig15(v));
  return {{"lambdas", l},
          {"thetas", t},
          {"c", to_json(p.c)},
          {"r", sig15(p.r)},
          {"omitted_lambda", sig15(p.omitted_lambda)}};
}

PowerSeries power_series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw PreconditionError("PowerSeries JSON: expected {\"coeffs\": [[re, im], ...]}");
  }
  std::vector<cplx> c;
  for (const auto& pair : j["coeffs"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw PreconditionError("PowerSeries JSON: each coefficient must be [re, im]");
    }
    c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  if (c.empty()) throw PreconditionError("PowerSeries JSON: no coefficients");
  return PowerSeries(std::move(c));
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& trace) {
  out << "t,re,im\n";
  for (const auto& p : trace) {
    out << format15(p.t) << ',' << format15(p.re) << ',' << format15(p.im) << '\n';
  }
}

}  // namespace compnorm
