#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "compnorm/affine_symbol.h"
#include "compnorm/disc.h"
#include "compnorm/opnorm.h"
#include "compnorm/torus.h"

namespace compnorm {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct PhiAlphaFixture {
  double alpha;
};

// Symbols c + r 2^{-s}, given as (c, r) pairs.
struct TwoSFamily {
  std::vector<std::pair<cplx, double>> members;
};

using FixtureData =
    std::variant<AffineSymbol, PolySymbol, InnerSymbolParams, PhiAlphaFixture, TwoSFamily>;

struct Fixture {
  std::string name;
  std::string description;
  FixtureData data;
};

const std::vector<Fixture>& fixtures();
// Throws PreconditionError for unknown names.
const Fixture& find_fixture(const std::string& name);

// x rounded to 15 significant digits, so that JSON output carries at most 15.
double sig15(double x);
std::string format15(double x);

nlohmann::json report_header(const std::string& command, const nlohmann::json& args,
                             std::optional<std::uint64_t> seed);

nlohmann::json to_json(cplx z);
nlohmann::json to_json(const AffineSymbol& phi);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const MeasureEstimate& m);
nlohmann::json to_json(const PowerSeries& f);
nlohmann::json to_json(const InnerSymbolParams& p);

// {"coeffs": [[re, im], ...]}; throws PreconditionError on malformed input.
PowerSeries power_series_from_json(const nlohmann::json& j);

// Header `t,re,im`, one row per point, 15 significant digits.
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& trace);

}  // namespace compnorm
