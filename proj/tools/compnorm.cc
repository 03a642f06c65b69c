// compnorm: command-line front end for the composition-norm library.
//
// Reports are JSON on stdout (or --out PATH). Exit status: 0 on success,
// 1 on usage or input errors, 2 when a checked inequality fails.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "compnorm/composition.h"
#include "compnorm/errors.h"
#include "compnorm/majorization.h"
#include "compnorm/opnorm.h"
#include "compnorm/report.h"
#include "compnorm/torus.h"
#include "compnorm/verify.h"
#include "compnorm/zeta.h"

using namespace compnorm;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

cplx parse_complex(const std::string& text) {
  const auto v = parse_list(text, "--c");
  if (v.size() > 2) throw CLI::ValidationError("--c", "expected re[,im]");
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

// Options shared by the symbol-taking commands.
struct SymbolArgs {
  std::string c = "1.5";
  std::string coeffs;
  std::string fixture;

  void add(CLI::App* app) {
    app->add_option("--c", c, "constant term re[,im]");
    app->add_option("--coeffs", coeffs, "nonnegative coefficients on 2^{-s}, 3^{-s}, ...");
    app->add_option("--fixture", fixture, "named fixture instead of --c/--coeffs");
  }

  AffineSymbol affine() const {
    if (!fixture.empty()) {
      const auto& f = find_fixture(fixture);
      if (const auto* a = std::get_if<AffineSymbol>(&f.data)) return *a;
      throw PreconditionError("fixture '" + fixture + "' is not an affine symbol");
    }
    if (coeffs.empty()) throw CLI::ValidationError("--coeffs", "required without --fixture");
    return AffineSymbol(parse_complex(c), parse_list(coeffs, "--coeffs"));
  }

  PolySymbol poly() const {
    if (!fixture.empty()) {
      const auto& f = find_fixture(fixture);
      if (const auto* p = std::get_if<PolySymbol>(&f.data)) return *p;
    }
    return PolySymbol(affine());
  }
};

json args_of(const CLI::App* app) {
  json args = json::object();
  for (const auto* opt : app->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    const auto& res = opt->results();
    std::string joined;
    for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? "," : "") + res[i];
    args[opt->get_name()] = opt->get_expected_min() == 0 ? json(true) : json(joined);
  }
  return args;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot open --out file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const std::string& out_path, const json& report) {
  Output out(out_path);
  out.stream() << report.dump(2) << '\n';
}

json bounds_entry(const BoundReport& rep) { return to_json(rep); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition operator norms on the Hardy space of Dirichlet series"};
  app.require_subcommand(1);
  std::string out_path;
  std::uint64_t seed = 1;

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bound report for an affine symbol or phi_alpha");
  SymbolArgs bounds_sym;
  bounds_sym.add(bounds);
  unsigned nin = kSuiteNin, kout = kSuiteKout;
  std::optional<double> alpha;
  unsigned sweep = 0;
  bounds->add_option("--nin", nin, "input truncation for the matrix bound");
  bounds->add_option("--kout", kout, "output degree for the matrix bound");
  bounds->add_option("--alpha", alpha, "report for phi_alpha instead");
  bounds->add_option("--sweep", sweep, "random parameter sweep of this many points");
  bounds->add_option("--seed", seed, "seed for --sweep");
  bounds->add_option("--out", out_path, "write the report here");

  // opnorm
  auto* opnorm = app.add_subcommand("opnorm", "largest singular value of a truncated matrix");
  SymbolArgs opnorm_sym;
  opnorm_sym.add(opnorm);
  opnorm->add_option("--nin", nin, "input truncation");
  opnorm->add_option("--kout", kout, "output degree");
  opnorm->add_option("--alpha", alpha, "use phi_alpha");
  opnorm->add_option("--out", out_path, "write the report here");

  // subordinate
  auto* subordinate =
      app.add_subcommand("subordinate", "norm ordering for a majorized pair of coefficient vectors");
  std::string c_text = "1.5", coeffs_text, other_text;
  unsigned samples_f = 20;
  subordinate->add_option("--c", c_text, "constant term re[,im]");
  subordinate->add_option("--coeffs", coeffs_text, "majorizing vector c")->required();
  subordinate->add_option("--other", other_text, "candidate b with b majorized by c")->required();
  subordinate->add_option("--samples", samples_f, "random test polynomials");
  subordinate->add_option("--seed", seed, "seed for the test polynomials");
  subordinate->add_option("--out", out_path, "write the report here");

  // majorize
  auto* majorize = app.add_subcommand("majorize", "majorization, BvN decomposition, moment dominance");
  std::string maj_c, maj_b;
  unsigned multinomial_k = 0, moments_k = 20;
  majorize->add_option("--coeffs", maj_c, "vector c");
  majorize->add_option("--other", maj_b, "vector b");
  majorize->add_option("--kout", moments_k, "moment dominance up to this order");
  majorize->add_option("--multinomial", multinomial_k, "exact multinomial inequality up to k");
  majorize->add_option("--out", out_path, "write the report here");

  // measure
  auto* measure = app.add_subcommand("measure", "Haar measure of E_delta and the constant C_delta");
  SymbolArgs measure_sym;
  measure_sym.add(measure);
  double delta = 0.5, T = 0.0;
  std::uint64_t samples = 100000;
  long steps = 0;
  measure->add_option("--delta", delta, "level in [0, 1]");
  measure->add_option("--samples", samples, "Monte-Carlo samples");
  measure->add_option("--seed", seed, "sampling seed");
  measure->add_option("--T", T, "also compute the time average over [-T, T]");
  measure->add_option("--steps", steps, "grid points for the time average");
  measure->add_option("--out", out_path, "write the report here");

  // curve
  auto* curve = app.add_subcommand("curve", "trace of phi(it)");
  SymbolArgs curve_sym;
  curve_sym.add(curve);
  double curve_T = 200.0;
  long curve_steps = 400000;
  bool csv = false;
  curve->add_option("--T", curve_T, "trace over [-T, T]");
  curve->add_option("--steps", curve_steps, "number of points");
  curve->add_flag("--csv", csv, "emit the trace as CSV t,re,im");
  curve->add_option("--out", out_path, "write the report or CSV here");

  // inner-check
  auto* inner = app.add_subcommand("inner-check", "boundary behaviour of the inner-function symbol");
  std::string inner_fixture = "inner-symbol";
  double sigma = 1e-8;
  std::uint64_t inner_samples = 1000000;
  inner->add_option("--fixture", inner_fixture, "inner-symbol fixture");
  inner->add_option("--sigma", sigma, "distance to the boundary");
  inner->add_option("--samples", inner_samples, "Monte-Carlo samples");
  inner->add_option("--seed", seed, "sampling seed");
  inner->add_option("--out", out_path, "write the report here");

  // verify-lemmas
  auto* verify = app.add_subcommand("verify-lemmas", "run the inequality suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--out", out_path, "write the report here");

  // fixtures
  auto* list = app.add_subcommand("fixtures", "list the shipped fixtures");
  list->add_option("--out", out_path, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds->parsed()) {
      json report{{"header", report_header("bounds", args_of(bounds),
                                           sweep ? std::optional(seed) : std::nullopt)}};
      bool ok = true;
      if (sweep > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        json points = json::array();
        unsigned violations = 0;
        for (unsigned i = 0; i < sweep; ++i) {
          const std::size_t d = 1 + i % 3;
          const double r = 0.05 + 2.0 * u(rng);
          std::vector<double> coeffs(d);
          double s = 0.0;
          for (auto& v : coeffs) s += (v = 0.05 + u(rng));
          for (auto& v : coeffs) v *= r / s;
          const double a = r * (i % 5 == 0 ? 1.0 : 1.0 + 2.0 * u(rng)) * (1 + 1e-14);
          const AffineSymbol phi(cplx(0.5 + a, u(rng)), coeffs);
          const auto rep = bound_suite(phi, std::min(nin, 16u), std::min(kout, 24u));
          if (!rep.consistent()) ++violations;
          points.push_back({{"symbol", to_json(phi)},
                            {"max_lower", sig15(rep.max_lower())},
                            {"min_upper", sig15(rep.min_upper())},
                            {"consistent", rep.consistent()}});
        }
        ok = violations == 0;
        report["points"] = points;
        report["violations"] = violations;
      } else if (alpha) {
        const auto rep = suite_for_phi_alpha(*alpha, nin, kout);
        report["alpha"] = sig15(*alpha);
        report["alpha0"] = sig15(alpha0());
        report["report"] = bounds_entry(rep);
        ok = rep.consistent();
      } else if (!bounds_sym.fixture.empty() &&
                 std::holds_alternative<PhiAlphaFixture>(find_fixture(bounds_sym.fixture).data)) {
        const double a = std::get<PhiAlphaFixture>(find_fixture(bounds_sym.fixture).data).alpha;
        const auto rep = suite_for_phi_alpha(a, nin, kout);
        report["alpha"] = sig15(a);
        report["report"] = bounds_entry(rep);
        ok = rep.consistent();
      } else if (!bounds_sym.fixture.empty() &&
                 std::holds_alternative<TwoSFamily>(find_fixture(bounds_sym.fixture).data)) {
        json members = json::array();
        for (const auto& [c, r] : std::get<TwoSFamily>(find_fixture(bounds_sym.fixture).data).members) {
          const AffineSymbol phi(c, {r});
          const auto rep = bound_suite(phi, nin, kout);
          ok = ok && rep.consistent();
          members.push_back({{"symbol", to_json(phi)}, {"report", bounds_entry(rep)}});
        }
        report["members"] = members;
      } else {
        const auto phi = bounds_sym.affine();
        const auto rep = bound_suite(phi, nin, kout);
        report["symbol"] = to_json(phi);
        report["xi"] = sig15(xi(phi));
        report["report"] = bounds_entry(rep);
        ok = rep.consistent();
      }
      report["ok"] = ok;
      emit(out_path, report);
      return ok ? kExitOk : kExitViolation;
    }

    if (opnorm->parsed()) {
      json report{{"header", report_header("opnorm", args_of(opnorm), std::nullopt)}};
      TruncatedOperator op;
      double genlower;
      if (alpha) {
        op = phi_alpha_matrix(*alpha, nin, kout);
        genlower = zeta(1.0 + 2.0 * *alpha);
        report["alpha"] = sig15(*alpha);
      } else {
        const auto phi = opnorm_sym.affine();
        op = build_matrix(phi, nin, kout);
        genlower = zeta(2.0 * phi.c().real());
        report["symbol"] = to_json(phi);
      }
      double max_defect = 0.0;
      for (double d : op.column_defect) max_defect = std::max(max_defect, d);
      const double s = sigma_max_sq(op);
      report["rows"] = op.entries.rows();
      report["cols"] = op.entries.cols();
      report["sigma_max_sq"] = sig15(s);
      report["max_column_defect"] = sig15(max_defect);
      report["genlower"] = sig15(genlower);
      report["gap_over_genlower"] = sig15(s - genlower);
      emit(out_path, report);
      return kExitOk;
    }

    if (subordinate->parsed()) {
      json report{{"header", report_header("subordinate", args_of(subordinate), seed)}};
      const cplx c = parse_complex(c_text);
      const CoeffVector cv(parse_list(coeffs_text, "--coeffs"));
      const CoeffVector bv(parse_list(other_text, "--other"));
      const bool maj = majorizes(bv, cv);
      report["majorized"] = maj;
      bool ok = true;
      if (maj) {
        const AffineSymbol phi_c(c, cv.entries()), phi_b(c, bv.entries());
        const auto parts = bvn_decompose(bv, cv);
        json dec = json::array();
        for (const auto& p : parts) dec.push_back({{"weight", sig15(p.weight)}, {"perm", p.perm}});
        report["decomposition"] = dec;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        std::uniform_int_distribution<std::uint64_t> idx(1, 36);
        json tests = json::array();
        for (unsigned i = 0; i < samples_f; ++i) {
          DirichletPoly::Map m;
          for (int t = 0; t < 4; ++t) m[idx(rng)] += cplx(coef(rng), coef(rng));
          const DirichletPoly f(m);
          const double nb = comp_norm_sq(phi_b, f), nc = comp_norm_sq(phi_c, f);
          const bool row_ok = nb <= nc + 1e-9;
          ok = ok && row_ok;
          tests.push_back({{"norm_b", sig15(nb)}, {"norm_c", sig15(nc)}, {"ok", row_ok}});
        }
        report["tests"] = tests;
        report["effective_constant_c"] = sig15(effective_constant(cv));
      }
      report["ok"] = ok;
      emit(out_path, report);
      return ok ? kExitOk : kExitViolation;
    }

    if (majorize->parsed()) {
      json report{{"header", report_header("majorize", args_of(majorize), std::nullopt)}};
      bool ok = true;
      if (!maj_c.empty() || !maj_b.empty()) {
        if (maj_c.empty() || maj_b.empty()) {
          throw CLI::ValidationError("--coeffs/--other", "both vectors are required");
        }
        const CoeffVector cv(parse_list(maj_c, "--coeffs")), bv(parse_list(maj_b, "--other"));
        const bool maj = majorizes(bv, cv);
        report["majorized"] = maj;
        if (maj) {
          const auto parts = bvn_decompose(bv, cv);
          json dec = json::array();
          for (const auto& p : parts) dec.push_back({{"weight", sig15(p.weight)}, {"perm", p.perm}});
          report["decomposition"] = dec;
          json rows = json::array();
          for (const auto& row : hq_dominance(bv, cv, moments_k)) {
            ok = ok && row.ok;
            rows.push_back({{"k", row.k}, {"lhs", sig15(row.lhs)}, {"rhs", sig15(row.rhs)}, {"ok", row.ok}});
          }
          report["moment_dominance"] = rows;
        }
      }
      if (multinomial_k > 0) {
        json rows = json::array();
        for (const auto& row : multinomial_inequality(multinomial_k)) {
          const bool row_ok = row.ok && (row.equal == (row.k == 1));
          ok = ok && row_ok;
          rows.push_back({{"k", row.k},
                          {"lhs", row.lhs.str()},
                          {"rhs", row.rhs.str()},
                          {"ok", row.ok},
                          {"equal", row.equal}});
        }
        report["multinomial"] = rows;
      }
      report["ok"] = ok;
      emit(out_path, report);
      return ok ? kExitOk : kExitViolation;
    }

    if (measure->parsed()) {
      json report{{"header", report_header("measure", args_of(measure), seed)}};
      const auto phi = measure_sym.poly();
      const auto m = measure_E_delta(phi, delta, SamplePlan{samples, seed});
      report["delta"] = sig15(delta);
      report["measure"] = to_json(m);
      report["shapiro_constant"] = sig15(shapiro_factor(delta) * m.estimate);
      report["shapiro_constant_ci95"] = sig15(shapiro_factor(delta) * m.ci95);
      if (T > 0.0) {
        const long n = steps > 1 ? steps : 1000000;
        report["ergodic"] = {{"T", sig15(T)}, {"steps", n},
                             {"estimate", sig15(ergodic_measure(phi, delta, T, n))}};
      }
      emit(out_path, report);
      return kExitOk;
    }

    if (curve->parsed()) {
      const auto phi = curve_sym.poly();
      const auto trace = curve_trace(phi, -curve_T, curve_T, curve_steps);
      if (csv) {
        Output out(out_path);
        write_curve_csv(out.stream(), trace);
        return kExitOk;
      }
      json report{{"header", report_header("curve", args_of(curve), std::nullopt)}};
      const auto ext = trace_extremes(trace, phi.c());
      report["min_modulus"] = sig15(ext.inner);
      report["max_modulus"] = sig15(ext.outer);
      if (curve_sym.fixture.empty() ||
          std::holds_alternative<AffineSymbol>(find_fixture(curve_sym.fixture).data)) {
        const auto a = annulus_radii(curve_sym.affine());
        report["annulus"] = {{"inner", sig15(a.inner)}, {"outer", sig15(a.outer)}};
      }
      emit(out_path, report);
      return kExitOk;
    }

    if (inner->parsed()) {
      json report{{"header", report_header("inner-check", args_of(inner), seed)}};
      const auto& fx = find_fixture(inner_fixture);
      const auto* p = std::get_if<InnerSymbolParams>(&fx.data);
      if (!p) throw PreconditionError("fixture '" + inner_fixture + "' is not an inner symbol");
      const std::size_t J = p->lambdas.size();
      const SamplePlan plan{inner_samples, seed};
      double max_dev = 0.0, sum_dev = 0.0;
      std::uint64_t within = 0;
      bool inside_disc = true;
      for (std::uint64_t i = 0; i < inner_samples; ++i) {
        const auto chi = sample_character(plan, J, i);
        const double dev = std::abs(1.0 - inner_boundary_modulus(*p, chi, sigma));
        max_dev = std::max(max_dev, dev);
        sum_dev += dev;
        within += dev < 1e-5;
        inside_disc = inside_disc && std::abs(mobius_symbol_value(*p, chi, sigma) - p->c) < p->r;
      }
      const AffineSymbol psi(p->c, {p->r});
      const DirichletPoly f{{1, 1.0}, {2, cplx(0.5, 0.5)}, {3, -0.4}, {6, 0.3}};
      const double target = comp_norm_sq(psi, f);
      const auto m = inner_carleson_mean(*p, f, sigma, plan);
      // Pass band at 99.9%: ci95 is a 1.96-sigma half width.
      const double z = (m.estimate - target) / (m.ci95 / 1.96);
      const bool equal = std::abs(z) <= 3.29;
      report["params"] = to_json(*p);
      report["sigma"] = sig15(sigma);
      report["g_at_infinity"] = sig15(inner_value_at_infinity(*p));
      report["truncation_bound"] = sig15(inner_truncation_bound(*p, sigma));
      report["modulus_deviation"] = {{"mean", sig15(sum_dev / double(inner_samples))},
                                     {"max", sig15(max_dev)},
                                     {"fraction_below_1e-5", sig15(double(within) / double(inner_samples))}};
      report["inside_disc"] = inside_disc;
      report["carleson"] = {{"estimate", to_json(m)}, {"target", sig15(target)}, {"z", sig15(z)}, {"equal", equal}};
      const bool ok = inside_disc && equal;
      report["ok"] = ok;
      emit(out_path, report);
      return ok ? kExitOk : kExitViolation;
    }

    if (verify->parsed()) {
      json report{{"header", report_header("verify-lemmas", args_of(verify), seed)}};
      std::vector<std::string> names;
      if (suite == "all") names = suite_names();
      else names.push_back(suite);
      json suites = json::array();
      bool ok = true;
      for (const auto& name : names) {
        const auto res = run_suite(name, seed);
        ok = ok && res.passed();
        json failed = json::array();
        for (const auto& c : res.checks) {
          if (!c.ok) failed.push_back({{"label", c.label}, {"value", sig15(c.value)}, {"bound", sig15(c.bound)}});
        }
        suites.push_back({{"suite", res.name},
                          {"anchor", res.anchor},
                          {"checks", res.checks.size()},
                          {"passed", res.passed()},
                          {"failures", failed}});
      }
      report["suites"] = suites;
      report["ok"] = ok;
      emit(out_path, report);
      return ok ? kExitOk : kExitViolation;
    }

    if (list->parsed()) {
      json report{{"header", report_header("fixtures", args_of(list), std::nullopt)}};
      json items = json::array();
      for (const auto& f : fixtures()) {
        json item{{"name", f.name}, {"description", f.description}};
        std::visit(
            [&](const auto& d) {
              using T = std::decay_t<decltype(d)>;
              if constexpr (std::is_same_v<T, AffineSymbol>) {
                item["kind"] = "affine";
                item["symbol"] = to_json(d);
                const auto a = annulus_radii(d);
                item["annulus"] = {sig15(a.inner), sig15(a.outer)};
              } else if constexpr (std::is_same_v<T, PolySymbol>) {
                item["kind"] = "polynomial";
                item["c"] = to_json(d.c());
                item["r"] = sig15(d.r());
              } else if constexpr (std::is_same_v<T, InnerSymbolParams>) {
                item["kind"] = "inner";
                item["params"] = to_json(d);
              } else if constexpr (std::is_same_v<T, PhiAlphaFixture>) {
                item["kind"] = "phi_alpha";
                item["alpha"] = sig15(d.alpha);
              } else {
                item["kind"] = "two_s_family";
                json m = json::array();
                for (const auto& [c, r] : d.members) m.push_back({{"c", to_json(c)}, {"r", sig15(r)}});
                item["members"] = m;
              }
            },
            f.data);
        items.push_back(item);
      }
      report["fixtures"] = items;
      emit(out_path, report);
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "compnorm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "compnorm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "compnorm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "compnorm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
