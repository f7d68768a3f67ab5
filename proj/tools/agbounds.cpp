// Command-line front end: Riemann-Roch queries, distance bounds, tables,
// code matrices and the brute-force soundness check.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "agbounds/bounds.hpp"
#include "agbounds/codes.hpp"
#include "agbounds/divisor_expr.hpp"
#include "agbounds/properties.hpp"
#include "agbounds/rrspace.hpp"
#include "agbounds/table.hpp"

namespace {

using agc::BoundResult;
using agc::Divisor;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json divisor_json(const Divisor& d) { return json{{"Pinf", d.inf}, {"P0", d.origin}}; }

json witness_json(const agc::Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using W = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<W, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<W, agc::FloorWitness>) {
          return json{{"H", divisor_json(v.h)}, {"floor_H", divisor_json(v.floor_h)}};
        } else if constexpr (std::is_same_v<W, agc::KpWitness>) {
          return json{{"F", divisor_json(v.f)}, {"G_prime", divisor_json(v.g_prime)},
                      {"P", agc::place_name(v.place)}, {"alpha", v.alpha},
                      {"beta", v.beta}, {"t", v.t}};
        } else {
          return json{{"A", divisor_json(v.a)}, {"B", divisor_json(v.b)}, {"Z", divisor_json(v.z)}};
        }
      },
      w);
}

const char* support_name(agc::Support s) {
  switch (s) {
    case agc::Support::kTwoPoint: return "two-point";
    case agc::Support::kInfinityOnly: return "Pinf";
    case agc::Support::kOriginOnly: return "P0";
  }
  return "?";
}

json result_json(const std::string& curve, const agc::BoundSearch& search, const BoundResult& r) {
  std::string why;
  const bool verified = search.verify(r, &why);
  json j{{"curve", curve},
         {"divisor", agc::render_divisor(r.g)},
         {"method", agc::method_name(r.method)},
         {"value", r.value},
         {"designed", search.designed_distance(r.g)},
         {"support", support_name(r.support)},
         {"shift", r.shift},
         {"representative", divisor_json(r.representative)},
         {"witness", witness_json(r.witness)},
         {"verified", verified}};
  if (!verified) j["verify_error"] = why;
  return j;
}

agc::IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like lo:hi, got '" + text + "'");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like lo:hi, got '" + text + "'");
  }
}

Divisor parse_div(const std::string& text) {
  try {
    return agc::parse_divisor(text);
  } catch (const agc::DivisorParseError& e) {
    throw UsageError(std::string("bad divisor '") + text + "': " + e.what());
  }
}

std::optional<BoundResult> run_method(const agc::BoundSearch& search, const Divisor& g, const std::string& method) {
  if (method == "best") return search.best(g);
  if (method == "designed") return search.designed(g);
  if (method == "floor") return search.best(g, agc::Method::kFloor);
  if (method == "kp") return search.best(g, agc::Method::kKirfelPellikaan);
  return search.best(g, agc::Method::kAsymmetricFloor);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance bounds for two-point codes on Hermitian and Suzuki curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string curve_name = "suzuki8";
  std::string cache_path;
  bool verify_cache = false;
  int threads = 1;
  std::uint64_t seed = 1;
  app.add_option("--curve", curve_name, "hermitian4, hermitian9, hermitian16 or suzuki8")
      ->check(CLI::IsMember({"hermitian4", "hermitian9", "hermitian16", "suzuki8"}))
      ->capture_default_str();
  app.add_option("--cache", cache_path, "CSV file of curve,a,b,ell rows; read if present, rewritten on exit");
  app.add_flag("--verify-cache", verify_cache, "Recompute every cache row while loading");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized property checks")->capture_default_str();

  std::string div_text;
  auto* ell = app.add_subcommand("ell", "Print l(G)");
  ell->add_option("--div", div_text, "Divisor such as '32*P0 + 1*Pinf'")->required();

  std::string order = "inf";
  auto* floor_cmd = app.add_subcommand("floor", "Print the floor of G");
  floor_cmd->add_option("--div", div_text)->required();
  floor_cmd->add_option("--order", order, "Place reduced first")
      ->check(CLI::IsMember({"inf", "origin"}))
      ->capture_default_str();

  int limit = 60;
  auto* semigroup = app.add_subcommand("semigroup", "Weierstrass semigroup at Pinf");
  semigroup->add_option("--limit", limit)->check(CLI::NonNegativeNumber)->capture_default_str();

  std::string method = "best";
  bool all = false;
  auto* bound = app.add_subcommand("bound", "Lower bounds on d(C_Omega(D, G)) as JSON lines");
  bound->add_option("--div", div_text)->required();
  bound->add_option("--method", method)
      ->check(CLI::IsMember({"designed", "floor", "kp", "af", "best", "all"}))
      ->capture_default_str();
  bound->add_flag("--all", all, "Also report when deg G <= 2g - 2");

  std::string table_method = "af";
  std::string rows_text;
  std::string cols_text;
  std::string format = "markdown";
  auto* table = app.add_subcommand("table", "Improvement over the designed distance, rows P0 and columns Pinf");
  table->add_option("--method", table_method)
      ->check(CLI::IsMember({"designed", "floor", "kp", "af", "best"}))
      ->capture_default_str();
  table->add_option("--rows", rows_text, "lo:hi")->required();
  table->add_option("--cols", cols_text, "lo:hi")->required();
  table->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv"}))->capture_default_str();

  bool dual_code = false;
  auto* code = app.add_subcommand("code", "Generator matrix of C_L(D, G) as CSV");
  code->add_option("--div", div_text)->required();
  code->add_flag("--dual", dual_code, "Emit C_Omega(D, G) instead");

  int min_deg = 1;
  int max_deg = 0;
  int window = -1;
  std::uint64_t budget = std::uint64_t{1} << 24;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Compare bounds with brute-force distances");
  verify->add_option("--min-deg", min_deg)->capture_default_str();
  verify->add_option("--max-deg", max_deg)->required();
  verify->add_option("--budget", budget, "Maximum q^k codewords to enumerate")->capture_default_str();
  verify->add_option("--window", window, "Coefficient bound |a|, |b| (default 4g + 4)");
  verify->add_flag("-v,--verbose", verbose, "Print every checked divisor");

  int samples = 500;
  int lemma_samples = 200;
  auto* props = app.add_subcommand("props", "Randomized dominance and proof-lemma checks");
  props->add_option("--samples", samples)->check(CLI::NonNegativeNumber)->capture_default_str();
  props->add_option("--lemma-samples", lemma_samples)->check(CLI::NonNegativeNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e);
    return code_ == 0 ? kExitOk : kExitUsage;
  }

  try {
    agc::RiemannRoch rr(agc::Curve::from_name(curve_name));
    if (!cache_path.empty()) {
      std::ifstream in(cache_path);
      if (in) rr.load_cache(in, verify_cache);
    }
    auto save = [&] {
      if (cache_path.empty()) return;
      std::ofstream out(cache_path);
      rr.save_cache(out);
    };
    const agc::BoundSearch search(rr);
    const int g = rr.genus();
    int status = kExitOk;

    if (*ell) {
      std::cout << rr.dim(parse_div(div_text)) << "\n";
    } else if (*floor_cmd) {
      const Divisor d = parse_div(div_text);
      if (rr.dim(d) == 0) {
        std::cerr << "floor undefined: l(G) = 0\n";
        return kExitRuntime;
      }
      const auto fo = order == "inf" ? agc::FloorOrder::kInfinityFirst : agc::FloorOrder::kOriginFirst;
      std::cout << agc::render_divisor(rr.floor(d, fo)) << "\n";
    } else if (*semigroup) {
      const auto nongaps = rr.semigroup(limit);
      std::cout << "genus " << g << "\nnongaps";
      for (int n : nongaps) std::cout << ' ' << n;
      std::cout << "\ngaps";
      std::size_t next = 0;
      int gaps = 0;
      for (int n = 0; n <= limit; ++n) {
        if (next < nongaps.size() && nongaps[next] == n) {
          ++next;
        } else {
          std::cout << ' ' << n;
          ++gaps;
        }
      }
      std::cout << "\ngap count " << gaps << "\n";
    } else if (*bound) {
      const Divisor d = parse_div(div_text);
      if (!all && d.degree() <= 2 * g - 2) {
        std::cerr << "deg G = " << d.degree() << " <= 2g - 2 = " << 2 * g - 2
                  << ": the designed distance is not meaningful (pass --all)\n";
        return kExitUsage;
      }
      std::vector<std::string> methods{method};
      if (method == "all") methods = {"designed", "floor", "kp", "af", "best"};
      for (const auto& m : methods) {
        const auto r = run_method(search, d, m);
        if (r) {
          std::cout << result_json(curve_name, search, *r).dump() << "\n";
        } else {
          std::cout << json{{"curve", curve_name}, {"divisor", agc::render_divisor(d)}, {"method", m},
                            {"applicable", false}}
                           .dump()
                    << "\n";
        }
      }
    } else if (*table) {
      const auto t = agc::improvement_table(search, parse_range(rows_text), parse_range(cols_text),
                                            agc::parse_selection(table_method), threads);
      std::cout << agc::render_table(t, format == "csv" ? agc::TableFormat::kCsv : agc::TableFormat::kMarkdown);
    } else if (*code) {
      const Divisor d = parse_div(div_text);
      const agc::Code c = dual_code ? agc::comega_code(rr, d) : agc::cl_code(rr, d);
      const auto& curve = rr.curve();
      std::cout << "# curve=" << curve_name << " divisor=" << agc::render_divisor(d)
                << " code=" << (dual_code ? "C_Omega" : "C_L") << " n=" << c.length() << " k=" << c.dimension()
                << "\n# points";
      for (std::size_t p : c.points) {
        const auto& pt = curve.points()[p];
        if (pt.at_infinity) {
          std::cout << " Pinf";
        } else {
          std::cout << " (" << curve.field().to_string(pt.x) << ";" << curve.field().to_string(pt.y) << ")";
        }
      }
      std::cout << "\n";
      for (std::size_t i = 0; i < c.generator.rows(); ++i) {
        const auto row = c.generator.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << int(row[j].index);
        std::cout << "\n";
      }
    } else if (*verify) {
      if (window < 0) window = 4 * g + 4;
      const auto report = agc::verify_soundness(search, min_deg, max_deg, window, budget, threads);
      if (verbose) {
        for (const auto& c : report.checked) {
          std::cout << agc::render_divisor(c.g) << ": d=" << c.distance << " af=" << c.af << " kp=" << c.kp
                    << " floor=" << c.floor << " designed=" << c.designed << "\n";
        }
      }
      for (const auto& v : report.violations) std::cout << "VIOLATION " << v << "\n";
      std::cout << "checked " << report.checked.size() << " skipped " << report.skipped << " violations "
                << report.violations.size() << "\n";
      if (!report.ok()) status = kExitVerification;
    } else if (*props) {
      std::mt19937_64 rng(seed);
      const auto dom = agc::check_dominance(search, samples, rng);
      const auto lemma = agc::check_proof_lemma(search, lemma_samples, rng);
      for (const auto& v : dom.violations) std::cout << "VIOLATION dominance " << v << "\n";
      for (const auto& v : lemma.violations) std::cout << "VIOLATION lemma " << v << "\n";
      std::cout << "dominance " << dom.checked << " samples, " << dom.violations.size() << " violations\n"
                << "proof lemma " << lemma.checked << " samples, " << lemma.violations.size() << " violations\n";
      if (!dom.ok() || !lemma.ok()) status = kExitVerification;
    }
    save();
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
