#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "output.hpp"
#include "reflectq/crystal/comb.hpp"
#include "reflectq/kmat/kmatrix.hpp"
#include "reflectq/paramgen/script.hpp"
#include "reflectq/rmat/rmatrix.hpp"
#include "reflectq/verify/checks.hpp"

using namespace reflectq;
using cli::ordered_json;
using verify::VerifyReport;

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct Options {
  int n = 2, l = 1, m = 1;
  int l3 = 1;
  int k = 1, bound = 1;
  int order = 12, samples = 5;
  std::uint64_t seed = kDefaultSeed;
  int n_max = 2, l_max = 1;
  std::string kind, gauge = "star", spectral = "z", sequence = "VVV", equation = "ybe-RRR";
  std::string format = "json", output, input;
};

// Thrown for bad option values; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + o.output);
  f << text;
}

void write_json(const Options& o, const ordered_json& j) { write(o, j.dump(2) + "\n"); }

void require_json(const Options& o) {
  if (o.format != "json") throw UsageError("--format csv is only available for matrices and limit maps");
}

int reports_out(const Options& o, const std::vector<VerifyReport>& reports) {
  require_json(o);
  ordered_json arr = ordered_json::array();
  bool pass = true;
  for (const auto& r : reports) {
    arr.push_back(cli::report_json(r));
    pass = pass && r.pass();
  }
  ordered_json j;
  j["pass"] = pass;
  j["reports"] = std::move(arr);
  write_json(o, j);
  return pass ? 0 : 1;
}

alg::RatFunc spectral_value(const std::string& s) {
  using alg::RatFunc, alg::Var;
  if (s == "z") return RatFunc::var(Var::z);
  if (s == "x/y") return RatFunc::var(Var::x) / RatFunc::var(Var::y);
  if (s == "1/(x*y)") return 1 / (RatFunc::var(Var::x) * RatFunc::var(Var::y));
  throw UsageError("unknown spectral parameter: " + s);
}

void emit_matrix(const Options& o, const cli::MatrixHeader& h, const reps::OperatorTable& t) {
  if (o.format == "csv") {
    write(o, cli::matrix_csv(h, t));
  } else {
    write_json(o, cli::matrix_json(h, t));
  }
}

int run_r_matrix(const Options& o) {
  const std::string kind = o.kind.empty() ? "R" : o.kind;
  auto t = rmat::r_table(rmat::rkind_from_string(kind), o.n, o.l, o.m, spectral_value(o.spectral));
  emit_matrix(o, {kind, o.n, o.l, o.m, o.spectral}, t);
  return 0;
}

int run_k_matrix(const Options& o) {
  const std::string kind = o.kind.empty() ? "k" : o.kind;
  reps::OperatorTable t;
  if (kind == "k") {
    t = kmat::k_table(o.n, o.l);
  } else if (kind == "kprime") {
    t = kmat::kprime_table(o.n, o.l);
  } else {
    throw UsageError("unknown K matrix kind: " + kind);
  }
  emit_matrix(o, {kind, o.n, o.l, -1, "z"}, t);
  return 0;
}

VerifyReport energies_and_bijection(const crystal::CombMap& map) {
  VerifyReport r = crystal::check_energies(map);
  if (!crystal::is_bijection(map)) r.failures.push_back({"map", "not a bijection"});
  return r;
}

int run_limit(const std::string& which, const Options& o) {
  if (which == "k") {
    require_json(o);
    write_json(o, cli::conjecture_json(crystal::check_k_limit_conjecture(o.n, o.l)));
    return 0;
  }
  const std::map<std::string, crystal::CombKind> kinds{
      {"r", crystal::CombKind::R}, {"rvee", crystal::CombKind::Rvee}, {"rveevee", crystal::CombKind::Rveevee}};
  crystal::CombMap map = which == "kprime" ? crystal::comb_k(o.n, o.l) : crystal::limit_map(kinds.at(which), o.n, o.l, o.m);
  if (o.format == "csv") {
    write(o, cli::comb_csv(map));
  } else {
    write_json(o, cli::comb_json(map));
  }
  return energies_and_bijection(map).pass() ? 0 : 1;
}

std::vector<VerifyReport> intertwiner_reports(const Options& o) {
  if (o.kind.empty() || o.kind == "k") return {verify::check_intertwining_k(o.n, o.l)};
  if (o.kind == "kprime") return {verify::check_intertwining_kprime(o.n, o.l)};
  return {verify::check_intertwining_r(rmat::rkind_from_string(o.kind), o.n, o.l, o.m)};
}

verify::Gauge gauge_of(const std::string& s) {
  if (s == "star") return verify::Gauge::star;
  if (s == "vee") return verify::Gauge::vee;
  throw UsageError("unknown gauge: " + s);
}

// Recomputes the matrix described by a stored JSON document and compares
// every entry.
int run_golden(const Options& o) {
  std::ifstream f(o.input);
  if (!f) throw UsageError("cannot open " + o.input);
  ordered_json doc;
  try {
    doc = ordered_json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed golden file: ") + e.what());
  }
  Options g = o;
  g.kind = doc.at("kind").get<std::string>();
  g.n = doc.at("n").get<int>();
  g.l = doc.at("l").get<int>();
  const bool single = doc.at("m").is_null();
  g.m = single ? -1 : doc.at("m").get<int>();
  g.spectral = doc.value("spectral", "z");
  reps::OperatorTable t;
  if (single) {
    t = g.kind == "kprime" ? kmat::kprime_table(g.n, g.l) : kmat::k_table(g.n, g.l);
  } else {
    t = rmat::r_table(rmat::rkind_from_string(g.kind), g.n, g.l, g.m, spectral_value(g.spectral));
  }
  ordered_json want = cli::matrix_json({g.kind, g.n, g.l, g.m, g.spectral}, t).at("entries");
  const ordered_json& got = doc.at("entries");
  VerifyReport r;
  r.equation = "golden";
  r.params = {{"file", o.input}};
  r.checked = std::max(want.size(), got.size());
  for (std::size_t i = 0; i < r.checked; ++i) {
    if (i < want.size() && i < got.size() && want[i] == got[i]) continue;
    if (r.failures.size() < verify::kMaxRecordedFailures) {
      r.failures.push_back({"entry " + std::to_string(i), i < want.size() ? want[i].dump() : "extra entry"});
    }
  }
  return reports_out(o, {r});
}

// Bounded sweep over every check family. Timings go to stderr so that the
// document itself is reproducible.
int run_all(const Options& o) {
  require_json(o);
  struct Row {
    VerifyReport report;
    double seconds;
  };
  std::vector<Row> rows;
  auto timed = [&](const std::function<VerifyReport()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport r = f();
    rows.push_back({std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()});
  };
  ordered_json conjectures = ordered_json::array();
  const bool empty = o.n_max < 2 || o.l_max < 1;
  for (int n = 2; n <= o.n_max; ++n) {
    for (int l = 1; l <= o.l_max; ++l) {
      timed([&] { return verify::check_intertwining_k(n, l); });
      timed([&] { return verify::check_intertwining_kprime(n, l); });
      timed([&] { return verify::check_oracle(n, l, o.samples, o.seed); });
      for (int m = 1; m <= o.l_max; ++m) {
        timed([&] { return verify::check_intertwining_r(rmat::RKind::plain, n, l, m); });
        timed([&] { return verify::check_reflection(verify::Gauge::star, n, l, m); });
        timed([&] { return verify::check_ybe(verify::YbeSequence::VVV, n, l, m, 1); });
        for (auto kind : {crystal::CombKind::R, crystal::CombKind::Rvee, crystal::CombKind::Rveevee}) {
          timed([&] { return energies_and_bijection(crystal::limit_map(kind, n, l, m)); });
        }
        timed([&] { return crystal::check_set_re(n, l, m, crystal::SetReMode{}); });
      }
      auto c = crystal::check_k_limit_conjecture(n, l);
      conjectures.push_back({{"n", n}, {"l", l}, {"status", "CONJECTURE:" + c.status()}});
    }
  }
  if (!empty) {
    timed([&] { return verify::check_local_relation(std::min(o.l_max, 3)); });
    timed([&] { return verify::check_series_identity(o.order, o.samples, o.seed); });
  }
  ordered_json arr = ordered_json::array();
  bool pass = true;
  for (const auto& row : rows) {
    ordered_json j = cli::report_json(row.report);
    j["status"] = row.report.pass() ? "PASS" : "FAIL";
    arr.push_back(std::move(j));
    pass = pass && row.report.pass();
    std::string params;
    for (const auto& [k, v] : row.report.params) params += " " + k + "=" + v;
    std::cerr << (row.report.pass() ? "PASS " : "FAIL ") << row.report.equation << params << " (" << row.seconds
              << " s)\n";
  }
  for (const auto& c : conjectures) {
    std::cerr << c["status"].get<std::string>() << " k-limit n=" << c["n"] << " l=" << c["l"] << "\n";
  }
  ordered_json j;
  j["sweep"] = {{"n_max", o.n_max}, {"l_max", o.l_max}};
  j["pass"] = pass;
  j["reports"] = std::move(arr);
  j["conjectures"] = std::move(conjectures);
  write_json(o, j);
  return pass ? 0 : 1;
}

void add_format(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  c->add_option("--output", o.output, "Write to this file instead of stdout");
}

void add_nlm(CLI::App* c, Options& o, bool with_m = true) {
  c->add_option("--n", o.n, "Rank parameter n")->check(CLI::Range(2, 64))->capture_default_str();
  c->add_option("--l", o.l, "Weight l")->check(CLI::NonNegativeNumber)->capture_default_str();
  if (with_m) c->add_option("--m", o.m, "Weight m")->check(CLI::NonNegativeNumber)->capture_default_str();
}

void add_sampling(CLI::App* c, Options& o) {
  c->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  c->add_option("--samples", o.samples, "Number of random samples")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact R and K matrices, their equations, and q -> 0 limits"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* rm = app.add_subcommand("r-matrix", "R matrix elements");
  add_nlm(rm, o);
  add_format(rm, o);
  rm->add_option("--kind", o.kind, "R, Rstar, Rstarstar, Rvee or Rveevee (default R)");
  rm->add_option("--spectral", o.spectral, "Spectral parameter: z, x/y or 1/(x*y)")->capture_default_str();
  rm->callback([&] { action = [&] { return run_r_matrix(o); }; });

  auto* km = app.add_subcommand("k-matrix", "K matrix elements");
  add_nlm(km, o, false);
  add_format(km, o);
  km->add_option("--kind", o.kind, "k or kprime (default k)");
  km->callback([&] { action = [&] { return run_k_matrix(o); }; });

  auto* ver = app.add_subcommand("verify", "Check an equation; exit 1 on failure");
  ver->require_subcommand(1);
  auto verify_cmd = [&](const std::string& name, const std::string& help,
                        std::function<std::vector<VerifyReport>()> f) {
    auto* c = ver->add_subcommand(name, help);
    add_format(c, o);
    c->callback([&o, f, &action] { action = [&o, f] { return reports_out(o, f()); }; });
    return c;
  };
  auto* ybe = verify_cmd("ybe", "Yang-Baxter equation on V_l1 x V_l2 x V_l3",
                         [&] { return std::vector{verify::check_ybe(verify::ybe_sequence_from_string(o.sequence), o.n,
                                                                    o.l, o.m, o.l3)}; });
  ybe->add_option("--n", o.n, "Rank parameter n")->check(CLI::Range(2, 64))->capture_default_str();
  ybe->add_option("--l1,--l", o.l, "First weight")->capture_default_str();
  ybe->add_option("--l2,--m", o.m, "Second weight")->capture_default_str();
  ybe->add_option("--l3", o.l3, "Third weight")->capture_default_str();
  ybe->add_option("--sequence", o.sequence, "VVV, sVV, ssV, sss, vVV, vvV or vvv")->capture_default_str();

  auto* re = verify_cmd("re", "Reflection equation",
                        [&] { return std::vector{verify::check_reflection(gauge_of(o.gauge), o.n, o.l, o.m)}; });
  add_nlm(re, o);
  re->add_option("--gauge", o.gauge, "star or vee")->capture_default_str();

  auto* it = verify_cmd("intertwiner", "Intertwining relations of one matrix", [&] { return intertwiner_reports(o); });
  add_nlm(it, o);
  it->add_option("--kind", o.kind, "k, kprime, R, Rstar, Rstarstar, Rvee or Rveevee (default k)");

  auto* oracle = verify_cmd("oracle", "K against the linear-solve intertwiner at random points", [&] {
    return std::vector{verify::check_oracle(o.n, o.l, o.samples, o.seed)};
  });
  add_nlm(oracle, o, false);
  add_sampling(oracle, o);

  auto* local = verify_cmd("local", "Local relation in the q-oscillator algebra",
                           [&] { return std::vector{verify::check_local_relation(o.bound)}; });
  o.bound = 1;
  local->add_option("--bound", o.bound, "Largest index entry")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* series = verify_cmd("series-identity", "Five-term q-series identity at random rational parameters", [&] {
    return std::vector{verify::check_series_identity(o.order, o.samples, o.seed)};
  });
  series->add_option("--order", o.order, "Truncation order")->check(CLI::PositiveNumber)->capture_default_str();
  add_sampling(series, o);

  auto* gauge = verify_cmd("gauge", "Yang-Baxter equation after a random gauge replacement", [&] {
    const auto eq = paramgen::param_equation_from_string(o.equation);
    return std::vector{paramgen::check_gauge_invariance(eq, o.k, o.bound, paramgen::random_gauge(o.k, o.seed))};
  });
  gauge->add_option("--equation", o.equation, "ybe-RRR, ybe-sRR, ybe-ssR or ybe-sss")->capture_default_str();
  gauge->add_option("--k", o.k, "Index length")->check(CLI::PositiveNumber)->capture_default_str();
  gauge->add_option("--bound", o.bound, "Largest index entry")->check(CLI::NonNegativeNumber)->capture_default_str();
  gauge->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* param = verify_cmd("param", "Parametric equation on every transition of a sector", [&] {
    return std::vector{paramgen::check_param_sector(paramgen::param_equation_from_string(o.equation), o.k, o.bound)};
  });
  param->add_option("--equation", o.equation, "ybe-RRR, ybe-sRR, ybe-ssR, ybe-sss or reflection")
      ->capture_default_str();
  param->add_option("--k", o.k, "Index length")->check(CLI::PositiveNumber)->capture_default_str();
  param->add_option("--bound", o.bound, "Largest index entry")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* golden = ver->add_subcommand("golden", "Compare a stored matrix document with a fresh computation");
  golden->add_option("--input", o.input, "Matrix JSON written by r-matrix or k-matrix")->required();
  add_format(golden, o);
  golden->callback([&] { action = [&] { return run_golden(o); }; });

  auto* all = ver->add_subcommand("all", "Sweep every check over 2 <= n <= n-max, 1 <= l, m <= l-max");
  all->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  all->add_option("--l-max", o.l_max, "Largest l and m")->capture_default_str();
  all->add_option("--order", o.order, "Truncation order of the series identity")->capture_default_str();
  add_sampling(all, o);
  add_format(all, o);
  all->callback([&] { action = [&] { return run_all(o); }; });

  auto* lim = app.add_subcommand("limit", "q -> 0 limit maps with energies");
  lim->require_subcommand(1);
  for (std::string which : {"r", "rvee", "rveevee", "k", "kprime"}) {
    auto* c = lim->add_subcommand(which, which == "k" ? "Unprimed K limits against the conjectured energies"
                                                      : "Limit map of " + which);
    add_nlm(c, o, which != "k" && which != "kprime");
    add_format(c, o);
    c->callback([&o, which, &action] { action = [&o, which] { return run_limit(which, o); }; });
  }

  auto* probe = app.add_subcommand("probe", "Diagnostics");
  probe->require_subcommand(1);
  auto* special = probe->add_subcommand("specialization", "Ratios of parametric elements to their specializations");
  o.k = 1;
  special->add_option("--k", o.k, "Index length")->check(CLI::PositiveNumber)->capture_default_str();
  special->add_option("--l", o.l, "Weight l")->capture_default_str();
  special->add_option("--m", o.m, "Weight m")->capture_default_str();
  add_format(special, o);
  special->callback([&] {
    action = [&] {
      require_json(o);
      write_json(o, cli::probe_json(paramgen::specialization_probe(o.k, o.l, o.m)));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
