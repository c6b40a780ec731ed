#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "maslov/io.hpp"
#include "maslov/suites.hpp"
#include "maslov/weil.hpp"

using namespace maslov;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw ProblemError("cannot open output file " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

int run_compute(const std::string& in_path, const std::string& out_path) {
  auto pr = parse_problem(read_input(in_path));
  if (pr.n < 3) throw ProblemError("compute needs at least 3 lagrangians");
  auto rep = compute_report(pr);
  Sink out(out_path);
  out.stream() << rep.dump() << "\n";
  bool ok = rep["cup_agrees"].get<bool>();
  if (rep.contains("weil")) ok = ok && rep["weil"]["matches"].get<bool>();
  return ok ? 0 : 3;
}

int run_cup(const std::string& in_path, const std::string& out_path) {
  auto pr = parse_problem(read_input(in_path));
  if (pr.n < 3) throw ProblemError("cup needs at least 3 lagrangians");
  auto lines = cup_report(pr);
  Sink out(out_path);
  bool ok = true;
  for (const auto& j : lines) {
    out.stream() << j.dump() << "\n";
    ok = ok && j["ok"].get<bool>();
  }
  return ok ? 0 : 3;
}

struct VerifyParams {
  std::string field = "both";
  unsigned p = 0;
  int m = 0;
  int n = 0;
  int count = 200;
  std::uint64_t seed = 1;
};

struct VerifyResult {
  bool rational = false;
  unsigned p = 0;
  int m = 0, n = 0;
  std::uint64_t seed = 0;
  SuiteResult checks;
  std::string error;
};

int run_verify(const VerifyParams& vp, const std::string& out_path) {
  static const unsigned kPrimes[4] = {3, 5, 7, 11};
  if (vp.p != 0) FpField probe(vp.p);  // validates the prime up front
  if (vp.m < 0 || vp.m > 8) throw ProblemError("m out of range [1, 8]");
  if (vp.n != 0 && (vp.n < 3 || vp.n > 12)) throw ProblemError("n out of range [3, 12]");
  if (vp.count < 0 || vp.count > 100000) throw ProblemError("count out of range");
  if (vp.field != "both" && vp.field != "prime" && vp.field != "rational")
    throw ProblemError("--field must be prime, rational or both");

  std::vector<VerifyResult> res(static_cast<std::size_t>(vp.count));
  run_parallel(vp.count, thread_count_from_env(), [&](int i) {
    auto& r = res[static_cast<std::size_t>(i)];
    auto iu = static_cast<unsigned>(i);
    r.rational = vp.field == "rational" || (vp.field == "both" && i % 5 == 4);
    r.p = vp.p != 0 ? vp.p : kPrimes[iu % 4];
    r.m = vp.m != 0 ? vp.m : 1 + static_cast<int>((iu / 2) % 3);
    r.n = vp.n != 0 ? vp.n : 3 + static_cast<int>(iu % 4);
    r.seed = vp.seed + iu;
    try {
      r.checks = r.rational ? run_invariant_suite_q(r.m, r.n, r.seed)
                            : run_invariant_suite_fp(r.p, r.m, r.n, r.seed);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  Sink out(out_path);
  std::vector<std::pair<std::string, std::pair<int, int>>> counts;
  auto bump = [&](const std::string& name, bool passed) {
    for (auto& c : counts) {
      if (c.first == name) {
        c.second.first += passed ? 1 : 0;
        c.second.second += 1;
        return;
      }
    }
    counts.emplace_back(name, std::make_pair(passed ? 1 : 0, 1));
  };
  int failures = 0;
  for (int i = 0; i < vp.count; ++i) {
    const auto& r = res[static_cast<std::size_t>(i)];
    std::vector<std::string> failed;
    for (const auto& c : r.checks) {
      bump(c.first, c.second);
      if (!c.second) failed.push_back(c.first);
    }
    if (!failed.empty() || !r.error.empty()) {
      ++failures;
      ordered_json j;
      j["instance"] = i;
      j["field"] = r.rational ? "rational" : "prime";
      if (!r.rational) j["p"] = r.p;
      j["m"] = r.m;
      j["n"] = r.n;
      j["seed"] = r.seed;
      if (!failed.empty()) j["failed"] = failed;
      if (!r.error.empty()) j["error"] = r.error;
      out.stream() << j.dump() << "\n";
    }
  }
  for (const auto& c : counts) {
    ordered_json j;
    j["property"] = c.first;
    j["pass"] = c.second.first;
    j["applicable"] = c.second.second;
    out.stream() << j.dump() << "\n";
  }
  ordered_json s;
  s["summary"] = ordered_json{{"instances", vp.count}, {"failures", failures}};
  out.stream() << s.dump() << "\n";
  return failures == 0 ? 0 : 3;
}

struct WeilParams {
  unsigned p = 3;
  int m = 1;
  int n = 3;
  int count = 20;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

int run_weil(const WeilParams& wp, const std::string& out_path) {
  FpField probe(wp.p);
  double dim = std::pow(double(wp.p), wp.m);
  if (dim > double(kModelCap)) {
    std::ostringstream os;
    os << "p^m = " << dim << " exceeds the dense-model cap " << kModelCap;
    throw ProblemError(os.str());
  }
  if (wp.n < 2 || wp.n > 12) throw ProblemError("n out of range [2, 12]");
  if (wp.count < 0 || wp.count > 100000) throw ProblemError("count out of range");
  if (!(wp.tol > 0)) throw ProblemError("tolerance must be positive");

  struct Row {
    WeilTrial t;
    std::uint64_t seed = 0;
    std::string error;
  };
  std::vector<Row> res(static_cast<std::size_t>(wp.count));
  run_parallel(wp.count, thread_count_from_env(), [&](int i) {
    auto& r = res[static_cast<std::size_t>(i)];
    r.seed = wp.seed + static_cast<unsigned>(i);
    try {
      r.t = run_weil_trial(wp.p, wp.m, wp.n, 1, r.seed, wp.tol);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  Sink out(out_path);
  int failures = 0;
  bool internal = false;
  double max_res = 0.0, max_dev = 0.0;
  for (int i = 0; i < wp.count; ++i) {
    const auto& r = res[static_cast<std::size_t>(i)];
    ordered_json j;
    j["instance"] = i;
    j["p"] = wp.p;
    j["m"] = wp.m;
    j["n"] = wp.n;
    j["seed"] = r.seed;
    if (!r.error.empty()) {
      j["error"] = r.error;
      internal = true;
      ++failures;
    } else {
      double dev = std::abs(r.t.scalarsum - r.t.predicted);
      j["scalar"] = complex_json(r.t.scalarsum);
      j["predicted"] = complex_json(r.t.predicted);
      j["residual"] = r.t.residual;
      j["deviation"] = dev;
      j["ok"] = r.t.ok;
      if (!r.t.ok) ++failures;
      max_res = std::max(max_res, r.t.residual);
      max_dev = std::max(max_dev, dev);
    }
    out.stream() << j.dump() << "\n";
  }
  ordered_json s;
  s["summary"] = ordered_json{{"count", wp.count},
                              {"failures", failures},
                              {"max_residual", max_res},
                              {"max_deviation", max_dev},
                              {"tolerance", wp.tol}};
  out.stream() << s.dump() << "\n";
  if (internal) return 3;
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maslov index as a canonical quadratic space: reports and verification"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path;
  VerifyParams vp;
  WeilParams wp;

  auto* c_compute = app.add_subcommand("compute", "invariant report for one problem file");
  c_compute->add_option("problem", in_path, "problem JSON path, - for stdin");
  c_compute->add_option("--out", out_path, "write output here instead of stdout");

  auto* c_verify = app.add_subcommand("verify", "run the structural identity suite on random instances");
  c_verify->add_option("--field", vp.field, "prime, rational or both")->capture_default_str();
  c_verify->add_option("--p", vp.p, "fix the prime (default: rotate 3,5,7,11)");
  c_verify->add_option("--m", vp.m, "fix the half-dimension (default: rotate 1..3)");
  c_verify->add_option("--n", vp.n, "fix the tuple length (default: rotate 3..6)");
  c_verify->add_option("--count", vp.count, "number of instances")->capture_default_str();
  c_verify->add_option("--seed", vp.seed, "base seed")->capture_default_str();
  c_verify->add_option("--out", out_path, "write output here instead of stdout");

  auto* c_weil = app.add_subcommand("weil", "intertwiner cycle scalar versus the Gauss-sum prediction");
  c_weil->add_option("--p", wp.p, "prime")->capture_default_str();
  c_weil->add_option("--m", wp.m, "half-dimension")->capture_default_str();
  c_weil->add_option("--n", wp.n, "tuple length")->capture_default_str();
  c_weil->add_option("--count", wp.count, "number of instances")->capture_default_str();
  c_weil->add_option("--seed", wp.seed, "base seed")->capture_default_str();
  c_weil->add_option("--tol", wp.tol, "tolerance for residual and scalar deviation")->capture_default_str();
  c_weil->add_option("--out", out_path, "write output here instead of stdout");

  auto* c_cup = app.add_subcommand("cup", "cochain cup-product oracle comparison for one problem file");
  c_cup->add_option("problem", in_path, "problem JSON path, - for stdin");
  c_cup->add_option("--out", out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_compute)) return run_compute(in_path, out_path);
    if (app.got_subcommand(c_verify)) return run_verify(vp, out_path);
    if (app.got_subcommand(c_weil)) return run_weil(wp, out_path);
    if (app.got_subcommand(c_cup)) return run_cup(in_path, out_path);
  } catch (const ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
