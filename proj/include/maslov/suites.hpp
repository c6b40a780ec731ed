#pragma once
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "maslov/io.hpp"

namespace maslov {

// One seeded random instance run through every structural identity the
// library exposes. Each entry is (property name, passed); only properties
// applicable to the instance (its n, its field) appear.
using SuiteResult = std::vector<std::pair<std::string, bool>>;

SuiteResult run_invariant_suite_fp(unsigned p, int m, int n, std::uint64_t seed);
SuiteResult run_invariant_suite_q(int m, int n, std::uint64_t seed);

struct WeilTrial {
  double residual = 0.0;
  std::complex<double> scalarsum;
  std::complex<double> predicted;
  bool ok = false;
};

WeilTrial run_weil_trial(unsigned p, int m, int n, unsigned psi_twist, std::uint64_t seed,
                         double tol);

ordered_json compute_report(const Problem& pr);
ordered_json cup_report(const Problem& pr);

// fn(i) for i in [0, count), distributed over worker threads; results must be
// written to per-index slots so output order stays by index
void run_parallel(int count, int threads, const std::function<void(int)>& fn);
int thread_count_from_env();

}  // namespace maslov
