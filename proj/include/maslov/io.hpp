#pragma once
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "maslov/fp.hpp"
#include "maslov/rat.hpp"
#include "maslov/symplectic.hpp"

namespace maslov {

using ordered_json = nlohmann::ordered_json;

struct ProblemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A problem file holds the field, the half-dimension m and one integer or
// rational basis per Lagrangian. Entries may be JSON integers or "a/b"
// strings. Rows are echelon-reduced on ingestion, so serialize() emits the
// canonical form of the subspaces rather than the raw input rows.
struct Problem {
  bool rational = false;
  unsigned p = 0;
  int m = 0;
  int n = 0;
  std::vector<std::vector<std::vector<mpq_class>>> rows;
  unsigned psi_twist = 1;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  bool has_tolerance = false;
};

Problem parse_problem(const std::string& text);
Problem canonical_problem(const Problem& pr);
std::string serialize_problem(const Problem& pr);

LagTuple<FpField> build_tuple(const FpField& f, const Problem& pr);
LagTuple<QField> build_tuple(const QField& f, const Problem& pr);

ordered_json rat_json(const mpq_class& x);
ordered_json rat_mat_json(const Mat<mpq_class>& a);
ordered_json fp_mat_json(const Mat<std::uint16_t>& a);
ordered_json complex_json(std::complex<double> z);

}  // namespace maslov
