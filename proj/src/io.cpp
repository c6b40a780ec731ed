#include "maslov/io.hpp"

#include <sstream>

namespace maslov {

namespace {

mpq_class entry_from_json(const ordered_json& e, int li, int ri, int ci) {
  auto where = [&] {
    std::ostringstream os;
    os << "lagrangian " << li << ", row " << ri << ", entry " << ci;
    return os.str();
  };
  if (e.is_number_integer()) return mpq_class(static_cast<long>(e.get<long long>()));
  if (e.is_string()) {
    mpq_class q;
    if (q.set_str(e.get<std::string>(), 10) != 0)
      throw ProblemError(where() + ": cannot parse \"" + e.get<std::string>() + "\" as a rational");
    if (q.get_den() == 0) throw ProblemError(where() + ": zero denominator");
    q.canonicalize();
    return q;
  }
  throw ProblemError(where() + ": expected an integer or an \"a/b\" string");
}

std::uint16_t entry_mod_p(const FpField& f, const mpq_class& q, int li, int ri) {
  mpz_class den = q.get_den();
  unsigned long dm = mpz_fdiv_ui(den.get_mpz_t(), f.p);
  if (dm == 0) {
    std::ostringstream os;
    os << "lagrangian " << li << ", row " << ri << ": denominator divisible by " << f.p;
    throw ProblemError(os.str());
  }
  mpz_class num = q.get_num();
  unsigned long nm = mpz_fdiv_ui(num.get_mpz_t(), f.p);
  return f.mul(static_cast<std::uint16_t>(nm), f.inv(static_cast<std::uint16_t>(dm)));
}

}  // namespace

Problem parse_problem(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProblemError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ProblemError("problem must be a JSON object");

  Problem pr;
  if (!j.contains("field") || !j["field"].is_object())
    throw ProblemError("missing \"field\" object");
  const auto& fld = j["field"];
  std::string kind = fld.value("kind", std::string());
  if (kind == "rational") {
    pr.rational = true;
  } else if (kind == "prime") {
    pr.rational = false;
    if (!fld.contains("p") || !fld["p"].is_number_unsigned())
      throw ProblemError("field kind \"prime\" needs an unsigned \"p\"");
    pr.p = fld["p"].get<unsigned>();
    if (pr.p < 3 || pr.p % 2 == 0) throw ProblemError("p must be an odd prime");
  } else {
    throw ProblemError("field kind must be \"prime\" or \"rational\"");
  }

  if (!j.contains("m") || !j["m"].is_number_integer())
    throw ProblemError("missing integer \"m\"");
  pr.m = j["m"].get<int>();
  if (pr.m < 1 || pr.m > 16) throw ProblemError("m out of range [1, 16]");

  if (!j.contains("lagrangians") || !j["lagrangians"].is_array())
    throw ProblemError("missing \"lagrangians\" array");
  const auto& ls = j["lagrangians"];
  pr.n = static_cast<int>(ls.size());
  if (pr.n < 2) throw ProblemError("need at least 2 lagrangians");

  for (int li = 0; li < pr.n; ++li) {
    const auto& lag = ls[static_cast<std::size_t>(li)];
    if (!lag.is_array() || lag.empty()) {
      std::ostringstream os;
      os << "lagrangian " << li << ": expected a non-empty array of rows";
      throw ProblemError(os.str());
    }
    std::vector<std::vector<mpq_class>> rows;
    for (int ri = 0; ri < static_cast<int>(lag.size()); ++ri) {
      const auto& row = lag[static_cast<std::size_t>(ri)];
      if (!row.is_array() || static_cast<int>(row.size()) != 2 * pr.m) {
        std::ostringstream os;
        os << "lagrangian " << li << ", row " << ri << ": expected " << 2 * pr.m << " entries";
        throw ProblemError(os.str());
      }
      std::vector<mpq_class> r;
      for (int ci = 0; ci < 2 * pr.m; ++ci)
        r.push_back(entry_from_json(row[static_cast<std::size_t>(ci)], li, ri, ci));
      rows.push_back(std::move(r));
    }
    pr.rows.push_back(std::move(rows));
  }

  if (j.contains("psi_twist")) {
    if (!j["psi_twist"].is_number_unsigned() || j["psi_twist"].get<unsigned>() == 0)
      throw ProblemError("psi_twist must be a positive integer");
    pr.psi_twist = j["psi_twist"].get<unsigned>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ProblemError("seed must be a non-negative integer");
    pr.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number()) throw ProblemError("tolerance must be a number");
    pr.tolerance = j["tolerance"].get<double>();
    if (!(pr.tolerance > 0)) throw ProblemError("tolerance must be positive");
    pr.has_tolerance = true;
  }
  return pr;
}

LagTuple<FpField> build_tuple(const FpField& f, const Problem& pr) {
  if (pr.rational) throw ProblemError("rational problem handed to a prime-field build");
  auto J = symplectic_J(f, pr.m);
  LagTuple<FpField> t;
  t.m = pr.m;
  t.n = pr.n;
  for (int li = 0; li < pr.n; ++li) {
    const auto& rows = pr.rows[static_cast<std::size_t>(li)];
    Mat<std::uint16_t> a(static_cast<int>(rows.size()), 2 * pr.m);
    for (int ri = 0; ri < a.rows; ++ri)
      for (int ci = 0; ci < a.cols; ++ci)
        a.at(ri, ci) = entry_mod_p(f, rows[static_cast<std::size_t>(ri)][static_cast<std::size_t>(ci)], li, ri);
    auto L = Subspace<FpField>::from_rows(f, a);
    std::ostringstream os;
    if (L.dim() != pr.m) {
      os << "lagrangian " << li << ": rows span dimension " << L.dim() << ", need " << pr.m;
      throw ProblemError(os.str());
    }
    if (!is_lagrangian(f, J, L)) {
      os << "lagrangian " << li << ": the symplectic form does not vanish on the span";
      throw ProblemError(os.str());
    }
    t.L.push_back(std::move(L));
  }
  return t;
}

LagTuple<QField> build_tuple(const QField& f, const Problem& pr) {
  if (!pr.rational) throw ProblemError("prime-field problem handed to a rational build");
  auto J = symplectic_J(f, pr.m);
  LagTuple<QField> t;
  t.m = pr.m;
  t.n = pr.n;
  for (int li = 0; li < pr.n; ++li) {
    const auto& rows = pr.rows[static_cast<std::size_t>(li)];
    Mat<mpq_class> a(static_cast<int>(rows.size()), 2 * pr.m);
    for (int ri = 0; ri < a.rows; ++ri)
      for (int ci = 0; ci < a.cols; ++ci)
        a.at(ri, ci) = rows[static_cast<std::size_t>(ri)][static_cast<std::size_t>(ci)];
    auto L = Subspace<QField>::from_rows(f, a);
    std::ostringstream os;
    if (L.dim() != pr.m) {
      os << "lagrangian " << li << ": rows span dimension " << L.dim() << ", need " << pr.m;
      throw ProblemError(os.str());
    }
    if (!is_lagrangian(f, J, L)) {
      os << "lagrangian " << li << ": the symplectic form does not vanish on the span";
      throw ProblemError(os.str());
    }
    t.L.push_back(std::move(L));
  }
  return t;
}

Problem canonical_problem(const Problem& pr) {
  Problem out = pr;
  out.rows.clear();
  if (pr.rational) {
    QField f;
    auto t = build_tuple(f, pr);
    for (const auto& L : t.L) {
      std::vector<std::vector<mpq_class>> rows;
      for (int r = 0; r < L.dim(); ++r) {
        std::vector<mpq_class> row;
        for (int c = 0; c < 2 * pr.m; ++c) row.push_back(L.rows.at(r, c));
        rows.push_back(std::move(row));
      }
      out.rows.push_back(std::move(rows));
    }
  } else {
    FpField f(pr.p);
    auto t = build_tuple(f, pr);
    for (const auto& L : t.L) {
      std::vector<std::vector<mpq_class>> rows;
      for (int r = 0; r < L.dim(); ++r) {
        std::vector<mpq_class> row;
        for (int c = 0; c < 2 * pr.m; ++c) row.push_back(mpq_class(int(L.rows.at(r, c))));
        rows.push_back(std::move(row));
      }
      out.rows.push_back(std::move(rows));
    }
  }
  return out;
}

ordered_json rat_json(const mpq_class& x) {
  if (x.get_den() == 1) {
    mpz_class num = x.get_num();
    if (num.fits_slong_p()) return ordered_json(num.get_si());
    return ordered_json(num.get_str());
  }
  return ordered_json(x.get_str());
}

ordered_json rat_mat_json(const Mat<mpq_class>& a) {
  ordered_json out = ordered_json::array();
  for (int r = 0; r < a.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < a.cols; ++c) row.push_back(rat_json(a.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json fp_mat_json(const Mat<std::uint16_t>& a) {
  ordered_json out = ordered_json::array();
  for (int r = 0; r < a.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < a.cols; ++c) row.push_back(int(a.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json complex_json(std::complex<double> z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

std::string serialize_problem(const Problem& pr) {
  ordered_json j;
  if (pr.rational) {
    j["field"] = ordered_json{{"kind", "rational"}};
  } else {
    j["field"] = ordered_json{{"kind", "prime"}, {"p", pr.p}};
  }
  j["m"] = pr.m;
  ordered_json ls = ordered_json::array();
  for (const auto& rows : pr.rows) {
    ordered_json lag = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r = ordered_json::array();
      for (const auto& e : row) r.push_back(rat_json(e));
      lag.push_back(std::move(r));
    }
    ls.push_back(std::move(lag));
  }
  j["lagrangians"] = std::move(ls);
  j["psi_twist"] = pr.psi_twist;
  j["seed"] = pr.seed;
  if (pr.has_tolerance) j["tolerance"] = pr.tolerance;
  return j.dump();
}

}  // namespace maslov
