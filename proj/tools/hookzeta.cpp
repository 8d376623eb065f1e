#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookzeta/arith.hpp"
#include "hookzeta/craig.hpp"
#include "hookzeta/error.hpp"
#include "hookzeta/json_io.hpp"
#include "hookzeta/specht.hpp"
#include "hookzeta/verify.hpp"
#include "hookzeta/zeta.hpp"

using namespace hookzeta;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Options {
  int n = 0;
  long d = 1;
  long prime = 0;
  int max_exp = 8;
  long limit = 0;
  std::string file;
  std::string format = "text";
  bool oracle = false;
  std::uint64_t seed = 1;
  bool lattices = false;
  bool inject_sign_error = false;
  Limits limits = default_limits();
};

json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

void require_n(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "--n must be at least 2");
}

int cmd_zeta(const Options& o) {
  require_n(o.n);
  const auto z = global_zeta(o.n, o.d);
  if (o.format == "json") std::cout << zeta_to_json(z).dump(2) << '\n';
  else if (o.format == "latex") std::cout << zeta_to_latex(z) << '\n';
  else std::cout << zeta_to_text(z) << '\n';
  return kOk;
}

int cmd_coeffs(const Options& o) {
  require_n(o.n);
  if (o.limit < 1) throw Error(ErrorKind::InvalidInput, "--limit must be at least 1");
  const auto z = global_zeta(o.n, o.d);
  const auto l = craig_lattice(o.n, o.d).basis;
  const auto g = craig_generators(o.n);
  json rows = json::array();
  std::vector<long> mismatches;
  for (long m = 1; m <= o.limit; ++m) {
    const Int a = dirichlet_coeff(z, static_cast<std::uint64_t>(m));
    if (o.oracle) {
      const auto subs = enumerate_index_sublattices(l, g, m, o.limits);
      if (Int(static_cast<unsigned long>(subs.size())) != a) mismatches.push_back(m);
    }
    rows.push_back({m, int_json(a)});
  }
  if (o.format == "text") {
    for (const auto& r : rows) std::cout << r[0].dump() << ' ' << r[1].dump() << '\n';
  } else {
    std::cout << rows.dump() << '\n';
  }
  if (!mismatches.empty()) {
    std::cerr << "oracle mismatch: coefficients disagree with direct enumeration at m =";
    for (long m : mismatches) std::cerr << ' ' << m;
    std::cerr << '\n';
    return kFailed;
  }
  return kOk;
}

int cmd_enumerate(const Options& o) {
  require_n(o.n);
  if (!is_prime(o.prime)) throw Error(ErrorKind::InvalidInput, "--prime must be a prime");
  if (o.max_exp < 0) throw Error(ErrorKind::InvalidInput, "--max-exp must be nonnegative");
  if ((o.n + 1) % o.d != 0)
    throw Error(ErrorKind::NotALattice, "not-a-lattice: L(d) is G-stable only when d divides n+1");
  const auto l = craig_lattice(o.n, o.d).basis;
  const auto g = craig_generators(o.n);
  const auto levels = enumerate_p_sublattices(l, g, o.prime, o.max_exp, o.limits);
  json counts = json::array();
  json lats = json::object();
  std::vector<int> mismatches;
  for (const auto& [e, v] : levels) {
    counts.push_back(v.size());
    if (o.lattices) {
      json arr = json::array();
      for (const auto& sub : v) arr.push_back(matrix_to_json(sub.hnf()));
      lats[std::to_string(e)] = std::move(arr);
    }
    if (o.oracle) {
      Int pe = 1;
      for (int k = 0; k < e; ++k) pe *= o.prime;
      const auto direct = to_long(pe);
      if (!direct || static_cast<std::uint64_t>(*direct) > o.limits.max_index)
        throw Error(ErrorKind::ScaleExceeded,
                    "oracle-scale-exceeded: p^" + std::to_string(e) + " exceeds --max-index");
      if (enumerate_index_sublattices(l, g, *direct, o.limits) != v) mismatches.push_back(e);
    }
  }
  if (o.format == "text") {
    std::cout << "counts:";
    for (const auto& c : counts) std::cout << ' ' << c.dump();
    std::cout << '\n';
    if (o.lattices)
      for (const auto& [e, arr] : lats.items())
        for (const auto& m : arr) std::cout << "p^" << e << ": " << matrix_from_json(m).to_string() << '\n';
  } else {
    json out{{"n", o.n}, {"d", o.d}, {"p", o.prime}, {"max_exp", o.max_exp}, {"counts", counts}};
    if (o.lattices) out["lattices"] = lats;
    if (o.oracle) out["oracle_agrees"] = mismatches.empty();
    std::cout << out.dump(2) << '\n';
  }
  if (!mismatches.empty()) {
    std::cerr << "oracle mismatch: breadth-first and direct enumeration disagree at exponents";
    for (int e : mismatches) std::cerr << ' ' << e;
    std::cerr << '\n';
    return kFailed;
  }
  return kOk;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

int cmd_identify(const Options& o) {
  if (o.file.empty()) throw Error(ErrorKind::InvalidInput, "--file is required");
  json j = read_json_file(o.file);
  if (j.is_object() && j.contains("intertwiner")) j = j["intertwiner"];
  const IntMatrix basis = matrix_from_json(j);
  if (basis.rows() != basis.cols())
    throw Error(ErrorKind::InvalidInput, "basis matrix must be square");
  const int n = static_cast<int>(basis.rows());
  if (o.n != 0 && o.n != n)
    throw Error(ErrorKind::InvalidInput, "--n does not match the basis dimension " + std::to_string(n));
  require_n(n);
  if (det(basis) == 0) throw Error(ErrorKind::Singular, "singular");
  const LatticeBasis l(basis);
  const auto g = craig_generators(n);
  if (!is_g_stable(l, g)) {
    std::cerr << "not G-stable: the lattice is not a ZG-lattice\n";
    return kFailed;
  }
  for (long d : divisors(n + 1)) {
    const auto c = is_scalar_multiple(craig_lattice(n, d).basis, l);
    if (!c) continue;
    if (o.format == "json")
      std::cout << json{{"n", n}, {"d", d}, {"scale", c->get_str()}}.dump(2) << '\n';
    else
      std::cout << d << '\n';
    return kOk;
  }
  std::cerr << "no L(d) with d | n+1 is a scalar multiple of the lattice\n";
  return kFailed;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.n_max = o.n == 0 ? 5 : o.n;
  v.max_exp = o.max_exp;
  if (o.limit > 0) v.coeff_limit = o.limit;
  v.seed = o.seed;
  v.inject_sign_error = o.inject_sign_error;
  v.limits = o.limits;
  const auto report = run_verification(v);
  if (o.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    for (const auto& c : report["checks"]) {
      std::cout << (c["passed"].get<bool>() ? "pass  " : "FAIL  ") << c["name"].get<std::string>() << " ("
                << c["cases"].dump() << " cases)";
      if (c.contains("skipped")) std::cout << " skipped: " << c["skipped"].size();
      std::cout << '\n';
      for (const auto& f : c["failures"]) std::cout << "      " << f.get<std::string>() << '\n';
    }
    const auto& e = report["erratum"];
    if (!e.is_null())
      std::cout << "Specht local factor: sum_{j=0}^{v} X^j "
                << (e["sum_0_to_v_consistent"].get<bool>() ? "consistent" : "inconsistent")
                << ", (X^v - 1)/(X - 1) "
                << (e["sum_0_to_v_minus_1_consistent"].get<bool>() ? "consistent" : "inconsistent")
                << " with enumeration\n";
    std::cout << (report["passed"].get<bool>() ? "all checks passed" : "verification failed") << '\n';
  }
  if (!report["passed"].get<bool>()) {
    std::cerr << "failed:";
    for (const auto& f : report["failed"]) std::cerr << " [" << f.get<std::string>() << ']';
    std::cerr << '\n';
    return kFailed;
  }
  return kOk;
}

int cmd_specht(const Options& o) {
  require_n(o.n);
  const auto closed = specht_generators_closed(o.n);
  bool checked = false;
  if (o.n <= o.limits.oracle_max_n) {
    const auto oracle = specht_generators_oracle(o.n, o.limits);
    for (std::size_t k = 0; k < closed.mats.size(); ++k)
      if (closed.mats[k] != oracle.mats[k]) {
        std::cerr << "closed-form Specht action disagrees with the polytabloid oracle at s_" << k + 1 << '\n';
        return kFailed;
      }
    checked = true;
  }
  const auto p = intertwiner(closed, craig_generators(o.n));
  const long d = identify_specht_lattice(o.n);
  if (o.format == "json") {
    json gens = json::array();
    for (const auto& m : closed.mats) gens.push_back(matrix_to_json(m));
    std::cout << json{{"n", o.n},
                      {"generators", gens},
                      {"oracle_checked", checked},
                      {"intertwiner", matrix_to_json(p)},
                      {"d", d}}
                     .dump(2)
              << '\n';
  } else {
    for (std::size_t k = 0; k < closed.mats.size(); ++k)
      std::cout << "s_" << k + 1 << ":\n" << closed.mats[k].to_string() << '\n';
    std::cout << "oracle checked: " << (checked ? "yes" : "no") << '\n';
    std::cout << "intertwiner:\n" << p.to_string() << '\n';
    std::cout << "d = " << d << '\n';
  }
  return kOk;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Singular:
    case ErrorKind::ScaleExceeded:
    case ErrorKind::NotALattice:
      return kInvalid;
    default:
      return kFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solomon zeta functions of the lattices of the hook representation"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-index", o.limits.max_index, "largest index for direct HNF enumeration");
    sub->add_option("--max-spin", o.limits.max_spin, "largest p^n spun over F_p");
    sub->add_option("--oracle-max-n", o.limits.oracle_max_n, "largest n for the polytabloid oracle");
  };

  auto* zeta = app.add_subcommand("zeta", "factored zeta function of L(d)");
  zeta->add_option("--n", o.n)->required();
  zeta->add_option("--d", o.d)->required();
  add_format(zeta);

  auto* coeffs = app.add_subcommand("coeffs", "Dirichlet coefficients a(m), 1 <= m <= limit");
  coeffs->add_option("--n", o.n)->required();
  coeffs->add_option("--d", o.d)->required();
  coeffs->add_option("--limit", o.limit)->required();
  coeffs->add_flag("--oracle", o.oracle, "recount by direct HNF enumeration");
  add_format(coeffs);
  add_limits(coeffs);

  auto* enumerate = app.add_subcommand("enumerate", "G-stable sublattices of p-power index");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--d", o.d);
  enumerate->add_option("--prime", o.prime)->required();
  enumerate->add_option("--max-exp", o.max_exp);
  enumerate->add_flag("--oracle", o.oracle, "recount by direct HNF enumeration");
  enumerate->add_flag("--lattices", o.lattices, "print the HNF of every sublattice");
  add_format(enumerate);
  add_limits(enumerate);

  auto* identify = app.add_subcommand("identify", "the d with a lattice isomorphic to L(d)");
  identify->add_option("--file", o.file, "JSON basis matrix, columns in Craig coordinates")->required();
  identify->add_option("--n", o.n);
  add_format(identify);

  auto* verify = app.add_subcommand("verify", "run every check for 2 <= n <= --n");
  verify->add_option("--n", o.n, "largest n (default 5)");
  verify->add_option("--max-exp", o.max_exp, "p-power enumeration depth");
  verify->add_option("--limit", o.limit, "largest m for coefficient checks");
  verify->add_option("--seed", o.seed, "seed for the randomized properties");
  verify->add_flag("--inject-sign-error", o.inject_sign_error, "mutation test");
  add_format(verify);
  add_limits(verify);

  auto* specht = app.add_subcommand("specht", "Specht generators, intertwiner and identification");
  specht->add_option("--n", o.n)->required();
  add_format(specht);
  add_limits(specht);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*zeta) return cmd_zeta(o);
    if (*coeffs) return cmd_coeffs(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*identify) return cmd_identify(o);
    if (*verify) return cmd_verify(o);
    if (*specht) return cmd_specht(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kInvalid;
}
