// Command-line front end: exact matrices of t and t*, their h-adic
// truncations, the F_p picture, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "itqft/io.hpp"
#include "itqft/itqft.hpp"

namespace {

using itqft::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int p = 5;
  std::vector<int> p_list{5, 7, 11, 13};
  int c = 0;
  int n_trunc = 0;
  std::string word;
  std::string format = "json";
  std::string scope = "all";
  int max_p = 101;
  long n_max = 12;
};

void check_p(int p, int max_p) {
  if (p < 5 || !itqft::is_prime(p)) throw UsageError("--p must be a prime >= 5, got " + std::to_string(p));
  if (p > max_p) throw UsageError("--p " + std::to_string(p) + " exceeds --max-p " + std::to_string(max_p));
}

void check_c(int p, int c) {
  const int d = (p - 1) / 2;
  if (c < 0 || c > d - 1)
    throw UsageError("--c must satisfy 0 <= c <= (p-3)/2 = " + std::to_string(d - 1) + ", got " + std::to_string(c));
}

int cmd_matrices(const Options& o) {
  check_p(o.p, o.max_p);
  check_c(o.p, o.c);
  const itqft::QScalars s(o.p);
  const auto ts = itqft::tstar_matrix(s, o.c);
  const auto t = itqft::t_matrix(s, o.c, ts);
  if (o.format == "csv") {
    itqft::io::write_csv_header(std::cout);
    itqft::io::write_csv_matrix(std::cout, "t", t);
    itqft::io::write_csv_matrix(std::cout, "tstar", ts);
  } else {
    Json j = itqft::io::header(o.p, o.c);
    j["rank"] = t.size();
    j["t"] = itqft::io::to_json(t);
    j["tstar"] = itqft::io::to_json(ts);
    itqft::io::write_json(std::cout, j);
  }
  return kExitOk;
}

int cmd_hadic(const Options& o) {
  check_p(o.p, o.max_p);
  check_c(o.p, o.c);
  if (o.n_trunc < 0) throw UsageError("--n-trunc must be >= 0");
  std::vector<itqft::Letter> letters;
  try {
    letters = itqft::parse_word(o.word);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const itqft::QScalars s(o.p);
  const itqft::TorusRep rep(s, o.c);
  const auto m = itqft::HDigitsMatrix::truncate(rep.eval(letters), o.n_trunc);
  if (o.format == "csv") {
    itqft::io::write_csv_header(std::cout);
    itqft::io::write_csv_matrix(std::cout, "word", m);
  } else {
    Json j = itqft::io::header(o.p, o.c);
    j["N"] = o.n_trunc;
    j["word"] = o.word;
    j["matrix"] = itqft::io::to_json(m);
    itqft::io::write_json(std::cout, j);
  }
  return kExitOk;
}

int cmd_fp(const Options& o) {
  check_p(o.p, o.max_p);
  check_c(o.p, o.c);
  const itqft::QScalars s(o.p);
  const auto rho = itqft::rho0_matrices(s, o.c);
  const int D = static_cast<int>(rho.t_hat.size()) - 1;
  const auto phi = itqft::phi_matrix(o.p, o.c);
  const auto poly_t = itqft::poly_action(o.p, itqft::kSl2T, D);
  const auto poly_ts = itqft::poly_action(o.p, itqft::kSl2Tstar, D);
  const bool ok = itqft::verify_intertwine(rho, o.c);
  if (o.format == "csv") {
    itqft::io::write_csv_header(std::cout);
    itqft::io::write_csv_matrix(std::cout, "t_hat", rho.t_hat);
    itqft::io::write_csv_matrix(std::cout, "tstar_hat", rho.tstar_hat);
    itqft::io::write_csv_matrix(std::cout, "phi", phi);
    itqft::io::write_csv_matrix(std::cout, "poly_T", poly_t);
    itqft::io::write_csv_matrix(std::cout, "poly_Tstar", poly_ts);
  } else {
    Json j = itqft::io::header(o.p, o.c);
    j["D"] = D;
    j["t_hat"] = itqft::io::to_json(rho.t_hat);
    j["tstar_hat"] = itqft::io::to_json(rho.tstar_hat);
    j["phi"] = itqft::io::to_json(phi);
    j["poly_T"] = itqft::io::to_json(poly_t);
    j["poly_Tstar"] = itqft::io::to_json(poly_ts);
    j["intertwine_ok"] = ok;
    j["irreducible"] = itqft::irreducibility_check(rho);
    itqft::io::write_json(std::cout, j);
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Options& o) {
  const bool all = o.scope == "all";
  itqft::VerifyLog log;
  if (all || o.scope != "identity") {
    for (int p : o.p_list) check_p(p, o.max_p);
    for (int p : o.p_list) {
      const itqft::QScalars s(p);
      if (all || o.scope == "rep") itqft::run_rep_suite(s, log);
      if (all || o.scope == "skein") itqft::run_skein_suite(s, log);
      if (all || o.scope == "fp") itqft::run_fp_suite(s, log);
    }
  }
  if (all || o.scope == "identity") {
    if (o.n_max < 1) throw UsageError("--n-max must be >= 1");
    itqft::run_identity_suite(o.n_max, log);
  }
  const bool pass = itqft::all_pass(log);
  if (o.format == "csv") {
    std::cout << "p,c,suite,check,pass,detail\n";
    for (const auto& e : log)
      std::cout << e.p << ',' << e.c << ',' << e.suite << ',' << e.check << ',' << (e.pass ? "true" : "false") << ",\""
                << e.detail << "\"\n";
  } else {
    Json j;
    j["p_list"] = o.p_list;
    j["scope"] = o.scope;
    Json checks = Json::array();
    for (const auto& e : log) {
      Json row;
      row["p"] = e.p;
      row["c"] = e.c;
      row["suite"] = e.suite;
      row["check"] = e.check;
      row["pass"] = e.pass;
      row["detail"] = e.detail;
      checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = pass;
    itqft::io::write_json(std::cout, j);
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integral TQFT representation of the one-holed torus mapping class group"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"json", "csv"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--max-p", o.max_p, "Largest prime accepted");
  };
  auto add_pc = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Odd prime p >= 5")->required();
    sub->add_option("--c", o.c, "Color parameter c (the banded point has color 2c), 0 <= c <= (p-3)/2");
  };

  auto* matrices = app.add_subcommand("matrices", "Exact matrices of t and t* in the Q' basis");
  add_pc(matrices);
  add_common(matrices);

  auto* hadic = app.add_subcommand("hadic", "Word value truncated modulo h^(N+1)");
  add_pc(hadic);
  add_common(hadic);
  hadic->add_option("--n-trunc", o.n_trunc, "Truncation depth N");
  hadic->add_option("--word", o.word, "Word over T, S (t, s are inverses), read left to right");

  auto* fp = app.add_subcommand("fp", "The representation over F_p and its SL(2,F_p) model");
  add_pc(fp);
  add_common(fp);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--p", o.p_list, "Comma-separated primes")->delimiter(',');
  verify->add_option("--scope", o.scope, "Suites to run")
      ->check(CLI::IsMember(std::vector<std::string>{"all", "rep", "skein", "fp", "identity"}));
  verify->add_option("--n-max", o.n_max, "Largest n for the binomial sum identity");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*matrices) return cmd_matrices(o);
    if (*hadic) return cmd_hadic(o);
    if (*fp) return cmd_fp(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const itqft::ConsistencyError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
