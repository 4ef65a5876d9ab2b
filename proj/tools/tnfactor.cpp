// tnfactor: structured-matrix generators, exact bidiagonal/LU
// factorization certificates and total-positivity checks with
// reproducible JSON output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tnfactor/json_io.hpp"
#include "tnfactor/neville.hpp"

namespace {

using namespace tnfactor;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitMismatch = 2;

std::vector<Rational> parse_grid(const std::string& csv, const std::string& what) {
  std::vector<Rational> nodes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error("empty entry in grid " + what);
    nodes.push_back(Rational::parse(item));
  }
  if (nodes.empty()) throw Error("grid " + what + " must have at least one node");
  return nodes;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    double v = std::strtod(item.c_str(), &end);
    if (end == nullptr || *end != '\0' || !std::isfinite(v))
      throw Error("invalid entry in exponent list: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error("exponent list must be nonempty");
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << doc << "\n";
}

struct GridFlags {
  std::string x, y;
  std::string ordering = "strictly-increasing-positive";

  void attach(CLI::App* cmd, bool x_required = true) {
    auto* xo = cmd->add_option("--x", x, "comma-separated rational nodes, e.g. 1,3/2,2");
    if (x_required) xo->required();
    cmd->add_option("--y", y, "second grid (defaults to --x)");
    cmd->add_option("--ordering", ordering,
                    "declared grid regime: strictly-increasing-positive | strictly-increasing | "
                    "distinct-only");
  }

  GridParams params() const {
    auto xs = parse_grid(x, "x");
    auto ys = y.empty() ? xs : parse_grid(y, "y");
    return GridParams(std::move(xs), std::move(ys), ordering_from_string(ordering));
  }

  std::vector<Rational> x_nodes() const { return parse_grid(x, "x"); }
  std::vector<Rational> y_nodes() const { return y.empty() ? parse_grid(x, "x") : parse_grid(y, "y"); }
};

MeanKind mean_kind_from_flags(const std::string& kind, const std::string& nu,
                              const std::string& alpha) {
  if (kind == "arith-recip") return MeanKind::arithmetic_reciprocal();
  if (kind == "harmonic") return MeanKind::harmonic();
  if (kind == "heinz-recip") {
    if (nu.empty()) throw Error("heinz-recip needs --nu");
    return MeanKind::heinz_reciprocal(Rational::parse(nu));
  }
  if (kind == "binom-recip") {
    if (alpha.empty()) throw Error("binom-recip needs --alpha (rational, inf or -inf)");
    return MeanKind::binomial_reciprocal(ExtendedReal::parse(alpha));
  }
  if (kind == "min") return MeanKind::min();
  if (kind == "max") return MeanKind::max();
  if (kind == "flat") return MeanKind::flat();
  throw Error("unknown mean kind: '" + kind +
              "' (expected arith-recip|harmonic|heinz-recip|binom-recip|min|max|flat)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured-matrix factorization certificates and total-positivity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("--output", output, "write the JSON document to a file instead of stdout");

  // --- gen ------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "emit a structured matrix as JSON");
  std::string gen_family, gen_kind, gen_nu, gen_alpha, gen_r;
  long gen_m = -1;
  GridFlags gen_grid;
  gen->add_option("--family", gen_family, "S | S-pow | cauchy | mean | vandermonde")->required();
  gen_grid.attach(gen);
  gen->add_option("--m", gen_m, "integer Hadamard power (family S-pow)");
  gen->add_option("--r", gen_r, "exponent; integer keeps exact kind where available");
  gen->add_option("--kind", gen_kind, "mean family (family mean)");
  gen->add_option("--nu", gen_nu, "heinz parameter in [0,1]");
  gen->add_option("--alpha", gen_alpha, "binomial parameter (rational, inf, -inf)");

  // --- factor ----------------------------------------------------------
  auto* factor = app.add_subcommand("factor", "emit a factorization certificate as JSON");
  std::string factor_route, factor_input;
  long factor_m = -1;
  GridFlags factor_grid;
  factor
      ->add_option("--theorem", factor_route,
                   "2.1 (radical LU display) | 2.2 (S bidiagonal) | 2.4 (Hadamard power) | "
                   "vandermonde | min | neville")
      ->required();
  factor_grid.attach(factor, /*x_required=*/false);
  factor->add_option("--m", factor_m, "Hadamard power for route 2.4");
  factor->add_option("--input", factor_input, "matrix JSON for route neville ('-' = stdin)");

  // --- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "re-multiply a certificate and compare with its target");
  std::string verify_cert, verify_target;
  verify->add_option("--cert", verify_cert, "certificate JSON file ('-' = stdin)")->required();
  verify->add_option("--target", verify_target,
                     "target matrix JSON; omitted: rebuild from the certificate's target");

  // --- check -----------------------------------------------------------
  auto* check = app.add_subcommand("check", "TP_k / TN_k verdict by exhaustive minor enumeration");
  std::string check_prop = "tp", check_mode = "exact", check_input;
  std::size_t check_k = 0;
  double check_tol = 1e-10;
  bool check_allow_large = false;
  check->add_option("--prop", check_prop, "tp | tn");
  check->add_option("-k,--k", check_k, "maximal minor order (default min(rows, cols))");
  check->add_option("--mode", check_mode, "exact | float");
  check->add_option("--tol", check_tol, "relative sign tolerance for float mode");
  check->add_option("--input", check_input, "matrix JSON ('-' = stdin)");
  check->add_flag("--allow-large", check_allow_large, "lift the 10x10 enumeration cap");

  // --- scan ------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "Hadamard-power threshold scan for the S family");
  std::string scan_family = "S", scan_rlist;
  std::size_t scan_k = 0;
  double scan_tol = 1e-10;
  GridFlags scan_grid;
  scan->add_option("--family", scan_family, "only S is supported");
  scan_grid.attach(scan);
  scan->add_option("--r-list", scan_rlist, "comma-separated exponents")->required();
  scan->add_option("-k,--k", scan_k, "minor order (default n)");
  scan->add_option("--tol", scan_tol, "relative sign tolerance for non-integer exponents");

  // --- rank ------------------------------------------------------------
  auto* rank = app.add_subcommand("rank", "exact rank of the integer Hadamard power");
  long rank_m = -1;
  GridFlags rank_grid;
  rank_grid.attach(rank);
  rank->add_option("--m", rank_m, "Hadamard power, 0 <= m <= n-2")->required();

  // --- selftest ----------------------------------------------------------
  auto* selftest = app.add_subcommand("selftest", "run the invariant battery on seeded random grids");
  std::uint64_t st_seed = SelftestOptions{}.seed;
  std::size_t st_trials = SelftestOptions{}.trials;
  selftest->add_option("--seed", st_seed, "random seed (fixed default for reproducibility)");
  selftest->add_option("--trials", st_trials, "trials per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomainError;
  }

  try {
    if (gen->parsed()) {
      Matrix m = [&]() -> Matrix {
        if (gen_family == "S") return s_matrix(gen_grid.params());
        if (gen_family == "S-pow") {
          if ((gen_m >= 0) == !gen_r.empty())
            throw Error("family S-pow needs exactly one of --m (exact) or --r (float)");
          if (gen_m >= 0) return s_hadamard_int(gen_grid.params(), static_cast<unsigned long>(gen_m));
          Exponent r = Exponent::parse(gen_r);
          return s_hadamard_real(gen_grid.params(), r.as_double());
        }
        if (gen_family == "cauchy") return cauchy_matrix(gen_grid.x_nodes(), gen_grid.y_nodes());
        if (gen_family == "vandermonde") return vandermonde_matrix(gen_grid.x_nodes());
        if (gen_family == "mean") {
          if (gen_kind.empty()) throw Error("family mean needs --kind");
          if (gen_r.empty()) throw Error("family mean needs --r");
          return mean_matrix(mean_kind_from_flags(gen_kind, gen_nu, gen_alpha), gen_grid.x_nodes(),
                             Exponent::parse(gen_r));
        }
        throw Error("unknown family: '" + gen_family + "'");
      }();
      write_output(matrix_to_json(m), output);
      return kExitOk;
    }

    if (factor->parsed()) {
      if (factor_route == "neville") {
        Matrix a = matrix_from_json(read_input(factor_input));
        NevilleOutcome outcome = neville_elimination(a);
        if (std::holds_alternative<PivotBreakdown>(outcome)) {
          const auto& b = std::get<PivotBreakdown>(outcome);
          write_output("{\n  \"status\": \"breakdown\",\n  \"row\": " + std::to_string(b.row) +
                           ",\n  \"col\": " + std::to_string(b.col) + ",\n  \"reason\": \"" +
                           b.reason + "\"\n}",
                       output);
          return kExitOk;
        }
        write_output(certificate_to_json(std::get<FactorizationCertificate>(outcome)), output);
        return kExitOk;
      }
      if (factor_grid.x.empty()) throw Error("this factorization route needs --x");
      FactorizationCertificate cert = [&] {
        if (factor_route == "2.1" || factor_route == "lu")
          return lu_display_certificate(factor_grid.params());
        if (factor_route == "2.2") return bidiagonal_decomposition_s(factor_grid.params());
        if (factor_route == "2.4") {
          if (factor_m < 1) throw Error("route 2.4 needs --m in [1, n-1]");
          return hadamard_power_decomposition(factor_grid.params(),
                                              static_cast<unsigned long>(factor_m));
        }
        if (factor_route == "vandermonde") return vandermonde_bidiagonal(factor_grid.x_nodes());
        if (factor_route == "min") return min_matrix_lu(factor_grid.x_nodes());
        throw Error("unknown factorization route: '" + factor_route + "'");
      }();
      write_output(certificate_to_json(cert), output);
      return kExitOk;
    }

    if (verify->parsed()) {
      FactorizationCertificate cert = certificate_from_json(read_input(verify_cert));
      Matrix target = verify_target.empty() ? cert.target.reconstruct()
                                            : matrix_from_json(read_input(verify_target));
      VerificationReport rep = verify_certificate(cert, target);
      write_output(verification_report_to_json(rep), output);
      return rep.status == VerificationReport::Status::mismatch ? kExitMismatch : kExitOk;
    }

    if (check->parsed()) {
      if (check_mode != "float" && check_mode != "exact")
        throw Error("unknown mode: '" + check_mode + "'");
      if (check_prop != "tp" && check_prop != "tn")
        throw Error("unknown property: '" + check_prop + "'");
      Matrix a = matrix_from_json(read_input(check_input));
      CheckOptions opts;
      opts.mode = check_mode == "float" ? CheckMode::floating : CheckMode::exact;
      opts.tol = check_tol;
      opts.allow_large = check_allow_large;
      std::size_t k = check_k == 0 ? std::min(a.rows(), a.cols()) : check_k;
      PositivityVerdict v = check_prop == "tn" ? check_tn(a, k, opts) : check_tp(a, k, opts);
      write_output(verdict_to_json(v), output);
      return kExitOk;
    }

    if (scan->parsed()) {
      if (scan_family != "S") throw Error("scan supports only --family S");
      GridParams p = scan_grid.params();
      std::size_t k = scan_k == 0 ? p.size() : scan_k;
      ThresholdScanReport rep =
          scan_hadamard_threshold(p, parse_double_list(scan_rlist), k, scan_tol);
      write_output(threshold_report_to_json(rep), output);
      return kExitOk;
    }

    if (rank->parsed()) {
      if (rank_m < 0) throw Error("--m must be a nonnegative integer");
      GridParams p = rank_grid.params();
      RankReport rep;
      rep.x = p.x;
      rep.y = p.y;
      rep.m = static_cast<unsigned long>(rank_m);
      rep.rank = rank_of_hadamard_power(p, rep.m);
      rep.expected = static_cast<std::size_t>(rank_m) + 1;
      write_output(rank_report_to_json(rep), output);
      return kExitOk;
    }

    if (selftest->parsed()) {
      SelftestReport rep = run_selftest(SelftestOptions{st_seed, st_trials});
      write_output(selftest_report_to_json(rep), output);
      return rep.all_passed ? kExitOk : kExitMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitDomainError;
}
