#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "pellsum/pellsum.h"

namespace {

struct Options {
  std::string format = "text";
  bool symbolic = false;
  std::optional<std::string> R;
  long n = 0;
  long m = 1;
  long ell = 0;
  long series = -1;
  long check = -1;
  std::optional<std::string> sigma;
  std::optional<long> ell_opt;
  std::string method = "fast";
  std::string mode = "closed";
  std::string suite = "all";
  bool quick = false;
  std::optional<long> bench_m, bench_ell, bench_n;
};

int usage(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return PELLSUM_USAGE_ERROR;
}

// r is read after status has been computed by the command call.
int emit(const Options& o, int status, pellsum_report* const& r) {
  if (r == nullptr) return status;
  std::fputs(o.format == "json" ? pellsum_report_json(r) : pellsum_report_text(r), stdout);
  if (const char* err = pellsum_report_error(r)) std::fprintf(stderr, "error: %s\n", err);
  pellsum_report_free(r);
  return status;
}

// R for commands with a symbolic mode: exactly one of --R and --symbolic.
bool pick_r(const Options& o, const char*& R, std::string& err) {
  if (o.symbolic == o.R.has_value()) {
    err = "give exactly one of --R and --symbolic";
    return false;
  }
  R = o.R ? o.R->c_str() : nullptr;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized Pell numbers, power linearization and closed-form power sums"};
  app.set_version_flag("--version", pellsum_version());
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--symbolic", o.symbolic, "Work in Q(R) instead of at a numeric R");

  auto* pell = app.add_subcommand("pell", "P_R(n)");
  pell->add_option("--R", o.R, "Parameter R (p or p/q)");
  pell->add_option("--n", o.n, "Index")->required();
  pell->add_option("--method", o.method, "Evaluator")->check(CLI::IsMember({"iter", "fast", "binet", "all"}));

  auto* q = app.add_subcommand("q", "Companion Q_R(n) = 2P(n+1) - R P(n)");
  q->add_option("--R", o.R, "Parameter R");
  q->add_option("--n", o.n, "Index")->required();

  auto* gf = app.add_subcommand("gf", "Generating function of P(m n)");
  gf->add_option("--m", o.m, "Stride")->required();
  gf->add_option("--R", o.R, "Parameter R");
  gf->add_option("--series", o.series, "Also print coefficients 0..N");

  auto* sum = app.add_subcommand("sum", "Weighted partial sum (--sigma) or power sum (--ell)");
  sum->add_option("--R", o.R, "Parameter R")->required();
  sum->add_option("--m", o.m, "Stride")->required();
  sum->add_option("--n", o.n, "Upper index")->required();
  sum->add_option("--sigma", o.sigma, "Weight sigma for sum sigma^k P(m k)");
  sum->add_option("--ell", o.ell_opt, "Exponent for sum P(m k)^ell");
  auto* mode = sum->add_option("--mode", o.mode, "Power-sum route")->check(CLI::IsMember({"closed", "brute", "both"}));

  auto* lin = app.add_subcommand("linearize", "Linear form of P(n)^ell");
  lin->add_option("--ell", o.ell, "Exponent")->required();
  lin->add_option("--R", o.R, "Evaluate coefficients at R");
  lin->add_option("--check", o.check, "Check against P(n)^ell for n = 0..N");

  auto* psgf = app.add_subcommand("powersum-gf", "Symbolic generating function of the power sums");
  psgf->add_option("--m", o.m, "Stride")->required();
  psgf->add_option("--ell", o.ell, "Exponent")->required();

  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  ver->add_option("--suite", o.suite, "Suite")
      ->check(CLI::IsMember({"all", "core", "identities", "sums", "examples"}));
  ver->add_flag("--quick", o.quick, "Reduced grids");

  auto* bench = app.add_subcommand("bench", "Closed form vs brute force timing and operation counts");
  bench->add_option("--R", o.R, "Parameter R");
  bench->add_option("--m", o.bench_m, "Stride");
  bench->add_option("--ell", o.bench_ell, "Exponent");
  bench->add_option("--n", o.bench_n, "Upper index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return PELLSUM_USAGE_ERROR;
  }

  pellsum_report* r = nullptr;
  std::string err;
  const char* R = nullptr;
  auto no_symbolic = [&](const char* cmd) {
    if (o.symbolic) err = std::string("--symbolic is not supported by ") + cmd;
    return !o.symbolic;
  };

  if (pell->parsed()) {
    if (!pick_r(o, R, err)) return usage(err);
    return emit(o, pellsum_pell(R, o.n, o.method.c_str(), &r), r);
  }
  if (q->parsed()) {
    if (!pick_r(o, R, err)) return usage(err);
    return emit(o, pellsum_q(R, o.n, &r), r);
  }
  if (gf->parsed()) {
    if (!pick_r(o, R, err)) return usage(err);
    return emit(o, pellsum_gf(R, o.m, o.series, &r), r);
  }
  if (sum->parsed()) {
    if (!no_symbolic("sum")) return usage(err);
    if (o.sigma.has_value() == o.ell_opt.has_value()) return usage("sum needs exactly one of --sigma and --ell");
    if (o.sigma) {
      if (mode->count() > 0) return usage("--mode applies to power sums (--ell) only");
      return emit(o, pellsum_weighted_sum(o.R->c_str(), o.m, o.sigma->c_str(), o.n, &r), r);
    }
    return emit(o, pellsum_power_sum(o.R->c_str(), o.m, *o.ell_opt, o.n, o.mode.c_str(), &r), r);
  }
  if (lin->parsed()) {
    if (o.symbolic && o.R) return usage("give at most one of --R and --symbolic");
    return emit(o, pellsum_linearize(o.ell, o.R ? o.R->c_str() : nullptr, o.check, &r), r);
  }
  if (psgf->parsed()) {
    return emit(o, pellsum_powersum_gf(o.m, o.ell, &r), r);
  }
  if (ver->parsed()) {
    if (!no_symbolic("verify")) return usage(err);
    return emit(o, pellsum_verify(o.suite.c_str(), o.quick ? 1 : 0, &r), r);
  }
  if (bench->parsed()) {
    if (!no_symbolic("bench")) return usage(err);
    const bool any = o.R || o.bench_m || o.bench_ell || o.bench_n;
    const bool all = o.R && o.bench_m && o.bench_ell && o.bench_n;
    if (any && !all) return usage("bench needs all of --R, --m, --ell, --n or none of them");
    if (!any) return emit(o, pellsum_bench(nullptr, 0, 0, 0, &r), r);
    return emit(o, pellsum_bench(o.R->c_str(), *o.bench_m, *o.bench_ell, *o.bench_n, &r), r);
  }
  return usage("no command");
}
