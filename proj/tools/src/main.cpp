#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>

#include "betadix_cli/manifest.hpp"
#include "betadix_cli/run.hpp"

namespace {

using betadix::cli::ExperimentManifest;

std::string env_name(const std::string& flag) {
  // --k and --K would both upper-case to BETADIX_K.
  if (flag == "K") return "BETADIX_PRECISION";
  std::string out = "BETADIX_";
  for (char c : flag) out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

template <class T>
void optional_flag(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>("--" + name, [&target](const T& v) { target = v; }, help)->envname(env_name(name));
}

void add_common(CLI::App* app, ExperimentManifest& m) {
  app->add_option("--ring", m.ring, "monic polynomial defining Z[x]/(f), e.g. x^2+1")
      ->envname(env_name("ring"))
      ->capture_default_str();
  app->add_flag_function("--no-irreducibility-check", [&m](std::int64_t) { m.check_irreducible = false; },
                         "trust that the ring polynomial is irreducible")
      ->envname(env_name("no-irreducibility-check"));
  app->add_option_function<std::string>("--format", [&m](const std::string& s) { m.format = betadix::cli::parse_format(s); },
                                        "json | csv | text (default json)")
      ->envname(env_name("format"));
  app->add_option("--seed", m.seed, "seed for sampled checks")->envname(env_name("seed"));
  app->add_option_function<std::string>(
         "--hypotheses", [&m](const std::string& s) { m.hypotheses = betadix::cli::parse_hypothesis_mode(s); },
         "theorem (reject ramified / inertia > 1 primes) | exploration")
      ->envname(env_name("hypotheses"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"betadix: beta-adic expansions, CNS checks, p-adic interpolation and digit-omission counts"};
  app.footer(betadix::cli::error_code_help() +
             "Exit status: 0 success, 2 hypothesis rejected, 1 any other error.\n"
             "Every flag can also be set through BETADIX_<FLAG> (e.g. BETADIX_N, BETADIX_ALPHA);\n"
             "--K (p-adic precision) reads BETADIX_PRECISION.");
  app.require_subcommand(1);
  app.fallthrough();

  ExperimentManifest m;
  bool dry_run = false;
  app.add_flag("--dry-run", dry_run, "print the experiment manifest instead of running it");

  auto sub = [&](betadix::cli::Command cmd, const std::string& help) {
    CLI::App* s = app.add_subcommand(betadix::cli::command_name(cmd), help);
    s->callback([&m, cmd] { m.command = cmd; });
    add_common(s, m);
    return s;
  };

  CLI::App* expand = sub(betadix::cli::Command::expand, "beta-adic expansion of an element");
  optional_flag(expand, "beta", m.beta, "base beta as a polynomial in x");
  optional_flag(expand, "digits", m.digits, "comma-separated digit set (default 0..|N(beta)|-1)");
  optional_flag(expand, "value", m.value, "element to expand");
  optional_flag(expand, "k", m.k, "also print the first k digits");

  CLI::App* cns = sub(betadix::cli::Command::cns_check, "decide whether (beta, {0..|N(beta)|-1}) is a CNS");
  optional_flag(cns, "beta", m.beta, "base beta");

  for (auto cmd : {betadix::cli::Command::count, betadix::cli::Command::bound_report}) {
    CLI::App* c = sub(cmd, cmd == betadix::cli::Command::count
                               ? "count 1 <= n <= N whose expansion of alpha^n omits a digit"
                               : "count report with sigma, ratio curve and constants");
    optional_flag(c, "alpha", m.alpha, "alpha");
    optional_flag(c, "beta", m.beta, "base beta");
    optional_flag(c, "digits", m.digits, "comma-separated digit set (default 0..|N(beta)|-1)");
    optional_flag(c, "digit", m.digit, "the omitted digit b (an element of the digit set)");
    optional_flag(c, "N", m.N, "largest exponent");
    c->add_option_function<std::string>("--mode", [&m](const std::string& s) { m.count_mode = betadix::cli::parse_count_mode(s); },
                                        "radix (finite word) | beta-adic (periodic tail included)")
        ->envname(env_name("mode"));
    c->add_option("--jobs", m.jobs, "worker threads for block-parallel counting")->envname(env_name("jobs"));
    optional_flag(c, "checkpoint", m.checkpoint, "resumable progress file");
  }

  CLI::App* interp = sub(betadix::cli::Command::interpolate, "evaluate G_l(x) = alpha^l exp(x log alpha^u) at each prime of beta");
  optional_flag(interp, "alpha", m.alpha, "alpha");
  optional_flag(interp, "beta", m.beta, "base beta");
  optional_flag(interp, "K", m.K, "p-adic precision (default 64)");
  optional_flag(interp, "u", m.u, "override u (default: product of the per-prime orders)");
  optional_flag(interp, "l", m.l, "shift l");
  optional_flag(interp, "value", m.value, "integer argument x");

  CLI::App* gap = sub(betadix::cli::Command::gap_check, "check the exponent-gap divisibility on sampled pairs");
  optional_flag(gap, "alpha", m.alpha, "alpha");
  optional_flag(gap, "beta", m.beta, "base beta");
  optional_flag(gap, "digits", m.digits, "comma-separated digit set (default 0..|N(beta)|-1)");
  optional_flag(gap, "k", m.k, "number of leading digits compared (default 3)");
  optional_flag(gap, "max-n", m.max_n, "largest exponent in the sample (default 200)");
  optional_flag(gap, "samples", m.samples, "random pairs instead of all pairs (uses --seed)");
  optional_flag(gap, "K", m.K, "p-adic precision");

  CLI::App* pers = sub(betadix::cli::Command::persistence, "Sloane-map orbit and persistence");
  optional_flag(pers, "value", m.value, "n (start of the range with --N)");
  optional_flag(pers, "N", m.N, "end of the range");
  optional_flag(pers, "base", m.base, "base (default 10)");

  CLI::App* prac = sub(betadix::cli::Command::practical, "practical-number test");
  optional_flag(prac, "value", m.value, "n");
  prac->add_flag("--central-binomial", m.central_binomial, "test C(2n, n) instead of n")
      ->envname(env_name("central-binomial"));

  CLI::App* manifest = app.add_subcommand("run", "run a JSON experiment manifest");
  std::string manifest_path;
  manifest->add_option("manifest", manifest_path, "manifest file")->required();

  try {
    app.parse(argc, argv);
    if (manifest->parsed()) {
      std::ifstream f(manifest_path);
      if (!f) {
        std::cerr << "{\"error\":\"InvalidArgument\",\"message\":\"cannot open " << manifest_path << "\"}\n";
        return betadix::cli::kExitError;
      }
      m = betadix::cli::parse_manifest(betadix::Json::parse(f));
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << betadix::Json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << '\n';
    return betadix::cli::kExitError;
  }

  if (dry_run) {
    std::cout << betadix::cli::render(m).dump(2) << '\n';
    return betadix::cli::kExitOk;
  }
  return betadix::cli::run(m, std::cout, std::cerr);
}
