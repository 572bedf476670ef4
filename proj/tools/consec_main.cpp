// Command-line front end: coefficient tables, bounds, reliability curves,
// relative-error grids and oracle verification for consecutive-k-out-of-n:F
// systems.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "consec/report.hpp"

namespace {

struct Options {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string p;
  std::string format = "csv";
  std::string mode = "exact";
  std::int64_t max_n = 0;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw consec::ValidationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run(const std::string& command, const Options& o) {
  using namespace consec;
  Output out(o.out);
  if (command == "verify") {
    const auto report = verify(o.max_n);
    out.stream() << format_verify(report);
    return report.ok() ? kExitOk : kExitMismatch;
  }
  const auto format = parse_format(o.format);
  if (command == "errors") {
    if (o.n < 1) throw ValidationError("n must be a positive integer (got " + std::to_string(o.n) + ")");
    std::vector<std::string> warnings;
    write_table(out.stream(), errors_report(o.n, &warnings), format);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return kExitOk;
  }
  if (command == "summary") {
    if (o.n < 1) throw ValidationError("n must be a positive integer (got " + std::to_string(o.n) + ")");
    write_table(out.stream(), summary_report(o.n), format);
    return kExitOk;
  }
  const SystemParams params(o.n, o.k);
  if (command == "coeffs") {
    write_table(out.stream(), coeffs_report(params), format);
  } else if (command == "bounds") {
    write_table(out.stream(), bounds_report(params), format);
  } else if (command == "reliability") {
    write_table(out.stream(), reliability_report(params, parse_grid(o.p), parse_mode(o.mode)),
                format);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reliability coefficients of consecutive-k-out-of-n:F systems"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Output path (default: standard output)");
  };
  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of components")->required();
    sub->add_option("--k", o.k, "Failure run length that brings the system down")->required();
    add_format(sub);
  };

  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients N_{n,k,i} with their region");
  add_nk(coeffs);
  auto* bounds = app.add_subcommand("bounds", "Lower/upper bounds and exact coefficients");
  add_nk(bounds);
  auto* rel = app.add_subcommand("reliability", "Evaluate R(k,n;p) over a grid of p");
  add_nk(rel);
  rel->add_option("--p", o.p, "Value, comma list, or start:step:end grid")->required();
  rel->add_option("--mode", o.mode, "exact, interval or both")
      ->check(CLI::IsMember({"exact", "interval", "both"}));
  auto* errors = app.add_subcommand("errors", "Relative-error grid over all k and i");
  errors->add_option("--n", o.n, "Number of components")->required();
  add_format(errors);
  auto* summary = app.add_subcommand("summary", "Exact vs bounded index counts per k");
  summary->add_option("--n", o.n, "Number of components")->required();
  add_format(summary);
  auto* verify = app.add_subcommand("verify", "Check every formula against the oracle");
  verify->add_option("--max-n", o.max_n, "Largest n to check")->required();
  verify->add_option("--out", o.out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return consec::kExitValidation;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return consec::kExitValidation;
  }
}
