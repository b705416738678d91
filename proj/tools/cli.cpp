#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ucv/model.hpp"
#include "ucv/search.hpp"
#include "ucv/series.hpp"

namespace ucv::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto q = parse_rational(text);
  if (!q) throw UsageError("malformed " + what + ": '" + text + "'");
  return *q;
}

std::vector<Rational> parse_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_arg(item, what));
  if (out.empty()) throw UsageError("empty " + what);
  return out;
}

Rational checked_lambda(const Rational& lambda) {
  if (lambda <= 0 || lambda > 1) throw UsageError("lambda out of range: " + to_display_string(lambda));
  return lambda;
}

int threads_from_env() {
  if (const char* env = std::getenv("UCV_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1 || n > 1024) throw UsageError(std::string("invalid UCV_THREADS: ") + env);
    return static_cast<int>(n);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct SearchFlags {
  std::string step;
  int refine = SearchConfig{}.refine_rounds;
  int dims = SearchConfig{}.dims;

  void attach(CLI::App* cmd) {
    cmd->add_option("--step", step, "Grid step (decimal or fraction)");
    cmd->add_option("--refine", refine, "Refinement rounds")->check(CLI::Range(0, 12));
    cmd->add_option("--dims", dims, "Number of b coordinates searched")->check(CLI::Range(1, 8));
  }

  SearchConfig config() const {
    SearchConfig cfg;
    if (!step.empty()) cfg.grid_step = parse_rational_arg(step, "step");
    if (cfg.grid_step <= 0) throw UsageError("step must be positive");
    cfg.refine_rounds = refine;
    cfg.dims = dims;
    cfg.threads = threads_from_env();
    return cfg;
  }
};

void print_certificates(std::ostream& out, std::ostream& err, std::span<const BoundCertificate> certs,
                        const std::string& format) {
  for (const auto& c : certs) {
    if (c.sharpness_warning()) {
      err << "warning: lambda=" << to_display_string(c.lambda) << ' ' << c.functional << ' '
          << to_string(c.direction) << " gap " << format_double(*c.gap) << " exceeds "
          << format_double(kSharpnessWarn) << '\n';
    }
  }
  if (format == "json") {
    out << to_json(certs).dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << to_csv(certs);
    return;
  }
  out << std::left << std::setw(8) << "lambda" << std::setw(8) << "fn" << std::setw(5) << "dir" << std::setw(17)
      << "searched" << std::setw(17) << "closed_form" << std::setw(17) << "gap" << std::setw(16) << "status"
      << "argmax\n";
  for (const auto& c : certs) {
    std::string argmax;
    for (std::size_t i = 0; i < c.argmax.size(); ++i) argmax += (i ? "," : "") + to_display_string(c.argmax[i]);
    std::string status(to_string(c.status));
    if (c.sharpness_warning()) status += " WARN";
    out << std::setw(8) << to_display_string(c.lambda) << std::setw(8) << c.functional << std::setw(5)
        << to_string(c.direction) << std::setw(17) << format_double(c.searched_value) << std::setw(17)
        << (c.closed_form ? format_double(*c.closed_form) : "-") << std::setw(17)
        << (c.gap ? format_double(*c.gap) : "-") << std::setw(16) << status << argmax << '\n';
  }
}

bool any_failed(std::span<const BoundCertificate> certs) {
  for (const auto& c : certs) {
    if (c.status == CertificateStatus::Fail) return true;
  }
  return false;
}

std::vector<std::pair<std::string, Rational>> report_rows(const CoefficientReport& r) {
  return {
      {"a2", r.a.a2},
      {"a3", r.a.a3},
      {"a4", r.a.a4},
      {"a5", r.a.a5},
      {"A2", r.inverse.A2},
      {"A3", r.inverse.A3},
      {"A4", r.inverse.A4},
      {"gamma1", r.gamma.gamma1},
      {"gamma2", r.gamma.gamma2},
      {"gamma3", r.gamma.gamma3},
      {"h2f", r.hankel.h2f},
      {"h3f", r.hankel.h3f},
      {"h2inv", r.hankel.h2inv},
      {"h3inv", r.hankel.h3inv},
      {"z23", r.zalcman.z23},
      {"z24", r.zalcman.z24},
  };
}

int run_report(const Rational& lambda, const std::string& b_text, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const auto b = parse_list(b_text, "b-vector");
  ClassMember member = [&] {
    try {
      return ClassMember::validate(lambda, b);
    } catch (const NonMember& e) {
      err << "error: " << e.what() << '\n';
      throw;
    }
  }();
  const CoefficientReport rep = report(member);
  const auto rows = report_rows(rep);

  if (format == "json") {
    json j = to_json(member, rep);
    json decimal = json::object();
    for (const auto& [name, value] : rows) decimal[name] = to_double(value);
    j["decimal"] = std::move(decimal);
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "name,exact,decimal\n";
    for (const auto& [name, value] : rows) out << name << ',' << to_string(value) << ',' << format_double(to_double(value)) << '\n';
  } else {
    out << "lambda  " << to_display_string(member.lambda()) << "\nb       ";
    for (std::size_t i = 0; i < member.b().size(); ++i) out << (i ? ", " : "") << to_display_string(member.b()[i]);
    out << '\n';
    for (const auto& [name, value] : rows) {
      out << std::left << std::setw(8) << name << std::setw(16) << to_string(value) << format_double(to_double(value))
          << '\n';
    }
  }
  return kOk;
}

std::string join_display(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + to_display_string(values[i]);
  return s;
}

int run_expand(const std::string& name, const Rational& lambda, int order, bool inverse_only,
               const std::string& format, std::ostream& out, std::ostream& err) {
  const auto which = parse_extremal(name);
  if (!which) {
    err << "error: unknown extremal '" << name << "'\n";
    return kUsage;
  }
  const ClassMember member = extremal_catalog(*which, lambda);
  const TruncatedSeries f = f_series(member, static_cast<std::size_t>(order));
  const std::vector<Rational> direct(f.coeffs().begin() + 1, f.coeffs().end());

  std::optional<std::vector<Rational>> inverse;
  if (inverse_only || *which == Extremal::FLambda) {
    const TruncatedSeries g = revert(f);
    inverse.emplace(g.coeffs().begin() + 1, g.coeffs().end());
  }

  if (format == "json") {
    auto to_strings = [](const std::vector<Rational>& v) {
      json arr = json::array();
      for (const auto& q : v) arr.push_back(to_string(q));
      return arr;
    };
    const std::vector<Rational> b(member.b().begin(), member.b().end());
    json j = {{"name", name}, {"lambda", to_string(lambda)}, {"order", order}, {"b", to_strings(b)}};
    if (!inverse_only) j["f"] = to_strings(direct);
    if (inverse) j["inverse"] = to_strings(*inverse);
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "k," << (inverse_only ? "" : "f") << (inverse && !inverse_only ? "," : "") << (inverse ? "inverse" : "")
        << '\n';
    for (int k = 0; k < order; ++k) {
      out << k + 1;
      if (!inverse_only) out << ',' << to_string(direct[k]);
      if (inverse) out << ',' << to_string((*inverse)[k]);
      out << '\n';
    }
  } else if (inverse_only) {
    out << join_display(*inverse) << '\n';
  } else {
    out << join_display(direct) << '\n';
    if (inverse) out << "inverse: " << join_display(*inverse) << '\n';
  }
  return kOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient bounds for the class U+(lambda): reports, extremals, bound certification"};
  app.name("ucv");
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  };

  auto* verify = app.add_subcommand("verify", "Certify every published bound over a lambda grid");
  std::string verify_lambda;
  std::string verify_grid;
  SearchFlags verify_flags;
  auto* lambda_opt = verify->add_option("--lambda", verify_lambda, "Single lambda");
  verify->add_option("--grid", verify_grid, "Comma-separated lambda values")->excludes(lambda_opt);
  verify_flags.attach(verify);
  add_format(verify);

  auto* report_cmd = app.add_subcommand("report", "Print every coefficient functional of one member");
  std::string report_lambda;
  std::string report_b;
  report_cmd->add_option("--lambda", report_lambda)->required();
  report_cmd->add_option("--b", report_b, "b_1,b_2,... as decimals or fractions")->required();
  add_format(report_cmd);

  auto* search_cmd = app.add_subcommand("search", "Extremize one functional");
  std::string search_fn;
  std::string search_dir = "max";
  std::string search_lambda;
  SearchFlags search_flags;
  search_cmd->add_option("--functional", search_fn)->required();
  search_cmd->add_option("--direction", search_dir)->check(CLI::IsMember({"max", "min"}));
  search_cmd->add_option("--lambda", search_lambda)->required();
  search_flags.attach(search_cmd);
  add_format(search_cmd);

  auto* expand = app.add_subcommand("expand", "Expand a named extremal function");
  std::string expand_name;
  std::string expand_lambda;
  int expand_order = 5;
  bool expand_inverse = false;
  expand->add_option("--name", expand_name)->required();
  expand->add_option("--lambda", expand_lambda)->required();
  expand->add_option("--order", expand_order)->check(CLI::Range(1, 64));
  expand->add_flag("--inverse", expand_inverse, "Print the inverse function's coefficients");
  add_format(expand);

  auto* conjecture = app.add_subcommand("conjecture", "Scan for counterexamples to |a_n| <= 1 + ... + lambda^(n-1)");
  int conj_n = 0;
  std::string conj_lambda;
  SearchFlags conj_flags;
  conjecture->add_option("--n", conj_n)->required()->check(CLI::Range(2, 8));
  conjecture->add_option("--lambda", conj_lambda)->required();
  conj_flags.attach(conjecture);
  add_format(conjecture);

  std::vector<const char*> argv{"ucv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (verify->parsed()) {
    if (verify_lambda.empty() && verify_grid.empty()) throw UsageError("verify needs --lambda or --grid");
    auto grid = verify_grid.empty() ? std::vector<Rational>{parse_rational_arg(verify_lambda, "lambda")}
                                    : parse_list(verify_grid, "grid");
    for (const auto& l : grid) checked_lambda(l);
    const auto certs = verify_bounds(grid, verify_flags.config());
    print_certificates(out, err, certs, format);
    return any_failed(certs) ? kBoundFailed : kOk;
  }
  if (report_cmd->parsed()) {
    const Rational lambda = checked_lambda(parse_rational_arg(report_lambda, "lambda"));
    return run_report(lambda, report_b, format, out, err);
  }
  if (search_cmd->parsed()) {
    const auto fn = Functional::parse(search_fn);
    if (!fn) throw UsageError("unknown functional '" + search_fn + "'");
    const Rational lambda = checked_lambda(parse_rational_arg(search_lambda, "lambda"));
    const std::vector<BoundCertificate> certs{optimize(*fn, lambda, *parse_direction(search_dir), search_flags.config())};
    print_certificates(out, err, certs, format);
    return any_failed(certs) ? kBoundFailed : kOk;
  }
  if (expand->parsed()) {
    const Rational lambda = checked_lambda(parse_rational_arg(expand_lambda, "lambda"));
    return run_expand(expand_name, lambda, expand_order, expand_inverse, format, out, err);
  }
  if (conjecture->parsed()) {
    const Rational lambda = checked_lambda(parse_rational_arg(conj_lambda, "lambda"));
    const std::vector<BoundCertificate> certs{conjecture_scan(conj_n, lambda, conj_flags.config())};
    print_certificates(out, err, certs, format);
    return any_failed(certs) ? kBoundFailed : kOk;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonMember&) {
    return kNonMember;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ucv::cli
