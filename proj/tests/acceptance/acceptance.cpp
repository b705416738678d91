// Acceptance suite. One PASS/FAIL line per criterion; failing items are
// listed underneath. Usage: acceptance [--criterion K]...

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oracles/schur_cohn.hpp"
#include "support/generators.hpp"
#include "ucv/functional.hpp"
#include "ucv/model.hpp"
#include "ucv/rootcheck.hpp"
#include "ucv/search.hpp"

namespace {

using ucv::CertificateStatus;
using ucv::Direction;
using ucv::FunctionalKind;
using ucv::Rational;

constexpr double kGapTol = 5e-3;
constexpr double kConjectureGapTol = 1e-2;

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << v;
  return ss.str();
}

int worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// 1. Exact identities on random members.
Verdict exact_identities() {
  constexpr int kMembers = 10000;
  Verdict v;
  Stopwatch clock;
  std::mt19937_64 rng(1);
  int mismatches = 0;
  for (int i = 0; i < kMembers; ++i) {
    const auto m = gen::member(rng);
    const auto r = ucv::report(m);
    std::vector<std::string> bad;
    if (r != ucv::series_report(m)) bad.push_back("closed forms vs series oracles");
    if (r.inverse.A4 != -r.a.a4 + 5 * r.a.a2 * r.a.a3 - 5 * r.a.a2 * r.a.a2 * r.a.a2) bad.push_back("A4 from a_n");
    const Rational d = r.a.a3 - r.a.a2 * r.a.a2;
    if (r.hankel.h3inv != r.hankel.h3f - d * d * d) bad.push_back("h3inv identity");
    const std::size_t n_b = m.b().size();
    const auto u = ucv::u_residual(m, n_b + 1);
    for (std::size_t n = 2; n <= n_b + 1; ++n) {
      const Rational expected = n <= n_b ? -Rational(n - 1) * m.b()[n - 1] : Rational(0);
      if (u[n] != expected) bad.push_back("residual coefficient " + std::to_string(n));
    }
    if (!bad.empty()) {
      ++mismatches;
      if (v.failures.size() < 10) v.fail(ucv::to_json(m).dump() + ": " + bad.front());
      v.pass = false;
    }
  }
  const double t = clock.seconds();
  if (t >= 60.0) v.fail("runtime " + fmt(t) + " s >= 60 s");
  v.summary = "exact identity suite: " + std::to_string(kMembers) + " members, " + std::to_string(mismatches) +
              " mismatches, " + fmt(t) + " s";
  return v;
}

struct Expectation {
  FunctionalKind fn;
  Direction dir;
  double bound;
  bool needs_sharpness = true;
};

const ucv::BoundCertificate* find(const std::vector<ucv::BoundCertificate>& certs, const Rational& lam,
                                  const ucv::Functional& fn, Direction dir) {
  for (const auto& c : certs)
    if (c.lambda == lam && c.functional == fn.name() && c.direction == dir) return &c;
  return nullptr;
}

void check_expectations(Verdict& v, const std::vector<ucv::BoundCertificate>& certs, const Rational& lam,
                        const std::vector<Expectation>& expected) {
  for (const auto& e : expected) {
    const ucv::Functional fn(e.fn);
    const std::string tag = "lambda=" + ucv::to_display_string(lam) + " " + fn.name() + " " +
                            std::string(ucv::to_string(e.dir));
    const auto* c = find(certs, lam, fn, e.dir);
    if (c == nullptr) {
      v.fail(tag + ": no certificate");
      continue;
    }
    if (!c->closed_form || std::abs(*c->closed_form - e.bound) > 1e-12) {
      v.fail(tag + ": closed form " + (c->closed_form ? fmt(*c->closed_form) : "none") + " != " + fmt(e.bound));
      continue;
    }
    if (c->status == CertificateStatus::Fail || c->violations > 0) {
      v.fail(tag + ": bound " + fmt(e.bound) + " beaten, searched " + fmt(c->searched_value) + " (" +
             std::to_string(c->violations) + " grid violations)");
      continue;
    }
    if (e.needs_sharpness && *c->gap > kGapTol) {
      v.fail(tag + ": gap " + fmt(*c->gap) + " > " + fmt(kGapTol) + " (searched " + fmt(c->searched_value) + ")");
    }
  }
}

// Bounds written out independently of closed_form_bound.
std::vector<Expectation> general_lambda_expectations(double l) {
  using D = Direction;
  using K = FunctionalKind;
  return {
      {K::A2, D::Max, 1 + l},
      {K::A2, D::Min, 0},
      {K::A3, D::Max, 1 + 3 * l + l * l},
      {K::A3, D::Min, 0},
      {K::A4, D::Max, (1 + l) * (1 + 5 * l + l * l)},
      {K::A4, D::Min, 0},
      {K::G1, D::Max, (1 + l) / 2},
      {K::G1, D::Min, 0},
      {K::G2, D::Max, (1 + 4 * l + l * l) / 4},
      {K::G2, D::Min, 0},
      {K::G3, D::Max, (1 + l) * (1 + 8 * l + l * l) / 6},
      {K::G3, D::Min, 0},
      {K::H2F, D::Max, (1 - l / 2) * l / 2},
      {K::H2F, D::Min, -l * l},
      {K::H3F, D::Max, l * l / 12},
      {K::H3F, D::Min, -l * l / 4},
      {K::H2INV, D::Max, l * (1 + l + l * l)},
      {K::H2INV, D::Min, -l * l},
      {K::H3INV, D::Max, l * l * l},
      {K::H3INV, D::Min, -l * l / 4},
      {K::Z23, D::Max, l / 2},
      {K::Z23, D::Min, -(1 + l) * l},
      // |Z24| <= l + l^2 + l^3: the maximum reaches it, the minimum only has to respect it
      {K::Z24, D::Max, l + l * l + l * l * l},
      {K::Z24, D::Min, -(l + l * l + l * l * l), false},
      {K::A3C, D::Max, 1 + l + l * l},
      {K::A3C, D::Min, -l},
      {K::A4C, D::Max, 1 + l + l * l + l * l * l},
  };
}

// 2. Full suite at lambda = 1 against the published values.
Verdict certify_at_one() {
  Verdict v;
  Stopwatch clock;
  ucv::SearchConfig cfg;
  cfg.threads = worker_threads();
  const std::vector<Rational> grid = {Rational(1)};
  const auto certs = ucv::verify_bounds(grid, cfg);
  const double t = clock.seconds();

  using D = Direction;
  using K = FunctionalKind;
  auto expected = general_lambda_expectations(1.0);
  // spot-check the general forms against the published numbers at lambda = 1
  const std::vector<double> published = {2, 0, 5, 0, 14, 0, 1, 0, 1.5, 0, 10.0 / 3, 0, 0.25, -1,
                                         1.0 / 12, -0.25, 3, -1, 1, -0.25, 0.5, -2, 3, -3, 3, -1, 4};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(expected[i].bound - published[i]) > 1e-12) v.fail("internal: bound table mismatch at row " +
                                                                   std::to_string(i));
  }
  expected.push_back({K::A4C, D::Min, -4.0 / 3.0 * std::sqrt(2.0 / 3.0)});
  expected.push_back({K::A5C, D::Max, 5});
  expected.push_back({K::A5C, D::Min, -2.25});
  check_expectations(v, certs, Rational(1), expected);

  if (t >= 300.0) v.fail("runtime " + fmt(t) + " s >= 300 s");
  v.summary = "bound certification at lambda=1: " + std::to_string(expected.size()) + " bounds, " +
              std::to_string(v.failures.size()) + " not reproduced, " + fmt(t) + " s";
  return v;
}

// 3. General-lambda suite.
Verdict certify_across_lambda() {
  Verdict v;
  Stopwatch clock;
  ucv::SearchConfig cfg;
  cfg.threads = worker_threads();
  const std::vector<Rational> grid = {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  const auto certs = ucv::verify_bounds(grid, cfg);
  std::size_t checked = 0;
  for (const auto& lam : grid) {
    const auto expected = general_lambda_expectations(ucv::to_double(lam));
    checked += expected.size();
    check_expectations(v, certs, lam, expected);
    for (const auto& [fn, dir] : std::vector<std::pair<FunctionalKind, Direction>>{
             {FunctionalKind::A4C, Direction::Min}, {FunctionalKind::A5C, Direction::Max},
             {FunctionalKind::A5C, Direction::Min}}) {
      const auto* c = find(certs, lam, fn, dir);
      if (c == nullptr || c->status != CertificateStatus::NoClosedForm)
        v.fail("lambda=" + ucv::to_display_string(lam) + " " + ucv::Functional(fn).name() +
               " should be NO_CLOSED_FORM");
    }
  }
  const double t = clock.seconds();
  v.summary = "bound certification across lambda {0.1,0.25,0.5,0.75}: " + std::to_string(checked) + " bounds, " +
              std::to_string(v.failures.size()) + " not reproduced, " + fmt(t) + " s";
  return v;
}

std::optional<nlohmann::json> cli_json(const std::vector<std::string>& args, std::string& error) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ucv::cli::run(args, out, err);
  if (code != 0) {
    error = "exit " + std::to_string(code) + ": " + err.str();
    return std::nullopt;
  }
  return nlohmann::json::parse(out.str());
}

// 4. Catalog members attain the bounds exactly, read back from `report`.
Verdict extremal_attainment() {
  Verdict v;
  using E = ucv::Extremal;
  struct Item {
    E name;
    const char* field;
    std::function<Rational(const Rational&)> bound;
  };
  const std::vector<Item> items = {
      {E::FLambda, "A2", [](const Rational& l) { return 1 + l; }},
      {E::FLambda, "A3", [](const Rational& l) { return 1 + 3 * l + l * l; }},
      {E::FLambda, "A4", [](const Rational& l) { return (1 + l) * (1 + 5 * l + l * l); }},
      {E::FLambda, "gamma1", [](const Rational& l) { return (1 + l) / 2; }},
      {E::FLambda, "gamma2", [](const Rational& l) { return (1 + 4 * l + l * l) / 4; }},
      {E::FLambda, "gamma3", [](const Rational& l) { return (1 + l) * (1 + 8 * l + l * l) / 6; }},
      {E::FLambda, "h2inv", [](const Rational& l) { return l * (1 + l + l * l); }},
      {E::FLambda, "h3inv", [](const Rational& l) { return l * l * l; }},
      {E::FLambda, "z23", [](const Rational& l) { return -(1 + l) * l; }},
      {E::FLambda, "z24", [](const Rational& l) { return l + l * l + l * l * l; }},
      {E::FLambda, "a3", [](const Rational& l) { return 1 + l + l * l; }},
      {E::FLambda, "a4", [](const Rational& l) { return -(1 + l + l * l + l * l * l); }},
      {E::Bz2, "h2f", [](const Rational& l) { return -l * l; }},
      {E::Bz2, "h2inv", [](const Rational& l) { return -l * l; }},
      {E::Bz2, "a3", [](const Rational& l) { return -l; }},
      {E::Bz4over3, "A2", [](const Rational&) { return Rational(0); }},
      {E::Bz4over3, "A3", [](const Rational&) { return Rational(0); }},
      {E::Bz4over3, "A4", [](const Rational&) { return Rational(0); }},
      {E::H2UpperMix, "h2f", [](const Rational& l) { return (1 - l / 2) * l / 2; }},
      {E::HalfZ3, "z23", [](const Rational& l) { return l / 2; }},
      {E::HalfZ3, "h3f", [](const Rational& l) { return -l * l / 4; }},
      {E::HalfZ3, "h3inv", [](const Rational& l) { return -l * l / 4; }},
      {E::H3LowerMix, "h3f", [](const Rational& l) { return l * l / 12; }},
      {E::LambdaZ3, "h3inv", [](const Rational& l) { return l * l * l; }},
  };
  const std::vector<Rational> lambdas = {Rational(1, 10), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                         Rational(3, 4), Rational(1)};
  int checked = 0;
  for (const auto& lam : lambdas) {
    for (const auto& item : items) {
      const std::string tag = std::string(ucv::to_string(item.name)) + " " + item.field + " at lambda=" +
                              ucv::to_string(lam);
      std::string error;
      const auto expanded =
          cli_json({"expand", "--name", std::string(ucv::to_string(item.name)), "--lambda", ucv::to_string(lam),
                    "--format", "json"},
                   error);
      if (!expanded) {
        v.fail(tag + ": expand " + error);
        continue;
      }
      std::string b;
      for (const auto& x : (*expanded)["b"]) b += (b.empty() ? "" : ",") + x.get<std::string>();
      const auto rep = cli_json({"report", "--lambda", ucv::to_string(lam), "--b", b, "--format", "json"}, error);
      if (!rep) {
        v.fail(tag + ": report " + error);
        continue;
      }
      const auto got = ucv::parse_rational((*rep)[item.field].get<std::string>());
      const Rational want = item.bound(lam);
      ++checked;
      if (!got || *got != want)
        v.fail(tag + ": got " + (*rep)[item.field].get<std::string>() + ", bound " + ucv::to_string(want));
    }
  }
  // the lambda = 1 endpoint of the a_5 range
  std::string error;
  const auto top = cli_json({"report", "--lambda", "1", "--b", "2,1,0,0", "--format", "json"}, error);
  ++checked;
  if (!top || (*top)["a5"] != "5") v.fail("FLambda a5 at lambda=1 should be exactly 5");

  v.summary = "extremal attainment: " + std::to_string(checked) + " exact equalities checked, " +
              std::to_string(v.failures.size()) + " failed";
  return v;
}

// 5. Coefficient conjecture.
Verdict conjecture() {
  Verdict v;
  Stopwatch clock;
  ucv::SearchConfig cfg;
  cfg.threads = worker_threads();
  int scans = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Rational lam : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      const auto c = ucv::conjecture_scan(n, lam, cfg);
      ++scans;
      const std::string tag = "n=" + std::to_string(n) + " lambda=" + ucv::to_display_string(lam);
      if (c.status == CertificateStatus::Fail)
        v.fail(tag + ": counterexample candidate |a_n| = " + fmt(c.searched_value) + " > " + fmt(*c.closed_form));
      else if (n <= 4 && *c.gap > kConjectureGapTol)
        v.fail(tag + ": gap " + fmt(*c.gap) + " > " + fmt(kConjectureGapTol));
    }
  }
  const double t = clock.seconds();
  if (t >= 600.0) v.fail("runtime " + fmt(t) + " s >= 600 s");
  v.summary = "conjecture scan: " + std::to_string(scans) + " scans, " + std::to_string(v.failures.size()) +
              " failed, " + fmt(t) + " s";
  return v;
}

// 6. Root gate against an exact Schur-Cohn count.
Verdict root_gate() {
  Verdict v;
  std::mt19937_64 rng(6);
  const Rational inner(999999, 1000000);
  const Rational outer(1000001, 1000000);
  int compared = 0;
  int skipped = 0;
  while (compared < 1000) {
    // half uniform coefficients, half with every root in the annulus 0.9 < |z| < 1.1
    const auto p = compared % 2 == 0 ? gen::unit_polynomial(rng, 6, 2.0) : gen::polynomial_near_circle(rng, 6, 0.9, 1.1);
    const std::vector<Rational> exact(p.begin(), p.end());
    const auto lo = oracle::schur_cohn_inside_radius(exact, inner);
    const auto hi = oracle::schur_cohn_inside_radius(exact, outer);
    if (!lo || !hi || *lo != *hi) {
      ++skipped;
      continue;
    }
    ++compared;
    const ucv::UnitPolynomial poly(p);
    const bool gate = ucv::nonvanishing_in_open_disk(poly);
    if (gate != (*lo == 0) || (ucv::min_root_modulus(poly) < 1.0) != (*lo > 0)) {
      std::ostringstream ss;
      ss << "polynomial";
      for (double c : p) ss << ' ' << c;
      ss << ": exact count " << *lo << ", gate " << gate;
      v.fail(ss.str());
    }
  }
  for (double lam : {0.25, 0.5, 1.0}) {
    if (!ucv::nonvanishing_in_open_disk(ucv::UnitPolynomial({1.0, 1.0 + lam, lam})))
      v.fail("(1+z)(1+" + fmt(lam) + "z) rejected");
  }
  if (!ucv::nonvanishing_in_open_disk(ucv::UnitPolynomial({1.0, 2.0, 1.0}))) v.fail("(1+z)^2 rejected");
  v.summary = "root gate vs Schur-Cohn: " + std::to_string(compared) + " polynomials compared (" +
              std::to_string(skipped) + " in the boundary band skipped), " + std::to_string(v.failures.size()) +
              " disagreements";
  return v;
}

// 7. Thread count does not change verify output.
Verdict determinism() {
  Verdict v;
  const std::vector<std::string> args = {"verify", "--grid", "0.25,0.5,1.0", "--format", "csv"};
  auto run_with = [&](const char* threads) {
    ::setenv("UCV_THREADS", threads, 1);
    std::ostringstream out;
    std::ostringstream err;
    ucv::cli::run(args, out, err);
    ::unsetenv("UCV_THREADS");
    return out.str();
  };
  const std::string one = run_with("1");
  const std::string eight = run_with("8");
  if (one != eight) v.fail("CSV differs between UCV_THREADS=1 and UCV_THREADS=8");
  if (one.empty()) v.fail("verify produced no output");
  v.summary = "determinism: UCV_THREADS=1 vs 8, " + std::to_string(one.size()) + " bytes of CSV " +
              (one == eight ? "identical" : "differ");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria = {exact_identities, certify_at_one, certify_across_lambda,
                                                          extremal_attainment, conjecture, root_gate, determinism};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const int k = std::atoi(argv[++i]);
      if (k < 1 || k > static_cast<int>(criteria.size())) {
        std::cerr << "unknown criterion " << argv[i] << '\n';
        return 64;
      }
      selected.push_back(k);
    } else {
      std::cerr << "usage: acceptance [--criterion K]...\n";
      return 64;
    }
  }
  if (selected.empty())
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);

  bool all = true;
  for (const int k : selected) {
    const Verdict v = criteria[k - 1]();
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << v.summary << '\n';
    for (const auto& f : v.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
