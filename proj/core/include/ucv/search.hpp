#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucv/functional.hpp"
#include "ucv/rational.hpp"
#include "ucv/rootcheck.hpp"

namespace ucv {

// A certificate fails when the searched extremum beats the published bound by
// more than kFailSlack; a gap wider than kSharpnessWarn means the grid did not
// reach the bound.
inline constexpr double kFailSlack = 1e-7;
inline constexpr double kSharpnessWarn = 5e-3;

struct SearchConfig {
  int dims = 4;
  Rational grid_step{1, 50};
  /// Each round shrinks the step by 10 around the incumbent.
  int refine_rounds = 3;
  double root_tol = kDefaultRootTol;
  /// Defaults to 1 + lambda.
  std::optional<Rational> b1_max;
  /// Worker threads for grid enumeration and sweeps. Output does not depend on it.
  int threads = 1;
};

/// Throws std::invalid_argument when dims < 1, grid_step <= 0,
/// refine_rounds < 0, or threads < 1.
void check_config(const SearchConfig& cfg);

/// Feasible lattice points in lexicographic order. Coordinates are integer
/// multiples of the grid step, so every point is an exact decimal.
class FeasibleSet {
 public:
  FeasibleSet(int dims, Rational step) : dims_(dims), step_(std::move(step)) {}

  int dims() const { return dims_; }
  const Rational& step() const { return step_; }
  std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dims_); }
  bool empty() const { return coords_.empty(); }

  std::span<const std::int64_t> indices(std::size_t i) const {
    return {indices_.data() + i * dims_, static_cast<std::size_t>(dims_)};
  }
  std::span<const double> coords(std::size_t i) const {
    return {coords_.data() + i * dims_, static_cast<std::size_t>(dims_)};
  }
  /// Exact b_1..b_dims of point i.
  std::vector<Rational> point(std::size_t i) const;

  void push_back(std::span<const std::int64_t> idx, std::span<const double> coords);
  void append(const FeasibleSet& other);

 private:
  int dims_;
  Rational step_;
  std::vector<std::int64_t> indices_;
  std::vector<double> coords_;
};

/// Grid points with b_1 in [0, b1_max], (b_2..b_dims) in the weighted simplex
/// sum (n-1) b_n <= lambda, filtered by the root gate.
FeasibleSet enumerate_feasible(const Rational& lambda, const SearchConfig& cfg);

enum class CertificateStatus { Pass, Fail, NoClosedForm };

std::string_view to_string(CertificateStatus s);

struct BoundCertificate {
  Rational lambda;
  std::string functional;
  Direction direction = Direction::Max;
  /// Exact value of the functional at argmax, rounded to double.
  double searched_value = 0.0;
  std::vector<Rational> argmax;
  std::optional<double> closed_form;
  /// closed_form - searched for max, searched - closed_form for min; negative
  /// means the bound was beaten.
  std::optional<double> gap;
  CertificateStatus status = CertificateStatus::NoClosedForm;
  /// Feasible grid points whose value beats closed_form by more than kFailSlack.
  std::size_t violations = 0;

  bool sharpness_warning() const { return gap && *gap > kSharpnessWarn; }
};

/// Grid sweep, then refine_rounds of shrinking single- and pair-coordinate
/// sweeps around the incumbent. Ties go to the lexicographically smallest b.
/// The reported argmax is re-validated as an exact class member.
BoundCertificate optimize(const Functional& fn, const Rational& lambda, Direction direction,
                          const SearchConfig& cfg);

/// One certificate per (lambda, named functional, direction), in grid order,
/// then kNamedFunctionals order, max before min. Pairs without a published
/// bound are still searched and carry NoClosedForm.
std::vector<BoundCertificate> verify_bounds(std::span<const Rational> lambda_grid, const SearchConfig& cfg);

/// Maximizes |a_n| over b_1..b_max(n-1, 2) and compares it with
/// 1 + lambda + ... + lambda^(n-1). A failing scan is repeated at half the
/// step with one more refinement round before it is reported.
BoundCertificate conjecture_scan(int n, const Rational& lambda, const SearchConfig& cfg);

nlohmann::json to_json(const BoundCertificate& c);
nlohmann::json to_json(std::span<const BoundCertificate> certs);
/// Header lambda,functional,direction,searched,closed_form,gap,status,argmax;
/// argmax coordinates are joined with ';'.
std::string to_csv(std::span<const BoundCertificate> certs);

}  // namespace ucv
