#include "ucv/search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ucv/model.hpp"

namespace ucv {
namespace {


std::int64_t checked_int64(const Integer& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() / 16 || v < 0) {
    throw std::invalid_argument(std::string(what) + " does not fit the search lattice");
  }
  return v.convert_to<std::int64_t>();
}

std::int64_t floor_div(const Rational& a, const Rational& b) {
  const Rational q = a / b;
  if (q < 0) return -1;
  return checked_int64(numerator(q) / denominator(q), "lattice bound");
}

// Integer lattice with spacing `unit` = grid_step / 10^refine_rounds. Grid
// points sit on every `scale`-th node; refinement walks the finer nodes.
struct Lattice {
  int dims = 0;
  Rational unit;
  std::int64_t unit_num = 1;
  std::int64_t unit_den = 1;
  std::int64_t scale = 1;
  std::int64_t budget = 0;    // floor(lambda / unit)
  std::int64_t b1_limit = 0;  // floor(b1_max / unit)
  double root_tol = kDefaultRootTol;

  double coord(std::int64_t idx) const {
    return static_cast<double>(idx * unit_num) / static_cast<double>(unit_den);
  }

  bool feasible(std::span<const std::int64_t> idx, std::span<double> coords) const {
    if (idx[0] < 0 || idx[0] > b1_limit) return false;
    std::int64_t weighted = 0;
    for (int i = 1; i < dims; ++i) {
      if (idx[i] < 0) return false;
      weighted += i * idx[i];
    }
    if (weighted > budget) return false;
    for (int i = 0; i < dims; ++i) coords[i] = coord(idx[i]);
    return nonvanishing_in_open_disk(UnitPolynomial::from_tail(coords), root_tol);
  }
};

Lattice make_lattice(const Rational& lambda, const SearchConfig& cfg, int dims) {
  check_config(cfg);
  const Rational b1_max = cfg.b1_max.value_or(1 + lambda);
  if (b1_max < 0) throw std::invalid_argument("b1_max must be nonnegative");

  Lattice lat;
  lat.dims = dims;
  std::int64_t scale = 1;
  for (int r = 0; r < cfg.refine_rounds; ++r) scale *= 10;
  lat.scale = scale;
  lat.unit = cfg.grid_step / scale;
  lat.unit_num = checked_int64(numerator(lat.unit), "grid step");
  lat.unit_den = checked_int64(denominator(lat.unit), "grid step");
  lat.budget = floor_div(lambda, lat.unit);
  lat.b1_limit = floor_div(b1_max, lat.unit);
  lat.root_tol = cfg.root_tol;
  return lat;
}

// Worker ranges over [0, count) in ascending, contiguous blocks.
std::vector<std::pair<std::size_t, std::size_t>> partition(std::size_t count, int threads) {
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t p = 0; p < parts; ++p) {
    ranges.emplace_back(count * p / parts, count * (p + 1) / parts);
  }
  return ranges;
}

template <class Fn>
void run_parallel(std::size_t parts, Fn&& fn) {
  if (parts <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) workers.emplace_back([&fn, p] { fn(p); });
  for (auto& w : workers) w.join();
}

// Coarse-grid enumeration of b_2..b_dims under the weighted budget, for one b_1.
void enumerate_tail(const Lattice& lat, std::vector<std::int64_t>& idx, int pos, std::int64_t remaining,
                    std::vector<double>& coords, FeasibleSet& out) {
  if (pos == lat.dims) {
    std::vector<std::int64_t> fine(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) fine[i] = idx[i] * lat.scale;
    if (lat.feasible(fine, coords)) out.push_back(idx, coords);
    return;
  }
  for (std::int64_t v = 0; v * pos <= remaining; ++v) {
    idx[pos] = v;
    enumerate_tail(lat, idx, pos + 1, remaining - v * pos, coords, out);
  }
  idx[pos] = 0;
}

FeasibleSet enumerate_on(const Lattice& lat, const Rational& step, std::int64_t coarse_b1, std::int64_t coarse_budget,
                         int threads) {
  const auto ranges = partition(static_cast<std::size_t>(coarse_b1 + 1), threads);
  std::vector<FeasibleSet> parts(ranges.size(), FeasibleSet(lat.dims, step));
  run_parallel(ranges.size(), [&](std::size_t p) {
    std::vector<std::int64_t> idx(lat.dims, 0);
    std::vector<double> coords(lat.dims);
    for (std::size_t b1 = ranges[p].first; b1 < ranges[p].second; ++b1) {
      idx[0] = static_cast<std::int64_t>(b1);
      enumerate_tail(lat, idx, 1, coarse_budget, coords, parts[p]);
    }
  });
  FeasibleSet all(lat.dims, step);
  for (const auto& part : parts) all.append(part);
  return all;
}

struct Objective {
  Functional fn;
  Direction direction;
  std::optional<double> bound;

  double signed_value(std::span<const double> b) const {
    const double v = fn.evaluate(b);
    return direction == Direction::Max ? v : -v;
  }
  bool violates(double value) const {
    if (!bound) return false;
    return direction == Direction::Max ? value > *bound + kFailSlack : value < *bound - kFailSlack;
  }
};

struct Incumbent {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = 0;
  std::size_t violations = 0;
};

// Best grid point per objective; ties keep the earlier (lexicographically
// smaller) point, both inside a block and across the ascending merge.
std::vector<Incumbent> sweep(const FeasibleSet& grid, const std::vector<Objective>& objectives, int threads) {
  const auto ranges = partition(grid.size(), threads);
  std::vector<std::vector<Incumbent>> partial(ranges.size(), std::vector<Incumbent>(objectives.size()));
  run_parallel(ranges.size(), [&](std::size_t p) {
    auto& best = partial[p];
    for (std::size_t i = ranges[p].first; i < ranges[p].second; ++i) {
      const auto b = grid.coords(i);
      for (std::size_t k = 0; k < objectives.size(); ++k) {
        const double raw = objectives[k].fn.evaluate(b);
        const double v = objectives[k].direction == Direction::Max ? raw : -raw;
        if (v > best[k].value) {
          best[k].value = v;
          best[k].index = i;
        }
        if (objectives[k].violates(raw)) ++best[k].violations;
      }
    }
  });

  std::vector<Incumbent> merged(objectives.size());
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < objectives.size(); ++k) {
      if (part[k].value > merged[k].value) {
        merged[k].value = part[k].value;
        merged[k].index = part[k].index;
      }
      merged[k].violations += part[k].violations;
    }
  }
  return merged;
}

// Shrinking single-, pair- and short triple-coordinate sweeps. Each pass moves
// to the best neighbour (ties to the lexicographically smaller point) until
// nothing improves. Triples let the walk slide along a corner where both the
// weighted budget and the root gate are tight.
std::vector<std::int64_t> refine(const Lattice& lat, const Objective& obj, std::vector<std::int64_t> inc,
                                 int rounds) {
  constexpr int kReach = 10;
  constexpr int kTripleReach = 3;
  constexpr int kMaxPasses = 64;

  std::vector<double> coords(lat.dims);
  if (!lat.feasible(inc, coords)) throw std::logic_error("refine: incumbent is infeasible");
  double inc_value = obj.signed_value(coords);

  std::int64_t step = lat.scale;
  for (int round = 0; round < rounds; ++round) {
    step /= 10;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
      std::vector<std::int64_t> best = inc;
      double best_value = inc_value;
      std::vector<std::int64_t> cand(lat.dims);

      auto consider = [&]() {
        if (!lat.feasible(cand, coords)) return;
        const double v = obj.signed_value(coords);
        if (v > best_value || (v == best_value && cand < best)) {
          best = cand;
          best_value = v;
        }
      };

      for (int i = 0; i < lat.dims; ++i) {
        for (int j = -kReach; j <= kReach; ++j) {
          if (j == 0) continue;
          cand = inc;
          cand[i] += j * step;
          consider();
        }
      }
      for (int i = 0; i < lat.dims; ++i) {
        for (int k = i + 1; k < lat.dims; ++k) {
          for (int ji = -kReach; ji <= kReach; ++ji) {
            if (ji == 0) continue;
            for (int jk = -kReach; jk <= kReach; ++jk) {
              if (jk == 0) continue;
              cand = inc;
              cand[i] += ji * step;
              cand[k] += jk * step;
              consider();
            }
          }
        }
      }
      for (int i = 0; i < lat.dims; ++i) {
        for (int k = i + 1; k < lat.dims; ++k) {
          for (int m = k + 1; m < lat.dims; ++m) {
            for (int ji = -kTripleReach; ji <= kTripleReach; ++ji) {
              for (int jk = -kTripleReach; jk <= kTripleReach; ++jk) {
                for (int jm = -kTripleReach; jm <= kTripleReach; ++jm) {
                  if (ji == 0 || jk == 0 || jm == 0) continue;
                  cand = inc;
                  cand[i] += ji * step;
                  cand[k] += jk * step;
                  cand[m] += jm * step;
                  consider();
                }
              }
            }
          }
        }
      }

      if (best == inc) break;
      inc = std::move(best);
      inc_value = best_value;
    }
  }
  return inc;
}

std::vector<BoundCertificate> certify(const std::vector<Objective>& objectives, const Rational& lambda,
                                      const SearchConfig& cfg, int dims) {
  const Lattice lat = make_lattice(lambda, cfg, dims);
  const std::int64_t coarse_budget = lat.budget / lat.scale;
  const std::int64_t coarse_b1 = lat.b1_limit / lat.scale;
  const FeasibleSet grid = enumerate_on(lat, cfg.grid_step, coarse_b1, coarse_budget, cfg.threads);
  if (grid.empty()) throw std::logic_error("feasible grid is empty");

  const auto incumbents = sweep(grid, objectives, cfg.threads);

  std::vector<BoundCertificate> certs;
  certs.reserve(objectives.size());
  for (std::size_t k = 0; k < objectives.size(); ++k) {
    const Objective& obj = objectives[k];
    std::vector<std::int64_t> start(dims);
    const auto coarse = grid.indices(incumbents[k].index);
    for (int i = 0; i < dims; ++i) start[i] = coarse[i] * lat.scale;
    const auto fine = refine(lat, obj, std::move(start), cfg.refine_rounds);

    BoundCertificate c;
    c.lambda = lambda;
    c.functional = obj.fn.name();
    c.direction = obj.direction;
    c.argmax.reserve(dims);
    for (int i = 0; i < dims; ++i) c.argmax.push_back(Rational(fine[i]) * lat.unit);

    try {
      (void)ClassMember::validate(lambda, c.argmax, cfg.root_tol);
    } catch (const NonMember& e) {
      throw std::logic_error(std::string("search incumbent failed exact validation: ") + e.what());
    }
    c.searched_value = to_double(obj.fn.evaluate(std::span<const Rational>(c.argmax)));
    c.closed_form = obj.bound;
    c.violations = incumbents[k].violations;
    if (obj.bound) {
      c.gap = obj.direction == Direction::Max ? *obj.bound - c.searched_value : c.searched_value - *obj.bound;
      c.status = (*c.gap < -kFailSlack || c.violations > 0) ? CertificateStatus::Fail : CertificateStatus::Pass;
    } else {
      c.status = CertificateStatus::NoClosedForm;
    }
    certs.push_back(std::move(c));
  }
  return certs;
}

}  // namespace

void check_config(const SearchConfig& cfg) {
  if (cfg.dims < 1) throw std::invalid_argument("dims must be at least 1");
  if (cfg.grid_step <= 0) throw std::invalid_argument("grid step must be positive");
  if (cfg.refine_rounds < 0 || cfg.refine_rounds > 12) throw std::invalid_argument("refine rounds must lie in [0, 12]");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (cfg.root_tol < 0) throw std::invalid_argument("root tolerance must be nonnegative");
}

std::vector<Rational> FeasibleSet::point(std::size_t i) const {
  std::vector<Rational> b;
  b.reserve(dims_);
  for (auto idx : indices(i)) b.push_back(Rational(idx) * step_);
  return b;
}

void FeasibleSet::push_back(std::span<const std::int64_t> idx, std::span<const double> coords) {
  indices_.insert(indices_.end(), idx.begin(), idx.end());
  coords_.insert(coords_.end(), coords.begin(), coords.end());
}

void FeasibleSet::append(const FeasibleSet& other) {
  indices_.insert(indices_.end(), other.indices_.begin(), other.indices_.end());
  coords_.insert(coords_.end(), other.coords_.begin(), other.coords_.end());
}

FeasibleSet enumerate_feasible(const Rational& lambda, const SearchConfig& cfg) {
  SearchConfig coarse = cfg;
  coarse.refine_rounds = 0;
  const Lattice lat = make_lattice(lambda, coarse, cfg.dims);
  return enumerate_on(lat, cfg.grid_step, lat.b1_limit, lat.budget, cfg.threads);
}

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Pass:
      return "PASS";
    case CertificateStatus::Fail:
      return "FAIL";
    case CertificateStatus::NoClosedForm:
      return "NO_CLOSED_FORM";
  }
  return "?";
}

BoundCertificate optimize(const Functional& fn, const Rational& lambda, Direction direction,
                          const SearchConfig& cfg) {
  if (lambda <= 0 || lambda > 1) throw std::invalid_argument("lambda must lie in (0, 1]");
  const std::vector<Objective> objectives{{fn, direction, closed_form_bound(fn, to_double(lambda), direction)}};
  return certify(objectives, lambda, cfg, cfg.dims).front();
}

std::vector<BoundCertificate> verify_bounds(std::span<const Rational> lambda_grid, const SearchConfig& cfg) {
  std::vector<BoundCertificate> out;
  for (const Rational& lambda : lambda_grid) {
    if (lambda <= 0 || lambda > 1) throw std::invalid_argument("lambda must lie in (0, 1]");
    const double l = to_double(lambda);
    std::vector<Objective> objectives;
    for (const Functional& fn : kNamedFunctionals) {
      for (Direction d : {Direction::Max, Direction::Min}) objectives.push_back({fn, d, closed_form_bound(fn, l, d)});
    }
    auto certs = certify(objectives, lambda, cfg, cfg.dims);
    std::move(certs.begin(), certs.end(), std::back_inserter(out));
  }
  return out;
}

BoundCertificate conjecture_scan(int n, const Rational& lambda, const SearchConfig& cfg) {
  if (n < 2 || n > Functional::kMaxCoefficientIndex) throw std::out_of_range("conjecture scan needs 2 <= n <= 8");
  if (lambda <= 0 || lambda > 1) throw std::invalid_argument("lambda must lie in (0, 1]");

  const Functional fn = Functional::coefficient_modulus(n);
  const std::vector<Objective> objectives{{fn, Direction::Max, closed_form_bound(fn, to_double(lambda), Direction::Max)}};
  const int dims = std::max(n - 1, 2);

  BoundCertificate cert = certify(objectives, lambda, cfg, dims).front();
  if (cert.status == CertificateStatus::Fail) {
    SearchConfig finer = cfg;
    finer.grid_step = cfg.grid_step / 2;
    finer.refine_rounds = cfg.refine_rounds + 1;
    cert = certify(objectives, lambda, finer, dims).front();
  }
  return cert;
}

}  // namespace ucv
