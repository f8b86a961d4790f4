// Approximate engine: dynamic program over machine-load vectors with state
// trimming.
//
// States are keyed by the buckets of machines 0..N-2; within a key only the
// state with the best load on machine N-1 survives (smallest for C_max,
// largest for C_min). By induction, after t jobs every exact partial
// schedule s has a surviving r with r_m <= s_m + t*u (C_max) or
// r_m >= s_m - t*u (C_min) on every machine when buckets have width u.
//
// Buckets are additive, u = delta * L / K for C_max with L a lower bound on
// the optimum, and u = delta * L / ((1 + delta) K) for C_min with L the cover
// of a greedy schedule. When that greedy cover is 0 there is no usable scale
// and a geometric grid b_{k+1} <= (1 + g) b_k with (1 + g)^K <= 1 + delta
// takes over, giving the same factor multiplicatively.
//
// C_max prunes states with a load above the best heuristic makespan H: if a
// representative of an optimal schedule is pruned then H < OPT + K*u, so the
// heuristic schedule is itself within the factor. C_min caps loads at an
// upper bound on the optimum, which leaves the optimum unchanged.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <optional>
#include <unordered_map>

#include "integer_problem.hpp"
#include "mms/error.hpp"

namespace mms::sched::detail {

namespace {

inline std::size_t low_bits(std::int64_t x) { return static_cast<std::size_t>(x); }

inline std::size_t low_bits(const mpz_class& x) {
  const mpz_srcptr p = x.get_mpz_t();
  return mpz_size(p) > 0 ? mpz_getlimbn(p, 0) : 0;
}

template <class Load>
struct LoadVectorHash {
  std::size_t operator()(const std::vector<Load>& v) const noexcept {
    std::size_t h = v.size();
    for (const Load& x : v) h ^= low_bits(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <class Load>
Load to_load(const mpz_class& x) {
  if constexpr (std::is_same_v<Load, mpz_class>) {
    return x;
  } else {
    return static_cast<Load>(x.get_si());
  }
}

template <class Load>
struct State {
  std::vector<Load> loads;
  std::uint32_t parent = 0;
  std::uint32_t machine = 0;
};

Rational grid_step(const Rational& delta, std::size_t jobs) {
  Rational step = delta / Rational(static_cast<long>(2 * jobs));
  const Rational limit = Rational(1) + delta;
  while (pow(Rational(1) + step, static_cast<unsigned>(jobs)) > limit) {
    step /= 2;
  }
  return step;
}

class GeometricGrid {
 public:
  GeometricGrid(const Rational& step, const mpz_class& max_load) {
    const mpz_class num = step.numerator();
    const mpz_class den = step.denominator();
    bounds_.push_back(1);
    while (bounds_.back() <= max_load) {
      const mpz_class& b = bounds_.back();
      mpz_class next = (b * (num + den)) / den;  // floor(b * (1 + step))
      if (next <= b) next = b + 1;
      bounds_.push_back(next);
    }
  }

  mpz_class bucket(const mpz_class& load) const {
    if (load == 0) return 0;
    const auto it = std::upper_bound(bounds_.begin(), bounds_.end(), load);
    return mpz_class(static_cast<unsigned long>(it - bounds_.begin()));
  }

 private:
  std::vector<mpz_class> bounds_;
};

// floor(numerator / denominator), at least 1.
mpz_class unit_width(const mpz_class& numerator, const mpz_class& denominator) {
  mpz_class u = numerator / denominator;
  return u < 1 ? mpz_class(1) : u;
}

struct Heuristic {
  std::vector<std::size_t> assignment;
  mpz_class value;
};

Heuristic evaluate(const IntegerProblem& p, std::vector<std::size_t> assignment) {
  std::vector<mpz_class> loads(p.n_machines, 0);
  for (std::size_t j : p.active_jobs) loads[assignment[j]] += p.time[assignment[j]][j];
  const bool makespan = p.objective == Objective::kMinimizeMakespan;
  mpz_class value = makespan ? *std::max_element(loads.begin(), loads.end())
                             : *std::min_element(loads.begin(), loads.end());
  return {std::move(assignment), std::move(value)};
}

// Earliest-completion greedy for C_max; least-loaded useful machine for C_min.
Heuristic greedy(const IntegerProblem& p) {
  const std::size_t n = p.n_machines;
  const bool makespan = p.objective == Objective::kMinimizeMakespan;
  std::vector<std::size_t> assignment(p.n_jobs, 0);
  std::vector<mpz_class> loads(n, 0);
  for (std::size_t j : p.active_jobs) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (makespan) {
        if (pick == n || loads[i] + p.time[i][j] < loads[pick] + p.time[pick][j]) pick = i;
      } else if (p.time[i][j] != 0 && (pick == n || loads[i] < loads[pick])) {
        pick = i;
      }
    }
    loads[pick] += p.time[pick][j];
    assignment[j] = pick;
  }
  return evaluate(p, std::move(assignment));
}

// Every job on a machine where it is fastest.
Heuristic fastest_machine(const IntegerProblem& p) {
  std::vector<std::size_t> assignment(p.n_jobs, 0);
  for (std::size_t j : p.active_jobs) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < p.n_machines; ++i) {
      if (p.time[i][j] < p.time[pick][j]) pick = i;
    }
    assignment[j] = pick;
  }
  return evaluate(p, std::move(assignment));
}

// Loads are machine-word integers when every sum fits, GMP integers otherwise.
template <class Load>
class TrimmedDp {
 public:
  TrimmedDp(const IntegerProblem& p, const Budget& budget) : p_(p), budget_(budget) {
    time_.resize(p.n_machines);
    for (std::size_t i = 0; i < p.n_machines; ++i) {
      for (const mpz_class& t : p.time[i]) time_[i].push_back(to_load<Load>(t));
    }
  }

  // Returns the assignment of the best surviving final state, or nullopt
  // when every path was pruned. `limit` prunes (C_max) or caps (C_min).
  template <class BucketFn>
  std::optional<std::vector<std::size_t>> run(const BucketFn& bucket, const Load& limit) {
    const std::size_t n = p_.n_machines;
    const std::vector<std::size_t>& jobs = p_.active_jobs;
    const bool makespan = p_.objective == Objective::kMinimizeMakespan;

    std::vector<std::vector<State<Load>>> layers(jobs.size() + 1);
    layers[0].push_back(State<Load>{std::vector<Load>(n, Load(0)), 0, 0});
    std::uint64_t total_states = 1;

    for (std::size_t t = 0; t < jobs.size(); ++t) {
      const std::size_t job = jobs[t];
      std::unordered_map<std::vector<Load>, std::uint32_t, LoadVectorHash<Load>> seen;
      std::vector<State<Load>>& next = layers[t + 1];
      const std::vector<State<Load>>& current = layers[t];
      std::vector<Load> key(n - 1);
      for (std::uint32_t s = 0; s < current.size(); ++s) {
        for (std::uint32_t i = 0; i < n; ++i) {
          Load load = current[s].loads[i] + time_[i][job];
          if (load > limit) {
            if (makespan) continue;
            load = limit;
          }
          for (std::size_t m = 0; m + 1 < n; ++m) {
            key[m] = bucket(m == i ? load : current[s].loads[m]);
          }
          const auto [it, inserted] =
              seen.try_emplace(key, static_cast<std::uint32_t>(next.size()));
          if (inserted) {
            next.push_back(State<Load>{current[s].loads, s, i});
            next.back().loads[i] = load;
            if (++total_states > budget_.max_states) {
              throw Error(ErrorCode::kBudgetExceeded,
                          "approximate dynamic program exceeded " +
                              std::to_string(budget_.max_states) + " states");
            }
            continue;
          }
          State<Load>& kept = next[it->second];
          const Load& mine = i + 1 == n ? load : current[s].loads[n - 1];
          if (makespan ? mine < kept.loads[n - 1] : mine > kept.loads[n - 1]) {
            kept.loads = current[s].loads;
            kept.loads[i] = load;
            kept.parent = s;
            kept.machine = i;
          }
        }
      }
    }

    const std::vector<State<Load>>& last = layers.back();
    if (last.empty()) return std::nullopt;
    std::size_t best = 0;
    Load best_value{};
    for (std::size_t s = 0; s < last.size(); ++s) {
      const auto& loads = last[s].loads;
      const Load value = makespan ? *std::max_element(loads.begin(), loads.end())
                                  : *std::min_element(loads.begin(), loads.end());
      if (s == 0 || (makespan ? value < best_value : value > best_value)) {
        best = s;
        best_value = value;
      }
    }
    std::vector<std::size_t> assignment(p_.n_jobs, 0);
    std::size_t s = best;
    for (std::size_t t = jobs.size(); t-- > 0;) {
      const State<Load>& state = layers[t + 1][s];
      assignment[jobs[t]] = state.machine;
      s = state.parent;
    }
    return assignment;
  }

 private:
  const IntegerProblem& p_;
  const Budget& budget_;
  std::vector<std::vector<Load>> time_;
};

// Additive buckets of width u, or the geometric grid when u is absent.
template <class Load>
std::optional<std::vector<std::size_t>> run_dp(const IntegerProblem& p, const Budget& budget,
                                               const std::optional<mpz_class>& u,
                                               const GeometricGrid* grid,
                                               const mpz_class& limit) {
  TrimmedDp<Load> dp(p, budget);
  if (u) {
    const Load width = to_load<Load>(*u);
    return dp.run([&width](const Load& load) { return Load(load / width); }, to_load<Load>(limit));
  }
  return dp.run(
      [grid](const Load& load) {
        if constexpr (std::is_same_v<Load, mpz_class>) {
          return grid->bucket(load);
        } else {
          return to_load<Load>(grid->bucket(mpz_class(static_cast<long>(load))));
        }
      },
      to_load<Load>(limit));
}

std::optional<std::vector<std::size_t>> dispatch_dp(const IntegerProblem& p,
                                                    const Budget& budget,
                                                    const std::optional<mpz_class>& u,
                                                    const GeometricGrid* grid,
                                                    const mpz_class& limit) {
  // No load exceeds the larger of the limit and the largest row sum.
  mpz_class largest = limit;
  for (const auto& row : p.time) {
    mpz_class sum = 0;
    for (std::size_t j : p.active_jobs) sum += row[j];
    largest = std::max(largest, sum);
  }
  if (largest < mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    return run_dp<std::int64_t>(p, budget, u, grid, limit);
  }
  return run_dp<mpz_class>(p, budget, u, grid, limit);
}

}  // namespace

std::vector<std::size_t> solve_approx(const IntegerProblem& p,
                                      const Rational& delta,
                                      const Budget& budget) {
  const std::size_t n = p.n_machines;
  const std::vector<std::size_t>& jobs = p.active_jobs;
  const bool makespan = p.objective == Objective::kMinimizeMakespan;
  if (n == 1 || jobs.empty() || (!makespan && jobs.size() < n)) {
    return std::vector<std::size_t>(p.n_jobs, 0);
  }
  const mpz_class k(static_cast<unsigned long>(jobs.size()));
  const mpz_class dnum = delta.numerator();
  const mpz_class dden = delta.denominator();

  if (makespan) {
    // max(sum_j min_i p_ij / N, max_j min_i p_ij) <= OPT.
    mpz_class min_sum = 0, max_min = 0;
    for (std::size_t j : jobs) {
      mpz_class lo = p.time[0][j];
      for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, p.time[i][j]);
      min_sum += lo;
      max_min = std::max(max_min, lo);
    }
    const mpz_class lower = std::max(mpz_class(min_sum / static_cast<unsigned long>(n)), max_min);
    Heuristic h = greedy(p);
    Heuristic f = fastest_machine(p);
    if (f.value < h.value) h = std::move(f);
    if (h.value == lower) return h.assignment;

    const mpz_class u = unit_width(dnum * lower, dden * k);
    const auto result = dispatch_dp(p, budget, u, nullptr, h.value);
    if (!result) return h.assignment;
    const Heuristic found = evaluate(p, *result);
    return found.value <= h.value ? found.assignment : h.assignment;
  }

  // min(min_i sum_j p_ij, sum_j max_i p_ij / N) >= OPT.
  mpz_class upper;
  mpz_class max_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row = 0;
    for (std::size_t j : jobs) row += p.time[i][j];
    if (i == 0 || row < upper) upper = row;
  }
  for (std::size_t j : jobs) {
    mpz_class hi = 0;
    for (std::size_t i = 0; i < n; ++i) hi = std::max(hi, p.time[i][j]);
    max_sum += hi;
  }
  upper = std::min(upper, mpz_class(max_sum / static_cast<unsigned long>(n)));
  const Heuristic h = greedy(p);
  if (h.value == upper) return h.assignment;

  std::optional<std::vector<std::size_t>> result;
  if (h.value > 0) {
    const mpz_class u = unit_width(dnum * h.value, (dnum + dden) * k);
    result = dispatch_dp(p, budget, u, nullptr, upper);
  } else {
    const GeometricGrid grid(grid_step(delta, jobs.size()), upper);
    result = dispatch_dp(p, budget, std::nullopt, &grid, upper);
  }
  if (!result) return h.assignment;
  const Heuristic found = evaluate(p, *result);
  return found.value >= h.value ? found.assignment : h.assignment;
}

}  // namespace mms::sched::detail
