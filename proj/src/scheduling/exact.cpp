// Exact engine: two depth-first searches over job -> machine assignments.
//
// Phase 1 finds the optimal value. Jobs are branched in decreasing order of
// their largest processing time, machines in order of the resulting load, and
// subtrees are cut with load-sum bounds. Visited load vectors are memoized
// (sorted for identical machines, where they are interchangeable).
//
// Phase 2 walks jobs in index order and machines in index order, and returns
// the first complete assignment that reaches the phase-1 value. That is the
// lexicographically smallest optimal assignment.

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "integer_problem.hpp"
#include "mms/error.hpp"

namespace mms::sched::detail {

namespace {

constexpr std::size_t kMemoCap = 1'000'000;

using LoadSet = std::unordered_set<std::vector<mpz_class>, MpzVectorHash>;

mpz_class ceil_div(const mpz_class& a, std::size_t n) {
  mpz_class q;
  mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), n);
  return q;
}

mpz_class floor_div(const mpz_class& a, std::size_t n) {
  mpz_class q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), n);
  return q;
}

class ExactSearch {
 public:
  ExactSearch(const IntegerProblem& problem, const Budget& budget)
      : p_(problem), budget_(budget), n_(problem.n_machines) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> assignment(p_.n_jobs, 0);
    const std::size_t k = p_.active_jobs.size();
    const bool cover = p_.objective == Objective::kMaximizeCover;
    if (n_ == 1 || k == 0 || (cover && k < n_)) {
      // Every schedule is optimal; all-zero is the smallest vector.
      return assignment;
    }
    const mpz_class target = optimize();
    find_lex_smallest(target, assignment);
    return assignment;
  }

 private:
  void count_node() {
    if (++nodes_ > budget_.max_nodes) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "exact search exceeded " + std::to_string(budget_.max_nodes) +
                      " nodes; use an approximate mode");
    }
  }

  std::vector<mpz_class> memo_key() const {
    std::vector<mpz_class> key = loads_;
    if (p_.identical) std::sort(key.begin(), key.end());
    return key;
  }

  // Returns false when the state was seen before.
  bool remember(std::vector<LoadSet>& memo, std::size_t depth) {
    std::vector<mpz_class> key = memo_key();
    if (memo[depth].count(key) != 0) return false;
    if (memo_size_ < kMemoCap) {
      memo[depth].insert(std::move(key));
      ++memo_size_;
    }
    return true;
  }

  // ---- phase 1 -----------------------------------------------------------

  mpz_class optimize() {
    order_ = p_.active_jobs;
    std::vector<mpz_class> max_time(p_.n_jobs), min_time(p_.n_jobs);
    for (std::size_t j : order_) {
      max_time[j] = min_time[j] = p_.time[0][j];
      for (std::size_t i = 1; i < n_; ++i) {
        max_time[j] = std::max(max_time[j], p_.time[i][j]);
        min_time[j] = std::min(min_time[j], p_.time[i][j]);
      }
    }
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return max_time[a] > max_time[b];
    });

    const std::size_t k = order_.size();
    suffix_min_sum_.assign(k + 1, 0);
    suffix_max_min_.assign(k + 1, 0);
    suffix_max_sum_.assign(k + 1, 0);
    suffix_machine_.assign(n_, std::vector<mpz_class>(k + 1, 0));
    for (std::size_t t = k; t-- > 0;) {
      const std::size_t j = order_[t];
      suffix_min_sum_[t] = suffix_min_sum_[t + 1] + min_time[j];
      suffix_max_min_[t] = std::max(suffix_max_min_[t + 1], min_time[j]);
      suffix_max_sum_[t] = suffix_max_sum_[t + 1] + max_time[j];
      for (std::size_t i = 0; i < n_; ++i) {
        suffix_machine_[i][t] = suffix_machine_[i][t + 1] + p_.time[i][j];
      }
    }

    memo_.assign(k + 1, LoadSet{});
    memo_size_ = 0;
    loads_.assign(n_, 0);
    assigned_sum_ = 0;
    done_ = false;

    if (p_.objective == Objective::kMinimizeMakespan) {
      best_ = greedy_makespan();
      root_bound_ = std::max(ceil_div(suffix_min_sum_[0], n_), suffix_max_min_[0]);
      if (best_ > root_bound_) search_makespan(0, 0);
    } else {
      best_ = greedy_cover();
      root_bound_ = cover_bound(0);
      if (best_ < root_bound_) search_cover(0);
    }
    memo_.clear();
    return best_;
  }

  mpz_class greedy_makespan() const {
    std::vector<mpz_class> loads(n_, 0);
    for (std::size_t j : order_) {
      std::size_t pick = 0;
      for (std::size_t i = 1; i < n_; ++i) {
        if (loads[i] + p_.time[i][j] < loads[pick] + p_.time[pick][j]) pick = i;
      }
      loads[pick] += p_.time[pick][j];
    }
    return *std::max_element(loads.begin(), loads.end());
  }

  mpz_class greedy_cover() const {
    std::vector<mpz_class> loads(n_, 0);
    for (std::size_t j : order_) {
      std::size_t pick = n_;
      for (std::size_t i = 0; i < n_; ++i) {
        if (p_.time[i][j] == 0) continue;
        if (pick == n_ || loads[i] < loads[pick]) pick = i;
      }
      loads[pick] += p_.time[pick][j];
    }
    return *std::min_element(loads.begin(), loads.end());
  }

  mpz_class cover_bound(std::size_t t) const {
    mpz_class bound = floor_div(assigned_sum_ + suffix_max_sum_[t], n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const mpz_class reachable = loads_[i] + suffix_machine_[i][t];
      if (reachable < bound) bound = reachable;
    }
    return bound;
  }

  void search_makespan(std::size_t t, const mpz_class& current_max) {
    count_node();
    if (t == order_.size()) {
      best_ = current_max;
      done_ = best_ == root_bound_;
      return;
    }
    mpz_class bound = ceil_div(assigned_sum_ + suffix_min_sum_[t], n_);
    bound = std::max({bound, current_max, suffix_max_min_[t]});
    if (bound >= best_) return;
    if (!remember(memo_, t)) return;

    const std::size_t job = order_[t];
    std::vector<std::pair<mpz_class, std::size_t>> choices;
    choices.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      choices.emplace_back(loads_[i] + p_.time[i][job], i);
    }
    std::sort(choices.begin(), choices.end());
    for (std::size_t c = 0; c < choices.size(); ++c) {
      const auto& [new_load, i] = choices[c];
      if (new_load >= best_) break;
      if (p_.identical && c > 0 && choices[c - 1].first == new_load) continue;
      const mpz_class saved = loads_[i];
      loads_[i] = new_load;
      assigned_sum_ += p_.time[i][job];
      search_makespan(t + 1, std::max(current_max, new_load));
      assigned_sum_ -= p_.time[i][job];
      loads_[i] = saved;
      if (done_) return;
    }
  }

  void search_cover(std::size_t t) {
    count_node();
    if (t == order_.size()) {
      const mpz_class value = *std::min_element(loads_.begin(), loads_.end());
      if (value > best_) best_ = value;
      done_ = best_ == root_bound_;
      return;
    }
    if (cover_bound(t) <= best_) return;
    if (!remember(memo_, t)) return;

    const std::size_t job = order_[t];
    std::vector<std::pair<mpz_class, std::size_t>> choices;
    choices.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      // A job on a zero-time machine is wasted; some optimum never does that.
      if (p_.time[i][job] != 0) choices.emplace_back(loads_[i], i);
    }
    std::sort(choices.begin(), choices.end());
    for (std::size_t c = 0; c < choices.size(); ++c) {
      const std::size_t i = choices[c].second;
      if (p_.identical && c > 0 && choices[c - 1].first == choices[c].first) continue;
      loads_[i] += p_.time[i][job];
      assigned_sum_ += p_.time[i][job];
      search_cover(t + 1);
      assigned_sum_ -= p_.time[i][job];
      loads_[i] -= p_.time[i][job];
      if (done_) return;
    }
  }

  // ---- phase 2 -----------------------------------------------------------

  void find_lex_smallest(const mpz_class& target,
                         std::vector<std::size_t>& assignment) {
    jobs_ = p_.active_jobs;  // ascending
    const std::size_t k = jobs_.size();
    suffix_min_sum_.assign(k + 1, 0);
    suffix_max_sum_.assign(k + 1, 0);
    suffix_machine_.assign(n_, std::vector<mpz_class>(k + 1, 0));
    for (std::size_t t = k; t-- > 0;) {
      const std::size_t j = jobs_[t];
      mpz_class lo = p_.time[0][j], hi = p_.time[0][j];
      for (std::size_t i = 0; i < n_; ++i) {
        lo = std::min(lo, p_.time[i][j]);
        hi = std::max(hi, p_.time[i][j]);
        suffix_machine_[i][t] = suffix_machine_[i][t + 1] + p_.time[i][j];
      }
      suffix_min_sum_[t] = suffix_min_sum_[t + 1] + lo;
      suffix_max_sum_[t] = suffix_max_sum_[t + 1] + hi;
    }
    target_ = target;
    loads_.assign(n_, 0);
    failed_.assign(k + 1, LoadSet{});
    memo_size_ = 0;
    choice_.assign(k, 0);

    if (!feasible(0)) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "internal: no schedule reaches the optimal value");
    }
    for (std::size_t t = 0; t < k; ++t) assignment[jobs_[t]] = choice_[t];
  }

  bool feasible(std::size_t t) {
    count_node();
    const bool makespan = p_.objective == Objective::kMinimizeMakespan;
    if (makespan) {
      mpz_class capacity = 0;
      for (const mpz_class& load : loads_) capacity += target_ - load;
      if (capacity < suffix_min_sum_[t]) return false;
    } else {
      mpz_class deficit = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (loads_[i] + suffix_machine_[i][t] < target_) return false;
        if (loads_[i] < target_) deficit += target_ - loads_[i];
      }
      if (deficit > suffix_max_sum_[t]) return false;
    }
    if (t == jobs_.size()) return true;
    if (failed_[t].count(memo_key()) != 0) return false;

    const std::size_t job = jobs_[t];
    std::vector<mpz_class> tried;
    for (std::size_t i = 0; i < n_; ++i) {
      const mpz_class& time = p_.time[i][job];
      if (makespan && loads_[i] + time > target_) continue;
      if (p_.identical) {
        // Equal loads on identical machines lead to isomorphic subtrees.
        if (std::find(tried.begin(), tried.end(), loads_[i]) != tried.end()) continue;
        tried.push_back(loads_[i]);
      }
      loads_[i] += time;
      choice_[t] = i;
      if (feasible(t + 1)) return true;
      loads_[i] -= time;
    }
    if (memo_size_ < kMemoCap) {
      failed_[t].insert(memo_key());
      ++memo_size_;
    }
    return false;
  }

  const IntegerProblem& p_;
  const Budget& budget_;
  const std::size_t n_;
  std::uint64_t nodes_ = 0;

  std::vector<mpz_class> loads_;
  mpz_class assigned_sum_;
  std::vector<std::size_t> order_;
  std::vector<mpz_class> suffix_min_sum_;
  std::vector<mpz_class> suffix_max_min_;
  std::vector<mpz_class> suffix_max_sum_;
  std::vector<std::vector<mpz_class>> suffix_machine_;
  std::vector<LoadSet> memo_;
  std::size_t memo_size_ = 0;
  mpz_class best_;
  mpz_class root_bound_;
  bool done_ = false;

  std::vector<std::size_t> jobs_;
  std::vector<std::size_t> choice_;
  std::vector<LoadSet> failed_;
  mpz_class target_;
};

}  // namespace

std::vector<std::size_t> solve_exact(const IntegerProblem& problem,
                                     const Budget& budget) {
  return ExactSearch(problem, budget).run();
}

}  // namespace mms::sched::detail
