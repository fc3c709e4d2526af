#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "covsum/error.hpp"
#include "covsum/linalg.hpp"

namespace covsum {

// Budgeted concept-coverage instance. The matrix holds either the binary
// co-occurrence values or a completed matrix in [0,1]; the objective is
// sum_i w_i * min(1, sum_{j chosen} matrix(i,j)) subject to the word budget.
struct CoverageInstance {
  std::vector<double> weights;  // w, size N
  Matrix matrix;                // N x M
  std::vector<int> lengths;     // l, size M
  int budget = 0;               // L words
};

struct Selection {
  std::vector<int> chosen;        // sentence indices, ascending
  double objective = 0.0;
  std::vector<double> z_values;   // z_i = min(1, sum over chosen)
  bool optimal = false;
};

enum class SolveMode { exact, greedy };

inline void validate_instance(const CoverageInstance& inst) {
  const int n = inst.matrix.rows();
  const int m = inst.matrix.cols();
  if (static_cast<int>(inst.weights.size()) != n)
    throw ValidationError("solver: weights size does not match matrix rows");
  if (static_cast<int>(inst.lengths.size()) != m)
    throw ValidationError("solver: lengths size does not match matrix cols");
  for (double w : inst.weights)
    if (!(w >= 0.0)) throw ValidationError("solver: weights must be >= 0");
  for (double v : inst.matrix.data())
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("solver: matrix entries must be in [0,1]");
  for (int l : inst.lengths)
    if (l <= 0) throw ValidationError("solver: sentence lengths must be > 0");
  if (inst.budget < 0) throw ValidationError("solver: budget must be >= 0");
}

/// Eliminates the concept variables for a fixed sentence set: with
/// nonnegative weights the maximizing z is z_i = min(1, sum_j A_ij y_j).
/// Returns z and the objective, both accumulated in index order so equal
/// selections always produce bit-identical values.
inline std::pair<std::vector<double>, double> reduce_z(const CoverageInstance& inst,
                                                       const std::vector<int>& chosen) {
  const int n = inst.matrix.rows();
  std::vector<double> z(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double cover = 0.0;
    for (int j : chosen) {
      if (j < 0 || j >= inst.matrix.cols()) throw ValidationError("reduce_z: index out of bounds");
      cover += inst.matrix(i, j);
    }
    z[i] = std::min(1.0, cover);
  }
  double objective = 0.0;
  for (int i = 0; i < n; ++i) objective += inst.weights[i] * z[i];
  return {std::move(z), objective};
}

namespace detail {

struct SparseColumn {
  std::vector<int> index;
  std::vector<double> value;
};

inline bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class BranchAndBound {
 public:
  BranchAndBound(const CoverageInstance& inst, std::uint64_t node_limit)
      : inst_(inst), node_limit_(node_limit) {
    const int n = inst.matrix.rows();
    const int m = inst.matrix.cols();
    columns_.resize(m);
    standalone_.assign(m, 0.0);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) {
        const double v = inst.matrix(i, j);
        if (v > 0.0) {
          columns_[j].index.push_back(i);
          columns_[j].value.push_back(v);
          standalone_[j] += inst.weights[i] * v;
        }
      }
    }
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return standalone_[a] * inst_.lengths[b] > standalone_[b] * inst_.lengths[a];
    });
    cover_.assign(n, 0.0);
  }

  // Seeds the incumbent; obj must come from reduce_z.
  void seed(const std::vector<int>& set, double obj) {
    best_set_ = set;
    best_obj_ = obj;
  }

  bool run() {
    dfs(0, 0.0, 0);
    return !aborted_;
  }

  const std::vector<int>& best_set() const { return best_set_; }
  double best_objective() const { return best_obj_; }

 private:
  double marginal_gain(int j) const {
    const auto& col = columns_[j];
    double gain = 0.0;
    for (std::size_t k = 0; k < col.index.size(); ++k) {
      const double c = cover_[col.index[k]];
      gain += inst_.weights[col.index[k]] * (std::min(1.0, c + col.value[k]) - std::min(1.0, c));
    }
    return gain;
  }

  void apply(int j, double sign) {
    const auto& col = columns_[j];
    for (std::size_t k = 0; k < col.index.size(); ++k)
      cover_[col.index[k]] += sign * col.value[k];
  }

  // Fractional knapsack over the standalone gains of the not-yet-decided
  // sentences. Standalone gains dominate true marginal gains (the set
  // function is submodular), so this never underestimates.
  double upper_bound(std::size_t pos, int used_len) const {
    double bound = 0.0;
    int room = inst_.budget - used_len;
    for (std::size_t k = pos; k < order_.size() && room > 0; ++k) {
      const int j = order_[k];
      if (inst_.lengths[j] <= room) {
        bound += standalone_[j];
        room -= inst_.lengths[j];
      } else {
        bound += standalone_[j] * room / inst_.lengths[j];
        room = 0;
      }
    }
    return bound;
  }

  void consider_candidate(double approx_obj) {
    if (approx_obj < best_obj_ - 1e-9) return;
    std::vector<int> set = current_;
    std::sort(set.begin(), set.end());
    const double obj = reduce_z(inst_, set).second;
    if (obj > best_obj_ || (obj == best_obj_ && lex_less(set, best_set_))) {
      best_obj_ = obj;
      best_set_ = std::move(set);
    }
  }

  void dfs(std::size_t pos, double obj, int used_len) {
    if (aborted_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    if (pos == order_.size()) {
      consider_candidate(obj);
      return;
    }
    if (obj + upper_bound(pos, used_len) < best_obj_) return;

    const int j = order_[pos];
    if (used_len + inst_.lengths[j] <= inst_.budget) {
      const double gain = marginal_gain(j);
      apply(j, +1.0);
      current_.push_back(j);
      dfs(pos + 1, obj + gain, used_len + inst_.lengths[j]);
      current_.pop_back();
      apply(j, -1.0);
    }
    dfs(pos + 1, obj, used_len);
  }

  const CoverageInstance& inst_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<SparseColumn> columns_;
  std::vector<double> standalone_;
  std::vector<int> order_;
  std::vector<double> cover_;
  std::vector<int> current_;
  std::vector<int> best_set_;
  double best_obj_ = 0.0;
};

inline Selection greedy_solve(const CoverageInstance& inst) {
  const int n = inst.matrix.rows();
  const int m = inst.matrix.cols();
  std::vector<double> cover(n, 0.0);
  std::vector<bool> taken(m, false);
  std::vector<int> chosen;
  int used = 0;
  while (true) {
    int pick = -1;
    double pick_gain = 0.0;
    for (int j = 0; j < m; ++j) {
      if (taken[j] || used + inst.lengths[j] > inst.budget) continue;
      double gain = 0.0;
      for (int i = 0; i < n; ++i) {
        const double v = inst.matrix(i, j);
        if (v > 0.0) gain += inst.weights[i] * (std::min(1.0, cover[i] + v) - std::min(1.0, cover[i]));
      }
      if (gain <= 0.0) continue;
      if (pick < 0) {
        pick = j;
        pick_gain = gain;
        continue;
      }
      // rate first, then absolute gain, then index
      const double lhs = gain * inst.lengths[pick];
      const double rhs = pick_gain * inst.lengths[j];
      if (lhs > rhs || (lhs == rhs && gain > pick_gain)) {
        pick = j;
        pick_gain = gain;
      }
    }
    if (pick < 0) break;
    taken[pick] = true;
    chosen.push_back(pick);
    used += inst.lengths[pick];
    for (int i = 0; i < n; ++i) cover[i] += inst.matrix(i, pick);
  }
  std::sort(chosen.begin(), chosen.end());
  Selection sel;
  auto [z, obj] = reduce_z(inst, chosen);
  sel.chosen = std::move(chosen);
  sel.z_values = std::move(z);
  sel.objective = obj;
  sel.optimal = false;
  return sel;
}

}  // namespace detail

/// Solves the budgeted coverage program. Exact mode runs depth-first
/// branch and bound with a fractional-knapsack bound and returns the
/// global optimum (ties broken toward the lexicographically smallest
/// index set); if the node limit is exceeded the incumbent is returned
/// with optimal=false. Greedy mode adds the best gain-per-word sentence
/// until no feasible positive-gain sentence remains.
inline Selection solve(const CoverageInstance& inst, SolveMode mode,
                       std::uint64_t node_limit = 5'000'000) {
  validate_instance(inst);
  const int m = inst.matrix.cols();
  if (m == 0 || inst.matrix.rows() == 0) {
    Selection sel;
    sel.z_values.assign(inst.matrix.rows(), 0.0);
    sel.optimal = (mode == SolveMode::exact);
    return sel;
  }
  if (mode == SolveMode::greedy) return detail::greedy_solve(inst);

  // With no attainable gain every subset scores 0 and the lexicographic
  // tie-break lands on the empty set; skip the plateau walk.
  bool any_gain = false;
  for (int i = 0; i < inst.matrix.rows() && !any_gain; ++i) {
    if (inst.weights[i] == 0.0) continue;
    for (int j = 0; j < m; ++j) {
      if (inst.matrix(i, j) > 0.0) {
        any_gain = true;
        break;
      }
    }
  }
  if (!any_gain) {
    Selection sel;
    sel.z_values.assign(inst.matrix.rows(), 0.0);
    sel.optimal = true;
    return sel;
  }

  detail::BranchAndBound bnb(inst, node_limit);
  Selection seed = detail::greedy_solve(inst);
  bnb.seed(seed.chosen, seed.objective);
  const bool completed = bnb.run();

  Selection sel;
  sel.chosen = bnb.best_set();
  auto [z, obj] = reduce_z(inst, sel.chosen);
  sel.z_values = std::move(z);
  sel.objective = obj;
  sel.optimal = completed;
  return sel;
}

}  // namespace covsum
