#pragma once

#include <cstddef>
#include <vector>

namespace ppwass::matching {

// Dense nonnegative cost matrix, row major. Entries are validated to be
// finite and >= 0 when a solver is invoked.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static CostMatrix from_rows(const std::vector<std::vector<double>>& rows);

  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void validate() const;  // throws std::invalid_argument on bad entries

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

struct AssignmentResult {
  std::vector<std::size_t> assignment;  // row i -> column assignment[i]
  double cost = 0.0;
};

// Minimum-total-cost perfect assignment on a square matrix, by shortest
// augmenting paths with dual potentials. Exact; O(n^3).
AssignmentResult min_sum_assignment(const CostMatrix& c);

// Minimizes the maximum assigned entry on a square matrix: binary search
// over the distinct entries with a bipartite-matching feasibility test.
AssignmentResult min_bottleneck_assignment(const CostMatrix& c);

// Minimum-cost injection of the n rows into m >= n columns (distinct
// columns). Coincides with min_sum_assignment when n = m.
AssignmentResult min_sum_injection(const CostMatrix& c);

enum class AssignMode { Sum, Bottleneck };

// Exhaustive reference over all n! permutations; refuses n > 8.
double brute_force_assignment(const CostMatrix& c, AssignMode mode);

}  // namespace ppwass::matching
