#pragma once

#include <functional>
#include <vector>

namespace zigzag {

struct MinimizeOptions {
  double initial_step = 0.3;
  double size_tol = 1e-12;  // simplex characteristic size at convergence
  int max_iter = 20000;
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Nelder-Mead (GSL nmsimplex2) from one start.
MinimizeResult minimize_simplex(const Objective& f, const std::vector<double>& start, const MinimizeOptions& opts = {});

// Best of several deterministic starts; ties go to the earlier start.
MinimizeResult minimize_multistart(const Objective& f, const std::vector<std::vector<double>>& starts,
                                   const MinimizeOptions& opts = {});

}  // namespace zigzag
