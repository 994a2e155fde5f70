#include "zigzag/meanfield/minimize.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <memory>

#include "zigzag/common/error.hpp"

namespace zigzag {

namespace {

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  return f(x);
}

struct VecDel {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinDel {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

MinimizeResult minimize_simplex(const Objective& f, const std::vector<double>& start, const MinimizeOptions& opts) {
  static const bool handler_off = (gsl_set_error_handler_off(), true);
  (void)handler_off;
  const std::size_t n = start.size();
  if (n == 0) throw InvalidInput("empty start point");
  std::unique_ptr<gsl_vector, VecDel> x(gsl_vector_alloc(n)), step(gsl_vector_alloc(n));
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, start[i]);
  gsl_vector_set_all(step.get(), opts.initial_step);
  gsl_multimin_function fn{&trampoline, n, const_cast<Objective*>(&f)};
  std::unique_ptr<gsl_multimin_fminimizer, MinDel> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), step.get());

  MinimizeResult res;
  int status = GSL_CONTINUE;
  for (res.iterations = 0; res.iterations < opts.max_iter && status == GSL_CONTINUE; ++res.iterations) {
    if (gsl_multimin_fminimizer_iterate(m.get())) break;
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), opts.size_tol);
  }
  res.converged = status == GSL_SUCCESS;
  res.value = gsl_multimin_fminimizer_minimum(m.get());
  const gsl_vector* best = gsl_multimin_fminimizer_x(m.get());
  res.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.x[i] = gsl_vector_get(best, i);
  return res;
}

MinimizeResult minimize_multistart(const Objective& f, const std::vector<std::vector<double>>& starts,
                                   const MinimizeOptions& opts) {
  if (starts.empty()) throw InvalidInput("no start points");
  MinimizeResult best;
  bool have = false;
  for (const auto& s : starts) {
    auto r = minimize_simplex(f, s, opts);
    if (!have || r.value < best.value) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

}  // namespace zigzag
