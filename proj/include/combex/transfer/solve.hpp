#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "combex/integer.hpp"
#include "combex/transfer/gf.hpp"

namespace combex {

struct NonConvergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Series = std::vector<Integer>;  // coefficients 0..N

// Evaluates e with every symbol replaced by its series, truncated after x^max_degree.
Series evaluate(const Expr& e, const std::map<ClassLabel, Series>& values, std::size_t max_degree);

// Fixed-point iteration from the zero series, in Gauss-Seidel sweeps ordered so
// that each equation tends to follow the ones it reads. Throws NonConvergent if
// the series are not stable after max_degree + 2 + (number of equations) sweeps.
std::map<ClassLabel, Series> solve_series(const GfSystem& system, std::size_t max_degree);

}  // namespace combex
