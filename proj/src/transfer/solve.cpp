#include "combex/transfer/solve.hpp"

#include <functional>
#include <set>

namespace combex {

namespace {

Series multiply(const Series& a, const Series& b, std::size_t max_degree) {
  Series out(max_degree + 1, 0);
  for (std::size_t i = 0; i <= max_degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= max_degree; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

void symbols_outside_shifts(const Expr& e, std::vector<ClassLabel>& out) {
  if (e.kind == Expr::Kind::Symbol) out.push_back(e.symbol);
  if (e.kind == Expr::Kind::Monomial) return;
  for (const auto& a : e.args) symbols_outside_shifts(a, out);
}

}  // namespace

Series evaluate(const Expr& e, const std::map<ClassLabel, Series>& values, std::size_t max_degree) {
  switch (e.kind) {
    case Expr::Kind::Symbol: return values.at(e.symbol);
    case Expr::Kind::Poly: {
      Series out(max_degree + 1, 0);
      for (std::size_t i = 0; i < e.coeffs.size() && i <= max_degree; ++i) out[i] = e.coeffs[i];
      return out;
    }
    case Expr::Kind::Geometric: {
      Series out(max_degree + 1, 0);
      for (std::size_t i = e.shift; i <= max_degree; ++i) out[i] = 1;
      return out;
    }
    case Expr::Kind::Monomial: {
      const Series inner = evaluate(e.args.front(), values, max_degree);
      Series out(max_degree + 1, 0);
      for (std::size_t i = e.shift; i <= max_degree; ++i) out[i] = inner[i - e.shift];
      return out;
    }
    case Expr::Kind::Sum: {
      Series out(max_degree + 1, 0);
      for (const auto& a : e.args) {
        const Series s = evaluate(a, values, max_degree);
        for (std::size_t i = 0; i <= max_degree; ++i) out[i] += s[i];
      }
      return out;
    }
    case Expr::Kind::Product: {
      Series out(max_degree + 1, 0);
      out[0] = 1;
      for (const auto& a : e.args) out = multiply(out, evaluate(a, values, max_degree), max_degree);
      return out;
    }
  }
  return Series(max_degree + 1, 0);
}

std::map<ClassLabel, Series> solve_series(const GfSystem& system, std::size_t max_degree) {
  std::map<ClassLabel, const Expr*> rhs;
  for (const auto& eq : system.equations) {
    if (!rhs.emplace(eq.lhs, &eq.rhs).second) throw std::invalid_argument("two equations for one symbol");
  }
  // Depth-first post-order from the root puts equations after those they read,
  // except along cycles.
  std::vector<ClassLabel> order;
  std::set<ClassLabel> visited;
  std::function<void(ClassLabel)> visit = [&](ClassLabel l) {
    if (!visited.insert(l).second) return;
    auto it = rhs.find(l);
    if (it == rhs.end()) throw std::invalid_argument("symbol " + std::to_string(l.id) + " has no equation");
    std::vector<ClassLabel> deps;
    symbols_outside_shifts(*it->second, deps);
    for (ClassLabel d : deps) visit(d);
    order.push_back(l);
  };
  visit(system.root);
  for (const auto& eq : system.equations) visit(eq.lhs);

  std::map<ClassLabel, Series> values;
  for (const auto& eq : system.equations) values[eq.lhs] = Series(max_degree + 1, 0);
  const std::size_t max_sweeps = max_degree + 2 + system.equations.size();
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    for (ClassLabel l : order) {
      Series next = evaluate(*rhs.at(l), values, max_degree);
      if (next != values[l]) {
        values[l] = std::move(next);
        changed = true;
      }
    }
    if (!changed) return values;
  }
  throw NonConvergent("series did not stabilize after " + std::to_string(max_sweeps) + " sweeps");
}

}  // namespace combex
