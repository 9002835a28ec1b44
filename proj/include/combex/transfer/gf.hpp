#pragma once

#include <map>
#include <string>
#include <vector>

#include "combex/engine/specification.hpp"
#include "combex/integer.hpp"

namespace combex {

// Expression tree over power series in x.
struct Expr {
  enum class Kind {
    Symbol,     // F_label(x)
    Sum,        // args[0] + args[1] + ...
    Product,    // args[0] * args[1] * ...
    Poly,       // sum of coeffs[i] x^i
    Geometric,  // x^shift / (1 - x)
    Monomial,   // x^shift * args[0]
  };
  Kind kind = Kind::Poly;
  ClassLabel symbol;
  std::vector<Integer> coeffs;
  std::size_t shift = 0;
  std::vector<Expr> args;

  static Expr sym(ClassLabel l);
  static Expr sum(std::vector<Expr> args);
  static Expr product(std::vector<Expr> args);
  static Expr poly(std::vector<Integer> coeffs);
  static Expr geometric(std::size_t shift);
  static Expr monomial(std::size_t shift, Expr arg);

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct Equation {
  ClassLabel lhs;
  Expr rhs;
};

struct GfSystem {
  ClassLabel root;
  std::vector<Equation> equations;  // one per class, ordered by label
};

// One equation per class of the specification.
GfSystem emit_gf_system(const Specification& spec);

// "F3(x) = F4(x) + F5(x)" per line.
std::string to_text(const Expr& e);
std::string to_text(const GfSystem& system);
// Nested {"op": ..., "args": [...]} trees.
std::string to_json(const GfSystem& system);

}  // namespace combex
