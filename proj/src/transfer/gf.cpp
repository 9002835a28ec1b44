#include "combex/transfer/gf.hpp"

#include "json.hpp"

namespace combex {

Expr Expr::sym(ClassLabel l) {
  Expr e;
  e.kind = Kind::Symbol;
  e.symbol = l;
  return e;
}

Expr Expr::sum(std::vector<Expr> args) {
  if (args.size() == 1) return std::move(args.front());
  Expr e;
  e.kind = Kind::Sum;
  e.args = std::move(args);
  return e;
}

Expr Expr::product(std::vector<Expr> args) {
  if (args.size() == 1) return std::move(args.front());
  Expr e;
  e.kind = Kind::Product;
  e.args = std::move(args);
  return e;
}

Expr Expr::poly(std::vector<Integer> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  Expr e;
  e.kind = Kind::Poly;
  e.coeffs = std::move(coeffs);
  return e;
}

Expr Expr::geometric(std::size_t shift) {
  Expr e;
  e.kind = Kind::Geometric;
  e.shift = shift;
  return e;
}

Expr Expr::monomial(std::size_t shift, Expr arg) {
  if (shift == 0) return arg;
  Expr e;
  e.kind = Kind::Monomial;
  e.shift = shift;
  e.args.push_back(std::move(arg));
  return e;
}

namespace {

Expr kernel_expr(const Rule& rule) {
  std::vector<Expr> kids;
  for (ClassLabel c : rule.children) kids.push_back(Expr::sym(c));
  if (const auto* v = std::get_if<Verified>(&rule.kernel)) {
    if (!v->last) return Expr::geometric(v->first);
    std::vector<Integer> coeffs(*v->last, 0);
    for (std::size_t i = v->first; i < *v->last; ++i) coeffs[i] = 1;
    return Expr::poly(std::move(coeffs));
  }
  if (std::holds_alternative<DisjointUnion>(rule.kernel) || std::holds_alternative<Equivalence>(rule.kernel)) {
    return Expr::sum(std::move(kids));
  }
  if (const auto* s = std::get_if<ShiftedDisjointUnion>(&rule.kernel)) {
    std::vector<Expr> terms;
    Expr base = Expr::poly(s->base_terms);
    if (!base.coeffs.empty()) terms.push_back(std::move(base));
    if (!kids.empty()) terms.push_back(Expr::monomial(s->shift, Expr::sum(std::move(kids))));
    if (terms.empty()) return Expr::poly({});
    return Expr::sum(std::move(terms));
  }
  const auto& p = std::get<Product>(rule.kernel);
  return Expr::monomial(p.shift, Expr::product(std::move(kids)));
}

std::string power(std::size_t k) { return k == 1 ? "x" : "x^" + std::to_string(k); }

std::string poly_text(const std::vector<Integer>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c[i].str();
    } else {
      if (c[i] != 1) out += c[i].str() + "*";
      out += power(i);
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json expr_json(const Expr& e) {
  using nlohmann::json;
  switch (e.kind) {
    case Expr::Kind::Symbol: return json{{"op", "symbol"}, {"label", e.symbol.id}};
    case Expr::Kind::Poly: {
      json coeffs = json::array();
      for (const auto& c : e.coeffs) coeffs.push_back(c.str());
      return json{{"op", "poly"}, {"coeffs", coeffs}};
    }
    case Expr::Kind::Geometric: return json{{"op", "geometric"}, {"shift", e.shift}};
    default: break;
  }
  json args = json::array();
  for (const auto& a : e.args) args.push_back(expr_json(a));
  const char* op = e.kind == Expr::Kind::Sum ? "sum" : (e.kind == Expr::Kind::Product ? "product" : "monomial");
  json out{{"op", op}, {"args", args}};
  if (e.kind == Expr::Kind::Monomial) out["shift"] = e.shift;
  return out;
}

}  // namespace

GfSystem emit_gf_system(const Specification& spec) {
  spec.validate();
  GfSystem system;
  system.root = spec.root;
  for (const auto& [label, rule] : spec.rules) system.equations.push_back({label, kernel_expr(rule)});
  return system;
}

std::string to_text(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Symbol: return "F" + std::to_string(e.symbol.id) + "(x)";
    case Expr::Kind::Poly: return poly_text(e.coeffs);
    case Expr::Kind::Geometric: return (e.shift == 0 ? std::string("1") : power(e.shift)) + "/(1-x)";
    case Expr::Kind::Monomial: {
      const Expr& a = e.args.front();
      const bool wrap = a.kind == Expr::Kind::Sum;
      return power(e.shift) + "*" + (wrap ? "(" + to_text(a) + ")" : to_text(a));
    }
    case Expr::Kind::Sum:
    case Expr::Kind::Product: {
      const bool is_sum = e.kind == Expr::Kind::Sum;
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += is_sum ? " + " : "*";
        const Expr& a = e.args[i];
        const bool wrap = !is_sum && (a.kind == Expr::Kind::Sum || (a.kind == Expr::Kind::Poly && a.coeffs.size() > 1));
        out += wrap ? "(" + to_text(a) + ")" : to_text(a);
      }
      return out;
    }
  }
  return "";
}

std::string to_text(const GfSystem& system) {
  std::string out;
  for (const auto& eq : system.equations) {
    out += "F" + std::to_string(eq.lhs.id) + "(x) = " + to_text(eq.rhs) + "\n";
  }
  return out;
}

std::string to_json(const GfSystem& system) {
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& eq : system.equations) eqs.push_back({{"lhs", eq.lhs.id}, {"rhs", expr_json(eq.rhs)}});
  nlohmann::json out{{"root", system.root.id}, {"equations", eqs}};
  return out.dump(2) + "\n";
}

}  // namespace combex
