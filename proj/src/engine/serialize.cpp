#include "combex/engine/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace combex {

using nlohmann::json;

namespace {

json kernel_to_json(const CountingKernel& k) {
  json j;
  j["type"] = kernel_name(k);
  if (const auto* d = std::get_if<DisjointUnion>(&k)) {
    j["arity"] = d->arity;
  } else if (const auto* s = std::get_if<ShiftedDisjointUnion>(&k)) {
    j["arity"] = s->arity;
    j["shift"] = s->shift;
    json base = json::array();
    for (const auto& b : s->base_terms) base.push_back(b.str());
    j["base"] = base;
  } else if (const auto* p = std::get_if<Product>(&k)) {
    j["arity"] = p->arity;
    j["reliance_set"] = p->reliance_set;
    j["shift"] = p->shift;
  } else if (const auto* v = std::get_if<Verified>(&k)) {
    j["kind"] = v->kind;
    j["first"] = v->first;
    j["last"] = v->last ? json(*v->last) : json(nullptr);
  }
  return j;
}

CountingKernel kernel_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "disjoint_union") return DisjointUnion{j.at("arity").get<std::size_t>()};
  if (type == "shifted_disjoint_union") {
    ShiftedDisjointUnion s{j.at("arity").get<std::size_t>(), j.at("shift").get<std::size_t>(), {}};
    for (const auto& b : j.at("base")) s.base_terms.emplace_back(b.get<std::string>());
    return s;
  }
  if (type == "product") {
    return Product{j.at("arity").get<std::size_t>(), j.at("reliance_set").get<std::vector<std::size_t>>(),
                   j.at("shift").get<std::size_t>()};
  }
  if (type == "equivalence") return Equivalence{};
  if (type == "verified") {
    Verified v{j.at("kind").get<std::string>(), j.at("first").get<std::size_t>(), std::nullopt};
    if (!j.at("last").is_null()) v.last = j.at("last").get<std::size_t>();
    return v;
  }
  throw SpecFormatError("unknown kernel type '" + type + "'");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string spec_to_json(const Specification& spec) {
  json j;
  j["format"] = 1;
  j["root"] = spec.root.id;
  json classes = json::array();
  for (const auto& [label, rule] : spec.rules) {
    auto it = spec.encodings.find(label);
    classes.push_back({{"label", label.id}, {"encoding", it == spec.encodings.end() ? "" : it->second}});
  }
  j["classes"] = classes;
  json rules = json::array();
  for (const auto& [label, rule] : spec.rules) {
    json children = json::array();
    for (ClassLabel c : rule.children) children.push_back(c.id);
    rules.push_back({{"parent", rule.parent.id},
                     {"children", children},
                     {"strategy", rule.strategy},
                     {"kernel", kernel_to_json(rule.kernel)}});
  }
  j["rules"] = rules;
  return j.dump(2) + "\n";
}

Specification spec_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<int>() != 1) throw SpecFormatError("unsupported format version");
    Specification spec;
    spec.root = ClassLabel{j.at("root").get<std::uint32_t>()};
    for (const auto& c : j.at("classes")) {
      spec.encodings[ClassLabel{c.at("label").get<std::uint32_t>()}] = c.at("encoding").get<std::string>();
    }
    for (const auto& r : j.at("rules")) {
      Rule rule;
      rule.parent = ClassLabel{r.at("parent").get<std::uint32_t>()};
      for (const auto& c : r.at("children")) rule.children.push_back(ClassLabel{c.get<std::uint32_t>()});
      rule.strategy = r.at("strategy").get<std::string>();
      rule.kernel = kernel_from_json(r.at("kernel"));
      if (!spec.rules.emplace(rule.parent, rule).second) throw SpecFormatError("two rules for one class");
    }
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw SpecFormatError(std::string("malformed specification: ") + e.what());
  } catch (const InvalidSpecification& e) {
    throw SpecFormatError(std::string("invalid specification: ") + e.what());
  }
}

std::string spec_to_dot(const Specification& spec) {
  std::ostringstream out;
  out << "digraph specification {\n  node [shape=box];\n";
  for (const auto& [label, rule] : spec.rules) {
    auto it = spec.encodings.find(label);
    out << "  c" << label.id << " [label=\"" << label.id;
    if (it != spec.encodings.end()) out << "\\n" << dot_escape(it->second);
    out << "\"];\n";
  }
  std::size_t index = 0;
  for (const auto& [label, rule] : spec.rules) {
    out << "  r" << index << " [shape=point, xlabel=\"" << dot_escape(rule.strategy) << "\"];\n";
    out << "  c" << label.id << " -> r" << index << " [arrowhead=none];\n";
    for (ClassLabel c : rule.children) out << "  r" << index << " -> c" << c.id << ";\n";
    ++index;
  }
  out << "}\n";
  return out.str();
}

}  // namespace combex
