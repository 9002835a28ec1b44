#include "combex/tilings/tiling.hpp"

#include <algorithm>
#include <charconv>

namespace combex::tilings {

Tiling::Tiling(int width, int height, std::vector<GriddedPerm> obstructions, std::vector<RequirementList> requirements)
    : width_(width), height_(height), obstructions_(std::move(obstructions)), requirements_(std::move(requirements)) {
  if (width_ < 1 || height_ < 1) throw std::invalid_argument("tiling dimensions must be positive");
  for (const auto& o : obstructions_) {
    if (!fits(o)) throw std::invalid_argument("obstruction outside the grid: " + o.encode());
  }
  for (const auto& list : requirements_) {
    for (const auto& r : list) {
      if (!fits(r)) throw std::invalid_argument("requirement outside the grid: " + r.encode());
    }
  }
}

bool Tiling::fits(const GriddedPerm& g) const {
  return std::all_of(g.positions().begin(), g.positions().end(),
                     [&](Cell c) { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; });
}

bool Tiling::avoids_obstructions(const GriddedPerm& g) const {
  return std::none_of(obstructions_.begin(), obstructions_.end(), [&](const GriddedPerm& o) { return g.contains(o); });
}

bool Tiling::satisfies_requirements(const GriddedPerm& g) const {
  return std::all_of(requirements_.begin(), requirements_.end(), [&](const RequirementList& list) {
    return std::any_of(list.begin(), list.end(), [&](const GriddedPerm& r) { return g.contains(r); });
  });
}

bool Tiling::in_grid(const GriddedPerm& g) const { return avoids_obstructions(g) && satisfies_requirements(g); }

bool Tiling::is_empty_cell(Cell c) const {
  const GriddedPerm p = GriddedPerm::point(c);
  return std::find(obstructions_.begin(), obstructions_.end(), p) != obstructions_.end();
}

std::vector<Cell> Tiling::nonempty_cells() const {
  std::vector<Cell> out;
  for (int x = 0; x < width_; ++x) {
    for (int y = 0; y < height_; ++y) {
      if (!is_empty_cell({x, y})) out.push_back({x, y});
    }
  }
  return out;
}

bool Tiling::is_point_cell(Cell c) const {
  auto has = [&](const GriddedPerm& g) {
    return std::find(obstructions_.begin(), obstructions_.end(), g) != obstructions_.end();
  };
  if (!has(GriddedPerm::localized({0, 1}, c)) || !has(GriddedPerm::localized({1, 0}, c))) return false;
  const RequirementList point{GriddedPerm::point(c)};
  return std::find(requirements_.begin(), requirements_.end(), point) != requirements_.end();
}

std::size_t Tiling::requirement_bound() const {
  std::size_t total = 0;
  for (const auto& list : requirements_) {
    std::size_t best = 0;
    for (const auto& r : list) best = std::max(best, r.size());
    total += best;
  }
  return total;
}

bool Tiling::is_trivially_empty() const {
  return std::any_of(obstructions_.begin(), obstructions_.end(), [](const GriddedPerm& o) { return o.empty(); });
}

std::string Tiling::encode() const {
  std::string out = std::to_string(width_) + "," + std::to_string(height_) + " # ";
  for (std::size_t i = 0; i < obstructions_.size(); ++i) {
    if (i > 0) out.push_back(';');
    out += "(" + obstructions_[i].encode() + ")";
  }
  out += " # ";
  for (std::size_t i = 0; i < requirements_.size(); ++i) {
    if (i > 0) out.push_back('|');
    for (std::size_t j = 0; j < requirements_[i].size(); ++j) {
      if (j > 0) out.push_back(',');
      out += "(" + requirements_[i][j].encode() + ")";
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses");
    if (depth == 0 && s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses");
  out.push_back(s.substr(start));
  return out;
}

GriddedPerm parse_wrapped(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected '(pattern|cells)', got '" + std::string(s) + "'");
  }
  return GriddedPerm::parse(s.substr(1, s.size() - 2));
}

}  // namespace

Tiling Tiling::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t hash = text.find('#', start);
    parts.push_back(text.substr(start, hash == std::string_view::npos ? std::string_view::npos : hash - start));
    if (hash == std::string_view::npos) break;
    start = hash + 1;
  }
  if (parts.size() != 3) throw ParseError("tiling needs three '#'-separated fields");
  const std::string_view dims = trim(parts[0]);
  const std::size_t comma = dims.find(',');
  if (comma == std::string_view::npos) throw ParseError("dimensions must be 't,u'");
  int t = 0;
  int u = 0;
  auto read = [](std::string_view s, int& v) {
    s = trim(s);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1) throw ParseError("bad dimension '" + std::string(s) + "'");
  };
  read(dims.substr(0, comma), t);
  read(dims.substr(comma + 1), u);
  std::vector<GriddedPerm> obs;
  if (!trim(parts[1]).empty()) {
    for (auto tok : split_top(trim(parts[1]), ';')) obs.push_back(parse_wrapped(tok));
  }
  std::vector<RequirementList> reqs;
  if (!trim(parts[2]).empty()) {
    for (auto list_tok : split_top(trim(parts[2]), '|')) {
      RequirementList list;
      for (auto tok : split_top(trim(list_tok), ',')) list.push_back(parse_wrapped(tok));
      reqs.push_back(std::move(list));
    }
  }
  try {
    return Tiling(t, u, std::move(obs), std::move(reqs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Tiling Tiling::transpose() const {
  std::vector<GriddedPerm> obs;
  obs.reserve(obstructions_.size());
  for (const auto& o : obstructions_) obs.push_back(o.transpose());
  std::vector<RequirementList> reqs;
  for (const auto& list : requirements_) {
    RequirementList l;
    for (const auto& r : list) l.push_back(r.transpose());
    reqs.push_back(std::move(l));
  }
  return Tiling(height_, width_, std::move(obs), std::move(reqs));
}

Tiling Tiling::with_obstructions(const std::vector<GriddedPerm>& extra) const {
  std::vector<GriddedPerm> obs = obstructions_;
  obs.insert(obs.end(), extra.begin(), extra.end());
  return Tiling(width_, height_, std::move(obs), requirements_);
}

Tiling Tiling::with_requirement(RequirementList list) const {
  std::vector<RequirementList> reqs = requirements_;
  reqs.push_back(std::move(list));
  return Tiling(width_, height_, obstructions_, std::move(reqs));
}

Tiling basis_to_root_tiling(const std::vector<std::vector<int>>& basis) {
  if (basis.empty()) throw std::invalid_argument("basis must not be empty");
  std::vector<GriddedPerm> obs;
  for (const auto& b : basis) obs.push_back(GriddedPerm::localized(b, {0, 0}));
  for (std::size_t i = 0; i < obs.size(); ++i) {
    for (std::size_t j = 0; j < obs.size(); ++j) {
      if (i != j && obs[i].contains(obs[j])) {
        throw RedundantBasis("basis element " + format_pattern(basis[i]) + " contains " + format_pattern(basis[j]));
      }
    }
  }
  return canonicalize(Tiling(1, 1, std::move(obs), {}));
}

Tiling epsilon_tiling() { return Tiling(1, 1, {GriddedPerm::point({0, 0})}, {}); }

Tiling point_tiling() {
  return Tiling(1, 1, {GriddedPerm::localized({0, 1}, {0, 0}), GriddedPerm::localized({1, 0}, {0, 0})},
                {{GriddedPerm::point({0, 0})}});
}

}  // namespace combex::tilings
