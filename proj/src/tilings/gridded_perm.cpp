#include "combex/tilings/gridded_perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace combex::tilings {

std::vector<int> standardize(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r);
  return out;
}

bool GriddedPerm::consistent(std::span<const int> pattern, std::span<const Cell> positions) {
  if (pattern.size() != positions.size()) return false;
  const std::size_t n = pattern.size();
  std::vector<int> row_by_value(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (pattern[i] < 0 || static_cast<std::size_t>(pattern[i]) >= n || row_by_value[pattern[i]] != -1) return false;
    if (positions[i].x < 0 || positions[i].y < 0) return false;
    if (i > 0 && positions[i].x < positions[i - 1].x) return false;
    row_by_value[pattern[i]] = positions[i].y;
  }
  for (std::size_t v = 1; v < n; ++v) {
    if (row_by_value[v] < row_by_value[v - 1]) return false;
  }
  return true;
}

GriddedPerm::GriddedPerm(std::vector<int> pattern, std::vector<Cell> positions)
    : patt_(std::move(pattern)), pos_(std::move(positions)) {
  if (!consistent(patt_, pos_)) throw std::invalid_argument("inconsistent gridded permutation");
}

GriddedPerm GriddedPerm::unchecked(std::vector<int> pattern, std::vector<Cell> positions) {
  GriddedPerm g;
  g.patt_ = std::move(pattern);
  g.pos_ = std::move(positions);
  return g;
}

GriddedPerm GriddedPerm::localized(std::vector<int> pattern, Cell c) {
  std::vector<Cell> pos(pattern.size(), c);
  return GriddedPerm(std::move(pattern), std::move(pos));
}

namespace {

// Depth-first search for an occurrence of h in g; `chosen` holds the indices
// picked for h's first `depth` entries.
bool extend(const GriddedPerm& g, const GriddedPerm& h, std::size_t depth, std::size_t from, std::size_t limit,
            std::vector<std::size_t>& chosen, std::size_t* count) {
  const std::size_t k = h.size();
  if (depth == k) {
    if (count) ++*count;
    return !count;
  }
  const Cell want = h.cell(depth);
  const int hv = h.value(depth);
  for (std::size_t i = from; i + (k - depth) <= limit; ++i) {
    if (g.cell(i) != want) continue;
    const int gv = g.value(i);
    bool ok = true;
    for (std::size_t l = 0; l < depth && ok; ++l) ok = (gv < g.value(chosen[l])) == (hv < h.value(l));
    if (!ok) continue;
    chosen[depth] = i;
    if (extend(g, h, depth + 1, i + 1, limit, chosen, count)) return true;
  }
  return false;
}

}  // namespace

bool GriddedPerm::contains(const GriddedPerm& h) const {
  if (h.size() > size()) return false;
  if (h.empty()) return true;
  std::vector<std::size_t> chosen(h.size());
  return extend(*this, h, 0, 0, size(), chosen, nullptr);
}

bool GriddedPerm::contains_using_last(const GriddedPerm& h) const {
  const std::size_t k = h.size();
  const std::size_t n = size();
  if (k == 0 || k > n || h.pos_[k - 1] != pos_[n - 1]) return false;
  if (k == 1) return true;
  // Match h's last entry to our last entry, then search the rest before it.
  const int last_g = patt_[n - 1];
  const int last_h = h.patt_[k - 1];
  std::vector<std::size_t> chosen(k);
  // Search h minus its last entry inside our prefix, checking the relation to the
  // fixed last entry as we go.
  struct Frame {
    std::size_t depth, next;
  };
  std::vector<Frame> frames{{0, 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.depth == k - 1) return true;
    bool advanced = false;
    for (std::size_t i = f.next; i + (k - 1 - f.depth) <= n - 1; ++i) {
      if (pos_[i] != h.pos_[f.depth]) continue;
      const int gv = patt_[i];
      const int hv = h.patt_[f.depth];
      if ((gv < last_g) != (hv < last_h)) continue;
      bool ok = true;
      for (std::size_t l = 0; l < f.depth && ok; ++l) ok = (gv < patt_[chosen[l]]) == (hv < h.patt_[l]);
      if (!ok) continue;
      chosen[f.depth] = i;
      f.next = i + 1;
      frames.push_back({f.depth + 1, i + 1});
      advanced = true;
      break;
    }
    if (!advanced) frames.pop_back();
  }
  return false;
}

std::size_t GriddedPerm::count_occurrences(const GriddedPerm& h) const {
  if (h.size() > size()) return 0;
  if (h.empty()) return 1;
  std::size_t count = 0;
  std::vector<std::size_t> chosen(h.size());
  extend(*this, h, 0, 0, size(), chosen, &count);
  return count;
}

GriddedPerm GriddedPerm::subperm(std::span<const std::size_t> indices) const {
  std::vector<int> vals;
  std::vector<Cell> pos;
  vals.reserve(indices.size());
  pos.reserve(indices.size());
  for (std::size_t i : indices) {
    vals.push_back(patt_.at(i));
    pos.push_back(pos_.at(i));
  }
  return unchecked(standardize(vals), std::move(pos));
}

GriddedPerm GriddedPerm::without(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::find(indices.begin(), indices.end(), i) == indices.end()) keep.push_back(i);
  }
  return subperm(keep);
}

GriddedPerm GriddedPerm::transpose() const {
  const std::size_t n = size();
  std::vector<int> inv(n);
  std::vector<Cell> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv[patt_[i]] = static_cast<int>(i);
    pos[patt_[i]] = Cell{pos_[i].y, pos_[i].x};
  }
  return unchecked(std::move(inv), std::move(pos));
}

bool GriddedPerm::is_localized() const {
  return std::all_of(pos_.begin(), pos_.end(), [&](Cell c) { return c == pos_.front(); });
}

std::vector<Cell> GriddedPerm::cells() const {
  std::vector<Cell> out(pos_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::strong_ordering operator<=>(const GriddedPerm& a, const GriddedPerm& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.patt_ <=> b.patt_; c != 0) return c;
  return a.pos_ <=> b.pos_;
}

std::string format_pattern(std::span<const int> pattern) {
  const bool long_form = pattern.size() >= 10;
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (long_form && i > 0) out.push_back('.');
    out += std::to_string(pattern[i] + 1);
  }
  return out;
}

std::vector<int> parse_pattern(std::string_view text) {
  std::vector<int> out;
  auto read = [&](std::string_view tok) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 1) {
      throw ParseError("bad pattern entry '" + std::string(tok) + "'");
    }
    out.push_back(v - 1);
  };
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t dot = text.find('.', start);
      read(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) read(text.substr(i, 1));
  }
  std::vector<int> sorted(out);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) throw ParseError("not a permutation: '" + std::string(text) + "'");
  }
  return out;
}

std::string GriddedPerm::encode() const {
  std::string out = format_pattern(patt_);
  out.push_back('|');
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    if (i > 0) out.push_back(';');
    out += std::to_string(pos_[i].x);
    out.push_back(',');
    out += std::to_string(pos_[i].y);
  }
  return out;
}

GriddedPerm GriddedPerm::parse(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("gridded permutation needs '|': '" + std::string(text) + "'");
  std::vector<int> patt = parse_pattern(text.substr(0, bar));
  std::vector<Cell> pos;
  std::string_view rest = text.substr(bar + 1);
  while (!rest.empty()) {
    const std::size_t semi = rest.find(';');
    std::string_view tok = rest.substr(0, semi);
    const std::size_t comma = tok.find(',');
    if (comma == std::string_view::npos) throw ParseError("cell needs 'x,y': '" + std::string(tok) + "'");
    Cell c;
    auto parse_int = [&](std::string_view s, int& v) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || v < 0) throw ParseError("bad cell '" + std::string(tok) + "'");
    };
    parse_int(tok.substr(0, comma), c.x);
    parse_int(tok.substr(comma + 1), c.y);
    pos.push_back(c);
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  if (pos.size() != patt.size()) throw ParseError("pattern and cell counts differ: '" + std::string(text) + "'");
  try {
    return GriddedPerm(std::move(patt), std::move(pos));
  } catch (const std::invalid_argument&) {
    throw ParseError("inconsistent gridded permutation '" + std::string(text) + "'");
  }
}

}  // namespace combex::tilings
