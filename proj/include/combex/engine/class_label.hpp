#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace combex {

// Handle for one canonical combinatorial set within an exploration.
struct ClassLabel {
  std::uint32_t id = 0;
  friend constexpr auto operator<=>(ClassLabel, ClassLabel) = default;
};

inline std::ostream& operator<<(std::ostream& os, ClassLabel l) { return os << l.id; }

}  // namespace combex

template <>
struct std::hash<combex::ClassLabel> {
  std::size_t operator()(combex::ClassLabel l) const noexcept { return std::hash<std::uint32_t>{}(l.id); }
};
