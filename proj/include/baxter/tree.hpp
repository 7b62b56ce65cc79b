#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace baxter {

/// T(a,b,c): the operator P^c(P^a(x) * P^b(y)), equivalently the tree with
/// a dots on the left leg, b on the right leg and c on the neck.
struct Tree {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  friend auto operator<=>(const Tree&, const Tree&) = default;

  [[nodiscard]] std::string to_string() const {
    return "T(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
};

/// No move applies once a leg is empty.
[[nodiscard]] constexpr bool is_normal_form(const Tree& t) { return t.a == 0 || t.b == 0; }

inline std::ostream& operator<<(std::ostream& os, const Tree& t) { return os << t.to_string(); }

}  // namespace baxter
