#pragma once

#include <cstdint>
#include <ostream>

namespace coxstab {

/// Element a + b*phi of the golden ring Z[phi], phi^2 = phi + 1.
/// Exact arithmetic for root coordinates of the 5-bonded types; plain
/// integers embed as b = 0.
struct Golden {
  std::int64_t a{0};
  std::int64_t b{0};

  constexpr Golden() = default;
  constexpr Golden(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

  friend constexpr Golden operator+(Golden x, Golden y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr Golden operator-(Golden x, Golden y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr Golden operator-(Golden x) { return {-x.a, -x.b}; }
  friend constexpr Golden operator*(Golden x, Golden y) {
    // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend constexpr bool operator==(Golden x, Golden y) {
    return x.a == y.a && x.b == y.b;
  }
  friend constexpr bool operator!=(Golden x, Golden y) { return !(x == y); }

  /// Sign of the real value a + b*phi: -1, 0 or +1, decided exactly.
  constexpr int sign() const {
    // 2*(a + b phi) = (2a + b) + b*sqrt(5)
    const std::int64_t u = 2 * a + b;
    const std::int64_t v = b;
    if (u == 0 && v == 0) return 0;
    if (u >= 0 && v >= 0) return 1;
    if (u <= 0 && v <= 0) return -1;
    const std::int64_t d = u * u - 5 * v * v;  // never 0 for integer u, v != 0
    if (u > 0) return d > 0 ? 1 : -1;
    return d > 0 ? -1 : 1;
  }

  constexpr bool is_zero() const { return a == 0 && b == 0; }
  constexpr bool is_nonnegative() const { return sign() >= 0; }

  friend constexpr bool operator<(Golden x, Golden y) {
    return (x - y).sign() < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, Golden x) {
    os << x.a;
    if (x.b != 0) os << (x.b > 0 ? "+" : "") << x.b << "phi";
    return os;
  }
};

}  // namespace coxstab
