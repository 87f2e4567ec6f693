#pragma once

// Independent oracles for the test suites. Everything here is derived from
// classical closed-form data (degree products, root counts) or first
// principles (exact LDL positive definiteness over rationals), never from the
// code paths under test.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coxstab/coxgraph.hpp"

namespace oracles {

/// Invariant degrees of the irreducible types; the group order is their
/// product and the number of positive roots is their sum minus the rank.
inline std::vector<std::uint64_t> degrees(const coxstab::SphericalType& t) {
  using coxstab::Family;
  std::vector<std::uint64_t> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
      return d;
    case Family::B:
      for (int i = 1; i <= t.rank; ++i) d.push_back(2 * i);
      return d;
    case Family::D:
      for (int i = 1; i < t.rank; ++i) d.push_back(2 * i);
      d.push_back(t.rank);
      return d;
    case Family::E:
      if (t.rank == 6) return {2, 5, 6, 8, 9, 12};
      if (t.rank == 7) return {2, 6, 8, 10, 12, 14, 18};
      return {2, 8, 12, 14, 18, 20, 24, 30};
    case Family::F:
      return {2, 6, 8, 12};
    case Family::H:
      if (t.rank == 3) return {2, 6, 10};
      return {2, 12, 20, 30};
    case Family::I2:
      return {2, static_cast<std::uint64_t>(t.i2_bond)};
  }
  throw std::logic_error("unreachable");
}

inline std::uint64_t order_from_degrees(const coxstab::SphericalType& t) {
  std::uint64_t o = 1;
  for (auto d : degrees(t)) o *= d;
  return o;
}

inline int positive_roots_from_degrees(const coxstab::SphericalType& t) {
  std::uint64_t s = 0;
  for (auto d : degrees(t)) s += d - 1;
  return static_cast<int>(s);
}

/// Exact rational arithmetic for the positive-definiteness oracle.
struct Rational {
  long long num{0}, den{1};
  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { reduce(); }
  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Rational operator+(Rational a, Rational b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(Rational a, Rational b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend Rational operator/(Rational a, Rational b) {
    return {a.num * b.den, a.den * b.num};
  }
  bool positive() const { return num > 0; }
  bool is_zero() const { return num == 0; }
};

/// Positive definiteness of the cosine matrix 2*cos(pi/m(s,t)) of a graph
/// whose bonds are all 2 or 3 (so the matrix is rational: B = 2I - adjacency),
/// via exact LDL. A connected simply-laced graph is spherical iff this matrix
/// is positive definite. Returns nullopt for graphs with other bonds.
inline std::optional<bool> simply_laced_positive_definite(
    const coxstab::CoxeterGraph& g) {
  const int n = g.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m = g.bond(i, j);
      if (i == j) {
        a[i][j] = Rational(2);
      } else if (m == 2) {
        a[i][j] = Rational(0);
      } else if (m == 3) {
        a[i][j] = Rational(-1);
      } else {
        return std::nullopt;
      }
    }
  }
  // LDL without pivoting; positive definite iff all pivots positive.
  for (int k = 0; k < n; ++k) {
    if (!a[k][k].positive()) return false;
    for (int i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) {
        a[i][j] = a[i][j] - f * a[k][j];
      }
    }
  }
  return true;
}

}  // namespace oracles
