#pragma once

/**
 * @file arith.hpp
 * @brief Exact arithmetic for level-n Farey maps.
 *
 * Residues mod n, projective Farey fractions a/c with (a, c) ~ (-a, -c),
 * matrices over Z_n taken mod +-I, and integer matrices acting on the
 * extended rationals Q u {1/0}.
 *
 * Canonical form of a Farey fraction: the denominator lies in [0, n/2];
 * when the sign is still ambiguous (den = 0, or den = n/2 for even n) the
 * numerator is the smaller of a and n - a. Equality is field equality.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "farey/error.hpp"

namespace farey {

using BigInt = boost::multiprecision::cpp_int;

/// Least non-negative residue of a mod n (n > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// A vertex of M3(n): the projection of a/c with gcd(a, c, n) = 1.
class FareyFraction {
 public:
  /// Reduces (a, c) mod n and picks the canonical sign. Throws NotAVertex.
  static FareyFraction canonical(std::int64_t a, std::int64_t c, int n);

  /// Parses "a/c" (any integers) and canonicalizes at level n.
  static FareyFraction parse(std::string_view text, int n);

  int num() const noexcept { return num_; }
  int den() const noexcept { return den_; }
  int level() const noexcept { return level_; }

  bool is_pole() const noexcept { return den_ == 0; }

  /// Image under t -> t + k.
  FareyFraction translated(std::int64_t k) const;

  std::string str() const;

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;

  // Orders by (level, den, num): poles first, then denominator classes.
  friend std::strong_ordering operator<=>(const FareyFraction& x, const FareyFraction& y) {
    if (auto c = x.level_ <=> y.level_; c != 0) return c;
    if (auto c = x.den_ <=> y.den_; c != 0) return c;
    return x.num_ <=> y.num_;
  }

 private:
  FareyFraction(int num, int den, int level) : num_(num), den_(den), level_(level) {}

  int num_;
  int den_;
  int level_;
};

std::ostream& operator<<(std::ostream& os, const FareyFraction& f);

/// num(f)·den(g) - num(g)·den(f) reduced to [0, n). Throws LevelMismatch.
int cross_det(const FareyFraction& f, const FareyFraction& g);

/// Farey adjacency at level n: cross determinant = +-1 mod n.
bool is_adjacent(const FareyFraction& f, const FareyFraction& g);

/// Element of PSL(2, Z_n), stored as the lexicographically smaller of M and -M.
class ModMatrix {
 public:
  /// Throws InvalidArgument unless ad - bc = 1 mod n.
  static ModMatrix make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int n);

  static ModMatrix identity(int n);
  /// T = (1 1 / 0 1), the translation t -> t + 1.
  static ModMatrix translation(int n);
  /// S = (0 -1 / 1 0).
  static ModMatrix inversion(int n);

  /// Some matrix whose first column is (a, c); requires gcd(a, c, n) = 1.
  static ModMatrix with_first_column(std::int64_t a, std::int64_t c, int n);

  /// Every element of PSL(2, Z_n) by brute force over Z_n^4. Meant for small n.
  static std::vector<ModMatrix> enumerate(int n);

  int a() const noexcept { return e_[0]; }
  int b() const noexcept { return e_[1]; }
  int c() const noexcept { return e_[2]; }
  int d() const noexcept { return e_[3]; }
  int level() const noexcept { return level_; }

  ModMatrix operator*(const ModMatrix& rhs) const;
  ModMatrix inverse() const;

  std::string str() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  ModMatrix(std::array<int, 4> e, int level) : e_(e), level_(level) {}

  std::array<int, 4> e_;
  int level_;
};

/// m · f at level n. Throws LevelMismatch.
FareyFraction mobius_mod(const ModMatrix& m, const FareyFraction& f);

/// Element of Q u {1/0} in lowest terms with den >= 0; infinity is 1/0.
class ExtRational {
 public:
  ExtRational(BigInt num, BigInt den);
  ExtRational(long long num, long long den) : ExtRational(BigInt(num), BigInt(den)) {}

  static ExtRational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  std::string str() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& q);

/// Exact integer 2x2 matrix.
struct IntMatrix {
  BigInt a, b, c, d;

  BigInt det() const { return a * d - b * c; }
  IntMatrix operator*(const IntMatrix& rhs) const;

  /// "[[a,b],[c,d]]"
  std::string str() const;
  static IntMatrix parse(std::string_view text);

  /// Reduction mod n; throws InvalidArgument unless det = 1 mod n.
  ModMatrix reduce(int n) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// (a q + b) / (c q + d) in lowest terms. Throws InvalidArgument if det != +-1.
ExtRational mobius_exact(const IntMatrix& m, const ExtRational& q);

/// m = +-I mod n, for m of determinant 1.
bool in_principal_congruence(const IntMatrix& m, int n);

/// Farey determinant p·s - q·r of two extended rationals p/r, q/s.
BigInt farey_det(const ExtRational& x, const ExtRational& y);

}  // namespace farey
