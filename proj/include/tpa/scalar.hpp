#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tpa {

/// Exact field element: a rational in lowest terms, or a residue modulo a
/// prime. The modulus travels with the value; 0 means the rationals.
///
/// Integer-valued rationals combine freely with residues (they are reduced
/// into the prime field on contact). Mixing two different primes throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT: literals are scalars
  Scalar(int v) : q_(v) {}   // NOLINT
  explicit Scalar(mpq_class q);
  Scalar(long num, long den);

  static Scalar residue(long v, std::uint64_t p);

  /// Parses "n", "-n", "p/q". With p > 0 the value is reduced mod p.
  static Scalar parse(std::string_view text, std::uint64_t p = 0);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;

  /// Rational value; for residues the representative in [0, p).
  mpq_class to_rational() const;
  /// Same value viewed in GF(p) (p > 0) or unchanged (p == 0).
  Scalar in_field(std::uint64_t p) const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical output (not field-compatible).
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  void unify(Scalar& o);
  void reduce_into(std::uint64_t p);

  mpq_class q_;            // value when p_ == 0
  std::uint64_t p_ = 0;    // modulus, 0 for the rationals
  std::uint64_t r_ = 0;    // residue when p_ > 0
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::uint64_t p);

}  // namespace tpa
