#pragma once

#include <cstdint>
#include <stdexcept>

namespace pdaforge {

/// The ring Z_v of integer residues modulo an odd v >= 3.
///
/// Oddness is what makes "division by 2" total: the map x -> 2x is a
/// bijection on Z_v exactly when v is odd, and its inverse is multiplication
/// by (v+1)/2. Everything downstream (half-sum checks, Latin rectangle
/// verification) relies on this, so an even or undersized modulus is rejected
/// at construction instead of being tolerated and re-checked later.
class Modulus {
 public:
  explicit Modulus(long long v) : v_(v) {
    if (v < 3 || v % 2 == 0)
      throw std::invalid_argument("modulus must be an odd integer >= 3");
  }

  long long value() const { return v_; }

  /// Multiplicative inverse of 2 in Z_v, i.e. (v+1)/2.
  long long half_inverse() const { return (v_ + 1) / 2; }

  friend bool operator==(Modulus a, Modulus b) { return a.v_ == b.v_; }
  friend bool operator!=(Modulus a, Modulus b) { return a.v_ != b.v_; }

 private:
  long long v_;
};

/// Canonical representative of x mod v in [0, v-1]; correct for negative x.
inline long long reduce_value(long long x, long long v) {
  long long r = x % v;
  return r < 0 ? r + v : r;
}

/// The unique r with 2r == a + b (mod v). Inputs need not be canonical.
inline long long half_sum_value(long long a, long long b, long long v) {
  long long s = reduce_value(reduce_value(a, v) + reduce_value(b, v), v);
  return static_cast<long long>(static_cast<__int128>(s) * ((v + 1) / 2) % v);
}

/// A canonical residue in Z_v together with its modulus.
class Residue {
 public:
  Residue(long long value, Modulus m) : value_(reduce_value(value, m.value())), mod_(m) {}

  long long value() const { return value_; }
  Modulus modulus() const { return mod_; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

 private:
  long long value_;
  Modulus mod_;
};

inline Residue reduce(long long x, Modulus m) { return Residue(x, m); }

/// Half-sum of two residues: the r with 2r == a + b (mod v).
inline Residue half_sum(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("half_sum: mismatched moduli");
  long long v = a.modulus().value();
  return Residue(half_sum_value(a.value(), b.value(), v), a.modulus());
}

}  // namespace pdaforge
