#pragma once

#include <gmpxx.h>

#include <string>

#include "burnside/errors.hpp"

namespace burnside {

inline mpz_class mpz_ll(long long v) { return mpz_class(static_cast<long>(v)); }

enum class RingKind { Integers, Residues, Gaussian, Rationals };

/// One of the four supported exact coefficient rings: Z, Z/n, Z[i], Q.
struct CoeffRing {
  RingKind kind = RingKind::Integers;
  mpz_class modulus = 0;  // only meaningful for Residues, with modulus >= 2

  static CoeffRing integers() { return {RingKind::Integers, 0}; }
  static CoeffRing residues(const mpz_class& n);
  static CoeffRing gaussian() { return {RingKind::Gaussian, 0}; }
  static CoeffRing rationals() { return {RingKind::Rationals, 0}; }

  bool operator==(const CoeffRing& o) const {
    return kind == o.kind && modulus == o.modulus;
  }
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }

  std::string to_string() const;          // "Z", "Z/6", "Zi", "Q"
  static CoeffRing parse(const std::string& s);
};

/// Exact scalar in a CoeffRing, kept in canonical form:
/// residues in [0,n), rationals reduced, Gaussian integers as re+im*i.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(CoeffRing ring);                       // zero of the ring
  Scalar(CoeffRing ring, const mpz_class& value);        // image of an integer
  static Scalar gaussian(const mpz_class& re, const mpz_class& im);
  static Scalar rational(const mpq_class& q);

  const CoeffRing& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact division; throws NotIntegral if the quotient leaves the ring.
  Scalar divide_exact(const Scalar& d) const;

  /// Integer value; throws NotIntegral unless the scalar is a rational
  /// integer of its ring (Gaussian with im=0, rational with denom 1, ...).
  mpz_class integer_value() const;

  // Component accessors (Gaussian parts, rational value).
  const mpz_class& re() const { return re_; }
  const mpz_class& im() const { return im_; }
  const mpq_class& rat() const { return rat_; }

  std::string to_string() const;
  static Scalar parse(CoeffRing ring, const std::string& s);

 private:
  void canonicalize();

  CoeffRing ring_ = CoeffRing::integers();
  mpz_class re_ = 0, im_ = 0;  // Integers/Residues use re_; Gaussian re_+im_*i
  mpq_class rat_ = 0;          // Rationals only
};

/// Maps a scalar into a larger/compatible ring (Z->Z/n, Z->Zi, Z->Q,
/// Z/n->Z/m for m | n). Throws RingMismatch for unsupported directions.
Scalar extend_scalar(const Scalar& s, const CoeffRing& target);

}  // namespace burnside
