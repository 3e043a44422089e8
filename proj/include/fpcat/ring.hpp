#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpcat {

using Scalar = mpq_class;

/// Unsupported ring, mismatched rings, or an element outside the ring.
struct RingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Shape mismatch between matrices or morphisms.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One of the computable rings Z, Q or Z/n (n >= 2).
///
/// Elements of every ring are carried as exact rationals; the ring decides
/// which rationals are legal and how they are reduced.
class Ring {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring integers_mod(const mpz_class& n);

  /// Parses "Z", "Q" or "Z/<n>".
  static Ring parse(std::string_view text);

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_integers_mod() const { return kind_ == Kind::IntegersMod; }

  /// Canonical representative; throws RingError for non-elements.
  Scalar normalize(const Scalar& x) const;
  bool contains(const Scalar& x) const;

  std::string name() const;

  bool operator==(const Ring& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  Ring(Kind kind, const mpz_class& modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  mpz_class modulus_;
};

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace fpcat
