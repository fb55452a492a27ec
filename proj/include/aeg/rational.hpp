#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace aeg {

__extension__ using wide_int = __int128;

/// Exact rational number over 64-bit integers, always stored in lowest terms
/// with a positive denominator. Arithmetic goes through 128-bit intermediates
/// and throws std::overflow_error if a reduced result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const;
  std::int64_t ceil() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Always "P/Q", e.g. "1/1" or "-7/2".
  std::string str() const;

  /// Accepts "P/Q" or a plain integer "P"; surrounding whitespace is not allowed.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational extended with -inf and +inf: the codomain of every game value.
class ExtendedRational {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtendedRational(Rational r) : kind_(Kind::Finite), value_(r) {}  // NOLINT
  ExtendedRational(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Throws std::logic_error on an infinite value.
  const Rational& finite() const;

  ExtendedRational operator-() const;
  /// Shifts a value by a finite amount; infinities absorb.
  friend ExtendedRational operator+(const ExtendedRational& a, const Rational& b);

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  /// "P/Q", "inf" or "-inf".
  std::string str() const;

 private:
  explicit ExtendedRational(Kind k) : kind_(k) {}

  Kind kind_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

}  // namespace aeg
