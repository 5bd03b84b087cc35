#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace odz {

// Exact value num / 2^exp kept canonical: num is odd, or num == 0 and exp == 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) { canonicalize(); }  // NOLINT: integers embed implicitly
  Dyadic(mpz_class num, unsigned long exp);

  const mpz_class& num() const { return num_; }
  unsigned long exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  // Multiply by 2^shift; shift may be negative.
  Dyadic scaled(long shift) const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(const Dyadic& other);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  mpz_class num_ = 0;
  unsigned long exp_ = 0;
};

// Least k with 2^k * d integral.
inline unsigned long lde(const Dyadic& d) { return d.exp(); }

// Accepts INT, INT/2^NAT and INT/POW2INT, e.g. "-3", "3/2^2", "3/4".
Dyadic parse_dyadic(std::string_view text);

// Renders INT when integral, otherwise NUM/2^EXP.
std::string to_string(const Dyadic& d);

}  // namespace odz
