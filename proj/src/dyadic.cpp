#include "odz/dyadic.hpp"

#include <cctype>

#include "odz/error.hpp"

namespace odz {

Dyadic::Dyadic(mpz_class num, unsigned long exp) : num_(std::move(num)), exp_(exp) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  unsigned long twos = mpz_scan1(num_.get_mpz_t(), 0);
  unsigned long drop = twos < exp_ ? twos : exp_;
  if (drop > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), drop);
    exp_ -= drop;
  }
}

Dyadic Dyadic::scaled(long shift) const {
  if (num_ == 0) return {};
  if (shift >= 0) {
    unsigned long s = static_cast<unsigned long>(shift);
    if (s <= exp_) return Dyadic(num_, exp_ - s);
    mpz_class n = num_;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), s - exp_);
    return Dyadic(std::move(n), 0);
  }
  return Dyadic(num_, exp_ + static_cast<unsigned long>(-shift));
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.num_ == 0) return *this;
  if (exp_ == other.exp_) {
    num_ += other.num_;
  } else if (exp_ > other.exp_) {
    mpz_class t = other.num_;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), exp_ - other.exp_);
    num_ += t;
  } else {
    mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), other.exp_ - exp_);
    num_ += other.num_;
    exp_ = other.exp_;
  }
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(const Dyadic& other) {
  num_ *= other.num_;
  exp_ += other.exp_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  Dyadic d = a - b;
  int s = sgn(d.num());
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits))
    throw ParseError("malformed dyadic '" + std::string(whole) + "': bad integer '" +
                     std::string(s) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(buf, 10);
}

}  // namespace

Dyadic parse_dyadic(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("malformed dyadic: empty token");
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_int(s, s), 0);
  mpz_class num = parse_int(trim(s.substr(0, slash)), s);
  std::string_view den = trim(s.substr(slash + 1));
  if (den.size() > 2 && den.substr(0, 2) == "2^") {
    std::string_view e = den.substr(2);
    if (!all_digits(e) || e.size() > 9)
      throw ParseError("malformed dyadic '" + std::string(s) + "': bad exponent '" +
                       std::string(e) + "'");
    return Dyadic(std::move(num), std::stoul(std::string(e)));
  }
  if (!all_digits(den))
    throw ParseError("malformed dyadic '" + std::string(s) + "': bad denominator '" +
                     std::string(den) + "'");
  mpz_class d(std::string(den), 10);
  if (d == 0 || mpz_popcount(d.get_mpz_t()) != 1)
    throw ParseError("malformed dyadic '" + std::string(s) + "': denominator " +
                     std::string(den) + " is not a power of two");
  return Dyadic(std::move(num), mpz_scan1(d.get_mpz_t(), 0));
}

std::string to_string(const Dyadic& d) {
  if (d.exp() == 0) return d.num().get_str();
  return d.num().get_str() + "/2^" + std::to_string(d.exp());
}

}  // namespace odz
