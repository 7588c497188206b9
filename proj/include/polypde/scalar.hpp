#ifndef POLYPDE_SCALAR_HPP
#define POLYPDE_SCALAR_HPP

// Exact scalars: arbitrary-precision rationals and the Gaussian rationals
// Q(i).  Every coefficient, matrix entry, and evaluation in the library is a
// gaussian_rational; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace polypde {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// a + b*i with a, b rational.  cpp_rational keeps both parts canonical
// (reduced, positive denominator) automatically.
class gaussian_rational {
 public:
  gaussian_rational() = default;
  gaussian_rational(int n) : re_(n) {}                // NOLINT(runtime/explicit)
  gaussian_rational(big_int n) : re_(std::move(n)) {} // NOLINT(runtime/explicit)
  gaussian_rational(rational re) : re_(std::move(re)) {}
  gaussian_rational(rational re, rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static gaussian_rational i() { return {rational(0), rational(1)}; }

  const rational& re() const { return re_; }
  const rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  friend gaussian_rational operator+(const gaussian_rational& a,
                                     const gaussian_rational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend gaussian_rational operator-(const gaussian_rational& a,
                                     const gaussian_rational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  gaussian_rational operator-() const { return {-re_, -im_}; }
  friend gaussian_rational operator*(const gaussian_rational& a,
                                     const gaussian_rational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }

  gaussian_rational inverse() const {
    if (is_zero()) throw division_by_zero();
    rational n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
  }
  friend gaussian_rational operator/(const gaussian_rational& a,
                                     const gaussian_rational& b) {
    return a * b.inverse();
  }

  gaussian_rational& operator+=(const gaussian_rational& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  gaussian_rational& operator-=(const gaussian_rational& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  gaussian_rational& operator*=(const gaussian_rational& b) {
    return *this = *this * b;
  }
  gaussian_rational& operator/=(const gaussian_rational& b) {
    return *this = *this / b;
  }

  friend bool operator==(const gaussian_rational& a,
                         const gaussian_rational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const gaussian_rational& a,
                         const gaussian_rational& b) {
    return !(a == b);
  }

 private:
  rational re_, im_;
};

// (sign*i)^exponent for exponent >= 0, sign in {+1, -1}.  Period 4.
inline gaussian_rational i_power(long exponent, int sign) {
  switch (exponent & 3) {
    case 0: return 1;
    case 1: return {rational(0), rational(sign)};
    case 2: return -1;
    default: return {rational(0), rational(-sign)};
  }
}

// --- text form ---------------------------------------------------------
//
//   scalar   := sign? ("i" | rational ("i")?) (sign ("i" | rational "i"))?
//   rational := int ("/" posint)?
//
// The real part, when present, precedes the imaginary part.  format_scalar
// emits the shortest matching form: "0", "-2", "3/2", "i", "-i", "5i",
// "3/2-1/2i", "1+i".  parse_scalar(format_scalar(z)) == z.

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& p) {
  while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}

inline big_int parse_digits(std::string_view s, std::size_t& p) {
  std::size_t start = p;
  while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
  if (p == start) throw parse_error("expected digits", start);
  return big_int(std::string(s.substr(start, p - start)));
}

inline rational parse_rational_body(std::string_view s, std::size_t& p) {
  big_int num = parse_digits(s, p);
  skip_ws(s, p);
  if (p < s.size() && s[p] == '/') {
    std::size_t slash = p;
    ++p;
    skip_ws(s, p);
    big_int den = parse_digits(s, p);
    if (den == 0) throw parse_error("zero denominator", slash + 1);
    return rational(num, den);
  }
  return rational(num);
}

}  // namespace detail

inline gaussian_rational parse_scalar(std::string_view text) {
  std::size_t p = 0;
  rational re = 0, im = 0;
  bool saw_imag = false;

  auto read_part = [&](bool first) {
    detail::skip_ws(text, p);
    int sign = 1;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) {
      if (first && text[p] == '+') throw parse_error("unexpected '+'", p);
      sign = text[p] == '-' ? -1 : 1;
      ++p;
      detail::skip_ws(text, p);
    }
    if (p < text.size() && text[p] == 'i') {
      ++p;
      if (saw_imag) throw parse_error("duplicate imaginary part", p - 1);
      im = sign;
      saw_imag = true;
      return;
    }
    std::size_t start = p;
    rational r = detail::parse_rational_body(text, p);
    detail::skip_ws(text, p);
    if (p < text.size() && text[p] == 'i') {
      ++p;
      if (saw_imag) throw parse_error("duplicate imaginary part", start);
      im = sign * r;
      saw_imag = true;
    } else {
      if (!first || saw_imag)
        throw parse_error("real part must precede imaginary part", start);
      re = sign * r;
    }
  };

  read_part(true);
  detail::skip_ws(text, p);
  if (p < text.size() && (text[p] == '+' || text[p] == '-')) {
    read_part(false);
    detail::skip_ws(text, p);
  }
  if (p != text.size()) throw parse_error("trailing characters", p);
  return {re, im};
}

inline std::string format_scalar(const gaussian_rational& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re() != 0) out += z.re().str();
  const rational& b = z.im();
  if (b != 0) {
    if (b > 0 && !out.empty()) out += '+';
    if (b == 1) {
      out += 'i';
    } else if (b == -1) {
      out += "-i";
    } else {
      out += b.str();
      out += 'i';
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const gaussian_rational& z) {
  return os << format_scalar(z);
}

}  // namespace polypde

#endif
