#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathuniq/core.hpp"

namespace pathuniq {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// C(n, k), with C(n, k) = 0 whenever n < k or either argument is negative.
inline BigInt binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || n < 0 || n < k) return 0;
  BigInt kk = k;
  if (kk > n - kk) kk = n - kk;
  BigInt r = 1;
  for (BigInt i = 1; i <= kk; ++i) {
    r *= n - kk + i;
    r /= i;
  }
  return r;
}

inline BigInt floor_rat(const BigRat& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);  // always > 0
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

// Decimal rendering of an exact rational with `sig` significant digits,
// via long division. Trailing zeros in the fraction are trimmed, so exact
// values print exactly (e.g. 5/8 -> "0.625").
inline std::string format_rational_decimal(const BigRat& x, unsigned sig = 12) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  BigInt ip = num / den;
  BigInt rem = num % den;
  std::string int_part = ip.str();
  if (rem == 0) return sign + int_part;
  unsigned frac_digits;
  if (ip == 0) {
    // significant digits start at the first nonzero fractional digit
    frac_digits = 0;
    BigInt r = rem;
    while (r * 10 < den) {
      r *= 10;
      ++frac_digits;
    }
    frac_digits += sig;
  } else {
    frac_digits = int_part.size() >= sig ? 0 : sig - static_cast<unsigned>(int_part.size());
  }
  std::string frac;
  for (unsigned i = 0; i < frac_digits && rem != 0; ++i) {
    rem *= 10;
    frac += char('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  // round half up on the digit after the last kept one
  if (rem != 0) {
    rem *= 10;
    if (rem / den >= 5) {
      int i = static_cast<int>(frac.size()) - 1;
      while (i >= 0 && frac[i] == '9') frac[i--] = '0';
      if (i >= 0) {
        ++frac[i];
      } else {
        ip += 1;
        int_part = ip.str();
      }
    }
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (frac.empty()) return sign + int_part;
  return sign + int_part + "." + frac;
}

}  // namespace pathuniq
