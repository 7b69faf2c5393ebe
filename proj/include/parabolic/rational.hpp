#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace parabolic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for every violation of a domain precondition or validation rule.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p/q in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(num), Integer(den));
}

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
/// Fractional part in [0,1).
Rational frac_of(const Rational& q);
bool is_integral(const Rational& q);

/// Always "p/q", e.g. "3/1" or "-1/2".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p/q" or "p"; throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Binomial coefficient C(n, k) for 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace parabolic
