#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hgw {

/// Exact rational scalar used by every matrix and structure-constant
/// computation. mpq_class values are kept canonical (reduced fraction,
/// positive denominator) as long as they are produced through arithmetic
/// or make_rat().
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

/// Canonical "num/den" with the denominator always spelled out ("3/1",
/// "-1/2"). This is the wire form used in JSON payloads.
std::string rat_to_fraction_string(const Rat& q);

/// Human form: "3", "-1/2". Denominator omitted when it is 1.
std::string rat_to_string(const Rat& q);

/// Accepts both forms above.
Rat rat_from_string(const std::string& text);

}  // namespace hgw
