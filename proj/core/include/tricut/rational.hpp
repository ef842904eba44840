#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tricut {

/// Exact rational number. gmpxx keeps every value canonical (reduced,
/// positive denominator), which is the only invariant the library relies on.
using Rat = mpq_class;

/// Parses "p/q", "p" or a plain integer literal. Throws PreconditionViolated
/// on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Always "p/q", including "/1" for integers.
std::string to_string(const Rat& r);

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
  Rat r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline int sign(const Rat& r) { return sgn(r); }

/// Lossy; presentation only.
inline double to_double(const Rat& r) { return r.get_d(); }

/// Largest integer <= r.
mpz_class floor(const Rat& r);

/// r mod 1, in [0, 1).
Rat frac(const Rat& r);

}  // namespace tricut
