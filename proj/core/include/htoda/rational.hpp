#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace htoda {

// Exact arithmetic everywhere: Int/Rat are arbitrary-precision GMP types.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a requested computation exceeds a configured size bound
// (distinct from invalid input so the CLI can map it to its own exit code).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "num/den" form; integers print without the denominator.
inline std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "num" or "num/den". Rejects zero denominators.
inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace htoda
