#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minionlab {

/// Exact arbitrary-precision rational. Always kept in canonical form
/// (reduced, positive denominator) by GMP.
using Rat = mpq_class;
using Int = mpz_class;

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  // base was canonical, so num^e / den^e already is.
  return r;
}

/// 2^-k as an exact rational.
inline Rat dyadic(unsigned long k) {
  Rat r(1);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den().get_mpz_t(), k);
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_double(const Rat& r) { return r.get_d(); }

/// Parses "p/q", "p", or a plain decimal like "0.25".
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    Int num(digits, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational: " + s);
  return r;
}

/// Three-valued verdict for inequality checks whose operands are only known
/// up to a bisection bracket.
enum class Verdict { kTrue, kFalse, kIndeterminate };

inline const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    default: return "indeterminate";
  }
}

}  // namespace minionlab
