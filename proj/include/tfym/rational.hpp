#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tfym {

using Rational = mpq_class;

// Error taxonomy shared by every module. The C API maps these onto status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StructuralError : Error {
  using Error::Error;
};
struct CompositionError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct ConstructionError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

// Accepts "p/q", "p", with optional sign; denominator must be nonzero.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline Rational abs(const Rational& q) {
  Rational r = q;
  if (sgn(r) < 0) r = -r;
  return r;
}

// Coefficient field operations used by the templated kernels (exact or double).
template <class T>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static Rational from(const Rational& q) { return q; }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static Rational magnitude(const Rational& q) { return abs(q); }
  static double to_double(const Rational& q) { return q.get_d(); }
};

template <>
struct Field<double> {
  static constexpr bool exact = false;
  static double from(const Rational& q) { return q.get_d(); }
  static bool is_zero(double v) { return v == 0.0; }
  static double magnitude(double v) { return std::fabs(v); }
  static double to_double(double v) { return v; }
};

// Deterministic generator. Range reduction is done here rather than through
// <random> distributions so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // uniform integer in [lo, hi]
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // numerator in [-bound, bound], denominator in [1, bound]
  Rational rational(int bound);
  // nonzero variant of rational()
  Rational nonzero_rational(int bound);

 private:
  std::mt19937_64 eng_;
};

// Mixes a base seed with a stream label so sub-generators do not overlap.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace tfym
