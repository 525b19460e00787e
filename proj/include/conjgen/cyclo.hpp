#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace conjgen {

/// Raised by parse_value; position is a byte offset into the input.
class ValueSyntaxError : public std::runtime_error {
 public:
  ValueSyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An exact element of a cyclotomic field Q(zeta_n).
///
/// The stored form is canonical: the conductor is the smallest n such that
/// the value lies in Q(zeta_n) (never n = 2 mod 4), and the coefficients are
/// those of the unique polynomial of degree < phi(n) in zeta_n, i.e. the
/// remainder modulo the n-th cyclotomic polynomial.  Two values are equal iff
/// their conductors and coefficient vectors are equal.
class CycloValue {
 public:
  CycloValue() : conductor_(1), coeffs_(1) {}
  CycloValue(long v) : conductor_(1), coeffs_{mpq_class(v)} {}  // NOLINT
  CycloValue(const mpz_class& v) : conductor_(1), coeffs_{mpq_class(v)} {}  // NOLINT
  CycloValue(const mpq_class& v) : conductor_(1), coeffs_{v} { coeffs_[0].canonicalize(); }  // NOLINT

  /// Builds the canonical form of sum_k dense[k] * zeta_n^k, k < n.
  static CycloValue from_powers(unsigned n, std::vector<mpq_class> dense);

  unsigned conductor() const noexcept { return conductor_; }

  /// Power-basis coefficients, length phi(conductor()).
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const noexcept { return conductor_ == 1; }

  CycloValue operator-() const;
  CycloValue& operator+=(const CycloValue& rhs);
  CycloValue& operator-=(const CycloValue& rhs);
  CycloValue& operator*=(const CycloValue& rhs);
  CycloValue& operator/=(const CycloValue& rhs);

  friend CycloValue operator+(CycloValue a, const CycloValue& b) { return a += b; }
  friend CycloValue operator-(CycloValue a, const CycloValue& b) { return a -= b; }
  friend CycloValue operator*(CycloValue a, const CycloValue& b) { return a *= b; }
  friend CycloValue operator/(CycloValue a, const CycloValue& b) { return a /= b; }

  friend bool operator==(const CycloValue& a, const CycloValue& b);
  friend bool operator!=(const CycloValue& a, const CycloValue& b) { return !(a == b); }

 private:
  CycloValue(unsigned n, std::vector<mpq_class> c) : conductor_(n), coeffs_(std::move(c)) {}

  unsigned conductor_;
  std::vector<mpq_class> coeffs_;
};

/// zeta_n^k with k reduced mod n.  Throws std::invalid_argument for n = 0.
CycloValue root_of_unity(unsigned n, long k);

/// Complex conjugation zeta -> zeta^-1.
CycloValue conjugate(const CycloValue& a);

/// The Galois automorphism zeta_m -> zeta_m^k of any Q(zeta_m) containing a;
/// k must be coprime to the conductor of a.
CycloValue galois(const CycloValue& a, long k);

/// Multiplicative inverse; throws std::domain_error on zero.
CycloValue inverse(const CycloValue& a);

std::optional<mpq_class> to_rational(const CycloValue& a);

/// Canonical printed form in the E(n)^k syntax; parse_value(to_string(a)) == a.
std::string to_string(const CycloValue& a);

/// Parses  expr := ['+'|'-'] term (('+'|'-') term)*
///         term := rational ['*' root] | root
///         root := 'E(' integer ')' ['^' integer]
/// Whitespace is ignored.
CycloValue parse_value(std::string_view text);

std::ostream& operator<<(std::ostream& os, const CycloValue& a);

namespace cyclo_detail {

unsigned euler_phi(unsigned n);
std::vector<unsigned> prime_factors(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// Coefficients of a in the power basis of Q(zeta_n), length phi(n); the
/// conductor of a must divide n.
std::vector<mpq_class> embed(const CycloValue& a, unsigned n);

/// Dense accumulator for sums of products in Q[x]/(x^n - 1); the image in
/// Q(zeta_n) is taken once, at the end.  Used by the character-table loops,
/// which would otherwise canonicalize every intermediate product.
class PowerAccumulator {
 public:
  explicit PowerAccumulator(unsigned n) : n_(n), acc_(n) {}

  unsigned modulus() const noexcept { return n_; }
  void add(unsigned exponent, const mpq_class& c) { acc_[exponent % n_] += c; }
  CycloValue value() const { return CycloValue::from_powers(n_, acc_); }

 private:
  unsigned n_;
  std::vector<mpq_class> acc_;
};

}  // namespace cyclo_detail

}  // namespace conjgen
