#include "conjgen/cyclo.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace conjgen {

namespace cyclo_detail {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

namespace {

std::vector<long> compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long> quot(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const long c = poly[i];
      if (c == 0) continue;
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<const std::vector<long>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<const std::vector<long>>(compute_cyclotomic(n));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return *it->second;
}

}  // namespace cyclo_detail

namespace {

using cyclo_detail::cyclotomic_polynomial;
using cyclo_detail::euler_phi;
using cyclo_detail::prime_factors;

long long mod(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long long inverse_mod(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    long long q = g / r;
    long long t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  return mod(x, m);
}

long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

unsigned primitive_root(unsigned p) {
  if (p == 2) return 1;
  const auto qs = prime_factors(p - 1);
  for (unsigned g = 2;; ++g) {
    bool ok = true;
    for (unsigned q : qs) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

/// Remainder of sum dense[k] x^k modulo Phi_n; result has length phi(n).
std::vector<mpq_class> reduce(unsigned n, std::vector<mpq_class> dense) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (sgn(dense[i]) == 0) continue;
    const mpq_class c = dense[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi_poly[j] != 0) dense[i - deg + j] -= c * phi_poly[j];
    }
  }
  dense.resize(deg);
  return dense;
}

bool all_zero(const std::vector<mpq_class>& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

/// Generator k of {k mod n : k = 1 mod n/p, gcd(k, n) = 1}; its fixed field
/// inside Q(zeta_n) is Q(zeta_{n/p}).
unsigned subfield_generator(unsigned n, unsigned p) {
  const unsigned m = n / p;
  if (m % p == 0) return (1 + m) % n;
  const unsigned g = primitive_root(p);
  // k = 1 + m t with m t = g - 1 (mod p)
  const long long t = mod(static_cast<long long>(g - 1) * inverse_mod(m, p), p);
  return static_cast<unsigned>((1 + static_cast<long long>(m) * t) % n);
}

/// Rewrites an element of Q(zeta_n) known to lie in Q(zeta_{n/p}) as an
/// unreduced power sum in zeta_{n/p}, via the relative trace.
std::vector<mpq_class> descend(unsigned n, unsigned p, const std::vector<mpq_class>& r) {
  const unsigned m = n / p;
  std::vector<mpq_class> out(m);
  if (m % p == 0) {
    for (std::size_t j = 0; j < r.size(); j += p) out[j / p] += r[j];
    return out;
  }
  const long long pinv = m == 1 ? 0 : inverse_mod(p, m);
  const long long minv = inverse_mod(m, p);
  const mpq_class off(-1, p - 1);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (sgn(r[j]) == 0) continue;
    const long long a = m == 1 ? 0 : mod(static_cast<long long>(j) * pinv, m);
    const long long b = mod(static_cast<long long>(j) * minv, p);
    if (b == 0)
      out[a] += r[j];
    else
      out[a] += r[j] * off;
  }
  return out;
}

}  // namespace

CycloValue CycloValue::from_powers(unsigned n, std::vector<mpq_class> dense) {
  if (n == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
  for (auto& c : dense) c.canonicalize();
  for (;;) {
    std::vector<mpq_class> r = reduce(n, std::move(dense));
    if (all_zero(r)) return CycloValue();
    if (n == 1) return CycloValue(1, std::move(r));
    bool lowered = false;
    for (unsigned p : prime_factors(n)) {
      const unsigned k = subfield_generator(n, p);
      bool fixed = k == 1;
      if (!fixed) {
        std::vector<mpq_class> img(n);
        for (std::size_t j = 0; j < r.size(); ++j)
          if (sgn(r[j]) != 0) img[(j * k) % n] = r[j];
        fixed = reduce(n, std::move(img)) == r;
      }
      if (fixed) {
        dense = descend(n, p, r);
        n /= p;
        lowered = true;
        break;
      }
    }
    if (!lowered) return CycloValue(n, std::move(r));
  }
}

namespace cyclo_detail {

std::vector<mpq_class> embed(const CycloValue& a, unsigned n) {
  const unsigned d = a.conductor();
  if (n == 0 || n % d != 0) throw std::invalid_argument("conductor does not divide target field");
  std::vector<mpq_class> dense(n);
  const auto& c = a.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) dense[k * (n / d)] = c[k];
  return reduce(n, std::move(dense));
}

}  // namespace cyclo_detail

bool CycloValue::is_zero() const { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }

CycloValue CycloValue::operator-() const {
  CycloValue r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloValue& CycloValue::operator+=(const CycloValue& rhs) {
  if (conductor_ == 1 && rhs.conductor_ == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const unsigned l = std::lcm(conductor_, rhs.conductor_);
  std::vector<mpq_class> dense(l);
  const unsigned s1 = l / conductor_, s2 = l / rhs.conductor_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) dense[j * s1] += coeffs_[j];
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) dense[j * s2] += rhs.coeffs_[j];
  *this = from_powers(l, std::move(dense));
  return *this;
}

CycloValue& CycloValue::operator-=(const CycloValue& rhs) { return *this += -rhs; }

CycloValue& CycloValue::operator*=(const CycloValue& rhs) {
  if (conductor_ == 1 && rhs.conductor_ == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  const unsigned l = std::lcm(conductor_, rhs.conductor_);
  std::vector<mpq_class> dense(l);
  const unsigned s1 = l / conductor_, s2 = l / rhs.conductor_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      dense[(i * s1 + j * s2) % l] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  *this = from_powers(l, std::move(dense));
  return *this;
}

CycloValue& CycloValue::operator/=(const CycloValue& rhs) { return *this *= inverse(rhs); }

bool operator==(const CycloValue& a, const CycloValue& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

CycloValue root_of_unity(unsigned n, long k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  std::vector<mpq_class> dense(n);
  dense[static_cast<std::size_t>(mod(k, n))] = 1;
  return CycloValue::from_powers(n, std::move(dense));
}

CycloValue galois(const CycloValue& a, long k) {
  const unsigned n = a.conductor();
  if (n == 1) return a;
  if (std::gcd(mod(k, n), static_cast<long long>(n)) != 1)
    throw std::invalid_argument("galois: exponent not coprime to the conductor");
  const long long kk = mod(k, n);
  std::vector<mpq_class> dense(n);
  const auto& c = a.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) dense[(j * kk) % n] += c[j];
  return CycloValue::from_powers(n, std::move(dense));
}

CycloValue conjugate(const CycloValue& a) { return galois(a, -1); }

CycloValue inverse(const CycloValue& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (a.is_rational()) return CycloValue(mpq_class(1) / a.coefficients()[0]);
  // a^-1 = (prod_{k != 1} sigma_k(a)) / N(a)
  const unsigned n = a.conductor();
  CycloValue others(1);
  for (unsigned k = 2; k < n; ++k)
    if (std::gcd(k, n) == 1) others *= galois(a, k);
  const auto norm = to_rational(a * others);
  return others * CycloValue(mpq_class(1) / *norm);
}

std::optional<mpq_class> to_rational(const CycloValue& a) {
  if (!a.is_rational()) return std::nullopt;
  return a.coefficients()[0];
}

std::string to_string(const CycloValue& a) {
  const auto& c = a.coefficients();
  std::string out;
  const std::string root = "E(" + std::to_string(a.conductor()) + ")";
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int s = sgn(c[k]);
    if (s == 0) continue;
    const mpq_class mag = abs(c[k]);
    if (!out.empty())
      out += s < 0 ? "-" : "+";
    else if (s < 0)
      out += "-";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += root;
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycloValue& a) { return os << to_string(a); }

namespace {

class ValueParser {
 public:
  explicit ValueParser(std::string_view text) : s_(text) {}

  CycloValue parse() {
    skip();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
    }
    term(sign);
    for (skip(); !at_end(); skip()) {
      const char c = get();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      term(c == '-' ? -1 : 1);
    }
    unsigned l = 1;
    for (const auto& t : terms_) l = std::lcm(l, t.n);
    std::vector<mpq_class> dense(l);
    for (const auto& t : terms_)
      dense[static_cast<std::size_t>(mod(t.k, t.n)) * (l / t.n)] += t.coeff;
    return CycloValue::from_powers(l, std::move(dense));
  }

 private:
  struct Term {
    mpq_class coeff;
    unsigned n;
    long k;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw ValueSyntaxError(pos_, msg); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  long signed_small() {
    skip();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) neg = get() == '-';
    const mpz_class v = integer();
    if (!v.fits_slong_p()) fail("exponent out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  void root(mpq_class coeff) {
    const std::size_t at = pos_;
    expect('E');
    expect('(');
    const mpz_class n = integer();
    if (n == 0) throw ValueSyntaxError(at, "conductor 0");
    if (n > 1000000) throw ValueSyntaxError(at, "conductor too large");
    expect(')');
    long k = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      k = signed_small();
    }
    terms_.push_back({std::move(coeff), static_cast<unsigned>(n.get_ui()), k});
  }

  void term(int sign) {
    skip();
    if (at_end()) fail("expected a term");
    if (peek() == 'E') {
      root(mpq_class(sign));
      return;
    }
    mpz_class num = integer();
    mpz_class den = 1;
    skip();
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) throw ValueSyntaxError(at, "zero denominator");
    }
    mpq_class q(num * sign, den);
    q.canonicalize();
    skip();
    if (!at_end() && peek() == '*') {
      ++pos_;
      root(std::move(q));
      return;
    }
    terms_.push_back({std::move(q), 1, 0});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<Term> terms_;
};

}  // namespace

CycloValue parse_value(std::string_view text) { return ValueParser(text).parse(); }

}  // namespace conjgen
