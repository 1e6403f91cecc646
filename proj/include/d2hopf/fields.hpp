#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace d2hopf {

/// Thrown for malformed scalar literals and invalid field parameters.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic trial-division primality test; p is capped at 2^31 so this
/// never runs more than ~46k iterations.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Validated arbitrary-precision integer literal: optional sign followed by
/// at least one digit. cpp_int's own constructor accepts "" as zero, which
/// would mask typos in input files.
inline boost::multiprecision::cpp_int parse_int(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer literal '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw ParseError("bad integer literal '" + s + "'");
  return boost::multiprecision::cpp_int(s);
}

/// Field of exact rationals with arbitrary-precision integer parts.
///
/// Elements are boost cpp_rational values, always normalized (lowest terms,
/// positive denominator), so equality is plain value equality.
struct RationalField {
  using Elem = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("rational: division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  /// Accepts "n" or "n/d" with optional sign, arbitrary size.
  Elem parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Elem(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational: zero denominator in '" + s + "'");
    return Elem(num, den);
  }

  std::string to_string(const Elem& a) const {
    const Int num = boost::multiprecision::numerator(a);
    const Int den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  std::string name() const { return "rational"; }
  bool operator==(const RationalField&) const { return true; }
};

/// Prime field GF(p) for an odd prime 3 <= p < 2^31.
///
/// Elements are canonical residues in [0, p); the modulus lives here in the
/// descriptor, not in the elements, so matrices stay flat uint64 arrays.
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p < 3 || p >= (1ull << 31) || !is_prime_u64(p))
      throw ParseError("gfp: modulus must be an odd prime in [3, 2^31), got " +
                       std::to_string(prime));
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_long(long v) const {
    long long m = static_cast<long long>(p);
    long long r = static_cast<long long>(v) % m;
    if (r < 0) r += m;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("gfp: division by zero");
    // Fermat: a^(p-2) mod p.
    Elem r = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = (r * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    return r;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  /// Accepts "n" or "n/d"; values of any size are reduced mod p.
  Elem parse(const std::string& s) const {
    using Int = boost::multiprecision::cpp_int;
    auto reduce = [&](const std::string& t) -> Elem {
      Int m = parse_int(t) % p;
      if (m < 0) m += p;
      return m.convert_to<Elem>();
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return reduce(s);
    Elem num = reduce(s.substr(0, slash));
    Elem den = reduce(s.substr(slash + 1));
    if (den == 0)
      throw ParseError("gfp: denominator divisible by p in '" + s + "'");
    return div(num, den);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  std::string name() const { return "gfp:" + std::to_string(p); }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace d2hopf
