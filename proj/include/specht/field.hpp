#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "specht/rational.hpp"

namespace specht {

// Field of rational numbers. Stateless; exists so linear algebra can be
// written once against a field object and reused mod p.
struct Rationals {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long long n) const { return Rational(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string str(const Elem& a) const { return a.str(); }
  std::string name() const { return "Q"; }
};

// Prime field Z/pZ with residues in [0, p). The modulus is a runtime
// parameter carried by the field object, not by each element.
struct PrimeField {
  using Elem = long long;

  long long p;

  explicit PrimeField(long long prime) : p(prime) {
    if (p < 2) throw std::domain_error("PrimeField: modulus must be >= 2");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::domain_error("PrimeField: modulus not prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long long n) const {
    long long r = n % p;
    return r < 0 ? r + p : r;
  }

  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("PrimeField: division by zero");
    // extended Euclid on (a, p); p prime so the inverse exists
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return t < 0 ? t + p : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string str(Elem a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p); }
};

// Runtime field selector used by module-level computations and the CLI.
struct FieldDesc {
  bool rational = true;
  long long p = 0;  // meaningful only when !rational

  static FieldDesc rationals() { return FieldDesc{true, 0}; }
  static FieldDesc prime(long long p) { return FieldDesc{false, p}; }

  std::string name() const {
    return rational ? "Q" : "F" + std::to_string(p);
  }
};

}  // namespace specht
