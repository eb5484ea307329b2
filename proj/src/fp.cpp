#include "silting/fp.hpp"

#include <ostream>

namespace silting {

std::uint32_t Fp::p_ = 2;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void Fp::set_modulus(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime");
  p_ = p;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  // extended euclid on (p, v)
  long long a = p_, b = v_, x0 = 0, x1 = 1;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

}  // namespace silting
