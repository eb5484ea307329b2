#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace silting {

// Scalar of the prime field F_p.  The modulus is a session-wide constant:
// it is set once (CLI flag or test setup) before any value is created and
// must not change while values are alive.  Default p = 2.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long long x) {
    long long m = static_cast<long long>(p_);
    long long r = x % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint32_t>(r);
  }

  static std::uint32_t modulus() { return p_; }
  static void set_modulus(std::uint32_t p);

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % p_); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + p_ - b.v_) % p_); }
  friend Fp operator*(Fp a, Fp b) {
    return from_raw(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.v_) * b.v_) % p_));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend std::ostream& operator<<(std::ostream& os, Fp x);

 private:
  static Fp from_raw(std::uint32_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  std::uint32_t v_;
  static std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace silting
