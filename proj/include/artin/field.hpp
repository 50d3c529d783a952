#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "artin/errors.hpp"

namespace artin {

/// Prime field GF(p), p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 101) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw PresentationError("field characteristic must be a prime below 2^31, got " +
                              std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_int(const mpz_class& v) const {
    return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), p_));
  }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw DimensionError("division by zero in " + name());
    long long t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return from_int(t);
  }

  /// Symmetric representative in (-p/2, p/2], used when printing.
  long long to_signed(Elem a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : a;
  }
  std::string to_string(Elem a) const { return std::to_string(to_signed(a)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  static bool is_prime(std::uint32_t n) {
    if (n < 4) return n >= 2;
    if (n % 2 == 0) return false;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

/// The rationals, with GMP arbitrary-precision elements.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }

  Elem from_int(long long v) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return Elem(z);
  }
  Elem from_int(const mpz_class& v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw DimensionError("division by zero in Q");
    return 1 / a;
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept Field = requires(const F f, const typename F::Elem a, long long n) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.from_int(n) } -> std::convertible_to<typename F::Elem>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

/// Exact rational numbers used for invariants such as gamma.
using Rational = mpq_class;

}  // namespace artin
