#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "greenring/error.hpp"

namespace greenring {

namespace detail {

inline std::atomic<std::int64_t>& order_cap_slot() {
  static std::atomic<std::int64_t> cap{1024};
  return cap;
}

inline std::atomic<std::int64_t>& oracle_cap_slot() {
  static std::atomic<std::int64_t> cap{20000};
  return cap;
}

}  // namespace detail

/// Largest group order p^nu accepted when constructing a RingContext.
inline std::int64_t order_cap() { return detail::order_cap_slot().load(); }
inline void set_order_cap(std::int64_t cap) { detail::order_cap_slot().store(cap); }

/// Largest matrix dimension the GF(p) oracle will build.
inline std::int64_t oracle_cap() { return detail::oracle_cap_slot().load(); }
inline void set_oracle_cap(std::int64_t cap) { detail::oracle_cap_slot().store(cap); }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Integer power with overflow detection; base and exponent non-negative.
inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      fail(ErrorKind::overflow, "integer power overflows 64 bits");
    }
  }
  return result;
}

/// The pair (p, nu) selecting the Green ring of the cyclic group of order
/// p^nu in characteristic p.
class RingContext {
 public:
  RingContext(std::int64_t p, std::int64_t nu) : p_(p), nu_(nu) {
    if (!is_prime(p)) {
      fail(ErrorKind::invalid_context, "p = " + std::to_string(p) + " is not prime");
    }
    if (nu < 1) {
      fail(ErrorKind::invalid_context, "nu must be at least 1");
    }
    const std::int64_t cap = order_cap();
    order_ = 1;
    for (std::int64_t i = 0; i < nu; ++i) {
      order_ *= p;
      if (order_ > cap) {
        fail(ErrorKind::invalid_context,
             "group order " + std::to_string(p) + "^" + std::to_string(nu) +
                 " exceeds the order cap " + std::to_string(cap));
      }
    }
  }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t nu() const noexcept { return nu_; }
  /// p^nu, the number of indecomposables.
  std::int64_t order() const noexcept { return order_; }

  /// p^m for 0 <= m <= nu.
  std::int64_t power(std::int64_t m) const {
    if (m < 0 || m > nu_) {
      fail(ErrorKind::domain, "exponent m = " + std::to_string(m) + " outside 0.." +
                                  std::to_string(nu_));
    }
    return ipow(p_, m);
  }

  /// Smallest non-negative m with s <= p^m.
  std::int64_t level(std::int64_t s) const {
    std::int64_t m = 0;
    std::int64_t q = 1;
    while (q < s) {
      q *= p_;
      ++m;
    }
    return m;
  }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.p_ == b.p_ && a.nu_ == b.nu_;
  }

  std::string label() const {
    return "p=" + std::to_string(p_) + ",nu=" + std::to_string(nu_);
  }

 private:
  std::int64_t p_;
  std::int64_t nu_;
  std::int64_t order_;
};

}  // namespace greenring
