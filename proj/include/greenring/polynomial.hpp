#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "greenring/element.hpp"
#include "greenring/error.hpp"
#include "greenring/product_table.hpp"

namespace greenring {

/// Polynomial in one variable t with exact integer coefficients, stored in
/// ascending degree with trailing zeros trimmed (the zero polynomial is
/// empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial t() { return IntPolynomial({0, 1}); }

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  /// Degree, or -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  std::int64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::add(a.coeff(i), b.coeff(i));
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::sub(a.coeff(i), b.coeff(i));
    return IntPolynomial(std::move(out));
  }

  /// Multiplication by t.
  IntPolynomial shifted() const {
    if (coeffs_.empty()) return {};
    std::vector<std::int64_t> out(coeffs_.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i];
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const auto c = coeffs_[i];
      if (c == 0) continue;
      const auto mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += std::to_string(mag);
      if (i >= 1) out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

namespace detail {

inline IntPolynomial three_term(std::int64_t n, IntPolynomial prev2, IntPolynomial prev1, std::int64_t first) {
  if (n == first) return prev2;
  for (std::int64_t i = first + 2; i <= n; ++i) {
    auto next = prev1.shifted() - prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

}  // namespace detail

/// Dickson polynomials of the first kind: g_0 = 2, g_1 = t,
/// g_n = t g_{n-1} - g_{n-2}.
inline IntPolynomial dickson_g(std::int64_t n) {
  if (n < 0) fail(ErrorKind::domain, "dickson_g: n must be non-negative");
  return detail::three_term(n, IntPolynomial::constant(2), IntPolynomial::t(), 0);
}

/// Dickson polynomials of the second kind: f_{-1} = 0, f_0 = 1,
/// f_n = t f_{n-1} - f_{n-2}.
inline IntPolynomial dickson_f(std::int64_t n) {
  if (n < -1) fail(ErrorKind::domain, "dickson_f: n must be at least -1");
  return detail::three_term(n, IntPolynomial(), IntPolynomial::constant(1), -1);
}

/// Evaluates poly at x inside the Green ring (Horner's rule, constants are
/// multiples of V_1).
inline GreenElement evaluate(const IntPolynomial& poly, const GreenElement& x) {
  const auto& ctx = x.context();
  GreenElement acc(ctx);
  for (std::size_t i = poly.coefficients().size(); i-- > 0;) {
    acc = multiply(acc, x);
    acc.accumulate(1, poly.coefficients()[i]);
  }
  return acc;
}

}  // namespace greenring
