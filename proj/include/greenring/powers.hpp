#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenring/adams.hpp"
#include "greenring/decompose.hpp"
#include "greenring/element.hpp"
#include "greenring/error.hpp"
#include "greenring/gfp_matrix.hpp"
#include "greenring/product_table.hpp"

namespace greenring {

enum class PowerKind { exterior, symmetric };

/// Lambda^0..Lambda^n (or S^0..S^n) of one element; values[0] = V_1.
struct PowerSequence {
  PowerKind kind;
  std::vector<GreenElement> values;
};

namespace detail {

inline GreenElement divide_exact(const GreenElement& a, std::int64_t d) {
  std::vector<std::int64_t> out(a.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto c = a.coefficients()[i];
    if (c % d != 0) {
      fail(ErrorKind::internal, "power series recurrence: coefficient " + std::to_string(c) +
                                    " of V" + std::to_string(i + 1) + " is not divisible by " + std::to_string(d));
    }
    out[i] = c / d;
  }
  return GreenElement(a.context(), std::move(out));
}

inline void check_power_degree(const RingContext& ctx, std::int64_t n) {
  if (n < 1 || n >= ctx.p()) {
    fail(ErrorKind::domain, "power degree n = " + std::to_string(n) + " outside 1.." + std::to_string(ctx.p() - 1));
  }
}

}  // namespace detail

/// Exterior or symmetric powers up to degree n < p, from psi^1..psi^n via
///   i Lambda^i = sum_{j=1..i} (-1)^{j-1} psi^j(w) Lambda^{i-j}
///   i S^i      = sum_{j=1..i}            psi^j(w) S^{i-j}
/// which follow from differentiating the logarithmic generating series.
inline PowerSequence power_sequence(PowerKind kind, std::int64_t n, const GreenElement& w) {
  const auto& ctx = w.context();
  detail::check_power_degree(ctx, n);
  std::vector<GreenElement> adams;
  adams.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 1; j <= n; ++j) adams.push_back(psi(j, w));

  PowerSequence seq{kind, {one(ctx)}};
  for (std::int64_t i = 1; i <= n; ++i) {
    GreenElement acc(ctx);
    for (std::int64_t j = 1; j <= i; ++j) {
      auto term = multiply(adams[static_cast<std::size_t>(j - 1)], seq.values[static_cast<std::size_t>(i - j)]);
      const bool negative = kind == PowerKind::exterior && j % 2 == 0;
      acc = negative ? subtract(acc, term) : add(acc, term);
    }
    seq.values.push_back(detail::divide_exact(acc, i));
  }
  return seq;
}

inline GreenElement lambda_power(std::int64_t n, const GreenElement& w) {
  return power_sequence(PowerKind::exterior, n, w).values.back();
}

inline GreenElement sym_power(std::int64_t n, const GreenElement& w) {
  return power_sequence(PowerKind::symmetric, n, w).values.back();
}

inline GreenElement lambda_power(const RingContext& ctx, std::int64_t n, const GreenElement& w) {
  if (!(w.context() == ctx)) fail(ErrorKind::context_mismatch, "lambda_power: element from another ring");
  return lambda_power(n, w);
}

inline GreenElement sym_power(const RingContext& ctx, std::int64_t n, const GreenElement& w) {
  if (!(w.context() == ctx)) fail(ErrorKind::context_mismatch, "sym_power: element from another ring");
  return sym_power(n, w);
}

/// Inverts the exterior-power recurrence: given Lambda^0..Lambda^n, returns
/// psi^1..psi^n with
///   psi^i = (-1)^{i-1} (i Lambda^i - sum_{j=1..i-1} (-1)^{j-1} psi^j Lambda^{i-j}).
inline std::vector<GreenElement> adams_from_exterior_powers(const std::vector<GreenElement>& lambdas) {
  if (lambdas.empty()) fail(ErrorKind::domain, "adams_from_exterior_powers: empty sequence");
  std::vector<GreenElement> adams;
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    auto acc = scale(static_cast<std::int64_t>(i), lambdas[i]);
    for (std::size_t j = 1; j < i; ++j) {
      const auto term = multiply(adams[j - 1], lambdas[i - j]);
      acc = (j % 2 == 1) ? subtract(acc, term) : add(acc, term);
    }
    adams.push_back(i % 2 == 1 ? acc : negate(acc));
  }
  return adams;
}

/// Lambda^n(V_r) of the genuine module, by decomposing the induced action.
inline GreenElement oracle_lambda(const RingContext& ctx, std::int64_t n, std::int64_t r) {
  if (n > r) return GreenElement(ctx);
  return decompose(ctx, wedge(n, realize(ctx, r))).to_element(ctx);
}

/// S^n(V_r) of the genuine module, by decomposing the induced action.
inline GreenElement oracle_sym(const RingContext& ctx, std::int64_t n, std::int64_t r) {
  return decompose(ctx, sym(n, realize(ctx, r))).to_element(ctx);
}

struct GowLaffeyVerdict {
  bool exterior_identity = false;  // Lambda^2(V_r) = (r - (p^m+1)/2) V_{p^m} + S^2(V_{p^m-r})
  bool symmetric_identity = false; // S^2(V_r) = (r - (p^m-1)/2) V_{p^m} + Lambda^2(V_{p^m-r})

  bool ok() const noexcept { return exterior_identity && symmetric_identity; }
};

/// Reciprocity between second exterior and symmetric powers of V_r and
/// V_{p^m-r}, evaluated with the power-series layer. Requires p odd.
inline GowLaffeyVerdict check_gow_laffey(const RingContext& ctx, std::int64_t m, std::int64_t r) {
  if (ctx.p() == 2) fail(ErrorKind::not_applicable, "requires odd p");
  if (m < 1 || m > ctx.nu()) {
    fail(ErrorKind::domain, "m = " + std::to_string(m) + " outside 1.." + std::to_string(ctx.nu()));
  }
  const auto q = ctx.power(m);
  if (r < 1 || r > q) {
    fail(ErrorKind::index_out_of_range, "r = " + std::to_string(r) + " outside 1.." + std::to_string(q));
  }
  const auto vr = basis_element(ctx, r);
  const auto vc = basis_element(ctx, q - r);
  const auto vq = basis_element(ctx, q);
  GowLaffeyVerdict verdict;
  verdict.exterior_identity = lambda_power(2, vr) == add(scale(r - (q + 1) / 2, vq), sym_power(2, vc));
  verdict.symmetric_identity = sym_power(2, vr) == add(scale(r - (q - 1) / 2, vq), lambda_power(2, vc));
  return verdict;
}

}  // namespace greenring
