#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "greenring/context.hpp"
#include "greenring/decompose.hpp"
#include "greenring/element.hpp"
#include "greenring/gfp_matrix.hpp"

namespace greenring {

/// Memoized basis products V_a V_b for one ring, each obtained by
/// decomposing the Kronecker product of the two Jordan blocks. Entries are
/// filled on first use; lookups may come from several threads.
class ProductTable {
 public:
  using Terms = std::vector<std::pair<std::int64_t, std::int64_t>>;

  explicit ProductTable(const RingContext& ctx)
      : ctx_(ctx), entries_(static_cast<std::size_t>(ctx.order() * (ctx.order() + 1) / 2)) {}

  const RingContext& context() const noexcept { return ctx_; }

  /// Decomposition of V_a V_b as (index, multiplicity) pairs.
  const Terms& product(std::int64_t a, std::int64_t b) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > ctx_.order()) {
      fail(ErrorKind::index_out_of_range, "product table index outside 1..p^nu");
    }
    auto& slot = entries_[static_cast<std::size_t>((b - 1) * b / 2 + (a - 1))];
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (slot) return *slot;
    }
    Terms terms;
    const auto report = decompose(ctx_, tensor(realize(ctx_, a), realize(ctx_, b)));
    for (const auto& [r, k] : report.multiplicities) terms.emplace_back(r, k);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!slot) slot = std::move(terms);
    return *slot;
  }

  /// Fills every entry.
  void fill() {
    for (std::int64_t b = 1; b <= ctx_.order(); ++b) {
      for (std::int64_t a = 1; a <= b; ++a) product(a, b);
    }
  }

  /// Process-wide table for the given ring.
  static ProductTable& shared(const RingContext& ctx) {
    static std::mutex registry_mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<ProductTable>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& entry = registry[{ctx.p(), ctx.nu()}];
    if (!entry) entry = std::make_unique<ProductTable>(ctx);
    return *entry;
  }

 private:
  RingContext ctx_;
  std::mutex mutex_;
  std::vector<std::optional<Terms>> entries_;
};

/// Ring product, the bilinear extension of the basis product table.
inline GreenElement multiply(const GreenElement& a, const GreenElement& b) {
  require_same_context(a, b);
  const auto& ctx = a.context();
  auto& table = ProductTable::shared(ctx);
  GreenElement out(ctx);
  const auto lhs = a.terms();
  const auto rhs = b.terms();
  for (const auto& [i, x] : lhs) {
    for (const auto& [j, y] : rhs) {
      const auto xy = checked::mul(x, y);
      for (const auto& [r, k] : table.product(i, j)) out.accumulate(r, checked::mul(xy, k));
    }
  }
  return out;
}

inline GreenElement operator*(const GreenElement& a, const GreenElement& b) { return multiply(a, b); }

/// a^n under the ring product, with a^0 = V_1.
inline GreenElement power(const GreenElement& a, std::int64_t n) {
  if (n < 0) fail(ErrorKind::domain, "negative exponent");
  auto out = one(a.context());
  for (std::int64_t i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

}  // namespace greenring
