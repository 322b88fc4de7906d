#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "greenring/context.hpp"
#include "greenring/element.hpp"
#include "greenring/error.hpp"
#include "greenring/polynomial.hpp"
#include "greenring/product_table.hpp"

namespace greenring {

/// The representative of c in 1..p-1 under c ~ -c ~ c + 2p; gamma(0) = 0.
inline std::int64_t gamma(const RingContext& ctx, std::int64_t c) {
  const auto p = ctx.p();
  if (c < 0) fail(ErrorKind::domain, "gamma: argument must be non-negative");
  if (c == 0) return 0;
  if (c % p == 0) {
    fail(ErrorKind::divisibility, "gamma: " + std::to_string(c) + " is divisible by p = " + std::to_string(p));
  }
  const auto r = c % (2 * p);
  return r < p ? r : 2 * p - r;
}

/// Spreading map R_{p^m} -> R_{p^{m+1}}: V_r -> V_{i p^m + r} - V_{i p^m - r}
/// for 1 <= i <= p-1; the identity for i = 0.
inline GreenElement theta(const RingContext& ctx, std::int64_t m, std::int64_t i, const GreenElement& w) {
  if (!(w.context() == ctx)) fail(ErrorKind::context_mismatch, "theta: element from another ring");
  if (m < 0 || m > ctx.nu() - 1) {
    fail(ErrorKind::domain, "theta: m = " + std::to_string(m) + " outside 0.." + std::to_string(ctx.nu() - 1));
  }
  if (i < 0 || i > ctx.p() - 1) {
    fail(ErrorKind::domain, "theta: i = " + std::to_string(i) + " outside 0.." + std::to_string(ctx.p() - 1));
  }
  const auto q = detail::require_support(w, m, "theta");
  if (i == 0) return w;
  GreenElement out(ctx);
  const auto base = i * q;
  for (std::int64_t r = 1; r <= q; ++r) {
    const auto c = w.coefficients()[static_cast<std::size_t>(r - 1)];
    if (c == 0) continue;
    out.accumulate(base + r, c);
    out.accumulate(base - r, checked::sub(0, c));
  }
  return out;
}

/// psi_Lambda^n(X_m) = g_n(X_m), evaluated with the ring product. Valid for
/// every n >= 1, including multiples of p.
inline GreenElement adams_on_generator(const RingContext& ctx, std::int64_t n, std::int64_t m) {
  if (n < 1) fail(ErrorKind::domain, "adams_on_generator: n must be positive");
  return evaluate(dickson_g(n), generator_X(ctx, m));
}

/// Evaluates psi^n (p not dividing n) on the basis through the recursion
///   psi^n(V_s) = sum_{j = k mod 2} theta_{gamma(jn)p^m}(psi^n(V_r))
///              + sum_{j != k mod 2} theta_{gamma(jn)p^m}(psi^n(V_{p^m-r})),
/// where p^m < s <= p^{m+1}, s = k p^m + r, 1 <= r <= p^m, 0 <= j <= k.
///
/// With `reduce_degree` the degree is replaced by gamma(n) before recursing
/// and results are keyed on (gamma(n), s); otherwise on (n, s). With
/// `memoize` off nothing is cached.
class AdamsEngine {
 public:
  struct Options {
    bool reduce_degree = true;
    bool memoize = true;
  };

  explicit AdamsEngine(const RingContext& ctx) : AdamsEngine(ctx, Options{}) {}
  AdamsEngine(const RingContext& ctx, Options options) : ctx_(ctx), options_(options) {}

  const RingContext& context() const noexcept { return ctx_; }

  GreenElement on_basis(std::int64_t n, std::int64_t s) {
    check_degree(n);
    if (s < 0 || s > ctx_.order()) {
      fail(ErrorKind::index_out_of_range, "psi: basis index " + std::to_string(s) + " outside 1.." +
                                              std::to_string(ctx_.order()));
    }
    const auto key = options_.reduce_degree ? gamma(ctx_, n) : n;
    std::lock_guard<std::mutex> lock(mutex_);
    return basis_image(key, s);
  }

  GreenElement apply(std::int64_t n, const GreenElement& w) {
    if (!(w.context() == ctx_)) fail(ErrorKind::context_mismatch, "psi: element from another ring");
    check_degree(n);
    const auto key = options_.reduce_degree ? gamma(ctx_, n) : n;
    std::lock_guard<std::mutex> lock(mutex_);
    GreenElement out(ctx_);
    for (const auto& [s, c] : w.terms()) {
      out = add(out, scale(c, basis_image(key, s)));
    }
    return out;
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
  }

  /// Process-wide memoizing engine for the given ring.
  static AdamsEngine& shared(const RingContext& ctx) {
    static std::mutex registry_mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<AdamsEngine>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& entry = registry[{ctx.p(), ctx.nu()}];
    if (!entry) entry = std::make_unique<AdamsEngine>(ctx);
    return *entry;
  }

 private:
  void check_degree(std::int64_t n) const {
    if (n < 1) fail(ErrorKind::domain, "psi: n must be a positive integer");
    if (n % ctx_.p() == 0) {
      fail(ErrorKind::divisibility, "n divisible by p: out of scope");
    }
  }

  GreenElement basis_image(std::int64_t n, std::int64_t s) {
    if (s == 0) return GreenElement(ctx_);
    if (s == 1) return one(ctx_);
    if (options_.memoize) {
      auto it = cache_.find({n, s});
      if (it != cache_.end()) return it->second;
    }
    const auto m = ctx_.level(s) - 1;
    const auto q = ctx_.power(m);
    const auto k = (s - 1) / q;
    const auto r = s - k * q;
    const auto near = basis_image(n, r);
    const auto far = basis_image(n, q - r);
    GreenElement out(ctx_);
    for (std::int64_t j = 0; j <= k; ++j) {
      const auto i = gamma(ctx_, checked::mul(j, n));
      out = add(out, theta(ctx_, m, i, (j % 2 == k % 2) ? near : far));
    }
    if (options_.memoize) cache_.emplace(std::make_pair(n, s), out);
    return out;
  }

  RingContext ctx_;
  Options options_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, GreenElement> cache_;
};

/// psi^n(w) for p not dividing n, using the shared engine of w's ring.
inline GreenElement psi(std::int64_t n, const GreenElement& w) {
  return AdamsEngine::shared(w.context()).apply(n, w);
}

inline GreenElement psi(const RingContext& ctx, std::int64_t n, const GreenElement& w) {
  if (!(w.context() == ctx)) fail(ErrorKind::context_mismatch, "psi: element from another ring");
  return psi(n, w);
}

/// Clause of the alternating-form theorem that a value of psi^n(V_s) breaks.
enum class ShapeClause {
  none,
  coefficient_range,   // some multiplicity outside {-1, 0, 1}
  leading_sign,        // highest term is not +V_j
  alternation,         // signs do not alternate in descending index order
  index_bound,         // a term exceeds p^{lambda(s)}
  parity,              // parity clause (ii)
  complement,          // even n: psi(V_s) + psi(V_{p^m-s}) != V_{p^m}
  reflection,          // odd n: psi(V_{p^m-s}) is not the reflected form
};

inline const char* to_string(ShapeClause c) {
  switch (c) {
    case ShapeClause::none: return "pass";
    case ShapeClause::coefficient_range: return "coefficient outside {-1,0,1}";
    case ShapeClause::leading_sign: return "leading coefficient is not +1";
    case ShapeClause::alternation: return "signs do not alternate";
    case ShapeClause::index_bound: return "index exceeds p^lambda(s)";
    case ShapeClause::parity: return "parity clause violated";
    case ShapeClause::complement: return "paired values do not sum to V_{p^m}";
    case ShapeClause::reflection: return "paired value is not the reflected form";
  }
  return "unknown";
}

struct ShapeVerdict {
  ShapeClause clause = ShapeClause::none;
  std::string detail;

  bool ok() const noexcept { return clause == ShapeClause::none; }
};

/// Checks that `value` has the form V_{j1} - V_{j2} + ... with
/// p^{lambda(s)} >= j1 > j2 > ... >= 1, every j odd when n is even and of
/// the parity of s when n is odd. Reports the first violated clause.
inline ShapeVerdict check_alternating_shape(const RingContext& ctx, std::int64_t n, std::int64_t s,
                                            const GreenElement& value) {
  const auto terms = value.terms();
  for (const auto& [j, c] : terms) {
    if (c != 1 && c != -1) {
      return {ShapeClause::coefficient_range, "V" + std::to_string(j) + " has multiplicity " + std::to_string(c)};
    }
  }
  if (!terms.empty() && terms.front().second != 1) {
    return {ShapeClause::leading_sign, "leading term V" + std::to_string(terms.front().first) + " is negative"};
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].second == terms[i - 1].second) {
      return {ShapeClause::alternation, "V" + std::to_string(terms[i - 1].first) + " and V" +
                                            std::to_string(terms[i].first) + " carry the same sign"};
    }
  }
  const auto bound = ctx.power(ctx.level(s));
  if (!terms.empty() && terms.front().first > bound) {
    return {ShapeClause::index_bound,
            "V" + std::to_string(terms.front().first) + " exceeds p^lambda(s) = " + std::to_string(bound)};
  }
  for (const auto& [j, c] : terms) {
    const bool good = (n % 2 == 0) ? (j % 2 == 1) : (j % 2 == s % 2);
    if (!good) return {ShapeClause::parity, "V" + std::to_string(j) + " has the wrong parity"};
  }
  return {};
}

/// Computes psi^n(V_s) and checks its alternating form.
inline ShapeVerdict verify_alternating_shape(const RingContext& ctx, std::int64_t n, std::int64_t s) {
  if (s < 1 || s > ctx.order()) {
    fail(ErrorKind::index_out_of_range, "shape check: s outside 1..p^nu");
  }
  return check_alternating_shape(ctx, n, s, AdamsEngine::shared(ctx).on_basis(n, s));
}

/// Paired forms of psi^n(V_s) and psi^n(V_{p^m - s}) for 1 <= s <= p^m.
/// n even: the two sum to V_{p^m}, and the one free of V_{p^m} is an
/// alternating sum of odd indices below p^m. n odd: psi^n(V_s) =
/// V_{j1} - V_{j2} + ... + V_{jl} with l odd and every j of the parity of s
/// (the last j may be 0 when s is even), and psi^n(V_{p^m-s}) is the
/// reflected sum V_{p^m-jl} - ... + V_{p^m-j1}.
inline ShapeVerdict verify_paired_forms(const RingContext& ctx, std::int64_t n, std::int64_t m, std::int64_t s) {
  const auto q = ctx.power(m);
  if (s < 1 || s > q) fail(ErrorKind::index_out_of_range, "corollary check: s outside 1..p^m");
  auto& engine = AdamsEngine::shared(ctx);
  const auto a = engine.on_basis(n, s);
  const auto b = engine.on_basis(n, q - s);
  if (n % 2 == 0) {
    if (!(add(a, b) == basis_element(ctx, q))) {
      return {ShapeClause::complement, "psi(V_s) + psi(V_{p^m-s}) != V_{p^m}"};
    }
    const auto& lower = a.coeff(q) == 0 ? a : b;
    auto verdict = check_alternating_shape(ctx, n, q, lower);
    if (!verdict.ok()) return verdict;
    if (lower.top_index() >= q) return {ShapeClause::index_bound, "term V_{p^m} in the lower form"};
    return {};
  }
  auto verdict = check_alternating_shape(ctx, n, s, a);
  if (!verdict.ok()) return verdict;
  // An even count is allowed only when the final term is V_0, which needs s even.
  if (a.terms().size() % 2 == 0 && s % 2 == 1) return {ShapeClause::alternation, "even number of terms"};
  if (a.top_index() > q) return {ShapeClause::index_bound, "term above p^m"};
  // The implicit final term V_0 reflects to V_{p^m}.
  auto reflected = heller(m, a);
  if (a.terms().size() % 2 == 0) reflected.accumulate(q, 1);
  if (!(b == reflected)) {
    return {ShapeClause::reflection, "psi(V_{p^m-s}) is not the reflected form of psi(V_s)"};
  }
  return {};
}

}  // namespace greenring
