#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greenring/context.hpp"
#include "greenring/error.hpp"

namespace greenring {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::overflow, "coefficient overflow in addition");
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) fail(ErrorKind::overflow, "coefficient overflow in subtraction");
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::overflow, "coefficient overflow in multiplication");
  return out;
}

}  // namespace checked

/// A virtual module: an integer combination of the indecomposables
/// V_1..V_{p^nu}. Stored densely; V_0 and V_{-r} are normalized away on
/// construction, so two elements are equal iff their coefficients agree.
class GreenElement {
 public:
  explicit GreenElement(const RingContext& ctx)
      : ctx_(ctx), coeffs_(static_cast<std::size_t>(ctx.order()), 0) {}

  GreenElement(const RingContext& ctx, std::vector<std::int64_t> coeffs)
      : ctx_(ctx), coeffs_(std::move(coeffs)) {
    if (static_cast<std::int64_t>(coeffs_.size()) != ctx.order()) {
      fail(ErrorKind::index_out_of_range, "coefficient vector length must equal p^nu");
    }
  }

  const RingContext& context() const noexcept { return ctx_; }

  /// Multiplicity of V_r, 1 <= r <= p^nu.
  std::int64_t coeff(std::int64_t r) const {
    check_index(r);
    return coeffs_[static_cast<std::size_t>(r - 1)];
  }

  /// Adds k * V_r, with V_0 = 0 and V_{-r} = -V_r.
  void accumulate(std::int64_t r, std::int64_t k) {
    if (r == 0 || k == 0) return;
    if (r < 0) {
      r = -r;
      k = checked::sub(0, k);
    }
    check_index(r);
    auto& slot = coeffs_[static_cast<std::size_t>(r - 1)];
    slot = checked::add(slot, k);
  }

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (auto c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Largest index with a nonzero coefficient, or 0 for the zero element.
  std::int64_t top_index() const {
    for (std::int64_t r = ctx_.order(); r >= 1; --r) {
      if (coeffs_[static_cast<std::size_t>(r - 1)] != 0) return r;
    }
    return 0;
  }

  /// Nonzero (index, coefficient) pairs in descending index order.
  std::vector<std::pair<std::int64_t, std::int64_t>> terms() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t r = ctx_.order(); r >= 1; --r) {
      const auto c = coeffs_[static_cast<std::size_t>(r - 1)];
      if (c != 0) out.emplace_back(r, c);
    }
    return out;
  }

  friend bool operator==(const GreenElement& a, const GreenElement& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_index(std::int64_t r) const {
    if (r < 1 || r > ctx_.order()) {
      fail(ErrorKind::index_out_of_range,
           "index " + std::to_string(r) + " outside 1.." + std::to_string(ctx_.order()));
    }
  }

  RingContext ctx_;
  std::vector<std::int64_t> coeffs_;
};

inline void require_same_context(const GreenElement& a, const GreenElement& b) {
  if (!(a.context() == b.context())) {
    fail(ErrorKind::context_mismatch,
         "elements live in different rings (" + a.context().label() + " vs " + b.context().label() + ")");
  }
}

/// V_r, with V_0 = 0 and V_{-r} = -V_r.
inline GreenElement basis_element(const RingContext& ctx, std::int64_t r) {
  if (r > ctx.order() || r < -ctx.order()) {
    fail(ErrorKind::index_out_of_range,
         "basis index " + std::to_string(r) + " exceeds p^nu = " + std::to_string(ctx.order()));
  }
  GreenElement out(ctx);
  out.accumulate(r, 1);
  return out;
}

inline GreenElement zero(const RingContext& ctx) { return GreenElement(ctx); }

/// The identity V_1.
inline GreenElement one(const RingContext& ctx) { return basis_element(ctx, 1); }

inline GreenElement add(const GreenElement& a, const GreenElement& b) {
  require_same_context(a, b);
  std::vector<std::int64_t> out(a.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked::add(a.coefficients()[i], b.coefficients()[i]);
  }
  return GreenElement(a.context(), std::move(out));
}

inline GreenElement scale(std::int64_t k, const GreenElement& a) {
  std::vector<std::int64_t> out(a.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked::mul(k, a.coefficients()[i]);
  }
  return GreenElement(a.context(), std::move(out));
}

inline GreenElement negate(const GreenElement& a) { return scale(-1, a); }

inline GreenElement subtract(const GreenElement& a, const GreenElement& b) {
  require_same_context(a, b);
  std::vector<std::int64_t> out(a.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked::sub(a.coefficients()[i], b.coefficients()[i]);
  }
  return GreenElement(a.context(), std::move(out));
}

inline GreenElement operator+(const GreenElement& a, const GreenElement& b) { return add(a, b); }
inline GreenElement operator-(const GreenElement& a, const GreenElement& b) { return subtract(a, b); }
inline GreenElement operator-(const GreenElement& a) { return negate(a); }
inline GreenElement operator*(std::int64_t k, const GreenElement& a) { return scale(k, a); }

/// Dimension map: sum of r * coeff(r).
inline std::int64_t dim(const GreenElement& a) {
  std::int64_t total = 0;
  for (std::int64_t r = 1; r <= a.context().order(); ++r) {
    total = checked::add(total, checked::mul(r, a.coefficients()[static_cast<std::size_t>(r - 1)]));
  }
  return total;
}

/// True iff a lies in the subring spanned by V_1..V_bound.
inline bool supported_within(const GreenElement& a, std::int64_t bound) {
  return a.top_index() <= bound;
}

/// X_m = V_{p^m+1} - V_{p^m-1}, the ring generators.
inline GreenElement generator_X(const RingContext& ctx, std::int64_t m) {
  if (m < 0 || m > ctx.nu() - 1) {
    fail(ErrorKind::domain, "generator index m = " + std::to_string(m) + " outside 0.." +
                                std::to_string(ctx.nu() - 1));
  }
  const auto q = ctx.power(m);
  GreenElement out(ctx);
  out.accumulate(q + 1, 1);
  out.accumulate(q - 1, -1);
  return out;
}

namespace detail {

inline std::int64_t require_support(const GreenElement& a, std::int64_t m, const char* what) {
  const auto q = a.context().power(m);
  if (!supported_within(a, q)) {
    fail(ErrorKind::support, std::string(what) + ": element has V_" + std::to_string(a.top_index()) +
                                 " outside R_{p^" + std::to_string(m) + "} (bound " +
                                 std::to_string(q) + ")");
  }
  return q;
}

}  // namespace detail

/// Heller translate on R_{p^m}: V_r -> V_{p^m - r}, extended linearly.
inline GreenElement heller(std::int64_t m, const GreenElement& a) {
  const auto q = detail::require_support(a, m, "heller");
  GreenElement out(a.context());
  for (std::int64_t r = 1; r <= q; ++r) {
    out.accumulate(q - r, a.coefficients()[static_cast<std::size_t>(r - 1)]);
  }
  return out;
}

/// A == B modulo the ideal Z V_{p^m} of R_{p^m}.
inline bool congruent_mod_regular(std::int64_t m, const GreenElement& a, const GreenElement& b) {
  require_same_context(a, b);
  const auto q = detail::require_support(a, m, "congruence");
  detail::require_support(b, m, "congruence");
  const auto diff = subtract(a, b);
  for (std::int64_t r = 1; r < q; ++r) {
    if (diff.coeff(r) != 0) return false;
  }
  return true;
}

/// Descending-index text form, e.g. "V5 - V3 + 2V1"; the zero element is "0".
inline std::string to_string(const GreenElement& a) {
  std::string out;
  bool first = true;
  for (const auto& [r, c] : a.terms()) {
    const auto mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += "V" + std::to_string(r);
    first = false;
  }
  return first ? "0" : out;
}

/// Parses "V5-V3+2V1" (whitespace ignored): each term is an optional signed
/// integer coefficient, the letter V, and a decimal index. "0" is the zero
/// element.
inline GreenElement parse_element(const RingContext& ctx, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto bad = [&](const std::string& why) -> GreenElement {
    fail(ErrorKind::parse, "cannot parse element '" + std::string(text) + "': " + why);
  };
  if (s.empty()) return bad("empty input");
  GreenElement out(ctx);
  if (s == "0") return out;

  auto read_number = [&](std::size_t& pos) -> std::int64_t {
    const auto start = pos;
    std::int64_t value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = checked::add(checked::mul(value, 10), s[pos] - '0');
      ++pos;
    }
    if (pos == start) bad("expected digits at position " + std::to_string(start));
    return value;
  };

  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      bad("expected '+' or '-' at position " + std::to_string(pos));
    }
    std::int64_t k = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) k = read_number(pos);
    if (pos >= s.size() || s[pos] != 'V') bad("expected 'V' at position " + std::to_string(pos));
    ++pos;
    const auto r = read_number(pos);
    if (r > ctx.order()) bad("index " + std::to_string(r) + " exceeds p^nu = " + std::to_string(ctx.order()));
    out.accumulate(r, checked::mul(sign, k));
    first = false;
  }
  return out;
}

}  // namespace greenring
