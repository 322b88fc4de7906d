#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "greenring/context.hpp"
#include "greenring/element.hpp"
#include "greenring/error.hpp"
#include "greenring/gfp_matrix.hpp"

namespace greenring {

/// Jordan decomposition of a unipotent matrix: multiplicity of each block
/// size together with the ranks of (g - I)^k that determine it.
struct DecompositionReport {
  std::map<std::int64_t, std::int64_t> multiplicities;
  std::vector<std::int64_t> rank_profile;

  GreenElement to_element(const RingContext& ctx) const {
    GreenElement out(ctx);
    for (const auto& [r, k] : multiplicities) out.accumulate(r, k);
    return out;
  }
};

namespace detail {

using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Reduction modulo a fixed p < 2^16 via a precomputed reciprocal
/// (Lemire's fastmod); valid for any 32-bit operand.
class Modulus {
 public:
  explicit Modulus(std::uint32_t p) : p_(p), m_(~std::uint64_t{0} / p + 1) {}

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::uint32_t a) const noexcept {
    const std::uint64_t low = m_ * a;
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(low) * p_) >> 64);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return reduce(a * b); }

 private:
  std::uint32_t p_;
  std::uint64_t m_;
};

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

/// Row-echelon accumulator over GF(p) for sparse vectors sorted by index.
/// Each stored vector is monic at its largest index, and no two stored
/// vectors share that leading index.
class SparseEchelon {
 public:
  SparseEchelon(std::size_t dimension, std::uint32_t p) : p_(p), mod_(p), slot_(dimension, -1) {}

  void insert(SparseVec v) {
    while (!v.empty()) {
      const auto [lead, value] = v.back();
      const auto s = slot_[lead];
      if (s < 0) {
        const auto inv = inverse_mod(value, p_);
        for (auto& e : v) e.second = mod_.mul(e.second, inv);
        slot_[lead] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(v));
        return;
      }
      v = axpy(v, p_ - value, rows_[static_cast<std::size_t>(s)]);
    }
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(std::size_t i) const noexcept { return slot_[i] >= 0; }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }

 private:
  // v + k * w
  SparseVec axpy(const SparseVec& v, std::uint32_t k, const SparseVec& w) const {
    SparseVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < v.size() || j < w.size()) {
      if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || w[j].first < v[i].first) {
        out.emplace_back(w[j].first, mod_.mul(k, w[j].second));
        ++j;
      } else {
        const auto sum = mod_.reduce(v[i].second + k * w[j].second);
        if (sum != 0) out.emplace_back(v[i].first, sum);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::uint32_t p_;
  Modulus mod_;
  std::vector<std::int64_t> slot_;
  std::vector<SparseVec> rows_;
};

/// Applies the sparse column operator to v, using a dense scratch buffer.
inline SparseVec apply_columns(const std::vector<SparseVec>& columns, const SparseVec& v, const Modulus& mod,
                               std::vector<std::uint32_t>& scratch, std::vector<char>& seen,
                               std::vector<std::uint32_t>& touched) {
  touched.clear();
  for (const auto& [j, x] : v) {
    for (const auto& [i, y] : columns[j]) {
      if (!seen[i]) {
        seen[i] = 1;
        touched.push_back(i);
      }
      scratch[i] = mod.reduce(scratch[i] + x * y);
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseVec out;
  out.reserve(touched.size());
  for (auto i : touched) {
    if (scratch[i] != 0) out.emplace_back(i, scratch[i]);
    scratch[i] = 0;
    seen[i] = 0;
  }
  return out;
}

}  // namespace detail

/// Splits the module given by `g` into indecomposables V_k. The k-th
/// multiplicity is rank(N^{k-1}) - 2 rank(N^k) + rank(N^{k+1}) with
/// N = g - I. Fails unless g is square over GF(p) and N^{p^nu} = 0, i.e.
/// g^{p^nu} = I.
///
/// The unit vectors outside the pivot set of an echelon basis of N V span a
/// complement of N V and therefore generate V as a K[N]-module, so
/// N^k V is spanned by the vectors N^j e with j >= k. One echelon pass over
/// those Krylov chains, deepest first, yields every rank.
inline DecompositionReport decompose(const RingContext& ctx, const MatrixGFp& g) {
  if (g.rows() != g.cols()) fail(ErrorKind::invalid_module, "decompose: matrix is not square");
  if (static_cast<std::int64_t>(g.prime()) != ctx.p()) {
    fail(ErrorKind::invalid_module, "decompose: matrix field does not match p");
  }
  const auto n = g.rows();
  const auto p = g.prime();
  const auto order = ctx.order();

  std::vector<detail::SparseVec> columns(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      auto v = g.at(i, j);
      if (i == j) v = (v + p - 1) % p;
      if (v != 0) columns[j].emplace_back(static_cast<std::uint32_t>(i), v);
    }
  }

  detail::SparseEchelon image(n, p);
  for (const auto& c : columns) {
    if (!c.empty()) image.insert(c);
  }

  // chains[j] holds N^j e for every generator e.
  const detail::Modulus mod(p);
  std::vector<std::uint32_t> scratch(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::vector<detail::SparseVec>> chains;
  for (std::size_t i = 0; i < n; ++i) {
    if (image.is_pivot(i)) continue;
    detail::SparseVec v{{static_cast<std::uint32_t>(i), 1U}};
    std::size_t depth = 0;
    while (!v.empty()) {
      if (static_cast<std::int64_t>(depth) >= order) {
        fail(ErrorKind::invalid_module,
             "decompose: (g - I)^" + std::to_string(order) + " is nonzero, so g^(p^nu) != I");
      }
      if (chains.size() <= depth) chains.emplace_back();
      auto next = detail::apply_columns(columns, v, mod, scratch, seen, touched);
      chains[depth].push_back(std::move(v));
      v = std::move(next);
      ++depth;
    }
  }

  std::vector<std::int64_t> profile(static_cast<std::size_t>(order) + 1, 0);
  detail::SparseEchelon span(n, p);
  for (std::size_t k = chains.size(); k-- > 0;) {
    for (auto& v : chains[k]) span.insert(std::move(v));
    profile[k] = static_cast<std::int64_t>(span.rank());
  }
  if (n > 0 && profile[0] != static_cast<std::int64_t>(n)) {
    fail(ErrorKind::internal, "decompose: Krylov chains do not span the module");
  }

  DecompositionReport report;
  report.rank_profile = profile;
  auto rank_at = [&](std::int64_t k) -> std::int64_t {
    return k <= order ? profile[static_cast<std::size_t>(k)] : 0;
  };
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= order; ++k) {
    const auto mult = rank_at(k - 1) - 2 * rank_at(k) + rank_at(k + 1);
    if (mult < 0) fail(ErrorKind::internal, "decompose: negative block multiplicity");
    if (mult > 0) report.multiplicities[k] = mult;
    total += k * mult;
  }
  if (total != static_cast<std::int64_t>(n)) {
    fail(ErrorKind::internal, "decompose: block sizes do not reconstruct the dimension");
  }
  return report;
}

}  // namespace greenring
