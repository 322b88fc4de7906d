#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "greenring/context.hpp"
#include "greenring/error.hpp"

namespace greenring {

/// Dense square-or-rectangular matrix over GF(p); entries kept in 0..p-1.
class MatrixGFp {
 public:
  MatrixGFp(std::int64_t p, std::size_t rows, std::size_t cols)
      : p_(static_cast<std::uint32_t>(p)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static MatrixGFp identity(std::int64_t p, std::size_t n) {
    MatrixGFp out(p, n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
  }

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, std::int64_t v) {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    entries_[i * cols_ + j] = static_cast<std::uint32_t>(r);
  }

  friend bool operator==(const MatrixGFp& a, const MatrixGFp& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
};

inline MatrixGFp operator*(const MatrixGFp& a, const MatrixGFp& b) {
  if (a.cols() != b.rows() || a.prime() != b.prime()) {
    fail(ErrorKind::domain, "matrix product: incompatible shapes or fields");
  }
  const std::uint64_t p = a.prime();
  MatrixGFp out(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j)) % p;
      }
      out.set(i, j, static_cast<std::int64_t>(acc));
    }
  }
  return out;
}

namespace detail {

inline void require_oracle_capacity(std::int64_t size, const char* what) {
  const auto cap = oracle_cap();
  if (size < 0 || size > cap) {
    fail(ErrorKind::oracle_capacity, std::string(what) + ": induced dimension " +
                                         (size < 0 ? std::string("(overflow)") : std::to_string(size)) +
                                         " exceeds oracle cap " + std::to_string(cap));
  }
}

/// Binomial coefficient, saturating to -1 on overflow.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    std::int64_t next;
    if (__builtin_mul_overflow(out, n - k + i, &next)) return -1;
    out = next / i;
  }
  return out;
}

using Tuple = std::vector<std::size_t>;

/// All strictly increasing (or non-decreasing) n-tuples from 0..d-1 in
/// lexicographic order.
inline std::vector<Tuple> index_tuples(std::size_t d, std::size_t n, bool strict) {
  std::vector<Tuple> out;
  Tuple cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, strict ? i + 1 : i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Expands the product of the images of basis vectors `cols` of `a` in the
/// exterior (strict) or symmetric algebra, returning tuple -> coefficient.
inline std::map<Tuple, std::uint64_t> expand_product(const MatrixGFp& a, const Tuple& cols, bool exterior) {
  const std::uint64_t p = a.prime();
  std::map<Tuple, std::uint64_t> terms{{Tuple{}, 1}};
  for (auto c : cols) {
    std::map<Tuple, std::uint64_t> next;
    for (const auto& [t, coef] : terms) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t v = a.at(i, c);
        if (v == 0) continue;
        auto pos = std::lower_bound(t.begin(), t.end(), i);
        std::uint64_t term = coef * v % p;
        if (exterior) {
          if (pos != t.end() && *pos == i) continue;
          // e_T ^ e_i: move e_i past every larger index already in T.
          const auto larger = static_cast<std::size_t>(t.end() - pos);
          if (larger % 2 == 1) term = (p - term) % p;
        }
        Tuple u = t;
        u.insert(u.begin() + (pos - t.begin()), i);
        auto& slot = next[u];
        slot = (slot + term) % p;
      }
    }
    terms.clear();
    for (auto& [t, coef] : next) {
      if (coef != 0) terms.emplace(t, coef);
    }
  }
  return terms;
}

inline MatrixGFp induced_power(std::size_t n, const MatrixGFp& a, bool exterior) {
  if (a.rows() != a.cols()) fail(ErrorKind::domain, "induced power of a non-square matrix");
  const auto d = static_cast<std::int64_t>(a.rows());
  const auto size = exterior ? binomial(d, static_cast<std::int64_t>(n))
                             : binomial(d + static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n));
  require_oracle_capacity(size, exterior ? "wedge" : "sym");
  const auto basis = index_tuples(a.rows(), n, exterior);
  std::map<Tuple, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);

  MatrixGFp out(a.prime(), basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (const auto& [t, coef] : expand_product(a, basis[col], exterior)) {
      out.set(position.at(t), col, static_cast<std::int64_t>(coef));
    }
  }
  return out;
}

}  // namespace detail

/// Unipotent Jordan block J_r(1) with ones on the superdiagonal.
inline MatrixGFp realize(const RingContext& ctx, std::int64_t r) {
  if (r < 1 || r > ctx.order()) {
    fail(ErrorKind::index_out_of_range,
         "module index " + std::to_string(r) + " outside 1.." + std::to_string(ctx.order()));
  }
  const auto n = static_cast<std::size_t>(r);
  auto out = MatrixGFp::identity(ctx.p(), n);
  for (std::size_t i = 0; i + 1 < n; ++i) out.set(i, i + 1, 1);
  return out;
}

/// Kronecker product: the action on the tensor product of the two modules.
inline MatrixGFp tensor(const MatrixGFp& a, const MatrixGFp& b) {
  if (a.prime() != b.prime()) fail(ErrorKind::domain, "tensor: matrices over different fields");
  const auto rows = static_cast<std::int64_t>(a.rows() * b.rows());
  const auto cols = static_cast<std::int64_t>(a.cols() * b.cols());
  detail::require_oracle_capacity(std::max(rows, cols), "tensor");
  const std::uint64_t p = a.prime();
  MatrixGFp out(a.prime(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint64_t x = a.at(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const std::uint64_t y = b.at(k, l);
          if (y != 0) out.set(i * b.rows() + k, j * b.cols() + l, static_cast<std::int64_t>(x * y % p));
        }
      }
    }
  }
  return out;
}

/// Induced action on the n-th exterior power, basis e_{i1}^...^e_{in} with
/// i1 < ... < in in lexicographic order.
inline MatrixGFp wedge(std::int64_t n, const MatrixGFp& a) {
  if (n < 0 || n > static_cast<std::int64_t>(a.rows())) {
    fail(ErrorKind::domain, "wedge degree " + std::to_string(n) + " outside 0.." + std::to_string(a.rows()));
  }
  return detail::induced_power(static_cast<std::size_t>(n), a, true);
}

/// Induced action on the n-th symmetric power, basis monomials with
/// non-decreasing index tuples in lexicographic order.
inline MatrixGFp sym(std::int64_t n, const MatrixGFp& a) {
  if (n < 0) fail(ErrorKind::domain, "sym degree must be non-negative");
  return detail::induced_power(static_cast<std::size_t>(n), a, false);
}

}  // namespace greenring
