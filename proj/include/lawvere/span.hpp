#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lawvere/error.hpp"
#include "lawvere/finset.hpp"

namespace lawvere {

/// Span of finite sets X <- T -> Y. `left` lands in the source X, `right`
/// in the target Y; the two legs share the middle T.
struct Span {
  FinMap left;   // T -> X
  FinMap right;  // T -> Y

  const FinSet& middle() const { return left.dom; }
  const FinSet& source() const { return left.cod; }
  const FinSet& target() const { return right.cod; }
};

inline Span make_span(FinMap left, FinMap right) {
  if (left.dom != right.dom) throw config_error("span legs must share their middle");
  return Span{std::move(left), std::move(right)};
}

inline Span identity_span(const FinSet& x) { return Span{identity_map(x), identity_map(x)}; }

inline Span zero_span(const FinSet& x, const FinSet& y) {
  FinSet empty = fin(0);
  return Span{FinMap{empty, x, {}}, FinMap{empty, y, {}}};
}

/// Composition via pullback of the cospan (s.right, t.left). Applies s
/// first: the result is a span from s.source() to t.target().
inline Span compose_spans(const Span& s, const Span& t) {
  if (s.target() != t.source())
    throw mismatch_error("compose_spans: target of first span differs from source of second");
  PullbackSet p = pullback(s.right, t.left);
  return Span{compose_maps(p.to_a, s.left), compose_maps(p.to_b, t.right)};
}

/// Hom-monoid addition: disjoint union of middles over shared endpoints.
inline Span add_spans(const Span& s, const Span& t) {
  if (s.source() != t.source() || s.target() != t.target())
    throw mismatch_error("add_spans: endpoint mismatch");
  return Span{copair(s.left, t.left), copair(s.right, t.right)};
}

/// Monoidal product (disjoint union on objects, block spans on morphisms).
inline Span tensor_spans(const Span& s, const Span& t) {
  return Span{coproduct_map(s.left, t.left), coproduct_map(s.right, t.right)};
}

/// Isomorphism class of a span, recorded as its fiber-count matrix:
/// entry (y, x) counts middle elements sitting over source x and target y.
/// Rows are indexed by the target, columns by the source.
class SpanClass {
public:
  SpanClass() = default;
  SpanClass(int rows, int cols, std::vector<long long> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw config_error("span class dimensions must be non-negative");
    if (static_cast<long long>(entries_.size()) != static_cast<long long>(rows) * cols)
      throw config_error("span class entry count does not match dimensions");
    for (long long e : entries_)
      if (e < 0) throw config_error("span class entries must be non-negative");
  }

  static SpanClass identity(int n) {
    std::vector<long long> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
    return SpanClass(n, n, std::move(e));
  }

  static SpanClass zero(int rows, int cols) {
    return SpanClass(rows, cols,
                     std::vector<long long>(static_cast<std::size_t>(rows) * cols, 0));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long at(int y, int x) const { return entries_[static_cast<std::size_t>(y) * cols_ + x]; }
  const std::vector<long long>& entries() const { return entries_; }

  /// Middle cardinality of any representative.
  long long total() const {
    long long s = 0;
    for (long long e : entries_) s += e;
    return s;
  }

  friend bool operator==(const SpanClass& a, const SpanClass& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const SpanClass& a, const SpanClass& b) { return !(a == b); }
  friend bool operator<(const SpanClass& a, const SpanClass& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.entries_ < b.entries_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<long long> entries_;
};

/// Fiber counts of a span.
inline SpanClass span_matrix(const Span& s) {
  const int rows = s.target().size, cols = s.source().size;
  std::vector<long long> e(static_cast<std::size_t>(rows) * cols, 0);
  for (int m = 0; m < s.middle().size; ++m)
    e[static_cast<std::size_t>(s.right(m)) * cols + s.left(m)] += 1;
  return SpanClass(rows, cols, std::move(e));
}

/// Canonical representative: middle elements ordered lexicographically by
/// (column, row, copy index), so span_matrix(matrix_span(m)) == m.
inline Span matrix_span(const SpanClass& m) {
  std::vector<int> lt, rt;
  for (int x = 0; x < m.cols(); ++x)
    for (int y = 0; y < m.rows(); ++y)
      for (long long c = 0; c < m.at(y, x); ++c) {
        lt.push_back(x);
        rt.push_back(y);
      }
  FinSet mid = fin(static_cast<int>(lt.size()));
  return Span{FinMap{mid, fin(m.cols()), std::move(lt)}, FinMap{mid, fin(m.rows()), std::move(rt)}};
}

/// Plain natural-number matrix product a * b.
inline SpanClass multiply(const SpanClass& a, const SpanClass& b) {
  if (a.cols() != b.rows()) throw mismatch_error("span class product: inner dimensions differ");
  std::vector<long long> e(static_cast<std::size_t>(a.rows()) * b.cols(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        e[static_cast<std::size_t>(i) * b.cols() + j] += aik * b.at(k, j);
    }
  return SpanClass(a.rows(), b.cols(), std::move(e));
}

inline SpanClass entrywise_sum(const SpanClass& a, const SpanClass& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw mismatch_error("span class sum: shape mismatch");
  std::vector<long long> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return SpanClass(a.rows(), a.cols(), std::move(e));
}

inline SpanClass block_diag(const SpanClass& a, const SpanClass& b) {
  const int rows = a.rows() + b.rows(), cols = a.cols() + b.cols();
  std::vector<long long> e(static_cast<std::size_t>(rows) * cols, 0);
  for (int y = 0; y < a.rows(); ++y)
    for (int x = 0; x < a.cols(); ++x) e[static_cast<std::size_t>(y) * cols + x] = a.at(y, x);
  for (int y = 0; y < b.rows(); ++y)
    for (int x = 0; x < b.cols(); ++x)
      e[static_cast<std::size_t>(a.rows() + y) * cols + (a.cols() + x)] = b.at(y, x);
  return SpanClass(rows, cols, std::move(e));
}

/// JSON array-of-rows, e.g. [[1,0],[2,1]]. A matrix with zero rows prints
/// as []; a row of zero columns as [].
inline std::string to_json(const SpanClass& m) {
  std::string out = "[";
  for (int y = 0; y < m.rows(); ++y) {
    if (y) out += ",";
    out += "[";
    for (int x = 0; x < m.cols(); ++x) {
      if (x) out += ",";
      out += std::to_string(m.at(y, x));
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace lawvere
