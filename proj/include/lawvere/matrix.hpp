#pragma once

#include <set>
#include <string>
#include <vector>

#include "lawvere/error.hpp"
#include "lawvere/semiring.hpp"
#include "lawvere/span.hpp"

namespace lawvere {

/// Matrix over an exact semiring: a morphism of the matrix category Burn_R.
/// A matrix with r rows and c cols is a morphism from object c to object r,
/// mirroring the span-class convention (rows = target, cols = source).
class SemiringMatrix {
public:
  SemiringMatrix() = default;
  SemiringMatrix(Semiring ring, int rows, int cols, std::vector<elem_t> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw config_error("matrix dimensions must be non-negative");
    if (static_cast<long long>(entries_.size()) != static_cast<long long>(rows) * cols)
      throw config_error("matrix entry count does not match dimensions");
  }

  static SemiringMatrix identity(const Semiring& r, int n) {
    std::vector<elem_t> e(static_cast<std::size_t>(n) * n, r.zero());
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = r.one();
    return SemiringMatrix(r, n, n, std::move(e));
  }

  static SemiringMatrix zero(const Semiring& r, int rows, int cols) {
    return SemiringMatrix(r, rows, cols,
                          std::vector<elem_t>(static_cast<std::size_t>(rows) * cols, r.zero()));
  }

  const Semiring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  elem_t at(int y, int x) const { return entries_[static_cast<std::size_t>(y) * cols_ + x]; }
  const std::vector<elem_t>& entries() const { return entries_; }

  friend bool operator==(const SemiringMatrix& a, const SemiringMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const SemiringMatrix& a, const SemiringMatrix& b) { return !(a == b); }

private:
  Semiring ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<elem_t> entries_;
};

/// Standard sum-of-products a * b. Composition in Burn_R composes in the
/// same order as span classes: M(apply s then t) = M(t) * M(s).
inline SemiringMatrix mat_mul(const SemiringMatrix& a, const SemiringMatrix& b) {
  if (a.ring() != b.ring()) throw mismatch_error("mat_mul: semiring mismatch");
  if (a.cols() != b.rows()) throw mismatch_error("mat_mul: inner dimensions differ");
  const Semiring& r = a.ring();
  std::vector<elem_t> e(static_cast<std::size_t>(a.rows()) * b.cols(), r.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      elem_t acc = r.zero();
      for (int k = 0; k < a.cols(); ++k) acc = r.add(acc, r.mul(a.at(i, k), b.at(k, j)));
      e[static_cast<std::size_t>(i) * b.cols() + j] = acc;
    }
  return SemiringMatrix(r, a.rows(), b.cols(), std::move(e));
}

inline SemiringMatrix mat_add(const SemiringMatrix& a, const SemiringMatrix& b) {
  if (a.ring() != b.ring()) throw mismatch_error("mat_add: semiring mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw mismatch_error("mat_add: shape mismatch");
  std::vector<elem_t> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.ring().add(e[i], b.entries()[i]);
  return SemiringMatrix(a.ring(), a.rows(), a.cols(), std::move(e));
}

/// Kronecker block product with lexicographic index pairing: the block at
/// (i1, j1) is a(i1, j1) * b. Objects multiply, m (x) n = mn.
inline SemiringMatrix kron(const SemiringMatrix& a, const SemiringMatrix& b) {
  if (a.ring() != b.ring()) throw mismatch_error("kron: semiring mismatch");
  const Semiring& r = a.ring();
  const int rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
  std::vector<elem_t> e(static_cast<std::size_t>(rows) * cols, r.zero());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int i2 = 0; i2 < b.rows(); ++i2)
      for (int j1 = 0; j1 < a.cols(); ++j1)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          e[static_cast<std::size_t>(i1 * b.rows() + i2) * cols + (j1 * b.cols() + j2)] =
              r.mul(a.at(i1, j1), b.at(i2, j2));
  return SemiringMatrix(r, rows, cols, std::move(e));
}

/// Group completion of a span class: the entrywise inclusion N -> Z.
inline SemiringMatrix group_complete(const SpanClass& m) {
  std::vector<elem_t> e(m.entries().begin(), m.entries().end());
  return SemiringMatrix(semirings::integers(), m.rows(), m.cols(), std::move(e));
}

inline SemiringMatrix from_span_class(const Semiring& r, const SpanClass& m) {
  if (!(r == semirings::naturals() || r == semirings::integers()))
    throw config_error("from_span_class: entries only embed into N or Z");
  std::vector<elem_t> e(m.entries().begin(), m.entries().end());
  return SemiringMatrix(r, m.rows(), m.cols(), std::move(e));
}

/// End(1) of Burn_R is R itself: 1x1 matrices compose and add exactly as R
/// does. Verifies that identification on the carrier (or sample window) and
/// returns R.
inline Semiring end_of_unit_burn(const Semiring& r) {
  auto one_by_one = [&](elem_t v) { return SemiringMatrix(r, 1, 1, {v}); };
  for (elem_t a : r.elements())
    for (elem_t b : r.elements()) {
      if (mat_mul(one_by_one(a), one_by_one(b)).at(0, 0) != r.mul(a, b))
        throw structure_error("end_of_unit: 1x1 composition disagrees with " + r.name() +
                              " multiplication at (" + r.show(a) + ", " + r.show(b) + ")");
      if (mat_add(one_by_one(a), one_by_one(b)).at(0, 0) != r.add(a, b))
        throw structure_error("end_of_unit: 1x1 hom-addition disagrees with " + r.name() +
                              " addition at (" + r.show(a) + ", " + r.show(b) + ")");
    }
  return r;
}

/// End(1) of the span-class category is the naturals: classes 1 <- T -> 1
/// are counted by |T|, disjoint union realizes +, pullback realizes *.
/// Verified on representatives 0..max_rep through the actual span
/// operations, then returned as the built-in N.
inline Semiring end_of_unit_spanclass(int max_rep = 10) {
  auto rep = [&](long long n) { return matrix_span(SpanClass(1, 1, {n})); };
  for (long long a = 0; a <= max_rep; ++a)
    for (long long b = 0; b <= max_rep; ++b) {
      const long long sum = span_matrix(add_spans(rep(a), rep(b))).at(0, 0);
      if (sum != a + b)
        throw structure_error("end_of_unit: span addition gave " + std::to_string(sum) +
                              " for " + std::to_string(a) + " + " + std::to_string(b));
      const long long prod = span_matrix(compose_spans(rep(a), rep(b))).at(0, 0);
      if (prod != a * b)
        throw structure_error("end_of_unit: span composition gave " + std::to_string(prod) +
                              " for " + std::to_string(a) + " * " + std::to_string(b));
    }
  (void)pt;
  return semirings::naturals();
}

/// Desk-scale biproduct check for Burn_R: block injections and projections
/// satisfy p_i . iota_j = delta_ij and sum_i iota_i . p_i = id, and homs
/// m -> n are exactly R^{mn}. Exhaustive over finite carriers.
inline bool semiadditive_check(const Semiring& r, int max_size) {
  auto basis_column = [&](int m, int i) {
    SemiringMatrix e = SemiringMatrix::zero(r, m, 1);
    std::vector<elem_t> v(e.entries());
    v[static_cast<std::size_t>(i)] = r.one();
    return SemiringMatrix(r, m, 1, std::move(v));
  };
  auto basis_row = [&](int m, int i) {
    SemiringMatrix e = SemiringMatrix::zero(r, 1, m);
    std::vector<elem_t> v(e.entries());
    v[static_cast<std::size_t>(i)] = r.one();
    return SemiringMatrix(r, 1, m, std::move(v));
  };

  for (int m = 0; m <= max_size; ++m) {
    // delta identities and the biproduct decomposition of the identity
    SemiringMatrix acc = SemiringMatrix::zero(r, m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        // p_i after iota_j: apply iota_j first, so multiply M(p_i) * M(iota_j)
        SemiringMatrix d = mat_mul(basis_row(m, i), basis_column(m, j));
        if (d.at(0, 0) != (i == j ? r.one() : r.zero())) return false;
      }
      acc = mat_add(acc, mat_mul(basis_column(m, i), basis_row(m, i)));
    }
    if (!(acc == SemiringMatrix::identity(r, m))) return false;
  }

  if (r.finite()) {
    // hom(m, n) realizes R^{mn}: distinct entry tuples are distinct morphisms
    const auto k = static_cast<long long>(r.elements().size());
    for (int m = 0; m <= max_size; ++m)
      for (int n = 0; n <= max_size; ++n) {
        long long expect = 1;
        for (int i = 0; i < m * n; ++i) expect *= k;
        std::set<std::string> seen;
        std::vector<elem_t> tuple(static_cast<std::size_t>(m * n), 0);
        bool done = false;
        while (!done) {
          SemiringMatrix mat(r, n, m, std::vector<elem_t>(tuple.begin(), tuple.end()));
          seen.insert(to_json(mat));
          int pos = m * n - 1;
          while (pos >= 0) {
            auto& digit = tuple[static_cast<std::size_t>(pos)];
            if (++digit < k) break;
            digit = 0;
            --pos;
          }
          if (pos < 0) done = true;
        }
        if (static_cast<long long>(seen.size()) != expect) return false;
      }
  }
  return true;
}

inline std::string to_json(const SemiringMatrix& m) {
  std::string out = "[";
  for (int y = 0; y < m.rows(); ++y) {
    if (y) out += ",";
    out += "[";
    for (int x = 0; x < m.cols(); ++x) {
      if (x) out += ",";
      out += m.ring().show(m.at(y, x));
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace lawvere
