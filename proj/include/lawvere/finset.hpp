#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lawvere/error.hpp"

namespace lawvere {

/// Canonical finite set: elements are 0..size-1. The label is display-only
/// and ignored by equality.
struct FinSet {
  int size = 0;
  std::string label;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.size == b.size; }
  friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }
};

inline FinSet fin(int n, std::string label = {}) {
  if (n < 0) throw config_error("finite set size must be non-negative");
  return FinSet{n, std::move(label)};
}

/// Total function between canonical finite sets, given by its value table.
struct FinMap {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;  // table[x] in [0, cod.size)

  int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }
  friend bool operator!=(const FinMap& a, const FinMap& b) { return !(a == b); }
};

inline FinMap fin_map(FinSet dom, FinSet cod, std::vector<int> table) {
  if (static_cast<int>(table.size()) != dom.size)
    throw config_error("map table length does not match domain size");
  for (int v : table)
    if (v < 0 || v >= cod.size) throw config_error("map table entry outside codomain");
  return FinMap{std::move(dom), std::move(cod), std::move(table)};
}

inline FinMap identity_map(const FinSet& x) {
  std::vector<int> t(static_cast<std::size_t>(x.size));
  for (int i = 0; i < x.size; ++i) t[static_cast<std::size_t>(i)] = i;
  return FinMap{x, x, std::move(t)};
}

inline FinMap constant_map(FinSet dom, FinSet cod, int value) {
  if (value < 0 || value >= cod.size) throw config_error("constant outside codomain");
  return FinMap{std::move(dom), std::move(cod),
                std::vector<int>(static_cast<std::size_t>(dom.size), value)};
}

/// g after f: (compose_maps(f, g))(x) = g(f(x)).
inline FinMap compose_maps(const FinMap& f, const FinMap& g) {
  if (f.cod != g.dom) throw mismatch_error("compose_maps: codomain of f differs from domain of g");
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) t[i] = g(f.table[i]);
  return FinMap{f.dom, g.cod, std::move(t)};
}

/// Cartesian product with the two projections. Pair (i, j) sits at index
/// i * b.size + j, so the element order is lexicographic.
struct ProductSet {
  FinSet set;
  FinMap onto_a;
  FinMap onto_b;
};

inline ProductSet product(const FinSet& a, const FinSet& b) {
  FinSet p = fin(a.size * b.size);
  std::vector<int> pa(static_cast<std::size_t>(p.size)), pb(static_cast<std::size_t>(p.size));
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) {
      const auto idx = static_cast<std::size_t>(i * b.size + j);
      pa[idx] = i;
      pb[idx] = j;
    }
  return ProductSet{p, FinMap{p, a, std::move(pa)}, FinMap{p, b, std::move(pb)}};
}

/// Pairing map <f, g>: C -> A x B for f: C -> A, g: C -> B.
inline FinMap pair_map(const FinMap& f, const FinMap& g) {
  if (f.dom != g.dom) throw mismatch_error("pair_map: domains differ");
  FinSet p = fin(f.cod.size * g.cod.size);
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) t[i] = f.table[i] * g.cod.size + g.table[i];
  return FinMap{f.dom, p, std::move(t)};
}

/// Disjoint union with the two injections; the first block is a.
struct CoproductSet {
  FinSet set;
  FinMap from_a;
  FinMap from_b;
};

inline CoproductSet coproduct(const FinSet& a, const FinSet& b) {
  FinSet c = fin(a.size + b.size);
  std::vector<int> ia(static_cast<std::size_t>(a.size)), ib(static_cast<std::size_t>(b.size));
  for (int i = 0; i < a.size; ++i) ia[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < b.size; ++j) ib[static_cast<std::size_t>(j)] = a.size + j;
  return CoproductSet{c, FinMap{a, c, std::move(ia)}, FinMap{b, c, std::move(ib)}};
}

/// Copairing [f, g]: A + B -> C; the table is block concatenation.
inline FinMap copair(const FinMap& f, const FinMap& g) {
  if (f.cod != g.cod) throw mismatch_error("copair: codomains differ");
  std::vector<int> t;
  t.reserve(f.table.size() + g.table.size());
  t.insert(t.end(), f.table.begin(), f.table.end());
  t.insert(t.end(), g.table.begin(), g.table.end());
  return FinMap{fin(f.dom.size + g.dom.size), f.cod, std::move(t)};
}

/// f + g: A + A' -> B + B'.
inline FinMap coproduct_map(const FinMap& f, const FinMap& g) {
  FinSet cod = fin(f.cod.size + g.cod.size);
  std::vector<int> t;
  t.reserve(f.table.size() + g.table.size());
  for (int v : f.table) t.push_back(v);
  for (int v : g.table) t.push_back(f.cod.size + v);
  return FinMap{fin(f.dom.size + g.dom.size), cod, std::move(t)};
}

/// Pullback of a cospan f: A -> C <- B : g. The apex is
/// {(a, b) : f(a) = g(b)} ordered lexicographically in (a, b).
struct PullbackSet {
  FinSet apex;
  FinMap to_a;  // (a, b) |-> a
  FinMap to_b;  // (a, b) |-> b
};

inline PullbackSet pullback(const FinMap& f, const FinMap& g) {
  if (f.cod != g.cod) throw mismatch_error("pullback: cospan codomains differ");
  std::vector<int> pa, pb;
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b)
      if (f(a) == g(b)) {
        pa.push_back(a);
        pb.push_back(b);
      }
  FinSet apex = fin(static_cast<int>(pa.size()));
  return PullbackSet{apex, FinMap{apex, f.dom, std::move(pa)}, FinMap{apex, g.dom, std::move(pb)}};
}

inline constexpr long long default_map_budget = 1'000'000;

namespace detail {
// b^a as a count of maps, capped so budget comparison cannot overflow.
inline long long map_count(int a, int b, long long cap) {
  long long n = 1;
  for (int i = 0; i < a; ++i) {
    if (b == 0) return a == 0 ? 1 : 0;
    if (n > cap / b) return cap + 1;
    n *= b;
  }
  return n;
}
}  // namespace detail

/// Stream of all maps a -> b in lexicographic table order. One consumer per
/// range; independent ranges are cheap to create.
class MapRange {
public:
  MapRange(FinSet a, FinSet b, long long budget)
      : dom_(a), cod_(b), count_(detail::map_count(a.size, b.size, budget)) {
    if (count_ > budget)
      throw budget_error("enumerate_maps: " + std::to_string(b.size) + "^" +
                         std::to_string(a.size) + " exceeds budget " + std::to_string(budget));
  }

  long long size() const { return count_; }

  class iterator {
  public:
    iterator() = default;
    iterator(const MapRange* r, bool done) : range_(r), done_(done) {
      if (r && !done) current_.assign(static_cast<std::size_t>(r->dom_.size), 0);
      if (r && r->count_ == 0) done_ = true;
    }

    FinMap operator*() const { return FinMap{range_->dom_, range_->cod_, current_}; }

    iterator& operator++() {
      // odometer, rightmost digit fastest
      int i = static_cast<int>(current_.size()) - 1;
      while (i >= 0) {
        if (++current_[static_cast<std::size_t>(i)] < range_->cod_.size) return *this;
        current_[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      done_ = true;
      return *this;
    }

    bool operator!=(const iterator& o) const { return done_ != o.done_; }

  private:
    const MapRange* range_ = nullptr;
    std::vector<int> current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

private:
  FinSet dom_, cod_;
  long long count_;
};

inline MapRange enumerate_maps(const FinSet& a, const FinSet& b,
                               long long budget = default_map_budget) {
  return MapRange(a, b, budget);
}

inline std::vector<FinMap> all_maps(const FinSet& a, const FinSet& b,
                                    long long budget = default_map_budget) {
  std::vector<FinMap> out;
  for (const FinMap& f : enumerate_maps(a, b, budget)) out.push_back(f);
  return out;
}

}  // namespace lawvere
