#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lawvere/error.hpp"

namespace lawvere {

using elem_t = std::int64_t;

/// Additive infinity of the tropical min-plus semiring.
inline constexpr elem_t tropical_infinity = std::numeric_limits<elem_t>::max();

/// An exact semiring over 64-bit elements. Finite semirings list their
/// carrier; the unbounded built-ins (naturals, integers, tropical) expose a
/// sample window instead. Desk-scale budgets keep every computed value far
/// inside the 64-bit range.
class Semiring {
public:
  using binop = std::function<elem_t(elem_t, elem_t)>;

  Semiring() = default;
  Semiring(std::string name, binop add, binop mul, elem_t zero, elem_t one,
           std::vector<elem_t> elements, bool finite)
      : name_(std::move(name)),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(zero),
        one_(one),
        elements_(std::move(elements)),
        finite_(finite) {}

  const std::string& name() const { return name_; }
  elem_t add(elem_t a, elem_t b) const { return add_(a, b); }
  elem_t mul(elem_t a, elem_t b) const { return mul_(a, b); }
  elem_t zero() const { return zero_; }
  elem_t one() const { return one_; }
  bool finite() const { return finite_; }

  /// Full carrier when finite; a representative sample window otherwise.
  const std::vector<elem_t>& elements() const { return elements_; }

  std::string show(elem_t v) const {
    if (v == tropical_infinity) return "inf";
    return std::to_string(v);
  }

  /// Semirings agree when their names do; all constructors below produce
  /// structurally identical semirings for equal names.
  friend bool operator==(const Semiring& a, const Semiring& b) { return a.name_ == b.name_; }
  friend bool operator!=(const Semiring& a, const Semiring& b) { return !(a == b); }

private:
  std::string name_;
  binop add_, mul_;
  elem_t zero_ = 0, one_ = 1;
  std::vector<elem_t> elements_;
  bool finite_ = false;
};

/// Checks the semiring axioms over the given elements: commutative monoid
/// under add, monoid under mul, two-sided distributivity, absorbing zero.
/// Throws structure_error with a witness on the first failure.
inline void verify_semiring(const Semiring& r, const std::vector<elem_t>& elems) {
  auto fail = [&](const std::string& law, elem_t a, elem_t b, elem_t c) {
    throw structure_error("semiring '" + r.name() + "' violates " + law + " at (" + r.show(a) +
                          ", " + r.show(b) + ", " + r.show(c) + ")");
  };
  for (elem_t a : elems) {
    if (r.add(a, r.zero()) != a || r.add(r.zero(), a) != a) fail("additive unit", a, 0, 0);
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) fail("multiplicative unit", a, 0, 0);
    if (r.mul(a, r.zero()) != r.zero() || r.mul(r.zero(), a) != r.zero())
      fail("zero absorption", a, 0, 0);
    for (elem_t b : elems) {
      if (r.add(a, b) != r.add(b, a)) fail("additive commutativity", a, b, 0);
      for (elem_t c : elems) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("additive associativity", a, b, c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          fail("multiplicative associativity", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          fail("left distributivity", a, b, c);
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          fail("right distributivity", a, b, c);
      }
    }
  }
}

namespace semirings {

inline Semiring naturals() {
  std::vector<elem_t> sample;
  for (elem_t i = 0; i <= 12; ++i) sample.push_back(i);
  return Semiring(
      "N", [](elem_t a, elem_t b) { return a + b; }, [](elem_t a, elem_t b) { return a * b; }, 0,
      1, std::move(sample), false);
}

inline Semiring integers() {
  std::vector<elem_t> sample;
  for (elem_t i = -10; i <= 10; ++i) sample.push_back(i);
  return Semiring(
      "Z", [](elem_t a, elem_t b) { return a + b; }, [](elem_t a, elem_t b) { return a * b; }, 0,
      1, std::move(sample), false);
}

inline Semiring boolean() {
  return Semiring(
      "bool", [](elem_t a, elem_t b) { return a | b; }, [](elem_t a, elem_t b) { return a & b; },
      0, 1, {0, 1}, true);
}

inline Semiring zmod(int k) {
  if (k < 1) throw config_error("zmod: modulus must be positive");
  std::vector<elem_t> elems;
  for (elem_t i = 0; i < k; ++i) elems.push_back(i);
  return Semiring(
      "Z/" + std::to_string(k), [k](elem_t a, elem_t b) { return (a + b) % k; },
      [k](elem_t a, elem_t b) { return (a * b) % k; }, 0, 1 % k, std::move(elems), true);
}

/// Min-plus over the naturals with an explicit infinity. Addition is min
/// (unit: infinity), multiplication is plus (unit: 0).
inline Semiring tropical() {
  auto add = [](elem_t a, elem_t b) { return a < b ? a : b; };
  auto mul = [](elem_t a, elem_t b) {
    if (a == tropical_infinity || b == tropical_infinity) return tropical_infinity;
    return a + b;
  };
  std::vector<elem_t> sample;
  for (elem_t i = 0; i <= 10; ++i) sample.push_back(i);
  sample.push_back(tropical_infinity);
  return Semiring("tropical", add, mul, tropical_infinity, 0, std::move(sample), false);
}

/// Finite semiring from explicit operation tables on carrier {0..n-1}.
/// Axioms are verified exhaustively on construction.
inline Semiring from_tables(const std::string& name, int n, std::vector<elem_t> add_table,
                            std::vector<elem_t> mul_table, elem_t zero, elem_t one) {
  if (n < 1) throw config_error("table semiring: carrier must be non-empty");
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (add_table.size() != nn || mul_table.size() != nn)
    throw config_error("table semiring: table size mismatch");
  for (elem_t v : add_table)
    if (v < 0 || v >= n) throw config_error("table semiring: add entry outside carrier");
  for (elem_t v : mul_table)
    if (v < 0 || v >= n) throw config_error("table semiring: mul entry outside carrier");
  std::vector<elem_t> elems;
  for (elem_t i = 0; i < n; ++i) elems.push_back(i);
  auto at = [n](const std::vector<elem_t>& t, elem_t a, elem_t b) {
    return t[static_cast<std::size_t>(a) * n + b];
  };
  Semiring r(
      name, [add_table, at](elem_t a, elem_t b) { return at(add_table, a, b); },
      [mul_table, at](elem_t a, elem_t b) { return at(mul_table, a, b); }, zero, one, elems,
      true);
  verify_semiring(r, elems);
  return r;
}

/// Built-in lookup used by the CLI: N, Z, bool, tropical, Z/k ("zmod<k>").
inline Semiring by_name(const std::string& name) {
  if (name == "N" || name == "nat" || name == "naturals") return naturals();
  if (name == "Z" || name == "int" || name == "integers") return integers();
  if (name == "bool" || name == "boolean") return boolean();
  if (name == "tropical" || name == "minplus") return tropical();
  if (name.rfind("zmod", 0) == 0) return zmod(std::stoi(name.substr(4)));
  if (name.rfind("Z/", 0) == 0) return zmod(std::stoi(name.substr(2)));
  throw config_error("unknown semiring: " + name);
}

}  // namespace semirings

}  // namespace lawvere
