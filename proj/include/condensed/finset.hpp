#pragma once

// Exact finite-set category: objects are canonically ordered label sets,
// morphisms are total index tables. All values are immutable after
// construction and every operation is a pure function.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condensed/error.hpp"

namespace condensed {

using Label = std::string;

// A finite set of distinct labels in canonical (sorted) order.
class FinSet {
 public:
  FinSet() = default;

  // Sorts and validates; throws DuplicateLabel on repeats.
  static FinSet of(std::vector<Label> labels);

  // {e0, e1, ..., e<n-1>}; the canonical carrier of a given cardinality.
  static FinSet canonical(std::size_t n);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Label>& elems() const { return elems_; }
  const Label& at(std::size_t i) const { return elems_.at(i); }

  bool contains(const Label& l) const;
  std::size_t index_of(const Label& l) const;  // throws if absent
  std::optional<std::size_t> find(const Label& l) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.elems_ == b.elems_; }
  friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

 private:
  std::vector<Label> elems_;
};

// A total map between finite sets, stored as dom-index -> cod-index.
class FinMap {
 public:
  FinMap() = default;

  // Validates totality and codomain membership of a label-level table.
  static FinMap make(FinSet dom, FinSet cod,
                     const std::vector<std::pair<Label, Label>>& assignments);

  // Index-level constructor; table[i] is the cod index of dom element i.
  static FinMap from_table(FinSet dom, FinSet cod, std::vector<std::size_t> table);

  static FinMap identity(FinSet s);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }

  std::size_t operator()(std::size_t i) const { return table_.at(i); }
  const Label& apply(const Label& l) const { return cod_.at(table_.at(dom_.index_of(l))); }

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }
  friend bool operator!=(const FinMap& a, const FinMap& b) { return !(a == b); }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

// g after f; throws NonComposable unless f.cod == g.dom.
FinMap compose(const FinMap& g, const FinMap& f);

bool is_epi(const FinMap& f);   // surjective
bool is_mono(const FinMap& f);  // injective
bool is_bijective(const FinMap& f);

// Inverse of a bijective map; throws NotAnIso otherwise.
FinMap inverse(const FinMap& f);

// The unique order-preserving bijection between equinumerous sets.
FinMap order_iso(const FinSet& from, const FinSet& to);

struct Span {
  FinSet carrier;
  FinMap p1;
  FinMap p2;
};

struct Cospan {
  FinSet carrier;
  FinMap i1;
  FinMap i2;
};

struct SubObject {
  FinSet carrier;
  FinMap incl;
};

struct Quotient {
  FinSet carrier;
  FinMap proj;
};

// Label combinators used by the canonical carriers below.
Label pair_label(const Label& x, const Label& y);
Label tag_left(const Label& x);
Label tag_right(const Label& y);

// Cartesian product with pair labels "(x,y)" in lexicographic pair order.
Span product(const FinSet& x, const FinSet& y);

// Tagged disjoint union with labels "L:x" / "R:y".
Cospan coproduct(const FinSet& x, const FinSet& y);

// {(x,y) : f(x) = g(y)} as a subset of the product carrier.
Span fiber_product(const FinMap& f, const FinMap& g);

// {x : f(x) = g(x)} with the subset inclusion.
SubObject equalizer(const FinMap& f, const FinMap& g);

// cod / (equivalence generated by f(x) ~ g(x)); class representative is the
// least label of the class.
Quotient coequalizer(const FinMap& f, const FinMap& g);

// Coproduct of maps: f ⊔ g between the canonical tagged carriers.
FinMap coproduct_map(const FinMap& f, const FinMap& g, const Cospan& dom_cop,
                     const Cospan& cod_cop);

// All maps from A to B in canonical order (tables enumerated
// lexicographically, first dom element most significant).
std::vector<FinMap> all_maps(const FinSet& a, const FinSet& b);

// Index of f within all_maps(f.dom(), f.cod()).
std::size_t map_index(const FinMap& f);

// An explicit isomorphism witness; round trips are checked at construction.
class Iso {
 public:
  Iso() = default;

  // Throws NotAnIso unless backward∘forward and forward∘backward are ids.
  static Iso make(FinMap forward, FinMap backward);

  // Builds the witness from a bijective map.
  static Iso of_bijection(const FinMap& f);

  const FinMap& forward() const { return forward_; }
  const FinMap& backward() const { return backward_; }

 private:
  FinMap forward_;
  FinMap backward_;
};

}  // namespace condensed
