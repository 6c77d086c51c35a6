#include "condensed/finset.hpp"

#include <algorithm>
#include <numeric>

namespace condensed {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::ValueOutsideCodomain: return "ValueOutsideCodomain";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::CodomainMismatch: return "CodomainMismatch";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::NonPrincipalPoint: return "NonPrincipalPoint";
    case ErrorCode::NotAnIso: return "NotAnIso";
    case ErrorCode::NotIso: return "NotIso";
    case ErrorCode::NotEpi: return "NotEpi";
    case ErrorCode::ConeDoesNotCommute: return "ConeDoesNotCommute";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::FunctorLawViolation: return "FunctorLawViolation";
    case ErrorCode::ForkLawViolation: return "ForkLawViolation";
    case ErrorCode::StarRequired: return "StarRequired";
    case ErrorCode::TimesRequired: return "TimesRequired";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
  }
  return "UnknownError";
}

FinSet FinSet::of(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (labels[i] == labels[i + 1]) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' occurs twice");
    }
  }
  FinSet s;
  s.elems_ = std::move(labels);
  return s;
}

FinSet FinSet::canonical(std::size_t n) {
  std::vector<Label> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return FinSet::of(std::move(labels));
}

bool FinSet::contains(const Label& l) const {
  return std::binary_search(elems_.begin(), elems_.end(), l);
}

std::size_t FinSet::index_of(const Label& l) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), l);
  if (it == elems_.end() || *it != l) {
    throw Error(ErrorCode::ValueOutsideCodomain, "label '" + l + "' not in set");
  }
  return static_cast<std::size_t>(it - elems_.begin());
}

std::optional<std::size_t> FinSet::find(const Label& l) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), l);
  if (it == elems_.end() || *it != l) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

FinMap FinMap::make(FinSet dom, FinSet cod,
                    const std::vector<std::pair<Label, Label>>& assignments) {
  std::vector<std::optional<std::size_t>> table(dom.size());
  for (const auto& [from, to] : assignments) {
    auto di = dom.find(from);
    if (!di) {
      throw Error(ErrorCode::ValueOutsideCodomain,
                  "assignment source '" + from + "' not in domain");
    }
    auto ci = cod.find(to);
    if (!ci) {
      throw Error(ErrorCode::ValueOutsideCodomain,
                  "assignment target '" + to + "' not in codomain");
    }
    table[*di] = *ci;
  }
  std::vector<std::size_t> full;
  full.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (!table[i]) {
      throw Error(ErrorCode::NotTotal, "no value assigned to '" + dom.at(i) + "'");
    }
    full.push_back(*table[i]);
  }
  return from_table(std::move(dom), std::move(cod), std::move(full));
}

FinMap FinMap::from_table(FinSet dom, FinSet cod, std::vector<std::size_t> table) {
  if (table.size() != dom.size()) {
    throw Error(ErrorCode::NotTotal, "table size " + std::to_string(table.size()) +
                                         " != domain size " + std::to_string(dom.size()));
  }
  for (std::size_t v : table) {
    if (v >= cod.size()) {
      throw Error(ErrorCode::ValueOutsideCodomain,
                  "index " + std::to_string(v) + " out of codomain range");
    }
  }
  FinMap f;
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  f.table_ = std::move(table);
  return f;
}

FinMap FinMap::identity(FinSet s) {
  std::vector<std::size_t> table(s.size());
  std::iota(table.begin(), table.end(), 0);
  FinSet copy = s;
  return from_table(std::move(copy), std::move(s), std::move(table));
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod() != g.dom()) {
    throw Error(ErrorCode::NonComposable, "cod(f) != dom(g)");
  }
  std::vector<std::size_t> table(f.dom().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g(f(i));
  return FinMap::from_table(f.dom(), g.cod(), std::move(table));
}

bool is_epi(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t v : f.table()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_mono(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t v : f.table()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_bijective(const FinMap& f) {
  return f.dom().size() == f.cod().size() && is_mono(f);
}

FinMap inverse(const FinMap& f) {
  if (!is_bijective(f)) throw Error(ErrorCode::NotAnIso, "map is not bijective");
  std::vector<std::size_t> table(f.cod().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) table[f(i)] = i;
  return FinMap::from_table(f.cod(), f.dom(), std::move(table));
}

FinMap order_iso(const FinSet& from, const FinSet& to) {
  if (from.size() != to.size()) {
    throw Error(ErrorCode::NotAnIso, "sets have different cardinality");
  }
  std::vector<std::size_t> table(from.size());
  std::iota(table.begin(), table.end(), 0);
  return FinMap::from_table(from, to, std::move(table));
}

Label pair_label(const Label& x, const Label& y) { return "(" + x + "," + y + ")"; }
Label tag_left(const Label& x) { return "L:" + x; }
Label tag_right(const Label& y) { return "R:" + y; }

Span product(const FinSet& x, const FinSet& y) {
  std::vector<Label> labels;
  labels.reserve(x.size() * y.size());
  for (const Label& a : x.elems()) {
    for (const Label& b : y.elems()) labels.push_back(pair_label(a, b));
  }
  FinSet carrier = FinSet::of(std::move(labels));
  std::vector<std::size_t> t1(carrier.size()), t2(carrier.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      std::size_t k = carrier.index_of(pair_label(x.at(a), y.at(b)));
      t1[k] = a;
      t2[k] = b;
    }
  }
  return Span{carrier, FinMap::from_table(carrier, x, std::move(t1)),
              FinMap::from_table(carrier, y, std::move(t2))};
}

Cospan coproduct(const FinSet& x, const FinSet& y) {
  std::vector<Label> labels;
  labels.reserve(x.size() + y.size());
  for (const Label& a : x.elems()) labels.push_back(tag_left(a));
  for (const Label& b : y.elems()) labels.push_back(tag_right(b));
  FinSet carrier = FinSet::of(std::move(labels));
  std::vector<std::size_t> t1(x.size()), t2(y.size());
  for (std::size_t a = 0; a < x.size(); ++a) t1[a] = carrier.index_of(tag_left(x.at(a)));
  for (std::size_t b = 0; b < y.size(); ++b) t2[b] = carrier.index_of(tag_right(y.at(b)));
  return Cospan{carrier, FinMap::from_table(x, carrier, std::move(t1)),
                FinMap::from_table(y, carrier, std::move(t2))};
}

Span fiber_product(const FinMap& f, const FinMap& g) {
  if (f.cod() != g.cod()) {
    throw Error(ErrorCode::CodomainMismatch, "fiber product legs disagree on codomain");
  }
  std::vector<Label> labels;
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    for (std::size_t b = 0; b < g.dom().size(); ++b) {
      if (f(a) == g(b)) labels.push_back(pair_label(f.dom().at(a), g.dom().at(b)));
    }
  }
  FinSet carrier = FinSet::of(std::move(labels));
  std::vector<std::size_t> t1(carrier.size()), t2(carrier.size());
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    for (std::size_t b = 0; b < g.dom().size(); ++b) {
      if (f(a) != g(b)) continue;
      std::size_t k = carrier.index_of(pair_label(f.dom().at(a), g.dom().at(b)));
      t1[k] = a;
      t2[k] = b;
    }
  }
  return Span{carrier, FinMap::from_table(carrier, f.dom(), std::move(t1)),
              FinMap::from_table(carrier, g.dom(), std::move(t2))};
}

namespace {
void require_parallel(const FinMap& f, const FinMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw Error(ErrorCode::NotParallel, "maps are not a parallel pair");
  }
}
}  // namespace

SubObject equalizer(const FinMap& f, const FinMap& g) {
  require_parallel(f, g);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (f(i) == g(i)) labels.push_back(f.dom().at(i));
  }
  FinSet carrier = FinSet::of(std::move(labels));
  std::vector<std::size_t> incl(carrier.size());
  for (std::size_t k = 0; k < carrier.size(); ++k) incl[k] = f.dom().index_of(carrier.at(k));
  return SubObject{carrier, FinMap::from_table(carrier, f.dom(), std::move(incl))};
}

namespace {
struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // Keep the smaller index as root so the least label represents the class.
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
};
}  // namespace

Quotient coequalizer(const FinMap& f, const FinMap& g) {
  require_parallel(f, g);
  const FinSet& cod = f.cod();
  UnionFind uf(cod.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) uf.unite(f(i), g(i));
  std::vector<Label> reps;
  for (std::size_t i = 0; i < cod.size(); ++i) {
    if (uf.find(i) == i) reps.push_back(cod.at(i));
  }
  FinSet carrier = FinSet::of(std::move(reps));
  std::vector<std::size_t> proj(cod.size());
  for (std::size_t i = 0; i < cod.size(); ++i) {
    proj[i] = carrier.index_of(cod.at(uf.find(i)));
  }
  return Quotient{carrier, FinMap::from_table(cod, carrier, std::move(proj))};
}

FinMap coproduct_map(const FinMap& f, const FinMap& g, const Cospan& dom_cop,
                     const Cospan& cod_cop) {
  std::vector<std::size_t> table(dom_cop.carrier.size());
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    table[dom_cop.i1(a)] = cod_cop.i1(f(a));
  }
  for (std::size_t b = 0; b < g.dom().size(); ++b) {
    table[dom_cop.i2(b)] = cod_cop.i2(g(b));
  }
  return FinMap::from_table(dom_cop.carrier, cod_cop.carrier, std::move(table));
}

std::vector<FinMap> all_maps(const FinSet& a, const FinSet& b) {
  std::vector<FinMap> out;
  if (a.empty()) {
    out.push_back(FinMap::from_table(a, b, {}));
    return out;
  }
  if (b.empty()) return out;  // no total map from a nonempty set into ∅
  std::vector<std::size_t> table(a.size(), 0);
  while (true) {
    out.push_back(FinMap::from_table(a, b, table));
    // Increment as a base-|b| counter, first position most significant.
    std::size_t i = table.size();
    while (i > 0) {
      --i;
      if (++table[i] < b.size()) break;
      table[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::size_t map_index(const FinMap& f) {
  std::size_t idx = 0;
  for (std::size_t v : f.table()) idx = idx * f.cod().size() + v;
  return idx;
}

Iso Iso::make(FinMap forward, FinMap backward) {
  if (compose(backward, forward) != FinMap::identity(forward.dom()) ||
      compose(forward, backward) != FinMap::identity(backward.dom())) {
    throw Error(ErrorCode::NotAnIso, "round trips are not identities");
  }
  Iso iso;
  iso.forward_ = std::move(forward);
  iso.backward_ = std::move(backward);
  return iso;
}

Iso Iso::of_bijection(const FinMap& f) { return make(f, inverse(f)); }

}  // namespace condensed
