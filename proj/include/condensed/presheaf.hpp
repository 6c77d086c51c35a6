#pragma once

// Finite skeletal sites, table-backed presheaves, natural transformations,
// and the two condensed-set axioms as executable checks: coproducts-to-
// products (×) and descent along epimorphisms (★).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "condensed/finset.hpp"

namespace condensed {

// One canonical object per cardinality 0..max_card, with every map between
// objects enumerated in canonical order.
class Site {
 public:
  // Requires max_cover_size² <= max_card and max_card <= 6.
  static std::shared_ptr<const Site> make(std::size_t max_card, std::size_t max_cover_size);

  std::size_t max_card() const { return max_card_; }
  std::size_t max_cover_size() const { return max_cover_size_; }
  std::size_t num_objects() const { return max_card_ + 1; }

  const FinSet& object(std::size_t card) const { return objects_.at(card); }
  const std::vector<FinMap>& hom(std::size_t a, std::size_t b) const {
    return homs_.at(a).at(b);
  }
  const FinMap& map_at(std::size_t a, std::size_t b, std::size_t k) const {
    return homs_.at(a).at(b).at(k);
  }
  // Index of f within hom(a, b); f must be a map object(a) -> object(b).
  std::size_t index_of(const FinMap& f) const;

  friend bool operator==(const Site& a, const Site& b) {
    return a.max_card_ == b.max_card_ && a.max_cover_size_ == b.max_cover_size_;
  }

 private:
  std::size_t max_card_ = 0;
  std::size_t max_cover_size_ = 0;
  std::vector<FinSet> objects_;
  std::vector<std::vector<std::vector<FinMap>>> homs_;
};

using SitePtr = std::shared_ptr<const Site>;

// Restriction tables are stored index-level: rtab(a, b, k)[j] is the
// F(object a)-index of the restriction of the j-th element of F(object b)
// along the k-th map object(a) -> object(b).
using Table = std::vector<std::size_t>;

class Presheaf {
 public:
  // Validates contravariant functoriality exhaustively; throws
  // FunctorLawViolation naming an offending composable pair.
  static Presheaf make(SitePtr site, std::vector<FinSet> values,
                       std::vector<std::vector<std::vector<Table>>> restrictions);

  const SitePtr& site() const { return site_; }
  const FinSet& at(std::size_t card) const { return values_.at(card); }
  const std::vector<FinSet>& values() const { return values_; }
  const Table& rtab(std::size_t a, std::size_t b, std::size_t k) const {
    return restr_.at(a).at(b).at(k);
  }
  // The restriction as a FinMap F(object b) -> F(object a).
  FinMap restriction(std::size_t a, std::size_t b, std::size_t k) const;

  friend bool operator==(const Presheaf& f, const Presheaf& g) {
    return *f.site_ == *g.site_ && f.values_ == g.values_ && f.restr_ == g.restr_;
  }

 private:
  friend Presheaf with_phantom(const Presheaf&, std::size_t);

  SitePtr site_;
  std::vector<FinSet> values_;
  std::vector<std::vector<std::vector<Table>>> restr_;
};

class NatTrans {
 public:
  // Validates the naturality square for every site map.
  static NatTrans make(const Presheaf& f, const Presheaf& g, std::vector<Table> components);

  const Table& component(std::size_t card) const { return components_.at(card); }
  const std::vector<Table>& components() const { return components_; }
  // True when every component is a bijection onto the target's values.
  bool is_iso(const Presheaf& target) const;

 private:
  std::vector<Table> components_;
};

struct CheckReport {
  bool passed = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

// F(X) = Hom(X, T) with restriction by precomposition. T must be a site
// object cardinality.
Presheaf representable(SitePtr site, std::size_t t_card);

// Constant presheaf with the given value set and identity restrictions.
Presheaf constant_presheaf(SitePtr site, FinSet value);

// Pointwise product / coproduct; both are again functorial.
Presheaf presheaf_product(const Presheaf& f, const Presheaf& g);
Presheaf presheaf_coproduct(const Presheaf& f, const Presheaf& g);

// F(∅) is a singleton and every coproduct decomposition of every object
// induces a bijection F(X) -> F(X1) × F(X2).
CheckReport check_times(const Presheaf& f);

// Descent along every epi f: Y -> X with |Y| <= max_cover_size: F(X) must
// be carried bijectively onto eq(F(Y) ⇉ F(Y×_X Y)).
CheckReport check_star(const Presheaf& f);

// Deterministic pseudo-random presheaf: a seed-driven combination of
// representables and constants under pointwise product and coproduct. The
// result is functorial by construction and |F({*})| <= value_size_bound.
Presheaf random_presheaf(SitePtr site, std::uint64_t seed, std::size_t value_size_bound);

// Test fixture that adds one extra element to F at the cardinality-1 object,
// aliasing element `like` of F({*}) under every non-identity restriction.
// On this site every epi splits, so a lawful presheaf can never fail ★; the
// returned data is deliberately NOT functorial (Presheaf::make rejects it)
// and exists to exercise the failure reporting of check_star.
Presheaf with_phantom(const Presheaf& f, std::size_t like);

}  // namespace condensed
