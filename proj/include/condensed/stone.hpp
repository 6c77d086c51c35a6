#pragma once

// Ultrafilters, the β functor with unit ι and limit map ξ, and finite Stone
// duality. Everything is computed by brute force over subset families so that
// principality of finite ultrafilters is established by exhaustion rather
// than assumed.

#include <cstdint>
#include <optional>
#include <vector>

#include "condensed/finset.hpp"

namespace condensed {

// Enumeration of all subset families is 2^(2^n); n = 4 gives 65536
// candidates, n = 5 would give 2^32.
inline constexpr std::size_t kDefaultBetaBound = 4;

// Subsets of a base set are bitmasks over the canonical element order.
using Mask = std::uint32_t;

// A family of subsets of `base` satisfying the ultrafilter axioms.
class Ultrafilter {
 public:
  static Ultrafilter principal(FinSet base, std::size_t at);

  // Validates the axioms; members must be sorted and distinct.
  static Ultrafilter make(FinSet base, std::vector<Mask> members);

  static bool axioms_hold(std::size_t base_size, const std::vector<Mask>& members);

  const FinSet& base() const { return base_; }
  const std::vector<Mask>& members() const { return members_; }
  bool contains(Mask m) const;

  // Index of the generating element when the filter is principal.
  std::optional<std::size_t> principal_point() const;

  friend bool operator==(const Ultrafilter& a, const Ultrafilter& b) {
    return a.base_ == b.base_ && a.members_ == b.members_;
  }

 private:
  FinSet base_;
  std::vector<Mask> members_;
};

// βS with the principal embedding ι_S. Carrier labels are "u(x)" for the
// principal point at x, ordered by generating label.
struct BetaSet {
  FinSet base;
  std::vector<Ultrafilter> points;
  FinSet carrier;
  FinMap iota;  // base -> carrier
};

// All ultrafilters on S in canonical order (by generating singleton).
// Throws SizeBoundExceeded when |S| > bound.
std::vector<Ultrafilter> enumerate_ultrafilters(const FinSet& s,
                                                std::size_t bound = kDefaultBetaBound);

BetaSet beta(const FinSet& s, std::size_t bound = kDefaultBetaBound);

// (βf)(F) = {A ⊆ T : f⁻¹(A) ∈ F}, as a map between the beta carriers.
FinMap beta_map(const FinMap& f, const BetaSet& bs, const BetaSet& bt);

// ξ_X: β|X| -> X sending each (principal) ultrafilter to its limit.
FinMap xi(const BetaSet& bx);

// A finite Boolean algebra given by operation tables. Axioms are checked
// exhaustively at construction for carriers of size <= 16.
class BoolAlg {
 public:
  static BoolAlg make(FinSet carrier, std::vector<std::vector<std::size_t>> meet,
                      std::vector<std::vector<std::size_t>> join,
                      std::vector<std::size_t> complement, std::size_t bottom,
                      std::size_t top);

  const FinSet& carrier() const { return carrier_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t complement(std::size_t a) const { return compl_[a]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  // a <= b in the algebra order.
  bool leq(std::size_t a, std::size_t b) const { return meet_[a][b] == a; }

 private:
  FinSet carrier_;
  std::vector<std::vector<std::size_t>> meet_;
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::size_t> compl_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// P(S) with subset labels "{a,b}".
BoolAlg powerset_algebra(const FinSet& s, std::size_t bound = kDefaultBetaBound);

// Minimal nonzero elements, as the finite set of their labels.
FinSet atoms(const BoolAlg& b);

// Ultrafilters of the algebra by brute force over all carrier subsets.
// Each point is labeled "uf(m)" by its minimum member m (an atom).
FinSet spec(const BoolAlg& b);

// Product algebra on pair labels, componentwise operations.
BoolAlg bool_product(const BoolAlg& a, const BoolAlg& b);

// Searches atom bijections for a Boolean-algebra isomorphism; an iso of
// finite Boolean algebras is determined by where it sends atoms.
std::optional<Iso> bool_iso(const BoolAlg& a, const BoolAlg& b);

// Explicit iso β(S⊔T) ≅ βS⊔βT, an ultrafilter on the sum concentrating on
// one summand.
Iso beta_coproduct_iso(const FinSet& s, const FinSet& t,
                       std::size_t bound = kDefaultBetaBound);

// Transports principal points through an iso of beta carriers to recover the
// underlying bijection S ≅ T.
Iso recover_bijection(const BetaSet& bs, const BetaSet& bt, const Iso& iso);

}  // namespace condensed
