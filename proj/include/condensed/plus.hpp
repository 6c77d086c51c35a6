#pragma once

// Partition posets, the plus construction F⁺ as a filtered colimit over
// common refinements, the sheafification pipeline sharp = ex ∘ ⁺ ∘ res with
// an independent closed-form oracle, and the desk-scale adjunction check.

#include <optional>
#include <utility>

#include "condensed/descent.hpp"

namespace condensed {

inline constexpr std::size_t kDefaultPartitionBound = 5;

// Blocks hold base indices, each block sorted, blocks ordered by least
// element. Empty blocks are forbidden unless the base is empty, where the
// trivial covering (one empty block) and the empty covering (no blocks)
// both exist.
struct Partition {
  FinSet base;
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.base == b.base && a.blocks == b.blocks;
  }
};

// All partitions of the base via restricted growth strings (coarsest first);
// throws SizeBoundExceeded above the bound.
std::vector<Partition> partitions(const FinSet& base,
                                  std::size_t bound = kDefaultPartitionBound);

// If v refines u: for each v-block the index of the u-block containing it.
std::optional<std::vector<std::size_t>> refines(const Partition& v, const Partition& u);

// `from` refines `to`; block_map sends from-blocks to to-blocks.
struct Refinement {
  std::size_t from, to;
  std::vector<std::size_t> block_map;
};

// Every refinement pair among the given partitions, identities included.
std::vector<Refinement> refinement_poset(const std::vector<Partition>& parts);

struct CommonRefinement {
  Partition w;
  std::vector<std::size_t> to_u, to_v;  // block maps out of w
};

// W given by the nonempty pairwise intersections; throws BaseMismatch.
CommonRefinement common_refinement(const Partition& u, const Partition& v);

// The diagram U ↦ ∏_i F(βU_i) over the partition poset of one site object.
// maps[r] is the diagram map carriers[refinements[r].to] ->
// carriers[refinements[r].from] (coarser to finer), assembled from the
// restrictions along block inclusions.
struct PlusDiagram {
  FinSet base;
  std::vector<Partition> parts;
  std::vector<FinSet> carriers;
  // Decoded tuple: tuples[p][e][j] is the F-value index of the j-th block
  // component of element e of carriers[p].
  std::vector<std::vector<std::vector<std::size_t>>> tuples;
  std::vector<Refinement> refinements;
  std::vector<FinMap> maps;
};

PlusDiagram plus_diagram(const Presheaf& f, std::size_t card);

// Tagged union of the carriers modulo the equivalence generated by the
// diagram maps, computed by union-find saturation. Class representatives
// are canonical: least (partition index, element index).
struct ColimitSet {
  FinSet classes;
  std::vector<FinMap> legs;  // per partition: carriers[p] -> classes
  std::vector<std::pair<std::size_t, std::size_t>> reps;  // per class
};

ColimitSet filtered_colimit(const PlusDiagram& d);

struct PlusResult {
  Presheaf fplus;
  NatTrans eta;  // F -> F⁺, the colimit leg at the trivial partition
  std::vector<PlusDiagram> diagrams;  // per cardinality
  std::vector<ColimitSet> colimits;
};

// F⁺ on every site object, with restrictions induced by partition pullback
// along site maps.
PlusResult plus(const Presheaf& f);

// check_times on F⁺; must pass for every lawful F.
CheckReport check_plus_times(const Presheaf& f);

// Independent closed form: X ↦ F({*})^X with restrictions by index
// precomposition. Always passes × and ★.
Presheaf sheafification_oracle(const Presheaf& f);

struct SharpResult {
  Presheaf sheaf;       // extend(plus(restrict(F)))
  NatTrans unit;        // F -> sheaf
  Presheaf oracle;      // sheafification_oracle(F)
  NatTrans comparison;  // oracle -> sheaf, through the discrete partition
};

SharpResult sharp(const Presheaf& f);

// Number of natural maps u: F⁺ -> G with u∘η = m, for a ×-presheaf G
// (throws TimesRequired otherwise). The search enumerates the component at
// the point and propagates through the element inclusions — sound and
// exhaustive because G(X) -> G({*})^X is injective for ×-presheaves.
std::size_t count_eta_factorizations(const Presheaf& f, const Presheaf& g, const NatTrans& m);

}  // namespace condensed
