#pragma once

// The split-fork key lemma as a generic checker, the restriction and
// extension functors between the finite site and its β-picture, and the
// round-trip verifications. At finite scale β is a bijection on objects, so
// the pipeline collapses; the collapse is computed and asserted rather than
// assumed, and the lemma itself is exercised on synthetic forks.

#include <cstdint>

#include "condensed/presheaf.hpp"
#include "condensed/resolution.hpp"

namespace condensed {

// c ⇉(p1,p2) b ->f a with splittings g and k satisfying
//   f∘p1 = f∘p2,  f∘g = id_a,  p1∘k = id_b,  p2∘k = g∘f.
struct SplitFork {
  FinSet a, b, c;
  FinMap f;   // b -> a
  FinMap g;   // a -> b
  FinMap p1;  // c -> b
  FinMap p2;  // c -> b
  FinMap k;   // b -> c
};

// Validates the four equations; throws ForkLawViolation naming the violated
// one.
SplitFork make_split_fork(FinMap f, FinMap g, FinMap p1, FinMap p2, FinMap k);

// The fork every surjection generates: g the least-preimage section,
// c = b ×_a b with its projections, k = ⟨id, g∘f⟩. Throws NotEpi.
SplitFork fork_from_epi(const FinMap& f);

// A contravariant assignment on a split fork: one value set per object and
// one map per structure morphism, direction reversed.
struct ForkFunctor {
  FinSet fa, fb, fc;
  FinMap rf;   // F(f):  fa -> fb
  FinMap rg;   // F(g):  fb -> fa
  FinMap rp1;  // F(p1): fb -> fc
  FinMap rp2;  // F(p2): fb -> fc
  FinMap rk;   // F(k):  fc -> fb
};

// F = Hom(-, t) applied to the fork, restriction by precomposition.
ForkFunctor hom_fork(const SplitFork& fork, const FinSet& t);

struct KeyLemmaResult {
  bool verdict = false;
  Iso iso;  // fa ≅ eq(rp1, rp2); only meaningful when verdict holds
};

// Verifies that rf exhibits fa as the equalizer of rp1 and rp2. The functor
// images of the four fork equations are validated first (ForkLawViolation
// if the assignment is not functorial on the fork).
KeyLemmaResult key_lemma_check(const SplitFork& fork, const ForkFunctor& F);

// F transported along the principal-point identification βX ≅ X. On the
// skeletal site the transported tables coincide with the originals; the
// identification is computed and asserted, not elided.
Presheaf restrict_to_beta(const Presheaf& f);

// Ĝ(X) := eq(G(B(X)) ⇉ G(B⁽²⁾(X))) over the standard resolution, with the
// functorial action induced by resolution maps. At finite scale the two
// projections coincide, so the equalizer is all of G(B(X)); the generic
// computation is performed anyway.
Presheaf extend(const Presheaf& g);

// Natural iso G ≅ restrict_to_beta(extend(G)).
NatTrans roundtrip_beta(const Presheaf& g);

// Natural iso F ≅ extend(restrict_to_beta(F)); requires F to pass ★
// (throws StarRequired otherwise).
NatTrans roundtrip_ch(const Presheaf& f);

// check_star on extend(G); must pass for every lawful G.
CheckReport star_preservation_check(const Presheaf& g);

}  // namespace condensed
