#pragma once

// The standard free resolution B⁽²⁾(X) ⇉ B(X) → X of a finite discrete
// space, maps and coproducts of resolutions, sections of epimorphisms onto
// beta carriers, and the weak fiber product of beta sets.

#include "condensed/finset.hpp"
#include "condensed/stone.hpp"

namespace condensed {

// Fully validated at construction: xi∘pi1 = xi∘pi2, xi epi, btilde is the
// fiber product of xi with itself, pi_i = p_i∘ξ_{btilde}.
struct Resolution {
  FinSet x;
  BetaSet b;       // B(X) = β|X|
  FinSet btilde;   // carrier of B(X) ×_X B(X)
  FinMap p1, p2;   // btilde -> b
  BetaSet b2;      // B(btilde)
  FinMap pi1, pi2; // b2 -> b
  FinMap xi_map;   // b -> x
};

Resolution standard_resolution(const FinSet& x, std::size_t bound = kDefaultBetaBound);

// The explicit iso coeq(pi1, pi2) ≅ X through which xi factors.
// Throws NotIso if the comparison map fails to be bijective.
Iso verify_coequalizer(const Resolution& r);

// The three-level map of resolutions induced by f: X -> Y; both squares
// commute (checked at construction).
struct ResolutionMap {
  FinMap top;   // B²(X) carrier -> B²(Y) carrier
  FinMap mid;   // B(X) carrier -> B(Y) carrier
  FinMap base;  // X -> Y
};

ResolutionMap resolution_map(const Resolution& rx, const Resolution& ry, const FinMap& f);

// Level-wise iso between standard_resolution(X⊔Y) and the componentwise
// coproduct of the two resolutions, commuting with all structure maps.
struct ResolutionCoproductIso {
  Resolution sum;        // resolution of X⊔Y
  Cospan base_cop;       // X ⊔ Y
  Cospan mid_cop;        // B(X) ⊔ B(Y) carriers
  Cospan top_cop;        // B²(X) ⊔ B²(Y) carriers
  Iso base_iso;          // sum.x ≅ base_cop.carrier (identity-shaped)
  Iso mid_iso;           // sum.b ≅ mid_cop.carrier
  Iso top_iso;           // sum.b2 ≅ top_cop.carrier
};

ResolutionCoproductIso resolution_coproduct(const Resolution& rx, const Resolution& ry,
                                            std::size_t bound = kDefaultBetaBound);

// Section of an epimorphism onto a beta carrier: s = β(h) for h(x) the least
// preimage of ι(x). Throws NotEpi when f is not surjective.
FinMap split_epi_section(const FinMap& f, const BetaSet& bx);

struct WeakFiberProduct {
  BetaSet carrier;  // β of the underlying fiber product
  FinSet underlying;
  FinMap proj1, proj2;
  FinMap f1, f2;
};

// The existence half of the fiber product in beta sets; uniqueness of the
// mediating map is not asserted.
WeakFiberProduct weak_fiber_product(const FinMap& f1, const FinMap& f2,
                                    std::size_t bound = kDefaultBetaBound);

// Mediating map β(h∘ι_Q) for a commuting competitor cone from βQ.
// Throws ConeDoesNotCommute if f1∘q1 != f2∘q2.
FinMap mediate(const WeakFiberProduct& w, const BetaSet& bq, const FinMap& q1,
               const FinMap& q2);

}  // namespace condensed
