#include "condensed/resolution.hpp"

#include <stdexcept>

namespace condensed {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

// Index of the btilde element with the given pair of projections.
std::size_t btilde_lookup(const Resolution& r, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < r.btilde.size(); ++j) {
    if (r.p1(j) == a && r.p2(j) == b) return j;
  }
  throw std::logic_error("pair not present in fiber product carrier");
}

}  // namespace

Resolution standard_resolution(const FinSet& x, std::size_t bound) {
  Resolution r;
  r.x = x;
  r.b = beta(x, bound);
  r.xi_map = xi(r.b);
  Span fp = fiber_product(r.xi_map, r.xi_map);
  r.btilde = fp.carrier;
  r.p1 = fp.p1;
  r.p2 = fp.p2;
  r.b2 = beta(r.btilde, bound);
  FinMap xi_bt = xi(r.b2);
  r.pi1 = compose(r.p1, xi_bt);
  r.pi2 = compose(r.p2, xi_bt);

  require(compose(r.xi_map, r.pi1) == compose(r.xi_map, r.pi2),
          "xi does not coequalize the resolution projections");
  require(x.empty() || is_epi(r.xi_map), "xi is not an epimorphism");
  return r;
}

Iso verify_coequalizer(const Resolution& r) {
  Quotient q = coequalizer(r.pi1, r.pi2);
  // xi coequalizes pi1, pi2, so it factors through proj; the comparison map
  // sends each class representative to its xi image.
  std::vector<std::size_t> table(q.carrier.size());
  for (std::size_t i = 0; i < r.b.carrier.size(); ++i) {
    table[q.proj(i)] = r.xi_map(i);
  }
  FinMap u = FinMap::from_table(q.carrier, r.x, std::move(table));
  require(compose(u, q.proj) == r.xi_map, "xi does not factor through the coequalizer");
  if (!is_bijective(u)) {
    throw Error(ErrorCode::NotIso, "coequalizer comparison map is not bijective");
  }
  return Iso::of_bijection(u);
}

ResolutionMap resolution_map(const Resolution& rx, const Resolution& ry, const FinMap& f) {
  if (f.dom() != rx.x || f.cod() != ry.x) {
    throw Error(ErrorCode::NonComposable, "map does not connect the two resolutions");
  }
  ResolutionMap m;
  m.base = f;
  m.mid = beta_map(f, rx.b, ry.b);

  // B̃(f): the unique map between the fiber products compatible with βf.
  std::vector<std::size_t> bt_table(rx.btilde.size());
  for (std::size_t k = 0; k < rx.btilde.size(); ++k) {
    bt_table[k] = btilde_lookup(ry, m.mid(rx.p1(k)), m.mid(rx.p2(k)));
  }
  FinMap bt_f = FinMap::from_table(rx.btilde, ry.btilde, std::move(bt_table));
  m.top = beta_map(bt_f, rx.b2, ry.b2);

  require(compose(m.mid, rx.pi1) == compose(ry.pi1, m.top),
          "resolution map: first square (pi1) does not commute");
  require(compose(m.mid, rx.pi2) == compose(ry.pi2, m.top),
          "resolution map: first square (pi2) does not commute");
  require(compose(f, rx.xi_map) == compose(ry.xi_map, m.mid),
          "resolution map: base square does not commute");
  return m;
}

ResolutionCoproductIso resolution_coproduct(const Resolution& rx, const Resolution& ry,
                                            std::size_t bound) {
  ResolutionCoproductIso out;
  out.base_cop = coproduct(rx.x, ry.x);
  out.sum = standard_resolution(out.base_cop.carrier, bound);
  out.base_iso = Iso::of_bijection(FinMap::identity(out.sum.x));

  out.mid_cop = coproduct(rx.b.carrier, ry.b.carrier);
  out.mid_iso = beta_coproduct_iso(rx.x, ry.x, bound);

  // Side/offset decoding for the mid coproduct carrier.
  std::vector<int> side(out.mid_cop.carrier.size());
  std::vector<std::size_t> offset(out.mid_cop.carrier.size());
  for (std::size_t u = 0; u < rx.b.carrier.size(); ++u) {
    side[out.mid_cop.i1(u)] = 0;
    offset[out.mid_cop.i1(u)] = u;
  }
  for (std::size_t u = 0; u < ry.b.carrier.size(); ++u) {
    side[out.mid_cop.i2(u)] = 1;
    offset[out.mid_cop.i2(u)] = u;
  }

  // btilde(X⊔Y) ≅ btilde(X) ⊔ btilde(Y): both projections of a fiber-product
  // element land on the same side.
  Cospan bt_cop = coproduct(rx.btilde, ry.btilde);
  std::vector<std::size_t> h_table(out.sum.btilde.size());
  for (std::size_t k = 0; k < out.sum.btilde.size(); ++k) {
    std::size_t a = out.mid_iso.forward()(out.sum.p1(k));
    std::size_t b = out.mid_iso.forward()(out.sum.p2(k));
    require(side[a] == side[b], "fiber product element crosses coproduct summands");
    if (side[a] == 0) {
      h_table[k] = bt_cop.i1(btilde_lookup(rx, offset[a], offset[b]));
    } else {
      h_table[k] = bt_cop.i2(btilde_lookup(ry, offset[a], offset[b]));
    }
  }
  FinMap h = FinMap::from_table(out.sum.btilde, bt_cop.carrier, std::move(h_table));

  BetaSet beta_bt_cop = beta(bt_cop.carrier, bound);
  FinMap beta_h = beta_map(h, out.sum.b2, beta_bt_cop);
  Iso bt_split = beta_coproduct_iso(rx.btilde, ry.btilde, bound);
  out.top_cop = coproduct(rx.b2.carrier, ry.b2.carrier);
  out.top_iso = Iso::of_bijection(compose(bt_split.forward(), beta_h));

  // Structure maps commute with the level-wise isos.
  FinMap pi1_sum = coproduct_map(rx.pi1, ry.pi1, out.top_cop, out.mid_cop);
  FinMap pi2_sum = coproduct_map(rx.pi2, ry.pi2, out.top_cop, out.mid_cop);
  FinMap xi_sum = coproduct_map(rx.xi_map, ry.xi_map, out.mid_cop, out.base_cop);
  require(compose(out.mid_iso.forward(), out.sum.pi1) ==
              compose(pi1_sum, out.top_iso.forward()),
          "coproduct iso: pi1 square does not commute");
  require(compose(out.mid_iso.forward(), out.sum.pi2) ==
              compose(pi2_sum, out.top_iso.forward()),
          "coproduct iso: pi2 square does not commute");
  require(compose(out.base_iso.forward(), out.sum.xi_map) ==
              compose(xi_sum, out.mid_iso.forward()),
          "coproduct iso: xi square does not commute");
  return out;
}

FinMap split_epi_section(const FinMap& f, const BetaSet& bx) {
  if (f.cod() != bx.carrier) {
    throw Error(ErrorCode::CodomainMismatch, "codomain is not the given beta carrier");
  }
  if (!is_epi(f)) throw Error(ErrorCode::NotEpi, "map onto beta carrier is not surjective");
  FinMap xi_map = xi(bx);
  // h(x) = least preimage of ι(x); s is the extension of h along ι.
  std::vector<std::size_t> h(bx.base.size());
  for (std::size_t x = 0; x < bx.base.size(); ++x) {
    std::size_t target = bx.iota(x);
    std::size_t y = f.dom().size();
    for (std::size_t cand = 0; cand < f.dom().size(); ++cand) {
      if (f(cand) == target) {
        y = cand;
        break;
      }
    }
    h[x] = y;
  }
  std::vector<std::size_t> s_table(bx.carrier.size());
  for (std::size_t k = 0; k < bx.carrier.size(); ++k) s_table[k] = h[xi_map(k)];
  FinMap s = FinMap::from_table(bx.carrier, f.dom(), std::move(s_table));
  require(compose(f, s) == FinMap::identity(bx.carrier), "section does not split f");
  return s;
}

WeakFiberProduct weak_fiber_product(const FinMap& f1, const FinMap& f2, std::size_t bound) {
  Span fp = fiber_product(f1, f2);
  WeakFiberProduct w;
  w.underlying = fp.carrier;
  w.carrier = beta(fp.carrier, bound);
  FinMap xi_p = xi(w.carrier);
  w.proj1 = compose(fp.p1, xi_p);
  w.proj2 = compose(fp.p2, xi_p);
  w.f1 = f1;
  w.f2 = f2;
  return w;
}

FinMap mediate(const WeakFiberProduct& w, const BetaSet& bq, const FinMap& q1,
               const FinMap& q2) {
  if (compose(w.f1, q1) != compose(w.f2, q2)) {
    throw Error(ErrorCode::ConeDoesNotCommute, "f1∘q1 != f2∘q2");
  }
  // h: βQ -> |P| picks the fiber-product element under the cone; the
  // mediating map is β(h∘ι_Q), i.e. ι_P ∘ h on principal points.
  std::vector<std::size_t> table(bq.carrier.size());
  for (std::size_t k = 0; k < bq.carrier.size(); ++k) {
    Label pl = pair_label(w.f1.dom().at(q1(k)), w.f2.dom().at(q2(k)));
    table[k] = w.carrier.iota(w.underlying.index_of(pl));
  }
  FinMap m = FinMap::from_table(bq.carrier, w.carrier.carrier, std::move(table));
  require(compose(w.proj1, m) == q1, "mediating map does not commute with proj1");
  require(compose(w.proj2, m) == q2, "mediating map does not commute with proj2");
  return m;
}

}  // namespace condensed
