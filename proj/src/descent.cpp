#include "condensed/descent.hpp"

namespace condensed {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

Label map_label(const FinMap& f) {
  Label out = "[";
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.table()[i]);
  }
  return out + "]";
}

}  // namespace

SplitFork make_split_fork(FinMap f, FinMap g, FinMap p1, FinMap p2, FinMap k) {
  auto violated = [](const char* eq) {
    return Error(ErrorCode::ForkLawViolation, std::string("violated: ") + eq);
  };
  if (compose(f, p1) != compose(f, p2)) throw violated("f∘p1 = f∘p2");
  if (compose(f, g) != FinMap::identity(f.cod())) throw violated("f∘g = id");
  if (compose(p1, k) != FinMap::identity(f.dom())) throw violated("p1∘k = id");
  if (compose(p2, k) != compose(g, f)) throw violated("p2∘k = g∘f");
  SplitFork fork;
  fork.a = f.cod();
  fork.b = f.dom();
  fork.c = p1.dom();
  fork.f = std::move(f);
  fork.g = std::move(g);
  fork.p1 = std::move(p1);
  fork.p2 = std::move(p2);
  fork.k = std::move(k);
  return fork;
}

SplitFork fork_from_epi(const FinMap& f) {
  if (!is_epi(f)) throw Error(ErrorCode::NotEpi, "fork_from_epi needs a surjection");
  const FinSet& b = f.dom();
  const FinSet& a = f.cod();
  // Least-preimage section.
  std::vector<std::size_t> sec(a.size(), b.size());
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (sec[f(x)] == b.size()) sec[f(x)] = x;
  }
  FinMap g = FinMap::from_table(a, b, std::move(sec));
  Span fp = fiber_product(f, f);
  // k = ⟨id, g∘f⟩ via the pair labels of the fiber-product carrier.
  std::vector<std::size_t> ktab(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) {
    ktab[x] = fp.carrier.index_of(pair_label(b.at(x), b.at(g(f(x)))));
  }
  FinMap k = FinMap::from_table(b, fp.carrier, std::move(ktab));
  return make_split_fork(f, g, fp.p1, fp.p2, k);
}

ForkFunctor hom_fork(const SplitFork& fork, const FinSet& t) {
  auto value = [&](const FinSet& x) {
    std::vector<Label> labels;
    for (const FinMap& h : all_maps(x, t)) labels.push_back(map_label(h));
    return FinSet::of(std::move(labels));
  };
  ForkFunctor out;
  out.fa = value(fork.a);
  out.fb = value(fork.b);
  out.fc = value(fork.c);
  auto precompose = [&](const FinMap& u, const FinSet& dom_val, const FinSet& cod_val) {
    std::vector<std::size_t> tab(dom_val.size());
    for (const FinMap& h : all_maps(u.cod(), t)) {
      tab[dom_val.index_of(map_label(h))] = cod_val.index_of(map_label(compose(h, u)));
    }
    return FinMap::from_table(dom_val, cod_val, std::move(tab));
  };
  out.rf = precompose(fork.f, out.fa, out.fb);
  out.rg = precompose(fork.g, out.fb, out.fa);
  out.rp1 = precompose(fork.p1, out.fb, out.fc);
  out.rp2 = precompose(fork.p2, out.fb, out.fc);
  out.rk = precompose(fork.k, out.fc, out.fb);
  return out;
}

KeyLemmaResult key_lemma_check(const SplitFork& fork, const ForkFunctor& F) {
  (void)fork;
  auto violated = [](const char* eq) {
    return Error(ErrorCode::ForkLawViolation, std::string("functor image violated: ") + eq);
  };
  if (compose(F.rg, F.rf) != FinMap::identity(F.fa)) throw violated("F(g)∘F(f) = id");
  if (compose(F.rk, F.rp1) != FinMap::identity(F.fb)) throw violated("F(k)∘F(p1) = id");
  if (compose(F.rk, F.rp2) != compose(F.rf, F.rg)) throw violated("F(k)∘F(p2) = F(f)∘F(g)");
  if (compose(F.rp1, F.rf) != compose(F.rp2, F.rf)) throw violated("F(p1)∘F(f) = F(p2)∘F(f)");

  SubObject e = equalizer(F.rp1, F.rp2);
  KeyLemmaResult result;
  if (e.carrier.size() != F.fa.size()) return result;
  std::vector<std::size_t> fwd(F.fa.size());
  std::vector<bool> hit(e.carrier.size(), false);
  for (std::size_t x = 0; x < F.fa.size(); ++x) {
    fwd[x] = e.carrier.index_of(F.fb.at(F.rf(x)));
    if (hit[fwd[x]]) return result;
    hit[fwd[x]] = true;
  }
  result.verdict = true;
  result.iso = Iso::make(FinMap::from_table(F.fa, e.carrier, std::move(fwd)),
                         compose(F.rg, e.incl));
  return result;
}

Presheaf restrict_to_beta(const Presheaf& f) {
  const Site& site = *f.site();
  std::vector<BetaSet> betas;
  for (std::size_t n = 0; n < site.num_objects(); ++n) betas.push_back(beta(site.object(n)));
  for (std::size_t n = 0; n < site.num_objects(); ++n) {
    require(betas[n].iota == order_iso(site.object(n), betas[n].carrier),
            "principal embedding is not the order identification");
  }
  // Transport every restriction along the identification: β of a site map,
  // conjugated back through the principal points, must be the map itself.
  for (std::size_t a = 0; a < site.num_objects(); ++a) {
    for (std::size_t b = 0; b < site.num_objects(); ++b) {
      for (const FinMap& u : site.hom(a, b)) {
        FinMap bu = beta_map(u, betas[a], betas[b]);
        FinMap back = compose(inverse(betas[b].iota), compose(bu, betas[a].iota));
        require(back == u, "β does not collapse to the identity on the skeletal site");
      }
    }
  }
  return f;
}

Presheaf extend(const Presheaf& g) {
  SitePtr site = g.site();
  const std::size_t n = site->num_objects();
  std::vector<Resolution> res;
  std::vector<FinMap> taus;       // object(m) -> B(object m) carrier
  std::vector<SubObject> eqs;     // Ĝ(m) as a subset of G(m)
  for (std::size_t m = 0; m < n; ++m) {
    res.push_back(standard_resolution(site->object(m)));
    taus.push_back(order_iso(site->object(m), res[m].b.carrier));
    FinMap tau2 = order_iso(site->object(m), res[m].b2.carrier);
    // The two projections B⁽²⁾ ⇉ B, conjugated to site maps.
    FinMap q1 = compose(inverse(taus[m]), compose(res[m].pi1, tau2));
    FinMap q2 = compose(inverse(taus[m]), compose(res[m].pi2, tau2));
    eqs.push_back(equalizer(g.restriction(m, m, site->index_of(q1)),
                            g.restriction(m, m, site->index_of(q2))));
  }

  std::vector<FinSet> values;
  for (std::size_t m = 0; m < n; ++m) values.push_back(eqs[m].carrier);

  std::vector<std::vector<std::vector<Table>>> restr(n);
  for (std::size_t a = 0; a < n; ++a) {
    restr[a].resize(n);
    for (std::size_t b = 0; b < n; ++b) {
      for (const FinMap& u : site->hom(a, b)) {
        ResolutionMap rm = resolution_map(res[a], res[b], u);
        FinMap mu = compose(inverse(taus[b]), compose(rm.mid, taus[a]));
        const Table& gmu = g.rtab(a, b, site->index_of(mu));
        Table tab(values[b].size());
        for (std::size_t j = 0; j < values[b].size(); ++j) {
          std::size_t x = g.at(b).index_of(values[b].at(j));
          const Label& restricted = g.at(a).at(gmu[x]);
          require(values[a].contains(restricted),
                  "restriction leaves the equalizer subset");
          tab[j] = values[a].index_of(restricted);
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }
  return Presheaf::make(site, std::move(values), std::move(restr));
}

namespace {

// Component tables of the natural map F -> Ĥ along G(ξ) followed by the
// equalizer identification.
NatTrans unit_to_extension(const Presheaf& from, const Presheaf& hat) {
  const Site& site = *from.site();
  std::vector<Table> comps;
  for (std::size_t m = 0; m < site.num_objects(); ++m) {
    Resolution r = standard_resolution(site.object(m));
    FinMap tau = order_iso(site.object(m), r.b.carrier);
    FinMap xi_t = compose(r.xi_map, tau);  // object(m) -> object(m)
    const Table& rxi = from.rtab(m, m, site.index_of(xi_t));
    Table comp(from.at(m).size());
    for (std::size_t x = 0; x < comp.size(); ++x) {
      comp[x] = hat.at(m).index_of(from.at(m).at(rxi[x]));
    }
    comps.push_back(std::move(comp));
  }
  return NatTrans::make(from, hat, std::move(comps));
}

}  // namespace

NatTrans roundtrip_beta(const Presheaf& g) {
  Presheaf hat = restrict_to_beta(extend(g));
  NatTrans t = unit_to_extension(g, hat);
  require(t.is_iso(hat), "res∘ex is not isomorphic to the identity");
  return t;
}

NatTrans roundtrip_ch(const Presheaf& f) {
  if (!check_star(f).passed) {
    throw Error(ErrorCode::StarRequired, "round trip through extension requires ★");
  }
  Presheaf hat = extend(restrict_to_beta(f));
  NatTrans t = unit_to_extension(f, hat);
  require(t.is_iso(hat), "ex∘res is not isomorphic to the identity");
  return t;
}

CheckReport star_preservation_check(const Presheaf& g) {
  return check_star(extend(g));
}

}  // namespace condensed
