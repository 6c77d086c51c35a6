#include "condensed/plus.hpp"

#include <algorithm>

namespace condensed {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

Label tuple_label(const std::vector<std::size_t>& comps) {
  Label out = "t[";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(comps[i]);
  }
  return out + "]";
}

// Union-find keeping the least member as root, so class representatives are
// canonical.
struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

// The site map object(|V_j|) -> object(|U_i|) induced by a block inclusion
// V_j ⊆ U_i: each element goes to its position within the bigger block.
FinMap block_inclusion(const Site& site, const std::vector<std::size_t>& small,
                       const std::vector<std::size_t>& big,
                       const std::vector<std::size_t>& elem_image) {
  std::vector<std::size_t> tab(small.size());
  for (std::size_t p = 0; p < small.size(); ++p) {
    std::size_t target = elem_image.empty() ? small[p] : elem_image[small[p]];
    auto it = std::find(big.begin(), big.end(), target);
    require(it != big.end(), "block inclusion target missing");
    tab[p] = static_cast<std::size_t>(it - big.begin());
  }
  return FinMap::from_table(site.object(small.size()), site.object(big.size()),
                            std::move(tab));
}

}  // namespace

std::vector<Partition> partitions(const FinSet& base, std::size_t bound) {
  if (base.size() > bound) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "partitions of a set of size " + std::to_string(base.size()));
  }
  std::vector<Partition> out;
  const std::size_t n = base.size();
  if (n == 0) {
    // The trivial covering ∅ = ∅ (one empty block) and the empty covering.
    out.push_back({base, {std::vector<std::size_t>{}}});
    out.push_back({base, {}});
    return out;
  }
  std::vector<std::size_t> rgs(n, 0);
  auto emit = [&]() {
    std::size_t nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    Partition p{base, std::vector<std::vector<std::size_t>>(nblocks)};
    for (std::size_t i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i);
    out.push_back(std::move(p));
  };
  // Restricted growth strings, lexicographic: the coarsest partition first.
  auto rec = [&](auto&& self, std::size_t i, std::size_t maxv) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= maxv; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxv, v + 1));
    }
  };
  rec(rec, 1, 1);
  return out;
}

std::optional<std::vector<std::size_t>> refines(const Partition& v, const Partition& u) {
  if (v.base != u.base) return std::nullopt;
  std::vector<std::size_t> owner(u.base.size());
  for (std::size_t i = 0; i < u.blocks.size(); ++i) {
    for (std::size_t x : u.blocks[i]) owner[x] = i;
  }
  std::vector<std::size_t> bm(v.blocks.size());
  std::vector<std::size_t> covered(u.blocks.size(), 0);
  for (std::size_t j = 0; j < v.blocks.size(); ++j) {
    if (v.blocks[j].empty()) {
      if (u.blocks.empty()) return std::nullopt;
      bm[j] = 0;
      continue;
    }
    bm[j] = owner[v.blocks[j][0]];
    for (std::size_t x : v.blocks[j]) {
      if (owner[x] != bm[j]) return std::nullopt;
    }
    covered[bm[j]] += v.blocks[j].size();
  }
  for (std::size_t i = 0; i < u.blocks.size(); ++i) {
    if (covered[i] != u.blocks[i].size()) return std::nullopt;
  }
  return bm;
}

std::vector<Refinement> refinement_poset(const std::vector<Partition>& parts) {
  std::vector<Refinement> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (auto bm = refines(parts[i], parts[j])) {
        out.push_back({i, j, std::move(*bm)});
      }
    }
  }
  return out;
}

CommonRefinement common_refinement(const Partition& u, const Partition& v) {
  if (u.base != v.base) {
    throw Error(ErrorCode::BaseMismatch, "partitions of different bases");
  }
  if (u.base.empty()) {
    if (u.blocks.size() == 1 && v.blocks.size() == 1) {
      return {u, {0}, {0}};
    }
    return {Partition{u.base, {}}, {}, {}};
  }
  struct Entry {
    std::vector<std::size_t> block;
    std::size_t i, j;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < u.blocks.size(); ++i) {
    for (std::size_t j = 0; j < v.blocks.size(); ++j) {
      std::vector<std::size_t> inter;
      std::set_intersection(u.blocks[i].begin(), u.blocks[i].end(), v.blocks[j].begin(),
                            v.blocks[j].end(), std::back_inserter(inter));
      if (!inter.empty()) entries.push_back({std::move(inter), i, j});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.block[0] < b.block[0]; });
  CommonRefinement out;
  out.w.base = u.base;
  for (Entry& e : entries) {
    out.w.blocks.push_back(std::move(e.block));
    out.to_u.push_back(e.i);
    out.to_v.push_back(e.j);
  }
  return out;
}

PlusDiagram plus_diagram(const Presheaf& f, std::size_t card) {
  const Site& site = *f.site();
  PlusDiagram d;
  d.base = site.object(card);
  d.parts = partitions(d.base);
  d.refinements = refinement_poset(d.parts);

  for (const Partition& p : d.parts) {
    // Mixed-radix enumeration of ∏_i F(β U_i) with canonical tuple labels.
    std::vector<std::size_t> radix;
    std::size_t total = 1;
    for (const auto& block : p.blocks) {
      radix.push_back(f.at(block.size()).size());
      total *= radix.back();
    }
    std::vector<Label> labels;
    std::vector<std::vector<std::size_t>> all_comps;
    for (std::size_t e = 0; e < total; ++e) {
      std::vector<std::size_t> comps(p.blocks.size());
      std::size_t rest = e;
      for (std::size_t j = p.blocks.size(); j-- > 0;) {
        comps[j] = rest % radix[j];
        rest /= radix[j];
      }
      labels.push_back(tuple_label(comps));
      all_comps.push_back(std::move(comps));
    }
    FinSet carrier = FinSet::of(std::move(labels));
    std::vector<std::vector<std::size_t>> decode(carrier.size());
    for (auto& comps : all_comps) {
      decode[carrier.index_of(tuple_label(comps))] = std::move(comps);
    }
    d.carriers.push_back(std::move(carrier));
    d.tuples.push_back(std::move(decode));
  }

  for (const Refinement& r : d.refinements) {
    const Partition& fine = d.parts[r.from];
    const Partition& coarse = d.parts[r.to];
    std::vector<std::size_t> tab(d.carriers[r.to].size());
    for (std::size_t e = 0; e < tab.size(); ++e) {
      const auto& s = d.tuples[r.to][e];
      std::vector<std::size_t> out(fine.blocks.size());
      for (std::size_t j = 0; j < fine.blocks.size(); ++j) {
        std::size_t i = r.block_map[j];
        FinMap incl = block_inclusion(site, fine.blocks[j], coarse.blocks[i], {});
        out[j] = f.rtab(fine.blocks[j].size(), coarse.blocks[i].size(),
                        site.index_of(incl))[s[i]];
      }
      tab[e] = d.carriers[r.from].index_of(tuple_label(out));
    }
    d.maps.push_back(FinMap::from_table(d.carriers[r.to], d.carriers[r.from], std::move(tab)));
  }
  return d;
}

ColimitSet filtered_colimit(const PlusDiagram& d) {
  std::vector<std::size_t> offset(d.parts.size() + 1, 0);
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    offset[p + 1] = offset[p] + d.carriers[p].size();
  }
  UnionFind uf(offset.back());
  for (std::size_t r = 0; r < d.refinements.size(); ++r) {
    const Refinement& ref = d.refinements[r];
    for (std::size_t x = 0; x < d.carriers[ref.to].size(); ++x) {
      uf.unite(offset[ref.to] + x, offset[ref.from] + d.maps[r](x));
    }
  }
  std::vector<std::size_t> roots;
  for (std::size_t g = 0; g < offset.back(); ++g) {
    if (uf.find(g) == g) roots.push_back(g);
  }
  std::size_t width = std::to_string(roots.empty() ? 0 : roots.size() - 1).size();
  std::vector<Label> labels;
  for (std::size_t c = 0; c < roots.size(); ++c) {
    std::string num = std::to_string(c);
    labels.push_back("q" + std::string(width - num.size(), '0') + num);
  }
  ColimitSet out;
  out.classes = FinSet::of(labels);  // already sorted by construction
  std::vector<std::size_t> class_of(offset.back());
  for (std::size_t c = 0; c < roots.size(); ++c) {
    std::size_t p = 0;
    while (offset[p + 1] <= roots[c]) ++p;
    out.reps.push_back({p, roots[c] - offset[p]});
  }
  for (std::size_t g = 0; g < offset.back(); ++g) {
    std::size_t root = uf.find(g);
    class_of[g] = static_cast<std::size_t>(
        std::lower_bound(roots.begin(), roots.end(), root) - roots.begin());
  }
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    std::vector<std::size_t> tab(d.carriers[p].size());
    for (std::size_t x = 0; x < tab.size(); ++x) tab[x] = class_of[offset[p] + x];
    out.legs.push_back(FinMap::from_table(d.carriers[p], out.classes, std::move(tab)));
  }
  return out;
}

PlusResult plus(const Presheaf& f) {
  SitePtr site = f.site();
  PlusResult result;
  for (std::size_t n = 0; n < site->num_objects(); ++n) {
    result.diagrams.push_back(plus_diagram(f, n));
    result.colimits.push_back(filtered_colimit(result.diagrams.back()));
  }

  std::vector<FinSet> values;
  for (const ColimitSet& c : result.colimits) values.push_back(c.classes);

  std::vector<std::vector<std::vector<Table>>> restr(site->num_objects());
  for (std::size_t a = 0; a < site->num_objects(); ++a) {
    restr[a].resize(site->num_objects());
    for (std::size_t b = 0; b < site->num_objects(); ++b) {
      for (const FinMap& u : site->hom(a, b)) {
        const PlusDiagram& db = result.diagrams[b];
        const PlusDiagram& da = result.diagrams[a];
        Table tab(values[b].size());
        for (std::size_t q = 0; q < tab.size(); ++q) {
          auto [pi, e] = result.colimits[b].reps[q];
          const Partition& up = db.parts[pi];
          const auto& s = db.tuples[pi][e];
          // Pull the partition back along u, dropping empty blocks.
          struct Entry {
            std::vector<std::size_t> block;
            std::size_t src;
          };
          std::vector<Entry> entries;
          for (std::size_t i = 0; i < up.blocks.size(); ++i) {
            std::vector<std::size_t> pre;
            for (std::size_t x = 0; x < site->object(a).size(); ++x) {
              if (std::find(up.blocks[i].begin(), up.blocks[i].end(), u(x)) !=
                  up.blocks[i].end()) {
                pre.push_back(x);
              }
            }
            if (!pre.empty()) entries.push_back({std::move(pre), i});
          }
          std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
            return x.block[0] < y.block[0];
          });
          Partition pulled{site->object(a), {}};
          for (const Entry& en : entries) pulled.blocks.push_back(en.block);
          std::size_t wp = 0;
          while (!(da.parts[wp] == pulled)) ++wp;
          std::vector<std::size_t> out(entries.size());
          for (std::size_t j = 0; j < entries.size(); ++j) {
            FinMap incl = block_inclusion(*site, entries[j].block,
                                          up.blocks[entries[j].src], u.table());
            out[j] = f.rtab(entries[j].block.size(), up.blocks[entries[j].src].size(),
                            site->index_of(incl))[s[entries[j].src]];
          }
          tab[q] = result.colimits[a].legs[wp](da.carriers[wp].index_of(tuple_label(out)));
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }
  result.fplus = Presheaf::make(site, std::move(values), std::move(restr));

  // Unit: the colimit leg at the trivial partition (one block).
  std::vector<Table> comps;
  for (std::size_t n = 0; n < site->num_objects(); ++n) {
    const PlusDiagram& d = result.diagrams[n];
    std::size_t triv = 0;
    while (d.parts[triv].blocks.size() != 1) ++triv;
    Table comp(f.at(n).size());
    for (std::size_t x = 0; x < comp.size(); ++x) {
      comp[x] = result.colimits[n].legs[triv](d.carriers[triv].index_of(tuple_label({x})));
    }
    comps.push_back(std::move(comp));
  }
  result.eta = NatTrans::make(f, result.fplus, std::move(comps));
  return result;
}

CheckReport check_plus_times(const Presheaf& f) {
  return check_times(plus(f).fplus);
}

Presheaf sheafification_oracle(const Presheaf& f) {
  SitePtr site = f.site();
  if (site->max_card() < 1) {
    throw Error(ErrorCode::BoundViolation, "oracle needs the one-point object");
  }
  const std::size_t base = f.at(1).size();
  std::vector<FinSet> values;
  std::vector<std::vector<std::vector<std::size_t>>> decode;
  for (std::size_t n = 0; n < site->num_objects(); ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= base;
    std::vector<Label> labels;
    std::vector<std::vector<std::size_t>> all_comps;
    for (std::size_t e = 0; e < total; ++e) {
      std::vector<std::size_t> comps(n);
      std::size_t rest = e;
      for (std::size_t j = n; j-- > 0;) {
        comps[j] = rest % base;
        rest /= base;
      }
      labels.push_back(tuple_label(comps));
      all_comps.push_back(std::move(comps));
    }
    FinSet carrier = FinSet::of(std::move(labels));
    std::vector<std::vector<std::size_t>> dec(carrier.size());
    for (auto& comps : all_comps) dec[carrier.index_of(tuple_label(comps))] = std::move(comps);
    values.push_back(std::move(carrier));
    decode.push_back(std::move(dec));
  }
  std::vector<std::vector<std::vector<Table>>> restr(site->num_objects());
  for (std::size_t a = 0; a < site->num_objects(); ++a) {
    restr[a].resize(site->num_objects());
    for (std::size_t b = 0; b < site->num_objects(); ++b) {
      for (const FinMap& u : site->hom(a, b)) {
        Table tab(values[b].size());
        for (std::size_t x = 0; x < tab.size(); ++x) {
          std::vector<std::size_t> out(site->object(a).size());
          for (std::size_t j = 0; j < out.size(); ++j) out[j] = decode[b][x][u(j)];
          tab[x] = values[a].index_of(tuple_label(out));
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }
  return Presheaf::make(site, std::move(values), std::move(restr));
}

SharpResult sharp(const Presheaf& f) {
  SitePtr site = f.site();
  Presheaf restricted = restrict_to_beta(f);
  PlusResult p = plus(restricted);
  SharpResult out;
  out.sheaf = extend(p.fplus);

  // ξ transported to the skeletal site is the identity, so the unit is the
  // plus unit followed by the label identification into the equalizer.
  std::vector<Table> unit_comps;
  for (std::size_t n = 0; n < site->num_objects(); ++n) {
    Table comp(f.at(n).size());
    for (std::size_t x = 0; x < comp.size(); ++x) {
      comp[x] = out.sheaf.at(n).index_of(p.fplus.at(n).at(p.eta.component(n)[x]));
    }
    unit_comps.push_back(std::move(comp));
  }
  out.unit = NatTrans::make(f, out.sheaf, std::move(unit_comps));

  out.oracle = sheafification_oracle(f);
  // The discrete-partition carrier is labeled exactly like the oracle value;
  // compare through its colimit leg.
  std::vector<Table> cmp_comps;
  for (std::size_t n = 0; n < site->num_objects(); ++n) {
    const PlusDiagram& d = p.diagrams[n];
    std::size_t disc = 0;
    auto all_singletons = [&](const Partition& q) {
      if (q.blocks.size() != n) return false;
      for (const auto& blk : q.blocks) {
        if (blk.size() != 1) return false;
      }
      return true;
    };
    while (!all_singletons(d.parts[disc])) ++disc;
    Table comp(out.oracle.at(n).size());
    for (std::size_t x = 0; x < comp.size(); ++x) {
      std::size_t e = d.carriers[disc].index_of(out.oracle.at(n).at(x));
      comp[x] = out.sheaf.at(n).index_of(
          p.colimits[n].classes.at(p.colimits[n].legs[disc](e)));
    }
    cmp_comps.push_back(std::move(comp));
  }
  out.comparison = NatTrans::make(out.oracle, out.sheaf, std::move(cmp_comps));
  return out;
}

std::size_t count_eta_factorizations(const Presheaf& f, const Presheaf& g,
                                     const NatTrans& m) {
  if (!check_times(g).passed) {
    throw Error(ErrorCode::TimesRequired, "mediating search needs a ×-presheaf target");
  }
  const Site& site = *f.site();
  PlusResult p = plus(f);
  const Presheaf& fp = p.fplus;

  const std::size_t n1 = fp.at(1).size();
  const std::size_t g1 = g.at(1).size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n1; ++i) {
    total *= g1;
    if (total > (1u << 20)) {
      throw Error(ErrorCode::SizeBoundExceeded, "mediating search space too large");
    }
  }

  std::size_t count = 0;
  for (std::size_t cand = 0; cand < total; ++cand) {
    Table u1(n1);
    std::size_t rest = cand;
    for (std::size_t i = n1; i-- > 0;) {
      u1[i] = rest % g1;
      rest /= g1;
    }
    bool ok = true;
    for (std::size_t x = 0; ok && x < f.at(1).size(); ++x) {
      if (u1[p.eta.component(1)[x]] != m.component(1)[x]) ok = false;
    }
    if (!ok) continue;

    // Propagate through the element inclusions; at most one image per
    // element because G(X) -> G({*})^X is injective for ×-presheaves.
    std::vector<Table> comps(site.num_objects());
    comps[1] = u1;
    for (std::size_t n = 0; ok && n < site.num_objects(); ++n) {
      if (n == 1) continue;
      comps[n].resize(fp.at(n).size());
      std::vector<const Table*> fp_incl, g_incl;
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t idx = site.index_of(FinMap::from_table(
            site.object(1), site.object(n), {j}));
        fp_incl.push_back(&fp.rtab(1, n, idx));
        g_incl.push_back(&g.rtab(1, n, idx));
      }
      for (std::size_t x = 0; ok && x < fp.at(n).size(); ++x) {
        std::size_t matches = 0, image = 0;
        for (std::size_t y = 0; y < g.at(n).size(); ++y) {
          bool fits = true;
          for (std::size_t j = 0; fits && j < n; ++j) {
            if ((*g_incl[j])[y] != u1[(*fp_incl[j])[x]]) fits = false;
          }
          if (fits) {
            ++matches;
            image = y;
          }
        }
        require(matches <= 1, "×-presheaf image not unique");
        if (matches == 0) {
          ok = false;
        } else {
          comps[n][x] = image;
        }
      }
    }
    if (!ok) continue;

    for (std::size_t n = 0; ok && n < site.num_objects(); ++n) {
      for (std::size_t x = 0; ok && x < f.at(n).size(); ++x) {
        if (comps[n][p.eta.component(n)[x]] != m.component(n)[x]) ok = false;
      }
    }
    if (!ok) continue;
    try {
      NatTrans::make(fp, g, comps);
      ++count;
    } catch (const Error&) {
    }
  }
  return count;
}

}  // namespace condensed
