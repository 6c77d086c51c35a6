#include "condensed/presheaf.hpp"

#include <algorithm>
#include <random>

namespace condensed {

namespace {

Label map_label(const std::vector<std::size_t>& table) {
  Label out = "[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(table[i]);
  }
  return out + "]";
}

}  // namespace

std::shared_ptr<const Site> Site::make(std::size_t max_card, std::size_t max_cover_size) {
  if (max_cover_size * max_cover_size > max_card) {
    throw Error(ErrorCode::BoundViolation,
                "max_cover_size^2 = " + std::to_string(max_cover_size * max_cover_size) +
                    " exceeds max_card = " + std::to_string(max_card));
  }
  if (max_card > 6) {
    throw Error(ErrorCode::BoundViolation, "max_card must be <= 6");
  }
  auto site = std::make_shared<Site>();
  site->max_card_ = max_card;
  site->max_cover_size_ = max_cover_size;
  for (std::size_t n = 0; n <= max_card; ++n) site->objects_.push_back(FinSet::canonical(n));
  site->homs_.resize(max_card + 1);
  for (std::size_t a = 0; a <= max_card; ++a) {
    site->homs_[a].resize(max_card + 1);
    for (std::size_t b = 0; b <= max_card; ++b) {
      site->homs_[a][b] = all_maps(site->objects_[a], site->objects_[b]);
    }
  }
  return site;
}

std::size_t Site::index_of(const FinMap& f) const {
  return map_index(f);
}

Presheaf Presheaf::make(SitePtr site, std::vector<FinSet> values,
                        std::vector<std::vector<std::vector<Table>>> restrictions) {
  const std::size_t n = site->num_objects();
  auto bad = [](const std::string& what) { return Error(ErrorCode::FunctorLawViolation, what); };
  if (values.size() != n || restrictions.size() != n) throw bad("table shape mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (restrictions[a].size() != n) throw bad("table shape mismatch");
    for (std::size_t b = 0; b < n; ++b) {
      if (restrictions[a][b].size() != site->hom(a, b).size()) throw bad("table shape mismatch");
      for (const Table& t : restrictions[a][b]) {
        if (t.size() != values[b].size()) throw bad("restriction table not total");
        for (std::size_t v : t) {
          if (v >= values[a].size()) throw bad("restriction value out of range");
        }
      }
    }
  }

  // F(id) = id.
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t id_idx = map_index(FinMap::identity(site->object(a)));
    const Table& t = restrictions[a][a][id_idx];
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (t[x] != x) throw bad("F(id) is not the identity at cardinality " + std::to_string(a));
    }
  }

  // F(g∘f) = F(f)∘F(g) for every composable pair.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto& hab = site->hom(a, b);
        const auto& hbc = site->hom(b, c);
        for (std::size_t i = 0; i < hab.size(); ++i) {
          for (std::size_t j = 0; j < hbc.size(); ++j) {
            // Index of g_j ∘ f_i in hom(a, c).
            std::size_t k = 0;
            for (std::size_t x = 0; x < site->object(a).size(); ++x) {
              k = k * site->object(c).size() + hbc[j](hab[i](x));
            }
            const Table& tfg = restrictions[a][c][k];
            const Table& tf = restrictions[a][b][i];
            const Table& tg = restrictions[b][c][j];
            for (std::size_t x = 0; x < values[c].size(); ++x) {
              if (tfg[x] != tf[tg[x]]) {
                throw bad("F(g∘f) != F(f)∘F(g) for pair (a,b,c) = (" + std::to_string(a) +
                          "," + std::to_string(b) + "," + std::to_string(c) + "), maps (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
              }
            }
          }
        }
      }
    }
  }

  Presheaf f;
  f.site_ = std::move(site);
  f.values_ = std::move(values);
  f.restr_ = std::move(restrictions);
  return f;
}

FinMap Presheaf::restriction(std::size_t a, std::size_t b, std::size_t k) const {
  return FinMap::from_table(values_[b], values_[a], restr_[a][b][k]);
}

NatTrans NatTrans::make(const Presheaf& f, const Presheaf& g, std::vector<Table> components) {
  const Site& site = *f.site();
  if (!(*f.site() == *g.site())) {
    throw Error(ErrorCode::FunctorLawViolation, "presheaves live on different sites");
  }
  if (components.size() != site.num_objects()) {
    throw Error(ErrorCode::FunctorLawViolation, "component count mismatch");
  }
  for (std::size_t a = 0; a < site.num_objects(); ++a) {
    if (components[a].size() != f.at(a).size()) {
      throw Error(ErrorCode::FunctorLawViolation, "component not total");
    }
    for (std::size_t v : components[a]) {
      if (v >= g.at(a).size()) {
        throw Error(ErrorCode::FunctorLawViolation, "component value out of range");
      }
    }
  }
  for (std::size_t a = 0; a < site.num_objects(); ++a) {
    for (std::size_t b = 0; b < site.num_objects(); ++b) {
      for (std::size_t k = 0; k < site.hom(a, b).size(); ++k) {
        const Table& tf = f.rtab(a, b, k);
        const Table& tg = g.rtab(a, b, k);
        for (std::size_t x = 0; x < f.at(b).size(); ++x) {
          if (components[a][tf[x]] != tg[components[b][x]]) {
            throw Error(ErrorCode::FunctorLawViolation,
                        "naturality square fails at map (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(k) + ")");
          }
        }
      }
    }
  }
  NatTrans t;
  t.components_ = std::move(components);
  return t;
}

bool NatTrans::is_iso(const Presheaf& target) const {
  for (std::size_t a = 0; a < components_.size(); ++a) {
    std::vector<bool> hit(target.at(a).size(), false);
    for (std::size_t v : components_[a]) {
      if (v >= hit.size() || hit[v]) return false;
      hit[v] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  }
  return true;
}

Presheaf representable(SitePtr site, std::size_t t_card) {
  const FinSet& t = site->object(t_card);
  std::vector<FinSet> values;
  for (std::size_t n = 0; n < site->num_objects(); ++n) {
    std::vector<Label> labels;
    for (const FinMap& h : all_maps(site->object(n), t)) labels.push_back(map_label(h.table()));
    values.push_back(FinSet::of(std::move(labels)));
  }
  std::vector<std::vector<std::vector<Table>>> restr(site->num_objects());
  for (std::size_t a = 0; a < site->num_objects(); ++a) {
    restr[a].resize(site->num_objects());
    for (std::size_t b = 0; b < site->num_objects(); ++b) {
      for (const FinMap& g : site->hom(a, b)) {
        Table tab(values[b].size());
        auto hs = all_maps(site->object(b), t);
        for (const FinMap& h : hs) {
          FinMap hg = compose(h, g);
          tab[values[b].index_of(map_label(h.table()))] =
              values[a].index_of(map_label(hg.table()));
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }
  return Presheaf::make(std::move(site), std::move(values), std::move(restr));
}

Presheaf constant_presheaf(SitePtr site, FinSet value) {
  std::vector<FinSet> values(site->num_objects(), value);
  Table id_tab(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) id_tab[i] = i;
  std::vector<std::vector<std::vector<Table>>> restr(site->num_objects());
  for (std::size_t a = 0; a < site->num_objects(); ++a) {
    restr[a].resize(site->num_objects());
    for (std::size_t b = 0; b < site->num_objects(); ++b) {
      restr[a][b].assign(site->hom(a, b).size(), id_tab);
    }
  }
  return Presheaf::make(std::move(site), std::move(values), std::move(restr));
}

Presheaf presheaf_product(const Presheaf& f, const Presheaf& g) {
  SitePtr site = f.site();
  const std::size_t n = site->num_objects();
  std::vector<FinSet> values;
  std::vector<Span> spans;
  for (std::size_t a = 0; a < n; ++a) {
    spans.push_back(product(f.at(a), g.at(a)));
    values.push_back(spans.back().carrier);
  }
  std::vector<std::vector<std::vector<Table>>> restr(n);
  for (std::size_t a = 0; a < n; ++a) {
    restr[a].resize(n);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < site->hom(a, b).size(); ++k) {
        Table tab(values[b].size());
        for (std::size_t x = 0; x < values[b].size(); ++x) {
          std::size_t fx = f.rtab(a, b, k)[spans[b].p1(x)];
          std::size_t gx = g.rtab(a, b, k)[spans[b].p2(x)];
          tab[x] = values[a].index_of(pair_label(f.at(a).at(fx), g.at(a).at(gx)));
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }
  return Presheaf::make(site, std::move(values), std::move(restr));
}

Presheaf presheaf_coproduct(const Presheaf& f, const Presheaf& g) {
  SitePtr site = f.site();
  const std::size_t n = site->num_objects();
  std::vector<FinSet> values;
  std::vector<Cospan> cops;
  for (std::size_t a = 0; a < n; ++a) {
    cops.push_back(coproduct(f.at(a), g.at(a)));
    values.push_back(cops.back().carrier);
  }
  std::vector<std::vector<std::vector<Table>>> restr(n);
  for (std::size_t a = 0; a < n; ++a) {
    restr[a].resize(n);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < site->hom(a, b).size(); ++k) {
        Table tab(values[b].size());
        for (std::size_t x = 0; x < f.at(b).size(); ++x) {
          tab[cops[b].i1(x)] = cops[a].i1(f.rtab(a, b, k)[x]);
        }
        for (std::size_t x = 0; x < g.at(b).size(); ++x) {
          tab[cops[b].i2(x)] = cops[a].i2(g.rtab(a, b, k)[x]);
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }
  return Presheaf::make(site, std::move(values), std::move(restr));
}

CheckReport check_times(const Presheaf& f) {
  CheckReport report;
  const Site& site = *f.site();
  if (f.at(0).size() != 1) {
    report.passed = false;
    report.witnesses.push_back("F(∅) has " + std::to_string(f.at(0).size()) +
                               " elements, expected 1");
  }
  for (std::size_t n = 0; n <= site.max_card(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      // X = object(n) split as the first k elements ⊔ the last n-k.
      std::size_t m = n - k;
      std::vector<std::size_t> t1(k), t2(m);
      for (std::size_t i = 0; i < k; ++i) t1[i] = i;
      for (std::size_t i = 0; i < m; ++i) t2[i] = k + i;
      FinMap i1 = FinMap::from_table(site.object(k), site.object(n), std::move(t1));
      FinMap i2 = FinMap::from_table(site.object(m), site.object(n), std::move(t2));
      const Table& r1 = f.rtab(k, n, site.index_of(i1));
      const Table& r2 = f.rtab(m, n, site.index_of(i2));
      // F(X) -> F(X1) × F(X2) must be a bijection.
      bool ok = f.at(n).size() == f.at(k).size() * f.at(m).size();
      std::vector<bool> seen(f.at(k).size() * f.at(m).size(), false);
      for (std::size_t x = 0; ok && x < f.at(n).size(); ++x) {
        std::size_t key = r1[x] * f.at(m).size() + r2[x];
        if (seen[key]) ok = false;
        seen[key] = true;
      }
      if (!ok) {
        report.passed = false;
        report.witnesses.push_back("decomposition " + std::to_string(n) + " = " +
                                   std::to_string(k) + " ⊔ " + std::to_string(m) +
                                   ": F(X) -> F(X1)×F(X2) is not a bijection");
      }
    }
  }
  return report;
}

CheckReport check_star(const Presheaf& f) {
  CheckReport report;
  const Site& site = *f.site();
  report.notes.push_back(
      "cover family: epimorphisms with domain cardinality <= " +
      std::to_string(site.max_cover_size()) +
      "; cofinality of this family for the finite-set topology is assumed, not proved");
  for (std::size_t y = 0; y <= site.max_cover_size(); ++y) {
    for (std::size_t x = 0; x <= y; ++x) {
      for (std::size_t fi = 0; fi < site.hom(y, x).size(); ++fi) {
        const FinMap& epi = site.map_at(y, x, fi);
        if (!is_epi(epi)) continue;
        Span fp = fiber_product(epi, epi);
        std::size_t w = fp.carrier.size();
        // Transport Y×_X Y to the site object of its cardinality.
        FinMap tau = order_iso(site.object(w), fp.carrier);
        FinMap p1 = compose(fp.p1, tau);
        FinMap p2 = compose(fp.p2, tau);
        const Table& rp1 = f.rtab(w, y, site.index_of(p1));
        const Table& rp2 = f.rtab(w, y, site.index_of(p2));
        const Table& rf = f.rtab(y, x, fi);
        // Natural map F(X) -> eq(F(Y) ⇉ F(Y×_X Y)) must be a bijection.
        std::vector<bool> in_image(f.at(y).size(), false);
        bool ok = true;
        for (std::size_t v = 0; v < f.at(x).size(); ++v) {
          std::size_t img = rf[v];
          if (rp1[img] != rp2[img] || in_image[img]) {
            ok = false;
            break;
          }
          in_image[img] = true;
        }
        if (ok) {
          for (std::size_t c = 0; c < f.at(y).size(); ++c) {
            if (rp1[c] == rp2[c] && !in_image[c]) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) {
          report.passed = false;
          report.witnesses.push_back("epi " + std::to_string(y) + " -> " + std::to_string(x) +
                                     " (index " + std::to_string(fi) + ")");
        }
      }
    }
  }
  return report;
}

Presheaf random_presheaf(SitePtr site, std::uint64_t seed, std::size_t value_size_bound) {
  std::mt19937_64 rng(seed);
  // Seed-driven combination of representables and constants under pointwise
  // product and coproduct; each building block is functorial, so the result
  // is too. Growth is capped by the size of the value at the point.
  auto piece = [&]() -> Presheaf {
    std::size_t max_t = std::min<std::size_t>(3, site->max_card());
    if (rng() % 2 == 0 && max_t >= 1) {
      std::uniform_int_distribution<std::size_t> pick(1, max_t);
      return representable(site, pick(rng));
    }
    std::uniform_int_distribution<std::size_t> pick(1, std::max<std::size_t>(1, value_size_bound));
    std::size_t k = pick(rng);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("c" + std::to_string(i));
    return constant_presheaf(site, FinSet::of(std::move(labels)));
  };

  Presheaf f = piece();
  std::uniform_int_distribution<int> pick_ops(0, 2);
  int ops = pick_ops(rng);
  for (int i = 0; i < ops; ++i) {
    Presheaf g = piece();
    bool use_product = rng() % 2 == 0;
    std::size_t at_point = use_product ? f.at(1).size() * g.at(1).size()
                                       : f.at(1).size() + g.at(1).size();
    if (at_point > value_size_bound) continue;
    f = use_product ? presheaf_product(f, g) : presheaf_coproduct(f, g);
  }
  return f;
}

Presheaf with_phantom(const Presheaf& f, std::size_t like) {
  // Deliberately NOT a lawful presheaf: the phantom aliases `like` under
  // every non-identity restriction out of the point object, which breaks
  // F(g∘h) = F(h)∘F(g) for any section h of an epi g onto the point. It
  // exists purely so the ★ checker's failure reporting can be exercised;
  // Presheaf::make rejects this data (see the unit tests).
  const SitePtr& site = f.site();
  std::vector<FinSet> values = f.values();
  std::vector<Label> labels = values[1].elems();
  labels.push_back("~ph");  // sorts last, so existing indices are stable
  std::size_t ph = labels.size() - 1;
  values[1] = FinSet::of(std::move(labels));

  std::vector<std::vector<std::vector<Table>>> restr(site->num_objects());
  for (std::size_t a = 0; a < site->num_objects(); ++a) {
    restr[a].resize(site->num_objects());
    for (std::size_t b = 0; b < site->num_objects(); ++b) {
      for (std::size_t k = 0; k < site->hom(a, b).size(); ++k) {
        Table tab = f.rtab(a, b, k);
        if (b == 1) {
          bool is_id = a == 1 && site->map_at(a, b, k) == FinMap::identity(site->object(1));
          tab.push_back(is_id ? ph : tab[like]);
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }

  Presheaf out;
  out.site_ = site;
  out.values_ = std::move(values);
  out.restr_ = std::move(restr);
  return out;
}

}  // namespace condensed
