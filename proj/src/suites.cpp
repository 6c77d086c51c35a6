#include "condensed/suites.hpp"

#include <random>
#include <stdexcept>

namespace condensed {

namespace {

void note(SuiteResult& r, std::string s) { r.details.push_back(std::move(s)); }

void fail(SuiteResult& r, std::string s) {
  r.passed = false;
  r.details.push_back("FAIL: " + std::move(s));
}

FinMap random_epi(std::mt19937_64& rng, const FinSet& dom, const FinSet& cod) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::size_t> tab(dom.size());
    for (auto& v : tab) v = rng() % cod.size();
    FinMap f = FinMap::from_table(dom, cod, std::move(tab));
    if (is_epi(f)) return f;
  }
  std::vector<std::size_t> tab(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) tab[i] = i % cod.size();
  return FinMap::from_table(dom, cod, std::move(tab));
}

FinMap random_section(std::mt19937_64& rng, const FinMap& f) {
  std::vector<std::size_t> tab(f.cod().size());
  for (std::size_t y = 0; y < f.cod().size(); ++y) {
    std::vector<std::size_t> pre;
    for (std::size_t x = 0; x < f.dom().size(); ++x) {
      if (f(x) == y) pre.push_back(x);
    }
    tab[y] = pre[rng() % pre.size()];
  }
  return FinMap::from_table(f.cod(), f.dom(), std::move(tab));
}

SuiteResult suite_ultrafilters() {
  SuiteResult r{"ultrafilters", true, {}};
  for (std::size_t n = 0; n <= 4; ++n) {
    auto ufs = enumerate_ultrafilters(FinSet::canonical(n));
    bool principal = true;
    for (const auto& u : ufs) principal = principal && u.principal_point().has_value();
    if (ufs.size() != n || !principal) {
      fail(r, "size " + std::to_string(n) + ": " + std::to_string(ufs.size()) +
                  " ultrafilters, principal=" + (principal ? "yes" : "no"));
    } else {
      note(r, "size " + std::to_string(n) + ": " + std::to_string(n) +
                  " ultrafilters, all principal (exhaustive over 2^(2^n) families)");
    }
  }
  return r;
}

SuiteResult suite_lemma1() {
  SuiteResult r{"lemma-1", true, {}};
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      FinSet s = FinSet::canonical(n), t = FinSet::canonical(m);
      BetaSet bs = beta(s), bt = beta(t);
      FinMap xs = xi(bs), xt = xi(bt);
      for (const FinMap& f : all_maps(s, t)) {
        FinMap bf = beta_map(f, bs, bt);
        if (compose(f, xs) != compose(xt, bf)) {
          fail(r, "f∘ξ != ξ∘βf at a map " + std::to_string(n) + "->" + std::to_string(m));
        }
        if (compose(bf, bs.iota) != compose(bt.iota, f)) {
          fail(r, "βf∘ι != ι∘f at a map " + std::to_string(n) + "->" + std::to_string(m));
        }
        ++checked;
      }
    }
  }
  note(r, "both unit and limit identities hold for all " + std::to_string(checked) +
              " maps between sets of size <= 3");
  return r;
}

SuiteResult suite_prop3() {
  SuiteResult r{"prop-3", true, {}};
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 2; ++m) {
      FinSet s = FinSet::canonical(n);
      std::vector<Label> ylab;
      for (std::size_t i = 0; i < m; ++i) ylab.push_back("y" + std::to_string(i));
      FinSet t = FinSet::of(ylab);
      try {
        Iso iso = beta_coproduct_iso(s, t);
        if (iso.forward().dom().size() != n + m) {
          fail(r, "β(S⊔T) carrier size mismatch at " + std::to_string(n) + "," +
                      std::to_string(m));
        }
      } catch (const std::exception& e) {
        fail(r, std::string("β(S⊔T) ≅ βS⊔βT failed: ") + e.what());
      }
    }
  }
  note(r, "β(S⊔T) ≅ βS⊔βT with validated round trips for all |S|,|T| <= 2");
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t sz = spec(powerset_algebra(FinSet::canonical(n))).size();
    if (sz != n) {
      fail(r, "|spec(P(S))| = " + std::to_string(sz) + " != " + std::to_string(n));
    }
  }
  note(r, "|spec(P(S))| = |S| for |S| <= 4");
  return r;
}

SuiteResult suite_lemma6() {
  SuiteResult r{"lemma-6", true, {}};
  for (std::size_t n = 0; n <= 4; ++n) {
    try {
      Resolution res = standard_resolution(FinSet::canonical(n));
      Iso iso = verify_coequalizer(res);
      if (iso.forward().cod() != res.x) fail(r, "iso has wrong codomain");
    } catch (const std::exception& e) {
      fail(r, "coeq ≅ X failed at |X| = " + std::to_string(n) + ": " + e.what());
    }
  }
  note(r, "coeq(B²(X) ⇉ B(X)) ≅ X exhibited for all |X| <= 4");
  return r;
}

// A random split fork with all carriers <= 4: random epi f with a random
// section g, a random epi p1 with section k, and p2 chosen fiberwise so that
// all four fork equations hold.
SplitFork random_fork(std::mt19937_64& rng) {
  std::size_t na = 1 + rng() % 3;
  std::size_t nb = na + rng() % (5 - na);
  std::size_t nc = nb + rng() % (5 - nb);
  FinSet a = FinSet::canonical(na), b = FinSet::canonical(nb), c = FinSet::canonical(nc);
  FinMap f = random_epi(rng, b, a);
  FinMap g = random_section(rng, f);
  FinMap p1 = random_epi(rng, c, b);
  FinMap k = random_section(rng, p1);
  std::vector<std::size_t> p2tab(c.size(), c.size());
  for (std::size_t x = 0; x < b.size(); ++x) p2tab[k(x)] = g(f(x));
  for (std::size_t z = 0; z < c.size(); ++z) {
    if (p2tab[z] != c.size()) continue;
    std::vector<std::size_t> fiber;
    for (std::size_t w = 0; w < b.size(); ++w) {
      if (f(w) == f(p1(z))) fiber.push_back(w);
    }
    p2tab[z] = fiber[rng() % fiber.size()];
  }
  FinMap p2 = FinMap::from_table(c, b, std::move(p2tab));
  return make_split_fork(f, g, p1, p2, k);
}

SuiteResult suite_key_lemma(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) cases = 500;
  SuiteResult r{"key-lemma", true, {}};
  note(r, "seed " + std::to_string(seed));
  std::mt19937_64 rng(seed);
  std::size_t passed = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    SplitFork fork = random_fork(rng);
    FinSet t = FinSet::canonical(1 + rng() % 3);
    KeyLemmaResult res = key_lemma_check(fork, hom_fork(fork, t));
    if (res.verdict) {
      ++passed;
    } else {
      fail(r, "random fork case " + std::to_string(i) + " is not an equalizer");
    }
  }
  note(r, std::to_string(passed) + "/" + std::to_string(cases) +
              " random split forks yield equalizer bijections");

  std::size_t prop12 = 0;
  for (std::size_t nb = 0; nb <= 3; ++nb) {
    for (std::size_t na = 0; na <= 3; ++na) {
      FinSet b = FinSet::canonical(nb), a = FinSet::canonical(na);
      for (const FinMap& f : all_maps(b, a)) {
        if (!is_epi(f)) continue;
        SplitFork fork = fork_from_epi(f);
        KeyLemmaResult res = key_lemma_check(fork, hom_fork(fork, FinSet::canonical(2)));
        if (res.verdict) {
          ++prop12;
        } else {
          fail(r, "programmatic fork from a surjection " + std::to_string(nb) + "->" +
                      std::to_string(na) + " failed");
        }
      }
    }
  }
  note(r, std::to_string(prop12) + " programmatic forks from all surjections of size <= 3 pass");
  return r;
}

SuiteResult suite_roundtrip(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) cases = 50;
  SuiteResult r{"roundtrip", true, {}};
  note(r, "seed " + std::to_string(seed));
  SitePtr site = Site::make(4, 2);
  std::mt19937_64 rng(seed);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    try {
      Presheaf f = sheafification_oracle(random_presheaf(site, rng(), 3));
      roundtrip_ch(f);                        // ex∘res ≅ id, iso checked inside
      roundtrip_beta(restrict_to_beta(f));    // res∘ex ≅ id
      ++ok;
    } catch (const std::exception& e) {
      fail(r, "case " + std::to_string(i) + ": " + e.what());
    }
  }
  note(r, std::to_string(ok) + "/" + std::to_string(cases) +
              " ★-presheaves round-trip with natural isos on the (M=4, N=2) site");
  return r;
}

SuiteResult suite_plus_times(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) cases = 100;
  SuiteResult r{"plus-times", true, {}};
  note(r, "seed " + std::to_string(seed));
  const std::size_t bell[] = {2, 1, 2, 5, 15};  // extra empty-covering object at 0
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t got = partitions(FinSet::canonical(n)).size();
    if (got != bell[n]) {
      fail(r, "partition count at size " + std::to_string(n) + " is " + std::to_string(got));
    }
  }
  note(r, "partition counts 2,1,2,5,15 for sizes 0..4 (Bell numbers, plus the empty covering)");

  SitePtr site = Site::make(4, 2);
  std::mt19937_64 rng(seed);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    Presheaf f = random_presheaf(site, rng(), 3);
    PlusResult p = plus(f);
    bool good = check_times(p.fplus).passed;
    for (std::size_t n = 0; good && n <= 4; ++n) {
      std::size_t closed = 1;
      for (std::size_t j = 0; j < n; ++j) closed *= f.at(1).size();
      if (p.fplus.at(n).size() != closed) good = false;
    }
    if (good) {
      ++ok;
    } else {
      fail(r, "case " + std::to_string(i) + ": F⁺ violates × or the closed form");
    }
  }
  note(r, std::to_string(ok) + "/" + std::to_string(cases) +
              " random presheaves: F⁺ passes × and matches the discrete closed form");
  return r;
}

SuiteResult suite_sharp_oracle(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) cases = 100;
  SuiteResult r{"sharp-oracle", true, {}};
  note(r, "seed " + std::to_string(seed));
  SitePtr site = Site::make(4, 2);
  std::mt19937_64 rng(seed);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    try {
      Presheaf f = random_presheaf(site, rng(), 3);
      SharpResult s = sharp(f);
      bool good = s.comparison.is_iso(s.sheaf) && check_times(s.sheaf).passed &&
                  check_star(s.sheaf).passed;
      if (good) {
        ++ok;
      } else {
        fail(r, "case " + std::to_string(i) + ": sharp disagrees with the oracle");
      }
    } catch (const std::exception& e) {
      fail(r, "case " + std::to_string(i) + ": " + e.what());
    }
  }
  note(r, std::to_string(ok) + "/" + std::to_string(cases) +
              " random presheaves: sharp ≅ oracle naturally, sharp passes × and ★");
  return r;
}

SuiteResult suite_adjunction(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) cases = 20;
  SuiteResult r{"adjunction", true, {}};
  note(r, "seed " + std::to_string(seed));
  SitePtr site = Site::make(4, 2);
  std::mt19937_64 rng(seed);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    Presheaf f = random_presheaf(site, rng(), 3);
    Presheaf g = sheafification_oracle(
        constant_presheaf(site, FinSet::canonical(1 + rng() % 3)));
    // A natural map F -> G from a random component at the point: the image
    // of x at X is the unique G(X) element whose coordinates are
    // φ(F(ι_j)(x)).
    Table phi(f.at(1).size());
    for (auto& v : phi) v = rng() % g.at(1).size();
    std::vector<Table> comps(site->num_objects());
    bool built = true;
    for (std::size_t n = 0; built && n < site->num_objects(); ++n) {
      comps[n].resize(f.at(n).size());
      std::vector<const Table*> f_incl, g_incl;
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t idx =
            site->index_of(FinMap::from_table(site->object(1), site->object(n), {j}));
        f_incl.push_back(&f.rtab(1, n, idx));
        g_incl.push_back(&g.rtab(1, n, idx));
      }
      for (std::size_t x = 0; built && x < f.at(n).size(); ++x) {
        std::size_t matches = 0;
        for (std::size_t y = 0; y < g.at(n).size(); ++y) {
          bool fits = true;
          for (std::size_t j = 0; fits && j < n; ++j) {
            if ((*g_incl[j])[y] != phi[(*f_incl[j])[x]]) fits = false;
          }
          if (fits) {
            comps[n][x] = y;
            ++matches;
          }
        }
        if (matches != 1) built = false;
      }
    }
    if (!built) {
      fail(r, "case " + std::to_string(i) + ": could not build the test map");
      continue;
    }
    NatTrans m = NatTrans::make(f, g, std::move(comps));
    std::size_t found = count_eta_factorizations(f, g, m);
    if (found == 1) {
      ++ok;
    } else {
      fail(r, "case " + std::to_string(i) + ": " + std::to_string(found) +
                  " factorizations through η");
    }
  }
  note(r, std::to_string(ok) + "/" + std::to_string(cases) +
              " triples factor uniquely through η (exhaustive mediating search; "
              "desk-scale evidence, not a proof)");
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"ultrafilters", "lemma-1",    "prop-3",       "lemma-6",   "key-lemma",
          "roundtrip",    "plus-times", "sharp-oracle", "adjunction"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases) {
  if (name == "ultrafilters") return suite_ultrafilters();
  if (name == "lemma-1") return suite_lemma1();
  if (name == "prop-3") return suite_prop3();
  if (name == "lemma-6") return suite_lemma6();
  if (name == "key-lemma") return suite_key_lemma(seed, cases);
  if (name == "roundtrip") return suite_roundtrip(seed, cases);
  if (name == "plus-times") return suite_plus_times(seed, cases);
  if (name == "sharp-oracle") return suite_sharp_oracle(seed, cases);
  if (name == "adjunction") return suite_adjunction(seed, cases);
  throw std::out_of_range("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(std::uint64_t seed, std::size_t cases) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, seed, cases));
  return out;
}

}  // namespace condensed
