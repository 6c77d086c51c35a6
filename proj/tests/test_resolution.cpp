#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "condensed/resolution.hpp"

using namespace condensed;

namespace {
FinSet fs(std::vector<Label> v) { return FinSet::of(std::move(v)); }
}

TEST_CASE("standard resolution shapes") {
  Resolution r0 = standard_resolution(fs({}));
  CHECK(r0.b.carrier.empty());
  CHECK(r0.btilde.empty());
  CHECK(r0.b2.carrier.empty());

  Resolution r1 = standard_resolution(fs({"*"}));
  CHECK(r1.b.carrier.size() == 1);
  CHECK(r1.btilde.size() == 1);
  CHECK(r1.b2.carrier.size() == 1);

  // xi is a bijection on finite discrete spaces, so the fiber product of xi
  // with itself is the diagonal.
  Resolution r3 = standard_resolution(FinSet::canonical(3));
  CHECK(r3.b.carrier.size() == 3);
  CHECK(r3.btilde.size() == 3);
  CHECK(r3.b2.carrier.size() == 3);
  CHECK(compose(r3.xi_map, r3.pi1) == compose(r3.xi_map, r3.pi2));
}

TEST_CASE("coequalizer of the resolution recovers X") {
  for (std::size_t n = 0; n <= 4; ++n) {
    Resolution r = standard_resolution(FinSet::canonical(n));
    Iso iso = verify_coequalizer(r);
    CHECK(iso.forward().cod() == r.x);
    CHECK(iso.forward().dom().size() == n);
  }
}

TEST_CASE("resolution_map of the identity is the identity") {
  FinSet x = FinSet::canonical(3);
  Resolution r = standard_resolution(x);
  ResolutionMap m = resolution_map(r, r, FinMap::identity(x));
  CHECK(m.base == FinMap::identity(x));
  CHECK(m.mid == FinMap::identity(r.b.carrier));
  CHECK(m.top == FinMap::identity(r.b2.carrier));
}

TEST_CASE("resolution_map preserves epis and composition") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      FinSet x = FinSet::canonical(n), y = FinSet::canonical(m);
      Resolution rx = standard_resolution(x), ry = standard_resolution(y);
      for (const FinMap& f : all_maps(x, y)) {
        if (!is_epi(f)) continue;
        ResolutionMap rm = resolution_map(rx, ry, f);
        CHECK(is_epi(rm.mid));
        CHECK(is_epi(rm.top));
      }
    }
  }

  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<std::size_t> pick(1, 3);
    FinSet x = FinSet::canonical(pick(rng));
    FinSet y = FinSet::canonical(pick(rng));
    FinSet z = FinSet::canonical(pick(rng));
    Resolution rx = standard_resolution(x), ry = standard_resolution(y),
               rz = standard_resolution(z);
    auto fx = all_maps(x, y), gy = all_maps(y, z);
    FinMap f = fx[rng() % fx.size()], g = gy[rng() % gy.size()];
    ResolutionMap mf = resolution_map(rx, ry, f);
    ResolutionMap mg = resolution_map(ry, rz, g);
    ResolutionMap mgf = resolution_map(rx, rz, compose(g, f));
    CHECK(mgf.base == compose(mg.base, mf.base));
    CHECK(mgf.mid == compose(mg.mid, mf.mid));
    CHECK(mgf.top == compose(mg.top, mf.top));
  }
}

TEST_CASE("resolution of a coproduct is the coproduct of resolutions") {
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 2; ++m) {
      FinSet x = FinSet::canonical(n);
      std::vector<Label> ylab;
      for (std::size_t i = 0; i < m; ++i) ylab.push_back("y" + std::to_string(i));
      FinSet y = fs(ylab);
      Resolution rx = standard_resolution(x), ry = standard_resolution(y);
      ResolutionCoproductIso iso = resolution_coproduct(rx, ry);
      CHECK(iso.sum.x.size() == n + m);
      CHECK(iso.mid_iso.forward().dom().size() == n + m);
      CHECK(iso.top_iso.forward().dom().size() == n + m);
    }
  }
}

TEST_CASE("split epi sections") {
  FinSet ab = fs({"a", "b"});
  BetaSet bab = beta(ab);
  CHECK(split_epi_section(FinMap::identity(bab.carrier), bab) ==
        FinMap::identity(bab.carrier));

  // Fibers {0,1} over u(a) and {2} over u(b): the least-preimage rule
  // picks 0 and 2.
  FinSet y = fs({"0", "1", "2"});
  FinMap f = FinMap::make(y, bab.carrier, {{"0", "u(a)"}, {"1", "u(a)"}, {"2", "u(b)"}});
  FinMap s = split_epi_section(f, bab);
  CHECK(s.apply("u(a)") == "0");
  CHECK(s.apply("u(b)") == "2");
  CHECK(compose(f, s) == FinMap::identity(bab.carrier));

  FinMap not_epi = FinMap::make(y, bab.carrier,
                                {{"0", "u(a)"}, {"1", "u(a)"}, {"2", "u(a)"}});
  CHECK_THROWS_AS(split_epi_section(not_epi, bab), Error);
}

TEST_CASE("split epi sections always split, randomized") {
  std::mt19937_64 rng(41);
  int tried = 0;
  while (tried < 200) {
    std::uniform_int_distribution<std::size_t> pick_n(1, 3);
    std::size_t n = pick_n(rng);
    BetaSet bx = beta(FinSet::canonical(n));
    std::uniform_int_distribution<std::size_t> pick_m(n, 4);
    FinSet y = FinSet::canonical(pick_m(rng));
    std::vector<std::size_t> table(y.size());
    std::uniform_int_distribution<std::size_t> pick_v(0, n - 1);
    for (auto& v : table) v = pick_v(rng);
    FinMap f = FinMap::from_table(y, bx.carrier, std::move(table));
    if (!is_epi(f)) continue;
    ++tried;
    FinMap s = split_epi_section(f, bx);
    CHECK(compose(f, s) == FinMap::identity(bx.carrier));
  }
}

TEST_CASE("weak fiber product existence property") {
  {
    // f1 = f2 = id: carrier is the diagonal, so |carrier| = |S|.
    BetaSet bs = beta(fs({"a", "b"}));
    FinMap idm = FinMap::identity(bs.carrier);
    WeakFiberProduct w = weak_fiber_product(idm, idm);
    CHECK(w.carrier.carrier.size() == 2);
  }
  {
    BetaSet b1 = beta(fs({"*"}));
    FinMap idm = FinMap::identity(b1.carrier);
    CHECK(weak_fiber_product(idm, idm).carrier.carrier.size() == 1);
  }
  {
    // |T1| = |T2| = 2 over a point: carrier is beta of a 4-element set.
    BetaSet bt1 = beta(fs({"a", "b"})), bt2 = beta(fs({"c", "d"})), bs = beta(fs({"*"}));
    FinMap f1 = FinMap::make(bt1.carrier, bs.carrier,
                             {{"u(a)", "u(*)"}, {"u(b)", "u(*)"}});
    FinMap f2 = FinMap::make(bt2.carrier, bs.carrier,
                             {{"u(c)", "u(*)"}, {"u(d)", "u(*)"}});
    WeakFiberProduct w = weak_fiber_product(f1, f2);
    CHECK(w.carrier.carrier.size() == 4);

    BetaSet bq = beta(fs({"p", "q"}));
    FinMap q1 = FinMap::make(bq.carrier, bt1.carrier, {{"u(p)", "u(a)"}, {"u(q)", "u(b)"}});
    FinMap q2 = FinMap::make(bq.carrier, bt2.carrier, {{"u(p)", "u(d)"}, {"u(q)", "u(c)"}});
    FinMap m = mediate(w, bq, q1, q2);
    CHECK(compose(w.proj1, m) == q1);
    CHECK(compose(w.proj2, m) == q2);
  }
}

TEST_CASE("weak fiber product mediates every small competitor cone") {
  BetaSet bt1 = beta(FinSet::canonical(2));
  BetaSet bt2 = beta(FinSet::canonical(2));
  BetaSet bs = beta(FinSet::canonical(2));
  for (const FinMap& f1 : all_maps(bt1.carrier, bs.carrier)) {
    for (const FinMap& f2 : all_maps(bt2.carrier, bs.carrier)) {
      WeakFiberProduct w = weak_fiber_product(f1, f2);
      for (std::size_t qn = 0; qn <= 2; ++qn) {
        BetaSet bq = beta(FinSet::canonical(qn));
        for (const FinMap& q1 : all_maps(bq.carrier, bt1.carrier)) {
          for (const FinMap& q2 : all_maps(bq.carrier, bt2.carrier)) {
            if (compose(f1, q1) != compose(f2, q2)) continue;
            FinMap m = mediate(w, bq, q1, q2);
            CHECK(compose(w.proj1, m) == q1);
            CHECK(compose(w.proj2, m) == q2);
          }
        }
      }
    }
  }
}

TEST_CASE("mediate rejects non-commuting cones") {
  BetaSet b2 = beta(FinSet::canonical(2));
  FinMap idm = FinMap::identity(b2.carrier);
  FinMap swap = FinMap::make(b2.carrier, b2.carrier,
                             {{"u(e0)", "u(e1)"}, {"u(e1)", "u(e0)"}});
  WeakFiberProduct w = weak_fiber_product(idm, idm);
  CHECK_THROWS_AS(mediate(w, b2, idm, swap), Error);
}
