#include "condensed/stone.hpp"

#include <algorithm>
#include <stdexcept>

namespace condensed {

namespace {

Label point_label(const Label& base_label) { return "u(" + base_label + ")"; }

Label subset_label(const FinSet& s, Mask m) {
  Label out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(m >> i & 1u)) continue;
    if (!first) out += ",";
    out += s.at(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

Ultrafilter Ultrafilter::principal(FinSet base, std::size_t at) {
  std::vector<Mask> members;
  Mask full = static_cast<Mask>((1u << base.size()) - 1u);
  for (Mask m = 0; m <= full; ++m) {
    if (m >> at & 1u) members.push_back(m);
  }
  return make(std::move(base), std::move(members));
}

Ultrafilter Ultrafilter::make(FinSet base, std::vector<Mask> members) {
  if (!axioms_hold(base.size(), members)) {
    throw Error(ErrorCode::InvalidAlgebra, "subset family violates the ultrafilter axioms");
  }
  Ultrafilter u;
  u.base_ = std::move(base);
  u.members_ = std::move(members);
  return u;
}

bool Ultrafilter::axioms_hold(std::size_t base_size, const std::vector<Mask>& members) {
  const Mask full = static_cast<Mask>((1u << base_size) - 1u);
  auto has = [&](Mask m) {
    return std::binary_search(members.begin(), members.end(), m);
  };
  if (!std::is_sorted(members.begin(), members.end())) return false;
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
  if (!has(full) || has(0)) return false;
  for (Mask a : members) {
    for (Mask b : members) {
      if (!has(a & b)) return false;
    }
    for (Mask b = 0; b <= full; ++b) {
      if ((a & b) == a && !has(b)) return false;  // upward closure
    }
  }
  for (Mask m = 0; m <= full; ++m) {
    if (has(m) == has(full & ~m)) return false;  // exactly one of A, S∖A
  }
  return true;
}

bool Ultrafilter::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::optional<std::size_t> Ultrafilter::principal_point() const {
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (contains(static_cast<Mask>(1u << i))) return i;
  }
  return std::nullopt;
}

std::vector<Ultrafilter> enumerate_ultrafilters(const FinSet& s, std::size_t bound) {
  if (s.size() > bound) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "|S| = " + std::to_string(s.size()) + " exceeds bound " +
                    std::to_string(bound));
  }
  const std::size_t n = s.size();
  const std::size_t num_subsets = std::size_t{1} << n;
  const Mask full = static_cast<Mask>(num_subsets - 1);

  std::vector<Ultrafilter> found;
  // Every family of subsets of S is a bitset over the 2^n subset masks.
  const std::uint64_t num_families = std::uint64_t{1} << num_subsets;
  for (std::uint64_t fam = 0; fam < num_families; ++fam) {
    auto has = [&](Mask m) { return fam >> m & 1u; };
    if (!has(full) || has(0)) continue;
    bool ok = true;
    for (Mask m = 0; ok && m <= full; ++m) {
      if (has(m) == has(full & ~m)) ok = false;
    }
    if (!ok) continue;
    std::vector<Mask> members;
    for (Mask m = 0; m <= full; ++m) {
      if (has(m)) members.push_back(m);
    }
    if (!Ultrafilter::axioms_hold(n, members)) continue;
    found.push_back(Ultrafilter::make(s, std::move(members)));
  }

  std::sort(found.begin(), found.end(), [](const Ultrafilter& a, const Ultrafilter& b) {
    auto pa = a.principal_point(), pb = b.principal_point();
    if (pa && pb && *pa != *pb) return *pa < *pb;
    return a.members() < b.members();
  });
  return found;
}

BetaSet beta(const FinSet& s, std::size_t bound) {
  BetaSet bs;
  bs.base = s;
  bs.points = enumerate_ultrafilters(s, bound);
  std::vector<Label> labels;
  labels.reserve(bs.points.size());
  for (const Ultrafilter& u : bs.points) {
    auto p = u.principal_point();
    if (!p) throw Error(ErrorCode::NonPrincipalPoint, "non-principal ultrafilter on a finite set");
    labels.push_back(point_label(s.at(*p)));
  }
  bs.carrier = FinSet::of(std::move(labels));
  std::vector<std::size_t> iota(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    iota[x] = bs.carrier.index_of(point_label(s.at(x)));
  }
  bs.iota = FinMap::from_table(s, bs.carrier, std::move(iota));
  return bs;
}

FinMap beta_map(const FinMap& f, const BetaSet& bs, const BetaSet& bt) {
  if (f.dom() != bs.base || f.cod() != bt.base) {
    throw Error(ErrorCode::NonComposable, "map does not connect the given beta sets");
  }
  const Mask t_full = static_cast<Mask>((1u << bt.base.size()) - 1u);
  std::vector<std::size_t> table(bs.points.size());
  for (std::size_t i = 0; i < bs.points.size(); ++i) {
    std::vector<Mask> image;
    for (Mask m = 0; m <= t_full && bt.base.size() > 0; ++m) {
      Mask pre = 0;
      for (std::size_t x = 0; x < bs.base.size(); ++x) {
        if (m >> f(x) & 1u) pre |= static_cast<Mask>(1u << x);
      }
      if (bs.points[i].contains(pre)) image.push_back(m);
    }
    bool placed = false;
    for (std::size_t j = 0; j < bt.points.size(); ++j) {
      if (bt.points[j].members() == image) {
        table[i] = j;
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("beta_map image is not an ultrafilter on T");
  }
  return FinMap::from_table(bs.carrier, bt.carrier, std::move(table));
}

FinMap xi(const BetaSet& bx) {
  std::vector<std::size_t> table(bx.points.size());
  for (std::size_t i = 0; i < bx.points.size(); ++i) {
    auto p = bx.points[i].principal_point();
    if (!p) throw Error(ErrorCode::NonPrincipalPoint, "ultrafilter has no limit point");
    table[i] = *p;
  }
  return FinMap::from_table(bx.carrier, bx.base, std::move(table));
}

BoolAlg BoolAlg::make(FinSet carrier, std::vector<std::vector<std::size_t>> meet,
                      std::vector<std::vector<std::size_t>> join,
                      std::vector<std::size_t> complement, std::size_t bottom,
                      std::size_t top) {
  const std::size_t n = carrier.size();
  auto bad = [](const char* what) -> Error {
    return Error(ErrorCode::InvalidAlgebra, what);
  };
  if (meet.size() != n || join.size() != n || complement.size() != n) throw bad("table sizes");
  for (std::size_t i = 0; i < n; ++i) {
    if (meet[i].size() != n || join[i].size() != n) throw bad("table sizes");
  }
  if (n == 0) throw bad("empty carrier");
  if (bottom >= n || top >= n) throw bad("bottom/top out of range");

  if (n <= 16) {
    for (std::size_t a = 0; a < n; ++a) {
      if (meet[a][top] != a || join[a][bottom] != a) throw bad("identity laws fail");
      if (join[a][complement[a]] != top || meet[a][complement[a]] != bottom)
        throw bad("complement laws fail");
      for (std::size_t b = 0; b < n; ++b) {
        if (meet[a][b] != meet[b][a] || join[a][b] != join[b][a])
          throw bad("commutativity fails");
        if (meet[a][join[a][b]] != a || join[a][meet[a][b]] != a)
          throw bad("absorption fails");
        for (std::size_t c = 0; c < n; ++c) {
          if (meet[meet[a][b]][c] != meet[a][meet[b][c]]) throw bad("meet associativity fails");
          if (join[join[a][b]][c] != join[a][join[b][c]]) throw bad("join associativity fails");
          if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]])
            throw bad("distributivity fails");
        }
      }
    }
  }

  BoolAlg alg;
  alg.carrier_ = std::move(carrier);
  alg.meet_ = std::move(meet);
  alg.join_ = std::move(join);
  alg.compl_ = std::move(complement);
  alg.bottom_ = bottom;
  alg.top_ = top;
  return alg;
}

BoolAlg powerset_algebra(const FinSet& s, std::size_t bound) {
  if (s.size() > bound) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "|S| = " + std::to_string(s.size()) + " exceeds bound " +
                    std::to_string(bound));
  }
  const std::size_t num = std::size_t{1} << s.size();
  const Mask full = static_cast<Mask>(num - 1);
  std::vector<Label> labels;
  labels.reserve(num);
  for (Mask m = 0; m < num; ++m) labels.push_back(subset_label(s, m));
  FinSet carrier = FinSet::of(std::move(labels));
  // Carrier is label-sorted; keep the index <-> mask association explicit.
  std::vector<std::size_t> of_mask(num);
  for (Mask m = 0; m < num; ++m) of_mask[m] = carrier.index_of(subset_label(s, m));
  std::vector<Mask> to_mask(num);
  for (Mask m = 0; m < num; ++m) to_mask[of_mask[m]] = m;

  std::vector<std::vector<std::size_t>> meet(num, std::vector<std::size_t>(num));
  std::vector<std::vector<std::size_t>> join(num, std::vector<std::size_t>(num));
  std::vector<std::size_t> compl_tab(num);
  for (std::size_t i = 0; i < num; ++i) {
    compl_tab[i] = of_mask[full & ~to_mask[i]];
    for (std::size_t j = 0; j < num; ++j) {
      meet[i][j] = of_mask[to_mask[i] & to_mask[j]];
      join[i][j] = of_mask[to_mask[i] | to_mask[j]];
    }
  }
  return BoolAlg::make(std::move(carrier), std::move(meet), std::move(join),
                       std::move(compl_tab), of_mask[0], of_mask[full]);
}

FinSet atoms(const BoolAlg& b) {
  std::vector<Label> out;
  const std::size_t n = b.carrier().size();
  for (std::size_t a = 0; a < n; ++a) {
    if (a == b.bottom()) continue;
    bool minimal = true;
    for (std::size_t c = 0; c < n && minimal; ++c) {
      if (c != b.bottom() && c != a && b.leq(c, a)) minimal = false;
    }
    if (minimal) out.push_back(b.carrier().at(a));
  }
  return FinSet::of(std::move(out));
}

FinSet spec(const BoolAlg& b) {
  const std::size_t n = b.carrier().size();
  if (n > 16) {
    throw Error(ErrorCode::SizeBoundExceeded, "spec requires carrier size <= 16");
  }
  std::vector<Label> out;
  const std::uint64_t num_subsets = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < num_subsets; ++u) {
    auto has = [&](std::size_t i) { return u >> i & 1u; };
    if (!has(b.top()) || has(b.bottom())) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      if (has(i) == has(b.complement(i))) ok = false;
    }
    for (std::size_t i = 0; ok && i < n; ++i) {
      if (!has(i)) continue;
      for (std::size_t j = 0; ok && j < n; ++j) {
        if (has(j) && !has(b.meet(i, j))) ok = false;
        if (b.leq(i, j) && !has(j)) ok = false;
      }
    }
    if (!ok) continue;
    // The minimum member of an ultrafilter on a finite algebra is an atom.
    std::size_t min = b.top();
    for (std::size_t i = 0; i < n; ++i) {
      if (has(i) && b.leq(i, min)) min = i;
    }
    out.push_back("uf(" + b.carrier().at(min) + ")");
  }
  return FinSet::of(std::move(out));
}

BoolAlg bool_product(const BoolAlg& a, const BoolAlg& b) {
  Span prod = product(a.carrier(), b.carrier());
  const FinSet& carrier = prod.carrier;
  const std::size_t n = carrier.size();
  auto pair_index = [&](std::size_t i, std::size_t j) {
    return carrier.index_of(pair_label(a.carrier().at(i), b.carrier().at(j)));
  };
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> compl_tab(n);
  for (std::size_t i = 0; i < n; ++i) {
    compl_tab[i] = pair_index(a.complement(prod.p1(i)), b.complement(prod.p2(i)));
    for (std::size_t j = 0; j < n; ++j) {
      meet[i][j] = pair_index(a.meet(prod.p1(i), prod.p1(j)), b.meet(prod.p2(i), prod.p2(j)));
      join[i][j] = pair_index(a.join(prod.p1(i), prod.p1(j)), b.join(prod.p2(i), prod.p2(j)));
    }
  }
  return BoolAlg::make(carrier, std::move(meet), std::move(join), std::move(compl_tab),
                       pair_index(a.bottom(), b.bottom()), pair_index(a.top(), b.top()));
}

std::optional<Iso> bool_iso(const BoolAlg& a, const BoolAlg& b) {
  if (a.carrier().size() != b.carrier().size()) return std::nullopt;
  FinSet atoms_a = atoms(a), atoms_b = atoms(b);
  if (atoms_a.size() != atoms_b.size()) return std::nullopt;
  const std::size_t k = atoms_a.size();
  std::vector<std::size_t> atom_idx_a(k), atom_idx_b(k);
  for (std::size_t i = 0; i < k; ++i) {
    atom_idx_a[i] = a.carrier().index_of(atoms_a.at(i));
    atom_idx_b[i] = b.carrier().index_of(atoms_b.at(i));
  }
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  do {
    // Each element is the join of the atoms below it; the candidate map
    // sends it to the join of the images of those atoms.
    const std::size_t n = a.carrier().size();
    std::vector<std::size_t> table(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t img = b.bottom();
      for (std::size_t i = 0; i < k; ++i) {
        if (a.leq(atom_idx_a[i], x)) img = b.join(img, atom_idx_b[perm[i]]);
      }
      table[x] = img;
    }
    FinMap f = FinMap::from_table(a.carrier(), b.carrier(), table);
    if (!is_bijective(f)) continue;
    bool hom = f(a.bottom()) == b.bottom() && f(a.top()) == b.top();
    for (std::size_t x = 0; hom && x < n; ++x) {
      if (f(a.complement(x)) != b.complement(f(x))) hom = false;
      for (std::size_t y = 0; hom && y < n; ++y) {
        if (f(a.meet(x, y)) != b.meet(f(x), f(y))) hom = false;
        if (f(a.join(x, y)) != b.join(f(x), f(y))) hom = false;
      }
    }
    if (hom) return Iso::of_bijection(f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Iso beta_coproduct_iso(const FinSet& s, const FinSet& t, std::size_t bound) {
  Cospan cop = coproduct(s, t);
  BetaSet b_sum = beta(cop.carrier, bound);
  BetaSet bs = beta(s, bound);
  BetaSet bt = beta(t, bound);
  Cospan beta_cop = coproduct(bs.carrier, bt.carrier);

  Mask left_mask = 0;
  for (std::size_t x = 0; x < s.size(); ++x) left_mask |= static_cast<Mask>(1u << cop.i1(x));

  std::vector<std::size_t> table(b_sum.points.size());
  for (std::size_t i = 0; i < b_sum.points.size(); ++i) {
    const Ultrafilter& u = b_sum.points[i];
    if (u.contains(left_mask)) {
      // Concentrates on S: induce {A ⊆ S : i1(A) ∈ U}.
      std::vector<Mask> induced;
      const Mask s_full = static_cast<Mask>((1u << s.size()) - 1u);
      for (Mask m = 0; s.size() > 0 && m <= s_full; ++m) {
        Mask lifted = 0;
        for (std::size_t x = 0; x < s.size(); ++x) {
          if (m >> x & 1u) lifted |= static_cast<Mask>(1u << cop.i1(x));
        }
        if (u.contains(lifted)) induced.push_back(m);
      }
      bool placed = false;
      for (std::size_t j = 0; j < bs.points.size(); ++j) {
        if (bs.points[j].members() == induced) {
          table[i] = beta_cop.i1(j);
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("induced family is not an ultrafilter on S");
    } else {
      std::vector<Mask> induced;
      const Mask t_full = static_cast<Mask>((1u << t.size()) - 1u);
      for (Mask m = 0; t.size() > 0 && m <= t_full; ++m) {
        Mask lifted = 0;
        for (std::size_t y = 0; y < t.size(); ++y) {
          if (m >> y & 1u) lifted |= static_cast<Mask>(1u << cop.i2(y));
        }
        if (u.contains(lifted)) induced.push_back(m);
      }
      bool placed = false;
      for (std::size_t j = 0; j < bt.points.size(); ++j) {
        if (bt.points[j].members() == induced) {
          table[i] = beta_cop.i2(j);
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("induced family is not an ultrafilter on T");
    }
  }
  return Iso::of_bijection(FinMap::from_table(b_sum.carrier, beta_cop.carrier, std::move(table)));
}

Iso recover_bijection(const BetaSet& bs, const BetaSet& bt, const Iso& iso) {
  if (iso.forward().dom() != bs.carrier || iso.forward().cod() != bt.carrier) {
    throw Error(ErrorCode::NotAnIso, "iso does not connect the given beta carriers");
  }
  std::vector<std::size_t> table(bs.base.size());
  for (std::size_t x = 0; x < bs.base.size(); ++x) {
    std::size_t j = iso.forward()(bs.iota(x));
    auto p = bt.points[j].principal_point();
    if (!p) throw Error(ErrorCode::NonPrincipalPoint, "transported point is not principal");
    table[x] = *p;
  }
  return Iso::of_bijection(FinMap::from_table(bs.base, bt.base, std::move(table)));
}

}  // namespace condensed
