#include "hyspec/relative.hpp"

#include <algorithm>

#include "hyspec/errors.hpp"
#include "hyspec/spectrum.hpp"

namespace hyspec {

bool is_hyj(const Ideal& I, const Ideal& J, const SubSpace& Y) {
  for (int a : I.element_list()) {
    Bitset kh = kernel(Y, hull_elem(Y, a).members).members();
    if (!(kh & J.members()).is_subset_of(I.members())) return false;
  }
  return true;
}

bool is_strong_hyj(const Ideal& I, const Ideal& J, const SubSpace& Y) {
  Bitset kh = kernel(Y, hull(Y, I).members).members();
  return (kh & J.members()).is_subset_of(I.members());
}

bool is_strong_hyj_subset_oracle(const Ideal& I, const Ideal& J, const SubSpace& Y) {
  std::vector<int> elems = I.element_list();
  const std::size_t k = elems.size();
  if (k > 24) throw CapExceeded("subset oracle over an ideal with >24 elements");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Bitset F(I.ring().size());
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) F.set(elems[i]);
    Bitset kh = kernel(Y, hull_set(Y, F).members).members();
    if (!(kh & J.members()).is_subset_of(I.members())) return false;
  }
  return true;
}

namespace {

std::vector<int> subideal_indices(const YCache& c, const Ideal& I) {
  std::vector<int> out;
  for (std::size_t j = 0; j < c.lattice->ideals.size(); ++j)
    if (c.lattice->ideals[j].is_subset_of(I)) out.push_back(static_cast<int>(j));
  return out;
}

}  // namespace

ConditionProfile hyj_equivalents(const YCache& c, int i, int j, bool strong) {
  ConditionProfile p;
  p.family = strong ? "strong-hyj" : "hyj";
  const IdealLattice& lat = *c.lattice;
  const Ideal& I = lat.ideals[i];
  const Ideal& J = lat.ideals[j];

  // (a) the defining condition
  p.add("a", strong ? c.is_strong_hyj(i, j) : c.is_hyj(i, j));

  // (b) closure cap J inside I; (c) closure cap J = I cap J
  int cl = strong ? c.ish[i] : c.ih[i];
  Bitset cl_and_j = lat.ideals[cl].members() & J.members();
  p.add("b", cl_and_j.is_subset_of(I.members()));
  p.add("c", cl_and_j == (I.members() & J.members()));

  // (d)/(e) existence of a (strong) H_Y-ideal K above I
  bool d = false, e = false;
  for (std::size_t k = 0; k < lat.ideals.size(); ++k) {
    bool hy_k = strong ? c.strong[k] : c.hy[k];
    if (!hy_k || !I.is_subset_of(lat.ideals[k])) continue;
    Bitset kj = lat.ideals[k].members() & J.members();
    if (kj == (I.members() & J.members())) d = true;
    if (kj.is_subset_of(I.members())) e = true;
  }
  p.add("d", d);
  p.add("e", e);

  // (f) hull comparisons push membership from I to J
  bool f = true;
  std::string fw;
  if (!strong) {
    for (int a : I.element_list()) {
      for (int b : J.element_list())
        if (c.hull_of_elem[a].is_subset_of(c.hull_of_elem[b]) && !I.contains(b)) {
          f = false;
          fw = "a=" + std::to_string(a) + ", b=" + std::to_string(b);
        }
    }
  } else {
    for (int fi : subideal_indices(c, I))
      for (int ei : subideal_indices(c, J))
        if (c.hull_of_ideal[fi].is_subset_of(c.hull_of_ideal[ei]) &&
            !lat.ideals[ei].is_subset_of(I)) {
          f = false;
          fw = "F=" + lat.ideals[fi].to_string() + ", E=" + lat.ideals[ei].to_string();
        }
  }
  p.add("f", f, fw);
  return p;
}

std::vector<int> factor_indices(const YCache& c, int i, bool strong) {
  std::vector<int> out;
  const Ideal& I = c.ideal(i);
  for (std::size_t j = 0; j < c.lattice->ideals.size(); ++j) {
    if (c.lattice->ideals[j].is_subset_of(I)) continue;
    bool ok = strong ? c.is_strong_hyj(i, static_cast<int>(j))
                     : c.is_hyj(i, static_cast<int>(j));
    if (ok) out.push_back(static_cast<int>(j));
  }
  return out;
}

RelativeResult is_relative(const YCache& c, int i, bool strong) {
  RelativeResult r;
  const Ideal& I = c.ideal(i);
  const FiniteRing& ring = *c.lattice->ring;

  std::vector<int> fs = factor_indices(c, i, strong);
  if (!fs.empty()) {
    r.relative = true;
    r.factor = fs.front();
  }

  // principal route: c outside I with <c> cap kh_Y(a) inside I for each
  // a in I (kh_Y(I) for the strong variant)
  std::optional<int> principal;
  for (int x = 0; x < ring.size() && !principal; ++x) {
    if (I.contains(x)) continue;
    Bitset px = ideal_generate(ring, {x}).members();
    bool ok;
    if (strong) {
      Bitset kh = kernel(*c.Y, c.hull_of_ideal[i]).members();
      ok = (kh & px).is_subset_of(I.members());
    } else {
      ok = true;
      for (int a : I.element_list())
        if (!(c.kh_elem[a] & px).is_subset_of(I.members())) { ok = false; break; }
    }
    if (ok) principal = x;
  }
  if (principal.has_value() != r.relative)
    throw Error("relative routes disagree on " + I.to_string());
  r.principal = principal;
  return r;
}

GreatestFactor greatest_factor(const YCache& c, int i, bool strong) {
  GreatestFactor g;
  const Ideal& I = c.ideal(i);
  const FiniteRing& ring = *c.lattice->ring;
  const int N = ring.size();

  std::vector<Bitset> principal(N);
  for (int x = 0; x < N; ++x) principal[x] = ideal_generate(ring, {x}).members();

  Bitset khI = c.kh_ideal[i];
  g.members = Bitset(N);
  Bitset stmt(N);
  for (int x = 0; x < N; ++x) {
    bool in_k = true, in_stmt = true;
    if (strong) {
      in_k = (khI & principal[x]).is_subset_of(I.members());
      // statement form degenerates to kh_Y(x) cap <F> over subideals F of I;
      // the widest F is I itself
      in_stmt = (c.kh_elem[x] & I.members()).is_subset_of(I.members());
    } else {
      for (int a : I.element_list()) {
        if (!(c.kh_elem[a] & principal[x]).is_subset_of(I.members())) in_k = false;
        if (!(c.kh_elem[x] & principal[a]).is_subset_of(I.members())) in_stmt = false;
      }
    }
    if (in_k) g.members.set(x);
    if (in_stmt) stmt.set(x);
  }
  g.statement_form_matches = g.members == stmt;

  // audit K as a set and against the factor poset
  g.is_ideal = c.lattice->find(g.members) >= 0;
  if (g.is_ideal) {
    const Ideal K(ring, g.members);
    g.hyj_ok = strong ? c.is_strong_hyj(I, K) : c.is_hyj(I, K);
  }
  std::vector<int> fs = factor_indices(c, i, strong);
  if (!fs.empty()) {
    int top = fs.front();
    for (int j : fs)
      if (c.ideal(top).is_subset_of(c.ideal(j))) top = j;
    bool is_max = true;
    for (int j : fs)
      if (!c.ideal(j).is_subset_of(c.ideal(top))) is_max = false;
    g.poset_has_max = is_max;
    g.matches_max = is_max && c.ideal(top).members() == g.members;
  }
  return g;
}

MinPrimesFactor minprimes_factor(const YCache& c, int i, bool strong,
                                 const std::vector<Ideal>& primes) {
  const Ideal& I = c.ideal(i);
  const FiniteRing& ring = *c.lattice->ring;

  Bitset meet = Bitset::full(ring.size());
  for (const Ideal& P : min_over(I, primes)) {
    int pi = c.lattice->find(P);
    bool hy_p = strong ? c.strong[pi] : c.hy[pi];
    if (!hy_p) meet &= P.members();
  }
  MinPrimesFactor out{Ideal(ring, meet), false};
  int cl = strong ? c.ish[i] : c.ih[i];
  out.inclusion_ok =
      (c.ideal(cl).members() & meet).is_subset_of(radical(I).members());
  return out;
}

}  // namespace hyspec
