#include "hyspec/hy.hpp"

#include <algorithm>
#include <set>

#include "hyspec/errors.hpp"
#include "hyspec/spectrum.hpp"

namespace hyspec {

bool ConditionProfile::uniform() const {
  for (bool v : verdicts)
    if (v != verdicts.front()) return false;
  return true;
}

bool ConditionProfile::all_true() const {
  for (bool v : verdicts)
    if (!v) return false;
  return true;
}

bool ConditionProfile::value(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return verdicts[i];
  throw Error("no condition labelled " + label);
}

namespace {

Bitset kh_of_elem(const SubSpace& Y, int a) {
  return kernel(Y, hull_elem(Y, a).members).members();
}

Bitset kh_of_ideal(const SubSpace& Y, const Ideal& I) {
  return kernel(Y, hull(Y, I).members).members();
}

std::string elem_witness(const FiniteRing& ring, const char* sym, int a) {
  return std::string(sym) + "=" + std::to_string(a) + " (" + ring.name(a) + ")";
}

}  // namespace

bool is_hy_ideal(const Ideal& I, const SubSpace& Y) {
  for (int a : I.element_list())
    if (!kh_of_elem(Y, a).is_subset_of(I.members())) return false;
  return true;
}

bool is_strong_hy_ideal(const Ideal& I, const SubSpace& Y) {
  return kh_of_ideal(Y, I).is_subset_of(I.members());
}

bool is_strong_hy_ideal_subset_oracle(const Ideal& I, const SubSpace& Y) {
  std::vector<int> elems = I.element_list();
  const std::size_t k = elems.size();
  if (k > 24) throw CapExceeded("subset oracle over an ideal with >24 elements");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Bitset F(I.ring().size());
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) F.set(elems[i]);
    Bitset kh = kernel(Y, hull_set(Y, F).members).members();
    if (!kh.is_subset_of(I.members())) return false;
  }
  return true;
}

ConditionProfile hy_condition_profile(const Ideal& I, const SubSpace& Y,
                                      const IdealLattice& lattice) {
  ConditionProfile p;
  p.family = "hy";
  const FiniteRing& ring = I.ring();
  const int N = ring.size();

  std::vector<Bitset> h_elem(N), kh_elem(N);
  for (int a = 0; a < N; ++a) {
    h_elem[a] = hull_elem(Y, a).members;
    kh_elem[a] = kernel(Y, h_elem[a]).members();
  }
  const std::size_t L = lattice.ideals.size();
  std::vector<Bitset> h_ideal(L), kh_ideal(L);
  for (std::size_t j = 0; j < L; ++j) {
    h_ideal[j] = hull(Y, lattice.ideals[j]).members;
    kh_ideal[j] = kernel(Y, h_ideal[j]).members();
  }

  std::vector<int> in_i = I.element_list();
  auto sub = [](const Bitset& a, const Bitset& b) { return a.is_subset_of(b); };

  struct Cond {
    const char* label;
    bool ok = true;
    std::string witness;
  };
  Cond a{"a"}, b{"b"}, c{"c"}, d{"d"}, e{"e"}, f{"f"}, g{"g"}, h{"h"}, k{"k"};

  for (int ai : in_i) {
    for (std::size_t j = 0; j < L; ++j) {
      const Ideal& S = lattice.ideals[j];
      bool s_in_i = S.is_subset_of(I);
      if (a.ok && sub(h_elem[ai], h_ideal[j]) && !s_in_i)
        a = {"a", false, elem_witness(ring, "a", ai) + ", S=" + S.to_string()};
      if (b.ok && h_elem[ai] == h_ideal[j] && !s_in_i)
        b = {"b", false, elem_witness(ring, "a", ai) + ", S=" + S.to_string()};
      if (f.ok && sub(kh_ideal[j], kh_elem[ai]) && !s_in_i)
        f = {"f", false, elem_witness(ring, "a", ai) + ", S=" + S.to_string()};
      if (g.ok && kh_ideal[j] == kh_elem[ai] && !s_in_i)
        g = {"g", false, elem_witness(ring, "a", ai) + ", S=" + S.to_string()};
    }
    for (int bi = 0; bi < N; ++bi) {
      bool b_in_i = I.contains(bi);
      if (c.ok && h_elem[ai] == h_elem[bi] && !b_in_i)
        c = {"c", false, elem_witness(ring, "a", ai) + ", " + elem_witness(ring, "b", bi)};
      if (d.ok && sub(h_elem[ai], h_elem[bi]) && !b_in_i)
        d = {"d", false, elem_witness(ring, "a", ai) + ", " + elem_witness(ring, "b", bi)};
      if (h.ok && kh_elem[bi] == kh_elem[ai] && !b_in_i)
        h = {"h", false, elem_witness(ring, "a", ai) + ", " + elem_witness(ring, "b", bi)};
      if (k.ok && sub(kh_elem[bi], kh_elem[ai]) && !b_in_i)
        k = {"k", false, elem_witness(ring, "a", ai) + ", " + elem_witness(ring, "b", bi)};
    }
    if (e.ok && !sub(kh_elem[ai], I.members()))
      e = {"e", false, elem_witness(ring, "a", ai)};
  }

  for (const Cond& cc : {a, b, c, d, e, f, g, h, k}) p.add(cc.label, cc.ok, cc.witness);
  return p;
}

ConditionProfile strong_condition_profile(const Ideal& I, const SubSpace& Y,
                                          const IdealLattice& lattice) {
  ConditionProfile p;
  p.family = "strong";
  const FiniteRing& ring = I.ring();
  const int N = ring.size();
  const std::size_t L = lattice.ideals.size();

  std::vector<Bitset> h_elem(N), kh_elem(N);
  for (int a = 0; a < N; ++a) {
    h_elem[a] = hull_elem(Y, a).members;
    kh_elem[a] = kernel(Y, h_elem[a]).members();
  }
  std::vector<Bitset> h_ideal(L), kh_ideal(L);
  for (std::size_t j = 0; j < L; ++j) {
    h_ideal[j] = hull(Y, lattice.ideals[j]).members;
    kh_ideal[j] = kernel(Y, h_ideal[j]).members();
  }
  // finite subsets of I, reduced to subideals of I
  std::vector<int> subs;
  for (std::size_t j = 0; j < L; ++j)
    if (lattice.ideals[j].is_subset_of(I)) subs.push_back(static_cast<int>(j));
  // filter member test (by closed point set)
  std::set<Bitset> members;
  for (int j : subs) members.insert(h_ideal[j]);

  auto sub = [](const Bitset& x, const Bitset& y) { return x.is_subset_of(y); };

  struct Cond {
    const char* label;
    bool ok = true;
    std::string witness;
  };
  Cond a{"a"}, b{"b"}, c{"c"}, d{"d"}, e{"e"}, f{"f"}, g{"g"}, k{"k"}, l{"l"},
      m{"m"}, n{"n"}, o{"o"};

  for (int fj : subs) {
    const std::string fw = "F=" + lattice.ideals[fj].to_string();
    for (std::size_t j = 0; j < L; ++j) {
      const Ideal& S = lattice.ideals[j];
      bool s_in_i = S.is_subset_of(I);
      if (a.ok && h_ideal[fj] == h_ideal[j] && !s_in_i)
        a = {"a", false, fw + ", S=" + S.to_string()};
      if (b.ok && h_ideal[fj] == h_ideal[j] && !s_in_i)
        b = {"b", false, fw + ", G=" + S.to_string()};
      if (c.ok && sub(h_ideal[fj], h_ideal[j]) && !s_in_i)
        c = {"c", false, fw + ", G=" + S.to_string()};
      if (n.ok && kh_ideal[j] == kh_ideal[fj] && !s_in_i)
        n = {"n", false, fw + ", S=" + S.to_string()};
      if (o.ok && sub(kh_ideal[j], kh_ideal[fj]) && !s_in_i)
        o = {"o", false, fw + ", S=" + S.to_string()};
    }
    for (int ai = 0; ai < N; ++ai) {
      bool a_in_i = I.contains(ai);
      if (f.ok && h_ideal[fj] == h_elem[ai] && !a_in_i)
        f = {"f", false, fw + ", " + elem_witness(ring, "a", ai)};
      if (g.ok && sub(h_ideal[fj], h_elem[ai]) && !a_in_i)
        g = {"g", false, fw + ", " + elem_witness(ring, "a", ai)};
      if (l.ok && kh_elem[ai] == kh_ideal[fj] && !a_in_i)
        l = {"l", false, fw + ", " + elem_witness(ring, "a", ai)};
      if (m.ok && sub(kh_elem[ai], kh_ideal[fj]) && !a_in_i)
        m = {"m", false, fw + ", " + elem_witness(ring, "a", ai)};
    }
    if (k.ok && !sub(kh_ideal[fj], I.members())) k = {"k", false, fw};
  }
  // (d): h_Y(a) a filter member forces a into I
  for (int ai = 0; ai < N && d.ok; ++ai)
    if (members.count(h_elem[ai]) && !I.contains(ai))
      d = {"d", false, elem_witness(ring, "a", ai)};
  // (e): h_Y(F) a filter member forces F into I, F over ideals of R
  for (std::size_t j = 0; j < L && e.ok; ++j)
    if (members.count(h_ideal[j]) && !lattice.ideals[j].is_subset_of(I))
      e = {"e", false, "F=" + lattice.ideals[j].to_string()};

  for (const Cond& cc : {a, b, c, d, e, f, g, k, l, m, n, o})
    p.add(cc.label, cc.ok, cc.witness);
  return p;
}

namespace {

// enumerate all element subsets of `universe`; calls fn(bitset) for each
template <typename Fn>
void for_each_subset(const FiniteRing& ring, const std::vector<int>& universe, Fn&& fn) {
  const std::size_t k = universe.size();
  if (k > 20) throw CapExceeded("full subset enumeration gated to 2^20");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Bitset s(ring.size());
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) s.set(universe[i]);
    fn(s);
  }
}

}  // namespace

ConditionProfile hy_condition_profile_subset_oracle(const Ideal& I, const SubSpace& Y) {
  ConditionProfile p;
  p.family = "hy-subset-oracle";
  const FiniteRing& ring = I.ring();
  const int N = ring.size();

  std::vector<Bitset> h_elem(N), kh_elem(N);
  for (int a = 0; a < N; ++a) {
    h_elem[a] = hull_elem(Y, a).members;
    kh_elem[a] = kernel(Y, h_elem[a]).members();
  }
  std::vector<int> everything(N);
  for (int i = 0; i < N; ++i) everything[i] = i;

  bool a_ok = true, b_ok = true, f_ok = true, g_ok = true;
  for_each_subset(ring, everything, [&](const Bitset& S) {
    Bitset hs = hull_set(Y, S).members;
    Bitset khs = kernel(Y, hs).members();
    bool s_in_i = S.is_subset_of(I.members());
    if (s_in_i) return;
    for (int ai : I.element_list()) {
      if (h_elem[ai].is_subset_of(hs)) a_ok = false;
      if (h_elem[ai] == hs) b_ok = false;
      if (khs.is_subset_of(kh_elem[ai])) f_ok = false;
      if (khs == kh_elem[ai]) g_ok = false;
    }
  });
  p.add("a", a_ok);
  p.add("b", b_ok);
  p.add("f", f_ok);
  p.add("g", g_ok);
  return p;
}

ConditionProfile strong_condition_profile_subset_oracle(const Ideal& I, const SubSpace& Y) {
  ConditionProfile p;
  p.family = "strong-subset-oracle";
  const FiniteRing& ring = I.ring();
  const int N = ring.size();

  std::vector<int> everything(N);
  for (int i = 0; i < N; ++i) everything[i] = i;
  std::vector<int> in_i = I.element_list();

  // filter members from genuine finite subsets of I
  std::set<Bitset> members;
  std::vector<std::pair<Bitset, Bitset>> f_hk;  // (h(F), kh(F)) per subset F of I
  for_each_subset(ring, in_i, [&](const Bitset& F) {
    Bitset h = hull_set(Y, F).members;
    members.insert(h);
    f_hk.emplace_back(h, kernel(Y, h).members());
  });

  bool a_ok = true, c_ok = true, d_ok = true, e_ok = true, k_ok = true,
       n_ok = true, o_ok = true;
  for (const auto& [hf, khf] : f_hk)
    if (!khf.is_subset_of(I.members())) k_ok = false;
  for_each_subset(ring, everything, [&](const Bitset& S) {
    bool s_in_i = S.is_subset_of(I.members());
    Bitset hs = hull_set(Y, S).members;
    if (members.count(hs) && !s_in_i) e_ok = false;
    if (s_in_i) return;
    Bitset khs = kernel(Y, hs).members();
    for (const auto& [hf, khf] : f_hk) {
      if (hf == hs) a_ok = false;
      if (hf.is_subset_of(hs)) c_ok = false;
      if (khs == khf) n_ok = false;
      if (khs.is_subset_of(khf)) o_ok = false;
    }
  });
  for (int ai = 0; ai < N; ++ai)
    if (members.count(hull_elem(Y, ai).members) && !I.contains(ai)) d_ok = false;

  p.add("a", a_ok);
  p.add("c", c_ok);
  p.add("d", d_ok);
  p.add("e", e_ok);
  p.add("k", k_ok);
  p.add("n", n_ok);
  p.add("o", o_ok);
  return p;
}

Ideal hy_closure(const Ideal& I, const SubSpace& Y) {
  Bitset cur = I.members();
  for (;;) {
    Bitset next = cur;
    for (int a : cur.members()) next |= kh_of_elem(Y, a);
    if (next == cur) break;
    // close the union back to an ideal
    Ideal closed = ideal_generate(I.ring(), Bitset(next).members());
    cur = closed.members();
  }
  return Ideal(I.ring(), cur);
}

Ideal strong_hy_closure(const Ideal& I, const SubSpace& Y) {
  return Ideal(I.ring(), kh_of_ideal(Y, I));
}

std::vector<Bitset> hy_filter_members(const Ideal& I, const SubSpace& Y,
                                      const IdealLattice& lattice) {
  std::set<Bitset> members;
  for (const Ideal& J : lattice.ideals)
    if (J.is_subset_of(I)) members.insert(hull(Y, J).members);
  return std::vector<Bitset>(members.begin(), members.end());
}

bool hy_filter_has_member(const Ideal& I, const SubSpace& Y,
                          const IdealLattice& lattice, const Bitset& closed) {
  for (const Ideal& J : lattice.ideals)
    if (J.is_subset_of(I) && hull(Y, J).members == closed) return true;
  return false;
}

PointSet filter_intersection(const Ideal& I, const SubSpace& Y,
                             const IdealLattice& lattice) {
  PointSet meet = Bitset::full(Y.size());
  for (const Bitset& m : hy_filter_members(I, Y, lattice)) meet &= m;
  if (meet != hull(Y, I).members)
    throw Error("filter intersection deviates from the hull of " + I.to_string());
  return meet;
}

bool is_fixed(const Ideal& I, const SubSpace& Y) {
  return hull(Y, I).members.any();
}

bool is_fixed_wrt(const Ideal& I, const PointSet& S, const SubSpace& Y) {
  if (S.size() != Y.size())
    throw SNotSubsetY("point set does not index the given subspace");
  return (hull(Y, I).members & S).any();
}

std::vector<Ideal> maximal_fixed(const SubSpace& Y, const IdealLattice& lattice) {
  std::vector<Ideal> fixed;
  for (const Ideal& I : lattice.ideals)
    if (is_fixed(I, Y)) fixed.push_back(I);
  return inclusion_maximal(fixed);
}

std::vector<Ideal> pshy(const SubSpace& Y, const IdealLattice& lattice) {
  std::vector<Ideal> out;
  for (const Ideal& I : lattice.ideals)
    if (I.is_proper() && is_strong_hy_ideal(I, Y)) out.push_back(I);
  return out;
}

std::vector<Ideal> maxl_pshy(const SubSpace& Y, const IdealLattice& lattice) {
  return inclusion_maximal(pshy(Y, lattice));
}

InverseImage hy_inverse_image(const Ideal& I, const SubSpace& Y,
                              const IdealLattice& lattice) {
  const FiniteRing& ring = I.ring();
  std::set<Bitset> members;
  for (const Ideal& J : lattice.ideals)
    if (J.is_subset_of(I)) members.insert(hull(Y, J).members);

  InverseImage out;
  out.members = Bitset(ring.size());
  for (int a = 0; a < ring.size(); ++a)
    if (members.count(hull_elem(Y, a).members)) out.members.set(a);

  // an ideal iff closed under addition and ring multiples (0 is always in:
  // h(0) = h((0)) is a member)
  out.is_ideal = true;
  std::vector<int> elems = out.members.members();
  for (int a : elems) {
    for (int b : elems)
      if (!out.members.test(ring.add(a, b))) out.is_ideal = false;
    for (int r = 0; r < ring.size(); ++r)
      if (!out.members.test(ring.mul(r, a))) out.is_ideal = false;
  }
  return out;
}

SubringView make_subring(const FiniteRing& ring, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int M = static_cast<int>(elements.size());

  std::vector<int> from_parent(ring.size(), -1);
  for (int i = 0; i < M; ++i) {
    if (elements[i] < 0 || elements[i] >= ring.size())
      throw NotASubring("element index out of range");
    from_parent[elements[i]] = i;
  }
  if (from_parent[ring.zero()] < 0 || from_parent[ring.one()] < 0)
    throw NotASubring("subring must contain 0 and 1");

  std::vector<int> add(M * M), mul(M * M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      int s = ring.add(elements[i], elements[j]);
      int p = ring.mul(elements[i], elements[j]);
      if (from_parent[s] < 0 || from_parent[p] < 0)
        throw NotASubring("subset is not closed under the ring operations");
      add[i * M + j] = from_parent[s];
      mul[i * M + j] = from_parent[p];
    }

  RingSpec spec = RingSpec::tables(M, std::move(add), std::move(mul),
                                   from_parent[ring.zero()], from_parent[ring.one()],
                                   ring.label() + "|subring");
  Caps caps;
  caps.tables_max = Caps::hard_max;  // inherited from an already-capped parent
  SubringView view{build_ring(spec, caps), elements, std::move(from_parent)};
  return view;
}

CheckReport subring_restriction_check(const FiniteRing& ring,
                                      const std::vector<int>& subring_elements,
                                      const SubSpace& Y, const Ideal& I) {
  CheckReport rep;
  rep.id = "P3.11";

  SubringView sub = make_subring(ring, subring_elements);
  const FiniteRing& rp = sub.ring;

  // Y' = { P cap R' : P in Y }, deduplicated
  std::set<Bitset> seen;
  std::vector<Ideal> ypoints;
  for (const Ideal& P : Y.points) {
    Bitset b(rp.size());
    for (int i = 0; i < rp.size(); ++i)
      if (P.contains(sub.to_parent[i])) b.set(i);
    if (seen.insert(b).second) ypoints.push_back(Ideal(rp, b));
  }
  for (const Ideal& Q : ypoints)
    if (!is_prime(Q)) {
      rep.fail({{"reason", "restricted point is not prime"}, {"point", Q.to_string()}});
      return rep;
    }
  SubSpace yp = make_subspace(rp, std::move(ypoints));

  if (!is_fixed(I, Y)) {
    rep.verdict = Verdict::Vacuous;
    rep.notes.push_back("premise: I is not a fixed ideal over Y");
    return rep;
  }

  Bitset restricted(rp.size());
  for (int i = 0; i < rp.size(); ++i)
    if (I.contains(sub.to_parent[i])) restricted.set(i);
  if (!is_fixed(Ideal(rp, restricted), yp))
    rep.fail({{"ideal", I.to_string()},
              {"restricted", Ideal(rp, restricted).to_string()}});
  return rep;
}

bool YCache::is_hyj(int i, int j) const { return is_hyj(ideal(i), ideal(j)); }
bool YCache::is_strong_hyj(int i, int j) const {
  return (kh_ideal[i] & ideal(j).members()).is_subset_of(ideal(i).members());
}

bool YCache::is_hyj(const Ideal& I, const Ideal& J) const {
  for (int a : I.element_list())
    if (!(kh_elem[a] & J.members()).is_subset_of(I.members())) return false;
  return true;
}

bool YCache::is_strong_hyj(const Ideal& I, const Ideal& J) const {
  Bitset kh = kernel(*Y, hull(*Y, I).members).members();
  return (kh & J.members()).is_subset_of(I.members());
}

YCache make_ycache(const SubSpace& Y, const IdealLattice& lattice) {
  YCache c;
  c.Y = &Y;
  c.lattice = &lattice;
  const FiniteRing& ring = *lattice.ring;
  const int N = ring.size();
  const std::size_t L = lattice.ideals.size();

  c.hull_of_elem.resize(N);
  c.kh_elem.resize(N);
  for (int a = 0; a < N; ++a) {
    c.hull_of_elem[a] = hull_elem(Y, a).members;
    c.kh_elem[a] = kernel(Y, c.hull_of_elem[a]).members();
  }
  c.hull_of_ideal.resize(L);
  c.kh_ideal.resize(L);
  c.hy.resize(L);
  c.strong.resize(L);
  c.ih.resize(L);
  c.ish.resize(L);
  for (std::size_t i = 0; i < L; ++i) {
    const Ideal& I = lattice.ideals[i];
    c.hull_of_ideal[i] = hull(Y, I).members;
    c.kh_ideal[i] = kernel(Y, c.hull_of_ideal[i]).members();
    bool hy_ok = true;
    for (int a : I.element_list())
      if (!c.kh_elem[a].is_subset_of(I.members())) { hy_ok = false; break; }
    c.hy[i] = hy_ok;
    c.strong[i] = c.kh_ideal[i].is_subset_of(I.members());
  }
  for (std::size_t i = 0; i < L; ++i) {
    c.ih[i] = lattice.find(hy_closure(lattice.ideals[i], Y).members());
    c.ish[i] = lattice.find(c.kh_ideal[i]);
    if (c.ih[i] < 0 || c.ish[i] < 0)
      throw Error("closure fell outside the enumerated lattice");
  }
  c.union_y = Bitset(N);
  for (const Ideal& P : Y.points) c.union_y |= P.members();
  c.k0 = kernel(Y, Bitset::full(Y.size()));
  return c;
}

}  // namespace hyspec
