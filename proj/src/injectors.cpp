#include "fitset/injectors.hpp"

#include <algorithm>
#include <sstream>

#include "fitset/error.hpp"

namespace fitset {

std::string to_string(InjectorMethod m) {
  return m == InjectorMethod::BruteForce ? "brute_force" : "theorem_1_5";
}

std::vector<int> f_maximal_subgroups(const FittingSet& F) {
  const SubgroupLattice& lat = *F.lattice();
  std::vector<int> out;
  for (int v = F.members().first(); v >= 0; v = F.members().next(v)) {
    bool maximal = true;
    for (int w = F.members().first(); maximal && w >= 0;
         w = F.members().next(w))
      if (w != v && lat.includes(w, v)) maximal = false;
    if (maximal) out.push_back(v);
  }
  return out;
}

std::vector<int> f_maximal_in(const FittingSet& F, int within) {
  const SubgroupLattice& lat = *F.lattice();
  IdSet inside = F.members() & lat.ids_below(within);
  std::vector<int> out;
  for (int v = inside.first(); v >= 0; v = inside.next(v)) {
    bool maximal = true;
    for (int w = inside.first(); maximal && w >= 0; w = inside.next(w))
      if (w != v && lat.includes(w, v)) maximal = false;
    if (maximal) out.push_back(v);
  }
  return out;
}

namespace {

/// V meet N is F-maximal among the members of F contained in N.
bool meet_is_f_maximal_in(const FittingSet& F, int V, int N) {
  const SubgroupLattice& lat = *F.lattice();
  int M = lat.meet_of(V, N);
  if (!F.contains(M)) return false;
  IdSet inside = F.members() & lat.ids_below(N);
  for (int w = inside.first(); w >= 0; w = inside.next(w))
    if (w != M && lat.includes(w, M)) return false;
  return true;
}

/// Injector test of V inside the subgroup K (V <= K expected): the meet
/// with every subgroup subnormal in K must be F-maximal there.
bool is_injector_in(const FittingSet& F, int V, int K) {
  const SubgroupLattice& lat = *F.lattice();
  if (K == lat.top_id()) {
    const IdSet& sn = lat.subnormal_ids();
    for (int n = sn.first(); n >= 0; n = sn.next(n))
      if (!meet_is_f_maximal_in(F, V, n)) return false;
    return true;
  }
  IdSet below = lat.ids_below(K);
  for (int n = below.first(); n >= 0; n = below.next(n)) {
    if (!lat.subnormal_in(n, K)) continue;
    if (!meet_is_f_maximal_in(F, V, n)) return false;
  }
  return true;
}

void finalize_report(InjectorReport& rep) {
  const SubgroupLattice& lat = *rep.lattice;
  std::sort(rep.injectors.begin(), rep.injectors.end());
  if (rep.injectors.empty()) {
    rep.single_class = false;
    return;
  }
  int cls = lat.conj_class_index(rep.injectors[0]);
  rep.single_class = true;
  for (int v : rep.injectors)
    if (lat.conj_class_index(v) != cls) rep.single_class = false;
  if (!rep.single_class) return;
  for (size_t i = 0; i < rep.injectors.size(); ++i)
    for (size_t j = i + 1; j < rep.injectors.size(); ++j) {
      auto g = lat.conjugating_element(rep.injectors[i], rep.injectors[j]);
      if (!g) throw ConsistencyError("missing conjugacy witness");
      rep.witnesses.emplace_back(rep.injectors[i], rep.injectors[j], *g);
    }
}

}  // namespace

InjectorReport injectors_bruteforce(const FittingSet& F, bool audit) {
  const SubgroupLattice& lat = *F.lattice();
  InjectorReport rep;
  rep.lattice = F.lattice();
  rep.fitset_desc = F.desc();
  rep.method = InjectorMethod::BruteForce;
  rep.constrained_quotient = is_n_constrained(*lat.group());

  std::vector<int> candidates;
  if (audit) {
    candidates.resize(lat.size());
    for (int i = 0; i < lat.size(); ++i) candidates[i] = i;
  } else {
    // every injector is F-maximal and contains the F-radical
    int rad = set_radical(F, lat.top_id());
    for (int v : f_maximal_subgroups(F))
      if (lat.includes(v, rad)) candidates.push_back(v);
  }
  for (int v : candidates)
    if (is_injector_in(F, v, lat.top_id())) rep.injectors.push_back(v);
  finalize_report(rep);
  return rep;
}

bool is_n_constrained(const FiniteGroup& G) {
  ElemMask f = fitting_mask(G);
  return centralizer_mask(G, f).subset_of(f);
}

InjectorReport nilpotent_injectors(const LatticePtr& lat) {
  const FiniteGroup& G = *lat->group();
  if (!is_n_constrained(G))
    throw HypothesisError(
        "group is not constrained: nilpotent injectors are only guaranteed "
        "for constrained groups");

  FittingSet N = trace(lat, class_nil());
  int fid = lat->id_of(fitting_mask(G));
  if (fid < 0) throw ConsistencyError("Fitting subgroup missing from lattice");

  InjectorReport rep;
  rep.lattice = lat;
  rep.fitset_desc = N.desc();
  rep.method = InjectorMethod::BruteForce;
  rep.constrained_quotient = true;
  for (int v : f_maximal_subgroups(N))
    if (lat->includes(v, fid)) rep.injectors.push_back(v);
  finalize_report(rep);

  // the characterization must agree with the definition scan
  InjectorReport brute = injectors_bruteforce(N);
  if (brute.injectors != rep.injectors)
    throw ConsistencyError(
        "nilpotent-maximal-over-F(G) characterization disagrees with the "
        "definition scan");
  if (!rep.single_class)
    throw ConsistencyError(
        "nilpotent injectors of a constrained group split into several "
        "conjugacy classes");
  return rep;
}

InjectorReport hartley_injectors(const LatticePtr& lat, const HFunction& h) {
  bool given_integrated = is_integrated(h);
  bool given_full = is_full(h);
  HFunction hf = (given_integrated && given_full) ? h : make_full_integrated(h);

  int gh = h_radical(hf);
  QuotientMap qm = quotient(lat->group(), lat->elems(gh));
  if (!is_n_constrained(*qm.target))
    throw HypothesisError(
        "G/G_h is not constrained: the theorem route refuses (use the "
        "brute-force method to gather data)");

  LatticePtr qlat = SubgroupLattice::build(qm.target);
  InjectorReport down = nilpotent_injectors(qlat);

  InjectorReport rep;
  rep.lattice = lat;
  rep.fitset_desc = "hs(" + h.desc() + ")";
  rep.method = InjectorMethod::Theorem15;
  rep.constrained_quotient = true;
  rep.given_h_integrated = given_integrated;
  rep.given_h_full = given_full;
  for (int v : down.injectors) {
    int up = lat->id_of(qm.preimage(qlat->elems(v)));
    if (up < 0) throw ConsistencyError("injector preimage missing from lattice");
    rep.injectors.push_back(up);
  }
  finalize_report(rep);
  if (!rep.single_class)
    throw ConsistencyError("pulled-back injectors are not a conjugacy class");
  return rep;
}

CheckResult characterization_check(const LatticePtr& lat, const HFunction& h) {
  InjectorReport thm = hartley_injectors(lat, h);

  FittingSet H = hs(h);
  int rad = set_radical(H, lat->top_id());
  std::vector<int> rhs;
  for (int v : f_maximal_subgroups(H))
    if (lat->includes(v, rad)) rhs.push_back(v);
  std::sort(rhs.begin(), rhs.end());

  if (thm.injectors == rhs) return {true, ""};
  std::ostringstream w;
  w << "theorem route {";
  for (int v : thm.injectors) w << " " << v;
  w << " } vs maximal-over-radical {";
  for (int v : rhs) w << " " << v;
  w << " }";
  return {false, w.str()};
}

InjectorPropertyVerdicts lemma_2_8_checks(const FittingSet& F, int V_id) {
  const SubgroupLattice& lat = *F.lattice();
  InjectorPropertyVerdicts out;

  // (a) restriction to subnormal subgroups
  out.a = {true, ""};
  const IdSet& sn = lat.subnormal_ids();
  for (int k = sn.first(); k >= 0; k = sn.next(k)) {
    int m = lat.meet_of(V_id, k);
    if (!is_injector_in(F, m, k)) {
      out.a = {false, "restriction to subnormal subgroup " + std::to_string(k) +
                          " is not an injector there"};
      break;
    }
  }

  // (b) the radical is contained in V and V is F-maximal
  int rad = set_radical(F, lat.top_id());
  bool vmax = F.contains(V_id);
  for (int w = F.members().first(); vmax && w >= 0; w = F.members().next(w))
    if (w != V_id && lat.includes(w, V_id)) vmax = false;
  if (!lat.includes(V_id, rad))
    out.b = {false, "injector does not contain the radical"};
  else if (!vmax)
    out.b = {false, "injector is not maximal in the set"};
  else
    out.b = {true, ""};

  // (c) maximal-normal lifting: premise implies injector
  bool premise = vmax;
  const IdSet& mn = lat.maximal_normal_ids();
  for (int m = mn.first(); premise && m >= 0; m = mn.next(m))
    if (!is_injector_in(F, lat.meet_of(V_id, m), m)) premise = false;
  if (!premise)
    out.c = {true, ""};  // vacuous
  else if (is_injector_in(F, V_id, lat.top_id()))
    out.c = {true, ""};
  else
    out.c = {false,
             "maximal-normal restrictions are injectors and V is maximal, "
             "but V is not an injector"};

  // (d) the injector set is a union of conjugacy classes
  InjectorReport rep = injectors_bruteforce(F);
  out.d = {true, ""};
  for (int v : rep.injectors) {
    for (int c : lat.conj_class_of(v)) {
      if (!std::binary_search(rep.injectors.begin(), rep.injectors.end(), c)) {
        out.d = {false, "conjugate " + std::to_string(c) +
                            " of injector " + std::to_string(v) +
                            " is not an injector"};
        break;
      }
    }
    if (!out.d.ok) break;
  }
  return out;
}

}  // namespace fitset
