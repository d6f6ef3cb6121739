#include "fitset/hartley.hpp"

#include <sstream>

#include "fitset/error.hpp"
#include "fitset/injectors.hpp"

namespace fitset {

HFunction::HFunction(LatticePtr lat, std::map<int, FittingSet> assign)
    : lat_(std::move(lat)), assign_(std::move(assign)) {}

HFunction HFunction::make(LatticePtr lat, std::map<int, FittingSet> assignments) {
  int order = lat->group()->order();
  for (const auto& [p, F] : assignments) {
    if (!is_prime(p))
      throw InputError("h-function key " + std::to_string(p) +
                       " is not a prime");
    if (order % p != 0)
      throw InputError("prime " + std::to_string(p) +
                       " does not divide the group order " +
                       std::to_string(order));
    if (F.lattice() != lat)
      throw InputError("h-function value lives over a different group");
  }
  return HFunction(std::move(lat), std::move(assignments));
}

HFunction HFunction::uniform(LatticePtr lat, const FittingSet& F) {
  std::map<int, FittingSet> a;
  for (int p : prime_factors(lat->group()->order())) a.emplace(p, F);
  return make(std::move(lat), std::move(a));
}

FittingSet HFunction::at(int p) const {
  auto it = assign_.find(p);
  return it != assign_.end() ? it->second : trivial_fitset(lat_);
}

std::string HFunction::desc() const {
  if (assign_.empty()) return "trivial";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, F] : assign_) {
    if (!first) out << ";";
    first = false;
    out << p << ":=" << F.desc();
  }
  return out.str();
}

FittingSet hs(const HFunction& h) {
  const LatticePtr& lat = h.lattice();
  IdSet members = Bitset::all(lat->size());
  for (int p : prime_factors(lat->group()->order())) {
    FittingSet factor =
        set_product(h.at(p), class_prod(class_pprime(p), class_pgroup(p)));
    members &= factor.members();
  }
  return FittingSet(lat, std::move(members), FitsetOrigin::Hartley,
                    "hs(" + h.desc() + ")");
}

bool is_integrated(const HFunction& h) {
  FittingSet H = hs(h);
  for (const auto& [p, F] : h.assignments())
    if (!F.members().subset_of(H.members())) return false;
  return true;
}

bool is_full(const HFunction& h) {
  for (const auto& [p, Fp] : h.assignments()) {
    for (const auto& [q, Fq] : h.assignments()) {
      if (p == q) continue;
      FittingSet bound = set_product(Fq, class_pprime(q));
      if (!Fp.members().subset_of(bound.members())) return false;
    }
  }
  return true;
}

HFunction integrate(const HFunction& h) {
  FittingSet H = hs(h);
  std::map<int, FittingSet> a;
  for (const auto& [p, F] : h.assignments())
    a.emplace(p, set_intersection(F, H));
  return HFunction::make(h.lattice(), std::move(a));
}

/// X-residual of the subgroup with the given id, as an id again.
static int residual_of_subgroup(const SubgroupLattice& lat, int sub,
                                const ClassExpr& X) {
  std::vector<int> elem_map;
  GroupPtr g = lat.as_group(sub, &elem_map);
  ElemMask local = class_residual_mask(*g, X);
  ElemMask ambient(lat.group()->order());
  for (int i = local.first(); i >= 0; i = local.next(i))
    ambient.set(elem_map[i]);
  int id = lat.id_of(ambient);
  if (id < 0) throw ConsistencyError("subgroup residual missing from lattice");
  return id;
}

HFunction make_full_integrated(const HFunction& h, ResidualVariant variant) {
  HFunction h1 = is_integrated(h) ? h : integrate(h);
  const LatticePtr& lat = h1.lattice();
  std::map<int, FittingSet> a;
  for (const auto& [p, Fp] : h1.assignments()) {
    ClassExprPtr resid = variant == ResidualVariant::PPrimeAll
                             ? class_pprime(p)
                             : class_sol_pprime(p);
    IdSet collected(lat->size());
    for (int r = Fp.members().first(); r >= 0; r = Fp.members().next(r)) {
      int rid = residual_of_subgroup(*lat, r, *resid);
      for (int c : lat->conj_class_of(rid)) collected.set(c);
    }
    a.emplace(p, fitset_closure(lat, collected,
                                "full(" + Fp.desc() + ",p=" + std::to_string(p) +
                                    ")"));
  }
  return HFunction::make(lat, std::move(a));
}

int h_radical(const HFunction& h) {
  if (!is_integrated(h) || !is_full(h))
    throw HypothesisError(
        "the h-radical is defined only for full integrated h-functions");
  const SubgroupLattice& lat = *h.lattice();
  int r = lat.trivial_id();
  for (const auto& [p, F] : h.assignments())
    r = lat.join_of(r, set_radical(F, lat.top_id()));
  return r;
}

HartleySet hartley_set(const HFunction& h) {
  return HartleySet{hs(h), is_integrated(h), is_full(h)};
}

namespace {

void require_full_integrated(const HFunction& h) {
  if (!is_integrated(h) || !is_full(h))
    throw HypothesisError("check requires a full integrated h-function");
}

bool quotient_by_id_nilpotent(const SubgroupLattice& lat, int sub, int kernel) {
  std::vector<int> elem_map;
  GroupPtr g = lat.as_group(sub, &elem_map);
  ElemMask local(g->order());
  const ElemMask& K = lat.elems(kernel);
  for (int i = 0; i < g->order(); ++i)
    if (K.test(elem_map[i])) local.set(i);
  return is_nilpotent(*quotient_target(*g, local));
}

}  // namespace

LemmaVerdict check_lemma_3_5(const HFunction& h, int H_id) {
  require_full_integrated(h);
  const SubgroupLattice& lat = *h.lattice();
  int gh = h_radical(h);
  if (!lat.includes(H_id, gh))
    throw HypothesisError("subgroup does not contain the h-radical");
  if (!quotient_by_id_nilpotent(lat, H_id, gh))
    throw HypothesisError("H/G_h is not nilpotent");
  FittingSet H = hs(h);
  if (H.contains(H_id)) return {true, ""};
  return {false, "subgroup " + std::to_string(H_id) +
                     " with nilpotent quotient over the h-radical is not in " +
                     H.desc()};
}

LemmaVerdict check_lemma_3_6(const HFunction& h) {
  require_full_integrated(h);
  const SubgroupLattice& lat = *h.lattice();
  int gh = h_radical(h);
  FittingSet H = hs(h);
  int ghs = set_radical(H, lat.top_id());

  QuotientMap qm = quotient(lat.group(), lat.elems(gh));
  ElemMask fq = fitting_mask(*qm.target);
  ElemMask pulled = qm.preimage(fq);
  if (pulled == lat.elems(ghs)) return {true, ""};
  return {false,
          "preimage of F(G/G_h) has order " + std::to_string(pulled.count()) +
              " but the HS-radical has order " +
              std::to_string(lat.order_of(ghs))};
}

LemmaVerdict check_cor_3_8(const HFunction& h, int H_id) {
  require_full_integrated(h);
  const SubgroupLattice& lat = *h.lattice();
  int gh = h_radical(h);
  GroupPtr q = quotient_target(*lat.group(), lat.elems(gh));
  if (!is_n_constrained(*q))
    throw HypothesisError("G/G_h is not constrained");
  FittingSet H = hs(h);
  int ghs = set_radical(H, lat.top_id());
  if (!lat.includes(H_id, ghs))
    throw HypothesisError("subgroup does not contain the HS-radical");

  bool member = H.contains(H_id);
  bool nilq = quotient_by_id_nilpotent(lat, H_id, gh);
  if (member == nilq) return {true, ""};
  return {false, "subgroup " + std::to_string(H_id) + ": membership " +
                     (member ? "true" : "false") +
                     " but nilpotent quotient " + (nilq ? "true" : "false")};
}

}  // namespace fitset
