#include "fitset/report.hpp"

#include "fitset/classes.hpp"
#include "fitset/fitting_set.hpp"

namespace fitset {

namespace {

Json group_header(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  if (g.has_perms()) j["degree"] = g.degree();
  return j;
}

std::string status_str(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace

Json group_info_json(const LatticePtr& lat) {
  const FiniteGroup& g = *lat->group();
  Json j;
  j["schema"] = kReportSchema;
  j["group"] = group_header(g);
  j["subgroups"] = lat->size();
  j["subgroup_classes"] = static_cast<int>(lat->conj_classes().size());
  j["fitting_order"] = fitting_mask(g).count();
  StructuralSeries series = structural_series(g);
  j["soluble"] = series.soluble;
  j["nilpotent"] = series.nilpotent;
  j["derived_length"] =
      series.soluble ? static_cast<int>(series.derived.size()) - 1 : -1;
  ElemMask f = fitting_mask(g);
  j["n_constrained"] = centralizer_mask(g, f).subset_of(f);
  j["primes"] = prime_factors(g.order());
  return j;
}

Json lattice_json(const SubgroupLattice& lat) {
  Json j;
  j["schema"] = kReportSchema;
  j["group"] = group_header(*lat.group());
  Json subs = Json::array();
  for (int id = 0; id < lat.size(); ++id) {
    Json s;
    s["id"] = id;
    s["order"] = lat.order_of(id);
    s["generators"] = lat.generator_strings(id);
    s["normal"] = lat.is_normal(id);
    s["subnormal"] = lat.is_subnormal(id);
    s["conj_class"] = lat.conj_class_index(id);
    subs.push_back(std::move(s));
  }
  j["subgroups"] = std::move(subs);

  // Hasse cover edges [sub, sup]
  Json edges = Json::array();
  for (int a = 0; a < lat.size(); ++a) {
    for (int b = 0; b < lat.size(); ++b) {
      if (a == b || !lat.includes(b, a)) continue;
      bool cover = true;
      for (int c = 0; cover && c < lat.size(); ++c)
        if (c != a && c != b && lat.includes(c, a) && lat.includes(b, c))
          cover = false;
      if (cover) edges.push_back(Json::array({a, b}));
    }
  }
  j["inclusion"] = std::move(edges);
  j["conjugacy_classes"] = lat.conj_classes();
  return j;
}

Json injector_report_json(const InjectorReport& rep) {
  const SubgroupLattice& lat = *rep.lattice;
  Json j;
  j["schema"] = kReportSchema;
  j["group"] = group_header(*lat.group());
  j["fitset"] = rep.fitset_desc;
  j["method"] = to_string(rep.method);
  j["constrained_quotient"] = rep.constrained_quotient;
  if (rep.method == InjectorMethod::Theorem15) {
    j["h_given_integrated"] = rep.given_h_integrated;
    j["h_given_full"] = rep.given_h_full;
  }
  Json injs = Json::array();
  for (int v : rep.injectors) {
    Json s;
    s["id"] = v;
    s["order"] = lat.order_of(v);
    s["generators"] = lat.generator_strings(v);
    injs.push_back(std::move(s));
  }
  j["injectors"] = std::move(injs);
  j["count"] = static_cast<int>(rep.injectors.size());
  j["single_class"] = rep.single_class;
  j["conjugacy_class_size"] =
      rep.single_class ? static_cast<int>(rep.injectors.size()) : 0;
  Json wit = Json::array();
  const FiniteGroup& g = *lat.group();
  for (auto [from, to, by] : rep.witnesses) {
    Json w;
    w["from"] = from;
    w["to"] = to;
    w["by"] = g.has_perms() ? g.perm_of(by).cycle_string() : std::to_string(by);
    wit.push_back(std::move(w));
  }
  j["witnesses"] = std::move(wit);
  return j;
}

Json verification_run_json(const VerificationRun& run) {
  Json j;
  j["schema"] = kReportSchema;
  j["suite"] = to_string(run.suite);
  j["scope"] = Json{{"max_order", run.max_order}};
  Json results = Json::array();
  for (const ClaimResult& r : run.results) {
    Json c;
    c["claim"] = r.claim;
    c["subject"] = r.subject;
    c["status"] = status_str(r.status);
    if (!r.witness.empty()) c["witness"] = r.witness;
    results.push_back(std::move(c));
  }
  j["results"] = std::move(results);
  j["summary"] = Json{{"pass", run.passed},
                      {"fail", run.failed},
                      {"skipped", run.skipped}};
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fitset
