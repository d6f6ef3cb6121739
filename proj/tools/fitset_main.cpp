#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fitset/catalog.hpp"
#include "fitset/error.hpp"
#include "fitset/injectors.hpp"
#include "fitset/io.hpp"
#include "fitset/report.hpp"
#include "fitset/verify.hpp"

namespace {

using namespace fitset;

LatticePtr lattice_for(const std::string& ref, int order_bound) {
  return SubgroupLattice::build(resolve_group(ref, order_bound));
}

HFunction resolve_hfunction(const LatticePtr& lat, const std::string& hfunc_path,
                            const std::string& h_inline) {
  if (!hfunc_path.empty() && !h_inline.empty())
    throw InputError("give either --hfunc or --h, not both");
  if (!hfunc_path.empty()) return parse_hfunction_file(hfunc_path, lat);
  if (!h_inline.empty()) return parse_hfunction_inline(h_inline, lat);
  throw InputError("an h-function is required (--hfunc <file> or --h <inline>)");
}

void print_subgroup(const SubgroupLattice& lat, int id, std::ostream& out) {
  out << "subgroup " << id << " order " << lat.order_of(id) << " gens";
  for (const std::string& s : lat.generator_strings(id)) out << " " << s;
  out << "\n";
}

int cmd_info(const std::string& ref, int order_bound) {
  LatticePtr lat = lattice_for(ref, order_bound);
  Json j = group_info_json(lat);
  std::cout << "group " << j["group"]["name"].get<std::string>() << "\n"
            << "order " << j["group"]["order"] << "\n"
            << "subgroups " << j["subgroups"] << "\n"
            << "subgroup_classes " << j["subgroup_classes"] << "\n"
            << "fitting_order " << j["fitting_order"] << "\n"
            << "soluble " << (j["soluble"].get<bool>() ? "true" : "false")
            << "\n"
            << "nilpotent " << (j["nilpotent"].get<bool>() ? "true" : "false")
            << "\n"
            << "n_constrained "
            << (j["n_constrained"].get<bool>() ? "true" : "false") << "\n";
  std::cout << "primes";
  for (int p : j["primes"]) std::cout << " " << p;
  std::cout << "\n";
  return 0;
}

int cmd_subgroups(const std::string& ref, int order_bound, bool json) {
  LatticePtr lat = lattice_for(ref, order_bound);
  if (json) {
    std::cout << dump_report(lattice_json(*lat));
    return 0;
  }
  for (int id = 0; id < lat->size(); ++id) {
    std::cout << "subgroup " << id << " order " << lat->order_of(id)
              << (lat->is_normal(id) ? " normal"
                                     : lat->is_subnormal(id) ? " subnormal" : "")
              << " class " << lat->conj_class_index(id) << " gens";
    for (const std::string& s : lat->generator_strings(id))
      std::cout << " " << s;
    std::cout << "\n";
  }
  return 0;
}

int cmd_radical(const std::string& ref, int order_bound,
                const std::string& spec) {
  LatticePtr lat = lattice_for(ref, order_bound);
  FittingSet F = parse_fitset_spec(spec, lat);
  int rad = set_radical(F, lat->top_id());
  std::cout << "fitset " << F.desc() << " with " << F.count() << " members\n";
  std::cout << "radical ";
  print_subgroup(*lat, rad, std::cout);
  return 0;
}

int cmd_injectors(const std::string& ref, int order_bound,
                  const std::string& spec, const std::string& hfunc_path,
                  const std::string& h_inline, const std::string& method,
                  bool json) {
  LatticePtr lat = lattice_for(ref, order_bound);

  std::optional<InjectorReport> brute, theorem;
  if (!spec.empty()) {
    if (!hfunc_path.empty() || !h_inline.empty())
      throw InputError("give either --fitset or an h-function, not both");
    if (method == "theorem")
      throw InputError("--method theorem needs an h-function (--hfunc/--h)");
    brute = injectors_bruteforce(parse_fitset_spec(spec, lat));
  } else {
    HFunction h = resolve_hfunction(lat, hfunc_path, h_inline);
    if (method == "brute" || method == "both")
      brute = injectors_bruteforce(hs(h));
    if (method == "theorem") {
      theorem = hartley_injectors(lat, h);  // HypothesisError exits with 3
    } else if (method == "both") {
      try {
        theorem = hartley_injectors(lat, h);
      } catch (const HypothesisError& ex) {
        std::cout << "theorem route refused: " << ex.what() << "\n";
      }
    }
  }

  if (json) {
    Json j;
    j["schema"] = kReportSchema;
    if (brute) j["brute_force"] = injector_report_json(*brute);
    if (theorem) j["theorem_1_5"] = injector_report_json(*theorem);
    if (brute && theorem)
      j["agree"] = brute->injectors == theorem->injectors;
    std::cout << dump_report(j);
    return 0;
  }
  for (const auto& [label, rep] :
       {std::pair<const char*, const std::optional<InjectorReport>&>{
            "brute_force", brute},
        {"theorem_1_5", theorem}}) {
    if (!rep) continue;
    std::cout << label << ": " << rep->injectors.size() << " injector(s) for "
              << rep->fitset_desc
              << (rep->single_class ? " (one conjugacy class)" : "") << "\n";
    for (int v : rep->injectors) {
      std::cout << "  ";
      print_subgroup(*rep->lattice, v, std::cout);
    }
  }
  if (brute && theorem)
    std::cout << "agreement "
              << (brute->injectors == theorem->injectors ? "true" : "false")
              << "\n";
  return 0;
}

int cmd_hartley(const std::string& ref, int order_bound,
                const std::string& hfunc_path, const std::string& h_inline,
                bool show_conversions) {
  LatticePtr lat = lattice_for(ref, order_bound);
  HFunction h = resolve_hfunction(lat, hfunc_path, h_inline);
  HartleySet H = hartley_set(h);
  std::cout << "h " << h.desc() << "\n";
  std::cout << "hs members " << H.set.count() << " of " << lat->size()
            << " subgroups\n";
  std::cout << "integrated " << (H.integrated ? "true" : "false") << "\n";
  std::cout << "full " << (H.full ? "true" : "false") << "\n";
  for (int id = H.set.members().first(); id >= 0;
       id = H.set.members().next(id)) {
    std::cout << "  member ";
    print_subgroup(*lat, id, std::cout);
  }
  if (show_conversions) {
    HFunction hi = integrate(h);
    std::cout << "integrated_h " << hi.desc() << "\n";
    HFunction hfE = make_full_integrated(h, ResidualVariant::PPrimeAll);
    HFunction hfS = make_full_integrated(h, ResidualVariant::PPrimeSoluble);
    std::cout << "full_integrated_h " << hfE.desc() << "\n";
    std::cout << "hs_preserved "
              << (hs(hfE).same_members(H.set) ? "true" : "false") << "\n";
    bool agree = true;
    for (const auto& [p, F] : hfE.assignments())
      if (!F.same_members(hfS.at(p))) agree = false;
    std::cout << "residual_variants_agree " << (agree ? "true" : "false")
              << "\n";
    int gh = h_radical(hfE);
    std::cout << "h_radical ";
    print_subgroup(*lat, gh, std::cout);
    int ghs = set_radical(H.set, lat->top_id());
    std::cout << "hs_radical ";
    print_subgroup(*lat, ghs, std::cout);
  }
  return 0;
}

int cmd_verify(const std::string& suite_name, int max_order,
               const std::string& json_path) {
  std::vector<Suite> suites;
  if (suite_name == "all")
    suites = {Suite::Axioms, Suite::ProductAlgebra, Suite::HartleyConversions,
              Suite::Injectors, Suite::Corollaries};
  else
    suites = {suite_from_string(suite_name)};

  int failed = 0;
  Json all = Json::array();
  for (Suite s : suites) {
    VerificationRun run = run_suite(s, max_order);
    failed += run.failed;
    std::cout << "suite " << to_string(s) << ": " << run.passed << " passed, "
              << run.failed << " failed, " << run.skipped << " skipped ("
              << static_cast<int>(run.wall_ms) << " ms)\n";
    for (const ClaimResult& r : run.results)
      if (r.status == ClaimStatus::Fail)
        std::cout << "  FAIL " << r.claim << " [" << r.subject << "] "
                  << r.witness << "\n";
    all.push_back(verification_run_json(run));
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write report to " + json_path);
    out << dump_report(all.size() == 1 ? all[0] : all);
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitting sets, Hartley sets and injectors of small finite groups"};
  app.require_subcommand(1);
  int order_bound = kDefaultOrderBound;
  app.add_option("--order-bound", order_bound,
                 "maximum order of any constructed group");

  std::string ref, spec, hfunc_path, h_inline, method = "both", suite_name,
                   json_path;
  int max_order = 24;
  bool json = false, show_conversions = false;

  CLI::App* info = app.add_subcommand("info", "basic structure of one group");
  info->add_option("group", ref, "catalog:<Name> or file:<path>")->required();

  CLI::App* subs = app.add_subcommand("subgroups", "dump the subgroup lattice");
  subs->add_option("group", ref)->required();
  subs->add_flag("--json", json, "emit JSON");

  CLI::App* rad = app.add_subcommand("radical", "radical of a Fitting set");
  rad->add_option("group", ref)->required();
  rad->add_option("--fitset", spec, "Fitting-set spec")->required();

  CLI::App* inj = app.add_subcommand("injectors", "injectors of a Fitting set");
  inj->set_help_flag("--help", "print help");  // frees -h for --h
  inj->add_option("group", ref)->required();
  inj->add_option("--fitset", spec, "Fitting-set spec (brute force only)");
  inj->add_option("--hfunc", hfunc_path, "h-function file");
  inj->add_option("--h", h_inline, "inline h-function");
  inj->add_option("--method", method, "brute|theorem|both")
      ->check(CLI::IsMember({"brute", "theorem", "both"}));
  inj->add_flag("--json", json, "emit JSON");

  CLI::App* har = app.add_subcommand("hartley", "Hartley set of an h-function");
  har->set_help_flag("--help", "print help");
  har->add_option("group", ref)->required();
  har->add_option("--hfunc", hfunc_path, "h-function file");
  har->add_option("--h", h_inline, "inline h-function");
  har->add_flag("--show-conversions", show_conversions,
                "print integrated/full conversions and radicals");

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite_name,
                  "axioms|product_algebra|hartley_conversions|injectors|"
                  "corollaries|all")
      ->required();
  ver->add_option("--max-order", max_order, "catalog scope");
  ver->add_option("--json", json_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
    if (info->parsed()) return cmd_info(ref, order_bound);
    if (subs->parsed()) return cmd_subgroups(ref, order_bound, json);
    if (rad->parsed()) return cmd_radical(ref, order_bound, spec);
    if (inj->parsed())
      return cmd_injectors(ref, order_bound, spec, hfunc_path, h_inline,
                           method, json);
    if (har->parsed())
      return cmd_hartley(ref, order_bound, hfunc_path, h_inline,
                         show_conversions);
    if (ver->parsed()) return cmd_verify(suite_name, max_order, json_path);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const fitset::HypothesisError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const fitset::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
