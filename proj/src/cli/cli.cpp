#include "bvl/cli/cli.hpp"

#include "bvl/error.hpp"
#include "bvl/text/pcg_format.hpp"
#include "bvl/text/word_expr.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

namespace bvl::cli {

using nlohmann::json;

LoadedGroup load_group(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec))
    return LoadedGroup{Group::build(read_presentation(arg)), arg, std::nullopt};
  if (looks_like_family_ref(arg)) {
    CatalogGroup cg = build_family(parse_family_ref(arg));
    Group g = cg.group;
    std::string source = render_family_ref(cg.spec);
    return LoadedGroup{std::move(g), std::move(source), std::move(cg)};
  }
  throw Error(ErrorKind::ParseError, "'" + arg + "' is neither a file nor a catalog family");
}

Pair parse_pair(const Group& g, const std::string& text) {
  const auto parts = split_top_level(text, ',');
  if (parts.size() != 2) throw Error(ErrorKind::SyntaxError, "expected two words separated by ',' in '" + text + "'");
  return {g.id_of(evaluate(g, parts[0])), g.id_of(evaluate(g, parts[1]))};
}

std::string element_word(const Group& g, ElemId a) {
  const auto d = g.digits(a);
  const auto& names = g.presentation().names;
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i]) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (d[i] != 1) out += "^" + std::to_string(d[i]);
  }
  return out.empty() ? "1" : out;
}

json element_json(const Group& g, ElemId a) {
  json arr = json::array();
  for (auto v : g.digits(a)) arr.push_back(static_cast<int>(v));
  return arr;
}

namespace {

json pair_json(const Group& g, Pair p) { return json::array({element_json(g, p.x), element_json(g, p.y)}); }

json stats_json(const ScanStats& s) {
  return json{{"generating_pairs", s.generating_pairs},
              {"first_components", s.first_components},
              {"distinct_sigma", s.distinct_sigma},
              {"disjoint_sigma_pairs", s.disjoint_key_pairs}};
}

std::string pair_text(const Group& g, Pair p) {
  return "(" + element_word(g, p.x) + ", " + element_word(g, p.y) + ")";
}

}  // namespace

json verdict_json(const Group& g, const Verdict& v) {
  json j;
  j["kind"] = to_string(v.kind);
  if (v.structure) j["structure"] = json{{"pair1", pair_json(g, v.structure->first)}, {"pair2", pair_json(g, v.structure->second)}};
  json reasons = json::array();
  for (auto r : v.reasons) reasons.push_back(to_string(r));
  j["reasons"] = reasons;
  if (v.witness) j["witness"] = element_json(g, *v.witness);
  if (v.certificate) {
    const auto& c = *v.certificate;
    json cj{{"kind", to_string(c.kind)}};
    if (c.kind == CertificateKind::NotTwoGenerated) cj["frattini_rank"] = c.frattini_rank;
    if (c.kind == CertificateKind::UniversalElement) {
      cj["element"] = element_json(g, *c.element);
      cj["element_order"] = g.order_of(*c.element);
      cj["candidates_tried"] = c.candidates_tried;
      cj["generating_pairs"] = c.stats.generating_pairs;
    }
    if (c.kind == CertificateKind::ExhaustiveScan) {
      cj["stats"] = stats_json(c.stats);
      cj["all_overlap"] = c.all_overlap;
    }
    j["certificate"] = cj;
  }
  if (v.stats) j["stats"] = stats_json(*v.stats);
  if (v.lift) {
    const auto& l = *v.lift;
    j["lift"] = json{{"kernel_order", l.kernel_order},
                     {"quotient_order", l.quotient_order},
                     {"faithful_pair", l.faithful_pair},
                     {"direct_agrees", l.direct_agrees}};
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string verdict_text(const Group& g, const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.kind) << "\n";
  if (v.structure) os << "  structure: {" << pair_text(g, v.structure->first) << ", " << pair_text(g, v.structure->second) << "}\n";
  for (auto r : v.reasons) os << "  reason: " << to_string(r) << "\n";
  if (v.witness) os << "  witness: " << element_word(g, *v.witness) << "\n";
  if (v.certificate) {
    const auto& c = *v.certificate;
    os << "  certificate: " << to_string(c.kind) << "\n";
    if (c.kind == CertificateKind::NotTwoGenerated) os << "    rank of G/Phi(G): " << c.frattini_rank << "\n";
    if (c.element)
      os << "    element: " << element_word(g, *c.element) << " (order " << g.order_of(*c.element)
         << "), in Sigma(a,b) for all " << c.stats.generating_pairs << " generating pairs\n";
    if (c.kind == CertificateKind::ExhaustiveScan)
      os << "    " << c.stats.generating_pairs << " generating pairs, " << c.stats.distinct_sigma
         << " distinct Sigma keys, every pair overlaps\n";
  }
  if (v.stats)
    os << "  scanned " << v.stats->generating_pairs << " generating pairs, " << v.stats->distinct_sigma
       << " distinct Sigma keys\n";
  if (v.lift)
    os << "  lifted from G/N of order " << v.lift->quotient_order << " (|N| = " << v.lift->kernel_order
       << ", faithful pair " << v.lift->faithful_pair << ", direct check " << (v.lift->direct_agrees ? "agrees" : "DISAGREES")
       << ")\n";
  if (!v.note.empty()) os << "  note: " << v.note << "\n";
  return os.str();
}

int exit_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::BeauvilleVerified:
    case VerdictKind::Found: return 0;
    case VerdictKind::NotAStructure:
    case VerdictKind::NonBeauvilleCertified:
    case VerdictKind::SearchExhaustedNone: return 1;
    case VerdictKind::Inconclusive: return 2;
  }
  return 2;
}

namespace {

int error_exit(ErrorKind k) {
  switch (k) {
    case ErrorKind::Inconclusive:
    case ErrorKind::BoundExceeded:
    case ErrorKind::GroupTooLargeForOracle:
    case ErrorKind::StepBudgetExceeded: return 2;
    default: return 3;
  }
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json) out << j.dump(2) << "\n";
  else out << text;
}

json group_json(const LoadedGroup& lg) { return json{{"source", lg.source}, {"order", lg.group.order()}}; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite p-group engine and Beauville structure toolkit", "bvl"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Canonical JSON output");

  auto* list = app.add_subcommand("list", "List catalog families");

  auto* build = app.add_subcommand("build", "Build and validate a catalog group");
  FamilySpec fam;
  std::string exponents, out_path;
  std::optional<std::int64_t> n, r, i, j, k, l, alpha;
  build->add_option("--family", fam.family, "Family id")->required();
  build->add_option("--p", fam.p, "Prime");
  build->add_option("--n", n);
  build->add_option("--r", r);
  build->add_option("--i", i);
  build->add_option("--j", j);
  build->add_option("--k", k);
  build->add_option("--l", l);
  build->add_option("--alpha", alpha);
  build->add_option("--exponents", exponents, "abelian family, e.g. 2.1");
  build->add_option("--out", out_path, "Write the presentation to this .pcg file");

  std::string group, s1, s2, pair_text_arg, kernel;
  auto* verify = app.add_subcommand("verify", "Verify a Beauville structure");
  verify->add_option("group", group, "File or catalog reference")->required();
  verify->add_option("--s1", s1, "First pair \"w1,w2\"")->required();
  verify->add_option("--s2", s2, "Second pair \"w3,w4\"")->required();

  auto* search = app.add_subcommand("search", "Search for a Beauville structure");
  bool complete = false, heuristic = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 10000, bound = 5000;
  search->add_option("group", group)->required();
  search->add_flag("--complete", complete, "Exhaustive search (default)");
  search->add_flag("--heuristic", heuristic, "Recipes, then seeded random pairs");
  search->add_option("--seed", seed);
  search->add_option("--budget", budget);
  search->add_option("--bound", bound, "Largest order for complete search");

  auto* certify = app.add_subcommand("certify", "Certify that no Beauville structure exists");
  unsigned jobs = 1;
  certify->add_option("group", group)->required();
  certify->add_option("--jobs", jobs);
  certify->add_option("--bound", bound, "Largest order for the exhaustive fallback");

  auto* sig = app.add_subcommand("sigma", "Compute Sigma(x, y)");
  bool brute = false;
  sig->add_option("group", group)->required();
  sig->add_option("--pair", pair_text_arg, "\"w1,w2\"")->required();
  sig->add_flag("--brute", brute, "Literal double loop (bounded by BVL_BRUTE_BOUND)");

  auto* lift = app.add_subcommand("lift", "Lift a structure from G/N");
  lift->add_option("group", group)->required();
  lift->add_option("--kernel", kernel, "Generators of N, \"w1,w2,...\"")->required();
  lift->add_option("--s1", s1)->required();
  lift->add_option("--s2", s2)->required();

  auto* census = app.add_subcommand("census", "Lower-bound census over catalog families");
  std::string suite;
  std::uint32_t census_p = 0;
  std::optional<std::int64_t> census_r;
  census->add_option("--suite", suite)->required()->check(CLI::IsMember({"p3", "p4", "p5", "p6"}));
  census->add_option("--p", census_p)->required();
  census->add_option("--jobs", jobs);
  census->add_option("--r", census_r, "r for H4 where none is published");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*list) {
      json arr = json::array();
      std::ostringstream os;
      for (const auto& f : list_families()) {
        arr.push_back(json{{"id", f.id}, {"parameters", f.parameters}, {"description", f.description}});
        os << f.id << "  [" << f.parameters << "]  " << f.description << "\n";
      }
      emit(out, as_json, arr, os.str());
      return 0;
    }
    if (*build) {
      fam.n = n, fam.r = r, fam.i = i, fam.j = j, fam.k = k, fam.l = l, fam.alpha = alpha;
      if (!exponents.empty())
        fam.exponents = parse_family_ref("abelian:exponents=" + exponents).exponents;
      CatalogGroup cg = build_family(fam);
      const ValidationReport rep = validate_family(cg.group, cg.spec);
      if (!out_path.empty()) write_presentation(out_path, cg.group.presentation());
      json checks = json::array();
      std::ostringstream os;
      os << render_family_ref(cg.spec) << ": order " << cg.group.order() << " (expected " << rep.expected_order << ")\n"
         << render_presentation(cg.group.presentation());
      for (const auto& c : rep.checks) {
        checks.push_back(json{{"relation", c.relation}, {"holds", c.holds}});
        os << (c.holds ? "  ok    " : "  FAIL  ") << c.relation << "\n";
      }
      json j{{"family", render_family_ref(cg.spec)},
             {"order", cg.group.order()},
             {"expected_order", rep.expected_order},
             {"presentation", render_presentation(cg.group.presentation())},
             {"aliases", cg.aliases},
             {"validation", checks},
             {"valid", rep.all_pass()}};
      emit(out, as_json, j, os.str());
      return rep.all_pass() ? 0 : 1;
    }
    if (*census) {
      CensusOptions co;
      co.jobs = jobs;
      co.r = census_r;
      const CensusReport rep = run_census(suite, census_p, co);
      emit(out, as_json, census_json(rep), census_text(rep));
      return 0;
    }

    const LoadedGroup lg = load_group(group);
    const Group& g = lg.group;
    Verdict v;
    if (*verify) {
      v = verify_structure(g, parse_pair(g, s1), parse_pair(g, s2));
    } else if (*search) {
      SearchOptions so;
      if (heuristic && complete) throw Error(ErrorKind::BadParameters, "--complete and --heuristic are exclusive");
      if (heuristic) {
        if (!seed) throw Error(ErrorKind::BadParameters, "--heuristic needs an explicit --seed");
        so.mode = SearchOptions::Mode::Heuristic;
        so.seed = *seed;
        so.budget = budget;
      }
      so.bound = bound;
      v = search_structure(g, so);
    } else if (*certify) {
      CertifyOptions co;
      co.jobs = jobs;
      co.search_bound = bound;
      v = certify_non_beauville(g, co);
    } else if (*lift) {
      std::vector<ElemId> gens;
      for (const auto& w : split_top_level(kernel, ',')) gens.push_back(g.id_of(evaluate(g, w)));
      v = lift_structure(g, gens, parse_pair(g, s1), parse_pair(g, s2));
    } else if (*sig) {
      const Pair pr = parse_pair(g, pair_text_arg);
      const SigmaSet s = brute ? sigma_brute(g, pr.x, pr.y) : sigma(g, pr.x, pr.y);
      json elems = json::array(), wit = json::array();
      std::ostringstream os;
      os << "|Sigma(" << element_word(g, pr.x) << ", " << element_word(g, pr.y) << ")| = " << s.elements.size() << "\n";
      for (std::size_t t = 0; t < s.elements.size(); ++t) {
        const auto& w = s.witness[t];
        elems.push_back(element_json(g, s.elements[t]));
        wit.push_back(json{{"base", to_string(w.base)}, {"power", w.power}, {"conjugator", element_json(g, w.conjugator)}});
        os << "  " << element_word(g, s.elements[t]) << "  = (" << to_string(w.base) << "^" << w.power << ")^("
           << element_word(g, w.conjugator) << ")\n";
      }
      json j{{"group", group_json(lg)}, {"pair", pair_json(g, pr)}, {"size", s.elements.size()},
             {"elements", elems}, {"witnesses", wit}, {"method", brute ? "brute" : "classes"}};
      emit(out, as_json, j, os.str());
      return 0;
    }
    json j{{"group", group_json(lg)}, {"verdict", verdict_json(g, v)}};
    emit(out, as_json, j, lg.source + " (order " + std::to_string(g.order()) + "): " + verdict_text(g, v));
    return exit_code(v.kind);
  } catch (const Error& e) {
    if (as_json) out << json{{"error", json{{"kind", to_string(e.kind())}, {"detail", e.detail()}}}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return error_exit(e.kind());
  }
}

}  // namespace bvl::cli
