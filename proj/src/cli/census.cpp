#include "bvl/cli/cli.hpp"

#include "bvl/error.hpp"

#include <map>
#include <sstream>

namespace bvl::cli {

namespace {

FamilySpec spec(std::string family, std::uint32_t p) {
  FamilySpec s;
  s.family = std::move(family);
  s.p = p;
  return s;
}

FamilySpec with_n(std::string family, std::uint32_t p, std::int64_t n) {
  FamilySpec s = spec(std::move(family), p);
  s.n = n;
  return s;
}

FamilySpec abelian(std::uint32_t p, std::vector<std::uint32_t> e) {
  FamilySpec s = spec("abelian", p);
  s.exponents = std::move(e);
  return s;
}

std::vector<FamilySpec> suite_members(const std::string& suite, std::uint32_t p, const CensusOptions& opts,
                                      std::vector<std::string>& notes) {
  std::vector<FamilySpec> out;
  if (suite == "p3") {
    out = {spec("holder_heisenberg", p), with_n("lemma10", p, 2), abelian(p, {3}), abelian(p, {2, 1}),
           abelian(p, {1, 1, 1})};
  } else if (suite == "p4") {
    for (auto id : {"table1_G1", "table1_G2", "table1_G3"}) out.push_back(spec(id, p));
    if (p == 2) {
      for (auto id : {"table2_G4'", "table2_G5'", "table2_G6'"}) out.push_back(spec(id, p));
    } else {
      for (auto id : {"table1_G4", "table1_G5", "table1_G6", "table1_G7"}) out.push_back(spec(id, p));
      if (p == 3) out.push_back(spec("table1_G8", p));
    }
    for (auto e : std::vector<std::vector<std::uint32_t>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}})
      out.push_back(abelian(p, e));
  } else if (suite == "p5") {
    if (p == 2) throw Error(ErrorKind::BadParameters, "suite p5 needs an odd prime");
    for (int h = 1; h <= 7; ++h) {
      FamilySpec s = spec("H" + std::to_string(h), p);
      if (h == 4) {
        if (opts.r) s.r = *opts.r;
        else if (!h4_default_r(p)) {
          notes.push_back("H4 skipped: no published r for p=" + std::to_string(p) + " (pass --r)");
          continue;
        }
      }
      out.push_back(s);
    }
    for (std::int64_t i = 0; i < p; ++i)
      for (std::int64_t j = 0; j < p; ++j)
        for (std::int64_t k = 0; k < p; ++k)
          for (std::int64_t l = 0; l < p; ++l) {
            FamilySpec s = spec("H_ijkl", p);
            s.i = i, s.j = j, s.k = k, s.l = l;
            out.push_back(s);
          }
  } else if (suite == "p6") {
    if (p == 2) throw Error(ErrorKind::BadParameters, "suite p6 needs an odd prime");
    for (std::int64_t r = 1; r < p; ++r) {
      FamilySpec s = spec("K_r", p);
      s.r = r;
      out.push_back(s);
    }
    out.push_back(with_n("lemma11", p, 3));
    out.push_back(with_n("lemma10", p, 5));
    out.push_back(with_n("cn_x_cn", p, 3));
  } else {
    throw Error(ErrorKind::BadParameters, "unknown suite '" + suite + "' (p3, p4, p5, p6)");
  }
  return out;
}

/// Standard recipes first, then certification, then a seeded heuristic search.
void decide(const Group& g, const CensusOptions& opts, CensusEntry& e) {
  if (g.rank() >= 2 && g.prime()) {
    const auto& pres = g.presentation();
    const auto xi = pres.find("x"), yi = pres.find("y");
    if (xi && yi) {
      const ElemId x = g.gen_id(*xi), y = g.gen_id(*yi);
      const ElemId xy2 = g.mul(x, g.pow(y, 2));
      for (int k : {3, 4}) {
        if (verify_structure(g, {x, y}, {xy2, g.mul(x, g.pow(y, k))}).kind == VerdictKind::BeauvilleVerified) {
          e.verdict = VerdictKind::BeauvilleVerified;
          e.method = "recipe";
          return;
        }
      }
    }
  }
  try {
    CertifyOptions co;
    co.jobs = opts.jobs;
    Verdict v = certify_non_beauville(g, co);
    e.verdict = v.kind;
    e.method = v.kind == VerdictKind::Found ? "search" : "certify";
    if (v.certificate) e.certificate = v.certificate->kind;
    return;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::Inconclusive) throw;
  }
  SearchOptions so;
  so.mode = SearchOptions::Mode::Heuristic;
  so.seed = 0;
  so.budget = 20000;
  e.verdict = search_structure(g, so).kind;
  e.method = "heuristic";
}

bool is_beauville(VerdictKind k) { return k == VerdictKind::BeauvilleVerified || k == VerdictKind::Found; }
bool is_refuted(VerdictKind k) {
  return k == VerdictKind::NonBeauvilleCertified || k == VerdictKind::SearchExhaustedNone;
}

}  // namespace

CensusReport run_census(const std::string& suite, std::uint32_t p, const CensusOptions& opts) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParameters, "p=" + std::to_string(p) + " is not prime");
  CensusReport rep;
  rep.suite = suite;
  rep.p = p;
  rep.expected = expected_counts(p);
  std::map<Fingerprint, std::size_t> bucket_of;
  for (const auto& s : suite_members(suite, p, opts, rep.notes)) {
    CatalogGroup cg = build_family(s);
    if (!validate_family(cg.group, cg.spec).all_pass()) {
      rep.notes.push_back(render_family_ref(cg.spec) + " failed validation and is excluded");
      continue;
    }
    CensusEntry e;
    e.name = render_family_ref(cg.spec);
    e.order = cg.group.order();
    decide(cg.group, opts, e);
    auto [it, fresh] = bucket_of.try_emplace(fingerprint(cg.group), rep.buckets.size());
    if (fresh) rep.buckets.emplace_back();
    e.bucket = it->second;
    rep.buckets[e.bucket].members.push_back(rep.entries.size());
    rep.entries.push_back(std::move(e));
  }
  for (auto& b : rep.buckets) {
    bool any_yes = false, any_no = false, any_unknown = false;
    for (auto m : b.members) {
      const auto k = rep.entries[m].verdict;
      any_yes |= is_beauville(k);
      any_no |= is_refuted(k);
      any_unknown |= !is_beauville(k) && !is_refuted(k);
    }
    b.mixed = any_yes && any_no;
    if (!any_unknown && !b.mixed) b.beauville = any_yes;
    if (any_yes) ++rep.beauville_buckets;
    else if (any_unknown) ++rep.undecided_buckets;
  }
  return rep;
}

nlohmann::json census_json(const CensusReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["p"] = r.p;
  j["lower_bound"] = true;
  j["beauville_buckets"] = r.beauville_buckets;
  j["undecided_buckets"] = r.undecided_buckets;
  j["bucket_count"] = r.buckets.size();
  j["notes"] = r.notes;
  nlohmann::json exp;
  if (r.expected.h) exp["h"] = *r.expected.h;
  if (r.expected.f) exp["f"] = *r.expected.f;
  exp["lemma24"] = r.expected.lemma24;
  exp["conjectured_g"] = r.expected.conjectured_g;
  exp["theorem4_lower"] = r.expected.theorem4_lower;
  j["expected"] = exp;
  j["groups"] = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json g{{"name", e.name}, {"order", e.order}, {"verdict", to_string(e.verdict)},
                     {"method", e.method}, {"bucket", e.bucket}};
    if (e.certificate) g["certificate"] = to_string(*e.certificate);
    j["groups"].push_back(g);
  }
  j["buckets"] = nlohmann::json::array();
  for (const auto& b : r.buckets) {
    nlohmann::json o{{"members", b.members.size()}, {"mixed", b.mixed}, {"first", r.entries[b.members.front()].name}};
    o["beauville"] = b.beauville ? nlohmann::json(*b.beauville) : nlohmann::json(nullptr);
    j["buckets"].push_back(o);
  }
  return j;
}

std::string census_text(const CensusReport& r) {
  std::ostringstream os;
  os << "census " << r.suite << " p=" << r.p << ": " << r.entries.size() << " groups, " << r.buckets.size()
     << " fingerprint buckets\n";
  for (std::size_t b = 0; b < r.buckets.size(); ++b) {
    const auto& bk = r.buckets[b];
    const auto& first = r.entries[bk.members.front()];
    os << "  bucket " << b << ": " << first.name << " (+" << bk.members.size() - 1 << ") "
       << (bk.mixed ? "MIXED" : bk.beauville ? (*bk.beauville ? "beauville" : "not beauville") : "undecided") << " ["
       << first.method << "]\n";
  }
  os << "Beauville groups (fingerprint-distinct, lower bound): " << r.beauville_buckets << "\n";
  if (r.undecided_buckets) os << "undecided buckets: " << r.undecided_buckets << "\n";
  if (r.expected.h) os << "h(p) = " << *r.expected.h << ", ";
  if (r.expected.f) os << "f(p) = " << *r.expected.f << ", ";
  os << "conjectured g(p) = " << r.expected.conjectured_g << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace bvl::cli
