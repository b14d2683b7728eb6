#pragma once

#include "bvl/beauville/beauville.hpp"
#include "bvl/catalog/catalog.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bvl::cli {

/// A GROUP argument: a .pcg file path or a catalog reference such as "lemma10:p=3,n=2".
struct LoadedGroup {
  Group group;
  std::string source;
  std::optional<CatalogGroup> catalog;
};

/// Throws ParseError (no such file or family) and whatever building raises.
LoadedGroup load_group(const std::string& arg);

/// "w1,w2" evaluated in g.
Pair parse_pair(const Group& g, const std::string& text);

/// Normal form written over generator names, e.g. "x*y^2*z", "1" for e.
std::string element_word(const Group& g, ElemId a);
nlohmann::json element_json(const Group& g, ElemId a);
nlohmann::json verdict_json(const Group& g, const Verdict& v);
std::string verdict_text(const Group& g, const Verdict& v);

/// 0 verified/found, 1 refuted or certified-none, 2 inconclusive.
int exit_code(VerdictKind k);

struct CensusEntry {
  std::string name;  // family reference
  std::uint64_t order = 0;
  VerdictKind verdict = VerdictKind::Inconclusive;
  std::string method;  // recipe, certify, search, heuristic
  std::optional<CertificateKind> certificate;
  std::size_t bucket = 0;
};

struct CensusBucket {
  std::vector<std::size_t> members;  // indices into entries
  std::optional<bool> beauville;     // nullopt: undecided or members disagree
  bool mixed = false;
};

struct CensusReport {
  std::string suite;
  std::uint32_t p = 0;
  std::vector<CensusEntry> entries;
  std::vector<CensusBucket> buckets;
  std::size_t beauville_buckets = 0;
  std::size_t undecided_buckets = 0;
  CountsRecord expected;
  std::vector<std::string> notes;
};

struct CensusOptions {
  unsigned jobs = 1;
  std::optional<std::int64_t> r;  // H4 when p has no published value
};

/// Suites p3, p4, p5, p6 over the catalog families of order p^3 .. p^6.
/// Groups are bucketed by fingerprint; counts are lower bounds.
CensusReport run_census(const std::string& suite, std::uint32_t p, const CensusOptions& opts = {});
nlohmann::json census_json(const CensusReport& report);
std::string census_text(const CensusReport& report);

/// Full command line front end; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bvl::cli
