#pragma once

#include "bvl/pc/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bvl {

/// A named group family and its parameters. Unused parameters stay empty.
struct FamilySpec {
  std::string family;  // e.g. "lemma10", "H4", "H_ijkl", "table2_G4'"
  std::uint32_t p = 0;
  std::optional<std::int64_t> n, r, i, j, k, l, alpha;
  std::vector<std::uint32_t> exponents;  // "abelian" only: cyclic factors p^e

  bool operator==(const FamilySpec&) const = default;
};

/// "lemma10:p=3,n=2", "H_ijkl:p=5,i=1,j=0,k=0,l=0", "abelian:p=5,exponents=2.1".
/// Throws BadParameters on malformed text or unknown family.
FamilySpec parse_family_ref(std::string_view text);
std::string render_family_ref(const FamilySpec& spec);
/// True if text names a catalog family (possibly with parameters).
bool looks_like_family_ref(std::string_view text);

/// A defining relation, both sides written over the family's named generators
/// in the global convention [a,b] = a^-1 b^-1 a b, a^b = b^-1 a b.
struct Relation {
  std::string lhs;
  std::string rhs;
};

struct CatalogGroup {
  FamilySpec spec;  // with defaults filled in
  Group group;
  std::vector<Relation> relations;
  /// Chain generators in terms of the named generators, e.g. a1 -> x^5.
  std::map<std::string, std::string> aliases;
  std::uint64_t expected_order = 0;
};

/// Throws BadParameters or UnsupportedPrimeForFamily; build errors pass through.
CatalogGroup build_family(const FamilySpec& spec);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

struct ValidationReport {
  std::vector<RelationCheck> checks;
  std::uint64_t expected_order = 0;
  std::uint64_t actual_order = 0;

  bool order_ok() const { return expected_order == actual_order; }
  bool all_pass() const;
};

/// Re-evaluates every relation of the family inside g.
ValidationReport validate_family(const Group& g, const FamilySpec& spec);

struct CountsRecord {
  std::optional<std::uint64_t> h;  // 2-generated groups of order p^5, p >= 5
  std::optional<std::uint64_t> f;  // 2-generated groups of order p^6, p >= 5
  std::uint64_t lemma24 = 0;        // isomorphism classes among H_ijkl
  std::uint64_t conjectured_g = 0;  // Beauville groups of order p^5
  std::uint64_t theorem4_lower = 0;
};

CountsRecord expected_counts(std::uint32_t p);

/// r used in H4 for the primes where it is published; nullopt elsewhere.
std::optional<std::uint32_t> h4_default_r(std::uint32_t p);

struct FamilyInfo {
  std::string id;
  std::string parameters;
  std::string description;
};

const std::vector<FamilyInfo>& list_families();

}  // namespace bvl
