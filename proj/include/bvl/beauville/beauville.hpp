#pragma once

#include "bvl/analysis/analysis.hpp"
#include "bvl/pc/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bvl {

struct Pair {
  ElemId x = 0;
  ElemId y = 0;
  auto operator<=>(const Pair&) const = default;
};

struct Structure {
  Pair first;
  Pair second;
  auto operator<=>(const Structure&) const = default;
};

enum class SigmaBase { X, Y, XY };
const char* to_string(SigmaBase b);

/// How a member of a Sigma-set arises: member = (base^power)^conjugator.
struct SigmaWitness {
  SigmaBase base = SigmaBase::X;
  std::uint64_t power = 0;
  ElemId conjugator = 0;
};

struct SigmaSet {
  Pair pair;
  std::vector<ElemId> elements;       // sorted
  std::vector<SigmaWitness> witness;  // parallel to elements; e has power 0

  bool contains(ElemId a) const;
  const SigmaWitness& witness_of(ElemId a) const;
};

/// Union of conjugacy classes of h^i, i in [1, o(h)], for h in {x, y, xy}.
SigmaSet sigma(const Group& g, ElemId x, ElemId y);

/// Literal double loop over i in [1, |G|] and every conjugator. Throws
/// GroupTooLargeForOracle above brute_bound() (BVL_BRUTE_BOUND, default 2000).
SigmaSet sigma_brute(const Group& g, ElemId x, ElemId y);
/// {(h^i)^c : 1 <= i <= |G|, c in G}, sorted; same bound as sigma_brute.
std::vector<ElemId> brute_power_conjugates(const Group& g, ElemId h);
std::uint64_t brute_bound();

/// Conjugacy classes of subgroups of order p in a p-group. For a != e,
/// subgroup_class[a] identifies the class of the order-p subgroup of <a>.
/// Sigma(P1) and Sigma(P2) meet only in e iff the class sets of
/// {x1, y1, x1y1} and {x2, y2, x2y2} are disjoint.
struct SocleData {
  static constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> subgroup_class;  // per element, kNone for e
  std::vector<ElemId> representative;         // least generator of a class member
  std::vector<std::uint8_t> central;          // per class
};

/// Throws NotPGroup.
const SocleData& socle_data(const Group& g);

enum class VerdictKind { BeauvilleVerified, NotAStructure, NonBeauvilleCertified, SearchExhaustedNone, Found, Inconclusive };
enum class Reason { NotGeneratingPair1, NotGeneratingPair2, SigmaOverlap };
enum class CertificateKind { NotTwoGenerated, UniversalElement, ExhaustiveScan };

const char* to_string(VerdictKind k);
const char* to_string(Reason r);
const char* to_string(CertificateKind k);

struct ScanStats {
  std::uint64_t generating_pairs = 0;   // pairs visited
  std::uint64_t first_components = 0;   // complete search: class representatives used
  std::uint64_t distinct_sigma = 0;     // distinct Sigma keys
  std::uint64_t disjoint_key_pairs = 0; // complete search: disjoint Sigma pairs
};

struct Certificate {
  CertificateKind kind = CertificateKind::NotTwoGenerated;
  std::uint32_t frattini_rank = 0;    // not_two_generated
  std::optional<ElemId> element;      // universal_element: s, of order p
  std::uint64_t candidates_tried = 0; // universal_element
  ScanStats stats;
  bool all_overlap = false;           // exhaustive_scan
};

struct LiftRecord {
  std::uint64_t kernel_order = 0;
  std::uint64_t quotient_order = 0;
  std::uint32_t faithful_pair = 0;  // 1 or 2
  Structure image;                  // ids in the quotient
  bool direct_agrees = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<Structure> structure;
  std::optional<Certificate> certificate;
  std::vector<Reason> reasons;
  std::optional<ElemId> witness;  // sigma_overlap: nontrivial common element
  std::optional<ScanStats> stats;
  std::optional<LiftRecord> lift;
  std::string note;
};

Verdict verify_structure(const Group& g, Pair p1, Pair p2);

struct SearchOptions {
  enum class Mode { Complete, Heuristic } mode = Mode::Complete;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;
  std::uint64_t bound = 5000;  // complete mode only
};

/// Complete mode: throws BoundExceeded above the bound and NotPGroup outside
/// p-groups. Heuristic mode returns Found or Inconclusive.
Verdict search_structure(const Group& g, const SearchOptions& opts = {});

struct CertifyOptions {
  unsigned jobs = 1;
  std::uint64_t search_bound = 5000;
};

/// Not-two-generated, then universal element, then complete search.
/// Throws Inconclusive when none applies.
Verdict certify_non_beauville(const Group& g, const CertifyOptions& opts = {});

/// Verifies the images of p1, p2 in G/<gens> and lifts. Throws
/// NonNormalSubgroup or NotFaithful.
Verdict lift_structure(const Group& g, std::span<const ElemId> gens, Pair p1, Pair p2);

struct ProductResult {
  Group group;
  Structure structure;
};

/// Throws CoprimalityViolation, or BadParameters if an input structure does
/// not verify or a factor is trivial.
ProductResult product_structure(const Group& g1, const Structure& s1, const Group& g2, const Structure& s2);

}  // namespace bvl
