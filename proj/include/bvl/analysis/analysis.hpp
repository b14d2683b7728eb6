#pragma once

#include "bvl/pc/group.hpp"

#include <cstdint>
#include <array>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace bvl {

/// Sorted, duplicate-free set of elements (ascending id == lexicographic).
class Subset {
 public:
  Subset() = default;
  Subset(std::vector<ElemId> sorted_ids, bool is_subgroup, bool is_central)
      : ids_(std::move(sorted_ids)), subgroup_(is_subgroup), central_(is_central) {}

  std::span<const ElemId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(ElemId a) const;
  bool is_subgroup() const { return subgroup_; }
  bool is_central() const { return central_; }
  std::vector<Element> elements(const Group& g) const;

  bool operator==(const Subset&) const = default;

 private:
  std::vector<ElemId> ids_;
  bool subgroup_ = false;
  bool central_ = false;
};

Subset enumerate(const Group& g);
/// Subgroup generated by the seeds (breadth-first right multiplication).
Subset closure(const Group& g, std::span<const ElemId> seeds);
Subset closure(const Group& g, std::span<const Element> seeds);
Subset normal_closure(const Group& g, std::span<const ElemId> seeds);
bool is_normal(const Group& g, const Subset& h);
bool is_central_element(const Group& g, ElemId a);

/// Conjugacy classes, found as orbits under conjugation by the PC generators.
struct ClassMap {
  std::vector<std::uint32_t> class_of;      // per element
  std::vector<ElemId> conjugator;           // rep^conjugator == element
  std::vector<ElemId> representative;       // least element of each class
  std::vector<std::vector<ElemId>> members; // sorted
};

const ClassMap& class_map(const Group& g);
Subset conjugacy_class(const Group& g, ElemId a);
Subset center(const Group& g);
Subset derived_subgroup(const Group& g);

/// Frattini subgroup [G,G]G^p of a p-group and coordinates on G/Phi(G).
struct FrattiniData {
  Subset subgroup;
  std::uint32_t rank = 0;              // dimension of G/Phi(G) over F_p
  std::vector<std::uint32_t> coset_of; // per element
  /// When rank == 2: image of each element as i*p + j in F_p^2.
  std::vector<std::uint16_t> coord;
  std::array<ElemId, 2> basis{};
};

/// Throws NotPGroup for groups with mixed relative orders.
const FrattiniData& frattini(const Group& g);

/// True iff <x, y> = G. Uses the Frattini quotient when G is a p-group whose
/// G/Phi(G) has rank 2, and breadth-first closure otherwise.
bool generates(const Group& g, ElemId x, ElemId y);
/// Burnside-basis test only; throws NotTwoGeneratedGroup unless rank(G/Phi) == 2.
bool generates_frattini(const Group& g, ElemId x, ElemId y);
bool generates_by_closure(const Group& g, ElemId x, ElemId y);

/// a^(o(a)/p), generating the unique subgroup of order p in <a>.
/// Throws IdentityInput for a == e and NotPGroup outside p-groups.
ElemId socle_generator(const Group& g, ElemId a);

/// Quotient by a normal subgroup N with the induced PC presentation.
struct Quotient {
  Group group;
  Subset kernel;
  std::vector<std::size_t> surviving;  // generator indices of G kept in G/N
  std::vector<ElemId> projection;      // id in G -> id in G/N

  ElemId project(ElemId a) const { return projection[a]; }
};

/// N = <central_gens>; throws NonCentralGenerator if a generator is not central.
Quotient central_quotient(const Group& g, std::span<const ElemId> central_gens);
/// N = <gens>; throws NonNormalSubgroup unless <gens> is normal.
Quotient normal_quotient(const Group& g, std::span<const ElemId> gens);

/// PC presentation on the disjoint union of generators with trivial cross
/// commutators; clashing names of the second factor get a trailing '.
Group direct_product(const Group& g1, const Group& g2);
/// Embeddings of the factors into direct_product(g1, g2).
ElemId embed_left(const Group& product, const Group& g1, ElemId a);
ElemId embed_right(const Group& product, const Group& g1, const Group& g2, ElemId b);

/// Abelian invariants (prime-power cyclic factors, ascending) of G/[G,G].
std::vector<std::uint64_t> abelian_invariants(const Group& g);

/// Isomorphism invariants. Equal for isomorphic groups; the converse is not claimed.
struct Fingerprint {
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> order_spectrum;
  std::map<std::uint64_t, std::uint64_t> class_sizes;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::vector<std::uint64_t> abelian_invariants;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> power_profile;
  /// p-groups: (o(g), #{h : [[g,h],h] = g^p}) with multiplicity.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> commutator_power_profile;
  /// p-groups with rank(G/Phi) = 2: digraph on the p+1 maximal subgroups, A -> B
  /// when some g^p != e (g in A \ Phi) lies in [h, G'] for an h in B \ Phi.
  /// Per vertex (self loop, out-degree, in-degree, functional cycle length), sorted.
  std::vector<std::array<std::uint32_t, 4>> maximal_graph;

  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g);

/// Least nu >= 2 that is not a square mod p. Throws EvenPrime for p == 2.
std::uint32_t smallest_nonresidue(std::uint32_t p);

}  // namespace bvl
