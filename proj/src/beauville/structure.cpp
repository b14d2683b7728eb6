#include "bvl/beauville/beauville.hpp"

#include "bvl/error.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace bvl {

namespace {

/// Distinct subgroup classes met by {x, y, xy}, ascending, padded with kNone.
using Key = std::array<std::uint32_t, 3>;

Key make_key(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  Key k{a, b, c};
  std::sort(k.begin(), k.end());
  if (k[1] == k[0]) k[1] = SocleData::kNone;
  if (k[2] == k[0] || k[2] == k[1]) k[2] = SocleData::kNone;
  std::sort(k.begin(), k.end());
  return k;
}

Key pair_key(const Group& g, const SocleData& sd, Pair p) {
  const auto& sc = sd.subgroup_class;
  return make_key(sc[p.x], sc[p.y], sc[g.mul(p.x, p.y)]);
}

bool disjoint(const Key& a, const Key& b) {
  for (auto u : a) {
    if (u == SocleData::kNone) continue;
    for (auto v : b)
      if (u == v) return false;
  }
  return true;
}

int key_size(const Key& k) {
  return static_cast<int>(std::count_if(k.begin(), k.end(), [](auto v) { return v != SocleData::kNone; }));
}

Structure ordered(Pair a, Pair b) { return a <= b ? Structure{a, b} : Structure{b, a}; }

bool is_p_group(const Group& g) { return g.rank() == 0 || g.prime().has_value(); }

Verdict not_two_generated_search(std::uint32_t rank) {
  Verdict v;
  v.kind = VerdictKind::SearchExhaustedNone;
  v.stats = ScanStats{};
  v.note = "G/Phi(G) has rank " + std::to_string(rank) + "; no generating pairs";
  return v;
}

Verdict complete_search(const Group& g, const SearchOptions& opts) {
  if (g.order() > opts.bound)
    throw Error(ErrorKind::BoundExceeded,
                "order " + std::to_string(g.order()) + " exceeds complete-search bound " + std::to_string(opts.bound));
  if (!is_p_group(g)) throw Error(ErrorKind::NotPGroup, "complete search needs a p-group");
  const auto& f = frattini(g);
  if (f.rank != 2) return not_two_generated_search(f.rank);
  const auto& sd = socle_data(g);
  const auto& cm = class_map(g);

  // Conjugating a pair preserves its Sigma-set, so x runs over class representatives.
  ScanStats stats;
  std::map<Key, Pair> first_pair;
  for (ElemId x : cm.representative) {
    if (f.coord[x] == 0) continue;
    ++stats.first_components;
    for (ElemId y = 0; y < g.order(); ++y) {
      if (!generates_frattini(g, x, y)) continue;
      ++stats.generating_pairs;
      first_pair.try_emplace(pair_key(g, sd, {x, y}), Pair{x, y});
    }
  }
  std::vector<std::pair<Pair, Key>> keys;
  for (const auto& [k, p] : first_pair) keys.push_back({p, k});
  std::sort(keys.begin(), keys.end());
  stats.distinct_sigma = keys.size();

  // Inclusion-exclusion over subsets of each key counts the keys disjoint from it.
  std::map<Key, std::int64_t> containing;
  auto subsets = [](const Key& k) {
    std::vector<Key> out;
    const int n = key_size(k);
    for (int mask = 1; mask < (1 << n); ++mask) {
      Key s{SocleData::kNone, SocleData::kNone, SocleData::kNone};
      int at = 0;
      for (int b = 0; b < n; ++b)
        if (mask & (1 << b)) s[at++] = k[b];
      out.push_back(s);
    }
    return out;
  };
  for (const auto& [p, k] : keys)
    for (const auto& s : subsets(k)) ++containing[s];
  std::optional<Structure> found;
  std::uint64_t disjoint_ordered = 0;
  for (const auto& [p, k] : keys) {
    std::int64_t meeting = 0;
    for (const auto& s : subsets(k)) meeting += (key_size(s) % 2 ? 1 : -1) * containing[s];
    const auto free = static_cast<std::int64_t>(keys.size()) - meeting;
    disjoint_ordered += static_cast<std::uint64_t>(free);
    if (free > 0 && !found) {
      for (const auto& [q, other] : keys)
        if (disjoint(k, other)) {
          found = ordered(p, q);
          break;
        }
    }
  }
  stats.disjoint_key_pairs = disjoint_ordered / 2;

  Verdict v;
  v.stats = stats;
  if (found) {
    v.kind = VerdictKind::Found;
    v.structure = found;
  } else {
    v.kind = VerdictKind::SearchExhaustedNone;
  }
  return v;
}

/// Generators named x and y when present, else the first two PC generators.
std::optional<Pair> named_pair(const Group& g) {
  if (g.rank() < 2) return std::nullopt;
  const auto& pres = g.presentation();
  auto xi = pres.find("x"), yi = pres.find("y");
  if (xi && yi) return Pair{g.gen_id(*xi), g.gen_id(*yi)};
  return Pair{g.gen_id(0), g.gen_id(1)};
}

Verdict heuristic_search(const Group& g, const SearchOptions& opts) {
  ScanStats stats;
  std::vector<Pair> seen;
  const SocleData* sd = is_p_group(g) ? &socle_data(g) : nullptr;
  std::vector<Key> keys;
  std::vector<SigmaSet> sets;

  auto meets_all = [&](Pair cand) -> std::optional<Structure> {
    if (!generates(g, cand.x, cand.y)) return std::nullopt;
    ++stats.generating_pairs;
    if (sd) {
      const Key k = pair_key(g, *sd, cand);
      for (std::size_t t = 0; t < keys.size(); ++t)
        if (disjoint(k, keys[t])) return ordered(seen[t], cand);
      keys.push_back(k);
    } else {
      SigmaSet s = sigma(g, cand.x, cand.y);
      for (std::size_t t = 0; t < sets.size(); ++t) {
        std::vector<ElemId> common;
        std::set_intersection(s.elements.begin(), s.elements.end(), sets[t].elements.begin(), sets[t].elements.end(),
                              std::back_inserter(common));
        if (common.size() == 1) return ordered(seen[t], cand);
      }
      sets.push_back(std::move(s));
    }
    seen.push_back(cand);
    return std::nullopt;
  };
  auto done = [&](const Structure& s) {
    stats.distinct_sigma = sd ? keys.size() : sets.size();
    Verdict v;
    v.kind = VerdictKind::Found;
    v.structure = s;
    v.stats = stats;
    return v;
  };

  // Standard recipes first: (x, y) against (xy^2, xy^3) and (xy^2, xy^4).
  if (auto base = named_pair(g)) {
    const ElemId x = base->x, y = base->y;
    const ElemId xy2 = g.mul(x, g.pow(y, 2));
    for (Pair cand : {*base, Pair{xy2, g.mul(x, g.pow(y, 3))}, Pair{xy2, g.mul(x, g.pow(y, 4))}})
      if (auto s = meets_all(cand)) return done(*s);
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
  for (std::uint64_t step = 0; step < opts.budget; ++step) {
    const ElemId a = pick(rng);
    const ElemId b = pick(rng);
    if (auto s = meets_all({a, b})) return done(*s);
  }
  Verdict v;
  stats.distinct_sigma = sd ? keys.size() : sets.size();
  v.kind = VerdictKind::Inconclusive;
  v.stats = stats;
  v.note = "heuristic budget exhausted; this is not a non-existence claim";
  return v;
}

/// Candidate order-p subgroup classes: central ones first, then by representative.
std::vector<std::uint32_t> universal_candidates(const SocleData& sd) {
  std::vector<std::uint32_t> c(sd.representative.size());
  std::iota(c.begin(), c.end(), 0u);
  std::stable_sort(c.begin(), c.end(), [&](auto a, auto b) {
    if (sd.central[a] != sd.central[b]) return sd.central[a] > sd.central[b];
    return sd.representative[a] < sd.representative[b];
  });
  return c;
}

struct UniversalScan {
  std::vector<std::uint32_t> alive;  // candidate classes met by every pair seen
  std::uint64_t pairs = 0;
};

/// Every generating pair (a, b) with a in the Frattini cosets listed in `rows`.
UniversalScan scan_rows(const Group& g, const SocleData& sd, const std::vector<std::vector<ElemId>>& bucket,
                        std::uint32_t p, const std::vector<std::uint32_t>& rows, std::vector<std::uint32_t> alive,
                        const std::atomic<bool>& abandoned, std::atomic<bool>& emptied) {
  UniversalScan out;
  const auto& sc = sd.subgroup_class;
  for (std::uint32_t ca : rows) {
    for (std::uint32_t cb = 0; cb < p * p; ++cb) {
      const std::uint32_t det = ((ca / p) * (cb % p) + p * p - (ca % p) * (cb / p)) % p;
      if (det == 0) continue;
      for (ElemId a : bucket[ca]) {
        if (abandoned.load(std::memory_order_relaxed)) return out;
        const auto sa = sc[a];
        out.pairs += bucket[cb].size();
        // A single surviving candidate met by a already lies in Sigma(a, b) for every b.
        if (alive.size() == 1 && alive[0] == sa) continue;
        for (ElemId b : bucket[cb]) {
          const auto sb = sc[b];
          const auto sab = sc[g.mul(a, b)];
          std::erase_if(alive, [&](std::uint32_t c) { return c != sa && c != sb && c != sab; });
          if (alive.empty()) {
            emptied.store(true);
            return out;
          }
        }
      }
    }
  }
  out.alive = std::move(alive);
  return out;
}

std::optional<Verdict> universal_element(const Group& g, unsigned jobs) {
  const auto& f = frattini(g);
  const auto& sd = socle_data(g);
  const std::uint32_t p = *g.prime();
  const auto candidates = universal_candidates(sd);
  if (candidates.empty()) return std::nullopt;

  std::vector<std::vector<ElemId>> bucket(p * p);
  for (ElemId a = 0; a < g.order(); ++a) bucket[f.coord[a]].push_back(a);

  jobs = std::max(1u, jobs);
  std::vector<std::vector<std::uint32_t>> rows(jobs);
  for (std::uint32_t ca = 1; ca < p * p; ++ca) rows[ca % jobs].push_back(ca);
  std::atomic<bool> emptied{false};
  std::vector<UniversalScan> parts(jobs);
  if (jobs == 1) {
    parts[0] = scan_rows(g, sd, bucket, p, rows[0], candidates, emptied, emptied);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] { parts[w] = scan_rows(g, sd, bucket, p, rows[w], candidates, emptied, emptied); });
    for (auto& t : pool) t.join();
  }
  if (emptied.load()) return std::nullopt;

  std::vector<std::uint32_t> alive = candidates;
  std::uint64_t pairs = 0;
  for (const auto& part : parts) {
    std::erase_if(alive, [&](std::uint32_t c) {
      return std::find(part.alive.begin(), part.alive.end(), c) == part.alive.end();
    });
    pairs += part.pairs;
  }
  if (alive.empty()) return std::nullopt;

  Certificate cert;
  cert.kind = CertificateKind::UniversalElement;
  cert.element = sd.representative[alive.front()];
  cert.candidates_tried =
      static_cast<std::uint64_t>(std::find(candidates.begin(), candidates.end(), alive.front()) - candidates.begin()) + 1;
  cert.stats.generating_pairs = pairs;
  Verdict v;
  v.kind = VerdictKind::NonBeauvilleCertified;
  v.certificate = cert;
  return v;
}

bool faithful(const Group& g, const Subset& n, ElemId h, ElemId* meet) {
  ElemId a = h;
  for (; a != Group::kIdentity; a = g.mul(a, h))
    if (n.contains(a)) {
      *meet = a;
      return false;
    }
  return true;
}

}  // namespace

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::BeauvilleVerified: return "beauville_verified";
    case VerdictKind::NotAStructure: return "not_a_structure";
    case VerdictKind::NonBeauvilleCertified: return "non_beauville_certified";
    case VerdictKind::SearchExhaustedNone: return "search_exhausted_none";
    case VerdictKind::Found: return "found";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::NotGeneratingPair1: return "not_generating_pair_1";
    case Reason::NotGeneratingPair2: return "not_generating_pair_2";
    case Reason::SigmaOverlap: return "sigma_overlap";
  }
  return "?";
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::NotTwoGenerated: return "not_two_generated";
    case CertificateKind::UniversalElement: return "universal_element";
    case CertificateKind::ExhaustiveScan: return "exhaustive_scan";
  }
  return "?";
}

Verdict verify_structure(const Group& g, Pair p1, Pair p2) {
  Verdict v;
  v.structure = Structure{p1, p2};
  if (!generates(g, p1.x, p1.y)) v.reasons.push_back(Reason::NotGeneratingPair1);
  if (!generates(g, p2.x, p2.y)) v.reasons.push_back(Reason::NotGeneratingPair2);
  const SigmaSet s1 = sigma(g, p1.x, p1.y);
  const SigmaSet s2 = sigma(g, p2.x, p2.y);
  std::vector<ElemId> common;
  std::set_intersection(s1.elements.begin(), s1.elements.end(), s2.elements.begin(), s2.elements.end(),
                        std::back_inserter(common));
  if (common.size() > 1) {
    v.reasons.push_back(Reason::SigmaOverlap);
    v.witness = common[1];  // common[0] is e
  }
  v.kind = v.reasons.empty() ? VerdictKind::BeauvilleVerified : VerdictKind::NotAStructure;
  return v;
}

Verdict search_structure(const Group& g, const SearchOptions& opts) {
  return opts.mode == SearchOptions::Mode::Complete ? complete_search(g, opts) : heuristic_search(g, opts);
}

Verdict certify_non_beauville(const Group& g, const CertifyOptions& opts) {
  if (!is_p_group(g)) throw Error(ErrorKind::Inconclusive, "certification needs a p-group");
  const auto& f = frattini(g);
  if (f.rank != 2) {
    Verdict v;
    v.kind = VerdictKind::NonBeauvilleCertified;
    Certificate c;
    c.kind = CertificateKind::NotTwoGenerated;
    c.frattini_rank = f.rank;
    v.certificate = c;
    return v;
  }
  if (auto v = universal_element(g, opts.jobs)) return *v;
  if (g.order() <= opts.search_bound) {
    SearchOptions so;
    so.bound = opts.search_bound;
    Verdict s = complete_search(g, so);
    if (s.kind == VerdictKind::Found) return s;
    Verdict v;
    v.kind = VerdictKind::NonBeauvilleCertified;
    Certificate c;
    c.kind = CertificateKind::ExhaustiveScan;
    c.stats = *s.stats;
    c.all_overlap = true;
    v.certificate = c;
    return v;
  }
  throw Error(ErrorKind::Inconclusive, "no universal element and order " + std::to_string(g.order()) +
                                           " exceeds the complete-search bound " + std::to_string(opts.search_bound));
}

Verdict lift_structure(const Group& g, std::span<const ElemId> gens, Pair p1, Pair p2) {
  Quotient q = normal_quotient(g, gens);
  std::uint32_t which = 0;
  std::string failure;
  const Pair pairs[] = {p1, p2};
  for (std::uint32_t t = 0; t < 2 && !which; ++t) {
    const Pair p = pairs[t];
    const ElemId triple[] = {p.x, p.y, g.mul(p.x, p.y)};
    const char* names[] = {"x", "y", "xy"};
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      ElemId meet = 0;
      if (!faithful(g, q.kernel, triple[k], &meet)) {
        ok = false;
        if (failure.empty())
          failure = std::string(names[k]) + " of pair " + std::to_string(t + 1) + " = " +
                    to_string(g.element(triple[k])) + " has " + to_string(g.element(meet)) + " in N";
      }
    }
    if (ok) which = t + 1;
  }
  if (!which) throw Error(ErrorKind::NotFaithful, failure);

  const Pair i1{q.project(p1.x), q.project(p1.y)}, i2{q.project(p2.x), q.project(p2.y)};
  Verdict image = verify_structure(q.group, i1, i2);
  LiftRecord rec;
  rec.kernel_order = q.kernel.size();
  rec.quotient_order = q.group.order();
  rec.faithful_pair = which;
  rec.image = {i1, i2};
  if (image.kind != VerdictKind::BeauvilleVerified) {
    Verdict v;
    v.kind = VerdictKind::NotAStructure;
    v.structure = Structure{p1, p2};
    v.reasons = image.reasons;
    v.lift = rec;
    v.note = "images do not form a Beauville structure in G/N";
    return v;
  }
  Verdict direct = verify_structure(g, p1, p2);
  rec.direct_agrees = direct.kind == VerdictKind::BeauvilleVerified;
  direct.lift = rec;
  if (!rec.direct_agrees) direct.note = "lift disagrees with direct verification";
  return direct;
}

ProductResult product_structure(const Group& g1, const Structure& s1, const Group& g2, const Structure& s2) {
  if (g1.order() == 1 || g2.order() == 1) throw Error(ErrorKind::BadParameters, "trivial factor has no generating pair");
  if (verify_structure(g1, s1.first, s1.second).kind != VerdictKind::BeauvilleVerified)
    throw Error(ErrorKind::BadParameters, "first structure does not verify");
  if (verify_structure(g2, s2.first, s2.second).kind != VerdictKind::BeauvilleVerified)
    throw Error(ErrorKind::BadParameters, "second structure does not verify");
  auto check = [&](ElemId a, ElemId b, const char* what) {
    const auto oa = g1.order_of(a), ob = g2.order_of(b);
    if (std::gcd(oa, ob) != 1)
      throw Error(ErrorKind::CoprimalityViolation,
                  std::string(what) + ": orders " + std::to_string(oa) + " and " + std::to_string(ob) + " share a factor");
  };
  check(s1.first.x, s2.first.x, "x1");
  check(s1.first.y, s2.first.y, "y1");
  check(s1.second.x, s2.second.x, "x2");
  check(s1.second.y, s2.second.y, "y2");
  Group prod = direct_product(g1, g2);
  auto pair_up = [&](ElemId a, ElemId b) { return prod.mul(embed_left(prod, g1, a), embed_right(prod, g1, g2, b)); };
  Structure s{{pair_up(s1.first.x, s2.first.x), pair_up(s1.first.y, s2.first.y)},
              {pair_up(s1.second.x, s2.second.x), pair_up(s1.second.y, s2.second.y)}};
  return {std::move(prod), s};
}

}  // namespace bvl
