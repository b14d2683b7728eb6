#include "bvl/beauville/beauville.hpp"

#include "bvl/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace bvl {

namespace {

struct Builder {
  std::vector<std::uint8_t> seen;
  std::vector<SigmaWitness> found;
  explicit Builder(std::size_t n) : seen(n, 0), found(n) {}

  void add(ElemId a, SigmaWitness w) {
    if (seen[a]) return;
    seen[a] = 1;
    found[a] = w;
  }
  SigmaSet finish(Pair pair) {
    SigmaSet s;
    s.pair = pair;
    for (std::size_t a = 0; a < seen.size(); ++a)
      if (seen[a]) {
        s.elements.push_back(static_cast<ElemId>(a));
        s.witness.push_back(found[a]);
      }
    return s;
  }
};

void check_brute_bound(const Group& g) {
  if (g.order() > brute_bound())
    throw Error(ErrorKind::GroupTooLargeForOracle,
                "order " + std::to_string(g.order()) + " exceeds brute-force bound " + std::to_string(brute_bound()));
}

}  // namespace

const char* to_string(SigmaBase b) {
  switch (b) {
    case SigmaBase::X: return "x";
    case SigmaBase::Y: return "y";
    case SigmaBase::XY: return "xy";
  }
  return "?";
}

bool SigmaSet::contains(ElemId a) const { return std::binary_search(elements.begin(), elements.end(), a); }

const SigmaWitness& SigmaSet::witness_of(ElemId a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) throw Error(ErrorKind::IndexOutOfRange, "element not in Sigma-set");
  return witness[static_cast<std::size_t>(it - elements.begin())];
}

std::uint64_t brute_bound() {
  if (const char* env = std::getenv("BVL_BRUTE_BOUND")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
  }
  return 2000;
}

SigmaSet sigma(const Group& g, ElemId x, ElemId y) {
  const auto& cm = class_map(g);
  Builder b(g.order());
  const ElemId bases[] = {x, y, g.mul(x, y)};
  const SigmaBase kinds[] = {SigmaBase::X, SigmaBase::Y, SigmaBase::XY};
  // Powers of h repeat with period o(h), so i in [1, o(h)] covers i in [1, |G|].
  for (int t = 0; t < 3; ++t) {
    ElemId a = Group::kIdentity;
    const auto o = g.order_of(bases[t]);
    for (std::uint64_t i = 1; i <= o; ++i) {
      a = g.mul(a, bases[t]);
      if (b.seen[a]) continue;
      const auto cls = cm.class_of[a];
      const ElemId back = g.inv(cm.conjugator[a]);  // a^back is the class representative
      for (ElemId m : cm.members[cls]) b.add(m, {kinds[t], i, g.mul(back, cm.conjugator[m])});
    }
  }
  return b.finish({x, y});
}

SigmaSet sigma_brute(const Group& g, ElemId x, ElemId y) {
  check_brute_bound(g);
  Builder b(g.order());
  const ElemId bases[] = {x, y, g.mul(x, y)};
  const SigmaBase kinds[] = {SigmaBase::X, SigmaBase::Y, SigmaBase::XY};
  std::vector<std::uint8_t> done(g.order(), 0);
  for (int t = 0; t < 3; ++t) {
    ElemId a = Group::kIdentity;
    for (std::uint64_t i = 1; i <= g.order(); ++i) {
      a = g.mul(a, bases[t]);
      if (done[a]) continue;
      done[a] = 1;
      for (ElemId c = 0; c < g.order(); ++c) b.add(g.conj(a, c), {kinds[t], i, c});
    }
  }
  return b.finish({x, y});
}

std::vector<ElemId> brute_power_conjugates(const Group& g, ElemId h) {
  check_brute_bound(g);
  std::vector<std::uint8_t> in(g.order(), 0), done(g.order(), 0);
  ElemId a = Group::kIdentity;
  for (std::uint64_t i = 1; i <= g.order(); ++i) {
    a = g.mul(a, h);
    if (done[a]) continue;
    done[a] = 1;
    for (ElemId c = 0; c < g.order(); ++c) in[g.conj(a, c)] = 1;
  }
  std::vector<ElemId> out;
  for (ElemId c = 0; c < g.order(); ++c)
    if (in[c]) out.push_back(c);
  return out;
}

const SocleData& socle_data(const Group& g) {
  if (g.rank() > 0 && !g.prime()) throw Error(ErrorKind::NotPGroup, "socle classes need a p-group");
  return g.memo<SocleData>([&g] {
    SocleData d;
    d.subgroup_class.assign(g.order(), SocleData::kNone);
    if (g.rank() == 0) return d;
    const std::uint32_t p = *g.prime();
    const auto& cm = class_map(g);
    const auto& orders = g.orders();
    // <s> and <s'> are conjugate iff s' is conjugate to a power of s.
    std::map<std::uint32_t, std::uint32_t> by_key;
    for (ElemId s = 1; s < g.order(); ++s) {
      if (orders[s] != p) continue;
      std::uint32_t key = cm.class_of[s];
      ElemId a = s;
      for (std::uint32_t k = 2; k < p; ++k) {
        a = g.mul(a, s);
        key = std::min(key, cm.class_of[a]);
      }
      auto [it, fresh] = by_key.try_emplace(key, static_cast<std::uint32_t>(d.representative.size()));
      if (fresh) {
        d.representative.push_back(s);
        d.central.push_back(is_central_element(g, s) ? 1 : 0);
      }
      d.subgroup_class[s] = it->second;
    }
    for (ElemId a = 1; a < g.order(); ++a)
      if (orders[a] != p) d.subgroup_class[a] = d.subgroup_class[g.pow(a, static_cast<std::int64_t>(orders[a] / p))];
    return d;
  });
}

}  // namespace bvl
