#include "bvl/analysis/analysis.hpp"

#include "bvl/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bvl {

namespace {

bool all_central(const Group& g, std::span<const ElemId> ids) {
  return std::all_of(ids.begin(), ids.end(), [&](ElemId a) { return is_central_element(g, a); });
}

/// Labels the cosets aN of a normal subgroup N, numbered by least element.
std::vector<std::uint32_t> coset_labels(const Group& g, const Subset& n, std::uint32_t* count) {
  std::vector<std::uint32_t> label(g.order(), UINT32_MAX);
  std::uint32_t next = 0;
  for (ElemId a = 0; a < g.order(); ++a) {
    if (label[a] != UINT32_MAX) continue;
    for (ElemId f : n.ids()) label[g.mul(a, f)] = next;
    ++next;
  }
  if (count) *count = next;
  return label;
}

struct DerivedSubgroup {
  Subset value;
};

}  // namespace

bool Subset::contains(ElemId a) const { return std::binary_search(ids_.begin(), ids_.end(), a); }

std::vector<Element> Subset::elements(const Group& g) const {
  std::vector<Element> out;
  out.reserve(ids_.size());
  for (ElemId a : ids_) out.push_back(g.element(a));
  return out;
}

Subset enumerate(const Group& g) {
  std::vector<ElemId> all(g.order());
  std::iota(all.begin(), all.end(), ElemId{0});
  return Subset(std::move(all), true, g.order() == center(g).size());
}

bool is_central_element(const Group& g, ElemId a) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.conj(a, g.gen_id(i)) != a) return false;
  return true;
}

Subset closure(const Group& g, std::span<const ElemId> seeds) {
  std::vector<ElemId> gens;
  for (ElemId s : seeds)
    if (s != Group::kIdentity) gens.push_back(s);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<ElemId> queue{Group::kIdentity};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ElemId s : gens) {
      const ElemId b = g.mul(queue[head], s);
      if (!seen[b]) {
        seen[b] = 1;
        queue.push_back(b);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subset(std::move(queue), true, all_central(g, gens));
}

Subset closure(const Group& g, std::span<const Element> seeds) {
  std::vector<ElemId> ids;
  for (const auto& e : seeds) ids.push_back(g.id_of(e));
  return closure(g, ids);
}

Subset normal_closure(const Group& g, std::span<const ElemId> seeds) {
  std::vector<ElemId> gens(seeds.begin(), seeds.end());
  for (;;) {
    Subset h = closure(g, gens);
    const std::size_t before = gens.size();
    for (std::size_t k = 0; k < before; ++k)
      for (std::size_t i = 0; i < g.rank(); ++i) {
        const ElemId c = g.conj(gens[k], g.gen_id(i));
        if (!h.contains(c) && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
      }
    if (gens.size() == before) return h;
  }
}

bool is_normal(const Group& g, const Subset& h) {
  for (ElemId a : h.ids())
    for (std::size_t i = 0; i < g.rank(); ++i)
      if (!h.contains(g.conj(a, g.gen_id(i)))) return false;
  return true;
}

const ClassMap& class_map(const Group& g) {
  return g.memo<ClassMap>([&g] {
    ClassMap m;
    const auto N = g.order();
    m.class_of.assign(N, UINT32_MAX);
    m.conjugator.assign(N, Group::kIdentity);
    for (ElemId a = 0; a < N; ++a) {
      if (m.class_of[a] != UINT32_MAX) continue;
      const auto cls = static_cast<std::uint32_t>(m.representative.size());
      std::vector<ElemId> orbit{a};
      m.class_of[a] = cls;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        const ElemId b = orbit[head];
        for (std::size_t i = 0; i < g.rank(); ++i) {
          const ElemId c = g.conj(b, g.gen_id(i));
          if (m.class_of[c] == UINT32_MAX) {
            m.class_of[c] = cls;
            m.conjugator[c] = g.mul(m.conjugator[b], g.gen_id(i));
            orbit.push_back(c);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      m.representative.push_back(a);
      m.members.push_back(std::move(orbit));
    }
    return m;
  });
}

Subset conjugacy_class(const Group& g, ElemId a) {
  const auto& m = class_map(g);
  const auto& members = m.members[m.class_of[a]];
  return Subset(members, members.size() == 1 && a == Group::kIdentity, members.size() == 1);
}

Subset center(const Group& g) {
  const auto& m = class_map(g);
  std::vector<ElemId> ids;
  for (const auto& cls : m.members)
    if (cls.size() == 1) ids.push_back(cls.front());
  std::sort(ids.begin(), ids.end());
  return Subset(std::move(ids), true, true);
}

Subset derived_subgroup(const Group& g) {
  return g
      .memo<DerivedSubgroup>([&g] {
        std::vector<ElemId> seeds;
        for (std::size_t j = 0; j < g.rank(); ++j)
          for (std::size_t i = 0; i < j; ++i) seeds.push_back(g.comm(g.gen_id(j), g.gen_id(i)));
        return DerivedSubgroup{normal_closure(g, seeds)};
      })
      .value;
}

const FrattiniData& frattini(const Group& g) {
  const auto p = g.prime();
  if (!p && g.rank() > 0) throw Error(ErrorKind::NotPGroup, "Frattini data needs a p-group");
  return g.memo<FrattiniData>([&g, p] {
    FrattiniData f;
    std::vector<ElemId> seeds;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      seeds.push_back(g.pow(g.gen_id(j), *p));
      for (std::size_t i = 0; i < j; ++i) seeds.push_back(g.comm(g.gen_id(j), g.gen_id(i)));
    }
    f.subgroup = normal_closure(g, seeds);
    std::uint32_t cosets = 0;
    f.coset_of = coset_labels(g, f.subgroup, &cosets);
    for (std::uint32_t c = cosets; c > 1; c /= *p) ++f.rank;
    if (f.rank != 2) return f;

    const std::uint32_t q = *p;
    const auto& lab = f.coset_of;
    ElemId b1 = 0, b2 = 0;
    for (ElemId a = 0; a < g.order(); ++a)
      if (lab[a] != lab[0]) {
        b1 = a;
        break;
      }
    std::set<std::uint32_t> line;
    for (std::uint32_t k = 0; k < q; ++k) line.insert(lab[g.pow(b1, k)]);
    for (ElemId a = 0; a < g.order(); ++a)
      if (!line.count(lab[a])) {
        b2 = a;
        break;
      }
    std::vector<std::uint16_t> coset_coord(cosets, 0);
    for (std::uint32_t i = 0; i < q; ++i)
      for (std::uint32_t j = 0; j < q; ++j)
        coset_coord[lab[g.mul(g.pow(b1, i), g.pow(b2, j))]] = static_cast<std::uint16_t>(i * q + j);
    f.coord.resize(g.order());
    for (ElemId a = 0; a < g.order(); ++a) f.coord[a] = coset_coord[lab[a]];
    f.basis = {b1, b2};
    return f;
  });
}

bool generates_frattini(const Group& g, ElemId x, ElemId y) {
  const auto& f = frattini(g);
  if (f.rank != 2)
    throw Error(ErrorKind::NotTwoGeneratedGroup, "G/Phi(G) has rank " + std::to_string(f.rank));
  const std::uint32_t p = *g.prime();
  const std::uint32_t cx = f.coord[x], cy = f.coord[y];
  const std::uint32_t det = ((cx / p) * (cy % p) + p * p - (cx % p) * (cy / p)) % p;
  return det != 0;
}

bool generates_by_closure(const Group& g, ElemId x, ElemId y) {
  const ElemId seeds[] = {x, y};
  return closure(g, seeds).size() == g.order();
}

bool generates(const Group& g, ElemId x, ElemId y) {
  if (g.prime() && frattini(g).rank == 2) return generates_frattini(g, x, y);
  return generates_by_closure(g, x, y);
}

ElemId socle_generator(const Group& g, ElemId a) {
  if (a == Group::kIdentity) throw Error(ErrorKind::IdentityInput, "the identity has no socle generator");
  const auto p = g.prime();
  if (!p) throw Error(ErrorKind::NotPGroup, "socle generator needs a p-group");
  return g.pow(a, static_cast<std::int64_t>(g.order_of(a) / *p));
}

Quotient normal_quotient(const Group& g, std::span<const ElemId> gens) {
  Subset n = closure(g, gens);
  if (!is_normal(g, n)) throw Error(ErrorKind::NonNormalSubgroup, "generated subgroup is not normal");
  const std::size_t rank = g.rank();
  std::uint32_t cosets = 0;
  const auto label = coset_labels(g, n, &cosets);

  // |G_i N| with G_i = <g_i, ..., g_{n-1}>; g_i survives iff G_i N != G_{i+1} N.
  std::vector<std::uint64_t> meet(rank + 1, 0);
  for (ElemId f : n.ids()) {
    auto d = g.digits(f);
    std::size_t lead = 0;
    while (lead < rank && d[lead] == 0) ++lead;
    for (std::size_t i = 0; i <= lead; ++i) ++meet[i];
  }
  std::vector<std::uint64_t> tail_order(rank + 1, 1);
  for (std::size_t i = rank; i-- > 0;) tail_order[i] = tail_order[i + 1] * g.relative_order(i);
  std::vector<std::size_t> surviving;
  for (std::size_t i = 0; i < rank; ++i) {
    const auto here = tail_order[i] * n.size() / meet[i];
    const auto below = tail_order[i + 1] * n.size() / meet[i + 1];
    if (here != below) surviving.push_back(i);
  }

  // Normal forms supported on surviving generators are coset representatives.
  std::vector<std::vector<Exponent>> coset_vec(cosets);
  std::vector<std::uint8_t> filled(cosets, 0);
  std::vector<std::uint8_t> keep(rank, 0);
  for (auto s : surviving) keep[s] = 1;
  std::uint32_t hit = 0;
  for (ElemId a = 0; a < g.order(); ++a) {
    auto d = g.digits(a);
    bool ok = true;
    for (std::size_t i = 0; i < rank && ok; ++i) ok = keep[i] || d[i] == 0;
    if (!ok) continue;
    std::vector<Exponent> v;
    for (auto s : surviving) v.push_back(d[s]);
    if (filled[label[a]]) throw Error(ErrorKind::InconsistentPresentation, "induced quotient sequence is not polycyclic");
    filled[label[a]] = 1;
    coset_vec[label[a]] = std::move(v);
    ++hit;
  }
  if (hit != cosets) throw Error(ErrorKind::InconsistentPresentation, "induced quotient sequence misses cosets");

  const auto& gp = g.presentation();
  PcPresentation qp;
  for (auto s : surviving) {
    qp.names.push_back(gp.names[s]);
    qp.relative_orders.push_back(gp.relative_orders[s]);
  }
  qp.power_tails.assign(surviving.size(), Word{});
  auto to_word = [&](ElemId a) {
    Word w;
    const auto& v = coset_vec[label[a]];
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t]) w.push_back({t, static_cast<std::int64_t>(v[t])});
    return w;
  };
  for (std::size_t s = 0; s < surviving.size(); ++s) {
    const ElemId gs = g.gen_id(surviving[s]);
    qp.power_tails[s] = to_word(g.pow(gs, gp.relative_orders[surviving[s]]));
    for (std::size_t t = s + 1; t < surviving.size(); ++t)
      qp.set_comm(t, s, to_word(g.comm(g.gen_id(surviving[t]), gs)));
  }
  Group quotient = Group::build(std::move(qp));
  std::vector<ElemId> coset_id(cosets);
  for (std::uint32_t c = 0; c < cosets; ++c) coset_id[c] = quotient.id_of(Element(coset_vec[c]));
  std::vector<ElemId> projection(g.order());
  for (ElemId a = 0; a < g.order(); ++a) projection[a] = coset_id[label[a]];
  return Quotient{std::move(quotient), std::move(n), std::move(surviving), std::move(projection)};
}

Quotient central_quotient(const Group& g, std::span<const ElemId> central_gens) {
  for (ElemId a : central_gens)
    if (!is_central_element(g, a))
      throw Error(ErrorKind::NonCentralGenerator, to_string(g.element(a)) + " is not central");
  return normal_quotient(g, central_gens);
}

Group direct_product(const Group& g1, const Group& g2) {
  const auto& a = g1.presentation();
  const auto& b = g2.presentation();
  PcPresentation pres = a;
  const std::size_t shift = a.rank();
  for (std::size_t i = 0; i < b.rank(); ++i) {
    std::string name = b.names[i];
    while (pres.find(name) || b.find(name).value_or(i) != i) name += '\'';
    pres.names.push_back(name);
    pres.relative_orders.push_back(b.relative_orders[i]);
    Word tail = b.power_tails[i];
    for (auto& l : tail) l.gen += shift;
    pres.power_tails.push_back(std::move(tail));
  }
  for (const auto& [key, tail] : b.comm_tails) {
    Word t = tail;
    for (auto& l : t) l.gen += shift;
    pres.comm_tails[{key.first + shift, key.second + shift}] = std::move(t);
  }
  return Group::build(std::move(pres));
}

ElemId embed_left(const Group& product, const Group& g1, ElemId a) {
  return static_cast<ElemId>(static_cast<std::uint64_t>(a) * (product.order() / g1.order()));
}

ElemId embed_right(const Group& product, const Group& g1, const Group& g2, ElemId b) {
  (void)product;
  (void)g1;
  (void)g2;
  return b;
}

std::vector<std::uint64_t> abelian_invariants(const Group& g) {
  const Subset d = derived_subgroup(g);
  std::uint32_t cosets = 0;
  const auto label = coset_labels(g, d, &cosets);
  std::vector<std::uint64_t> coset_order(cosets, 0);
  for (ElemId a = 0; a < g.order(); ++a) {
    if (coset_order[label[a]]) continue;
    std::uint64_t m = 1;
    for (ElemId x = a; !d.contains(x); x = g.mul(x, a)) ++m;
    coset_order[label[a]] = m;
  }
  std::vector<std::uint64_t> out;
  std::uint64_t rest = cosets;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    if (rest % q) continue;
    while (rest % q == 0) rest /= q;
    // c[k] = #cosets whose order divides q^k
    std::vector<std::uint64_t> c{1};
    for (std::uint64_t qk = q;; qk *= q) {
      std::uint64_t count = 0;
      for (auto o : coset_order)
        if (qk % o == 0) ++count;
      c.push_back(count);
      if (count == c[c.size() - 2]) break;
    }
    // number of cyclic factors of order >= q^k is log_q(c[k] / c[k-1])
    std::vector<std::uint32_t> at_least;
    for (std::size_t k = 1; k < c.size(); ++k) {
      std::uint32_t m = 0;
      for (std::uint64_t r = c[k] / c[k - 1]; r > 1; r /= q) ++m;
      at_least.push_back(m);
    }
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      qk *= q;
      const std::uint32_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (std::uint32_t t = next; t < at_least[k]; ++t) out.push_back(qk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Separates groups whose power maps differ only by a quadratic residue.
void commutator_power_profile(const Group& g, Fingerprint& fp) {
  const auto& cm = class_map(g);
  const auto p = *g.prime();
  std::vector<ElemId> pw(g.order());
  for (ElemId a = 0; a < g.order(); ++a) pw[a] = g.pow(a, p);
  for (std::size_t c = 0; c < cm.representative.size(); ++c) {
    const ElemId a = cm.representative[c];
    std::uint64_t hits = 0;
    for (ElemId h = 0; h < g.order(); ++h)
      if (g.comm(g.comm(a, h), h) == pw[a]) ++hits;
    fp.commutator_power_profile[{g.orders()[a], hits}] += cm.members[c].size();
  }
}

void maximal_subgroup_graph(const Group& g, Fingerprint& fp) {
  const auto& f = frattini(g);
  if (f.rank != 2) return;
  const std::uint32_t p = *g.prime();
  // Maximal subgroups <-> lines of F_p^2; line p is the one through (0, 1).
  std::vector<std::uint32_t> line_of(p * p, 0);
  for (std::uint32_t c = 1; c < p * p; ++c) {
    const std::uint32_t a = c / p, b = c % p;
    if (a == 0) {
      line_of[c] = p;
      continue;
    }
    std::uint32_t inv = 1;
    while (inv * a % p != 1) ++inv;
    line_of[c] = b * inv % p;
  }
  const Subset d = derived_subgroup(g);
  std::vector<std::vector<std::uint8_t>> powers(p + 1, std::vector<std::uint8_t>(g.order(), 0));
  std::vector<std::vector<std::uint8_t>> comms = powers;
  for (ElemId a = 0; a < g.order(); ++a) {
    if (f.coord[a] == 0) continue;
    const auto L = line_of[f.coord[a]];
    powers[L][g.pow(a, p)] = 1;
    for (ElemId x : d.ids()) comms[L][g.comm(a, x)] = 1;
  }
  std::vector<std::vector<std::uint32_t>> adj(p + 1);
  for (std::uint32_t A = 0; A <= p; ++A)
    for (std::uint32_t B = 0; B <= p; ++B)
      for (ElemId q = 1; q < g.order(); ++q)
        if (powers[A][q] && comms[B][q]) {
          adj[A].push_back(B);
          break;
        }
  std::vector<std::uint32_t> indeg(p + 1, 0);
  for (const auto& out : adj)
    for (auto B : out) ++indeg[B];
  for (std::uint32_t A = 0; A <= p; ++A) {
    const auto loop = static_cast<std::uint32_t>(std::count(adj[A].begin(), adj[A].end(), A));
    std::uint32_t cycle = 0, cur = A;
    for (std::uint32_t step = 1; step <= p + 1 && adj[cur].size() == 1; ++step) {
      cur = adj[cur][0];
      if (cur == A) {
        cycle = step;
        break;
      }
    }
    fp.maximal_graph.push_back({loop, static_cast<std::uint32_t>(adj[A].size()), indeg[A], cycle});
  }
  std::sort(fp.maximal_graph.begin(), fp.maximal_graph.end());
}

}  // namespace

Fingerprint fingerprint(const Group& g) {
  Fingerprint fp;
  fp.order = g.order();
  const auto& orders = g.orders();
  for (auto o : orders) ++fp.order_spectrum[o];
  for (const auto& cls : class_map(g).members) ++fp.class_sizes[cls.size()];
  fp.center_order = center(g).size();
  fp.derived_order = derived_subgroup(g).size();
  fp.abelian_invariants = abelian_invariants(g);
  std::uint64_t p = 0;
  for (std::uint64_t q = 2; g.order() > 1 && !p; ++q)
    if (g.order() % q == 0) p = q;
  if (p)
    for (ElemId a = 0; a < g.order(); ++a) ++fp.power_profile[{orders[a], orders[g.pow(a, p)]}];
  if (g.prime()) {
    commutator_power_profile(g, fp);
    maximal_subgroup_graph(g, fp);
  }
  return fp;
}

std::uint32_t smallest_nonresidue(std::uint32_t p) {
  if (p == 2) throw Error(ErrorKind::EvenPrime, "no quadratic non-residue mod 2");
  if (!is_prime(p)) throw Error(ErrorKind::BadParameters, std::to_string(p) + " is not prime");
  std::vector<std::uint8_t> square(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) square[x * x % p] = 1;
  for (std::uint32_t v = 2; v < p; ++v)
    if (!square[v]) return v;
  return 0;
}

}  // namespace bvl
