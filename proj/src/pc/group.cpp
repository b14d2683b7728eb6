#include "bvl/pc/group.hpp"

#include "bvl/error.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

namespace bvl {

struct Group::Impl {
  PcPresentation pres;
  std::unique_ptr<Collector> collector;
  std::size_t n = 0;
  std::uint64_t order = 1;
  std::vector<std::uint32_t> radix;
  std::vector<std::uint64_t> place;      // place[i] = prod_{j>i} radix[j]
  std::vector<std::size_t> block_start;  // block of a * g_i^k is block_start[i] + k - 1
  std::vector<std::uint8_t> digits;      // order * n
  std::vector<ElemId> rmul;              // blocks of length order
  std::vector<ElemId> inverse;
  std::vector<ElemId> gens;

  std::recursive_mutex cache_mutex;
  std::unordered_map<std::type_index, std::shared_ptr<const void>> cache;

  ElemId encode(std::span<const Exponent> e) const {
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < n; ++i) id += e[i] * place[i];
    return static_cast<ElemId>(id);
  }
  ElemId rm(ElemId a, std::size_t i, std::uint32_t k) const {
    return rmul[(block_start[i] + k - 1) * order + a];
  }
  ElemId mul(ElemId a, ElemId b) const {
    const std::uint8_t* d = digits.data() + static_cast<std::size_t>(b) * n;
    for (std::size_t i = 0; i < n; ++i)
      if (d[i]) a = rm(a, i, d[i]);
    return a;
  }
};

namespace {

std::string describe(const PcPresentation& pres, const std::string& rule) {
  return "relation " + rule + " fails in the collected action on " + std::to_string(pres.rank()) + " generators";
}

}  // namespace

Group::Group(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

Group Group::build(PcPresentation pres, const BuildOptions& options) {
  auto impl = std::make_shared<Impl>();
  impl->collector = std::make_unique<Collector>(pres, options.step_budget);
  impl->pres = std::move(pres);
  Impl& g = *impl;
  g.n = g.pres.rank();
  g.radix = g.pres.relative_orders;
  for (auto r : g.radix) {
    g.order *= r;
    if (g.order > options.max_order)
      throw Error(ErrorKind::BoundExceeded, "group order exceeds build bound " + std::to_string(options.max_order));
  }
  g.place.assign(g.n, 1);
  for (std::size_t i = g.n; i-- > 1;) g.place[i - 1] = g.place[i] * g.radix[i];
  g.block_start.assign(g.n, 0);
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    g.block_start[i] = blocks;
    blocks += g.radix[i] - 1;
  }

  const std::size_t N = g.order;
  g.digits.resize(N * g.n);
  for (std::size_t a = 0; a < N; ++a) {
    std::uint64_t rest = a;
    for (std::size_t i = 0; i < g.n; ++i) {
      g.digits[a * g.n + i] = static_cast<std::uint8_t>(rest / g.place[i]);
      rest %= g.place[i];
    }
  }

  g.rmul.assign(blocks * N, 0);
  std::vector<Exponent> acc(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    ElemId* base = &g.rmul[g.block_start[i] * N];
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t t = 0; t < g.n; ++t) acc[t] = g.digits[a * g.n + t];
      g.collector->multiply_generator(acc, i);
      base[a] = g.encode(acc);
    }
    for (std::uint32_t k = 2; k < g.radix[i]; ++k) {
      ElemId* prev = &g.rmul[(g.block_start[i] + k - 2) * N];
      ElemId* cur = &g.rmul[(g.block_start[i] + k - 1) * N];
      for (std::size_t a = 0; a < N; ++a) cur[a] = base[prev[a]];
    }
  }

  // Consistency: each right action is a permutation ...
  std::vector<std::uint8_t> seen(N);
  for (std::size_t i = 0; i < g.n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    const ElemId* base = &g.rmul[g.block_start[i] * N];
    for (std::size_t a = 0; a < N; ++a) {
      if (seen[base[a]])
        throw Error(ErrorKind::InconsistentPresentation,
                    "right multiplication by " + g.pres.names[i] + " is not injective on normal forms");
      seen[base[a]] = 1;
    }
  }
  // ... satisfying every defining relation ...
  for (std::size_t i = 0; i < g.n; ++i) {
    const ElemId tail = g.encode(g.collector->power_tail(i));
    const ElemId* base = &g.rmul[g.block_start[i] * N];
    for (std::size_t a = 0; a < N; ++a) {
      const ElemId lhs = g.radix[i] == 2 ? base[base[a]] : base[g.rm(static_cast<ElemId>(a), i, g.radix[i] - 1)];
      if (lhs != g.mul(static_cast<ElemId>(a), tail))
        throw Error(ErrorKind::InconsistentPresentation, describe(g.pres, g.pres.names[i] + "^p"));
    }
    for (std::size_t j = i + 1; j < g.n; ++j) {
      const ElemId c = g.encode(g.collector->comm_tail(j, i));
      for (std::size_t a = 0; a < N; ++a) {
        const ElemId lhs = g.rm(g.rm(static_cast<ElemId>(a), j, 1), i, 1);
        const ElemId rhs = g.mul(g.rm(g.rm(static_cast<ElemId>(a), i, 1), j, 1), c);
        if (lhs != rhs)
          throw Error(ErrorKind::InconsistentPresentation,
                      describe(g.pres, "[" + g.pres.names[j] + "," + g.pres.names[i] + "]"));
      }
    }
  }
  // ... and acting transitively.
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<ElemId> queue{kIdentity};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < g.n; ++i) {
      const ElemId b = g.rm(queue[head], i, 1);
      if (!seen[b]) {
        seen[b] = 1;
        queue.push_back(b);
      }
    }
  }
  if (queue.size() != N)
    throw Error(ErrorKind::InconsistentPresentation, "closure reaches " + std::to_string(queue.size()) +
                                                         " normal forms, expected " + std::to_string(N));

  g.gens.resize(g.n);
  for (std::size_t i = 0; i < g.n; ++i) g.gens[i] = static_cast<ElemId>(g.place[i]);

  // (g_0^e_0 ... g_{n-1}^e_{n-1})^-1 = g_{n-1}^-e_{n-1} ... g_0^-e_0
  std::vector<ElemId> inv_gen(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    ElemId x = g.gens[i], prev = kIdentity;
    while (x != kIdentity) {
      prev = x;
      x = g.mul(x, g.gens[i]);
    }
    inv_gen[i] = prev;
  }
  g.inverse.assign(N, 0);
  for (std::size_t a = 0; a < N; ++a) {
    ElemId r = kIdentity;
    for (std::size_t i = g.n; i-- > 0;)
      for (std::uint8_t k = 0; k < g.digits[a * g.n + i]; ++k) r = g.mul(r, inv_gen[i]);
    g.inverse[a] = r;
  }
  return Group(std::move(impl));
}

const PcPresentation& Group::presentation() const { return impl_->pres; }
const Collector& Group::collector() const { return *impl_->collector; }
std::uint64_t Group::order() const { return impl_->order; }
std::size_t Group::rank() const { return impl_->n; }
std::optional<std::uint32_t> Group::prime() const { return impl_->pres.prime(); }
std::uint32_t Group::relative_order(std::size_t i) const { return impl_->radix.at(i); }

void Group::check_element(const Element& e) const {
  if (e.rank() != impl_->n) throw Error(ErrorKind::IndexOutOfRange, "element rank differs from group rank");
  for (std::size_t i = 0; i < impl_->n; ++i)
    if (e[i] >= impl_->radix[i]) throw Error(ErrorKind::IndexOutOfRange, "exponent out of range in " + to_string(e));
}

Element Group::identity() const { return Element::identity(impl_->n); }

Element Group::generator(std::size_t i) const {
  if (i >= impl_->n) throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i));
  return element(impl_->gens[i]);
}

Element Group::generator(std::string_view name) const { return generator(impl_->pres.index_of(name)); }

Element Group::collect(std::span<const Letter> word) const { return Element(impl_->collector->collect(word)); }

Element Group::mul(const Element& a, const Element& b) const { return element(mul(id_of(a), id_of(b))); }
Element Group::inv(const Element& a) const { return element(inv(id_of(a))); }
Element Group::conj(const Element& a, const Element& h) const { return element(conj(id_of(a), id_of(h))); }
Element Group::comm(const Element& a, const Element& b) const { return element(comm(id_of(a), id_of(b))); }
Element Group::pow(const Element& a, std::int64_t k) const { return element(pow(id_of(a), k)); }
std::uint64_t Group::element_order(const Element& a) const { return order_of(id_of(a)); }

ElemId Group::id_of(const Element& e) const {
  check_element(e);
  return impl_->encode(e.exponents());
}

Element Group::element(ElemId id) const {
  if (id >= impl_->order) throw Error(ErrorKind::IndexOutOfRange, "element id " + std::to_string(id));
  auto d = digits(id);
  return Element(std::vector<Exponent>(d.begin(), d.end()));
}

ElemId Group::gen_id(std::size_t i) const { return impl_->gens.at(i); }

std::span<const std::uint8_t> Group::digits(ElemId id) const {
  return {impl_->digits.data() + static_cast<std::size_t>(id) * impl_->n, impl_->n};
}

ElemId Group::mul(ElemId a, ElemId b) const { return impl_->mul(a, b); }

ElemId Group::mul_gen(ElemId a, std::size_t i, std::uint32_t k) const { return k == 0 ? a : impl_->rm(a, i, k); }

ElemId Group::inv(ElemId a) const { return impl_->inverse[a]; }

ElemId Group::conj(ElemId a, ElemId h) const { return impl_->mul(impl_->mul(impl_->inverse[h], a), h); }

ElemId Group::comm(ElemId a, ElemId b) const {
  return impl_->mul(impl_->mul(impl_->inverse[a], impl_->inverse[b]), impl_->mul(a, b));
}

ElemId Group::pow(ElemId a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  ElemId result = kIdentity;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) result = impl_->mul(result, a);
    a = impl_->mul(a, a);
    e >>= 1;
  }
  return result;
}

namespace {
struct ElementOrders {
  std::vector<std::uint32_t> values;
};
}  // namespace

const std::vector<std::uint32_t>& Group::orders() const {
  return memo<ElementOrders>([this] {
    ElementOrders result;
    auto& out = result.values;
    out.assign(impl_->order, 0);
    for (ElemId a = 0; a < impl_->order; ++a) {
      std::uint32_t k = 1;
      for (ElemId x = a; x != kIdentity; x = impl_->mul(x, a)) ++k;
      out[a] = k;
    }
    return result;
  }).values;
}

std::uint64_t Group::order_of(ElemId a) const { return orders().at(a); }

std::shared_ptr<const void> Group::memo_slot(std::type_index key,
                                             const std::function<std::shared_ptr<const void>()>& make) const {
  std::lock_guard lock(impl_->cache_mutex);
  auto it = impl_->cache.find(key);
  if (it != impl_->cache.end()) return it->second;
  auto value = make();
  impl_->cache.emplace(key, value);
  return value;
}

}  // namespace bvl
