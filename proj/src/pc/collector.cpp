#include "bvl/pc/collector.hpp"

#include "bvl/error.hpp"

#include <algorithm>
#include <string>

namespace bvl {

namespace {

void check_tail(const PcPresentation& pres, const Word& tail, std::size_t after, const std::string& rule) {
  for (const auto& l : tail) {
    if (l.gen >= pres.rank())
      throw Error(ErrorKind::IndexOutOfRange, rule + " references generator index " + std::to_string(l.gen));
    if (l.gen <= after)
      throw Error(ErrorKind::WeightViolation,
                  rule + " references " + pres.names[l.gen] + ", which is not later than " + pres.names[after]);
  }
}

bool is_zero(const std::vector<Exponent>& v) {
  return std::all_of(v.begin(), v.end(), [](Exponent e) { return e == 0; });
}

}  // namespace

Collector::Collector(const PcPresentation& pres, std::uint64_t step_budget) : budget_(step_budget) {
  const std::size_t n = pres.rank();
  if (pres.relative_orders.size() != n || pres.power_tails.size() != n)
    throw Error(ErrorKind::BadParameters, "presentation arrays disagree on rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_prime(pres.relative_orders[i]) || pres.relative_orders[i] > 255)
      throw Error(ErrorKind::BadParameters, "relative order of " + pres.names[i] + " must be a prime below 256");
  }
  for (const auto& [key, tail] : pres.comm_tails) {
    const auto [j, i] = key;
    if (j >= n || i >= n) throw Error(ErrorKind::IndexOutOfRange, "commutator rule index out of range");
    if (j <= i) throw Error(ErrorKind::WeightViolation, "commutator rule [g_j, g_i] needs j > i");
    check_tail(pres, tail, j, "[" + pres.names[j] + "," + pres.names[i] + "]");
  }
  for (std::size_t i = 0; i < n; ++i) check_tail(pres, pres.power_tails[i], i, pres.names[i] + "^p");

  orders_ = pres.relative_orders;
  gen_order_.assign(n, 0);
  power_nf_.assign(n, std::vector<Exponent>(n, 0));
  comm_nf_.assign(n, std::vector<std::vector<Exponent>>(n, std::vector<Exponent>(n, 0)));
  power_items_.assign(n, {});
  comm_items_.assign(n, std::vector<Items>(n));

  // Rules for generator i only involve later generators, so normalising from
  // the back keeps every collection below inside the already-prepared part.
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) {
      comm_nf_[j][ii] = collect(pres.comm(j, ii));
      comm_items_[j][ii] = to_items(comm_nf_[j][ii]);
    }
    power_nf_[ii] = collect(pres.power_tails[ii]);
    power_items_[ii] = to_items(power_nf_[ii]);

    std::uint64_t tail_order = 1;
    std::vector<Exponent> acc = power_nf_[ii];
    while (!is_zero(acc)) {
      Items stack(power_items_[ii].rbegin(), power_items_[ii].rend());
      run(acc, stack);
      ++tail_order;
    }
    gen_order_[ii] = orders_[ii] * tail_order;
  }
}

Collector::Items Collector::to_items(const std::vector<Exponent>& nf) const {
  Items items;
  for (std::size_t i = 0; i < nf.size(); ++i)
    if (nf[i]) items.push_back({static_cast<std::uint32_t>(i), nf[i]});
  return items;
}

void Collector::push_letters(Items& stack, std::span<const Letter> word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->gen >= rank())
      throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(it->gen));
    const auto ord = static_cast<std::int64_t>(gen_order_[it->gen]);
    std::int64_t e = it->exp % ord;
    if (e < 0) e += ord;
    if (e) stack.push_back({static_cast<std::uint32_t>(it->gen), static_cast<std::uint64_t>(e)});
  }
}

void Collector::multiply(std::vector<Exponent>& acc, std::span<const Letter> word) const {
  Items stack;
  push_letters(stack, word);
  run(acc, stack);
}

void Collector::multiply_generator(std::vector<Exponent>& acc, std::size_t gen, std::uint64_t count) const {
  if (gen >= rank()) throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(gen));
  Items stack{{static_cast<std::uint32_t>(gen), count}};
  run(acc, stack);
}

std::vector<Exponent> Collector::collect(std::span<const Letter> word) const {
  std::vector<Exponent> acc(rank(), 0);
  multiply(acc, word);
  return acc;
}

void Collector::run(std::vector<Exponent>& acc, Items& stack) const {
  const std::size_t n = rank();
  std::uint64_t steps = 0;
  std::vector<Exponent> saved(n);
  while (!stack.empty()) {
    if (++steps > budget_)
      throw Error(ErrorKind::StepBudgetExceeded, "collection exceeded " + std::to_string(budget_) + " steps");
    const Item item = stack.back();
    stack.pop_back();
    const std::size_t g = item.gen;
    const std::uint32_t r = orders_[g];

    std::size_t last = n;
    for (std::size_t j = n; j-- > g + 1;) {
      if (acc[j]) {
        last = j;
        break;
      }
    }

    if (last == n) {
      // Nothing to the right of g: add directly and expand carries.
      const std::uint64_t total = acc[g] + item.count;
      acc[g] = static_cast<Exponent>(total % r);
      for (std::uint64_t q = total / r; q > 0; --q)
        stack.insert(stack.end(), power_items_[g].rbegin(), power_items_[g].rend());
      continue;
    }

    if (item.count > 1) stack.push_back({item.gen, item.count - 1});

    const Exponent next = acc[g] + 1;
    const bool overflow = next == r;
    bool commutes = true;
    for (std::size_t j = g + 1; j <= last && commutes; ++j)
      if (acc[j] && !comm_items_[j][g].empty()) commutes = false;
    if (commutes && !overflow) {
      acc[g] = next;
      continue;
    }

    // prefix * g^{e+1} * suffix^g, where (g_j)^g = g_j [g_j, g].
    for (std::size_t j = g + 1; j < n; ++j) {
      saved[j] = acc[j];
      acc[j] = 0;
    }
    acc[g] = overflow ? 0 : next;
    for (std::size_t j = last + 1; j-- > g + 1;) {
      const Exponent e = saved[j];
      if (!e) continue;
      const Items& c = comm_items_[j][g];
      if (c.empty()) {
        stack.push_back({static_cast<std::uint32_t>(j), e});
        continue;
      }
      for (Exponent copy = 0; copy < e; ++copy) {
        stack.insert(stack.end(), c.rbegin(), c.rend());
        stack.push_back({static_cast<std::uint32_t>(j), 1});
      }
    }
    if (overflow) stack.insert(stack.end(), power_items_[g].rbegin(), power_items_[g].rend());
  }
}

}  // namespace bvl
