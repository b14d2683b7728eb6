#pragma once

#include "bvl/pc/element.hpp"
#include "bvl/pc/presentation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bvl {

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

/// Collection from the left over a weighted power-commutator presentation.
///
/// Words are rewritten into normal form with an explicit work stack; each call
/// aborts with StepBudgetExceeded once `step_budget` stack items have been
/// processed. Construction normalises every tail (last generator first) and
/// rejects tails that reference a generator not strictly later than allowed.
class Collector {
 public:
  explicit Collector(const PcPresentation& pres, std::uint64_t step_budget = kDefaultStepBudget);

  std::size_t rank() const { return orders_.size(); }
  std::uint32_t relative_order(std::size_t i) const { return orders_[i]; }
  /// Order of the generator g_i as a group element.
  std::uint64_t generator_order(std::size_t i) const { return gen_order_[i]; }

  /// acc := acc * word.  acc must be a normal form.
  void multiply(std::vector<Exponent>& acc, std::span<const Letter> word) const;
  void multiply_generator(std::vector<Exponent>& acc, std::size_t gen, std::uint64_t count = 1) const;
  std::vector<Exponent> collect(std::span<const Letter> word) const;

  const std::vector<Exponent>& power_tail(std::size_t i) const { return power_nf_[i]; }
  /// Normal form of [g_j, g_i], j > i.
  const std::vector<Exponent>& comm_tail(std::size_t j, std::size_t i) const { return comm_nf_[j][i]; }

 private:
  struct Item {
    std::uint32_t gen;
    std::uint64_t count;
  };
  using Items = std::vector<Item>;

  Items to_items(const std::vector<Exponent>& nf) const;
  void push_letters(Items& stack, std::span<const Letter> word) const;
  void run(std::vector<Exponent>& acc, Items& stack) const;

  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> gen_order_;
  std::vector<std::vector<Exponent>> power_nf_;
  std::vector<std::vector<std::vector<Exponent>>> comm_nf_;
  std::vector<Items> power_items_;
  std::vector<std::vector<Items>> comm_items_;
  std::uint64_t budget_;
};

}  // namespace bvl
