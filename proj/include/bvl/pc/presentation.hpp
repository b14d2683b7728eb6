#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bvl {

/// One syllable g_gen^exp of a word; exp may be any integer.
struct Letter {
  std::size_t gen = 0;
  std::int64_t exp = 1;

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Power-commutator presentation on ordered generators g_0 .. g_{n-1}.
///
///   g_i^{r_i}    = power_tails[i]          (word in g_{i+1}, ...)
///   [g_j, g_i]   = comm_tails[{j, i}]      (j > i, word in g_{j+1}, ...)
///
/// with [a, b] = a^-1 b^-1 a b. Missing commutator entries are trivial.
/// For a p-group every relative order r_i equals p; direct products of
/// p-groups for different primes carry mixed relative orders.
struct PcPresentation {
  std::vector<std::string> names;
  std::vector<std::uint32_t> relative_orders;
  std::vector<Word> power_tails;
  std::map<std::pair<std::size_t, std::size_t>, Word> comm_tails;

  /// Presentation with `names.size()` generators of relative order p and all
  /// rules trivial.
  static PcPresentation elementary(std::uint32_t p, std::vector<std::string> names);

  std::size_t rank() const { return names.size(); }
  /// Common relative order, when all generators share one (and rank > 0).
  std::optional<std::uint32_t> prime() const;
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  std::size_t index_of(std::string_view name) const;

  void set_power(std::size_t i, Word tail) { power_tails.at(i) = std::move(tail); }
  /// Sets [g_j, g_i] for j > i; an empty tail erases the rule.
  void set_comm(std::size_t j, std::size_t i, Word tail);
  const Word& comm(std::size_t j, std::size_t i) const;

  bool operator==(const PcPresentation&) const = default;
};

bool is_prime(std::uint64_t n);

}  // namespace bvl
