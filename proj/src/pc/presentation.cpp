#include "bvl/pc/presentation.hpp"

#include "bvl/error.hpp"
#include "bvl/pc/element.hpp"

#include <algorithm>

namespace bvl {

bool Element::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::string to_string(const Element& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + "]";
}

PcPresentation PcPresentation::elementary(std::uint32_t p, std::vector<std::string> names) {
  PcPresentation pres;
  const std::size_t n = names.size();
  pres.names = std::move(names);
  pres.relative_orders.assign(n, p);
  pres.power_tails.assign(n, Word{});
  return pres;
}

std::optional<std::uint32_t> PcPresentation::prime() const {
  if (relative_orders.empty()) return std::nullopt;
  const auto p = relative_orders.front();
  for (auto r : relative_orders)
    if (r != p) return std::nullopt;
  return p;
}

std::optional<std::size_t> PcPresentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::size_t PcPresentation::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownGenerator, std::string(name));
}

void PcPresentation::set_comm(std::size_t j, std::size_t i, Word tail) {
  if (j <= i) throw Error(ErrorKind::WeightViolation, "commutator rule needs j > i");
  if (tail.empty())
    comm_tails.erase({j, i});
  else
    comm_tails[{j, i}] = std::move(tail);
}

const Word& PcPresentation::comm(std::size_t j, std::size_t i) const {
  static const Word kEmpty;
  auto it = comm_tails.find({j, i});
  return it == comm_tails.end() ? kEmpty : it->second;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace bvl
