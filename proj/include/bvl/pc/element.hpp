#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bvl {

using Exponent = std::uint32_t;

/// Normal-form element g_1^{e_1} ... g_n^{e_n}, stored as its exponent vector.
/// Entries lie in [0, relative order of g_i); equal vectors are equal elements.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  static Element identity(std::size_t rank) { return Element(std::vector<Exponent>(rank, 0)); }

  std::span<const Exponent> exponents() const { return exps_; }
  std::size_t rank() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  bool is_identity() const;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// "[e1,e2,...]"
std::string to_string(const Element& e);

}  // namespace bvl
