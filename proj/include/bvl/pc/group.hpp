#pragma once

#include "bvl/pc/collector.hpp"
#include "bvl/pc/element.hpp"
#include "bvl/pc/presentation.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <typeindex>
#include <vector>

namespace bvl {

/// Dense index of a normal form: the exponent vector read as a mixed-radix
/// number with g_0 most significant. Index order equals lexicographic order
/// of exponent vectors; the identity is 0.
using ElemId = std::uint32_t;

struct BuildOptions {
  std::uint64_t max_order = std::uint64_t{1} << 22;
  std::uint64_t step_budget = kDefaultStepBudget;
};

/// A finite group given by a consistent power-commutator presentation.
///
/// Building collects g * g_i for every normal form g and generator g_i, which
/// yields the right-regular action. The presentation is accepted only when
/// these maps are permutations satisfying every defining relation and the
/// closure of the identity under them has exactly prod(r_i) points; then the
/// tables realise the multiplication of the presented group.
///
/// Group is a cheap shared handle to immutable state. Derived data is attached
/// through memo(), computed once under a lock, and read-only afterwards.
class Group {
 public:
  static constexpr ElemId kIdentity = 0;

  static Group build(PcPresentation pres, const BuildOptions& options = {});

  const PcPresentation& presentation() const;
  const Collector& collector() const;
  std::uint64_t order() const;
  std::size_t rank() const;
  std::optional<std::uint32_t> prime() const;
  std::uint32_t relative_order(std::size_t i) const;

  // Normal-form API.
  Element identity() const;
  Element generator(std::size_t i) const;
  Element generator(std::string_view name) const;
  /// Normal form of a word, computed by the collector (not the tables).
  Element collect(std::span<const Letter> word) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  /// h^-1 a h
  Element conj(const Element& a, const Element& h) const;
  /// a^-1 b^-1 a b
  Element comm(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::int64_t k) const;
  std::uint64_t element_order(const Element& a) const;

  // Indexed API.
  ElemId id_of(const Element& e) const;
  Element element(ElemId id) const;
  ElemId gen_id(std::size_t i) const;
  std::span<const std::uint8_t> digits(ElemId id) const;
  ElemId mul(ElemId a, ElemId b) const;
  /// a * g_i^k for 0 <= k < r_i
  ElemId mul_gen(ElemId a, std::size_t i, std::uint32_t k = 1) const;
  ElemId inv(ElemId a) const;
  ElemId conj(ElemId a, ElemId h) const;
  ElemId comm(ElemId a, ElemId b) const;
  ElemId pow(ElemId a, std::int64_t k) const;
  std::uint64_t order_of(ElemId a) const;
  /// Orders of all elements, indexed by id.
  const std::vector<std::uint32_t>& orders() const;

  /// Lazily computed derived data keyed by T. The factory runs at most once.
  template <class T>
  const T& memo(const std::function<T()>& make) const {
    auto slot = memo_slot(std::type_index(typeid(T)), [&]() -> std::shared_ptr<const void> {
      return std::make_shared<const T>(make());
    });
    return *static_cast<const T*>(slot.get());
  }

  bool same_as(const Group& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit Group(std::shared_ptr<Impl> impl);
  std::shared_ptr<const void> memo_slot(std::type_index key,
                                        const std::function<std::shared_ptr<const void>()>& make) const;
  void check_element(const Element& e) const;

  std::shared_ptr<Impl> impl_;
};

}  // namespace bvl
