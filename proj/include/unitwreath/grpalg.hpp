#pragma once

// Group algebra KG over K = GF(2). An element is a subset of G, stored as a
// bitset over the canonical element index.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitwreath/bitset.hpp"
#include "unitwreath/pcgroup.hpp"

namespace unitwreath {

// The group must outlive every element built over it.
class AlgebraElement {
 public:
  static AlgebraElement zero(const FiniteGroup& g) { return AlgebraElement(g, Bitset(g.order())); }
  static AlgebraElement one(const FiniteGroup& g) { return embed(g, g.identity()); }
  static AlgebraElement embed(const FiniteGroup& g, GroupElement x);
  static AlgebraElement from_support(const FiniteGroup& g, std::span<const GroupElement> support);
  AlgebraElement(const FiniteGroup& g, Bitset support);

  const FiniteGroup& group() const noexcept { return *group_; }
  const Bitset& support() const noexcept { return support_; }
  std::size_t support_size() const noexcept { return support_.count(); }
  bool coefficient(GroupElement x) const { return support_.test(group_->index(x)); }
  bool is_zero() const noexcept { return support_.none(); }

  // Sum of support elements in canonical order, e.g. "1 + b + b·z".
  std::string format() const;

  friend bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
    return u.group_ == v.group_ && u.support_ == v.support_;
  }

 private:
  const FiniteGroup* group_;
  Bitset support_;
};

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v);
// Convolution over the Cayley table: sum of gh over g in supp u, h in supp v.
AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v);
// Parity of the support size.
int augmentation(const AlgebraElement& u);

inline AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) { return add(u, v); }
inline AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) { return mul(u, v); }

// Element of V(KG): augmentation 1. Over a 2-group in characteristic 2 every
// such element is invertible since the augmentation ideal is nilpotent.
class NormalizedUnit {
 public:
  // Throws ContractError when the augmentation is 0.
  explicit NormalizedUnit(AlgebraElement value);
  static std::optional<NormalizedUnit> from(AlgebraElement value);
  static NormalizedUnit one(const FiniteGroup& g) { return NormalizedUnit(AlgebraElement::one(g)); }
  static NormalizedUnit embed(const FiniteGroup& g, GroupElement x) {
    return NormalizedUnit(AlgebraElement::embed(g, x));
  }

  const AlgebraElement& value() const noexcept { return value_; }
  const Bitset& support() const noexcept { return value_.support(); }
  const FiniteGroup& group() const noexcept { return value_.group(); }
  bool is_one() const;
  std::string format() const { return value_.format(); }

  friend NormalizedUnit operator*(const NormalizedUnit& u, const NormalizedUnit& v) {
    return NormalizedUnit(tag{}, mul(u.value_, v.value_));
  }
  friend bool operator==(const NormalizedUnit&, const NormalizedUnit&) = default;

 private:
  struct tag {};
  NormalizedUnit(tag, AlgebraElement value) : value_(std::move(value)) {}
  AlgebraElement value_;
};

struct NormalizedUnitHash {
  std::size_t operator()(const NormalizedUnit& u) const noexcept { return u.support().hash(); }
};

NormalizedUnit unit_power(const NormalizedUnit& u, std::uint64_t e);
// Smallest 2^m with u^{2^m} = 1, by repeated squaring.
std::uint64_t unit_order(const NormalizedUnit& u);
// embed(g)^{-1} u embed(g)
NormalizedUnit conjugate_unit(const NormalizedUnit& u, GroupElement g);
// u^{2^m - 1} where 2^m = unit_order(u).
NormalizedUnit inverse_unit(const NormalizedUnit& u);

}  // namespace unitwreath
