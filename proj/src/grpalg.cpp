#include "unitwreath/grpalg.hpp"

#include "unitwreath/errors.hpp"

namespace unitwreath {

namespace {

void require_same_group(const AlgebraElement& u, const AlgebraElement& v) {
  if (&u.group() != &v.group())
    throw GroupMismatchError("algebra elements belong to different groups ('" + u.group().name() +
                             "' and '" + v.group().name() + "')");
}

}  // namespace

AlgebraElement::AlgebraElement(const FiniteGroup& g, Bitset support)
    : group_(&g), support_(std::move(support)) {
  if (support_.size() != g.order())
    throw ContractError("support length " + std::to_string(support_.size()) +
                        " does not match group order " + std::to_string(g.order()));
}

AlgebraElement AlgebraElement::embed(const FiniteGroup& g, GroupElement x) {
  Bitset b(g.order());
  b.set(g.index(x));
  return AlgebraElement(g, std::move(b));
}

AlgebraElement AlgebraElement::from_support(const FiniteGroup& g, std::span<const GroupElement> support) {
  Bitset b(g.order());
  for (const auto& x : support) b.flip(g.index(x));
  return AlgebraElement(g, std::move(b));
}

std::string AlgebraElement::format() const {
  if (is_zero()) return "0";
  std::string out;
  support_.for_each_set([&](std::size_t i) {
    if (!out.empty()) out += " + ";
    out += group_->format(group_->element(i));
  });
  return out;
}

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_group(u, v);
  return AlgebraElement(u.group(), u.support() ^ v.support());
}

AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_group(u, v);
  const FiniteGroup& g = u.group();
  Bitset out(g.order());
  const auto right = v.support().indices();
  u.support().for_each_set([&](std::size_t x) {
    for (auto y : right) out.flip(g.product_index(x, y));
  });
  return AlgebraElement(g, std::move(out));
}

int augmentation(const AlgebraElement& u) { return static_cast<int>(u.support_size() & 1u); }

NormalizedUnit::NormalizedUnit(AlgebraElement value) : value_(std::move(value)) {
  if (augmentation(value_) != 1)
    throw ContractError("element " + value_.format() + " has augmentation 0 and is not a normalized unit");
}

std::optional<NormalizedUnit> NormalizedUnit::from(AlgebraElement value) {
  if (augmentation(value) != 1) return std::nullopt;
  return NormalizedUnit(tag{}, std::move(value));
}

bool NormalizedUnit::is_one() const {
  return support().count() == 1 && support().test(0);
}

NormalizedUnit unit_power(const NormalizedUnit& u, std::uint64_t e) {
  NormalizedUnit result = NormalizedUnit::one(u.group());
  NormalizedUnit base = u;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t unit_order(const NormalizedUnit& u) {
  std::uint64_t ord = 1;
  NormalizedUnit x = u;
  while (!x.is_one()) {
    x = x * x;
    ord *= 2;
  }
  return ord;
}

NormalizedUnit conjugate_unit(const NormalizedUnit& u, GroupElement g) {
  const FiniteGroup& grp = u.group();
  // g^{-1} x g for each x in the support; conjugation permutes G.
  const GroupElement ginv = grp.inverse(g);
  Bitset out(grp.order());
  u.support().for_each_set([&](std::size_t x) {
    out.set(grp.product_index(grp.product_index(grp.index(ginv), x), grp.index(g)));
  });
  return NormalizedUnit(AlgebraElement(grp, std::move(out)));
}

NormalizedUnit inverse_unit(const NormalizedUnit& u) { return unit_power(u, unit_order(u) - 1); }

}  // namespace unitwreath
