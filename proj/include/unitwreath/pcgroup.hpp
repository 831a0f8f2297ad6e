#pragma once

// Finite 2-groups given by refined polycyclic presentations: every relative
// order is 2, so a normal form g_1^{e_1} ... g_n^{e_n} is an n-bit vector.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unitwreath/cayley.hpp"

namespace unitwreath {

// Sequence of 0-based generator indices.
using Word = std::vector<int>;

// Power and conjugation relations of a pc presentation. Defaults are stored
// explicitly: powers[i] is empty when g_i^2 = 1 and conjugates[i][j] is {j}
// when g_j and g_i commute.
struct PcPresentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Word> powers;                   // g_i^2
  std::vector<std::vector<Word>> conjugates;  // g_j^{g_i} for i < j

  static PcPresentation free_relations(std::string name, std::vector<std::string> generators);
  int size() const noexcept { return static_cast<int>(generators.size()); }
  friend bool operator==(const PcPresentation&, const PcPresentation&) = default;
};

// Parses the line-oriented presentation format:
//   group <name>
//   gens <g1> ... <gN>
//   pow <gi> = <word>
//   conj <gj> <gi> = <word>     (g_j^{g_i}, i < j)
// Throws ParseError or ConstraintError.
PcPresentation parse_presentation(std::string_view text);

// Canonical text form; omits default relations. parse_presentation inverts it.
std::string to_text(const PcPresentation& pres);

// Checks the triangular constraints, throwing ConstraintError: the words for
// g_i^2 and g_j^{g_i} (i < j) use only generators after g_i.
void check_constraints(const PcPresentation& pres);

// Element in normal form. Bit n-i holds the exponent of g_i, so g_1 is the most
// significant bit and the packed value is the canonical element index.
struct GroupElement {
  std::uint32_t bits = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class FiniteGroup {
 public:
  // Largest generator count accepted by the loader.
  static constexpr int kMaxGenerators = 10;
  // Largest order for which the Cayley table is materialized.
  static constexpr std::size_t kCayleyLimit = 512;

  // Validates constraints and consistency. Throws ConstraintError or
  // InconsistencyError.
  explicit FiniteGroup(PcPresentation pres);

  const PcPresentation& presentation() const noexcept { return pres_; }
  const std::string& name() const noexcept { return pres_.name; }
  int generator_count() const noexcept { return n_; }
  std::size_t order() const noexcept { return std::size_t{1} << n_; }

  GroupElement identity() const noexcept { return {}; }
  // 0-based pc generator.
  GroupElement generator(int i) const noexcept { return {std::uint32_t{1} << (n_ - 1 - i)}; }
  GroupElement element(std::size_t index) const noexcept {
    return {static_cast<std::uint32_t>(index)};
  }
  std::size_t index(GroupElement x) const noexcept { return x.bits; }
  std::vector<int> exponents(GroupElement x) const;
  std::vector<GroupElement> elements() const;

  GroupElement multiply(GroupElement x, GroupElement y) const;
  // Multiplication by collection only, ignoring the Cayley table.
  GroupElement collect(GroupElement x, GroupElement y) const;
  // Collects an arbitrary word into normal form.
  GroupElement evaluate(const Word& word) const;
  GroupElement inverse(GroupElement x) const;
  GroupElement power(GroupElement x, std::uint64_t e) const;
  // g^{-1} x g
  GroupElement conjugate(GroupElement x, GroupElement g) const;
  // (x, y) = x^{-1} y^{-1} x y
  GroupElement commutator(GroupElement x, GroupElement y) const;
  // Smallest 2^m with x^{2^m} = 1.
  std::uint32_t element_order(GroupElement x) const;
  bool is_abelian() const;

  std::size_t product_index(std::size_t x, std::size_t y) const {
    return cayley_ ? (*cayley_)(x, y) : multiply(element(x), element(y)).bits;
  }
  const CayleyTable* cayley() const noexcept { return cayley_ ? &*cayley_ : nullptr; }

  // Normal-form word with generator names joined by '·'; "1" for the identity.
  std::string format(GroupElement x) const;
  // Parses a space- or '·'-separated word of generator names ("1" for the
  // identity) and collects it. Returns nullopt for unknown names.
  std::optional<GroupElement> parse_word(std::string_view text) const;

 private:
  void collect_generator(std::uint32_t& bits, int j) const;
  // Full product table by collection, after checking that collection is
  // associative and every element has an inverse.
  std::vector<std::uint32_t> validated_table() const;

  PcPresentation pres_;
  int n_;
  std::optional<CayleyTable> cayley_;
};

FiniteGroup load(std::string_view text);
FiniteGroup load_file(const std::filesystem::path& path);

// Subgroup as a sorted list of element indices.
struct Subgroup {
  std::vector<std::uint32_t> elements;
  std::vector<GroupElement> gens;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(GroupElement x) const;
};

// Smallest subgroup containing gens (BFS over multiplication by generators).
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const GroupElement> gens);
// Normal closure of the commutators of pc generators.
Subgroup derived_subgroup(const FiniteGroup& g);
// Elements commuting with every pc generator.
Subgroup center(const FiniteGroup& g);
// An element of order |s|, if any.
std::optional<GroupElement> cyclic_generator(const FiniteGroup& g, const Subgroup& s);
inline bool is_cyclic(const FiniteGroup& g, const Subgroup& s) {
  return cyclic_generator(g, s).has_value();
}

}  // namespace unitwreath
