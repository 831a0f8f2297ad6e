#pragma once

// Construction of the section C2 wr G' inside V(KG) for a non-abelian 2-group
// G with cyclic G' and a central involution z outside G'.
//
//   h = 1 + b(1 + z),   h^{a^i} = 1 + b (b, a^i) (1 + z),
//   X = <h> x <h^a> x ... x <h^{a^{2^s - 1}}>,
//   section = <X, a> / <a^{2^s}>  ~=  C2 wr C_{2^s}.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "unitwreath/bitset.hpp"
#include "unitwreath/grpalg.hpp"
#include "unitwreath/oracle.hpp"
#include "unitwreath/pcgroup.hpp"

namespace unitwreath {

enum class HypothesisFailure { none, abelian, derived_not_cyclic, no_central_involution_outside_derived };
std::string_view to_string(HypothesisFailure f);

struct HypothesisReport {
  std::size_t group_order = 0;
  std::size_t derived_order = 0;
  bool derived_cyclic = false;
  bool nonabelian = false;
  std::size_t center_order = 0;
  // Central involutions outside G', canonical order.
  std::vector<GroupElement> candidates_z;
  bool pass = false;
  HypothesisFailure failure = HypothesisFailure::none;
};

HypothesisReport check_hypotheses(const FiniteGroup& g);

struct Witness {
  GroupElement a;
  GroupElement b;
  GroupElement z;
  int s = 0;  // |G'| = 2^s
  int k = 0;  // ord(a) = 2^k
};

// Optional user-fixed parts of the witness.
struct WitnessConstraints {
  std::optional<GroupElement> a;
  std::optional<GroupElement> b;
  std::optional<GroupElement> z;
};

// Description of the first witness invariant that w violates, if any.
std::optional<std::string> witness_violation(const FiniteGroup& g, const HypothesisReport& report, const Witness& w);

// First pair (b, a) in canonical order satisfying every witness invariant;
// z is the first candidate. Throws ContractError if the hypotheses fail and
// NoWitnessError (with diagnostics) if no pair qualifies.
Witness select_witness(const FiniteGroup& g, const HypothesisReport& report, const WitnessConstraints& fixed = {});

struct BaseOrbit {
  // units[i] = h^{a^i}, 0 <= i < 2^s
  std::vector<NormalizedUnit> units;
};

// 1 + b (b, a^i) (1 + z)
NormalizedUnit orbit_closed_form(const FiniteGroup& g, const Witness& w, std::uint64_t i);

// Throws ConstructionError on a closed-form or wrap-around mismatch.
BaseOrbit build_orbit(const FiniteGroup& g, const Witness& w);

struct BaseGroup {
  // elements[mask] is the product of the orbit units selected by mask.
  std::vector<NormalizedUnit> elements;
  std::size_t order() const noexcept { return elements.size(); }
};

// Checks unit orders, pairwise commutation and that every non-empty subset
// product differs from 1 with support size 1 + 2|S|. Throws ConstructionError
// naming the offending units or subset.
BaseGroup verify_base_group(const BaseOrbit& orbit);

// Y / N as explicit cosets of unit bitsets. Cosets are sorted by their
// representative (minimal support, then lexicographic), so the identity
// coset is 0.
class QuotientGroup {
 public:
  QuotientGroup(const FiniteGroup& g, std::vector<std::vector<NormalizedUnit>> cosets);

  std::size_t order() const noexcept { return cosets_.size(); }
  const std::vector<std::vector<NormalizedUnit>>& cosets() const noexcept { return cosets_; }
  const NormalizedUnit& representative(std::size_t c) const { return cosets_[c].front(); }
  std::optional<std::size_t> locate(const NormalizedUnit& u) const;
  // Coset of rep(x) rep(y). Throws ConstructionError if it lies in no coset.
  std::size_t multiply(std::size_t x, std::size_t y) const;
  CayleyTable table() const;
  const FiniteGroup& group() const noexcept { return *group_; }

 private:
  const FiniteGroup* group_;
  std::vector<std::vector<NormalizedUnit>> cosets_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> coset_of_;
};

// Partition of ambient into left cosets u N.
QuotientGroup build_quotient(std::span<const NormalizedUnit> ambient, std::span<const NormalizedUnit> kernel);

struct Check {
  enum class Status { passed, failed, skipped };
  std::string name;
  Status status = Status::skipped;
  std::string detail;
};

bool all_passed(std::span<const Check> checks);

// Structural characterization of the regular wreath product C2 wr C_{2^s}:
// quotient-order, quotient-well-defined, base-normal-elem-abelian, top-order,
// regular-shift-action, complement-trivial-intersection, and (when oracle is
// set and s <= 2) oracle-isomorphism against reference_wreath(s).
std::vector<Check> verify_wreath(const QuotientGroup& q, std::span<const std::size_t> orbit_images,
                                 std::size_t top_image, int s, bool oracle);
std::vector<Check> verify_wreath(const CayleyTable& q, std::span<const std::size_t> orbit_images,
                                 std::size_t top_image, int s, bool oracle);

struct SectionOptions {
  bool oracle = false;
  std::size_t cap = kDefaultClosureCap;
};

struct SectionReport {
  std::string group_name;
  std::size_t group_order = 0;
  Witness witness;
  std::vector<NormalizedUnit> orbit;
  std::size_t base_order = 0;
  std::size_t ambient_order = 0;
  std::size_t kernel_order = 0;
  std::size_t quotient_order = 0;
  std::vector<Check> checks;
  bool verdict = false;
};

SectionReport build_section(const FiniteGroup& g, const Witness& w, const BaseOrbit& orbit, const BaseGroup& base,
                            const SectionOptions& options = {});

// check_hypotheses -> select_witness -> build_orbit -> verify_base_group ->
// build_section. Throws ContractError when the hypotheses fail.
SectionReport run_construction(const FiniteGroup& g, const SectionOptions& options = {},
                               const WitnessConstraints& fixed = {});

}  // namespace unitwreath
