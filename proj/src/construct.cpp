#include "unitwreath/construct.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "unitwreath/errors.hpp"

namespace unitwreath {

std::string_view to_string(HypothesisFailure f) {
  switch (f) {
    case HypothesisFailure::none: return "none";
    case HypothesisFailure::abelian: return "abelian";
    case HypothesisFailure::derived_not_cyclic: return "derived-not-cyclic";
    case HypothesisFailure::no_central_involution_outside_derived: return "no-central-involution-outside-derived";
  }
  return "unknown";
}

HypothesisReport check_hypotheses(const FiniteGroup& g) {
  HypothesisReport r;
  r.group_order = g.order();
  const Subgroup derived = derived_subgroup(g);
  const Subgroup z_g = center(g);
  r.derived_order = derived.size();
  r.derived_cyclic = is_cyclic(g, derived);
  r.nonabelian = derived.size() > 1;
  r.center_order = z_g.size();
  for (auto idx : z_g.elements) {
    const GroupElement x = g.element(idx);
    if (g.element_order(x) == 2 && !derived.contains(x)) r.candidates_z.push_back(x);
  }
  if (!r.nonabelian)
    r.failure = HypothesisFailure::abelian;
  else if (!r.derived_cyclic)
    r.failure = HypothesisFailure::derived_not_cyclic;
  else if (r.candidates_z.empty())
    r.failure = HypothesisFailure::no_central_involution_outside_derived;
  r.pass = r.failure == HypothesisFailure::none;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

int log2_exact(std::size_t x) { return std::countr_zero(x); }

enum class PairDefect { none, not_generating, top_power_not_centralizing, repeated_commutator };

PairDefect pair_defect(const FiniteGroup& g, std::size_t derived_order, GroupElement a, GroupElement b) {
  const GroupElement c = g.commutator(b, a);
  if (g.element_order(c) != derived_order) return PairDefect::not_generating;
  const GroupElement top = g.power(a, derived_order);
  if (g.commutator(b, top) != g.identity()) return PairDefect::top_power_not_centralizing;
  std::set<GroupElement> seen;
  GroupElement ai = g.identity();
  for (std::size_t i = 0; i < derived_order; ++i) {
    if (!seen.insert(g.commutator(b, ai)).second) return PairDefect::repeated_commutator;
    ai = g.multiply(ai, a);
  }
  return PairDefect::none;
}

}  // namespace

std::optional<std::string> witness_violation(const FiniteGroup& g, const HypothesisReport& report,
                                             const Witness& w) {
  if (!report.pass) return "hypotheses fail (" + std::string(to_string(report.failure)) + ")";
  const GroupElement c = g.commutator(w.b, w.a);
  // The commutator lies in G'; it generates G' iff its order is |G'|.
  if (g.element_order(c) != report.derived_order)
    return "(b,a) = " + g.format(c) + " does not generate the derived subgroup";
  if (std::find(report.candidates_z.begin(), report.candidates_z.end(), w.z) == report.candidates_z.end())
    return "z = " + g.format(w.z) + " is not a central involution outside the derived subgroup";
  if (std::size_t{1} << w.s != report.derived_order) return "s does not match |G'|";
  if (std::size_t{1} << w.k != g.element_order(w.a)) return "k does not match ord(a)";
  switch (pair_defect(g, report.derived_order, w.a, w.b)) {
    case PairDefect::none: break;
    case PairDefect::not_generating: return "(b,a) does not generate the derived subgroup";
    case PairDefect::top_power_not_centralizing: return "(b, a^(2^s)) != 1";
    case PairDefect::repeated_commutator: return "the commutators (b, a^i), 0 <= i < 2^s, are not distinct";
  }
  return std::nullopt;
}

Witness select_witness(const FiniteGroup& g, const HypothesisReport& report, const WitnessConstraints& fixed) {
  if (!report.pass)
    throw ContractError("select_witness requires passing hypotheses, got " + std::string(to_string(report.failure)));
  Witness w;
  w.s = log2_exact(report.derived_order);
  if (fixed.z) {
    if (std::find(report.candidates_z.begin(), report.candidates_z.end(), *fixed.z) == report.candidates_z.end())
      throw NoWitnessError("z = " + g.format(*fixed.z) + " is not a central involution outside the derived subgroup");
    w.z = *fixed.z;
  } else {
    w.z = report.candidates_z.front();
  }

  std::size_t scanned = 0, generating = 0, centralizing = 0;
  for (const GroupElement b : g.elements()) {
    if (fixed.b && *fixed.b != b) continue;
    for (const GroupElement a : g.elements()) {
      if (fixed.a && *fixed.a != a) continue;
      ++scanned;
      const PairDefect d = pair_defect(g, report.derived_order, a, b);
      if (d != PairDefect::not_generating) ++generating;
      if (d == PairDefect::none || d == PairDefect::repeated_commutator) ++centralizing;
      if (d == PairDefect::none) {
        w.a = a;
        w.b = b;
        w.k = log2_exact(g.element_order(a));
        return w;
      }
    }
  }
  std::ostringstream msg;
  msg << "no (b, a) pair satisfies the witness invariants in '" << g.name() << "': scanned " << scanned
      << " pairs, " << generating << " with (b,a) generating G', " << centralizing
      << " of those with (b, a^(2^s)) = 1, none with distinct (b, a^i)";
  throw NoWitnessError(msg.str());
}

// ---------------------------------------------------------------------------

NormalizedUnit orbit_closed_form(const FiniteGroup& g, const Witness& w, std::uint64_t i) {
  const GroupElement x = g.multiply(w.b, g.commutator(w.b, g.power(w.a, i)));
  const GroupElement support[] = {g.identity(), x, g.multiply(x, w.z)};
  return NormalizedUnit(AlgebraElement::from_support(g, support));
}

BaseOrbit build_orbit(const FiniteGroup& g, const Witness& w) {
  const std::size_t m = std::size_t{1} << w.s;
  const auto one = AlgebraElement::one(g);
  const auto h = NormalizedUnit(one + AlgebraElement::embed(g, w.b) * (one + AlgebraElement::embed(g, w.z)));
  BaseOrbit orbit;
  orbit.units.push_back(h);
  for (std::size_t i = 1; i < m; ++i) orbit.units.push_back(conjugate_unit(orbit.units.back(), w.a));
  for (std::size_t i = 0; i < m; ++i) {
    const auto expected = orbit_closed_form(g, w, i);
    if (!(orbit.units[i] == expected))
      throw ConstructionError("h^(a^" + std::to_string(i) + ") = " + orbit.units[i].format() +
                              " differs from the closed form " + expected.format());
  }
  const auto wrapped = conjugate_unit(orbit.units.back(), w.a);
  if (!(wrapped == orbit.units.front()))
    throw ConstructionError("conjugating h^(a^" + std::to_string(m - 1) + ") by a gives " + wrapped.format() +
                            ", not h");
  return orbit;
}

BaseGroup verify_base_group(const BaseOrbit& orbit) {
  const auto& units = orbit.units;
  const std::size_t m = units.size();
  for (std::size_t i = 0; i < m; ++i)
    if (unit_order(units[i]) != 2)
      throw ConstructionError("orbit unit " + std::to_string(i) + " = " + units[i].format() + " has order " +
                              std::to_string(unit_order(units[i])) + ", not 2");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!(units[i] * units[j] == units[j] * units[i]))
        throw ConstructionError("orbit units " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  if (m >= 32) throw ContractError("orbit of length " + std::to_string(m) + " is too long to enumerate");

  BaseGroup base;
  const std::size_t count = std::size_t{1} << m;
  base.elements.reserve(count);
  base.elements.push_back(NormalizedUnit::one(units.front().group()));
  for (std::size_t mask = 1; mask < count; ++mask) {
    // Extend the product of mask without its highest bit.
    const std::size_t top = std::bit_width(mask) - 1;
    auto product = base.elements[mask ^ (std::size_t{1} << top)] * units[top];
    const std::size_t expected_support = 1 + 2 * static_cast<std::size_t>(std::popcount(mask));
    if (product.is_one() || product.support().count() != expected_support) {
      std::string subset;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) subset += (subset.empty() ? "" : ",") + std::to_string(i);
      throw ConstructionError("product over orbit subset {" + subset + "} is " + product.format() +
                              "; expected a non-identity unit with support size " +
                              std::to_string(expected_support));
    }
    base.elements.push_back(std::move(product));
  }
  return base;
}

// ---------------------------------------------------------------------------

QuotientGroup::QuotientGroup(const FiniteGroup& g, std::vector<std::vector<NormalizedUnit>> cosets)
    : group_(&g), cosets_(std::move(cosets)) {
  auto less = [](const NormalizedUnit& x, const NormalizedUnit& y) { return support_less(x.support(), y.support()); };
  for (auto& c : cosets_) {
    if (c.empty()) throw ContractError("empty coset");
    std::sort(c.begin(), c.end(), less);
  }
  std::sort(cosets_.begin(), cosets_.end(), [&](const auto& x, const auto& y) { return less(x.front(), y.front()); });
  for (std::size_t i = 0; i < cosets_.size(); ++i)
    for (const auto& u : cosets_[i]) coset_of_.emplace(u.support(), i);
}

std::optional<std::size_t> QuotientGroup::locate(const NormalizedUnit& u) const {
  auto it = coset_of_.find(u.support());
  if (it == coset_of_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuotientGroup::multiply(std::size_t x, std::size_t y) const {
  const auto product = representative(x) * representative(y);
  auto c = locate(product);
  if (!c)
    throw ConstructionError("product of coset representatives " + representative(x).format() + " and " +
                            representative(y).format() + " lies in no coset");
  return *c;
}

CayleyTable QuotientGroup::table() const {
  const std::size_t n = order();
  std::vector<std::uint32_t> products(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) products[x * n + y] = static_cast<std::uint32_t>(multiply(x, y));
  return CayleyTable(n, std::move(products));
}

QuotientGroup build_quotient(std::span<const NormalizedUnit> ambient, std::span<const NormalizedUnit> kernel) {
  if (ambient.empty()) throw ContractError("empty ambient group");
  std::unordered_set<Bitset, BitsetHash> assigned;
  std::vector<std::vector<NormalizedUnit>> cosets;
  for (const auto& u : ambient) {
    if (assigned.contains(u.support())) continue;
    std::vector<NormalizedUnit> coset;
    for (const auto& n : kernel) {
      auto x = u * n;
      assigned.insert(x.support());
      coset.push_back(std::move(x));
    }
    cosets.push_back(std::move(coset));
  }
  return QuotientGroup(ambient.front().group(), std::move(cosets));
}

// ---------------------------------------------------------------------------

bool all_passed(std::span<const Check> checks) {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Check::Status::failed; });
}

namespace {

Check make_check(std::string name, bool ok, std::string detail = {}) {
  return Check{std::move(name), ok ? Check::Status::passed : Check::Status::failed, std::move(detail)};
}

// Structural conditions on an abstract group given by its multiplication.
template <typename Mul>
void structural_checks(std::size_t order, Mul&& mul, std::span<const std::size_t> xs, std::size_t t, int s,
                       std::vector<Check>& out) {
  const std::size_t m = std::size_t{1} << s;
  const std::size_t e = 0;
  auto power = [&](std::size_t x, std::size_t k) {
    std::size_t r = e;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, x);
    return r;
  };
  auto elem_order = [&](std::size_t x) {
    std::size_t k = 1;
    for (std::size_t y = x; y != e; y = mul(y, x))
      if (++k > order) return std::size_t{0};
    return k;
  };
  auto inverse = [&](std::size_t x) { return power(x, elem_order(x) - 1); };
  auto closure = [&](std::span<const std::size_t> gens) {
    std::vector<std::size_t> elems{e};
    std::set<std::size_t> seen{e};
    for (std::size_t k = 0; k < elems.size(); ++k)
      for (auto g : gens) {
        const auto y = mul(elems[k], g);
        if (seen.insert(y).second) elems.push_back(y);
      }
    return seen;
  };

  // (ii) X-bar normal and elementary abelian of order 2^m.
  {
    std::string detail;
    bool ok = xs.size() == m;
    if (!ok) detail = "expected " + std::to_string(m) + " orbit images";
    for (std::size_t i = 0; ok && i < xs.size(); ++i) {
      if (xs[i] == e || mul(xs[i], xs[i]) != e) {
        ok = false;
        detail = "image " + std::to_string(i) + " is not an involution";
      }
      for (std::size_t j = i + 1; ok && j < xs.size(); ++j)
        if (mul(xs[i], xs[j]) != mul(xs[j], xs[i])) {
          ok = false;
          detail = "images " + std::to_string(i) + " and " + std::to_string(j) + " do not commute";
        }
    }
    const auto base = closure(xs);
    if (ok && base.size() != (std::size_t{1} << m)) {
      ok = false;
      detail = "images generate a subgroup of order " + std::to_string(base.size());
    }
    std::vector<std::size_t> all_gens(xs.begin(), xs.end());
    all_gens.push_back(t);
    for (std::size_t i = 0; ok && i < xs.size(); ++i)
      for (auto g : all_gens) {
        const auto c = mul(mul(inverse(g), xs[i]), g);
        if (!base.contains(c)) {
          ok = false;
          detail = "conjugate of image " + std::to_string(i) + " leaves the base";
          break;
        }
      }
    out.push_back(make_check("base-normal-elem-abelian", ok, detail));
  }

  // (iii) top of order 2^s acting by the regular cyclic shift.
  const std::size_t top_order = elem_order(t);
  out.push_back(make_check("top-order", top_order == m,
                           top_order == m ? "" : "top image has order " + std::to_string(top_order)));
  {
    bool ok = xs.size() == m;
    std::string detail;
    const auto t_inv = inverse(t);
    for (std::size_t i = 0; ok && i < m; ++i)
      if (mul(mul(t_inv, xs[i]), t) != xs[(i + 1) % m]) {
        ok = false;
        detail = "conjugating image " + std::to_string(i) + " by the top does not give image " +
                 std::to_string((i + 1) % m);
      }
    out.push_back(make_check("regular-shift-action", ok, detail));
  }

  // (iv) complement: trivial intersection and product of orders.
  {
    const auto base = closure(xs);
    const std::size_t top_gen[] = {t};
    const auto top = closure(top_gen);
    std::size_t shared = 0;
    for (auto x : top) shared += base.contains(x);
    const bool ok = shared == 1 && base.size() * top.size() == order;
    out.push_back(make_check("complement-trivial-intersection", ok,
                             ok ? "" : "|base ∩ top| = " + std::to_string(shared) + ", |base|·|top| = " +
                                           std::to_string(base.size() * top.size())));
  }
}

std::vector<Check> wreath_checks(std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                 std::span<const std::size_t> xs, std::size_t t, int s, bool oracle,
                                 const std::function<CayleyTable()>& table, std::vector<Check> prefix) {
  std::vector<Check> out = std::move(prefix);
  try {
    structural_checks(order, mul, xs, t, s, out);
  } catch (const ConstructionError& err) {
    out.push_back(make_check("quotient-closed", false, err.what()));
  }
  if (!oracle || s > 2) {
    out.push_back(Check{"oracle-isomorphism", Check::Status::skipped,
                        oracle ? "isomorphism search only runs for s <= 2" : "oracle disabled"});
  } else if (!all_passed(out)) {
    out.push_back(Check{"oracle-isomorphism", Check::Status::skipped, "structural checks failed"});
  } else {
    const bool iso = isomorphic_small(table(), reference_wreath(s));
    out.push_back(make_check("oracle-isomorphism", iso, iso ? "" : "no isomorphism to reference_wreath(s)"));
  }
  return out;
}

}  // namespace

std::vector<Check> verify_wreath(const CayleyTable& q, std::span<const std::size_t> orbit_images, std::size_t top_image,
                                 int s, bool oracle) {
  const std::size_t m = std::size_t{1} << s;
  const std::size_t expected = (std::size_t{1} << m) * m;
  std::vector<Check> prefix;
  prefix.push_back(make_check("quotient-order", q.order() == expected,
                              "|Q| = " + std::to_string(q.order()) + ", expected " + std::to_string(expected)));
  if (q.order() != expected) return prefix;
  return wreath_checks(
      q.order(), [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(q(x, y)); }, orbit_images,
      top_image, s, oracle, [&] { return q; }, std::move(prefix));
}

std::vector<Check> verify_wreath(const QuotientGroup& q, std::span<const std::size_t> orbit_images,
                                 std::size_t top_image, int s, bool oracle) {
  const std::size_t m = std::size_t{1} << s;
  const std::size_t expected = (std::size_t{1} << m) * m;
  std::vector<Check> prefix;
  prefix.push_back(make_check("quotient-order", q.order() == expected,
                              "|Q| = " + std::to_string(q.order()) + ", expected " + std::to_string(expected)));

  // Representative independence: every product of members lands in the coset
  // of the product of representatives. Exhaustive up to 2^20 member pairs.
  {
    std::vector<std::pair<std::size_t, std::size_t>> members;
    for (std::size_t c = 0; c < q.order(); ++c)
      for (std::size_t i = 0; i < q.cosets()[c].size(); ++i) members.emplace_back(c, i);
    const std::size_t n = members.size();
    std::string detail;
    auto check_pair = [&](std::size_t p, std::size_t r) {
      const auto [cx, ix] = members[p];
      const auto [cy, iy] = members[r];
      const auto product = q.cosets()[cx][ix] * q.cosets()[cy][iy];
      const auto located = q.locate(product);
      if (!located) {
        detail = "product " + product.format() + " lies in no coset";
        return false;
      }
      const auto reps = q.locate(q.representative(cx) * q.representative(cy));
      if (!reps || *reps != *located) {
        detail = "cosets " + std::to_string(cx) + " and " + std::to_string(cy) + " multiply inconsistently";
        return false;
      }
      return true;
    };
    bool ok = true;
    if (n * n <= (std::size_t{1} << 20)) {
      for (std::size_t p = 0; ok && p < n; ++p)
        for (std::size_t r = 0; ok && r < n; ++r) ok = check_pair(p, r);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int k = 0; ok && k < (1 << 16); ++k) ok = check_pair(pick(rng), pick(rng));
    }
    prefix.push_back(make_check("quotient-well-defined", ok, detail));
  }
  if (!all_passed(prefix)) return prefix;
  return wreath_checks(
      q.order(), [&](std::size_t x, std::size_t y) { return q.multiply(x, y); }, orbit_images, top_image, s, oracle,
      [&] { return q.table(); }, std::move(prefix));
}

// ---------------------------------------------------------------------------

SectionReport build_section(const FiniteGroup& g, const Witness& w, const BaseOrbit& orbit, const BaseGroup& base,
                            const SectionOptions& options) {
  SectionReport r;
  r.group_name = g.name();
  r.group_order = g.order();
  r.witness = w;
  r.orbit = orbit.units;
  r.base_order = base.order();
  const std::size_t m = std::size_t{1} << w.s;

  {
    bool ok = orbit.units.size() == m;
    for (std::size_t i = 0; ok && i < m; ++i) ok = orbit.units[i] == orbit_closed_form(g, w, i);
    r.checks.push_back(make_check("orbit-closed-form", ok));
  }
  {
    bool ok = true;
    for (const auto& u : orbit.units) ok = ok && unit_order(u) == 2;
    r.checks.push_back(make_check("orbit-orders", ok));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < orbit.units.size(); ++i)
      for (std::size_t j = i + 1; j < orbit.units.size(); ++j)
        ok = ok && orbit.units[i] * orbit.units[j] == orbit.units[j] * orbit.units[i];
    r.checks.push_back(make_check("pairwise-commuting", ok));
  }
  {
    std::unordered_set<Bitset, BitsetHash> distinct;
    bool ok = base.order() == (std::size_t{1} << m);
    for (std::size_t mask = 0; ok && mask < base.order(); ++mask) {
      const auto& u = base.elements[mask];
      ok = distinct.insert(u.support()).second &&
           u.support().count() == 1 + 2 * static_cast<std::size_t>(std::popcount(mask)) && (mask == 0 || !u.is_one());
    }
    r.checks.push_back(make_check("subset-products-nontrivial", ok,
                                  "|X| = " + std::to_string(base.order())));
  }
  if (options.oracle) {
    const auto closure = bfs_closure(orbit.units, options.cap);
    std::unordered_set<Bitset, BitsetHash> listed;
    for (const auto& u : base.elements) listed.insert(u.support());
    bool ok = closure.size() == base.order();
    for (const auto& u : closure) ok = ok && listed.contains(u.support());
    r.checks.push_back(make_check("oracle-base-closure", ok,
                                  "|closure(orbit)| = " + std::to_string(closure.size())));
  }

  const auto a_unit = NormalizedUnit::embed(g, w.a);
  std::vector<NormalizedUnit> seeds = orbit.units;
  seeds.push_back(a_unit);
  const auto ambient = bfs_closure(seeds, options.cap);
  const auto top_power = NormalizedUnit::embed(g, g.power(w.a, m));
  const NormalizedUnit kernel_seed[] = {top_power};
  const auto kernel = bfs_closure(kernel_seed, options.cap);
  r.ambient_order = ambient.size();
  r.kernel_order = kernel.size();

  {
    std::string detail;
    bool ok = true;
    for (const auto& x : base.elements)
      if (!(x * top_power == top_power * x)) {
        ok = false;
        detail = "a^(2^s) does not commute with " + x.format();
        break;
      }
    r.checks.push_back(make_check("kernel-central", ok, detail));
  }
  {
    const std::size_t expected_ambient = (std::size_t{1} << m) << w.k;
    const std::size_t expected_kernel = std::size_t{1} << (w.k - w.s);
    const bool ok = r.ambient_order == expected_ambient && r.kernel_order == expected_kernel;
    r.checks.push_back(make_check("section-orders", ok,
                                  "|<X,a>| = " + std::to_string(r.ambient_order) + " (expected " +
                                      std::to_string(expected_ambient) + "), |<a^(2^s)>| = " +
                                      std::to_string(r.kernel_order) + " (expected " +
                                      std::to_string(expected_kernel) + ")"));
  }

  const QuotientGroup q = build_quotient(ambient, kernel);
  r.quotient_order = q.order();
  std::vector<std::size_t> images;
  bool located = true;
  for (const auto& u : orbit.units) {
    auto c = q.locate(u);
    located = located && c.has_value();
    images.push_back(c.value_or(0));
  }
  const auto top = q.locate(a_unit);
  if (!located || !top) {
    r.checks.push_back(make_check("quotient-images", false, "orbit or a is missing from <X, a>"));
  } else {
    for (auto& c : verify_wreath(q, images, *top, w.s, options.oracle)) r.checks.push_back(std::move(c));
  }
  r.verdict = all_passed(r.checks);
  return r;
}

SectionReport run_construction(const FiniteGroup& g, const SectionOptions& options, const WitnessConstraints& fixed) {
  const auto hyp = check_hypotheses(g);
  if (!hyp.pass)
    throw ContractError("'" + g.name() + "' fails the hypotheses: " + std::string(to_string(hyp.failure)));
  const Witness w = select_witness(g, hyp, fixed);
  const BaseOrbit orbit = build_orbit(g, w);
  const BaseGroup base = verify_base_group(orbit);
  return build_section(g, w, orbit, base, options);
}

}  // namespace unitwreath
