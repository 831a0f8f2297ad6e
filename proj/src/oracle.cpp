#include "unitwreath/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "unitwreath/errors.hpp"

namespace unitwreath {

std::vector<NormalizedUnit> bfs_closure(std::span<const NormalizedUnit> seeds, std::size_t cap) {
  if (seeds.empty()) return {};
  const FiniteGroup& g = seeds.front().group();
  std::unordered_set<NormalizedUnit, NormalizedUnitHash> seen;
  std::deque<NormalizedUnit> queue;
  const auto one = NormalizedUnit::one(g);
  seen.insert(one);
  queue.push_back(one);
  std::vector<NormalizedUnit> out;
  while (!queue.empty()) {
    NormalizedUnit x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : seeds) {
      NormalizedUnit y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceededError("unit closure exceeded the cap of " + std::to_string(cap) + " elements");
        queue.push_back(std::move(y));
      }
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(),
            [](const NormalizedUnit& a, const NormalizedUnit& b) { return support_less(a.support(), b.support()); });
  return out;
}

// ---------------------------------------------------------------------------

WreathModel::WreathModel(int s) : s_(s), m_(std::size_t{1} << s) {
  if (s < 0 || s > 3) throw ContractError("reference_wreath supports 0 <= s <= 3, got " + std::to_string(s));
}

std::uint32_t WreathModel::multiply(std::uint32_t x, std::uint32_t y) const noexcept {
  const std::uint32_t mask = (1u << m_) - 1;
  const std::uint32_t v1 = base_vector(x), v2 = base_vector(y);
  const std::uint32_t t1 = shift(x), t2 = shift(y);
  // rot^{t1}: coordinate j goes to j - t1, a right rotation of the bit vector.
  const std::uint32_t rotated = t1 == 0 ? v2 : ((v2 >> t1) | (v2 << (m_ - t1))) & mask;
  return element(v1 ^ rotated, static_cast<std::uint32_t>((t1 + t2) % m_));
}

CayleyTable WreathModel::table() const {
  const std::size_t n = order();
  std::vector<std::uint32_t> products(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) products[x * n + y] = multiply(x, y);
  return CayleyTable(n, std::move(products));
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint32_t kUnmapped = UINT32_MAX;

std::vector<std::uint32_t> closure_of(const CayleyTable& t, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> seen(t.order(), false);
  std::vector<std::uint32_t> out{0};
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto g : gens) {
      const auto y = t(out[k], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

// Greedy generating set, preferring elements of large order.
std::vector<std::uint32_t> generating_set(const CayleyTable& t, const std::vector<std::uint32_t>& orders) {
  std::vector<std::uint32_t> by_order(t.order());
  for (std::uint32_t x = 0; x < t.order(); ++x) by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](auto x, auto y) { return orders[x] > orders[y]; });
  std::vector<std::uint32_t> gens;
  std::vector<bool> covered(t.order(), false);
  covered[0] = true;
  std::size_t covered_count = 1;
  for (auto x : by_order) {
    if (covered_count == t.order()) break;
    if (covered[x]) continue;
    gens.push_back(x);
    const auto sub = closure_of(t, gens);
    std::fill(covered.begin(), covered.end(), false);
    for (auto y : sub) covered[y] = true;
    covered_count = sub.size();
  }
  return gens;
}

struct IsoSearch {
  const CayleyTable& a;
  const CayleyTable& b;
  std::vector<std::uint32_t> gens;
  std::vector<std::vector<std::uint32_t>> candidates;

  // Extends phi (defined on the subgroup generated by gens[0..depth)) by
  // gens[depth] -> image. Returns false on any conflict.
  bool extend(std::vector<std::uint32_t>& phi, std::vector<bool>& used, std::size_t depth) const {
    std::vector<std::uint32_t> domain;
    for (std::uint32_t x = 0; x < a.order(); ++x)
      if (phi[x] != kUnmapped) domain.push_back(x);
    for (std::size_t k = 0; k < domain.size(); ++k) {
      const auto x = domain[k];
      for (std::size_t i = 0; i <= depth; ++i) {
        const auto y = a(x, gens[i]);
        const auto image = b(phi[x], phi[gens[i]]);
        if (phi[y] == kUnmapped) {
          if (used[image]) return false;
          phi[y] = image;
          used[image] = true;
          domain.push_back(y);
        } else if (phi[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(const std::vector<std::uint32_t>& phi, const std::vector<bool>& used, std::size_t depth) const {
    if (depth == gens.size()) return true;
    const auto g = gens[depth];
    if (phi[g] != kUnmapped) {
      // Already determined by earlier generators; recheck relations with it.
      auto next_phi = phi;
      auto next_used = used;
      return extend(next_phi, next_used, depth) && search(next_phi, next_used, depth + 1);
    }
    for (auto image : candidates[depth]) {
      if (used[image]) continue;
      auto next_phi = phi;
      auto next_used = used;
      next_phi[g] = image;
      next_used[image] = true;
      if (extend(next_phi, next_used, depth) && search(next_phi, next_used, depth + 1)) return true;
    }
    return false;
  }
};

std::vector<std::uint32_t> all_orders(const CayleyTable& t) {
  std::vector<std::uint32_t> out(t.order());
  for (std::uint32_t x = 0; x < t.order(); ++x) out[x] = t.element_order(x);
  return out;
}

}  // namespace

bool isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) return false;
  const auto orders_a = all_orders(a);
  const auto orders_b = all_orders(b);
  auto hist_a = orders_a, hist_b = orders_b;
  std::sort(hist_a.begin(), hist_a.end());
  std::sort(hist_b.begin(), hist_b.end());
  if (hist_a != hist_b) return false;
  if (a.is_abelian() != b.is_abelian()) return false;

  IsoSearch s{a, b, generating_set(a, orders_a), {}};
  for (auto g : s.gens) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t y = 0; y < b.order(); ++y)
      if (orders_b[y] == orders_a[g]) c.push_back(y);
    s.candidates.push_back(std::move(c));
  }
  std::vector<std::uint32_t> phi(a.order(), kUnmapped);
  std::vector<bool> used(b.order(), false);
  phi[0] = 0;
  used[0] = true;
  return s.search(phi, used, 0);
}

bool isomorphic_small(const CayleyTable& q, const WreathModel& w) {
  if (q.order() != w.order()) return false;
  if (q.order() > kSmallIsomorphismLimit)
    throw ContractError("isomorphic_small is limited to order " + std::to_string(kSmallIsomorphismLimit));
  return isomorphic(q, w.table());
}

}  // namespace unitwreath
