#pragma once

// Brute-force machinery the construction is checked against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "unitwreath/cayley.hpp"
#include "unitwreath/grpalg.hpp"

namespace unitwreath {

constexpr std::size_t kDefaultClosureCap = 1u << 16;

// Subgroup of V(KG) generated by seeds, sorted by support_less (1 first).
// Throws CapExceededError when more than cap elements are reached.
std::vector<NormalizedUnit> bfs_closure(std::span<const NormalizedUnit> seeds,
                                        std::size_t cap = kDefaultClosureCap);

// Regular wreath product C2 wr C_m with m = 2^s. Element (v, t) has index
// t * 2^m + v; v is a bit vector over the m coordinates.
// (v1, t1)(v2, t2) = (v1 + rot^{t1}(v2), t1 + t2 mod m), where rot^t sends
// coordinate j to j - t, so that tau^{-1} e_j tau = e_{j+1}.
class WreathModel {
 public:
  explicit WreathModel(int s);

  int s() const noexcept { return s_; }
  std::size_t width() const noexcept { return m_; }
  std::size_t order() const noexcept { return (std::size_t{1} << m_) * m_; }

  std::uint32_t element(std::uint32_t v, std::uint32_t t) const noexcept {
    return static_cast<std::uint32_t>(t * (std::size_t{1} << m_) + v);
  }
  std::uint32_t base_vector(std::uint32_t x) const noexcept { return x & ((1u << m_) - 1); }
  std::uint32_t shift(std::uint32_t x) const noexcept { return x >> m_; }

  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const noexcept;
  // e_j = (unit vector at j, 0)
  std::uint32_t base_generator(std::size_t j) const noexcept { return element(1u << j, 0); }
  // tau = (0, 1)
  std::uint32_t top_generator() const noexcept { return element(0, m_ > 1 ? 1 : 0); }

  CayleyTable table() const;

 private:
  int s_;
  std::size_t m_;
};

inline WreathModel reference_wreath(int s) { return WreathModel(s); }

// True iff a bijective homomorphism A -> B exists. Generator images are
// searched by backtracking; each partial assignment is extended over the
// generated subgroup and rejected on the first inconsistency.
bool isomorphic(const CayleyTable& a, const CayleyTable& b);

// Largest order the small-group search is meant for.
constexpr std::size_t kSmallIsomorphismLimit = 64;

// isomorphic() restricted to |Q| = |W| <= kSmallIsomorphismLimit; mismatched
// orders return false and larger tables throw ContractError.
bool isomorphic_small(const CayleyTable& q, const WreathModel& w);

}  // namespace unitwreath
