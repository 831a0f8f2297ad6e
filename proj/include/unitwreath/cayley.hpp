#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace unitwreath {

// Dense multiplication table of a finite group on elements 0..order-1 with
// the identity at 0.
class CayleyTable {
 public:
  CayleyTable() = default;
  CayleyTable(std::size_t order, std::vector<std::uint32_t> products)
      : order_(order), products_(std::move(products)) {}

  std::size_t order() const noexcept { return order_; }
  std::uint32_t operator()(std::size_t x, std::size_t y) const noexcept {
    return products_[x * order_ + y];
  }
  const std::vector<std::uint32_t>& data() const noexcept { return products_; }

  std::uint32_t element_order(std::size_t x) const;
  std::uint32_t inverse(std::size_t x) const;
  bool is_abelian() const;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> products_;
};

}  // namespace unitwreath
