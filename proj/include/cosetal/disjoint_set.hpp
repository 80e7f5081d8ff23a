#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace cosetal {

/// Union-find over 0..n-1 with path halving and union by size.
class DisjointSet {
 public:
  DisjointSet() = default;
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

  /// Class ids numbered by first appearance in index order.
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> root_label(parent_.size(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (root_label[r] == static_cast<std::size_t>(-1)) root_label[r] = next++;
      out[i] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace cosetal
