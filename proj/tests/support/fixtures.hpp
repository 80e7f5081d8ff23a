#pragma once

#include <vector>

#include "cosetal/cohomology.hpp"

// Small named extensions shared by the unit and acceptance tests.
namespace fixtures {

using namespace cosetal;

inline FiniteAbelianGroup group(Index n) { return validate_abelian_group(cyclic_group(n)); }

/// {1, h} with identity 0 and h = 1.
inline FiniteMonoid semilattice2() { return meet_semilattice(2); }

/// Z2 -> Z2 x {1,h} -> {1,h}; element (n, x) is 2n + x.
inline ExtensionDiagram direct_product_ext() {
  const FiniteAbelianGroup n = group(2);
  const FiniteMonoid h = semilattice2();
  const FiniteMonoid g = direct_product(n.monoid(), h);
  const std::vector<Index> k{0, 2};
  return validate_extension(n, g, h, validate_hom(k, n.monoid(), g),
                            product_projection_second(n.monoid(), h));
}

/// Z2 -> Z2 + {inf} -> {1,h}; inf is element 2.
inline ExtensionDiagram absorbing_ext() {
  const FiniteAbelianGroup n = group(2);
  const FiniteMonoid h = semilattice2();
  const FiniteMonoid g = adjoin_absorbing(n.monoid());
  const std::vector<Index> k{0, 1};
  const std::vector<Index> e{0, 0, 1};
  return validate_extension(n, g, h, validate_hom(k, n.monoid(), g), validate_hom(e, g, h));
}

/// Z2 -> Z4 -> Z2 with k(1) = 2 and e the reduction mod 2.
inline ExtensionDiagram z4_ext() {
  const FiniteAbelianGroup n = group(2);
  const FiniteMonoid g = cyclic_group(4);
  const FiniteMonoid h = cyclic_group(2);
  const std::vector<Index> k{0, 2};
  const std::vector<Index> e{0, 1, 0, 1};
  return validate_extension(n, g, h, validate_hom(k, n.monoid(), g), validate_hom(e, g, h));
}

/// Z2 -> Z2 x Z2 -> Z2, split; (a, b) is 2a + b, k(n) = (n, 0).
inline ExtensionDiagram z2z2_ext() {
  const FiniteAbelianGroup n = group(2);
  const FiniteMonoid h = cyclic_group(2);
  const FiniteMonoid g = direct_product(n.monoid(), h);
  const std::vector<Index> k{0, 2};
  return validate_extension(n, g, h, validate_hom(k, n.monoid(), g),
                            product_projection_second(n.monoid(), h));
}

/// G = {1, s, z}, s s = z, z absorbing, over {1,h} with trivial kernel.
/// k is a kernel of e but e(s) = e(z) with s != z, so no coset covers the
/// fiber; the cokernel condition fails as well.
inline KernelDiagram non_cosetal_diagram() {
  const FiniteMonoid g = validate_monoid({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
  const FiniteMonoid h = semilattice2();
  const FiniteAbelianGroup n = group(1);
  const std::vector<Index> k{0};
  const std::vector<Index> e{0, 1, 1};
  return validate_kernel_diagram(n, g, h, validate_hom(k, n.monoid(), g), validate_hom(e, g, h));
}

/// Z2 x {1,h} pairs: (n,1) singletons, (0,h) ~ (1,h).
inline PairPartition coarse_at_h() {
  const std::vector<Index> labels{0, 2, 1, 2};
  return PairPartition(2, 2, labels);
}

inline ExtensionData discrete_trivial(Index n, Index h) {
  return validate_data(group(n), cyclic_group(h), PairPartition::discrete(n, h),
                       ActionTable::trivial(h, n));
}

inline ExtensionData coarse_data() {
  return validate_data(group(2), semilattice2(), coarse_at_h(), ActionTable::trivial(2, 2));
}

inline FactorTable table(Index h_size, std::vector<Index> map) {
  return FactorTable(h_size, std::move(map));
}

}  // namespace fixtures
