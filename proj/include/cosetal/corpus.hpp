#pragma once

#include <string>
#include <vector>

#include "cosetal/cohomology.hpp"

// Exhaustive generators for small inputs. Everything here is brute force and
// meant for monoids of a handful of elements.
namespace cosetal::corpus {

/// All identity-preserving homomorphisms, lexicographic in the map.
/// Errors: TooLarge when |cod|^(|dom|-1) exceeds bound.
std::vector<MonoidHom> enumerate_homs(const FiniteMonoid& dom, const FiniteMonoid& cod,
                                      std::size_t bound = 1'000'000);

/// Every admissible E on N x H. The (n,1) classes are forced singletons and
/// each other column ranges over the set partitions of N; candidates are then
/// filtered by is_admissible.
std::vector<PairPartition> enumerate_admissible(const FiniteAbelianGroup& n, const FiniteMonoid& h);

/// One compatible action per equivalence class, the lexicographically first
/// table of each. Errors: TooLarge when |N|^(|N|(|H|-1)) exceeds bound.
std::vector<ActionTable> enumerate_compatible_actions(const FiniteAbelianGroup& n,
                                                      const FiniteMonoid& h,
                                                      const PairPartition& e,
                                                      std::size_t bound = 1'000'000);

/// Every (E, [phi]) over N and H.
std::vector<ExtensionData> enumerate_data(const FiniteAbelianGroup& n, const FiniteMonoid& h,
                                          std::size_t bound = 1'000'000);

struct Entry {
  std::string label;
  /// Position of the quotient in quotients().
  Index quotient_id = 0;
  ExtensionDiagram ext;
};

/// Z1, Z2, Z3.
std::vector<FiniteAbelianGroup> kernels(Index max_order = 3);
/// All monoids of order <= max_order up to isomorphism.
std::vector<FiniteMonoid> quotients(Index max_order = 3);
/// Candidate middle monoids up to order max_order: cyclic groups,
/// semilattices, their products and absorbing adjunctions, and every monoid
/// of order <= 4, deduplicated up to isomorphism.
std::vector<FiniteMonoid> middles(Index max_order = 6);

/// Every valid extension N -> G -> H with N in kernels(), H in quotients(),
/// G in middles(), together with every rho-constructed extension whose
/// carrier has at most max_total elements. Literal duplicates are dropped.
std::vector<Entry> census(Index max_total = 6);

}  // namespace cosetal::corpus
