#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cosetal/equiv_action.hpp"
#include "cosetal/extensions.hpp"

namespace cosetal {

/// A map H x H -> N; entry (h, h') at h * h_size + h'.
class FactorTable {
 public:
  FactorTable() : h_size_(1), map_{0} {}
  /// Errors: SizeMismatch.
  FactorTable(Index h_size, std::vector<Index> map);

  /// `value` in every cell.
  static FactorTable constant(Index h_size, Index value);

  Index h_size() const noexcept { return h_size_; }
  Index operator()(Index h, Index hp) const noexcept { return map_[h * h_size_ + hp]; }
  std::span<const Index> map() const noexcept { return map_; }
  std::vector<std::vector<Index>> rows() const;

  auto operator<=>(const FactorTable&) const = default;

 private:
  Index h_size_;
  std::vector<Index> map_;
};

/// Conditions: 1. g(x,1) = 1 = g(1,x), witness (x);
/// 2. (g(x,y)g(xy,z), xyz) ~ (phi(x,g(y,z))g(x,yz), xyz), witness (x,y,z).
ConditionCheck is_factor_set(const FactorTable& g, const ExtensionData& data);

/// g_s(h,h') = smallest n with k(n)s(hh') = s(h)s(h'), with unit row and
/// column set to the identity. Certified against extract_data(d, s).
/// Errors: NotCosetal, IllFormed.
FactorTable extract_factor_set(const KernelDiagram& d, const Section& s);

/// The extension N -> (N x H)/E -> H with [n,h][n',h'] = [n phi(h,n') g(h,h'), hh']
/// on E-classes, k(n) = [n,1] and e([n,h]) = h. Element i of the carrier is
/// E-class i. Errors: IllFormed.
ExtensionDiagram build_extension(const ExtensionData& data, const FactorTable& g);

/// (g(h,h'),hh') ~ (g'(h,h'),hh') for all h, h'.
bool factor_sets_equivalent(const FactorTable& g, const FactorTable& g_prime,
                            const ExtensionData& data);

/// Pointwise product and inverse in N.
FactorTable multiply(const FactorTable& g, const FactorTable& g_prime,
                     const FiniteAbelianGroup& n);
FactorTable inverse(const FactorTable& g, const FiniteAbelianGroup& n);

/// delta t(h,h') = phi(h,t(h')) t(hh')^-1 t(h), with the unit row and column
/// set to the identity of N (there phi(h,1) is only E-equivalent to 1).
/// Errors: SizeMismatch, IllFormed (t(1) != 1 or result not a factor set).
FactorTable inner_factor_set(std::span<const Index> t, const ExtensionData& data);

/// All identity-preserving t: H -> N, lexicographic.
std::vector<std::vector<Index>> enumerate_translations(const ExtensionData& data,
                                                       std::size_t bound = 1'000'000);

/// F*(H, N, E, [phi]): every unit-normalized factor set, lexicographic order
/// of the table, under pointwise multiplication.
class FactorSetGroup {
 public:
  const ExtensionData& data() const noexcept { return data_; }
  const std::vector<FactorTable>& elements() const noexcept { return elements_; }
  Index size() const noexcept { return elements_.size(); }
  Index identity() const noexcept { return identity_; }
  /// Position of a table in elements(), or kNone.
  Index index_of(const FactorTable& g) const;
  Index multiply(Index a, Index b) const;

 private:
  friend FactorSetGroup enumerate_factor_sets(const ExtensionData&, std::size_t);

  ExtensionData data_;
  std::vector<FactorTable> elements_;
  std::map<FactorTable, Index> index_;
  Index identity_ = 0;
};

/// Errors: TooLarge when |N|^((|H|-1)^2) exceeds bound; IllFormed if the
/// closure certificates fail.
FactorSetGroup enumerate_factor_sets(const ExtensionData& data, std::size_t bound = 1'000'000);

/// IF*: the distinct delta t, lexicographic.
std::vector<FactorTable> enumerate_inner(const ExtensionData& data, std::size_t bound = 1'000'000);

/// Invariant factors d1 | d2 | ... of a finite abelian group given by its
/// Cayley table. The trivial group has none.
std::vector<Index> invariant_factors(std::span<const Index> cayley, Index order, Index identity);

/// H^2(H, N, E, [phi]): F* modulo "g' ~F delta t . g for some t".
///
/// Class 0 is the class of the constant-identity table, which is also its
/// representative; other classes are numbered by first appearance in F*
/// and represented by their first member.
class CohomologyGroup {
 public:
  const ExtensionData& data() const noexcept { return factor_sets_.data(); }
  const FactorSetGroup& factor_sets() const noexcept { return factor_sets_; }
  const std::vector<FactorTable>& inner() const noexcept { return inner_; }

  Index order() const noexcept { return representatives_.size(); }
  Index identity() const noexcept { return 0; }
  const FactorTable& representative(Index cls) const { return factor_sets_.elements()[representatives_[cls]]; }
  /// Class of F* element i.
  Index class_of_element(Index i) const { return class_of_[i]; }
  /// Class of an arbitrary factor set for this data. Errors: IllFormed.
  Index class_of(const FactorTable& g) const;
  Index mul(Index a, Index b) const { return cayley_[a * order() + b]; }
  std::span<const Index> cayley() const noexcept { return cayley_; }
  const std::vector<Index>& invariant_factors() const noexcept { return invariant_factors_; }

 private:
  friend CohomologyGroup cohomology_group(const ExtensionData&, std::size_t);

  FactorSetGroup factor_sets_;
  std::vector<FactorTable> inner_;
  std::vector<Index> class_of_;
  std::vector<Index> representatives_;
  std::vector<Index> cayley_;
  std::vector<Index> invariant_factors_;
};

/// Errors: TooLarge.
CohomologyGroup cohomology_group(const ExtensionData& data, std::size_t bound = 1'000'000);

/// A bijective homomorphism f: G -> G' with f k = k' and e' f = e.
/// Errors: DataMismatch when N or H differ.
std::optional<std::vector<Index>> extensions_isomorphic(const KernelDiagram& a,
                                                        const KernelDiagram& b);

struct ZetaResult {
  ExtensionData data;
  FactorTable factor_set;
  Index class_id = 0;
};

/// Extracts data and factor set with the first section and locates the class
/// in `group`. Errors: DataMismatch when the extracted data is not
/// class-equal to group.data(); NotCosetal.
ZetaResult zeta(const KernelDiagram& d, const CohomologyGroup& group);

struct ZetaWithGroup {
  ZetaResult result;
  CohomologyGroup group;
};

/// Computes the cohomology group of the extension's own data.
ZetaWithGroup zeta(const KernelDiagram& d, std::size_t bound = 1'000'000);

/// rho(g_a . g_b) over the data of `a`. Errors: DataMismatch, NotCosetal.
ExtensionDiagram baer_sum(const KernelDiagram& a, const KernelDiagram& b);

struct ClassRepresentative {
  Index class_id;
  FactorTable factor_set;
  ExtensionDiagram extension;
};

/// One constructed extension per cohomology class; certified pairwise
/// non-isomorphic with zeta(rep) == class. Errors: TooLarge, IllFormed.
std::vector<ClassRepresentative> classify(const CohomologyGroup& group);
std::vector<ClassRepresentative> classify(const ExtensionData& data, std::size_t bound = 1'000'000);

}  // namespace cosetal
