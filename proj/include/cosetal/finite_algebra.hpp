#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cosetal/error.hpp"

namespace cosetal {

/// A monoid on the elements 0..size-1 given by its full multiplication table.
///
/// Values of this type are only produced by validate_monoid (directly or via
/// a builder), so every instance is closed, associative and has a two-sided
/// identity. The identity index is recorded explicitly and need not be 0.
class FiniteMonoid {
 public:
  /// The trivial monoid.
  FiniteMonoid() : size_(1), table_{0}, identity_(0) {}

  Index size() const noexcept { return size_; }
  Index identity() const noexcept { return identity_; }
  Index mul(Index x, Index y) const noexcept { return table_[x * size_ + y]; }

  /// Row-major, table()[x * size() + y] == mul(x, y).
  std::span<const Index> table() const noexcept { return table_; }
  std::vector<std::vector<Index>> rows() const;

  bool is_commutative() const noexcept;
  bool is_idempotent(Index x) const noexcept { return mul(x, x) == x; }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  FiniteMonoid(Index size, std::vector<Index> table, Index identity)
      : size_(size), table_(std::move(table)), identity_(identity) {}
  friend FiniteMonoid validate_monoid(Index, std::span<const Index>, Index);

  Index size_;
  std::vector<Index> table_;
  Index identity_;
};

/// A commutative FiniteMonoid in which every element is invertible.
class FiniteAbelianGroup {
 public:
  /// The trivial group.
  FiniteAbelianGroup() : inverse_{0} {}

  const FiniteMonoid& monoid() const noexcept { return base_; }
  Index size() const noexcept { return base_.size(); }
  Index identity() const noexcept { return base_.identity(); }
  Index mul(Index x, Index y) const noexcept { return base_.mul(x, y); }
  Index inverse(Index x) const noexcept { return inverse_[x]; }

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  FiniteAbelianGroup(FiniteMonoid base, std::vector<Index> inverse)
      : base_(std::move(base)), inverse_(std::move(inverse)) {}
  friend FiniteAbelianGroup validate_abelian_group(const FiniteMonoid&);

  FiniteMonoid base_;
  std::vector<Index> inverse_;
};

/// A certified monoid homomorphism between finite monoids.
class MonoidHom {
 public:
  MonoidHom() : map_{0} {}

  const FiniteMonoid& domain() const noexcept { return domain_; }
  const FiniteMonoid& codomain() const noexcept { return codomain_; }
  Index operator()(Index x) const noexcept { return map_[x]; }
  std::span<const Index> map() const noexcept { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  /// Sorted, duplicate-free image.
  std::vector<Index> image() const;
  /// Elements of the domain mapped to y, ascending.
  std::vector<Index> preimage(Index y) const;

  bool operator==(const MonoidHom&) const = default;

 private:
  MonoidHom(FiniteMonoid domain, FiniteMonoid codomain, std::vector<Index> map)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {}
  friend MonoidHom validate_hom(std::span<const Index>, const FiniteMonoid&,
                                const FiniteMonoid&);

  FiniteMonoid domain_;
  FiniteMonoid codomain_;
  std::vector<Index> map_;
};

/// A partition of a monoid compatible with multiplication on both sides.
/// Class ids are contiguous and numbered by smallest member, so the class of
/// element 0 is always 0.
class Congruence {
 public:
  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  std::span<const Index> class_of() const noexcept { return class_of_; }
  Index class_of(Index x) const noexcept { return class_of_[x]; }
  Index num_classes() const noexcept { return num_classes_; }
  /// Members of each class, ascending; classes ordered by smallest member.
  std::vector<std::vector<Index>> classes() const;

  bool operator==(const Congruence&) const = default;

 private:
  Congruence(FiniteMonoid monoid, std::vector<Index> class_of);
  friend Congruence congruence_closure(const FiniteMonoid&,
                                       std::span<const std::pair<Index, Index>>);
  friend Congruence validate_congruence(const FiniteMonoid&, std::span<const Index>);

  FiniteMonoid monoid_;
  std::vector<Index> class_of_;
  Index num_classes_ = 0;
};

struct Quotient {
  FiniteMonoid monoid;
  MonoidHom projection;
};

// Validation. Each either returns a certified value or throws Error naming the
// first failing element(s).

/// `table` is row-major with size*size entries.
/// Errors: SizeMismatch, NotClosed(x,y), BadIdentity(x), NotAssociative(x,y,z).
FiniteMonoid validate_monoid(Index size, std::span<const Index> table, Index identity);
FiniteMonoid validate_monoid(const std::vector<std::vector<Index>>& rows, Index identity);

/// Errors: NotCommutative(x,y), NoInverse(x).
FiniteAbelianGroup validate_abelian_group(const FiniteMonoid& m);

/// Errors: SizeMismatch, OutOfRange(x), IdentityNotPreserved, NotHom(x,y).
MonoidHom validate_hom(std::span<const Index> map, const FiniteMonoid& domain,
                       const FiniteMonoid& codomain);

/// Checks an arbitrary labelling is a congruence; ids are renumbered.
/// Errors: SizeMismatch, IllFormed(a,b,x) for a failed translation.
Congruence validate_congruence(const FiniteMonoid& m, std::span<const Index> labels);

MonoidHom identity_hom(const FiniteMonoid& m);
MonoidHom compose(const MonoidHom& outer, const MonoidHom& inner);

/// Renumbers arbitrary labels so ids appear in order 0,1,2,... by first
/// occurrence. Two labellings describe the same partition iff their
/// normalizations are equal.
std::vector<Index> normalize_partition(std::span<const Index> labels);

/// The kernel partition {x ~ y iff f(x) == f(y)}, normalized.
std::vector<Index> kernel_partition(const MonoidHom& f);

/// Smallest congruence containing the seed pairs. Errors: OutOfRange.
Congruence congruence_closure(const FiniteMonoid& m,
                              std::span<const std::pair<Index, Index>> seeds);

/// The monoid of classes (class i is element i, represented by its smallest
/// member) together with the projection m -> m/c.
Quotient quotient_monoid(const FiniteMonoid& m, const Congruence& c);

// Builders.

/// Z/n under addition, identity 0.
FiniteMonoid cyclic_group(Index n);
/// Chain 0 > 1 > ... > n-1 under meet; 0 is the identity and n-1 absorbs.
FiniteMonoid meet_semilattice(Index n);
/// Element (i, j) has index i * b.size() + j.
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);
MonoidHom product_projection_first(const FiniteMonoid& a, const FiniteMonoid& b);
MonoidHom product_projection_second(const FiniteMonoid& a, const FiniteMonoid& b);
/// m with a new absorbing element at index m.size().
FiniteMonoid adjoin_absorbing(const FiniteMonoid& m);

/// Brute-force search for an identity-preserving bijective homomorphism.
std::optional<std::vector<Index>> find_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b);

/// All monoids of the given order up to isomorphism, identity 0, in
/// lexicographic table order. Errors: TooLarge for size > 4.
std::vector<FiniteMonoid> enumerate_monoids(Index size);

}  // namespace cosetal
