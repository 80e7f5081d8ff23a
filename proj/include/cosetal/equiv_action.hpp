#pragma once

#include <vector>

#include "cosetal/extensions.hpp"
#include "cosetal/finite_algebra.hpp"

namespace cosetal {

/// An equivalence relation on N x H stored as one class id per pair.
///
/// The pair (n, h) lives at flat index n * h_size + h. Ids are renumbered on
/// construction by first appearance in flat order, so equal partitions have
/// equal class arrays.
class PairPartition {
 public:
  PairPartition() : n_size_(1), h_size_(1), class_of_{0}, num_classes_(1) {}
  /// Errors: SizeMismatch.
  PairPartition(Index n_size, Index h_size, std::span<const Index> labels);

  static PairPartition discrete(Index n_size, Index h_size);

  Index n_size() const noexcept { return n_size_; }
  Index h_size() const noexcept { return h_size_; }
  Index num_classes() const noexcept { return num_classes_; }
  Index flat(Index n, Index h) const noexcept { return n * h_size_ + h; }
  Index class_of(Index n, Index h) const noexcept { return class_of_[flat(n, h)]; }
  std::span<const Index> class_of() const noexcept { return class_of_; }
  bool related(Index n, Index h, Index n2, Index h2) const noexcept {
    return class_of(n, h) == class_of(n2, h2);
  }
  /// The (n, h) with the smallest flat index in the class.
  std::pair<Index, Index> representative(Index cls) const noexcept {
    const Index f = first_[cls];
    return {f / h_size_, f % h_size_};
  }

  bool operator==(const PairPartition& o) const noexcept {
    return n_size_ == o.n_size_ && h_size_ == o.h_size_ && class_of_ == o.class_of_;
  }

 private:
  Index n_size_;
  Index h_size_;
  std::vector<Index> class_of_;
  std::vector<Index> first_{0};
  Index num_classes_;
};

/// A map H x N -> N; entry (h, n) at h * n_size + n.
class ActionTable {
 public:
  ActionTable() : h_size_(1), n_size_(1), map_{0} {}
  /// Errors: SizeMismatch, OutOfRange.
  ActionTable(Index h_size, Index n_size, std::vector<Index> map);

  /// phi(h, n) = n.
  static ActionTable trivial(Index h_size, Index n_size);

  Index h_size() const noexcept { return h_size_; }
  Index n_size() const noexcept { return n_size_; }
  Index operator()(Index h, Index n) const noexcept { return map_[h * n_size_ + n]; }
  std::span<const Index> map() const noexcept { return map_; }
  std::vector<std::vector<Index>> rows() const;

  bool operator==(const ActionTable&) const = default;

 private:
  Index h_size_;
  Index n_size_;
  std::vector<Index> map_;
};

/// Result of an exhaustive axiom check. `condition` numbers the first
/// violated condition (1-based, in the order the check documents) and
/// `witness` holds the quantified values that break it.
struct ConditionCheck {
  bool holds = true;
  int condition = 0;
  std::vector<Index> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// An admissible E together with one compatible action representing [phi].
class ExtensionData {
 public:
  ExtensionData() = default;

  const FiniteAbelianGroup& kernel() const noexcept { return kernel_; }
  const FiniteMonoid& quotient() const noexcept { return quotient_; }
  const PairPartition& partition() const noexcept { return partition_; }
  const ActionTable& action() const noexcept { return action_; }

  /// [n, h] as a class id.
  Index cls(Index n, Index h) const noexcept { return partition_.class_of(n, h); }

  /// Literal equality of all fields; class-level equality is data_equivalent.
  bool operator==(const ExtensionData&) const = default;

 private:
  ExtensionData(FiniteAbelianGroup n, FiniteMonoid h, PairPartition e, ActionTable phi)
      : kernel_(std::move(n)),
        quotient_(std::move(h)),
        partition_(std::move(e)),
        action_(std::move(phi)) {}
  friend ExtensionData validate_data(const FiniteAbelianGroup&, const FiniteMonoid&,
                                     const PairPartition&, const ActionTable&);

  FiniteAbelianGroup kernel_;
  FiniteMonoid quotient_;
  PairPartition partition_;
  ActionTable action_;
};

/// Conditions, in order:
///   1. (n,1) ~ (n',1) implies n = n'
///   2. (n,h) ~ (n',h') implies h = h'
///   3. (n,h) ~ (n',h) implies (xn,h) ~ (xn',h)
///   4. (n,h) ~ (n',h) implies (n,hx) ~ (n',hx)
ConditionCheck is_admissible(const PairPartition& e, const FiniteAbelianGroup& n,
                             const FiniteMonoid& h);

/// Conditions, in order, for all quantified values:
///   1. (n1,h) ~ (n2,h) implies [n1 phi(h,n), h] = [n2 phi(h,n), h]
///   2. (n,h') ~ (n',h') implies [phi(h,n), hh'] = [phi(h,n'), hh']
///   3. [phi(h,nn'), h] = [phi(h,n) phi(h,n'), h]
///   4. [phi(hh',n), hh'] = [phi(h,phi(h',n)), hh']
///   5. [phi(h,1), h] = [1, h]
///   6. [phi(1,n), 1] = [n, 1]
ConditionCheck is_compatible(const ActionTable& phi, const PairPartition& e,
                             const FiniteAbelianGroup& n, const FiniteMonoid& h);

/// Errors: SizeMismatch, IllFormed naming the failed admissibility or
/// compatibility condition.
ExtensionData validate_data(const FiniteAbelianGroup& n, const FiniteMonoid& h,
                            const PairPartition& e, const ActionTable& phi);

/// x * [n, h] = [xn, h]
Index star_left(const PairPartition& e, const FiniteAbelianGroup& n, Index x, Index cls);
/// [n, h] * x = [n, hx]
Index star_right(const PairPartition& e, const FiniteMonoid& h, Index cls, Index x);

/// E_s: (n,h) ~ (n',h') iff k(n)s(h) = k(n')s(h'). Certified admissible.
/// Errors: IllFormed.
PairPartition extract_equivalence(const KernelDiagram& d, const Section& s);

/// phi(h,n) = the smallest m with k(m)s(h) = s(h)k(n). Certified compatible
/// with extract_equivalence(d, s). Errors: NotCosetal, IllFormed.
ActionTable extract_action(const KernelDiagram& d, const Section& s);

/// Both of the above bundled into certified data.
ExtensionData extract_data(const KernelDiagram& d, const Section& s);

/// (phi(h,n),h) ~ (phi'(h,n),h) for all h, n.
bool actions_equivalent(const ActionTable& phi, const ActionTable& phi_prime,
                        const PairPartition& e);

/// Same N, H and E, with class-equivalent actions.
bool data_equivalent(const ExtensionData& a, const ExtensionData& b);

/// (E, [a]) <= (E', [a']): (a(h,n),h) ~E' (a'(h,n),h) for all h, n, and
/// E refines E'. Errors: DataMismatch when N or H differ.
bool compare_data(const ExtensionData& d, const ExtensionData& d_prime);

}  // namespace cosetal
