#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cosetal/finite_algebra.hpp"

namespace cosetal {

/// A diagram N --k--> G --e--> H in which N is an abelian group, k is
/// injective with image exactly e^-1(1), and e is surjective.
///
/// This is the "k is the kernel of e" half of an extension. Split extensions
/// and the cosetal predicate only need this much; ExtensionDiagram adds the
/// cokernel certificate.
class KernelDiagram {
 public:
  KernelDiagram() = default;

  const FiniteAbelianGroup& kernel() const noexcept { return kernel_; }
  const FiniteMonoid& total() const noexcept { return total_; }
  const FiniteMonoid& quotient() const noexcept { return quotient_; }
  const MonoidHom& k() const noexcept { return k_; }
  const MonoidHom& e() const noexcept { return e_; }

  /// e^-1(h), ascending.
  const std::vector<Index>& fiber(Index h) const { return fibers_[h]; }

  /// The N-index n with k(n) == g, or kNone when g is outside the image.
  Index kernel_preimage(Index g) const noexcept { return k_inverse_[g]; }

  /// k(n) * g
  Index translate(Index n, Index g) const noexcept { return total_.mul(k_(n), g); }

  bool operator==(const KernelDiagram& other) const {
    return kernel_ == other.kernel_ && total_ == other.total_ &&
           quotient_ == other.quotient_ && k_ == other.k_ && e_ == other.e_;
  }

 protected:
  KernelDiagram(FiniteAbelianGroup n, FiniteMonoid g, FiniteMonoid h, MonoidHom k, MonoidHom e);

 private:
  friend KernelDiagram validate_kernel_diagram(const FiniteAbelianGroup&, const FiniteMonoid&,
                                               const FiniteMonoid&, const MonoidHom&,
                                               const MonoidHom&);

  FiniteAbelianGroup kernel_;
  FiniteMonoid total_;
  FiniteMonoid quotient_;
  MonoidHom k_;
  MonoidHom e_;
  std::vector<std::vector<Index>> fibers_{{0}};
  std::vector<Index> k_inverse_{0};
};

/// A KernelDiagram in which e is also the cokernel of k: the congruence on G
/// generated by {(k(n), 1)} has exactly the fibers of e as its classes.
class ExtensionDiagram : public KernelDiagram {
 public:
  ExtensionDiagram() = default;

 private:
  explicit ExtensionDiagram(KernelDiagram base) : KernelDiagram(std::move(base)) {}
  friend ExtensionDiagram validate_extension(const FiniteAbelianGroup&, const FiniteMonoid&,
                                             const FiniteMonoid&, const MonoidHom&,
                                             const MonoidHom&);
};

/// A kernel diagram with a homomorphic splitting s of e.
struct SplitExtensionDiagram {
  KernelDiagram base;
  MonoidHom splitting;
};

/// An identity-preserving set map s: H -> G with e(s(h)) = h.
class Section {
 public:
  Index operator()(Index h) const noexcept { return map_[h]; }
  std::span<const Index> map() const noexcept { return map_; }
  bool operator==(const Section&) const = default;

 private:
  explicit Section(std::vector<Index> map) : map_(std::move(map)) {}
  friend Section validate_section(const KernelDiagram&, std::span<const Index>);
  friend std::vector<Section> enumerate_sections(const KernelDiagram&, std::size_t);
  friend Section first_section(const KernelDiagram&);

  std::vector<Index> map_;
};

/// Errors: SizeMismatch/DataMismatch for mistyped homs, KNotInjective,
/// KNotKernel, ENotSurjective.
KernelDiagram validate_kernel_diagram(const FiniteAbelianGroup& n, const FiniteMonoid& g,
                                      const FiniteMonoid& h, const MonoidHom& k,
                                      const MonoidHom& e);

/// validate_kernel_diagram plus ENotCokernel.
ExtensionDiagram validate_extension(const FiniteAbelianGroup& n, const FiniteMonoid& g,
                                    const FiniteMonoid& h, const MonoidHom& k,
                                    const MonoidHom& e);

/// True iff the congruence generated by {(k(n), 1)} equals the kernel
/// partition of e.
bool is_cokernel(const KernelDiagram& d);

/// Errors: DataMismatch (homs do not match the diagram), NotSection.
SplitExtensionDiagram validate_split_extension(const KernelDiagram& base, const MonoidHom& s);

struct CosetalCheck {
  bool holds = false;
  /// witness[g * |G| + g'] is the smallest n with k(n) g' = g when
  /// e(g) = e(g'), and kNone otherwise (including pairs with no witness).
  std::vector<Index> witness;
  /// First pair (g, g') in lexicographic order lacking a witness.
  std::optional<std::pair<Index, Index>> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

CosetalCheck is_cosetal(const KernelDiagram& d);

struct CosetStructure {
  /// Distinct cosets Ng, members ascending, ordered by smallest member.
  std::vector<std::vector<Index>> cosets;
  /// coset_of[g] indexes `cosets`.
  std::vector<Index> coset_of;
  /// Ng * Ng' = N(gg'); coset i is element i.
  FiniteMonoid monoid;
  /// Ng -> e(g), an isomorphism onto H.
  MonoidHom to_quotient;
};

/// Errors: NotCosetal.
CosetStructure cosets(const KernelDiagram& d);

/// Errors: NotSection.
Section validate_section(const KernelDiagram& d, std::span<const Index> map);

/// The lexicographically first section: the smallest element of each fiber.
Section first_section(const KernelDiagram& d);

/// All identity-preserving sections in lexicographic order of their maps.
/// Errors: TooManySections when the count exceeds `bound`.
std::vector<Section> enumerate_sections(const KernelDiagram& d, std::size_t bound = 1'000'000);

/// Sections that are monoid homomorphisms, in lexicographic order.
std::vector<MonoidHom> enumerate_splittings(const KernelDiagram& d, std::size_t bound = 1'000'000);

/// t: H -> N with k(t(h)) s'(h) = s(h), choosing the smallest witness.
/// Errors: NotCosetal when some t(h) does not exist.
std::vector<Index> section_translator(const KernelDiagram& d, const Section& s,
                                      const Section& s_prime);

struct KernelEquivalence {
  /// N --(k,0)--> Eq(e) --pi2--> G split by the diagonal.
  SplitExtensionDiagram split;
  /// pairs[i] is the pair (g, g') that Eq(e) element i stands for;
  /// lexicographic order.
  std::vector<std::pair<Index, Index>> pairs;
};

KernelEquivalence kernel_equivalence_split_extension(const KernelDiagram& d);

struct WeaklySchreierCheck {
  bool holds = false;
  /// Smallest n with g = k(n) s(e(g)), or kNone.
  std::vector<Index> witness;
  /// Number of such n for each g.
  std::vector<Index> witness_count;
  std::optional<Index> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

WeaklySchreierCheck is_weakly_schreier(const SplitExtensionDiagram& s);

/// Weakly Schreier with unique witnesses.
bool is_schreier(const SplitExtensionDiagram& s);

/// The kernel equivalence split extension of d is Schreier.
bool is_special_schreier(const KernelDiagram& d);

}  // namespace cosetal
