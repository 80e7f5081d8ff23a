#include <vector>

#include "cosetal/corpus.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace cosetal;
using namespace fixtures;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IllFormed;
}

ActionTable action(Index h, Index n, std::vector<Index> map) { return ActionTable(h, n, std::move(map)); }

}  // namespace

TEST_CASE("PairPartition normalizes labels") {
  const std::vector<Index> labels{7, 3, 7, 9};
  const PairPartition e(2, 2, labels);
  CHECK(std::vector<Index>(e.class_of().begin(), e.class_of().end()) == std::vector<Index>{0, 1, 0, 2});
  CHECK(e.num_classes() == 3);
  CHECK(e.representative(0) == std::pair<Index, Index>{0, 0});
  CHECK(e.representative(2) == std::pair<Index, Index>{1, 1});
  const std::vector<Index> short_labels{0, 1};
  CHECK(code_of([&] { PairPartition(2, 2, short_labels); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([] { action(2, 2, {0, 1, 2, 0}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("is_admissible examples") {
  const FiniteAbelianGroup z2 = group(2);
  CHECK(is_admissible(PairPartition::discrete(2, 2), z2, cyclic_group(2)).holds);
  CHECK(is_admissible(coarse_at_h(), z2, semilattice2()).holds);
  const std::vector<Index> merged_units{0, 1, 0, 2};
  const ConditionCheck c1 = is_admissible(PairPartition(2, 2, merged_units), z2, semilattice2());
  CHECK_FALSE(c1.holds);
  CHECK(c1.condition == 1);
  CHECK(c1.witness == std::vector<Index>{0, 1});
}

TEST_CASE("is_admissible conditions 2 to 4") {
  const FiniteAbelianGroup z2 = group(2);
  // (0,h) ~ (1,1) crosses columns.
  const std::vector<Index> cross{0, 1, 1, 3};
  CHECK(is_admissible(PairPartition(2, 2, cross), z2, semilattice2()).condition == 2);
  // Over Z3 at column h: {0,1} merged but not {1,2} = 1 + {0,1}.
  const FiniteAbelianGroup z3 = group(3);
  const std::vector<Index> partial{0, 1, 2, 1, 4, 5};
  CHECK(is_admissible(PairPartition(3, 2, partial), z3, semilattice2()).condition == 3);
  // Over L3 = {1, a, b}: merged at a but not at ab = b.
  const std::vector<Index> left_only{0, 1, 2, 3, 1, 5};
  CHECK(is_admissible(PairPartition(2, 3, left_only), z2, meet_semilattice(3)).condition == 4);
}

TEST_CASE("star operations") {
  const PairPartition e = coarse_at_h();
  const FiniteAbelianGroup z2 = group(2);
  const FiniteMonoid l2 = semilattice2();
  for (Index c = 0; c < e.num_classes(); ++c) {
    CHECK(star_left(e, z2, 0, c) == c);
    CHECK(star_right(e, l2, c, 0) == c);
  }
  CHECK(star_right(e, l2, e.class_of(0, 0), 1) == e.class_of(1, 1));
  // Well defined: the result does not depend on the representative.
  for (Index n = 0; n < 2; ++n) {
    for (Index h = 0; h < 2; ++h) {
      for (Index x = 0; x < 2; ++x) {
        CHECK(star_left(e, z2, x, e.class_of(n, h)) == e.class_of(z2.mul(x, n), h));
        CHECK(star_right(e, l2, e.class_of(n, h), x) == e.class_of(n, l2.mul(h, x)));
      }
    }
  }
}

TEST_CASE("extract_equivalence") {
  const ExtensionDiagram p = direct_product_ext();
  CHECK(extract_equivalence(p, first_section(p)) == PairPartition::discrete(2, 2));
  const ExtensionDiagram a = absorbing_ext();
  CHECK(extract_equivalence(a, first_section(a)) == coarse_at_h());
  const ExtensionDiagram z = z4_ext();
  for (const Section& s : enumerate_sections(z)) CHECK(extract_equivalence(z, s) == PairPartition::discrete(2, 2));
}

TEST_CASE("extract_action") {
  for (const KernelDiagram& d : {KernelDiagram(direct_product_ext()), KernelDiagram(absorbing_ext()),
                                 KernelDiagram(z4_ext())}) {
    for (const Section& s : enumerate_sections(d)) {
      const ActionTable phi = extract_action(d, s);
      for (Index n = 0; n < d.kernel().size(); ++n) CHECK(phi(d.quotient().identity(), n) == n);
    }
  }
  const ExtensionDiagram a = absorbing_ext();
  CHECK(extract_action(a, first_section(a)) == action(2, 2, {0, 1, 0, 0}));
  const ExtensionDiagram z = z4_ext();
  CHECK(extract_action(z, first_section(z)) == ActionTable::trivial(2, 2));
  const KernelDiagram bad = non_cosetal_diagram();
  // A trivial kernel makes every action extraction succeed; the missing coset
  // shows up in the factor set instead.
  CHECK(extract_action(bad, first_section(bad)) == ActionTable::trivial(2, 1));
  CHECK(code_of([&] { extract_factor_set(bad, first_section(bad)); }) == ErrorCode::NotCosetal);
}

TEST_CASE("is_compatible examples") {
  const FiniteAbelianGroup z2 = group(2);
  CHECK(is_compatible(ActionTable::trivial(2, 2), PairPartition::discrete(2, 2), z2, cyclic_group(2)).holds);
  const ExtensionDiagram a = absorbing_ext();
  const ActionTable extracted = extract_action(a, first_section(a));
  CHECK(is_compatible(extracted, coarse_at_h(), z2, semilattice2()).holds);
  CHECK(is_compatible(ActionTable::trivial(2, 2), coarse_at_h(), z2, semilattice2()).holds);
  CHECK(actions_equivalent(ActionTable::trivial(2, 2), extracted, coarse_at_h()));
}

TEST_CASE("is_compatible failure conditions") {
  const FiniteAbelianGroup z2 = group(2);
  const FiniteMonoid z2m = cyclic_group(2);
  const PairPartition d = PairPartition::discrete(2, 2);
  // Constant 1 at h is not a homomorphism: phi(h, 0+0) = 1 but 1+1 = 0.
  const ConditionCheck c = is_compatible(action(2, 2, {0, 1, 1, 1}), d, z2, z2m);
  CHECK_FALSE(c.holds);
  CHECK(c.condition == 3);
  CHECK(c.witness == std::vector<Index>{1, 0, 0});
  CHECK(is_compatible(action(2, 2, {1, 0, 0, 1}), d, z2, z2m).condition == 3);
  // Zero at 1 and identity at h: phi(1 h, 1) = 1 but phi(1, phi(h, 1)) = 0.
  CHECK(is_compatible(action(2, 2, {0, 0, 0, 1}), d, z2, z2m).condition == 4);
  const FiniteAbelianGroup z3 = group(3);
  // Negation at the identity breaks condition 4 (1 * 1 = 1) before 6.
  CHECK(is_compatible(action(1, 3, {0, 2, 1}), PairPartition::discrete(3, 1), z3, FiniteMonoid()).condition == 4);
  const ConditionCheck six =
      is_compatible(action(1, 3, {0, 0, 0}), PairPartition::discrete(3, 1), z3, FiniteMonoid());
  CHECK(six.condition == 6);
  CHECK(six.witness == std::vector<Index>{1});
  // Z2 acting on Z3 by negation is a genuine action; zero at h is not.
  CHECK(is_compatible(action(2, 3, {0, 1, 2, 0, 2, 1}), PairPartition::discrete(3, 2), z3, z2m).holds);
  CHECK(is_compatible(action(2, 3, {0, 1, 2, 0, 0, 0}), PairPartition::discrete(3, 2), z3, z2m).condition == 4);
  CHECK(code_of([&] { is_compatible(ActionTable::trivial(3, 2), d, z2, z2m); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("actions_equivalent") {
  const ActionTable zero_at_h = action(2, 2, {0, 1, 0, 0});
  CHECK(actions_equivalent(zero_at_h, zero_at_h, coarse_at_h()));
  CHECK(actions_equivalent(zero_at_h, ActionTable::trivial(2, 2), coarse_at_h()));
  CHECK_FALSE(actions_equivalent(zero_at_h, ActionTable::trivial(2, 2), PairPartition::discrete(2, 2)));
}

TEST_CASE("validate_data") {
  const FiniteAbelianGroup z2 = group(2);
  CHECK(code_of([&] {
          const std::vector<Index> merged_units{0, 1, 0, 2};
          validate_data(z2, semilattice2(), PairPartition(2, 2, merged_units), ActionTable::trivial(2, 2));
        }) == ErrorCode::IllFormed);
  CHECK(code_of([&] {
          validate_data(z2, cyclic_group(2), PairPartition::discrete(2, 2), action(2, 2, {0, 1, 1, 1}));
        }) == ErrorCode::IllFormed);
}

TEST_CASE("compare_data") {
  const ExtensionData discrete = validate_data(group(2), semilattice2(), PairPartition::discrete(2, 2),
                                               ActionTable::trivial(2, 2));
  const ExtensionDiagram a = absorbing_ext();
  const ExtensionData coarse = extract_data(a, first_section(a));
  CHECK(compare_data(discrete, discrete));
  CHECK(compare_data(discrete, coarse));
  CHECK_FALSE(compare_data(coarse, discrete));
  CHECK(code_of([&] { compare_data(discrete, discrete_trivial(2, 2)); }) == ErrorCode::DataMismatch);
}

TEST_CASE("compare_data is a preorder on all data over small N and H") {
  for (const FiniteAbelianGroup& n : corpus::kernels(3)) {
    for (const FiniteMonoid& h : corpus::quotients(3)) {
      const std::vector<ExtensionData> all = corpus::enumerate_data(n, h);
      for (const ExtensionData& a : all) {
        CHECK(compare_data(a, a));
        for (const ExtensionData& b : all) {
          if (!compare_data(a, b)) continue;
          for (const ExtensionData& c : all) {
            if (compare_data(b, c)) CHECK(compare_data(a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("witness independence of extracted actions") {
  for (const KernelDiagram& d : {KernelDiagram(direct_product_ext()), KernelDiagram(absorbing_ext()),
                                 KernelDiagram(z4_ext())}) {
    for (const Section& s : enumerate_sections(d)) {
      const PairPartition e = extract_equivalence(d, s);
      for (Index h = 0; h < d.quotient().size(); ++h) {
        for (Index n = 0; n < d.kernel().size(); ++n) {
          const Index target = d.total().mul(s(h), d.k()(n));
          std::vector<Index> classes;
          for (Index m = 0; m < d.kernel().size(); ++m) {
            if (d.translate(m, s(h)) == target) classes.push_back(e.class_of(m, h));
          }
          REQUIRE_FALSE(classes.empty());
          for (Index c : classes) CHECK(c == classes.front());
        }
      }
    }
  }
}

TEST_CASE("enumerate_admissible and enumerate_compatible_actions") {
  const FiniteAbelianGroup z2 = group(2);
  // Over {1,h} the h column is either discrete or merged.
  CHECK(corpus::enumerate_admissible(z2, semilattice2()).size() == 2);
  // Over Z2 condition 4 forces the discrete relation.
  CHECK(corpus::enumerate_admissible(z2, cyclic_group(2)).size() == 1);
  // Aut(Z3) = Z2 gives two actions of Z2 on Z3.
  const FiniteAbelianGroup z3 = group(3);
  CHECK(corpus::enumerate_compatible_actions(z3, cyclic_group(2), PairPartition::discrete(3, 2)).size() == 2);
  // On the coarse column every action collapses to one class.
  CHECK(corpus::enumerate_compatible_actions(z2, semilattice2(), coarse_at_h()).size() == 1);
  for (const FiniteMonoid& h : corpus::quotients(3)) {
    for (const ExtensionData& d : corpus::enumerate_data(z3, h)) {
      CHECK(is_admissible(d.partition(), d.kernel(), d.quotient()).holds);
      CHECK(is_compatible(d.action(), d.partition(), d.kernel(), d.quotient()).holds);
    }
  }
}

TEST_CASE("degenerate data") {
  // Trivial quotient: only the discrete relation and the identity action.
  const FiniteAbelianGroup z3 = group(3);
  const auto data = corpus::enumerate_data(z3, FiniteMonoid());
  REQUIRE(data.size() == 1);
  CHECK(data.front().partition() == PairPartition::discrete(3, 1));
  CHECK(data.front().action() == ActionTable::trivial(1, 3));
  // Trivial kernel: one data per quotient, E discrete.
  for (const FiniteMonoid& h : corpus::quotients(3)) {
    const auto d = corpus::enumerate_data(group(1), h);
    REQUIRE(d.size() == 1);
    CHECK(d.front().partition().num_classes() == h.size());
  }
}
