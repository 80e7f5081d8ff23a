#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cosetal;

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

template <class F>
std::vector<Index> witness_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.witness().begin(), e.witness().end()};
  }
  FAIL("expected an Error");
  return {};
}

std::vector<FiniteMonoid> small_monoids() {
  std::vector<FiniteMonoid> out;
  for (Index n = 1; n <= 4; ++n) {
    for (auto& m : enumerate_monoids(n)) out.push_back(m);
  }
  return out;
}

bool is_congruence(const FiniteMonoid& m, std::span<const Index> labels) {
  for (Index a = 0; a < m.size(); ++a) {
    for (Index b = 0; b < m.size(); ++b) {
      if (labels[a] != labels[b]) continue;
      for (Index x = 0; x < m.size(); ++x) {
        if (labels[m.mul(x, a)] != labels[m.mul(x, b)]) return false;
        if (labels[m.mul(a, x)] != labels[m.mul(b, x)]) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate_monoid accepts the trivial monoid and Z2") {
  const FiniteMonoid t = validate_monoid({{0}}, 0);
  CHECK(t.size() == 1);
  CHECK(t == FiniteMonoid());
  const FiniteMonoid z2 = validate_monoid({{0, 1}, {1, 0}}, 0);
  CHECK(z2 == cyclic_group(2));
  CHECK(z2.is_commutative());
}

TEST_CASE("validate_monoid reports the first failing axiom") {
  CHECK(code_of([] { validate_monoid({{0, 1}, {1, 0}}, 1); }) == ErrorCode::BadIdentity);
  CHECK(witness_of([] { validate_monoid({{0, 1}, {1, 0}}, 1); }) == std::vector<Index>{0});
  CHECK(code_of([] { validate_monoid({{0, 1}, {1, 2}}, 0); }) == ErrorCode::NotClosed);
  const std::vector<std::vector<Index>> bad{{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
  CHECK(code_of([&] { validate_monoid(bad, 0); }) == ErrorCode::NotAssociative);
  CHECK(witness_of([&] { validate_monoid(bad, 0); }) == std::vector<Index>{1, 1, 2});
  CHECK(code_of([] { validate_monoid({{0, 1}}, 0); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([] { validate_monoid({{0}}, 3); }) == ErrorCode::OutOfRange);
}

TEST_CASE("validate_abelian_group") {
  const FiniteAbelianGroup z2 = validate_abelian_group(cyclic_group(2));
  CHECK(z2.inverse(0) == 0);
  CHECK(z2.inverse(1) == 1);
  const FiniteAbelianGroup z4 = validate_abelian_group(cyclic_group(4));
  CHECK(z4.inverse(1) == 3);
  CHECK(z4.inverse(2) == 2);
  CHECK(code_of([] { validate_abelian_group(meet_semilattice(2)); }) == ErrorCode::NoInverse);
  CHECK(witness_of([] { validate_abelian_group(meet_semilattice(2)); }) == std::vector<Index>{1});
  // Left-zero band {a, b} with an identity adjoined.
  const FiniteMonoid left_zero = validate_monoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  CHECK(code_of([&] { validate_abelian_group(left_zero); }) == ErrorCode::NotCommutative);
  CHECK(witness_of([&] { validate_abelian_group(left_zero); }) == std::vector<Index>{1, 2});
}

TEST_CASE("validate_hom") {
  const FiniteMonoid z2 = cyclic_group(2);
  const std::vector<Index> id{0, 1};
  const std::vector<Index> zero{0, 0};
  const std::vector<Index> swap{1, 0};
  CHECK(validate_hom(id, z2, z2) == identity_hom(z2));
  CHECK(validate_hom(zero, z2, z2).image() == std::vector<Index>{0});
  CHECK(code_of([&] { validate_hom(swap, z2, z2); }) == ErrorCode::IdentityNotPreserved);
  CHECK(code_of([&] { validate_hom(id, z2, cyclic_group(3)); }) == ErrorCode::NotHom);
  CHECK(witness_of([&] { validate_hom(id, z2, cyclic_group(3)); }) == std::vector<Index>{1, 1});
  const std::vector<Index> short_map{0};
  CHECK(code_of([&] { validate_hom(short_map, z2, z2); }) == ErrorCode::SizeMismatch);
  const std::vector<Index> wide{0, 5};
  CHECK(code_of([&] { validate_hom(wide, z2, z2); }) == ErrorCode::OutOfRange);
}

TEST_CASE("hom helpers") {
  const FiniteMonoid z4 = cyclic_group(4);
  const FiniteMonoid z2 = cyclic_group(2);
  const std::vector<Index> mod2{0, 1, 0, 1};
  const MonoidHom e = validate_hom(mod2, z4, z2);
  CHECK(e.is_surjective());
  CHECK_FALSE(e.is_injective());
  CHECK(e.preimage(1) == std::vector<Index>{1, 3});
  CHECK(kernel_partition(e) == std::vector<Index>{0, 1, 0, 1});
  CHECK(compose(e, identity_hom(z4)) == e);
  CHECK(compose(identity_hom(z2), e) == e);
}

TEST_CASE("congruence_closure examples") {
  const FiniteMonoid z4 = cyclic_group(4);
  const std::vector<std::pair<Index, Index>> none;
  CHECK(congruence_closure(z4, none).num_classes() == 4);

  const FiniteMonoid absorbing = adjoin_absorbing(cyclic_group(2));
  const std::vector<std::pair<Index, Index>> seed{{1, 0}};
  const Congruence c = congruence_closure(absorbing, seed);
  CHECK(c.classes() == std::vector<std::vector<Index>>{{0, 1}, {2}});

  const std::vector<std::pair<Index, Index>> seed4{{2, 0}};
  CHECK(congruence_closure(z4, seed4).classes() == std::vector<std::vector<Index>>{{0, 2}, {1, 3}});

  const std::vector<std::pair<Index, Index>> out_of_range{{0, 7}};
  CHECK(code_of([&] { congruence_closure(z4, out_of_range); }) == ErrorCode::OutOfRange);
}

TEST_CASE("congruence_closure matches the fixpoint oracle on every seed pair") {
  for (const FiniteMonoid& m : small_monoids()) {
    for (Index a = 0; a < m.size(); ++a) {
      for (Index b = a; b < m.size(); ++b) {
        for (Index c = 0; c < m.size(); ++c) {
          const std::vector<std::pair<Index, Index>> seeds{{a, b}, {c, m.identity()}};
          const Congruence closed = congruence_closure(m, seeds);
          const std::vector<Index> labels(closed.class_of().begin(), closed.class_of().end());
          REQUIRE(labels == oracles::naive_congruence(m, seeds));
          CHECK(is_congruence(m, labels));
          // Idempotence: closing the output's own pairs changes nothing.
          std::vector<std::pair<Index, Index>> own;
          for (Index x = 0; x < m.size(); ++x) {
            for (Index y = 0; y < m.size(); ++y) {
              if (labels[x] == labels[y]) own.emplace_back(x, y);
            }
          }
          CHECK(congruence_closure(m, own) == closed);
        }
      }
    }
  }
}

TEST_CASE("validate_congruence") {
  const FiniteMonoid z4 = cyclic_group(4);
  const std::vector<Index> good{5, 7, 5, 7};
  CHECK(validate_congruence(z4, good).num_classes() == 2);
  const std::vector<Index> bad{0, 0, 1, 1};
  CHECK(code_of([&] { validate_congruence(z4, bad); }) == ErrorCode::IllFormed);
}

TEST_CASE("quotient_monoid") {
  const FiniteMonoid z4 = cyclic_group(4);
  const std::vector<std::pair<Index, Index>> none;
  const Quotient discrete = quotient_monoid(z4, congruence_closure(z4, none));
  CHECK(discrete.projection.is_injective());
  CHECK(discrete.projection.is_surjective());
  CHECK(find_isomorphism(discrete.monoid, z4).has_value());

  const FiniteMonoid absorbing = adjoin_absorbing(cyclic_group(2));
  const std::vector<std::pair<Index, Index>> seed{{1, 0}};
  const Quotient q = quotient_monoid(absorbing, congruence_closure(absorbing, seed));
  CHECK(q.monoid == meet_semilattice(2));

  const std::vector<std::pair<Index, Index>> all{{0, 1}, {0, 2}, {0, 3}};
  CHECK(quotient_monoid(z4, congruence_closure(z4, all)).monoid == FiniteMonoid());
}

TEST_CASE("builders") {
  CHECK(cyclic_group(1) == FiniteMonoid());
  const FiniteMonoid l2 = meet_semilattice(2);
  CHECK(l2.size() == 2);
  CHECK(l2.identity() == 0);
  CHECK(l2.mul(1, 1) == 1);
  const FiniteMonoid a = adjoin_absorbing(cyclic_group(2));
  CHECK(a.size() == 3);
  for (Index x = 0; x < 3; ++x) {
    CHECK(a.mul(x, 2) == 2);
    CHECK(a.mul(2, x) == 2);
  }
  const FiniteMonoid p = direct_product(cyclic_group(2), meet_semilattice(3));
  CHECK(p.size() == 6);
  CHECK(p.mul(1 * 3 + 1, 1 * 3 + 2) == 0 * 3 + 2);
  CHECK(product_projection_first(cyclic_group(2), meet_semilattice(3)).is_surjective());
  CHECK(product_projection_second(cyclic_group(2), meet_semilattice(3)).is_surjective());
}

TEST_CASE("enumerate_monoids counts monoids up to isomorphism") {
  // Orders 1..4 have 1, 2, 7 and 35 monoids up to isomorphism.
  CHECK(enumerate_monoids(1).size() == 1);
  CHECK(enumerate_monoids(2).size() == 2);
  CHECK(enumerate_monoids(3).size() == 7);
  CHECK(enumerate_monoids(4).size() == 35);
  CHECK(code_of([] { enumerate_monoids(5); }) == ErrorCode::TooLarge);
  for (const FiniteMonoid& m : enumerate_monoids(3)) CHECK(m.identity() == 0);
}

TEST_CASE("find_isomorphism") {
  const FiniteMonoid z4 = cyclic_group(4);
  const FiniteMonoid v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK_FALSE(find_isomorphism(z4, v4).has_value());
  const auto f = find_isomorphism(adjoin_absorbing(cyclic_group(1)), meet_semilattice(2));
  REQUIRE(f.has_value());
  CHECK(*f == std::vector<Index>{0, 1});
  CHECK(find_isomorphism(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)).has_value());
}
