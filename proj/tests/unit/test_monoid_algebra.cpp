/*
   Copyright 2026 The rookoid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rookoid/monoid_algebra.hpp"

using rookoid::CycNum;
using rookoid::ExactElement;
using rookoid::RookMatrix;
using rookoid::SubsetId;
namespace oracle = rookoid::oracle;

namespace {

  ExactElement basis(RookMatrix const& m) {
    return ExactElement::basis(m);
  }
  RookMatrix m1() {
    return RookMatrix::from_support(3, 1, {{2, 3, 0}, {3, 1, 0}});
  }
  RookMatrix m2() {
    return RookMatrix::from_support(3, 1, {{1, 2, 0}, {2, 3, 0}});
  }
  RookMatrix unit_matrix(std::uint32_t n, std::uint32_t r, std::initializer_list<int> s) {
    return RookMatrix::partial_identity(SubsetId::of(n, s), r);
  }

  // Random exact element with small integer and root-of-unity coefficients.
  ExactElement random_exact(std::uint32_t n, std::uint32_t r, std::mt19937_64& rng) {
    auto const                         all = rookoid::enumerate(n, r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> e(0, static_cast<int>(r) - 1);
    ExactElement                       x(n, r);
    for (int i = 0; i < 6; ++i) {
      x.add_term(all[pick(rng)], CycNum(c(rng)) * CycNum::root(r, e(rng)));
    }
    return x;
  }

}  // namespace

TEST_CASE("dot product") {
  CHECK(rookoid::dot(basis(m1()), basis(m2())) == basis(rookoid::rook_mul(m1(), m2())));
  auto const e11 = unit_matrix(2, 1, {1});
  auto const e22 = unit_matrix(2, 1, {2});
  auto const p   = basis(e11) + basis(e22);
  // The cross terms E11 E22 = E22 E11 = 0 survive as the zero matrix.
  CHECK(rookoid::dot(p, p) == p + ExactElement::basis(RookMatrix(2, 1), CycNum(2)));
  CHECK(rookoid::star(p, p) == p);
  CHECK_FALSE(p == basis(RookMatrix::identity(2, 1)));
  CHECK(rookoid::dot(p, basis(RookMatrix::identity(2, 1))) == p);
}

TEST_CASE("star product") {
  CHECK(rookoid::star(basis(m1()), basis(m2())) == basis(rookoid::rook_mul(m1(), m2())));
  CHECK(rookoid::star(basis(m2()), basis(m1())).is_zero());
  CHECK(rookoid::star(rookoid::star_unit(3, 1), basis(m1())) == basis(m1()));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto const p = random_exact(3, 2, rng);
    CHECK(rookoid::star(p, rookoid::star_unit(3, 2)) == p);
    CHECK(rookoid::star(rookoid::star_unit(3, 2), p) == p);
  }
}

TEST_CASE("partial identities and e_A") {
  CHECK(rookoid::partial_identity(SubsetId::of(2, {1, 2}), 1) == basis(RookMatrix::identity(2, 1)));
  CHECK(rookoid::partial_identity(SubsetId(2, 0), 1) == basis(RookMatrix(2, 1)));
  CHECK(rookoid::dot(rookoid::partial_identity(SubsetId::of(3, {1, 3}), 1),
                     rookoid::partial_identity(SubsetId::of(3, {2, 3}), 1))
        == rookoid::partial_identity(SubsetId::of(3, {3}), 1));

  CHECK(rookoid::mobius_e(SubsetId(4, 0), 1) == basis(RookMatrix(4, 1)));
  CHECK(rookoid::mobius_e(SubsetId::of(2, {1}), 1) == basis(unit_matrix(2, 1, {1})) - basis(RookMatrix(2, 1)));
  CHECK(rookoid::dot(rookoid::mobius_e(SubsetId::of(2, {1}), 1), rookoid::mobius_e(SubsetId::of(2, {2}), 1))
            .is_zero());
}

TEST_CASE("moebius transform") {
  CHECK(rookoid::mobius(RookMatrix(3, 1)) == basis(RookMatrix(3, 1)));
  auto const expected = basis(m1()) - basis(RookMatrix::from_support(3, 1, {{2, 3, 0}}))
                        - basis(RookMatrix::from_support(3, 1, {{3, 1, 0}})) + basis(RookMatrix(3, 1));
  CHECK(rookoid::mobius(m1()) == expected);
  CHECK(rookoid::dot(rookoid::mobius(m1()), rookoid::mobius(m2()))
        == rookoid::mobius(rookoid::rook_mul(m1(), m2())));
  CHECK(rookoid::dot(rookoid::mobius(m2()), rookoid::mobius(m1())).is_zero());

  CHECK(rookoid::mobius_inverse(basis(RookMatrix(2, 1))) == basis(RookMatrix(2, 1)));
  auto const unit = rookoid::mobius_inverse(basis(RookMatrix::identity(2, 1)));
  CHECK(unit.size() == 4);
  CHECK(unit == rookoid::star_unit(2, 1));

  for (auto const& m : rookoid::enumerate(3, 2)) {
    REQUIRE(rookoid::mobius_inverse(rookoid::mobius<CycNum>(m)) == basis(m));
    REQUIRE(rookoid::mobius(basis(m)) == rookoid::mobius<CycNum>(m));
  }
}

TEST_CASE("moebius carries star onto dot") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    auto const p = random_exact(3, 3, rng);
    auto const q = random_exact(3, 3, rng);
    REQUIRE(rookoid::mobius(rookoid::star(p, q)) == rookoid::dot(rookoid::mobius(p), rookoid::mobius(q)));
  }
}

TEST_CASE("units") {
  CHECK(rookoid::star_unit(1, 1) == basis(RookMatrix(1, 1)) + basis(RookMatrix::identity(1, 1)));
  CHECK(rookoid::star_unit(2, 1).size() == 4);
  auto sum = ExactElement(3, 2);
  for (std::uint32_t k = 0; k <= 3; ++k) {
    sum += rookoid::component_unit(3, 2, k);
  }
  CHECK(sum == rookoid::star_unit(3, 2));
}

TEST_CASE("trace") {
  CHECK(rookoid::trace(basis(m1())) == CycNum(0));
  CHECK(rookoid::trace(rookoid::star_unit(3, 1)) == CycNum(8));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    auto const p   = oracle::random_element(3, 2, 8, rng);
    double     sum = 0.0;
    for (auto const& term : p.terms()) {
      sum += std::norm(term.second);
    }
    auto const t = rookoid::trace(rookoid::star(rookoid::involution(p), p));
    CHECK(std::abs(t - std::complex<double>(sum, 0.0)) <= 1e-10 * (1.0 + sum));
  }
}

TEST_CASE("involution") {
  CHECK(rookoid::involution(basis(m1())) == basis(rookoid::dagger(m1())));
  auto const c = RookMatrix::from_support(3, 4, {{3, 1, 1}, {2, 3, 2}});
  CHECK(rookoid::involution(ExactElement::basis(c, CycNum::root(4, 1)))
        == ExactElement::basis(rookoid::dagger(c), CycNum::root(4, 3)));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    auto const p = random_exact(3, 3, rng);
    auto const q = random_exact(3, 3, rng);
    CHECK(rookoid::involution(rookoid::involution(p)) == p);
    CHECK(rookoid::involution(rookoid::star(p, q))
          == rookoid::star(rookoid::involution(q), rookoid::involution(p)));
  }
}

TEST_CASE("norm and state") {
  auto const z = rookoid::norm_and_state(ExactElement(3, 1));
  CHECK(z.norm == 0.0);
  CHECK(z.state == 0.0);
  auto const one = rookoid::norm_and_state(basis(m1()));
  CHECK(one.norm == doctest::Approx(1.0));
  CHECK(one.state == doctest::Approx(1.0 / 8));
  auto const three = rookoid::norm_and_state(ExactElement::basis(RookMatrix(3, 1), CycNum(3)));
  CHECK(three.norm == doctest::Approx(3.0));
  CHECK(three.state == doctest::Approx(9.0 / 8));
}

TEST_CASE("formal sums") {
  auto p = basis(m1());
  p.add_term(m1(), CycNum(-1));
  CHECK(p.is_zero());
  CHECK_THROWS_AS(basis(m1()) + basis(RookMatrix(2, 1)), rookoid::DomainError);
  auto q = ExactElement(3, 2);
  CHECK_THROWS_AS(q.add_term(m1(), CycNum(1)), rookoid::DomainError);
}
