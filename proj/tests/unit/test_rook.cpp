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

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rookoid/errors.hpp"
#include "rookoid/rook.hpp"

using rookoid::RookMatrix;
using rookoid::SubsetId;
namespace oracle = rookoid::oracle;

namespace {

  RookMatrix m1() {
    return RookMatrix::from_support(3, 1, {{2, 3, 0}, {3, 1, 0}});
  }
  RookMatrix m2() {
    return RookMatrix::from_support(3, 1, {{1, 2, 0}, {2, 3, 0}});
  }
  RookMatrix m1_coloured() {
    return RookMatrix::from_support(3, 4, {{3, 1, 1}, {2, 3, 2}});
  }
  RookMatrix m2_coloured() {
    return RookMatrix::from_support(3, 4, {{1, 2, 3}, {2, 3, 0}});
  }

}  // namespace

TEST_CASE("construction from support") {
  auto const a = m1();
  CHECK(a.rank() == 2);
  CHECK(a.source() == SubsetId::of(3, {2, 3}));
  CHECK(a.target() == SubsetId::of(3, {1, 3}));
  CHECK(a.at(2)->row == 3);
  CHECK_FALSE(a.at(1).has_value());

  auto const z = RookMatrix::from_support(3, 1, {});
  CHECK(z.rank() == 0);
  CHECK(z == RookMatrix(3, 1));

  auto const c = m1_coloured();
  CHECK(c.at(3)->exp == 1);
  CHECK(c.at(2)->exp == 2);
  auto const d = oracle::dense(c);
  CHECK(std::abs(d.at(0, 2) - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(d.at(2, 1) - std::complex<double>(-1, 0)) < 1e-12);

  CHECK_THROWS_AS(RookMatrix::from_support(3, 1, {{1, 2, 0}, {1, 3, 0}}), rookoid::InjectivityError);
  CHECK_THROWS_AS(RookMatrix::from_support(3, 1, {{1, 2, 0}, {3, 2, 0}}), rookoid::InjectivityError);
  CHECK_THROWS_AS(RookMatrix::from_support(3, 1, {{4, 1, 0}}), rookoid::DomainError);
  CHECK_THROWS_AS(RookMatrix::from_support(3, 2, {{1, 1, 2}}), rookoid::DomainError);
  CHECK_THROWS_AS(RookMatrix(17, 1), rookoid::DomainError);
  CHECK_THROWS_AS(RookMatrix(3, 0), rookoid::DomainError);
}

TEST_CASE("products") {
  auto const p = rookoid::rook_mul(m1(), m2());
  CHECK(p == RookMatrix::from_support(3, 1, {{1, 3, 0}, {2, 1, 0}}));
  CHECK(rookoid::rook_mul(m1(), RookMatrix::identity(3, 1)) == m1());
  auto const i1 = RookMatrix::partial_identity(SubsetId::of(2, {1}), 1);
  auto const i2 = RookMatrix::partial_identity(SubsetId::of(2, {2}), 1);
  CHECK(rookoid::rook_mul(i1, i2) == RookMatrix(2, 1));
  CHECK_THROWS_AS(rookoid::rook_mul(m1(), m1_coloured()), rookoid::DomainError);
}

TEST_CASE("products agree with dense multiplication") {
  auto const all = rookoid::enumerate(3, 3);
  for (auto const& a : all) {
    for (std::size_t j = 0; j < all.size(); j += 7) {
      auto const& b = all[j];
      auto const  got = oracle::dense(rookoid::rook_mul(a, b));
      auto const  want = oracle::dense_mul(oracle::dense(a), oracle::dense(b));
      REQUIRE(oracle::dense_distance(got, want) < 1e-12);
    }
  }
}

TEST_CASE("partial identities multiply by intersection") {
  for (std::uint32_t x = 0; x < 16; ++x) {
    for (std::uint32_t y = 0; y < 16; ++y) {
      auto const ix = RookMatrix::partial_identity(SubsetId(4, x), 2);
      auto const iy = RookMatrix::partial_identity(SubsetId(4, y), 2);
      CHECK(rookoid::rook_mul(ix, iy) == RookMatrix::partial_identity(SubsetId(4, x & y), 2));
    }
  }
}

TEST_CASE("dagger") {
  auto const a = m1();
  CHECK(rookoid::rook_mul(rookoid::dagger(a), a)
        == RookMatrix::partial_identity(SubsetId::of(3, {2, 3}), 1));
  CHECK(rookoid::rook_mul(a, rookoid::dagger(a))
        == RookMatrix::partial_identity(SubsetId::of(3, {1, 3}), 1));
  CHECK(rookoid::dagger(RookMatrix(3, 2)) == RookMatrix(3, 2));

  auto const b  = m2_coloured();
  auto const bd = rookoid::dagger(b);
  CHECK(bd.at(2)->row == 1);
  CHECK(bd.at(2)->exp == 1);
  CHECK(rookoid::rook_mul(bd, b) == RookMatrix::partial_identity(SubsetId::of(3, {1, 2}), 4));

  for (auto const& m : rookoid::enumerate(3, 3)) {
    auto const md = rookoid::dagger(m);
    REQUIRE(rookoid::rook_mul(md, m) == RookMatrix::partial_identity(m.source(), 3));
    REQUIRE(rookoid::rook_mul(m, md) == RookMatrix::partial_identity(m.target(), 3));
    REQUIRE(rookoid::dagger(md) == m);
    // Conjugate transpose of the dense matrix.
    auto const d  = oracle::dense(m);
    auto const dd = oracle::dense(md);
    for (std::uint32_t i = 0; i < 3; ++i) {
      for (std::uint32_t j = 0; j < 3; ++j) {
        REQUIRE(std::abs(dd.at(i, j) - std::conj(d.at(j, i))) < 1e-12);
      }
    }
  }
}

TEST_CASE("subsets") {
  auto const subs = rookoid::k_subsets(4, 2);
  REQUIRE(subs.size() == 6);
  CHECK(subs.front().members() == std::vector<int>{1, 2});
  CHECK(subs[1].members() == std::vector<int>{1, 3});
  CHECK(subs.back().members() == std::vector<int>{3, 4});
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CHECK(rookoid::subset_rank(subs[i]) == i);
  }
  CHECK(SubsetId::initial(4, 2) == subs.front());
  CHECK_THROWS_AS(SubsetId::of(3, {4}), rookoid::DomainError);
}

TEST_CASE("enumeration examples") {
  auto const perms = rookoid::enumerate(2, 1, 2);
  CHECK(perms.size() == 2);
  CHECK(rookoid::enumerate(3, 1).size() == 34);
  CHECK(rookoid::enumerate(3, 2, 1).size() == 18);
  auto const zero = rookoid::enumerate(3, 1, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].rank() == 0);
}

TEST_CASE("enumeration matches brute force and is ordered") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      auto const listed = rookoid::enumerate(n, r);
      auto const brute  = oracle::brute_force_rooks(n, r);
      REQUIRE(listed.size() == brute.size());
      CHECK(rookoid::count(n, r) == listed.size());
      std::set<RookMatrix, rookoid::BasisOrder> a(listed.begin(), listed.end());
      std::set<RookMatrix, rookoid::BasisOrder> b(brute.begin(), brute.end());
      CHECK(a.size() == listed.size());
      CHECK(a == b);
      for (std::size_t i = 1; i < listed.size(); ++i) {
        REQUIRE(rookoid::basis_less(listed[i - 1], listed[i]));
      }
      std::vector<std::uint64_t> offset(n + 1, 0);
      for (auto const& m : listed) {
        REQUIRE(rookoid::stratum_index(m) == offset[m.rank()]++);
      }
      for (std::uint32_t k = 0; k <= n; ++k) {
        CHECK(rookoid::stratum_count(n, r, k) == offset[k]);
      }
    }
  }
}

TEST_CASE("counts") {
  CHECK(rookoid::count(1, 1) == 2);
  CHECK(rookoid::count(3, 1) == 34);
  CHECK(rookoid::count(3, 2) == 139);
  CHECK(rookoid::count(4, 2) == 1473);
}
