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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "rookoid/errors.hpp"
#include "rookoid/group_rep.hpp"

using rookoid::GroupTable;
using rookoid::GroupVector;
namespace oracle = rookoid::oracle;

namespace {

  std::vector<std::uint32_t> sorted_dims(rookoid::Csomi const& c) {
    std::vector<std::uint32_t> d;
    for (auto const& t : c.types) {
      d.push_back(t.dimension);
    }
    std::sort(d.begin(), d.end());
    return d;
  }

  GroupVector add(GroupVector a, GroupVector const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] += b[i];
    }
    return a;
  }

}  // namespace

TEST_CASE("wreath tables") {
  CHECK(rookoid::wreath_table(1, 3).order() == 6);
  CHECK(rookoid::wreath_table(2, 2).order() == 8);
  CHECK(rookoid::wreath_table(3, 2).order() == 18);
  CHECK(rookoid::wreath_table(5, 0).order() == 1);
  CHECK(rookoid::wreath_elements(2, 3).size() == 48);
  CHECK_THROWS_AS(rookoid::wreath_table(6, 6), rookoid::ResourceError);
  // Non-abelian as soon as k > 1.
  auto const s3 = rookoid::wreath_table(1, 3);
  bool       commutative = true;
  for (std::uint32_t a = 0; a < 6; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) {
      commutative = commutative && s3.mul(a, b) == s3.mul(b, a);
    }
  }
  CHECK_FALSE(commutative);
}

TEST_CASE("group tables are validated") {
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}), rookoid::DomainError);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1}), rookoid::DomainError);
  GroupTable const z2(2, {0, 1, 1, 0});
  CHECK(z2.unit() == 0);
  CHECK(z2.inv(1) == 1);
}

TEST_CASE("conjugacy classes") {
  auto const s2 = rookoid::wreath_table(1, 2);
  auto const c2 = rookoid::conjugacy_classes(s2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].size() == 1);
  CHECK(c2[1].size() == 1);

  for (auto [r, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}, {1, 4}}) {
    auto const t       = rookoid::wreath_table(r, k);
    auto const classes = rookoid::conjugacy_classes(t);
    std::vector<std::size_t> sizes;
    for (auto const& c : classes) {
      sizes.push_back(c.size());
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::class_sizes(t));
  }
  CHECK(rookoid::conjugacy_classes(rookoid::wreath_table(1, 3)).size() == 3);
  CHECK(rookoid::conjugacy_classes(rookoid::wreath_table(2, 2)).size() == 5);
}

TEST_CASE("central idempotents") {
  auto const trivial = rookoid::central_idempotents(GroupTable());
  REQUIRE(trivial.size() == 1);
  CHECK(std::abs(trivial[0][0] - 1.0) < 1e-12);

  auto const s2 = rookoid::wreath_table(1, 2);
  auto const f2 = rookoid::central_idempotents(s2);
  REQUIRE(f2.size() == 2);
  auto const s = s2.unit() == 0 ? 1U : 0U;
  std::vector<GroupVector> want{{}, {}};
  want[0].assign(2, 0.0);
  want[1].assign(2, 0.0);
  want[0][s2.unit()] = 0.5;
  want[0][s]         = 0.5;
  want[1][s2.unit()] = 0.5;
  want[1][s]         = -0.5;
  bool const direct  = rookoid::group_distance(f2[0], want[0]) < 1e-12 && rookoid::group_distance(f2[1], want[1]) < 1e-12;
  bool const swapped = rookoid::group_distance(f2[0], want[1]) < 1e-12 && rookoid::group_distance(f2[1], want[0]) < 1e-12;
  CHECK((direct || swapped));

  auto const s3 = rookoid::wreath_table(1, 3);
  auto const f3 = rookoid::central_idempotents(s3);
  REQUIRE(f3.size() == 3);
  std::vector<std::uint32_t> traces;
  for (auto const& f : f3) {
    // The regular trace of f is |G| f(1) and equals rank(x -> x f).
    auto const tr = static_cast<double>(s3.order()) * f[s3.unit()].real();
    CHECK(std::abs(tr - std::round(tr)) < 1e-9);
    CHECK(oracle::left_ideal_dimension(s3, f) == static_cast<std::uint32_t>(std::lround(tr)));
    traces.push_back(static_cast<std::uint32_t>(std::lround(tr)));
    CHECK(rookoid::group_distance(rookoid::group_mul(s3, f, f), f) < 1e-10);
  }
  std::sort(traces.begin(), traces.end());
  CHECK(traces == std::vector<std::uint32_t>{1, 1, 4});
}

TEST_CASE("csomi examples") {
  auto const c1 = rookoid::csomi(GroupTable(), 1);
  REQUIRE(c1.idempotents.size() == 1);
  CHECK(std::abs(c1.idempotents[0][0] - 1.0) < 1e-12);

  auto const s2 = rookoid::wreath_table(1, 2);
  auto const c2 = rookoid::csomi(s2, 1);
  auto const f2 = rookoid::central_idempotents(s2);
  REQUIRE(c2.idempotents.size() == 2);
  for (auto const& e : c2.idempotents) {
    double best = 1.0;
    for (auto const& f : f2) {
      best = std::min(best, rookoid::group_distance(e, f));
    }
    CHECK(best < 1e-12);
  }

  auto const w = rookoid::wreath_table(2, 2);
  auto const c = rookoid::csomi(w, 42);
  CHECK(c.idempotents.size() == 6);
  CHECK(sorted_dims(c) == std::vector<std::uint32_t>{1, 1, 1, 1, 2});
  CHECK(c.residuals.max() < 1e-9);
}

TEST_CASE("csomi members are minimal") {
  for (auto [r, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
    auto const t = rookoid::wreath_table(r, k);
    auto const c = rookoid::csomi(t, 3);
    std::uint32_t dsum  = 0;
    std::uint32_t d2sum = 0;
    for (auto const& ty : c.types) {
      dsum += ty.dimension;
      d2sum += ty.dimension * ty.dimension;
    }
    CHECK(d2sum == t.order());
    CHECK(c.idempotents.size() == dsum);
    for (std::size_t i = 0; i < c.idempotents.size(); ++i) {
      CHECK(oracle::left_ideal_dimension(t, c.idempotents[i]) == c.types[c.block_map[i]].dimension);
    }
  }
}

TEST_CASE("idempotent count of S_k is the number of standard tableaux") {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    auto const c = rookoid::csomi(rookoid::wreath_table(1, k), 9);
    CHECK(c.idempotents.size() == oracle::involutions(k));
  }
  CHECK(oracle::involutions(4) == 10);
}

TEST_CASE("csomi is seeded") {
  auto const t = rookoid::wreath_table(2, 3);
  auto const a = rookoid::csomi(t, 7);
  auto const b = rookoid::csomi(t, 7);
  REQUIRE(a.idempotents.size() == b.idempotents.size());
  for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
    CHECK(a.idempotents[i] == b.idempotents[i]);
  }
  auto const c = rookoid::csomi(t, 8);
  CHECK(rookoid::verify_csomi(t, c).passed());
}

TEST_CASE("verification catches faulty families") {
  auto const t = rookoid::wreath_table(1, 3);
  auto const c = rookoid::csomi(t, 42);
  auto const good = rookoid::verify_csomi(t, c);
  CHECK(good.passed());
  CHECK(good.max_residual < 1e-9);

  auto missing = c.idempotents;
  missing.pop_back();
  auto const r1 = rookoid::verify_idempotent_family(t, missing, 1e-9);
  CHECK_FALSE(r1.passed());
  CHECK_FALSE(r1.complete);

  // Merge the two idempotents of the two-dimensional type.
  std::vector<std::size_t> two;
  for (std::size_t i = 0; i < c.idempotents.size(); ++i) {
    if (c.types[c.block_map[i]].dimension == 2) {
      two.push_back(i);
    }
  }
  REQUIRE(two.size() == 2);
  std::vector<GroupVector> merged;
  for (std::size_t i = 0; i < c.idempotents.size(); ++i) {
    if (i != two[0] && i != two[1]) {
      merged.push_back(c.idempotents[i]);
    }
  }
  merged.push_back(add(c.idempotents[two[0]], c.idempotents[two[1]]));
  auto const r2 = rookoid::verify_idempotent_family(t, merged, 1e-9);
  CHECK(r2.complete);
  CHECK(r2.idempotent);
  CHECK_FALSE(r2.minimal);
  CHECK_FALSE(r2.passed());
}

TEST_CASE("tolerance floor") {
  auto const t = rookoid::wreath_table(1, 2);
  CHECK_THROWS_AS(rookoid::csomi(t, 1, 1e-30), rookoid::NumericDegeneracyError);
  try {
    rookoid::csomi(t, 1, 1e-30);
  } catch (rookoid::NumericDegeneracyError const& e) {
    CHECK(e.suggested_tolerance() >= rookoid::kMinTolerance);
  }
}
