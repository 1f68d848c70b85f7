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
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "rookoid/errors.hpp"
#include "rookoid/groupoid.hpp"

using rookoid::Groupoid;
using rookoid::RookMatrix;
using rookoid::RookEntry;
using rookoid::SubsetId;
namespace oracle = rookoid::oracle;

namespace {

  // Sorted list of element orders, an isomorphism invariant.
  std::vector<std::uint32_t> element_orders(rookoid::GroupTable const& t) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t g = 0; g < t.order(); ++g) {
      std::uint32_t k = 1;
      for (std::uint32_t p = g; p != t.unit(); p = t.mul(p, g)) {
        ++k;
      }
      out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<rookoid::RookEntry> support(RookMatrix const& m) {
    return m.entries();
  }

}  // namespace

TEST_CASE("rank groupoid sizes") {
  auto const g = rookoid::build_rank_groupoid(2, 1, 1);
  CHECK(g.object_count() == 2);
  CHECK(g.arrow_count() == 4);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    auto const z = rookoid::build_rank_groupoid(n, 2, 0);
    CHECK(z.object_count() == 1);
    CHECK(z.arrow_count() == 1);
  }
  auto const top = rookoid::build_rank_groupoid(3, 2, 3);
  CHECK(top.object_count() == 1);
  CHECK(top.arrow_count() == 48);
  CHECK_THROWS_AS(rookoid::build_rank_groupoid(2, 1, 3), rookoid::DomainError);
}

TEST_CASE("composition follows the matrix product on composable pairs") {
  auto const g = rookoid::build_rank_groupoid(3, 2, 2);
  REQUIRE(g.has_table());
  for (int o = 0; o < static_cast<int>(g.arrow_count()); ++o) {
    for (int i = 0; i < static_cast<int>(g.arrow_count()); ++i) {
      auto const c  = g.compose(o, i);
      auto const& a = *g.arrow(o).payload;
      auto const& b = *g.arrow(i).payload;
      if (a.source() == b.target()) {
        REQUIRE(c.has_value());
        REQUIRE(*g.arrow(*c).payload == rookoid::rook_mul(a, b));
      } else {
        REQUIRE_FALSE(c.has_value());
      }
    }
  }
  // Without a table the product is computed on demand.
  auto const big = rookoid::build_rank_groupoid(5, 2, 3);
  CHECK_FALSE(big.has_table());
  auto const m  = RookMatrix::from_support(5, 2, {{1, 2, 1}, {2, 4, 0}, {5, 5, 1}});
  auto const id = *big.arrow_id(m);
  auto const inv = big.inverse(id);
  CHECK(*big.arrow(inv).payload == rookoid::dagger(m));
  CHECK(big.compose(inv, id) == big.unit(big.source(id)));
}

TEST_CASE("hom sets") {
  auto const g = rookoid::build_rank_groupoid(3, 2, 2);
  std::size_t total = 0;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      auto const h = g.hom(x, y);
      CHECK(h.size() == 8);
      CHECK(std::is_sorted(h.begin(), h.end()));
      total += h.size();
    }
  }
  CHECK(total == g.arrow_count());
}

TEST_CASE("isotropy groups") {
  auto const g0 = rookoid::build_rank_groupoid(3, 1, 0);
  CHECK(rookoid::isotropy_group(g0, 0).order() == 1);

  auto const g1 = rookoid::build_rank_groupoid(3, 1, 2);
  auto const x1 = *g1.object_id(SubsetId::of(3, {1, 2}));
  CHECK(rookoid::isotropy_group(g1, x1).order() == 2);

  auto const g2 = rookoid::build_rank_groupoid(2, 2, 2);
  auto const t  = rookoid::isotropy_group(g2, 0);
  CHECK(t.order() == 8);
  auto const w = rookoid::wreath_table(2, 2);
  CHECK(element_orders(t) == element_orders(w));
  CHECK(oracle::class_sizes(t) == oracle::class_sizes(w));

  auto const g3 = rookoid::build_rank_groupoid(4, 2, 2);
  for (int x = 0; x < static_cast<int>(g3.object_count()); ++x) {
    CHECK(rookoid::isotropy_arrows(g3, x).size() == 8);
  }
  CHECK_THROWS_AS(rookoid::isotropy_group(g3, 99), rookoid::DomainError);
}

TEST_CASE("representative frame") {
  auto const g = rookoid::build_rank_groupoid(2, 1, 1);
  auto const f = rookoid::representative_frame(g, 1);
  CHECK(g.object_subset(f.origin) == SubsetId::of(2, {1}));
  auto const y = *g.object_id(SubsetId::of(2, {2}));
  CHECK(support(*g.arrow(f.reps[y]).payload) == std::vector<RookEntry>{{1, 2, 0}});
  CHECK(f.reps[f.origin] == g.unit(f.origin));

  auto const full = rookoid::build_rank_groupoid(3, 2, 3);
  auto const ff   = rookoid::representative_frame(full, 3);
  REQUIRE(ff.reps.size() == 1);
  CHECK(*full.arrow(ff.reps[0]).payload == RookMatrix::identity(3, 2));

  auto const g3 = rookoid::build_rank_groupoid(3, 1, 2);
  auto const f3 = rookoid::representative_frame(g3, 2);
  auto const y3 = *g3.object_id(SubsetId::of(3, {1, 3}));
  CHECK(support(*g3.arrow(f3.reps[y3]).payload) == std::vector<RookEntry>{{1, 1, 0}, {2, 3, 0}});

  for (std::uint32_t k = 0; k <= 3; ++k) {
    auto const gk = rookoid::build_rank_groupoid(3, 2, k);
    auto const fk = rookoid::representative_frame(gk, k);
    for (int x = 0; x < static_cast<int>(gk.object_count()); ++x) {
      CHECK(gk.source(fk.reps[x]) == fk.origin);
      CHECK(gk.target(fk.reps[x]) == x);
    }
    CHECK(rookoid::verify_isotropy_conjugation(gk, fk).passed);
  }
}

TEST_CASE("axioms hold on rook groupoids") {
  auto const a = rookoid::build_rank_groupoid(3, 1, 2);
  CHECK(a.arrow_count() == 18);
  auto const ra = rookoid::verify_axioms(a);
  CHECK(ra.passed());
  CHECK(ra.check("associativity").checked > 0);

  auto const b = rookoid::build_rank_groupoid(2, 4, 1);
  CHECK(b.arrow_count() == 16);
  CHECK(rookoid::verify_axioms(b).passed());

  // Without a table the same checks run on matrix payloads.
  auto data = rookoid::build_rank_groupoid(3, 2, 2).data();
  data.composition.clear();
  auto const c = Groupoid::from_data(data);
  CHECK_FALSE(c.has_table());
  CHECK(rookoid::verify_axioms(c).passed());
}

TEST_CASE("axiom faults are reported") {
  auto const g = rookoid::build_rank_groupoid(3, 1, 2);

  SUBCASE("corrupted inverse") {
    auto data       = g.data();
    data.inverse[5] = data.inverse[6];
    auto const bad  = Groupoid::from_data(data);
    auto const rep  = rookoid::verify_axioms(bad);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.check("inverses").passed);
    CHECK_FALSE(rep.check("inverses").witness.empty());
    CHECK(rep.check("units").passed);
  }
  SUBCASE("unit that is not a loop") {
    auto data     = g.data();
    data.units[0] = data.units[1];
    auto const rep = rookoid::verify_axioms(Groupoid::from_data(data));
    CHECK_FALSE(rep.check("units").passed);
  }
  SUBCASE("table defined on a non-composable pair") {
    auto data        = g.data();
    auto const count = static_cast<int>(data.arrows.size());
    for (int o = 0; o < count; ++o) {
      for (int i = 0; i < count; ++i) {
        if (data.arrows[o].source != data.arrows[i].target) {
          data.composition[static_cast<std::size_t>(o) * count + i] = 0;
          o = count;
          break;
        }
      }
    }
    auto const rep = rookoid::verify_axioms(Groupoid::from_data(data));
    CHECK_FALSE(rep.check("closure").passed);
  }
  SUBCASE("connectedness claimed for a disconnected groupoid") {
    rookoid::GroupoidData data;
    data.objects     = {"a", "b"};
    data.arrows      = {{0, 0, std::nullopt}, {1, 1, std::nullopt}};
    data.units       = {0, 1};
    data.inverse     = {0, 1};
    data.composition = {0, -1, -1, 1};
    data.connected   = true;
    auto const rep   = rookoid::verify_axioms(Groupoid::from_data(data));
    CHECK_FALSE(rep.check("connected").passed);
    CHECK(rep.check("associativity").passed);
  }
  SUBCASE("malformed data is rejected") {
    auto data = g.data();
    data.inverse.pop_back();
    CHECK_THROWS_AS(Groupoid::from_data(data), rookoid::DomainError);
  }
}
