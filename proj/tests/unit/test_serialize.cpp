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

#include "doctest.h"
#include "oracles.hpp"
#include "rookoid/errors.hpp"
#include "rookoid/serialize.hpp"

using rookoid::CycNum;
using rookoid::Json;
using rookoid::RookMatrix;

TEST_CASE("cyclotomic numbers") {
  auto const x = CycNum::root(12, 5) + CycNum(mpq_class(-2, 9));
  auto const j = rookoid::to_json(x);
  CHECK(j.at("order") == 12);
  CHECK(rookoid::cyc_from_json(j) == x);
  CHECK(rookoid::cyc_from_json(rookoid::to_json(CycNum())).is_zero());
  CHECK_THROWS_AS(rookoid::cyc_from_json(Json::parse(R"({"order": 0, "coeffs": []})")), rookoid::SchemaError);
  CHECK_THROWS_AS(rookoid::cyc_from_json(Json::parse(R"({"order": 3, "coeffs": [[3, "1"]]})")),
                  rookoid::SchemaError);
  CHECK_THROWS_AS(rookoid::cyc_from_json(Json::parse(R"({"order": 3, "coeffs": [[1, "1/0"]]})")),
                  rookoid::SchemaError);
}

TEST_CASE("rook matrices") {
  auto const m = RookMatrix::from_support(3, 4, {{3, 1, 1}, {2, 3, 2}});
  auto const j = rookoid::to_json(m);
  CHECK(j == Json::parse(R"({"n": 3, "r": 4, "entries": [[2, 3, 2], [3, 1, 1]]})"));
  CHECK(rookoid::rook_from_json(j) == m);
  CHECK_THROWS_AS(rookoid::rook_from_json(Json::parse(R"({"n": 3, "r": 1, "entries": [[1, 2, 0], [1, 3, 0]]})")),
                  rookoid::SchemaError);
  CHECK_THROWS_AS(rookoid::rook_from_json(Json::parse(R"({"n": 3, "entries": []})")), rookoid::SchemaError);
}

TEST_CASE("algebra elements") {
  auto const a = RookMatrix::from_support(2, 3, {{1, 2, 1}});
  rookoid::ExactElement x(2, 3);
  x.add_term(a, CycNum::root(3, 1));
  x.add_term(RookMatrix(2, 3), CycNum(mpq_class(1, 2)));
  auto const j = rookoid::to_json(x);
  CHECK(j.at("scalar") == "cyclotomic");
  REQUIRE(j.at("terms").size() == 2);
  // Terms are [matrix, scalar] pairs in basis order.
  CHECK(j.at("terms")[0][0] == rookoid::to_json(RookMatrix(2, 3)));
  CHECK(j.at("terms")[1][0] == rookoid::to_json(a));
  CHECK(rookoid::exact_element_from_json(j) == x);

  rookoid::ComplexElement y(2, 3);
  y.add_term(a, {0.25, -1.5});
  auto const k = rookoid::to_json(y);
  CHECK(k.at("scalar") == "complex");
  CHECK(k.at("terms")[0][1] == Json::parse("[0.25, -1.5]"));
  CHECK(rookoid::complex_element_from_json(k) == y);
  CHECK_THROWS_AS(rookoid::exact_element_from_json(k), rookoid::SchemaError);

  auto bad = k;
  bad["terms"][0][0]["n"] = 3;
  CHECK_THROWS_AS(rookoid::complex_element_from_json(bad), rookoid::SchemaError);
}

TEST_CASE("reports round trip byte for byte") {
  auto const rep  = rookoid::decompose(2, 2, 42);
  auto const text = rookoid::dump_report(rep);
  auto const back = rookoid::parse_report(text);
  CHECK(rookoid::dump_report(back) == text);
  CHECK(rookoid::verify_decomposition(back, rep.tolerance).passed());
  CHECK(back.grand_total == "17");
}

TEST_CASE("malformed reports") {
  auto const text = rookoid::dump_report(rookoid::decompose(1, 1, 42));
  CHECK_THROWS_AS(rookoid::parse_report(text.substr(0, text.size() / 2)), rookoid::SchemaError);
  CHECK_THROWS_AS(rookoid::parse_report("[]"), rookoid::SchemaError);
  auto j      = Json::parse(text);
  j["schema"] = "rookoid-report/0";
  CHECK_THROWS_AS(rookoid::parse_report(j.dump()), rookoid::SchemaError);
  j           = Json::parse(text);
  j["n"]      = 40;
  CHECK_THROWS_AS(rookoid::parse_report(j.dump()), rookoid::SchemaError);
  j = Json::parse(text);
  j.erase("components");
  CHECK_THROWS_AS(rookoid::parse_report(j.dump()), rookoid::SchemaError);
}

TEST_CASE("groupoids and splittings") {
  auto const g = rookoid::build_rank_groupoid(2, 1, 1);
  auto const j = rookoid::to_json(g);
  CHECK(j.is_object());
  auto const c  = rookoid::csomi(rookoid::wreath_table(1, 3), 1);
  auto const jc = rookoid::to_json(c);
  CHECK(jc.is_object());
}
