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

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "rookoid/cyclotomic.hpp"
#include "rookoid/errors.hpp"

using rookoid::CycNum;
using rookoid::cyc_root;
namespace oracle = rookoid::oracle;

namespace {

  bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
  }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(rookoid::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(rookoid::cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(rookoid::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(rookoid::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (std::uint32_t m = 1; m <= 40; ++m) {
    CHECK(rookoid::cyclotomic_polynomial(m).size() == rookoid::euler_phi(m) + 1);
  }
  CHECK_THROWS_AS(rookoid::cyclotomic_polynomial(0), rookoid::DomainError);
}

TEST_CASE("roots of unity") {
  CHECK(cyc_root(1, 0) == CycNum(1));
  CHECK(cyc_root(4, 2) == CycNum(-1));
  CHECK(cyc_root(3, 1) + cyc_root(3, 2) == CycNum(-1));
  CHECK(cyc_root(6, 7) == cyc_root(6, 1));
  CHECK(cyc_root(5, -1) == cyc_root(5, 4));
  CHECK(cyc_root(2, 1).is_rational());
  CHECK_THROWS_AS(cyc_root(0, 1), rookoid::DomainError);
}

TEST_CASE("addition") {
  CHECK(cyc_root(4, 1) + CycNum() == cyc_root(4, 1));
  CHECK(cyc_root(2, 1) + cyc_root(2, 1) == CycNum(-2));
  CHECK(cyc_root(6, 1) + cyc_root(6, 5) == CycNum(1));
  CHECK((cyc_root(7, 3) - cyc_root(7, 3)).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(cyc_root(4, 1) * cyc_root(4, 1) == CycNum(-1));
  auto const a = cyc_root(5, 2) + CycNum(mpq_class(3, 7));
  CHECK(a * CycNum(1) == a);
  auto const s = cyc_root(3, 1) + cyc_root(3, 2);
  CHECK(s * s == CycNum(1));
  // Mixed orders meet in the compositum.
  CHECK(cyc_root(3, 1) * cyc_root(4, 1) == cyc_root(12, 7));
}

TEST_CASE("conjugation") {
  CHECK(cyc_root(4, 1).conj() == cyc_root(4, 3));
  CHECK(CycNum(1).conj() == CycNum(1));
  auto const s = cyc_root(3, 1) + cyc_root(3, 2);
  CHECK(s.conj() == s);
}

TEST_CASE("complex evaluation") {
  CHECK(near(CycNum(1).to_complex(), {1.0, 0.0}));
  CHECK(near(cyc_root(4, 1).to_complex(), {0.0, 1.0}));
  CHECK(near(cyc_root(8, 1).to_complex(), {std::sqrt(2.0) / 2, std::sqrt(2.0) / 2}));
}

TEST_CASE("sum of primitive roots is the Moebius function") {
  for (std::uint32_t m = 1; m <= 36; ++m) {
    CycNum sum;
    for (std::uint32_t k = 1; k <= m; ++k) {
      if (std::gcd(k, m) == 1) {
        sum += cyc_root(m, k);
      }
    }
    CAPTURE(m);
    CHECK(sum == CycNum(oracle::moebius_function(m)));
  }
}

TEST_CASE("field operations agree with floating evaluation") {
  std::mt19937_64                         rng(11);
  std::uniform_int_distribution<int>      coeff(-5, 5);
  std::uniform_int_distribution<unsigned> order(1, 30);
  auto random_cyc = [&](std::uint32_t m) {
    std::vector<mpq_class> c(m);
    for (auto& q : c) {
      q = mpq_class(coeff(rng), 1 + std::abs(coeff(rng)));
    }
    return CycNum::from_powers(m, c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto const a = random_cyc(order(rng));
    auto const b = random_cyc(order(rng));
    double const scale = 1.0 + std::abs(oracle::evaluate(a)) * std::abs(oracle::evaluate(b));
    CHECK(near(oracle::evaluate(a + b), oracle::evaluate(a) + oracle::evaluate(b), 1e-9 * scale));
    CHECK(near(oracle::evaluate(a * b), oracle::evaluate(a) * oracle::evaluate(b), 1e-9 * scale));
    CHECK(near(oracle::evaluate(a.conj()), std::conj(oracle::evaluate(a)), 1e-9 * scale));
    CHECK(near(a.to_complex(), oracle::evaluate(a), 1e-9 * scale));
    CHECK((a - a).is_zero());
    CHECK(a * b == b * a);
  }
}

TEST_CASE("canonical form") {
  // 1 + zeta_3 + zeta_3^2 = 0 reduces to zero.
  CHECK(CycNum::from_powers(3, {1, 1, 1}).is_zero());
  // A rational result demotes to order 1.
  auto const x = cyc_root(5, 1) * cyc_root(5, 4);
  CHECK(x.is_rational());
  CHECK(x.rational() == 1);
  // Orders 2 mod 4 are halved.
  CHECK(cyc_root(6, 1).order() == 3);
  CHECK(cyc_root(6, 1).coordinates_in(6) == cyc_root(6, 1).coordinates_in(3));
}
