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

// Exact arithmetic in the cyclotomic fields Q(zeta_m).
//
// An element of Q(zeta_m) is stored in the power basis
// 1, zeta_m, ..., zeta_m^(phi(m)-1), i.e. as a rational polynomial reduced
// modulo the m-th cyclotomic polynomial. Two further normalisations keep the
// representation small:
//
//   * orders m = 2 (mod 4) are replaced by m / 2, since Q(zeta_2h) = Q(zeta_h)
//     for odd h;
//   * an element whose only non-zero coefficient is the constant term is
//     demoted to order 1.
//
// Mixed-order arithmetic embeds both operands into Q(zeta_lcm).

#ifndef ROOKOID_CYCLOTOMIC_HPP
#define ROOKOID_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rookoid {

  //! Integer coefficients of the m-th cyclotomic polynomial, constant term
  //! first. Throws DomainError for m == 0.
  std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m);

  //! Euler's totient.
  std::uint32_t euler_phi(std::uint32_t m);

  class CycNum {
   public:
    //! Zero.
    CycNum() = default;

    CycNum(long value);  // NOLINT(runtime/explicit)
    explicit CycNum(mpq_class const& value);

    //! zeta_m^k. Throws DomainError if m == 0.
    static CycNum root(std::uint32_t m, std::int64_t k);

    //! The element sum_j coeffs[j] * zeta_m^j, for any number of
    //! coefficients; the result is canonicalised.
    static CycNum from_powers(std::uint32_t m, std::vector<mpq_class> coeffs);

    std::uint32_t order() const noexcept {
      return order_;
    }

    //! Coefficients in the power basis of Q(zeta_order()); length phi(order),
    //! empty for zero.
    std::vector<mpq_class> const& coeffs() const noexcept {
      return coeffs_;
    }

    bool is_zero() const noexcept {
      return coeffs_.empty();
    }
    bool is_rational() const noexcept {
      return order_ == 1;
    }
    //! The value as a rational; requires is_rational().
    mpq_class rational() const;

    CycNum conj() const;
    std::complex<double> to_complex() const;

    //! Power-basis coordinates of this element inside Q(zeta_m); m must be
    //! a multiple of order() once m = 2 (mod 4) is halved.
    std::vector<mpq_class> coordinates_in(std::uint32_t m) const {
      return embed(m).coeffs_;
    }

    CycNum& operator+=(CycNum const& other);
    CycNum& operator-=(CycNum const& other);
    CycNum& operator*=(CycNum const& other);

    friend CycNum operator+(CycNum a, CycNum const& b) {
      return a += b;
    }
    friend CycNum operator-(CycNum a, CycNum const& b) {
      return a -= b;
    }
    friend CycNum operator*(CycNum a, CycNum const& b) {
      return a *= b;
    }
    CycNum operator-() const;

    friend bool operator==(CycNum const& a, CycNum const& b);
    friend bool operator!=(CycNum const& a, CycNum const& b) {
      return !(a == b);
    }

    std::string to_string() const;

   private:
    CycNum(std::uint32_t order, std::vector<mpq_class> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    void   normalise();
    CycNum embed(std::uint32_t m) const;

    std::uint32_t          order_ = 1;
    std::vector<mpq_class> coeffs_;
  };

  std::ostream& operator<<(std::ostream& os, CycNum const& x);

  // Free-function spellings of the field operations.

  inline CycNum cyc_root(std::uint32_t m, std::int64_t k) {
    return CycNum::root(m, k);
  }
  inline CycNum cyc_add(CycNum const& a, CycNum const& b) {
    return a + b;
  }
  inline CycNum cyc_mul(CycNum const& a, CycNum const& b) {
    return a * b;
  }
  inline CycNum cyc_conj(CycNum const& a) {
    return a.conj();
  }
  inline std::complex<double> cyc_to_complex(CycNum const& a) {
    return a.to_complex();
  }

}  // namespace rookoid

#endif  // ROOKOID_CYCLOTOMIC_HPP
