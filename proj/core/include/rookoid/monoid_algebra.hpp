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

// The algebra C[R_n^(r)] of formal linear combinations of coloured rook
// matrices, with its two products:
//
//   dot:  [A] . [B] = [AB]                              (monoid product)
//   star: [A] * [B] = [AB] if t(B) = s(A), else 0       (groupoid product)
//
// The Moebius transform mu([M]) = sum_{N sub M} (-1)^{|M \ N|} [N] is an
// algebra isomorphism from (C[R], star) onto (C[R], dot):
//
//   mu(P * Q) = mu(P) . mu(Q).
//
// Basis matrices are formal symbols: [E11] + [E22] is not [I].

#ifndef ROOKOID_MONOID_ALGEBRA_HPP
#define ROOKOID_MONOID_ALGEBRA_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

#include "rookoid/cyclotomic.hpp"
#include "rookoid/errors.hpp"
#include "rookoid/rook.hpp"

namespace rookoid {

  using Complex = std::complex<double>;

  template <typename S>
  struct ScalarTraits;

  template <>
  struct ScalarTraits<CycNum> {
    static constexpr char const* kind = "cyclotomic";
    static bool                  is_zero(CycNum const& x) {
      return x.is_zero();
    }
    static CycNum conj(CycNum const& x) {
      return x.conj();
    }
    static double abs2(CycNum const& x) {
      return std::norm(x.to_complex());
    }
    static CycNum root(std::uint32_t r, std::int64_t k) {
      return CycNum::root(r, k);
    }
  };

  template <>
  struct ScalarTraits<Complex> {
    static constexpr char const* kind = "complex";
    static bool                  is_zero(Complex const& x) {
      return x == Complex(0.0, 0.0);
    }
    static Complex conj(Complex const& x) {
      return std::conj(x);
    }
    static double abs2(Complex const& x) {
      return std::norm(x);
    }
    static Complex root(std::uint32_t r, std::int64_t k) {
      return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / r);
    }
  };

  template <typename S>
  class AlgebraElement {
   public:
    using scalar_type = S;
    using terms_type  = std::map<RookMatrix, S, BasisOrder>;

    AlgebraElement(std::uint32_t n, std::uint32_t r) : n_(n), r_(r) {}

    static AlgebraElement basis(RookMatrix const& m, S const& c = S(1)) {
      AlgebraElement x(m.n(), m.r());
      x.add_term(m, c);
      return x;
    }

    std::uint32_t n() const noexcept {
      return n_;
    }
    std::uint32_t r() const noexcept {
      return r_;
    }
    terms_type const& terms() const noexcept {
      return terms_;
    }
    std::size_t size() const noexcept {
      return terms_.size();
    }
    bool is_zero() const noexcept {
      return terms_.empty();
    }

    S coeff(RookMatrix const& m) const {
      auto it = terms_.find(m);
      return it == terms_.end() ? S(0) : it->second;
    }

    //! Adds c [m]; a coefficient that cancels to zero is erased.
    void add_term(RookMatrix const& m, S const& c) {
      if (m.n() != n_ || m.r() != r_) {
        throw DomainError("basis matrix " + m.to_string() + " does not belong to C[R_"
                          + std::to_string(n_) + "^(" + std::to_string(r_) + ")]");
      }
      if (ScalarTraits<S>::is_zero(c)) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (ScalarTraits<S>::is_zero(it->second)) {
          terms_.erase(it);
        }
      }
    }

    AlgebraElement& operator+=(AlgebraElement const& other) {
      check_compatible(other);
      for (auto const& [m, c] : other.terms_) {
        add_term(m, c);
      }
      return *this;
    }
    AlgebraElement& operator-=(AlgebraElement const& other) {
      check_compatible(other);
      for (auto const& [m, c] : other.terms_) {
        add_term(m, -c);
      }
      return *this;
    }
    AlgebraElement& operator*=(S const& c) {
      if (ScalarTraits<S>::is_zero(c)) {
        terms_.clear();
        return *this;
      }
      for (auto& term : terms_) {
        term.second *= c;
      }
      return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }
    friend AlgebraElement operator*(S const& c, AlgebraElement a) {
      return a *= c;
    }
    AlgebraElement operator-() const {
      AlgebraElement x = *this;
      return x *= S(-1);
    }

    friend bool operator==(AlgebraElement const& a, AlgebraElement const& b) {
      return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    void check_compatible(AlgebraElement const& other) const {
      if (other.n_ != n_ || other.r_ != r_) {
        throw DomainError("algebra elements live in different algebras");
      }
    }

   private:
    std::uint32_t n_;
    std::uint32_t r_;
    terms_type    terms_;
  };

  using ExactElement   = AlgebraElement<CycNum>;
  using ComplexElement = AlgebraElement<Complex>;

  template <typename S>
  std::ostream& operator<<(std::ostream& os, AlgebraElement<S> const& x) {
    if (x.is_zero()) {
      return os << "0";
    }
    bool first = true;
    for (auto const& [m, c] : x.terms()) {
      os << (first ? "" : " + ") << "(" << c << ")" << m;
      first = false;
    }
    return os;
  }

  //! Bilinear extension of the matrix product.
  template <typename S>
  AlgebraElement<S> dot(AlgebraElement<S> const& p, AlgebraElement<S> const& q) {
    p.check_compatible(q);
    AlgebraElement<S> out(p.n(), p.r());
    for (auto const& [a, ca] : p.terms()) {
      for (auto const& [b, cb] : q.terms()) {
        out.add_term(rook_mul(a, b), ca * cb);
      }
    }
    return out;
  }

  //! Bilinear extension of [A] * [B] = [AB] when t(B) = s(A), 0 otherwise.
  template <typename S>
  AlgebraElement<S> star(AlgebraElement<S> const& p, AlgebraElement<S> const& q) {
    p.check_compatible(q);
    AlgebraElement<S> out(p.n(), p.r());
    for (auto const& [a, ca] : p.terms()) {
      for (auto const& [b, cb] : q.terms()) {
        if (b.target_mask() == a.source_mask()) {
          out.add_term(rook_mul(a, b), ca * cb);
        }
      }
    }
    return out;
  }

  template <typename S = CycNum>
  AlgebraElement<S> partial_identity(SubsetId const& s, std::uint32_t r) {
    return AlgebraElement<S>::basis(RookMatrix::partial_identity(s, r));
  }

  //! e_A = sum_{Q sub A} (-1)^{|A \ Q|} [I_Q].
  template <typename S = CycNum>
  AlgebraElement<S> mobius_e(SubsetId const& a, std::uint32_t r) {
    AlgebraElement<S>   out(a.n(), r);
    std::uint32_t const full = a.mask();
    // Walk every sub-mask of full, including 0.
    for (std::uint32_t q = full;; q = (q - 1) & full) {
      int const sign = std::popcount(full ^ q) % 2 == 0 ? 1 : -1;
      out.add_term(RookMatrix::partial_identity(SubsetId(a.n(), q), r), S(sign));
      if (q == 0) {
        break;
      }
    }
    return out;
  }

  //! mu(M) = sum_{N sub M} (-1)^{|M \ N|} [N], N ranging over sub-matrices
  //! (subsets of the entries, colours kept).
  template <typename S = CycNum>
  AlgebraElement<S> mobius(RookMatrix const& m) {
    AlgebraElement<S>   out(m.n(), m.r());
    std::uint32_t const full = m.source_mask();
    for (std::uint32_t q = full;; q = (q - 1) & full) {
      int const sign = std::popcount(full ^ q) % 2 == 0 ? 1 : -1;
      out.add_term(m.restrict_columns(q), S(sign));
      if (q == 0) {
        break;
      }
    }
    return out;
  }

  //! Linear extension of mu.
  template <typename S>
  AlgebraElement<S> mobius(AlgebraElement<S> const& p) {
    AlgebraElement<S> out(p.n(), p.r());
    for (auto const& [m, c] : p.terms()) {
      std::uint32_t const full = m.source_mask();
      for (std::uint32_t q = full;; q = (q - 1) & full) {
        out.add_term(m.restrict_columns(q), std::popcount(full ^ q) % 2 == 0 ? c : S(-c));
        if (q == 0) {
          break;
        }
      }
    }
    return out;
  }

  //! Inverse of mu: the zeta transform [M] -> sum_{N sub M} [N].
  template <typename S>
  AlgebraElement<S> mobius_inverse(AlgebraElement<S> const& p) {
    AlgebraElement<S> out(p.n(), p.r());
    for (auto const& [m, c] : p.terms()) {
      std::uint32_t const full = m.source_mask();
      for (std::uint32_t q = full;; q = (q - 1) & full) {
        out.add_term(m.restrict_columns(q), c);
        if (q == 0) {
          break;
        }
      }
    }
    return out;
  }

  //! Unit of the star product: sum over all S of [I_S].
  template <typename S = CycNum>
  AlgebraElement<S> star_unit(std::uint32_t n, std::uint32_t r) {
    AlgebraElement<S> out(n, r);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      out.add_term(RookMatrix::partial_identity(SubsetId(n, mask), r), S(1));
    }
    return out;
  }

  //! Unit of the rank-k component: sum over k-subsets X of [I_X].
  template <typename S = CycNum>
  AlgebraElement<S> component_unit(std::uint32_t n, std::uint32_t r, std::uint32_t k) {
    AlgebraElement<S> out(n, r);
    for (auto const& x : k_subsets(n, k)) {
      out.add_term(RookMatrix::partial_identity(x, r), S(1));
    }
    return out;
  }

  //! Sum of the coefficients on the local units [I_S].
  template <typename S>
  S trace(AlgebraElement<S> const& p) {
    S t(0);
    for (auto const& [m, c] : p.terms()) {
      if (m.is_partial_identity()) {
        t += c;
      }
    }
    return t;
  }

  //! Conjugates coefficients and daggers basis matrices.
  template <typename S>
  AlgebraElement<S> involution(AlgebraElement<S> const& p) {
    AlgebraElement<S> out(p.n(), p.r());
    for (auto const& [m, c] : p.terms()) {
      out.add_term(dagger(m), ScalarTraits<S>::conj(c));
    }
    return out;
  }

  struct NormAndState {
    double norm;
    double state;
  };

  //! norm = sqrt(Tr(P* P)), the l2 norm of the coefficients;
  //! state = Tr(P* P) / 2^n.
  template <typename S>
  NormAndState norm_and_state(AlgebraElement<S> const& p) {
    double sq = 0.0;
    for (auto const& term : p.terms()) {
      sq += ScalarTraits<S>::abs2(term.second);
    }
    return {std::sqrt(sq), sq / std::ldexp(1.0, static_cast<int>(p.n()))};
  }

  template <typename S>
  double norm(AlgebraElement<S> const& p) {
    return norm_and_state(p).norm;
  }

  //! The same element with coefficients evaluated in C.
  inline ComplexElement to_complex(ExactElement const& p) {
    ComplexElement out(p.n(), p.r());
    for (auto const& [m, c] : p.terms()) {
      out.add_term(m, c.to_complex());
    }
    return out;
  }

  //! Restriction to the basis elements of rank k.
  template <typename S>
  AlgebraElement<S> rank_part(AlgebraElement<S> const& p, std::uint32_t k) {
    AlgebraElement<S> out(p.n(), p.r());
    for (auto const& [m, c] : p.terms()) {
      if (m.rank() == k) {
        out.add_term(m, c);
      }
    }
    return out;
  }

}  // namespace rookoid

#endif  // ROOKOID_MONOID_ALGEBRA_HPP
