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

// Finite groups given by multiplication table, and the splitting of their
// complex group algebras into orthogonal minimal idempotents.
//
// Elements of C[G] are dense coefficient vectors indexed by the table's
// element indices (GroupVector). The involution is
//   (sum c_g g)^* = sum conj(c_g) g^{-1},
// under which the left regular representation is a *-representation, so
// spectral projections of self-adjoint elements are idempotents of C[G].

#ifndef ROOKOID_GROUP_REP_HPP
#define ROOKOID_GROUP_REP_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace rookoid {

  inline constexpr std::uint64_t kMaxGroupOrder = 100000;

  //! Smallest tolerance a floating splitting can certify: a few ulps of 1.
  inline constexpr double kMinTolerance = 4.0 * std::numeric_limits<double>::epsilon();

  class GroupTable {
   public:
    GroupTable() : GroupTable(1, {0}) {}

    //! mul holds order * order indices, mul[a * order + b] = a b. Throws
    //! DomainError if the table is not a group. Associativity is checked
    //! exhaustively up to order 200 and on a deterministic sample above.
    GroupTable(std::uint32_t              order,
               std::vector<std::uint32_t> mul,
               std::vector<std::string>   labels = {});

    std::uint32_t order() const noexcept {
      return order_;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
      return mul_[static_cast<std::size_t>(a) * order_ + b];
    }
    std::uint32_t unit() const noexcept {
      return unit_;
    }
    std::uint32_t inv(std::uint32_t a) const noexcept {
      return inv_[a];
    }
    std::vector<std::uint32_t> const& table() const noexcept {
      return mul_;
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::string label(std::uint32_t a) const;

   private:
    std::uint32_t              order_;
    std::vector<std::uint32_t> mul_;
    std::uint32_t              unit_ = 0;
    std::vector<std::uint32_t> inv_;
    std::vector<std::string>   labels_;
  };

  //! An element of Z_r wr S_k: a colour word and a permutation of [0, k).
  //! It acts as the monomial matrix with entry zeta_r^{colours[c]} at
  //! (row perm[c], column c).
  struct WreathElement {
    std::vector<std::uint32_t> colours;
    std::vector<int>           perm;
  };

  //! Elements of Z_r wr S_k in table order: permutations lexicographic, then
  //! colour words lexicographic.
  std::vector<WreathElement> wreath_elements(std::uint32_t r, std::uint32_t k);

  //! (c, p)(c', p') = (i -> c[p'(i)] + c'[i], p o p'). Throws ResourceError
  //! if r^k k! exceeds kMaxGroupOrder.
  GroupTable wreath_table(std::uint32_t r, std::uint32_t k);

  //! Orbits of the conjugation action, ordered by least element; each class
  //! sorted.
  std::vector<std::vector<std::uint32_t>> conjugacy_classes(GroupTable const& t);

  using GroupVector = std::vector<std::complex<double>>;

  GroupVector group_unit(GroupTable const& t);
  GroupVector group_mul(GroupTable const& t, GroupVector const& a, GroupVector const& b);
  GroupVector group_involution(GroupTable const& t, GroupVector const& a);
  //! l2 norm of the coefficient vector.
  double group_norm(GroupVector const& a);
  double group_distance(GroupVector const& a, GroupVector const& b);

  //! The minimal central idempotents, one per irreducible type, in the order
  //! of increasing dimension (ties broken by the coefficient vectors). Found
  //! as eigenvectors of a random combination of class-sum multiplication
  //! operators on the centre. Throws NumericDegeneracyError if eigenvalues
  //! cannot be separated.
  std::vector<GroupVector> central_idempotents(GroupTable const& t);

  //! Irreducible dimension d with |G| f(1) = d^2, and the rounding residual.
  std::pair<std::uint32_t, double> central_dimension(GroupTable const& t, GroupVector const& f);

  struct CsomiType {
    std::uint32_t dimension;          // d_i
    double        rounding_residual;  // | sqrt(|G| f(1)) - d_i |
    GroupVector   central;            // f_i
  };

  struct CsomiResiduals {
    double completeness   = 0.0;
    double orthogonality  = 0.0;
    double idempotence    = 0.0;
    double dimension      = 0.0;
    double max() const noexcept;
  };

  //! Complete set of orthogonal minimal idempotents of C[G].
  struct Csomi {
    std::uint32_t              group_order = 1;
    std::vector<GroupVector>   idempotents;
    std::vector<std::uint32_t> block_map;  // idempotent -> type index
    std::vector<CsomiType>     types;
    CsomiResiduals             residuals;
    std::uint64_t              seed      = 0;
    double                     tolerance = 0.0;
    std::uint32_t              attempts  = 1;
  };

  //! Refines every central idempotent f into d orthogonal minimal idempotents
  //! through the spectral projections of a random self-adjoint element of the
  //! corner f C[G] f. Deterministic for a given seed. Throws
  //! NumericDegeneracyError when tol < kMinTolerance, when the splitting
  //! stays degenerate over 8 reseeds or when the residuals exceed tol.
  Csomi csomi(GroupTable const& t, std::uint64_t seed, double tol = 1e-9);

  struct CsomiReport {
    bool        complete      = false;
    bool        orthogonal    = false;
    bool        idempotent    = false;
    bool        isotypic      = false;
    bool        minimal       = false;  // idempotent count per type == d_i
    bool        dimension_sum = false;  // sum d_i^2 == |G|
    double      max_residual  = 0.0;
    std::string detail;

    bool passed() const noexcept {
      return complete && orthogonal && idempotent && isotypic && minimal && dimension_sum;
    }
  };

  //! Re-checks a family against freshly computed central idempotents.
  CsomiReport verify_csomi(GroupTable const& t, Csomi const& c, double tol = 1e-9);

  //! Same as above for a bare family of idempotents.
  CsomiReport verify_idempotent_family(GroupTable const&               t,
                                       std::vector<GroupVector> const& family,
                                       double                          tol);

}  // namespace rookoid

#endif  // ROOKOID_GROUP_REP_HPP
