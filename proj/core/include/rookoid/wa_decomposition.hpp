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

// Wedderburn-Artin splitting of C[R_n^(r)] under the star product.
//
// The star algebra is the direct sum over k of the groupoid algebras of the
// rank-k groupoids. In each one a complete set of orthogonal minimal
// idempotents of the isotropy group at the origin [1..k] is moved to every
// object y by e -> alpha_y * e * alpha_y^*. Minimality is certified by
// comparing sum D^2 over the left ideals C[G] * e, one per type, with the
// arrow count.

#ifndef ROOKOID_WA_DECOMPOSITION_HPP
#define ROOKOID_WA_DECOMPOSITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rookoid/group_rep.hpp"
#include "rookoid/groupoid.hpp"
#include "rookoid/monoid_algebra.hpp"

namespace rookoid {

  inline constexpr char const* kReportSchema = "rookoid-report/1";

  //! Largest isotropy order decompose() will split with dense linear algebra.
  inline constexpr std::uint32_t kMaxDenseIsotropy = 1024;

  struct ConjugatedIdempotent {
    int            object = 0;  // y
    std::uint32_t  index  = 0;  // i, position in the origin family
    std::uint32_t  type   = 0;  // irreducible type of the isotropy group
    std::uint32_t  measured_dimension = 0;  // numerical rank of x -> x * e
    ComplexElement element{1, 1};
  };

  //! e_y^(i) = alpha_y * e_x^(i) * alpha_y^* in the star product, for every
  //! object y and every idempotent of origin_csomi (objects outer, index
  //! inner). Throws DomainError if the frame does not fit g.
  std::vector<ConjugatedIdempotent> conjugate_family(Groupoid const&            g,
                                                     RepresentativeFrame const& frame,
                                                     Csomi const&               origin_csomi);

  struct ComponentType {
    std::uint32_t index        = 0;
    std::uint32_t d            = 0;  // irreducible dimension for the isotropy group
    std::uint32_t D            = 0;  // |Ob| d
    std::uint32_t multiplicity = 0;  // idempotents of this type, |Ob| d
    std::uint32_t measured     = 0;  // measured ideal dimension
  };

  struct ComponentResiduals {
    double csomi         = 0.0;
    double completeness  = 0.0;
    double orthogonality = 0.0;
    double idempotence   = 0.0;
    double max() const noexcept;
  };

  struct ComponentReport {
    std::uint32_t                     k              = 0;
    std::uint64_t                     objects        = 0;
    std::uint64_t                     isotropy_order = 0;
    std::uint64_t                     arrow_count    = 0;
    std::string                       origin;
    bool                              isotropy_is_wreath = false;
    bool                              diagonal_ok        = false;
    bool                              equal_dimension_types = false;  // two types share d
    std::uint32_t                     csomi_attempts     = 1;
    std::vector<ComponentType>        types;
    std::vector<ConjugatedIdempotent> idempotents;
    std::uint64_t                     sum_D2 = 0;
    ComponentResiduals                residuals;
  };

  struct Verdict {
    std::string name;
    bool        passed   = false;
    double      residual = 0.0;
    std::string detail;
  };

  struct VerificationReport {
    std::vector<Verdict> verdicts;
    bool                 passed() const noexcept;
    Verdict const&       verdict(std::string const& name) const;
  };

  struct DecompositionReport {
    std::string                  schema = kReportSchema;
    std::uint32_t                n      = 1;
    std::uint32_t                r      = 1;
    std::uint64_t                seed   = 0;
    double                       tolerance = 1e-9;
    std::vector<ComponentReport> components;  // k = 0..n
    std::string                  grand_total;  // sum of all sum_D2, decimal
    std::string                  count;        // |R_n^(r)|, decimal
    std::vector<Verdict>         verdicts;
    bool passed() const noexcept;
  };

  //! Runs every rank as an independent job and verifies the assembled
  //! report. Throws ResourceError when |R_n^(r)| exceeds max_elements or an
  //! isotropy group exceeds kMaxDenseIsotropy, and NumericDegeneracyError
  //! for tol < kMinTolerance or from the group splitting.
  DecompositionReport decompose(std::uint32_t n,
                                std::uint32_t r,
                                std::uint64_t seed,
                                double        tol          = 1e-9,
                                std::uint64_t max_elements = kMaxGroupOrder);

  //! Rebuilds each groupoid from (n, r) and re-checks completeness,
  //! orthogonality over all pairs, idempotence, support, types, ideal
  //! dimensions, the sum of D^2 per component and the grand total. Never
  //! throws on a malformed family; failures become verdicts.
  VerificationReport verify_decomposition(DecompositionReport const& rep, double tol);

  //! For each object x: the arrows a with 1_x * a * 1_x != 0 are exactly
  //! Hom(x, x); and sum_x 1_x is the component unit.
  Verdict diagonal_subalgebra_check(Groupoid const& g);

  //! Numerical rank of x -> x * e on the arrow space of g; e must be
  //! supported on the arrows of g.
  std::uint32_t ideal_dimension(Groupoid const& g, ComplexElement const& e, double tol);

  //! All idempotents of the report, pushed through the Moebius map into the
  //! dot-product algebra.
  std::vector<ComplexElement> transport_to_monoid(DecompositionReport const& rep);

  //! Sum equals [I], pairwise dot products vanish and every member is a dot
  //! idempotent, each within tol.
  Verdict verify_monoid_transport(std::uint32_t                      n,
                                  std::uint32_t                      r,
                                  std::vector<ComplexElement> const& family,
                                  double                             tol);

}  // namespace rookoid

#endif  // ROOKOID_WA_DECOMPOSITION_HPP
