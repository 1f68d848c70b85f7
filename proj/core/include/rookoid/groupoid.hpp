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

// Finite groupoids. Objects and arrows are identified by dense integer ids.
// compose(outer, inner) is the arrow "outer after inner", defined exactly
// when source(outer) == target(inner); for rook groupoids it is the matrix
// product outer * inner.
//
// The rank-k rook groupoid has the k-subsets of [1..n] as objects (id =
// lexicographic rank) and the rank-k coloured rook matrices as arrows (id =
// position in the enumeration order of the stratum), an arrow M going from
// s(M) to t(M).

#ifndef ROOKOID_GROUPOID_HPP
#define ROOKOID_GROUPOID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rookoid/group_rep.hpp"
#include "rookoid/rook.hpp"

namespace rookoid {

  struct ArrowRecord {
    int                       source;
    int                       target;
    std::optional<RookMatrix> payload;
  };

  //! Plain data of a groupoid, used to build or fault-inject one.
  struct GroupoidData {
    std::vector<std::string>            objects;
    std::vector<std::optional<SubsetId>> object_subsets;  // empty, or one per object
    std::vector<ArrowRecord>            arrows;
    std::vector<int>                    units;    // object -> arrow
    std::vector<int>                    inverse;  // arrow -> arrow
    //! arrows.size()^2 entries, compose(outer, inner) at outer * |Ar| + inner,
    //! -1 where undefined. May be empty for rook groupoids (then the matrix
    //! product is used).
    std::vector<std::int32_t> composition;
    bool                      connected = false;
  };

  class Groupoid {
   public:
    //! Arrow count up to which rook groupoids precompute composition.
    static constexpr std::size_t kTableArrowCap = 2048;

    //! Checks ids are in range and sizes agree; axioms are left to
    //! verify_axioms.
    static Groupoid from_data(GroupoidData data);

    std::size_t object_count() const noexcept {
      return data_.objects.size();
    }
    std::size_t arrow_count() const noexcept {
      return data_.arrows.size();
    }
    std::string const& object_label(int x) const {
      return data_.objects.at(x);
    }
    std::optional<SubsetId> object_subset(int x) const;
    ArrowRecord const&      arrow(int a) const {
      return data_.arrows.at(a);
    }
    int source(int a) const {
      return data_.arrows.at(a).source;
    }
    int target(int a) const {
      return data_.arrows.at(a).target;
    }
    int unit(int x) const {
      return data_.units.at(x);
    }
    int inverse(int a) const {
      return data_.inverse.at(a);
    }
    bool connected() const noexcept {
      return data_.connected;
    }
    bool has_table() const noexcept {
      return !data_.composition.empty();
    }

    //! outer after inner, or nothing when source(outer) != target(inner).
    std::optional<int> compose(int outer, int inner) const;

    //! Arrows x -> y, ascending ids.
    std::vector<int> hom(int x, int y) const;

    //! For rook groupoids: the id of a rank-k matrix / a k-subset.
    std::optional<int> arrow_id(RookMatrix const& m) const;
    std::optional<int> object_id(SubsetId const& s) const;

    //! Rook parameters (n, r, k) when built by build_rank_groupoid.
    bool is_rook() const noexcept {
      return rook_.has_value();
    }
    std::uint32_t rook_n() const;
    std::uint32_t rook_r() const;
    std::uint32_t rook_k() const;

    GroupoidData const& data() const noexcept {
      return data_;
    }

   private:
    struct RookParams {
      std::uint32_t n, r, k;
    };

    GroupoidData              data_;
    std::optional<RookParams> rook_;

    friend Groupoid build_rank_groupoid(std::uint32_t n, std::uint32_t r, std::uint32_t k);
  };

  //! Objects: the k-subsets of [1..n]; arrows: the rank-k coloured rook
  //! matrices; composition: the matrix product; units: I_X; inverse: dagger.
  Groupoid build_rank_groupoid(std::uint32_t n, std::uint32_t r, std::uint32_t k);

  //! Loops at x in ascending arrow id; element i of isotropy_group(g, x) is
  //! arrow isotropy_arrows(g, x)[i].
  std::vector<int> isotropy_arrows(Groupoid const& g, int x);

  //! Multiplication table of Hom(x, x). Throws DomainError for an unknown
  //! object.
  GroupTable isotropy_group(Groupoid const& g, int x);

  //! Origin x and one arrow alpha_y : x -> y per object y.
  struct RepresentativeFrame {
    int              origin = 0;
    std::vector<int> reps;
  };

  //! Origin [1..k]; alpha_Y is the colour-free increasing bijection
  //! [1..k] -> Y. Requires a rank-k rook groupoid.
  RepresentativeFrame representative_frame(Groupoid const& g, std::uint32_t k);

  struct AxiomCheck {
    std::string   name;
    bool          passed  = true;
    std::uint64_t checked = 0;
    std::string   witness;
  };

  struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool                    passed() const noexcept;
    AxiomCheck const&       check(std::string const& name) const;
  };

  //! Exhaustively checks units, unit laws, inverses, closure of composition,
  //! associativity on every composable triple and the connectedness flag.
  AxiomReport verify_axioms(Groupoid const& g);

  //! Checks that h -> alpha_y h alpha_y^* maps Hom(x, x) bijectively and
  //! homomorphically onto Hom(y, y) for every object y.
  AxiomCheck verify_isotropy_conjugation(Groupoid const& g, RepresentativeFrame const& frame);

}  // namespace rookoid

#endif  // ROOKOID_GROUPOID_HPP
