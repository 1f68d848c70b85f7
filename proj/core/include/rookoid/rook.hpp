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

// Coloured rook matrices: n x n matrices with at most one non-zero entry per
// row and column, every non-zero entry an r-th root of unity.
//
// A matrix is stored column-wise as the partial injection col -> row together
// with the colour exponent of each entry. All public indices are 1-based;
// storage is 0-based.

#ifndef ROOKOID_ROOK_HPP
#define ROOKOID_ROOK_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rookoid {

  inline constexpr std::uint32_t kMaxRookSize    = 16;
  inline constexpr std::uint32_t kMaxColourOrder = 256;

  //! A subset of [1..n], stored as a bit mask (bit i <-> element i + 1).
  class SubsetId {
   public:
    SubsetId() = default;
    SubsetId(std::uint32_t n, std::uint32_t mask);

    //! From 1-based members. Throws DomainError if a member is out of range.
    static SubsetId of(std::uint32_t n, std::span<int const> members);
    static SubsetId of(std::uint32_t n, std::initializer_list<int> members) {
      return of(n, std::span<int const>(members.begin(), members.size()));
    }
    //! [1..k] inside [1..n].
    static SubsetId initial(std::uint32_t n, std::uint32_t k);

    std::uint32_t n() const noexcept {
      return n_;
    }
    std::uint32_t mask() const noexcept {
      return mask_;
    }
    std::uint32_t size() const noexcept;
    bool          contains(int member) const noexcept;
    //! Sorted, 1-based.
    std::vector<int> members() const;
    std::string      to_string() const;

    friend bool operator==(SubsetId const&, SubsetId const&) = default;

   private:
    std::uint32_t n_    = 0;
    std::uint32_t mask_ = 0;
  };

  //! Lexicographic order on the sorted member lists of two equal-size masks.
  bool subset_lex_less(std::uint32_t a, std::uint32_t b) noexcept;

  //! Lexicographic rank of s among the subsets of [1..n] of its size.
  std::uint64_t subset_rank(SubsetId const& s);

  //! All k-subsets of [1..n] in lexicographic order.
  std::vector<SubsetId> k_subsets(std::uint32_t n, std::uint32_t k);

  //! One non-zero entry: column, row (1-based) and colour exponent in [0, r).
  struct RookEntry {
    int           col;
    int           row;
    std::uint32_t exp;

    friend bool operator==(RookEntry const&, RookEntry const&) = default;
  };

  class RookMatrix {
   public:
    //! Zero matrix.
    RookMatrix(std::uint32_t n, std::uint32_t r);

    //! Throws InjectivityError on a repeated column or row and DomainError on
    //! an out-of-range index or exponent.
    static RookMatrix from_support(std::uint32_t              n,
                                   std::uint32_t              r,
                                   std::span<RookEntry const> entries);
    static RookMatrix from_support(std::uint32_t                    n,
                                   std::uint32_t                    r,
                                   std::initializer_list<RookEntry> entries) {
      return from_support(n, r, std::span<RookEntry const>(entries.begin(), entries.size()));
    }

    static RookMatrix identity(std::uint32_t n, std::uint32_t r);
    //! I_S, the diagonal 0/1 matrix with ones exactly on S.
    static RookMatrix partial_identity(SubsetId const& s, std::uint32_t r);

    std::uint32_t n() const noexcept {
      return n_;
    }
    std::uint32_t r() const noexcept {
      return r_;
    }
    std::uint32_t rank() const noexcept {
      return rank_;
    }
    SubsetId source() const noexcept {
      return SubsetId(n_, src_);
    }
    SubsetId target() const noexcept {
      return SubsetId(n_, tgt_);
    }
    std::uint32_t source_mask() const noexcept {
      return src_;
    }
    std::uint32_t target_mask() const noexcept {
      return tgt_;
    }

    //! The entry in 1-based column col, if any.
    std::optional<RookEntry> at(int col) const;
    //! Entries sorted by column.
    std::vector<RookEntry> entries() const;

    bool is_partial_identity() const noexcept;

    //! The sub-matrix keeping the entries whose 0-based column lies in
    //! column_mask (which must be a subset of source_mask()).
    RookMatrix restrict_columns(std::uint32_t column_mask) const;

    friend bool operator==(RookMatrix const& a, RookMatrix const& b) noexcept;

    //! Position of this matrix in the enumeration order; compares rank, then
    //! source, target, permutation and colour word.
    friend bool basis_less(RookMatrix const& a, RookMatrix const& b) noexcept;

    std::size_t hash() const noexcept;
    std::string to_string() const;

    friend RookMatrix rook_mul(RookMatrix const& a, RookMatrix const& b);
    friend RookMatrix dagger(RookMatrix const& m);

   private:
    static constexpr std::int8_t kNone = -1;

    std::uint8_t                            n_;
    std::uint16_t                           r_;
    std::uint8_t                            rank_ = 0;
    std::uint32_t                           src_  = 0;
    std::uint32_t                           tgt_  = 0;
    std::array<std::int8_t, kMaxRookSize>   row_;
    std::array<std::uint8_t, kMaxRookSize>  exp_;
  };

  bool basis_less(RookMatrix const& a, RookMatrix const& b) noexcept;

  //! Ordinary matrix product A * B.
  RookMatrix rook_mul(RookMatrix const& a, RookMatrix const& b);
  //! Conjugate transpose.
  RookMatrix dagger(RookMatrix const& m);

  std::ostream& operator<<(std::ostream& os, RookMatrix const& m);

  struct BasisOrder {
    bool operator()(RookMatrix const& a, RookMatrix const& b) const noexcept {
      return basis_less(a, b);
    }
  };

  //! Deterministic stream over R_n^(r) or one rank stratum of it, in the
  //! order rank, source (lex), target (lex), permutation (lex), colour word
  //! (lex).
  class RookEnumeration {
   public:
    RookEnumeration(std::uint32_t n, std::uint32_t r, std::optional<std::uint32_t> k = {});

    std::optional<RookMatrix> next();

   private:
    bool start_rank(std::uint32_t k);
    bool advance();

    std::uint32_t              n_, r_, k_, k_last_;
    bool                       done_    = false;
    bool                       started_ = false;
    std::vector<int>           src_, tgt_, perm_;
    std::vector<std::uint32_t> colour_;
  };

  //! Convenience wrapper collecting the stream.
  std::vector<RookMatrix> enumerate(std::uint32_t n, std::uint32_t r, std::optional<std::uint32_t> k = {});

  //! |R_n^(r)| = sum_k binom(n,k)^2 r^k k!.
  mpz_class count(std::uint32_t n, std::uint32_t r);
  //! binom(n,k)^2 r^k k!.
  mpz_class stratum_count(std::uint32_t n, std::uint32_t r, std::uint32_t k);

  //! Position of m inside its rank stratum, consistent with RookEnumeration.
  std::uint64_t stratum_index(RookMatrix const& m);

}  // namespace rookoid

template <>
struct std::hash<rookoid::RookMatrix> {
  std::size_t operator()(rookoid::RookMatrix const& m) const noexcept {
    return m.hash();
  }
};

#endif  // ROOKOID_ROOK_HPP
