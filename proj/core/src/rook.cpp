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

#include "rookoid/rook.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "rookoid/errors.hpp"

namespace rookoid {

  namespace {

    void check_size(std::uint32_t n, std::uint32_t r) {
      if (n == 0 || n > kMaxRookSize) {
        throw DomainError("rook matrix size must lie in [1, " + std::to_string(kMaxRookSize)
                          + "], got " + std::to_string(n));
      }
      if (r == 0 || r > kMaxColourOrder) {
        throw DomainError("colour order must lie in [1, " + std::to_string(kMaxColourOrder)
                          + "], got " + std::to_string(r));
      }
    }

    std::uint64_t binom(std::uint32_t n, std::uint32_t k) {
      if (k > n) {
        return 0;
      }
      std::uint64_t b = 1;
      for (std::uint32_t i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
      }
      return b;
    }

    bool next_combination(std::vector<int>& c, int n) {
      int const k = static_cast<int>(c.size());
      int       i = k - 1;
      while (i >= 0 && c[i] == n - k + i) {
        --i;
      }
      if (i < 0) {
        return false;
      }
      ++c[i];
      for (int j = i + 1; j < k; ++j) {
        c[j] = c[j - 1] + 1;
      }
      return true;
    }

    // Lexicographic rank of a sorted 0-based k-combination of [0, n).
    std::uint64_t combination_rank(std::uint32_t mask, std::uint32_t n) {
      std::uint32_t const k    = std::popcount(mask);
      std::uint64_t       rank = 0;
      int                 prev = -1;
      std::uint32_t       i    = 0;
      for (int v = 0; v < static_cast<int>(n); ++v) {
        if ((mask >> v & 1U) == 0) {
          continue;
        }
        for (int u = prev + 1; u < v; ++u) {
          rank += binom(n - 1 - u, k - 1 - i);
        }
        prev = v;
        ++i;
      }
      return rank;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SubsetId
  ////////////////////////////////////////////////////////////////////////

  SubsetId::SubsetId(std::uint32_t n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n > kMaxRookSize) {
      throw DomainError("subset ambient size exceeds " + std::to_string(kMaxRookSize));
    }
    if (n < 32 && (mask >> n) != 0) {
      throw DomainError("subset has members outside [1.." + std::to_string(n) + "]");
    }
  }

  SubsetId SubsetId::of(std::uint32_t n, std::span<int const> members) {
    std::uint32_t mask = 0;
    for (int m : members) {
      if (m < 1 || m > static_cast<int>(n)) {
        throw DomainError("subset member " + std::to_string(m) + " outside [1.."
                          + std::to_string(n) + "]");
      }
      mask |= 1U << (m - 1);
    }
    return SubsetId(n, mask);
  }

  SubsetId SubsetId::initial(std::uint32_t n, std::uint32_t k) {
    if (k > n) {
      throw DomainError("initial segment longer than ambient set");
    }
    return SubsetId(n, k == 32 ? ~0U : (1U << k) - 1);
  }

  std::uint32_t SubsetId::size() const noexcept {
    return std::popcount(mask_);
  }

  bool SubsetId::contains(int member) const noexcept {
    return member >= 1 && member <= static_cast<int>(n_) && (mask_ >> (member - 1) & 1U);
  }

  std::vector<int> SubsetId::members() const {
    std::vector<int> out;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (mask_ >> i & 1U) {
        out.push_back(static_cast<int>(i) + 1);
      }
    }
    return out;
  }

  std::string SubsetId::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int m : members()) {
      os << (first ? "" : ",") << m;
      first = false;
    }
    os << '}';
    return os.str();
  }

  bool subset_lex_less(std::uint32_t a, std::uint32_t b) noexcept {
    std::uint32_t const diff = a ^ b;
    if (diff == 0) {
      return false;
    }
    // For equal-size sets the lex-smaller one owns the least differing element.
    return (a & (diff & (~diff + 1))) != 0;
  }

  std::uint64_t subset_rank(SubsetId const& s) {
    return combination_rank(s.mask(), s.n());
  }

  std::vector<SubsetId> k_subsets(std::uint32_t n, std::uint32_t k) {
    std::vector<SubsetId> out;
    if (k > n) {
      return out;
    }
    std::vector<int> c(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = static_cast<int>(i);
    }
    do {
      std::uint32_t mask = 0;
      for (int v : c) {
        mask |= 1U << v;
      }
      out.emplace_back(n, mask);
    } while (next_combination(c, static_cast<int>(n)));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // RookMatrix
  ////////////////////////////////////////////////////////////////////////

  RookMatrix::RookMatrix(std::uint32_t n, std::uint32_t r) {
    check_size(n, r);
    n_ = static_cast<std::uint8_t>(n);
    r_ = static_cast<std::uint16_t>(r);
    row_.fill(kNone);
    exp_.fill(0);
  }

  RookMatrix RookMatrix::from_support(std::uint32_t              n,
                                      std::uint32_t              r,
                                      std::span<RookEntry const> entries) {
    RookMatrix m(n, r);
    for (auto const& e : entries) {
      if (e.col < 1 || e.col > static_cast<int>(n) || e.row < 1
          || e.row > static_cast<int>(n)) {
        throw DomainError("rook entry (" + std::to_string(e.col) + ", " + std::to_string(e.row)
                          + ") outside [1.." + std::to_string(n) + "]");
      }
      if (e.exp >= r) {
        throw DomainError("colour exponent " + std::to_string(e.exp) + " outside [0, "
                          + std::to_string(r) + ")");
      }
      std::uint32_t const cbit = 1U << (e.col - 1);
      std::uint32_t const rbit = 1U << (e.row - 1);
      if ((m.src_ & cbit) != 0) {
        throw InjectivityError("column " + std::to_string(e.col) + " used twice");
      }
      if ((m.tgt_ & rbit) != 0) {
        throw InjectivityError("row " + std::to_string(e.row) + " used twice");
      }
      m.src_ |= cbit;
      m.tgt_ |= rbit;
      m.row_[e.col - 1] = static_cast<std::int8_t>(e.row - 1);
      m.exp_[e.col - 1] = static_cast<std::uint8_t>(e.exp);
      ++m.rank_;
    }
    return m;
  }

  RookMatrix RookMatrix::identity(std::uint32_t n, std::uint32_t r) {
    return partial_identity(SubsetId::initial(n, n), r);
  }

  RookMatrix RookMatrix::partial_identity(SubsetId const& s, std::uint32_t r) {
    RookMatrix m(s.n(), r);
    for (std::uint32_t i = 0; i < s.n(); ++i) {
      if (s.mask() >> i & 1U) {
        m.row_[i] = static_cast<std::int8_t>(i);
        ++m.rank_;
      }
    }
    m.src_ = m.tgt_ = s.mask();
    return m;
  }

  std::optional<RookEntry> RookMatrix::at(int col) const {
    if (col < 1 || col > n_ || row_[col - 1] == kNone) {
      return std::nullopt;
    }
    return RookEntry{col, row_[col - 1] + 1, exp_[col - 1]};
  }

  std::vector<RookEntry> RookMatrix::entries() const {
    std::vector<RookEntry> out;
    out.reserve(rank_);
    for (int c = 0; c < n_; ++c) {
      if (row_[c] != kNone) {
        out.push_back({c + 1, row_[c] + 1, exp_[c]});
      }
    }
    return out;
  }

  bool RookMatrix::is_partial_identity() const noexcept {
    if (src_ != tgt_) {
      return false;
    }
    for (int c = 0; c < n_; ++c) {
      if (row_[c] != kNone && (row_[c] != c || exp_[c] != 0)) {
        return false;
      }
    }
    return true;
  }

  RookMatrix RookMatrix::restrict_columns(std::uint32_t column_mask) const {
    RookMatrix m(n_, r_);
    for (int c = 0; c < n_; ++c) {
      if (row_[c] != kNone && (column_mask >> c & 1U)) {
        m.row_[c] = row_[c];
        m.exp_[c] = exp_[c];
        m.src_ |= 1U << c;
        m.tgt_ |= 1U << row_[c];
        ++m.rank_;
      }
    }
    return m;
  }

  bool operator==(RookMatrix const& a, RookMatrix const& b) noexcept {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.src_ == b.src_ && a.row_ == b.row_
           && a.exp_ == b.exp_;
  }

  bool basis_less(RookMatrix const& a, RookMatrix const& b) noexcept {
    if (a.rank_ != b.rank_) {
      return a.rank_ < b.rank_;
    }
    if (a.src_ != b.src_) {
      return subset_lex_less(a.src_, b.src_);
    }
    if (a.tgt_ != b.tgt_) {
      return subset_lex_less(a.tgt_, b.tgt_);
    }
    // Same source: rows read in column order are the permutation word.
    if (a.row_ != b.row_) {
      return a.row_ < b.row_;
    }
    return a.exp_ < b.exp_;
  }

  std::size_t RookMatrix::hash() const noexcept {
    std::size_t h = (static_cast<std::size_t>(n_) << 48) ^ (static_cast<std::size_t>(r_) << 32)
                    ^ src_;
    for (int c = 0; c < n_; ++c) {
      h = h * 1000003U ^ static_cast<std::size_t>(static_cast<std::uint8_t>(row_[c]));
      h = h * 1000003U ^ exp_[c];
    }
    return h;
  }

  std::string RookMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  RookMatrix rook_mul(RookMatrix const& a, RookMatrix const& b) {
    if (a.n_ != b.n_ || a.r_ != b.r_) {
      throw DomainError("rook_mul: operands differ in size or colour order");
    }
    RookMatrix m(a.n_, a.r_);
    for (int c = 0; c < b.n_; ++c) {
      std::int8_t const j = b.row_[c];
      if (j == RookMatrix::kNone || a.row_[j] == RookMatrix::kNone) {
        continue;
      }
      m.row_[c] = a.row_[j];
      m.exp_[c] = static_cast<std::uint8_t>((a.exp_[j] + b.exp_[c]) % a.r_);
      m.src_ |= 1U << c;
      m.tgt_ |= 1U << a.row_[j];
      ++m.rank_;
    }
    return m;
  }

  RookMatrix dagger(RookMatrix const& m) {
    RookMatrix d(m.n_, m.r_);
    for (int c = 0; c < m.n_; ++c) {
      std::int8_t const j = m.row_[c];
      if (j == RookMatrix::kNone) {
        continue;
      }
      d.row_[j] = static_cast<std::int8_t>(c);
      d.exp_[j] = static_cast<std::uint8_t>((m.r_ - m.exp_[c]) % m.r_);
    }
    d.src_  = m.tgt_;
    d.tgt_  = m.src_;
    d.rank_ = m.rank_;
    return d;
  }

  std::ostream& operator<<(std::ostream& os, RookMatrix const& m) {
    os << "R" << m.n() << "^" << m.r() << "[";
    bool first = true;
    for (auto const& e : m.entries()) {
      os << (first ? "" : " ") << "(" << e.col << "," << e.row;
      if (m.r() > 1) {
        os << ":" << e.exp;
      }
      os << ")";
      first = false;
    }
    return os << "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and counting
  ////////////////////////////////////////////////////////////////////////

  RookEnumeration::RookEnumeration(std::uint32_t n, std::uint32_t r, std::optional<std::uint32_t> k)
      : n_(n), r_(r), k_(k.value_or(0)), k_last_(k.value_or(n)) {
    check_size(n, r);
    if (k && *k > n) {
      throw DomainError("enumerate: rank " + std::to_string(*k) + " exceeds n");
    }
  }

  bool RookEnumeration::start_rank(std::uint32_t k) {
    k_ = k;
    src_.resize(k);
    tgt_.resize(k);
    perm_.resize(k);
    colour_.assign(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      src_[i] = tgt_[i] = perm_[i] = static_cast<int>(i);
    }
    return true;
  }

  bool RookEnumeration::advance() {
    for (std::uint32_t i = k_; i-- > 0;) {
      if (++colour_[i] < r_) {
        return true;
      }
      colour_[i] = 0;
    }
    if (std::next_permutation(perm_.begin(), perm_.end())) {
      return true;
    }
    if (next_combination(tgt_, static_cast<int>(n_))) {
      return true;
    }
    for (std::uint32_t i = 0; i < k_; ++i) {
      tgt_[i] = static_cast<int>(i);
    }
    if (next_combination(src_, static_cast<int>(n_))) {
      return true;
    }
    if (k_ < k_last_) {
      return start_rank(k_ + 1);
    }
    return false;
  }

  std::optional<RookMatrix> RookEnumeration::next() {
    if (done_) {
      return std::nullopt;
    }
    if (!started_) {
      started_ = true;
      start_rank(k_);
    } else if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    std::vector<RookEntry> es(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      es[i] = {src_[i] + 1, tgt_[perm_[i]] + 1, colour_[i]};
    }
    return RookMatrix::from_support(n_, r_, es);
  }

  std::vector<RookMatrix> enumerate(std::uint32_t n, std::uint32_t r, std::optional<std::uint32_t> k) {
    std::vector<RookMatrix> out;
    RookEnumeration         stream(n, r, k);
    while (auto m = stream.next()) {
      out.push_back(*m);
    }
    return out;
  }

  mpz_class stratum_count(std::uint32_t n, std::uint32_t r, std::uint32_t k) {
    if (k > n) {
      return 0;
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    mpz_class rk;
    mpz_ui_pow_ui(rk.get_mpz_t(), r, k);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return b * b * rk * f;
  }

  mpz_class count(std::uint32_t n, std::uint32_t r) {
    if (n == 0 || r == 0) {
      throw DomainError("count: n and r must be positive");
    }
    mpz_class total = 0;
    for (std::uint32_t k = 0; k <= n; ++k) {
      total += stratum_count(n, r, k);
    }
    return total;
  }

  std::uint64_t stratum_index(RookMatrix const& m) {
    std::uint32_t const n = m.n();
    std::uint32_t const k = m.rank();
    std::uint64_t const c = binom(n, k);
    std::uint64_t       f = 1;
    for (std::uint32_t i = 2; i <= k; ++i) {
      f *= i;
    }
    std::uint64_t idx = combination_rank(m.source_mask(), n) * c
                        + combination_rank(m.target_mask(), n);

    // Permutation word: target position of each source column, in column order.
    auto const       es = m.entries();
    std::vector<int> word(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      word[i] = std::popcount(m.target_mask() & ((1U << (es[i].row - 1)) - 1));
    }
    std::uint64_t perm_rank = 0;
    std::uint64_t fact      = f;
    for (std::uint32_t i = 0; i < k; ++i) {
      fact /= (k - i);
      std::uint64_t smaller = 0;
      for (std::uint32_t j = i + 1; j < k; ++j) {
        smaller += word[j] < word[i];
      }
      perm_rank += smaller * fact;
    }
    idx = idx * f + perm_rank;
    for (std::uint32_t i = 0; i < k; ++i) {
      idx = idx * m.r() + es[i].exp;
    }
    return idx;
  }

}  // namespace rookoid
