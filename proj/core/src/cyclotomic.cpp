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

#include "rookoid/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "rookoid/errors.hpp"

namespace rookoid {

  namespace {

    using IntPoly = std::vector<std::int64_t>;

    // Exact division of a by the monic polynomial b.
    IntPoly divide_monic(IntPoly a, IntPoly const& b) {
      std::size_t const db = b.size() - 1;
      if (a.size() < b.size()) {
        return {0};
      }
      IntPoly q(a.size() - db, 0);
      for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t const c = a[i];
        q[i - db]            = c;
        if (c != 0) {
          for (std::size_t j = 0; j <= db; ++j) {
            a[i - db + j] -= c * b[j];
          }
        }
      }
      return q;
    }

    IntPoly cyclotomic_rec(std::uint32_t m, std::map<std::uint32_t, IntPoly>& memo) {
      if (auto it = memo.find(m); it != memo.end()) {
        return it->second;
      }
      IntPoly p(m + 1, 0);
      p[0] = -1;
      p[m] = 1;
      for (std::uint32_t d = 1; d < m; ++d) {
        if (m % d == 0) {
          p = divide_monic(std::move(p), cyclotomic_rec(d, memo));
        }
      }
      memo.emplace(m, p);
      return p;
    }

    // reduce[j] holds the power-basis coordinates of zeta_m^j, 0 <= j < m.
    struct FieldTable {
      std::uint32_t                          m;
      std::uint32_t                          phi;
      std::vector<std::vector<std::int64_t>> reduce;
    };

    std::shared_ptr<FieldTable const> build_table(std::uint32_t m) {
      IntPoly const      cyc = cyclotomic_polynomial(m);
      std::uint32_t const phi = static_cast<std::uint32_t>(cyc.size() - 1);
      auto                t   = std::make_shared<FieldTable>();
      t->m                    = m;
      t->phi                  = phi;
      t->reduce.assign(m, std::vector<std::int64_t>(phi, 0));
      t->reduce[0][0] = 1;
      for (std::uint32_t j = 1; j < m; ++j) {
        auto const& prev = t->reduce[j - 1];
        auto&       cur  = t->reduce[j];
        std::int64_t const top = prev[phi - 1];
        for (std::uint32_t i = phi - 1; i > 0; --i) {
          cur[i] = prev[i - 1];
        }
        cur[0] = 0;
        for (std::uint32_t i = 0; i < phi; ++i) {
          cur[i] -= top * cyc[i];
        }
      }
      return t;
    }

    FieldTable const& table(std::uint32_t m) {
      thread_local std::unordered_map<std::uint32_t, std::shared_ptr<FieldTable const>>
          local;
      if (auto it = local.find(m); it != local.end()) {
        return *it->second;
      }
      static std::mutex mtx;
      static std::unordered_map<std::uint32_t, std::shared_ptr<FieldTable const>>
          shared;
      std::shared_ptr<FieldTable const> t;
      {
        std::lock_guard<std::mutex> lock(mtx);
        auto                        it = shared.find(m);
        if (it == shared.end()) {
          it = shared.emplace(m, build_table(m)).first;
        }
        t = it->second;
      }
      return *local.emplace(m, std::move(t)).first->second;
    }

    std::uint32_t reduced_order(std::uint32_t m) {
      return m % 4 == 2 ? m / 2 : m;
    }

    // Canonical coordinates of sum_j folded[j] zeta_m^j, folded.size() == m.
    std::vector<mpq_class> reduce(std::uint32_t m, std::vector<mpq_class> const& folded) {
      FieldTable const&      t = table(m);
      std::vector<mpq_class> out(t.phi);
      for (std::uint32_t j = 0; j < m; ++j) {
        if (sgn(folded[j]) == 0) {
          continue;
        }
        auto const& row = t.reduce[j];
        for (std::uint32_t b = 0; b < t.phi; ++b) {
          if (row[b] != 0) {
            out[b] += folded[j] * row[b];
          }
        }
      }
      return out;
    }

    std::int64_t mod(std::int64_t a, std::int64_t m) {
      std::int64_t r = a % m;
      return r < 0 ? r + m : r;
    }

  }  // namespace

  std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t m) {
    if (m == 0) {
      throw DomainError("cyclotomic_polynomial: order must be positive");
    }
    std::map<std::uint32_t, IntPoly> memo;
    return cyclotomic_rec(m, memo);
  }

  std::uint32_t euler_phi(std::uint32_t m) {
    std::uint32_t result = m;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        while (m % p == 0) {
          m /= p;
        }
        result -= result / p;
      }
    }
    if (m > 1) {
      result -= result / m;
    }
    return result;
  }

  CycNum::CycNum(long value) : CycNum(mpq_class(value)) {}

  CycNum::CycNum(mpq_class const& value) {
    if (sgn(value) != 0) {
      coeffs_.push_back(value);
      coeffs_.back().canonicalize();
    }
  }

  CycNum CycNum::root(std::uint32_t m, std::int64_t k) {
    if (m == 0) {
      throw DomainError("cyc_root: order must be positive");
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(mod(k, m)) + 1);
    c.back() = 1;
    return from_powers(m, std::move(c));
  }

  CycNum CycNum::from_powers(std::uint32_t m, std::vector<mpq_class> coeffs) {
    if (m == 0) {
      throw DomainError("CycNum: order must be positive");
    }
    for (auto& c : coeffs) {
      c.canonicalize();
    }
    std::uint32_t const    target = reduced_order(m);
    std::vector<mpq_class> folded(target);
    if (target == m) {
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        folded[j % m] += coeffs[j];
      }
    } else {
      // zeta_{2h} = -zeta_h^{(h+1)/2} for odd h.
      std::int64_t const h    = target;
      std::int64_t const half = (h + 1) / 2;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        std::int64_t const jj = static_cast<std::int64_t>(j % m);
        std::size_t const  e  = static_cast<std::size_t>((jj * half) % h);
        if (jj % 2 == 0) {
          folded[e] += coeffs[j];
        } else {
          folded[e] -= coeffs[j];
        }
      }
    }
    CycNum result(target, reduce(target, folded));
    result.normalise();
    return result;
  }

  void CycNum::normalise() {
    bool tail_zero = true;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) {
        tail_zero = false;
        break;
      }
    }
    if (!tail_zero) {
      return;
    }
    if (coeffs_.empty() || sgn(coeffs_[0]) == 0) {
      coeffs_.clear();
    } else {
      coeffs_.resize(1);
    }
    order_ = 1;
  }

  mpq_class CycNum::rational() const {
    if (!is_rational()) {
      throw DomainError("CycNum::rational: element is not rational");
    }
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
  }

  CycNum CycNum::embed(std::uint32_t m) const {
    m = reduced_order(m);
    if (m == order_) {
      return *this;
    }
    if (m % order_ != 0) {
      throw DomainError("CycNum::embed: target order is not a multiple");
    }
    std::uint32_t const    step = m / order_;
    std::vector<mpq_class> folded(m);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      folded[j * step] = coeffs_[j];
    }
    // Not normalised: the caller wants coordinates in Q(zeta_m).
    return CycNum(m, reduce(m, folded));
  }

  CycNum& CycNum::operator+=(CycNum const& other) {
    if (other.is_zero()) {
      return *this;
    }
    if (is_zero()) {
      return *this = other;
    }
    if (order_ == other.order_) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
      }
    } else {
      std::uint32_t const L = std::lcm(order_, other.order_);
      CycNum              a = embed(L);
      CycNum const        b = other.embed(L);
      for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        a.coeffs_[i] += b.coeffs_[i];
      }
      *this = std::move(a);
    }
    normalise();
    return *this;
  }

  CycNum& CycNum::operator-=(CycNum const& other) {
    return *this += -other;
  }

  CycNum CycNum::operator-() const {
    CycNum result = *this;
    for (auto& c : result.coeffs_) {
      c = -c;
    }
    return result;
  }

  CycNum& CycNum::operator*=(CycNum const& other) {
    if (is_zero() || other.is_zero()) {
      return *this = CycNum();
    }
    if (other.is_rational()) {
      for (auto& c : coeffs_) {
        c *= other.coeffs_[0];
      }
      return *this;
    }
    if (is_rational()) {
      mpq_class const s = coeffs_[0];
      *this             = other;
      for (auto& c : coeffs_) {
        c *= s;
      }
      return *this;
    }
    std::uint32_t const    L  = std::lcm(order_, other.order_);
    std::uint32_t const    sa = L / order_;
    std::uint32_t const    sb = L / other.order_;
    std::vector<mpq_class> folded(L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        if (sgn(other.coeffs_[j]) == 0) {
          continue;
        }
        folded[(i * sa + j * sb) % L] += coeffs_[i] * other.coeffs_[j];
      }
    }
    order_  = L;
    coeffs_ = reduce(L, folded);
    normalise();
    return *this;
  }

  CycNum CycNum::conj() const {
    if (is_rational()) {
      return *this;
    }
    std::vector<mpq_class> folded(order_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      folded[(order_ - j) % order_] = coeffs_[j];
    }
    CycNum result(order_, reduce(order_, folded));
    result.normalise();
    return result;
  }

  std::complex<double> CycNum::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (sgn(coeffs_[j]) == 0) {
        continue;
      }
      double const theta = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
      z += coeffs_[j].get_d() * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return z;
  }

  bool operator==(CycNum const& a, CycNum const& b) {
    if (a.order_ == b.order_) {
      return a.coeffs_ == b.coeffs_;
    }
    if (a.is_rational() || b.is_rational()) {
      // Normalised non-rational elements never equal rationals.
      return false;
    }
    std::uint32_t const L = std::lcm(a.order_, b.order_);
    return a.embed(L).coeffs_ == b.embed(L).coeffs_;
  }

  std::string CycNum::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (sgn(coeffs_[j]) == 0) {
        continue;
      }
      if (!first) {
        os << " + ";
      }
      first = false;
      os << coeffs_[j].get_str();
      if (j > 0) {
        os << "*z" << order_ << "^" << j;
      }
    }
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, CycNum const& x) {
    return os << x.to_string();
  }

}  // namespace rookoid
