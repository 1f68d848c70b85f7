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

#include "rookoid/group_rep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "rookoid/errors.hpp"

namespace rookoid {

  namespace {

    using CMatrix = Eigen::MatrixXcd;
    using CVector = Eigen::VectorXcd;
    using Complex = std::complex<double>;

    constexpr std::uint32_t kReseedBudget      = 8;
    constexpr double        kRoundingTolerance = 1e-6;

    std::uint64_t factorial(std::uint32_t k) {
      std::uint64_t f = 1;
      for (std::uint32_t i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    }

    double suggest_tolerance(double residual) {
      if (!(residual > 0.0)) {
        return 1e-15;
      }
      return std::pow(10.0, std::ceil(std::log10(residual)) + 1.0);
    }

    CVector to_eigen(GroupVector const& v) {
      return Eigen::Map<CVector const>(v.data(), static_cast<Eigen::Index>(v.size()));
    }

    GroupVector from_eigen(CVector const& v) {
      return GroupVector(v.data(), v.data() + v.size());
    }

    Complex gaussian(std::mt19937_64& rng) {
      std::normal_distribution<double> nd(0.0, 1.0);
      double const                     re = nd(rng);
      double const                     im = nd(rng);
      return {re, im};
    }

    struct ClassAlgebra {
      std::vector<std::vector<std::uint32_t>> classes;
      std::vector<std::uint32_t>              class_of;
      // a[(j * h + l) * h + m]: coefficient of C_m in C_j C_l.
      std::vector<double> a;
      std::size_t         h = 0;

      double at(std::size_t j, std::size_t l, std::size_t m) const {
        return a[(j * h + l) * h + m];
      }
    };

    ClassAlgebra class_algebra(GroupTable const& t) {
      ClassAlgebra ca;
      ca.classes = conjugacy_classes(t);
      ca.h       = ca.classes.size();
      ca.class_of.assign(t.order(), 0);
      for (std::size_t j = 0; j < ca.h; ++j) {
        for (auto g : ca.classes[j]) {
          ca.class_of[g] = static_cast<std::uint32_t>(j);
        }
      }
      std::size_t const h = ca.h;
      std::vector<double> counts(h * h * h, 0.0);
      for (std::uint32_t x = 0; x < t.order(); ++x) {
        std::size_t const cx = ca.class_of[x];
        for (std::uint32_t y = 0; y < t.order(); ++y) {
          counts[(cx * h + ca.class_of[y]) * h + ca.class_of[t.mul(x, y)]] += 1.0;
        }
      }
      ca.a.resize(h * h * h);
      for (std::size_t j = 0; j < h; ++j) {
        for (std::size_t l = 0; l < h; ++l) {
          for (std::size_t m = 0; m < h; ++m) {
            ca.a[(j * h + l) * h + m] = counts[(j * h + l) * h + m]
                                        / static_cast<double>(ca.classes[m].size());
          }
        }
      }
      return ca;
    }

    CVector class_square(ClassAlgebra const& ca, CVector const& v) {
      CVector out = CVector::Zero(static_cast<Eigen::Index>(ca.h));
      for (std::size_t j = 0; j < ca.h; ++j) {
        if (v[j] == Complex(0.0)) {
          continue;
        }
        for (std::size_t l = 0; l < ca.h; ++l) {
          Complex const p = v[j] * v[l];
          for (std::size_t m = 0; m < ca.h; ++m) {
            double const c = ca.at(j, l, m);
            if (c != 0.0) {
              out[m] += c * p;
            }
          }
        }
      }
      return out;
    }

    struct FamilyResiduals {
      double completeness  = 0.0;
      double orthogonality = 0.0;
      double idempotence   = 0.0;
    };

    FamilyResiduals family_residuals(GroupTable const& t, std::vector<GroupVector> const& family) {
      FamilyResiduals res;
      GroupVector     sum(t.order(), Complex(0.0));
      for (auto const& e : family) {
        for (std::size_t g = 0; g < sum.size(); ++g) {
          sum[g] += e[g];
        }
      }
      res.completeness = group_distance(sum, group_unit(t));
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          GroupVector const p = group_mul(t, family[i], family[j]);
          if (i == j) {
            res.idempotence = std::max(res.idempotence, group_distance(p, family[i]));
          } else {
            res.orthogonality = std::max(res.orthogonality, group_norm(p));
          }
        }
      }
      return res;
    }

    // Splits the block of the central idempotent f (dimension d > 1) into d
    // minimal idempotents. Returns false on a spectral collision.
    bool split_block(GroupTable const&         t,
                     GroupVector const&        f,
                     std::uint32_t             d,
                     std::mt19937_64&          rng,
                     std::vector<GroupVector>& out) {
      std::size_t const       order = t.order();
      Eigen::Index const      dim   = static_cast<Eigen::Index>(d) * d;
      Eigen::Index const      extra = 4;

      // Orthonormal basis of the block f C[G].
      CMatrix samples(static_cast<Eigen::Index>(order), dim + extra);
      for (Eigen::Index j = 0; j < dim + extra; ++j) {
        GroupVector g(order);
        for (auto& c : g) {
          c = gaussian(rng);
        }
        samples.col(j) = to_eigen(group_mul(t, f, g));
      }
      Eigen::ColPivHouseholderQR<CMatrix> qr(samples);
      qr.setThreshold(1e-8);
      if (qr.rank() != dim) {
        return false;
      }
      CMatrix const q = qr.householderQ() * CMatrix::Identity(static_cast<Eigen::Index>(order), dim);

      // Random self-adjoint element of the corner f C[G] f.
      GroupVector b(order);
      for (auto& c : b) {
        c = gaussian(rng);
      }
      GroupVector h = group_involution(t, b);
      for (std::size_t g = 0; g < order; ++g) {
        h[g] += b[g];
      }
      h = group_mul(t, group_mul(t, f, h), f);

      CMatrix image(static_cast<Eigen::Index>(order), dim);
      for (Eigen::Index j = 0; j < dim; ++j) {
        image.col(j) = to_eigen(group_mul(t, h, from_eigen(q.col(j))));
      }
      CMatrix restricted = q.adjoint() * image;
      restricted         = (restricted + restricted.adjoint()).eval() * 0.5;

      Eigen::SelfAdjointEigenSolver<CMatrix> es(restricted);
      if (es.info() != Eigen::Success) {
        return false;
      }
      auto const&  ev    = es.eigenvalues();
      double const scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
      for (std::uint32_t c = 0; c < d; ++c) {
        Eigen::Index const lo = static_cast<Eigen::Index>(c) * d;
        if (ev[lo + d - 1] - ev[lo] > 1e-7 * scale) {
          return false;
        }
        if (c > 0 && ev[lo] - ev[lo - 1] < 1e-5 * scale) {
          return false;
        }
      }

      CVector unit_row = q.row(static_cast<Eigen::Index>(t.unit())).adjoint();
      for (std::uint32_t c = 0; c < d; ++c) {
        auto const    v = es.eigenvectors().middleCols(static_cast<Eigen::Index>(c) * d, d);
        CVector const e = q * (v * (v.adjoint() * unit_row));
        out.push_back(from_eigen(e));
      }
      return true;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  GroupTable::GroupTable(std::uint32_t              order,
                         std::vector<std::uint32_t> table,
                         std::vector<std::string>   labels)
      : order_(order), mul_(std::move(table)), labels_(std::move(labels)) {
    if (order_ == 0) {
      throw DomainError("group table: order must be positive");
    }
    if (mul_.size() != static_cast<std::size_t>(order_) * order_) {
      throw DomainError("group table: expected " + std::to_string(order_) + "^2 entries");
    }
    if (!labels_.empty() && labels_.size() != order_) {
      throw DomainError("group table: label count differs from order");
    }
    for (auto v : mul_) {
      if (v >= order_) {
        throw DomainError("group table: entry out of range");
      }
    }
    // Latin square.
    std::vector<char> seen(order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::uint32_t b = 0; b < order_; ++b) {
        if (seen[mul(a, b)]++) {
          throw DomainError("group table: row " + std::to_string(a) + " repeats an entry");
        }
      }
    }
    bool found = false;
    for (std::uint32_t e = 0; e < order_ && !found; ++e) {
      if (mul(e, e) == e) {
        unit_ = e;
        found = true;
      }
    }
    for (std::uint32_t a = 0; a < order_; ++a) {
      if (!found || mul(unit_, a) != a || mul(a, unit_) != a) {
        throw DomainError("group table: no two-sided unit");
      }
    }
    inv_.assign(order_, 0);
    for (std::uint32_t a = 0; a < order_; ++a) {
      for (std::uint32_t b = 0; b < order_; ++b) {
        if (mul(a, b) == unit_) {
          if (mul(b, a) != unit_) {
            throw DomainError("group table: one-sided inverse for " + std::to_string(a));
          }
          inv_[a] = b;
          break;
        }
      }
    }
    auto check = [this](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        throw DomainError("group table: not associative at (" + std::to_string(a) + ", "
                          + std::to_string(b) + ", " + std::to_string(c) + ")");
      }
    };
    if (order_ <= 200) {
      for (std::uint32_t a = 0; a < order_; ++a) {
        for (std::uint32_t b = 0; b < order_; ++b) {
          for (std::uint32_t c = 0; c < order_; ++c) {
            check(a, b, c);
          }
        }
      }
    } else {
      std::mt19937_64                              rng(order_);
      std::uniform_int_distribution<std::uint32_t> pick(0, order_ - 1);
      for (int i = 0; i < 200000; ++i) {
        check(pick(rng), pick(rng), pick(rng));
      }
    }
  }

  std::string GroupTable::label(std::uint32_t a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }

  ////////////////////////////////////////////////////////////////////////
  // Wreath products
  ////////////////////////////////////////////////////////////////////////

  std::vector<WreathElement> wreath_elements(std::uint32_t r, std::uint32_t k) {
    if (r == 0) {
      throw DomainError("wreath product: r must be positive");
    }
    long double const order = std::pow(static_cast<long double>(r), k) * factorial(k);
    if (k > 20 || order > kMaxGroupOrder) {
      throw ResourceError("wreath product Z_" + std::to_string(r) + " wr S_" + std::to_string(k)
                          + " exceeds the group order cap " + std::to_string(kMaxGroupOrder));
    }
    std::vector<WreathElement> out;
    std::vector<int>           perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint32_t> word(k, 0);
      while (true) {
        out.push_back({word, perm});
        std::uint32_t i = k;
        while (i > 0 && ++word[i - 1] == r) {
          word[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  GroupTable wreath_table(std::uint32_t r, std::uint32_t k) {
    auto const          elts  = wreath_elements(r, k);
    std::uint32_t const order = static_cast<std::uint32_t>(elts.size());
    std::uint64_t const rk    = order / factorial(k);

    auto index = [&](WreathElement const& w) {
      // Lehmer rank of the permutation, then the colour word in base r.
      std::uint64_t prank = 0;
      std::uint64_t fact  = factorial(k);
      for (std::uint32_t i = 0; i < k; ++i) {
        fact /= (k - i);
        std::uint64_t smaller = 0;
        for (std::uint32_t j = i + 1; j < k; ++j) {
          smaller += w.perm[j] < w.perm[i];
        }
        prank += smaller * fact;
      }
      std::uint64_t crank = 0;
      for (auto c : w.colours) {
        crank = crank * r + c;
      }
      return static_cast<std::uint32_t>(prank * rk + crank);
    };

    std::vector<std::uint32_t> mul(static_cast<std::size_t>(order) * order);
    std::vector<std::string>   labels;
    labels.reserve(order);
    WreathElement prod{std::vector<std::uint32_t>(k), std::vector<int>(k)};
    for (std::uint32_t a = 0; a < order; ++a) {
      auto const& x = elts[a];
      std::ostringstream os;
      os << "(";
      for (std::uint32_t i = 0; i < k; ++i) {
        os << (i ? "," : "") << x.colours[i];
      }
      os << "|";
      for (std::uint32_t i = 0; i < k; ++i) {
        os << (i ? "," : "") << x.perm[i] + 1;
      }
      os << ")";
      labels.push_back(os.str());
      for (std::uint32_t b = 0; b < order; ++b) {
        auto const& y = elts[b];
        for (std::uint32_t i = 0; i < k; ++i) {
          prod.colours[i] = (x.colours[y.perm[i]] + y.colours[i]) % r;
          prod.perm[i]    = x.perm[y.perm[i]];
        }
        mul[static_cast<std::size_t>(a) * order + b] = index(prod);
      }
    }
    return GroupTable(order, std::move(mul), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Classes and group algebra arithmetic
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<std::uint32_t>> conjugacy_classes(GroupTable const& t) {
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<char>                       seen(t.order(), 0);
    for (std::uint32_t g = 0; g < t.order(); ++g) {
      if (seen[g]) {
        continue;
      }
      std::vector<std::uint32_t> cls;
      for (std::uint32_t x = 0; x < t.order(); ++x) {
        std::uint32_t const c = t.mul(t.mul(x, g), t.inv(x));
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  GroupVector group_unit(GroupTable const& t) {
    GroupVector u(t.order(), Complex(0.0));
    u[t.unit()] = 1.0;
    return u;
  }

  GroupVector group_mul(GroupTable const& t, GroupVector const& a, GroupVector const& b) {
    if (a.size() != t.order() || b.size() != t.order()) {
      throw DomainError("group_mul: vector length differs from group order");
    }
    GroupVector out(t.order(), Complex(0.0));
    for (std::uint32_t x = 0; x < t.order(); ++x) {
      if (a[x] == Complex(0.0)) {
        continue;
      }
      for (std::uint32_t y = 0; y < t.order(); ++y) {
        out[t.mul(x, y)] += a[x] * b[y];
      }
    }
    return out;
  }

  GroupVector group_involution(GroupTable const& t, GroupVector const& a) {
    GroupVector out(t.order());
    for (std::uint32_t g = 0; g < t.order(); ++g) {
      out[t.inv(g)] = std::conj(a[g]);
    }
    return out;
  }

  double group_norm(GroupVector const& a) {
    double s = 0.0;
    for (auto const& c : a) {
      s += std::norm(c);
    }
    return std::sqrt(s);
  }

  double group_distance(GroupVector const& a, GroupVector const& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += std::norm(a[i] - b[i]);
    }
    return std::sqrt(s);
  }

  ////////////////////////////////////////////////////////////////////////
  // Central idempotents
  ////////////////////////////////////////////////////////////////////////

  std::pair<std::uint32_t, double> central_dimension(GroupTable const& t, GroupVector const& f) {
    double const root = std::sqrt(std::max(0.0, t.order() * f[t.unit()].real()));
    double const d    = std::round(root);
    return {static_cast<std::uint32_t>(d), std::abs(root - d)};
  }

  std::vector<GroupVector> central_idempotents(GroupTable const& t) {
    ClassAlgebra const ca = class_algebra(t);
    auto const         h  = static_cast<Eigen::Index>(ca.h);
    if (h == 1) {
      return {group_unit(t)};
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    double          best_gap = 0.0;
    for (std::uint32_t attempt = 0; attempt <= kReseedBudget; ++attempt) {
      std::normal_distribution<double> nd(0.0, 1.0);
      Eigen::MatrixXd                  op = Eigen::MatrixXd::Zero(h, h);
      for (Eigen::Index j = 0; j < h; ++j) {
        double const w = nd(rng) / static_cast<double>(ca.classes[j].size());
        for (Eigen::Index l = 0; l < h; ++l) {
          for (Eigen::Index m = 0; m < h; ++m) {
            op(m, l) += w * ca.at(j, l, m);
          }
        }
      }
      Eigen::ComplexEigenSolver<CMatrix> es(op.cast<Complex>());
      if (es.info() != Eigen::Success) {
        continue;
      }
      auto const&  ev    = es.eigenvalues();
      double const scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
      double       gap   = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < h; ++i) {
        for (Eigen::Index j = i + 1; j < h; ++j) {
          gap = std::min(gap, std::abs(ev[i] - ev[j]) / scale);
        }
      }
      best_gap = std::max(best_gap, gap);
      if (gap < 1e-6) {
        continue;
      }

      struct Entry {
        std::uint32_t d;
        GroupVector   f;
      };
      std::vector<Entry> found;
      for (Eigen::Index i = 0; i < h; ++i) {
        CVector        v = es.eigenvectors().col(i);
        CVector const  sq = class_square(ca, v);
        Eigen::Index   p;
        v.cwiseAbs().maxCoeff(&p);
        v *= v[p] / sq[p];
        GroupVector f(t.order());
        for (std::uint32_t g = 0; g < t.order(); ++g) {
          f[g] = v[ca.class_of[g]];
        }
        found.push_back({central_dimension(t, f).first, std::move(f)});
      }
      auto key = [](GroupVector const& f) {
        std::vector<std::pair<long long, long long>> k;
        k.reserve(f.size());
        for (auto const& c : f) {
          k.emplace_back(std::llround(c.real() * 1e6), std::llround(c.imag() * 1e6));
        }
        return k;
      };
      std::sort(found.begin(), found.end(), [&](Entry const& a, Entry const& b) {
        if (a.d != b.d) {
          return a.d < b.d;
        }
        return key(a.f) > key(b.f);
      });
      std::vector<GroupVector> out;
      out.reserve(found.size());
      for (auto& e : found) {
        out.push_back(std::move(e.f));
      }
      return out;
    }
    throw NumericDegeneracyError("central_idempotents: class-sum spectrum not separable",
                                 best_gap,
                                 suggest_tolerance(best_gap));
  }

  ////////////////////////////////////////////////////////////////////////
  // CSOMI
  ////////////////////////////////////////////////////////////////////////

  double CsomiResiduals::max() const noexcept {
    return std::max({completeness, orthogonality, idempotence});
  }

  Csomi csomi(GroupTable const& t, std::uint64_t seed, double tol) {
    if (!(tol >= kMinTolerance)) {
      throw NumericDegeneracyError("csomi: tolerance below double-precision resolution", tol,
                                   kMinTolerance);
    }
    auto const centrals = central_idempotents(t);

    Csomi result;
    result.group_order = t.order();
    result.seed        = seed;
    result.tolerance   = tol;
    for (auto const& f : centrals) {
      auto const [d, residual] = central_dimension(t, f);
      if (residual > kRoundingTolerance || d == 0) {
        throw NumericDegeneracyError("csomi: irreducible dimension does not round to an integer",
                                     residual,
                                     suggest_tolerance(residual));
      }
      result.types.push_back({d, residual, f});
    }

    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t attempt = 0; attempt <= kReseedBudget; ++attempt) {
      std::seed_seq   sseq{static_cast<std::uint32_t>(seed),
                         static_cast<std::uint32_t>(seed >> 32),
                         attempt};
      std::mt19937_64 rng(sseq);

      std::vector<GroupVector>   family;
      std::vector<std::uint32_t> blocks;
      bool                       ok = true;
      for (std::uint32_t i = 0; i < result.types.size() && ok; ++i) {
        auto const& type = result.types[i];
        if (type.dimension == 1) {
          family.push_back(type.central);
          blocks.push_back(i);
          continue;
        }
        ok = split_block(t, type.central, type.dimension, rng, family);
        blocks.resize(family.size(), i);
      }
      if (!ok) {
        continue;
      }
      FamilyResiduals const res = family_residuals(t, family);
      CsomiResiduals        cr{res.completeness, res.orthogonality, res.idempotence, 0.0};
      for (auto const& type : result.types) {
        cr.dimension = std::max(cr.dimension, type.rounding_residual);
      }
      best = std::min(best, cr.max());
      if (cr.max() <= tol) {
        result.idempotents = std::move(family);
        result.block_map   = std::move(blocks);
        result.residuals   = cr;
        result.attempts    = attempt + 1;
        return result;
      }
    }
    throw NumericDegeneracyError("csomi: no splitting within tolerance after "
                                     + std::to_string(kReseedBudget) + " reseeds",
                                 best,
                                 suggest_tolerance(best));
  }

  CsomiReport verify_idempotent_family(GroupTable const&               t,
                                       std::vector<GroupVector> const& family,
                                       double                          tol) {
    CsomiReport        rep;
    std::ostringstream detail;
    for (auto const& e : family) {
      if (e.size() != t.order()) {
        rep.detail = "idempotent length differs from group order";
        return rep;
      }
    }
    FamilyResiduals const res = family_residuals(t, family);
    rep.complete              = res.completeness <= tol;
    rep.orthogonal            = res.orthogonality <= tol;
    rep.idempotent            = res.idempotence <= tol;
    rep.max_residual          = std::max({res.completeness, res.orthogonality, res.idempotence});
    if (!rep.complete) {
      detail << "sum differs from unit by " << res.completeness << "; ";
    }
    if (!rep.orthogonal) {
      detail << "orthogonality residual " << res.orthogonality << "; ";
    }
    if (!rep.idempotent) {
      detail << "idempotence residual " << res.idempotence << "; ";
    }

    auto const                 centrals = central_idempotents(t);
    std::vector<std::uint32_t> dims;
    std::uint64_t              sum_sq = 0;
    for (auto const& f : centrals) {
      auto const [d, residual] = central_dimension(t, f);
      if (residual > kRoundingTolerance) {
        detail << "central idempotent dimension residual " << residual << "; ";
      }
      dims.push_back(d);
      sum_sq += static_cast<std::uint64_t>(d) * d;
    }
    rep.dimension_sum = sum_sq == t.order();
    if (!rep.dimension_sum) {
      detail << "sum of d_i^2 is " << sum_sq << ", group order " << t.order() << "; ";
    }

    rep.isotypic = true;
    rep.minimal  = true;
    std::vector<std::uint32_t> per_type(centrals.size(), 0);
    for (std::size_t i = 0; i < family.size(); ++i) {
      double const             scale = std::max(1.0, group_norm(family[i]));
      std::vector<std::size_t> present;
      for (std::size_t j = 0; j < centrals.size(); ++j) {
        if (group_norm(group_mul(t, family[i], centrals[j])) > tol * scale) {
          present.push_back(j);
        }
      }
      if (present.size() != 1) {
        rep.isotypic = false;
        detail << "idempotent " << i << " meets " << present.size() << " isotypic blocks; ";
        continue;
      }
      double const trace_rank = t.order() * family[i][t.unit()].real();
      double const rounded    = std::round(trace_rank);
      if (std::abs(trace_rank - rounded) > kRoundingTolerance
          || rounded != static_cast<double>(dims[present[0]])) {
        rep.minimal = false;
        detail << "idempotent " << i << " has rank " << trace_rank << ", expected "
               << dims[present[0]] << "; ";
      }
      ++per_type[present[0]];
    }
    for (std::size_t j = 0; j < centrals.size(); ++j) {
      if (per_type[j] != dims[j]) {
        rep.minimal = false;
        detail << "type " << j << " carries " << per_type[j] << " idempotents, expected "
               << dims[j] << "; ";
      }
    }
    rep.detail = detail.str();
    return rep;
  }

  CsomiReport verify_csomi(GroupTable const& t, Csomi const& c, double tol) {
    if (c.group_order != t.order()) {
      CsomiReport rep;
      rep.detail = "family belongs to a group of order " + std::to_string(c.group_order);
      return rep;
    }
    return verify_idempotent_family(t, c.idempotents, tol);
  }

}  // namespace rookoid
