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

#include "rookoid/wa_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include <Eigen/Dense>

#include "rookoid/errors.hpp"

namespace rookoid {

  namespace {

    constexpr double kTypeTolerance = 1e-6;

    // Coefficients over the arrow ids of one rank groupoid.
    using Sparse = std::map<int, Complex>;

    Sparse to_sparse(Groupoid const& g, ComplexElement const& e) {
      Sparse out;
      for (auto const& [m, c] : e.terms()) {
        auto const id = g.arrow_id(m);
        if (!id) {
          throw DomainError("matrix " + m.to_string() + " is not an arrow of this groupoid");
        }
        out[*id] += c;
      }
      return out;
    }

    Sparse star_sparse(Groupoid const& g, Sparse const& a, Sparse const& b) {
      std::unordered_map<int, std::vector<std::pair<int, Complex>>> by_target;
      for (auto const& [q, cq] : b) {
        by_target[g.target(q)].emplace_back(q, cq);
      }
      Sparse out;
      for (auto const& [p, cp] : a) {
        auto const it = by_target.find(g.source(p));
        if (it == by_target.end()) {
          continue;
        }
        for (auto const& [q, cq] : it->second) {
          out[*g.compose(p, q)] += cp * cq;
        }
      }
      return out;
    }

    double l2(Sparse const& a) {
      double s = 0.0;
      for (auto const& [id, c] : a) {
        s += std::norm(c);
      }
      return std::sqrt(s);
    }

    double l2_diff(Sparse const& a, Sparse const& b) {
      Sparse d = a;
      for (auto const& [id, c] : b) {
        d[id] -= c;
      }
      return l2(d);
    }

    std::uint64_t mix_seed(std::uint64_t seed, std::uint32_t k) {
      return seed * 1000003ULL + k;
    }

    // Loop index of every arrow of Hom(x, x).
    std::unordered_map<int, std::uint32_t> loop_index(Groupoid const& g, int x) {
      std::unordered_map<int, std::uint32_t> index;
      auto const                             loops = isotropy_arrows(g, x);
      for (std::uint32_t i = 0; i < loops.size(); ++i) {
        index.emplace(loops[i], i);
      }
      return index;
    }

    // The monomial realisation of Z_r wr S_k at the origin [1..k] must be a
    // bijective homomorphism onto the isotropy table.
    bool isotropy_matches_wreath(Groupoid const& g, int origin, GroupTable const& iso) {
      auto const n = g.rook_n();
      auto const r = g.rook_r();
      auto const k = g.rook_k();
      auto const wreath = wreath_table(r, k);
      if (wreath.order() != iso.order()) {
        return false;
      }
      auto const index    = loop_index(g, origin);
      auto const elements = wreath_elements(r, k);
      std::vector<std::uint32_t> phi(elements.size());
      std::vector<char>          hit(iso.order(), 0);
      for (std::size_t w = 0; w < elements.size(); ++w) {
        std::vector<RookEntry> entries;
        for (std::uint32_t c = 0; c < k; ++c) {
          entries.push_back(
              RookEntry{static_cast<int>(c) + 1, elements[w].perm[c] + 1, elements[w].colours[c]});
        }
        auto const id = g.arrow_id(RookMatrix::from_support(n, r, entries));
        if (!id || !index.contains(*id)) {
          return false;
        }
        phi[w] = index.at(*id);
        if (hit[phi[w]]++) {
          return false;
        }
      }
      for (std::uint32_t a = 0; a < wreath.order(); ++a) {
        for (std::uint32_t b = 0; b < wreath.order(); ++b) {
          if (phi[wreath.mul(a, b)] != iso.mul(phi[a], phi[b])) {
            return false;
          }
        }
      }
      return true;
    }

    struct FamilyResiduals {
      double completeness  = 0.0;
      double orthogonality = 0.0;
      double idempotence   = 0.0;
    };

    GroupVector to_group_vector(std::unordered_map<int, std::uint32_t> const& index,
                                std::uint32_t                                 order,
                                Sparse const&                                 u) {
      GroupVector v(order, Complex(0.0));
      for (auto const& [id, c] : u) {
        auto const it = index.find(id);
        if (it == index.end()) {
          throw DomainError("element leaves the isotropy group");
        }
        v[it->second] += c;
      }
      return v;
    }

    // Members must be supported on Hom(y, y) for their object y. Same-object
    // products run densely in the isotropy algebra; cross-object products go
    // through the sparse star product and vanish on supports.
    FamilyResiduals family_residuals(Groupoid const&            g,
                                     std::vector<Sparse> const& family,
                                     std::vector<int> const&    object_of) {
      FamilyResiduals res;
      Sparse          sum;
      for (auto const& e : family) {
        for (auto const& [id, c] : e) {
          sum[id] += c;
        }
      }
      Sparse unit;
      for (int x = 0; x < static_cast<int>(g.object_count()); ++x) {
        unit[g.unit(x)] += 1.0;
      }
      res.completeness = l2_diff(sum, unit);

      std::map<int, std::vector<std::size_t>> members;
      for (std::size_t i = 0; i < family.size(); ++i) {
        members[object_of[i]].push_back(i);
      }
      for (auto const& [y, ids] : members) {
        auto const               iso   = isotropy_group(g, y);
        auto const               index = loop_index(g, y);
        std::vector<GroupVector> local;
        for (auto i : ids) {
          local.push_back(to_group_vector(index, iso.order(), family[i]));
        }
        for (std::size_t i = 0; i < local.size(); ++i) {
          for (std::size_t j = 0; j < local.size(); ++j) {
            auto const p = group_mul(iso, local[i], local[j]);
            if (i == j) {
              res.idempotence = std::max(res.idempotence, group_distance(p, local[i]));
            } else {
              res.orthogonality = std::max(res.orthogonality, group_norm(p));
            }
          }
        }
      }
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          if (object_of[i] != object_of[j]) {
            res.orthogonality = std::max(res.orthogonality, l2(star_sparse(g, family[i], family[j])));
          }
        }
      }
      return res;
    }

    std::uint32_t sparse_ideal_dimension(Groupoid const& g, Sparse const& e, double tol) {
      std::set<int> targets;
      for (auto const& [p, c] : e) {
        targets.insert(g.target(p));
      }
      // x * e splits by the target of x; each block is measured separately and
      // thresholded against the largest singular value overall.
      std::vector<Eigen::VectorXd> spectra;
      double                       largest = 0.0;
      for (int z = 0; z < static_cast<int>(g.object_count()); ++z) {
        std::vector<int> cols;
        for (int t : targets) {
          auto const h = g.hom(t, z);
          cols.insert(cols.end(), h.begin(), h.end());
        }
        if (cols.empty()) {
          continue;
        }
        std::vector<std::pair<int, Complex>> terms(e.begin(), e.end());
        std::unordered_map<int, Eigen::Index> rows;
        std::vector<std::tuple<Eigen::Index, Eigen::Index, Complex>> triplets;
        for (std::size_t j = 0; j < cols.size(); ++j) {
          for (auto const& [p, c] : terms) {
            if (g.source(cols[j]) != g.target(p)) {
              continue;
            }
            auto const id       = *g.compose(cols[j], p);
            auto const [it, ok] = rows.emplace(id, static_cast<Eigen::Index>(rows.size()));
            triplets.emplace_back(it->second, static_cast<Eigen::Index>(j), c);
          }
        }
        if (rows.empty()) {
          continue;
        }
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                    static_cast<Eigen::Index>(cols.size()));
        for (auto const& [i, j, c] : triplets) {
          m(i, j) += c;
        }
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
        spectra.push_back(svd.singularValues());
        if (spectra.back().size() > 0) {
          largest = std::max(largest, spectra.back().maxCoeff());
        }
      }
      if (largest == 0.0) {
        return 0;
      }
      std::uint32_t rank = 0;
      for (auto const& s : spectra) {
        for (Eigen::Index i = 0; i < s.size(); ++i) {
          rank += s[i] > tol * largest ? 1 : 0;
        }
      }
      return rank;
    }

    ComponentReport run_rank(std::uint32_t n,
                             std::uint32_t r,
                             std::uint32_t k,
                             std::uint64_t seed,
                             double        tol) {
      auto const g     = build_rank_groupoid(n, r, k);
      auto const frame = representative_frame(g, k);
      auto const iso   = isotropy_group(g, frame.origin);
      if (iso.order() > kMaxDenseIsotropy) {
        throw ResourceError("isotropy group of order " + std::to_string(iso.order())
                            + " exceeds the dense limit " + std::to_string(kMaxDenseIsotropy));
      }

      ComponentReport comp;
      comp.k                  = k;
      comp.objects            = g.object_count();
      comp.isotropy_order     = iso.order();
      comp.arrow_count        = g.arrow_count();
      comp.origin             = g.object_label(frame.origin);
      comp.isotropy_is_wreath = isotropy_matches_wreath(g, frame.origin, iso);
      comp.diagonal_ok        = diagonal_subalgebra_check(g).passed;

      auto const cs       = csomi(iso, mix_seed(seed, k), tol);
      comp.csomi_attempts = cs.attempts;
      comp.idempotents    = conjugate_family(g, frame, cs);

      std::vector<Sparse> family;
      std::vector<int>    object_of;
      for (auto& e : comp.idempotents) {
        family.push_back(to_sparse(g, e.element));
        object_of.push_back(e.object);
        e.measured_dimension = sparse_ideal_dimension(g, family.back(), tol);
      }

      std::set<std::pair<std::uint32_t, std::uint32_t>> classes;
      for (std::uint32_t t = 0; t < cs.types.size(); ++t) {
        ComponentType type;
        type.index = t;
        type.d     = cs.types[t].dimension;
        type.D     = static_cast<std::uint32_t>(comp.objects) * type.d;
        for (auto const& e : comp.idempotents) {
          if (e.type == t) {
            ++type.multiplicity;
            type.measured = e.measured_dimension;
            classes.emplace(t, e.measured_dimension);
          }
        }
        for (auto const& other : comp.types) {
          comp.equal_dimension_types |= other.d == type.d;
        }
        comp.types.push_back(type);
      }
      for (auto const& [t, dim] : classes) {
        comp.sum_D2 += static_cast<std::uint64_t>(dim) * dim;
      }

      auto const res                = family_residuals(g, family, object_of);
      comp.residuals.csomi          = cs.residuals.max();
      comp.residuals.completeness   = res.completeness;
      comp.residuals.orthogonality  = res.orthogonality;
      comp.residuals.idempotence    = res.idempotence;
      return comp;
    }

    class VerdictBuilder {
     public:
      explicit VerdictBuilder(std::string name) {
        v_.name   = std::move(name);
        v_.passed = true;
      }
      void fail(std::string const& why) {
        if (v_.passed) {
          v_.detail = why;
        }
        v_.passed = false;
      }
      void residual(double x, double tol, std::string const& where) {
        v_.residual = std::max(v_.residual, x);
        if (!(x <= tol)) {
          std::ostringstream os;
          os << where << ": residual " << x << " > " << tol;
          fail(os.str());
        }
      }
      Verdict take() {
        return std::move(v_);
      }

     private:
      Verdict v_;
    };

  }  // namespace

  double ComponentResiduals::max() const noexcept {
    return std::max({csomi, completeness, orthogonality, idempotence});
  }

  bool VerificationReport::passed() const noexcept {
    return !verdicts.empty()
           && std::all_of(verdicts.begin(), verdicts.end(), [](auto const& v) { return v.passed; });
  }

  Verdict const& VerificationReport::verdict(std::string const& name) const {
    for (auto const& v : verdicts) {
      if (v.name == name) {
        return v;
      }
    }
    throw DomainError("no verdict named " + name);
  }

  bool DecompositionReport::passed() const noexcept {
    return !verdicts.empty()
           && std::all_of(verdicts.begin(), verdicts.end(), [](auto const& v) { return v.passed; });
  }

  std::vector<ConjugatedIdempotent> conjugate_family(Groupoid const&            g,
                                                     RepresentativeFrame const& frame,
                                                     Csomi const&               origin_csomi) {
    if (!g.is_rook()) {
      throw DomainError("conjugate_family needs a rook groupoid");
    }
    if (frame.reps.size() != g.object_count() || frame.origin < 0
        || frame.origin >= static_cast<int>(g.object_count())) {
      throw DomainError("frame does not match the groupoid objects");
    }
    auto const loops = isotropy_arrows(g, frame.origin);
    if (loops.size() != origin_csomi.group_order) {
      throw DomainError("origin family lives in a group of order "
                        + std::to_string(origin_csomi.group_order) + ", isotropy has order "
                        + std::to_string(loops.size()));
    }
    std::vector<ConjugatedIdempotent> out;
    for (int y = 0; y < static_cast<int>(g.object_count()); ++y) {
      auto const alpha = frame.reps[y];
      if (g.source(alpha) != frame.origin || g.target(alpha) != y) {
        throw DomainError("frame arrow for object " + g.object_label(y) + " has wrong endpoints");
      }
      // [alpha]^* is the basis element of the inverse arrow.
      auto const       alpha_star = g.inverse(alpha);
      std::vector<int> moved(loops.size());
      for (std::size_t j = 0; j < loops.size(); ++j) {
        moved[j] = *g.compose(*g.compose(alpha, loops[j]), alpha_star);
      }
      for (std::uint32_t i = 0; i < origin_csomi.idempotents.size(); ++i) {
        ConjugatedIdempotent e;
        e.object  = y;
        e.index   = i;
        e.type    = origin_csomi.block_map.at(i);
        e.element = ComplexElement(g.rook_n(), g.rook_r());
        auto const& src = origin_csomi.idempotents[i];
        for (std::size_t j = 0; j < loops.size(); ++j) {
          e.element.add_term(*g.arrow(moved[j]).payload, src[j]);
        }
        out.push_back(std::move(e));
      }
    }
    return out;
  }

  Verdict diagonal_subalgebra_check(Groupoid const& g) {
    VerdictBuilder v("diagonal_subalgebra");
    std::set<int>  units;
    for (int x = 0; x < static_cast<int>(g.object_count()); ++x) {
      auto const       u = g.unit(x);
      std::vector<int> corner;
      for (int a = 0; a < static_cast<int>(g.arrow_count()); ++a) {
        auto const ua = g.compose(u, a);
        if (ua && g.compose(*ua, u)) {
          corner.push_back(a);
        }
      }
      if (corner != g.hom(x, x)) {
        v.fail("corner at " + g.object_label(x) + " is not spanned by Hom(x, x)");
      }
      units.insert(u);
    }
    if (units.size() != g.object_count()) {
      v.fail("local units are not distinct");
    }
    if (g.is_rook()) {
      std::set<int> expected;
      auto const    cu = component_unit<Complex>(g.rook_n(), g.rook_r(), g.rook_k());
      for (auto const& [m, c] : cu.terms()) {
        if (c != Complex(1.0)) {
          v.fail("component unit has a coefficient other than 1");
        }
        if (auto id = g.arrow_id(m)) {
          expected.insert(*id);
        }
      }
      if (expected != units) {
        v.fail("sum of local units differs from the component unit");
      }
    }
    return v.take();
  }

  std::uint32_t ideal_dimension(Groupoid const& g, ComplexElement const& e, double tol) {
    return sparse_ideal_dimension(g, to_sparse(g, e), tol);
  }

  DecompositionReport decompose(std::uint32_t n,
                                std::uint32_t r,
                                std::uint64_t seed,
                                double        tol,
                                std::uint64_t max_elements) {
    if (n == 0 || r == 0) {
      throw DomainError("n and r must be positive");
    }
    if (!(tol > 0.0)) {
      throw DomainError("tolerance must be positive");
    }
    if (tol < kMinTolerance) {
      throw NumericDegeneracyError("tolerance below double-precision resolution", tol,
                                   kMinTolerance);
    }
    mpz_class const total = count(n, r);
    if (total > mpz_class(std::to_string(max_elements))) {
      throw ResourceError("|R_" + std::to_string(n) + "^(" + std::to_string(r)
                          + ")| = " + total.get_str() + " exceeds the cap "
                          + std::to_string(max_elements));
    }

    // The largest isotropy group, Z_r wr S_n, is known before any work.
    mpz_class top = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
      top *= r * i;
    }
    if (top > kMaxDenseIsotropy) {
      throw ResourceError("isotropy group of order " + top.get_str() + " exceeds the dense limit "
                          + std::to_string(kMaxDenseIsotropy));
    }

    std::vector<std::future<ComponentReport>> jobs;
    for (std::uint32_t k = 0; k <= n; ++k) {
      jobs.push_back(std::async(std::launch::async, run_rank, n, r, k, seed, tol));
    }

    DecompositionReport rep;
    rep.n         = n;
    rep.r         = r;
    rep.seed      = seed;
    rep.tolerance = tol;
    // Collect every job before rethrowing so no thread outlives the call.
    std::exception_ptr failure;
    for (auto& job : jobs) {
      try {
        rep.components.push_back(job.get());
      } catch (...) {
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }

    mpz_class grand = 0;
    for (auto const& c : rep.components) {
      grand += mpz_class(std::to_string(c.sum_D2));
    }
    rep.grand_total = grand.get_str();
    rep.count       = total.get_str();
    rep.verdicts    = verify_decomposition(rep, tol).verdicts;
    return rep;
  }

  VerificationReport verify_decomposition(DecompositionReport const& rep, double tol) {
    VerdictBuilder structure("structure");
    VerdictBuilder support("support");
    VerdictBuilder completeness("completeness");
    VerdictBuilder orthogonality("orthogonality");
    VerdictBuilder idempotence("idempotence");
    VerdictBuilder isotropy("isotropy_csomi");
    VerdictBuilder types("types");
    VerdictBuilder ideals("ideal_dimension");
    VerdictBuilder lemma("minimality_certificate");
    VerdictBuilder totals("grand_total");

    auto finish = [&] {
      VerificationReport out;
      for (auto* b : {&structure, &support, &completeness, &orthogonality, &idempotence, &isotropy,
                      &types, &ideals, &lemma, &totals}) {
        out.verdicts.push_back(b->take());
      }
      return out;
    };

    if (rep.schema != kReportSchema) {
      structure.fail("unknown schema " + rep.schema);
      return finish();
    }
    if (rep.n == 0 || rep.n > kMaxRookSize || rep.r == 0 || rep.r > kMaxColourOrder) {
      structure.fail("n or r out of range");
      return finish();
    }
    if (rep.components.size() != rep.n + 1) {
      structure.fail("expected one component per rank 0.." + std::to_string(rep.n));
      return finish();
    }

    mpz_class grand = 0;
    for (std::uint32_t k = 0; k <= rep.n; ++k) {
      auto const& comp  = rep.components[k];
      auto const  where = "k=" + std::to_string(k);
      if (comp.k != k) {
        structure.fail(where + ": component out of order");
        continue;
      }
      try {
      Groupoid const g = build_rank_groupoid(rep.n, rep.r, k);
      auto const frame  = representative_frame(g, k);
      auto const iso_x  = isotropy_group(g, frame.origin);
      auto const objs   = g.object_count();
      if (comp.objects != objs || comp.arrow_count != g.arrow_count()
          || comp.isotropy_order != iso_x.order()) {
        structure.fail(where + ": object, arrow or isotropy count mismatch");
      }
      if (!isotropy_matches_wreath(g, frame.origin, iso_x) || !comp.isotropy_is_wreath) {
        structure.fail(where + ": isotropy group is not the wreath product");
      }
      if (!diagonal_subalgebra_check(g).passed || !comp.diagonal_ok) {
        structure.fail(where + ": diagonal subalgebra check failed");
      }

      // Support: each member lives on the loops of its object.
      std::vector<Sparse> family;
      std::vector<int>    object_of;
      bool                supported = true;
      for (auto const& e : comp.idempotents) {
        try {
          if (e.element.n() != rep.n || e.element.r() != rep.r) {
            throw DomainError("element of the wrong algebra");
          }
          if (e.object < 0 || e.object >= static_cast<int>(objs)) {
            throw DomainError("object id out of range");
          }
          family.push_back(to_sparse(g, e.element));
          object_of.push_back(e.object);
          for (auto const& [id, c] : family.back()) {
            if (g.source(id) != e.object || g.target(id) != e.object) {
              throw DomainError("term " + g.arrow(id).payload->to_string() + " is not a loop at "
                                + g.object_label(e.object));
            }
          }
        } catch (std::exception const& ex) {
          support.fail(where + ": " + ex.what());
          supported = false;
        }
      }
      if (!supported) {
        continue;
      }

      auto const res = family_residuals(g, family, object_of);
      completeness.residual(res.completeness, tol, where);
      orthogonality.residual(res.orthogonality, tol, where);
      idempotence.residual(res.idempotence, tol, where);

      // Per object, the members form a splitting of the isotropy algebra there.
      for (int y = 0; y < static_cast<int>(objs); ++y) {
        auto const               iso_y = isotropy_group(g, y);
        auto const               index = loop_index(g, y);
        std::vector<GroupVector> local;
        for (std::size_t i = 0; i < family.size(); ++i) {
          if (comp.idempotents[i].object == y) {
            local.push_back(to_group_vector(index, iso_y.order(), family[i]));
          }
        }
        auto const check = verify_idempotent_family(iso_y, local, tol);
        isotropy.residual(check.max_residual, tol, where + " at " + g.object_label(y));
        if (!check.passed()) {
          isotropy.fail(where + " at " + g.object_label(y) + ": " + check.detail);
        }
      }

      // Types: pull each member back to the origin and find its block.
      auto const centrals = central_idempotents(iso_x);
      auto const index_x  = loop_index(g, frame.origin);
      std::vector<std::uint32_t> type_dim;
      for (auto const& f : centrals) {
        type_dim.push_back(central_dimension(iso_x, f).first);
      }
      if (comp.types.size() != centrals.size()) {
        types.fail(where + ": " + std::to_string(comp.types.size()) + " types reported, "
                   + std::to_string(centrals.size()) + " exist");
      }
      for (std::size_t t = 0; t < comp.types.size() && t < centrals.size(); ++t) {
        if (comp.types[t].d != type_dim[t] || comp.types[t].D != objs * type_dim[t]) {
          types.fail(where + ": dimension of type " + std::to_string(t) + " misreported");
        }
      }

      std::map<std::uint32_t, std::uint32_t>           per_type;
      std::set<std::pair<std::uint32_t, std::uint32_t>> classes;
      for (std::size_t i = 0; i < family.size(); ++i) {
        auto const& e         = comp.idempotents[i];
        auto const  alpha     = frame.reps[e.object];
        Sparse      pulled    = star_sparse(
            g, star_sparse(g, Sparse{{g.inverse(alpha), Complex(1.0)}}, family[i]),
            Sparse{{alpha, Complex(1.0)}});
        GroupVector u;
        try {
          u = to_group_vector(index_x, iso_x.order(), pulled);
        } catch (std::exception const& ex) {
          types.fail(where + ": " + ex.what());
          continue;
        }
        double const scale = std::max(1.0, group_norm(u));
        std::optional<std::uint32_t> found;
        for (std::uint32_t t = 0; t < centrals.size(); ++t) {
          if (group_distance(group_mul(iso_x, centrals[t], u), u) <= kTypeTolerance * scale) {
            found = t;
            break;
          }
        }
        if (!found) {
          types.fail(where + ": member " + std::to_string(i) + " is not isotypic");
          continue;
        }
        if (*found != e.type) {
          types.fail(where + ": member " + std::to_string(i) + " has type " + std::to_string(*found)
                     + ", reported " + std::to_string(e.type));
        }
        ++per_type[*found];

        auto const measured = sparse_ideal_dimension(g, family[i], tol);
        auto const expected = static_cast<std::uint32_t>(objs) * type_dim[*found];
        if (measured != expected || measured != e.measured_dimension) {
          ideals.fail(where + ": member " + std::to_string(i) + " spans a left ideal of dimension "
                      + std::to_string(measured) + ", expected " + std::to_string(expected));
        }
        classes.emplace(*found, measured);
      }
      for (std::uint32_t t = 0; t < centrals.size(); ++t) {
        if (per_type[t] != objs * type_dim[t]) {
          lemma.fail(where + ": type " + std::to_string(t) + " has " + std::to_string(per_type[t])
                     + " members, expected " + std::to_string(objs * type_dim[t]));
        }
      }

      // Minimality certificate: one ideal per type, sum of squares = dim.
      std::uint64_t sum = 0;
      for (auto const& [t, dim] : classes) {
        sum += static_cast<std::uint64_t>(dim) * dim;
      }
      if (sum != g.arrow_count()) {
        std::ostringstream os;
        os << where << ": sum of squared ideal dimensions " << sum
           << (sum > g.arrow_count() ? " exceeds " : " falls short of ") << "dim "
           << g.arrow_count() << " (gap " << static_cast<std::int64_t>(sum - g.arrow_count())
           << ")";
        lemma.fail(os.str());
      }
      if (comp.sum_D2 != sum) {
        lemma.fail(where + ": reported sum of D^2 " + std::to_string(comp.sum_D2)
                   + " differs from the measured " + std::to_string(sum));
      }
      grand += mpz_class(std::to_string(sum));
      } catch (std::exception const& ex) {
        structure.fail(where + ": " + ex.what());
      }
    }

    mpz_class const expected = count(rep.n, rep.r);
    if (grand != expected || rep.grand_total != expected.get_str()
        || rep.count != expected.get_str()) {
      totals.fail("grand total " + grand.get_str() + " (reported " + rep.grand_total
                  + ") against |R| = " + expected.get_str());
    }
    return finish();
  }

  std::vector<ComplexElement> transport_to_monoid(DecompositionReport const& rep) {
    std::vector<ComplexElement> out;
    for (auto const& comp : rep.components) {
      for (auto const& e : comp.idempotents) {
        out.push_back(mobius(e.element));
      }
    }
    return out;
  }

  Verdict verify_monoid_transport(std::uint32_t                      n,
                                  std::uint32_t                      r,
                                  std::vector<ComplexElement> const& family,
                                  double                             tol) {
    VerdictBuilder v("monoid_transport");
    ComplexElement sum(n, r);
    for (auto const& e : family) {
      sum += e;
    }
    v.residual(norm(sum - ComplexElement::basis(RookMatrix::identity(n, r))), tol, "sum");
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        auto const p = dot(family[i], family[j]);
        if (i == j) {
          v.residual(norm(p - family[i]), tol, "idempotence of " + std::to_string(i));
        } else {
          v.residual(norm(p), tol,
                     "product of " + std::to_string(i) + " and " + std::to_string(j));
        }
      }
    }
    return v.take();
  }

}  // namespace rookoid
