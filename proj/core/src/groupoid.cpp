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

#include "rookoid/groupoid.hpp"

#include <algorithm>
#include <unordered_map>

#include "rookoid/errors.hpp"

namespace rookoid {

  namespace {

    std::string arrow_name(Groupoid const& g, int a) {
      auto const& rec = g.arrow(a);
      if (rec.payload) {
        return rec.payload->to_string();
      }
      return "#" + std::to_string(a);
    }

    void fail(AxiomCheck& c, std::string witness) {
      if (c.passed) {
        c.passed  = false;
        c.witness = std::move(witness);
      }
    }

  }  // namespace

  Groupoid Groupoid::from_data(GroupoidData data) {
    auto const objects = static_cast<int>(data.objects.size());
    auto const arrows  = static_cast<int>(data.arrows.size());
    if (objects == 0) {
      throw DomainError("groupoid has no objects");
    }
    if (!data.object_subsets.empty() && static_cast<int>(data.object_subsets.size()) != objects) {
      throw DomainError("object subset list does not match the object count");
    }
    if (static_cast<int>(data.units.size()) != objects) {
      throw DomainError("expected one unit per object");
    }
    if (static_cast<int>(data.inverse.size()) != arrows) {
      throw DomainError("expected one inverse per arrow");
    }
    for (auto const& a : data.arrows) {
      if (a.source < 0 || a.source >= objects || a.target < 0 || a.target >= objects) {
        throw DomainError("arrow endpoint out of range");
      }
    }
    for (int u : data.units) {
      if (u < 0 || u >= arrows) {
        throw DomainError("unit arrow id out of range");
      }
    }
    for (int v : data.inverse) {
      if (v < 0 || v >= arrows) {
        throw DomainError("inverse arrow id out of range");
      }
    }
    if (!data.composition.empty()) {
      if (data.composition.size() != static_cast<std::size_t>(arrows) * arrows) {
        throw DomainError("composition table must have |Ar|^2 entries");
      }
      for (auto c : data.composition) {
        if (c < -1 || c >= arrows) {
          throw DomainError("composition entry out of range");
        }
      }
    } else {
      for (auto const& a : data.arrows) {
        if (!a.payload) {
          throw DomainError("a groupoid without matrix payloads needs a composition table");
        }
      }
    }
    Groupoid g;
    g.data_ = std::move(data);
    return g;
  }

  std::optional<SubsetId> Groupoid::object_subset(int x) const {
    if (data_.object_subsets.empty()) {
      return std::nullopt;
    }
    return data_.object_subsets.at(x);
  }

  std::optional<int> Groupoid::compose(int outer, int inner) const {
    auto const arrows = static_cast<int>(arrow_count());
    if (outer < 0 || outer >= arrows || inner < 0 || inner >= arrows) {
      throw DomainError("arrow id out of range");
    }
    if (source(outer) != target(inner)) {
      return std::nullopt;
    }
    if (has_table()) {
      auto const c = data_.composition[static_cast<std::size_t>(outer) * arrows + inner];
      if (c < 0) {
        return std::nullopt;
      }
      return c;
    }
    auto const& a = data_.arrows[outer].payload;
    auto const& b = data_.arrows[inner].payload;
    if (!a || !b) {
      return std::nullopt;
    }
    if (rook_) {
      return arrow_id(rook_mul(*a, *b));
    }
    // Generic payload groupoid without table: linear search.
    auto const p = rook_mul(*a, *b);
    for (int i = 0; i < arrows; ++i) {
      if (data_.arrows[i].payload && *data_.arrows[i].payload == p) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::vector<int> Groupoid::hom(int x, int y) const {
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(arrow_count()); ++a) {
      if (data_.arrows[a].source == x && data_.arrows[a].target == y) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::optional<int> Groupoid::arrow_id(RookMatrix const& m) const {
    if (rook_) {
      if (m.n() != rook_->n || m.r() != rook_->r || m.rank() != rook_->k) {
        return std::nullopt;
      }
      return static_cast<int>(stratum_index(m));
    }
    for (int i = 0; i < static_cast<int>(arrow_count()); ++i) {
      if (data_.arrows[i].payload && *data_.arrows[i].payload == m) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<int> Groupoid::object_id(SubsetId const& s) const {
    if (rook_) {
      if (s.n() != rook_->n || s.size() != rook_->k) {
        return std::nullopt;
      }
      return static_cast<int>(subset_rank(s));
    }
    for (int i = 0; i < static_cast<int>(data_.object_subsets.size()); ++i) {
      if (data_.object_subsets[i] && *data_.object_subsets[i] == s) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::uint32_t Groupoid::rook_n() const {
    if (!rook_) {
      throw DomainError("not a rook groupoid");
    }
    return rook_->n;
  }

  std::uint32_t Groupoid::rook_r() const {
    if (!rook_) {
      throw DomainError("not a rook groupoid");
    }
    return rook_->r;
  }

  std::uint32_t Groupoid::rook_k() const {
    if (!rook_) {
      throw DomainError("not a rook groupoid");
    }
    return rook_->k;
  }

  Groupoid build_rank_groupoid(std::uint32_t n, std::uint32_t r, std::uint32_t k) {
    if (k > n) {
      throw DomainError("rank " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    mpz_class const size = stratum_count(n, r, k);
    if (size > mpz_class(static_cast<unsigned long>(kMaxGroupOrder) * 100)) {
      throw ResourceError("stratum of " + size.get_str() + " arrows is too large");
    }

    GroupoidData d;
    auto const   subsets = k_subsets(n, k);
    for (auto const& s : subsets) {
      d.objects.push_back(s.to_string());
      d.object_subsets.emplace_back(s);
    }
    for (auto const& m : enumerate(n, r, k)) {
      d.arrows.push_back(ArrowRecord{static_cast<int>(subset_rank(m.source())),
                                     static_cast<int>(subset_rank(m.target())), m});
    }
    auto const arrows = d.arrows.size();
    for (auto const& s : subsets) {
      d.units.push_back(static_cast<int>(stratum_index(RookMatrix::partial_identity(s, r))));
    }
    d.inverse.reserve(arrows);
    for (auto const& a : d.arrows) {
      d.inverse.push_back(static_cast<int>(stratum_index(dagger(*a.payload))));
    }
    if (arrows <= Groupoid::kTableArrowCap) {
      d.composition.assign(arrows * arrows, -1);
      for (std::size_t o = 0; o < arrows; ++o) {
        for (std::size_t i = 0; i < arrows; ++i) {
          if (d.arrows[o].source != d.arrows[i].target) {
            continue;
          }
          auto const p = rook_mul(*d.arrows[o].payload, *d.arrows[i].payload);
          d.composition[o * arrows + i] = static_cast<std::int32_t>(stratum_index(p));
        }
      }
    }
    d.connected = true;

    Groupoid g  = Groupoid::from_data(std::move(d));
    g.rook_     = Groupoid::RookParams{n, r, k};
    return g;
  }

  std::vector<int> isotropy_arrows(Groupoid const& g, int x) {
    if (x < 0 || x >= static_cast<int>(g.object_count())) {
      throw DomainError("unknown object " + std::to_string(x));
    }
    return g.hom(x, x);
  }

  GroupTable isotropy_group(Groupoid const& g, int x) {
    auto const loops = isotropy_arrows(g, x);
    auto const order = static_cast<std::uint32_t>(loops.size());
    if (order > kMaxGroupOrder) {
      throw ResourceError("isotropy group of order " + std::to_string(order) + " exceeds cap");
    }
    std::unordered_map<int, std::uint32_t> index;
    for (std::uint32_t i = 0; i < order; ++i) {
      index.emplace(loops[i], i);
    }
    std::vector<std::uint32_t> mul(static_cast<std::size_t>(order) * order);
    std::vector<std::string>   labels;
    labels.reserve(order);
    for (std::uint32_t a = 0; a < order; ++a) {
      labels.push_back(arrow_name(g, loops[a]));
      for (std::uint32_t b = 0; b < order; ++b) {
        auto const c = g.compose(loops[a], loops[b]);
        auto const it = c ? index.find(*c) : index.end();
        if (it == index.end()) {
          throw DomainError("loops at object " + std::to_string(x) + " are not closed");
        }
        mul[static_cast<std::size_t>(a) * order + b] = it->second;
      }
    }
    return GroupTable(order, std::move(mul), std::move(labels));
  }

  RepresentativeFrame representative_frame(Groupoid const& g, std::uint32_t k) {
    if (!g.is_rook() || g.rook_k() != k) {
      throw DomainError("representative frame needs a rank-" + std::to_string(k)
                        + " rook groupoid");
    }
    auto const           n = g.rook_n();
    auto const           r = g.rook_r();
    RepresentativeFrame f;
    f.origin = *g.object_id(SubsetId::initial(n, k));
    for (int y = 0; y < static_cast<int>(g.object_count()); ++y) {
      auto const             members = g.object_subset(y)->members();
      std::vector<RookEntry> entries;
      for (std::uint32_t i = 0; i < k; ++i) {
        entries.push_back(RookEntry{static_cast<int>(i) + 1, members[i], 0});
      }
      f.reps.push_back(*g.arrow_id(RookMatrix::from_support(n, r, entries)));
    }
    return f;
  }

  bool AxiomReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
  }

  AxiomCheck const& AxiomReport::check(std::string const& name) const {
    for (auto const& c : checks) {
      if (c.name == name) {
        return c;
      }
    }
    throw DomainError("no axiom check named " + name);
  }

  AxiomReport verify_axioms(Groupoid const& g) {
    auto const objects = static_cast<int>(g.object_count());
    auto const arrows  = static_cast<int>(g.arrow_count());

    AxiomCheck units{"units", true, 0, {}};
    for (int x = 0; x < objects; ++x) {
      auto const u = g.unit(x);
      ++units.checked;
      if (g.source(u) != x || g.target(u) != x) {
        fail(units, "unit of object " + g.object_label(x) + " is not a loop there");
      }
    }

    // Out-going arrows per object, to walk composable pairs only.
    std::vector<std::vector<int>> from(objects);
    for (int a = 0; a < arrows; ++a) {
      from[g.source(a)].push_back(a);
    }

    AxiomCheck closure{"closure", true, 0, {}};
    if (g.has_table()) {
      auto const& table = g.data().composition;
      for (int o = 0; o < arrows; ++o) {
        for (int i = 0; i < arrows; ++i) {
          bool const composable = g.source(o) == g.target(i);
          auto const c          = table[static_cast<std::size_t>(o) * arrows + i];
          ++closure.checked;
          if (!composable && c >= 0) {
            fail(closure, "defined on non-composable pair (" + arrow_name(g, o) + ", "
                              + arrow_name(g, i) + ")");
          }
        }
      }
    }
    for (int i = 0; i < arrows; ++i) {
      for (int o : from[g.target(i)]) {
        ++closure.checked;
        auto const c = g.compose(o, i);
        if (!c) {
          fail(closure, "undefined on composable pair (" + arrow_name(g, o) + ", "
                            + arrow_name(g, i) + ")");
        } else if (g.source(*c) != g.source(i) || g.target(*c) != g.target(o)) {
          fail(closure, "composite of (" + arrow_name(g, o) + ", " + arrow_name(g, i)
                            + ") has wrong endpoints");
        }
      }
    }

    AxiomCheck unit_laws{"unit_laws", true, 0, {}};
    for (int a = 0; a < arrows; ++a) {
      ++unit_laws.checked;
      auto const left  = g.compose(g.unit(g.target(a)), a);
      auto const right = g.compose(a, g.unit(g.source(a)));
      if (left != a || right != a) {
        fail(unit_laws, "unit law fails at " + arrow_name(g, a));
      }
    }

    AxiomCheck inverses{"inverses", true, 0, {}};
    for (int a = 0; a < arrows; ++a) {
      ++inverses.checked;
      auto const v = g.inverse(a);
      if (g.compose(v, a) != g.unit(g.source(a)) || g.compose(a, v) != g.unit(g.target(a))) {
        fail(inverses, "inverse fails at " + arrow_name(g, a));
      }
    }

    AxiomCheck assoc{"associativity", true, 0, {}};
    if (closure.passed) {
      for (int a = 0; a < arrows && assoc.passed; ++a) {
        for (int b : from[g.target(a)]) {
          auto const ba = *g.compose(b, a);
          for (int c : from[g.target(b)]) {
            ++assoc.checked;
            if (g.compose(*g.compose(c, b), a) != g.compose(c, ba)) {
              fail(assoc, "(" + arrow_name(g, c) + ", " + arrow_name(g, b) + ", "
                              + arrow_name(g, a) + ")");
            }
          }
        }
      }
    } else {
      fail(assoc, "skipped: composition is not closed");
    }

    AxiomCheck connected{"connected", true, 0, {}};
    if (g.connected()) {
      std::vector<std::vector<char>> reach(objects, std::vector<char>(objects, 0));
      for (int a = 0; a < arrows; ++a) {
        reach[g.source(a)][g.target(a)] = 1;
      }
      for (int x = 0; x < objects; ++x) {
        for (int y = 0; y < objects; ++y) {
          ++connected.checked;
          if (!reach[x][y]) {
            fail(connected, "Hom(" + g.object_label(x) + ", " + g.object_label(y) + ") is empty");
          }
        }
      }
    }

    return AxiomReport{{units, closure, unit_laws, inverses, assoc, connected}};
  }

  AxiomCheck verify_isotropy_conjugation(Groupoid const& g, RepresentativeFrame const& frame) {
    AxiomCheck  check{"isotropy_conjugation", true, 0, {}};
    auto const  x     = frame.origin;
    auto const  loops = isotropy_arrows(g, x);
    if (frame.reps.size() != g.object_count()) {
      fail(check, "frame has " + std::to_string(frame.reps.size()) + " arrows for "
                      + std::to_string(g.object_count()) + " objects");
      return check;
    }
    for (int y = 0; y < static_cast<int>(g.object_count()); ++y) {
      auto const alpha = frame.reps[y];
      if (g.source(alpha) != x || g.target(alpha) != y) {
        fail(check, "frame arrow for " + g.object_label(y) + " has wrong endpoints");
        continue;
      }
      auto const alpha_inv = g.inverse(alpha);
      auto const target    = isotropy_arrows(g, y);
      std::unordered_map<int, int> image;
      for (int h : loops) {
        auto const ah = g.compose(alpha, h);
        auto const c  = ah ? g.compose(*ah, alpha_inv) : std::nullopt;
        if (!c || g.source(*c) != y || g.target(*c) != y) {
          fail(check, "conjugate of " + arrow_name(g, h) + " is not a loop at "
                          + g.object_label(y));
          continue;
        }
        image[h] = *c;
      }
      std::vector<int> values;
      for (auto const& [h, c] : image) {
        values.push_back(c);
      }
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      ++check.checked;
      if (values.size() != loops.size() || values.size() != target.size()) {
        fail(check, "conjugation onto " + g.object_label(y) + " is not bijective");
        continue;
      }
      for (int h1 : loops) {
        for (int h2 : loops) {
          ++check.checked;
          auto const prod = g.compose(h1, h2);
          auto const img  = g.compose(image[h1], image[h2]);
          if (!prod || !img || image[*prod] != *img) {
            fail(check, "conjugation onto " + g.object_label(y) + " is not multiplicative");
          }
        }
      }
    }
    return check;
  }

}  // namespace rookoid
