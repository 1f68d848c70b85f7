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

#include "rookoid/serialize.hpp"

#include <cmath>

#include "rookoid/errors.hpp"

namespace rookoid {

  namespace {

    [[noreturn]] void bad(std::string const& what) {
      throw SchemaError(what);
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object()) {
        bad(std::string("expected an object holding \"") + key + "\"");
      }
      auto const it = j.find(key);
      if (it == j.end()) {
        bad(std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    template <typename T>
    T get_unsigned(Json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_number_unsigned()) {
        bad(std::string("field \"") + key + "\" must be a non-negative integer");
      }
      return v.get<T>();
    }

    double get_double(Json const& v, char const* what) {
      if (!v.is_number()) {
        bad(std::string(what) + " must be a number");
      }
      return v.get<double>();
    }

    bool get_bool(Json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_boolean()) {
        bad(std::string("field \"") + key + "\" must be a boolean");
      }
      return v.get<bool>();
    }

    std::string get_string(Json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_string()) {
        bad(std::string("field \"") + key + "\" must be a string");
      }
      return v.get<std::string>();
    }

    Json const& get_array(Json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_array()) {
        bad(std::string("field \"") + key + "\" must be an array");
      }
      return v;
    }

    // Non-finite doubles have no JSON spelling; they become strings.
    Json number(double x) {
      if (std::isfinite(x)) {
        return x;
      }
      return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    }

    double parse_number(Json const& v, char const* what) {
      if (v.is_string()) {
        auto const s = v.get<std::string>();
        if (s == "nan") {
          return std::nan("");
        }
        if (s == "inf") {
          return HUGE_VAL;
        }
        if (s == "-inf") {
          return -HUGE_VAL;
        }
      }
      return get_double(v, what);
    }

    Json complex_json(Complex const& c) {
      return Json::array({number(c.real()), number(c.imag())});
    }

    Complex parse_complex(Json const& v) {
      if (!v.is_array() || v.size() != 2) {
        bad("complex number must be [re, im]");
      }
      return {parse_number(v[0], "real part"), parse_number(v[1], "imaginary part")};
    }

    mpq_class parse_rational(Json const& v) {
      if (!v.is_string()) {
        bad("rational must be a string \"p/q\"");
      }
      mpq_class q;
      if (q.set_str(v.get<std::string>(), 10) != 0 || q.get_den() == 0) {
        bad("malformed rational \"" + v.get<std::string>() + "\"");
      }
      q.canonicalize();
      return q;
    }

    Json entries_json(RookMatrix const& m) {
      Json out = Json::array();
      for (auto const& e : m.entries()) {
        out.push_back(Json::array({e.col, e.row, e.exp}));
      }
      return out;
    }

    RookMatrix parse_entries(std::uint32_t n, std::uint32_t r, Json const& v) {
      if (!v.is_array()) {
        bad("entries must be an array");
      }
      std::vector<RookEntry> entries;
      for (auto const& e : v) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer()
            || !e[1].is_number_integer() || !e[2].is_number_unsigned()) {
          bad("rook entry must be [col, row, exp]");
        }
        entries.push_back(RookEntry{e[0].get<int>(), e[1].get<int>(), e[2].get<std::uint32_t>()});
      }
      try {
        return RookMatrix::from_support(n, r, entries);
      } catch (DomainError const& ex) {
        bad(std::string("invalid rook matrix: ") + ex.what());
      }
    }

    std::pair<std::uint32_t, std::uint32_t> parse_nr(Json const& j) {
      auto const n = get_unsigned<std::uint32_t>(j, "n");
      auto const r = get_unsigned<std::uint32_t>(j, "r");
      if (n == 0 || n > kMaxRookSize || r == 0 || r > kMaxColourOrder) {
        bad("n or r out of range");
      }
      return {n, r};
    }

    template <typename S, typename CoeffJson>
    Json element_json(AlgebraElement<S> const& x, CoeffJson coeff) {
      Json terms = Json::array();
      for (auto const& [m, c] : x.terms()) {
        terms.push_back(Json::array({to_json(m), coeff(c)}));
      }
      return {{"n", x.n()},
              {"r", x.r()},
              {"scalar", ScalarTraits<S>::kind},
              {"terms", std::move(terms)}};
    }

    template <typename S, typename CoeffParse>
    AlgebraElement<S> parse_element(Json const& j, CoeffParse coeff) {
      auto const [n, r] = parse_nr(j);
      if (get_string(j, "scalar") != ScalarTraits<S>::kind) {
        bad(std::string("expected scalar kind ") + ScalarTraits<S>::kind);
      }
      AlgebraElement<S> x(n, r);
      for (auto const& t : get_array(j, "terms")) {
        if (!t.is_array() || t.size() != 2) {
          bad("term must be [matrix, scalar]");
        }
        auto const m = rook_from_json(t[0]);
        if (m.n() != n || m.r() != r) {
          bad("term matrix does not belong to the element's algebra");
        }
        x.add_term(m, coeff(t[1]));
      }
      return x;
    }

    Json component_json(ComponentReport const& c) {
      Json types = Json::array();
      for (auto const& t : c.types) {
        types.push_back({{"index", t.index},
                         {"d", t.d},
                         {"D", t.D},
                         {"multiplicity", t.multiplicity},
                         {"measured_dimension", t.measured}});
      }
      Json family = Json::array();
      for (auto const& e : c.idempotents) {
        family.push_back({{"object", e.object},
                          {"index", e.index},
                          {"type", e.type},
                          {"measured_dimension", e.measured_dimension},
                          {"element", to_json(e.element)}});
      }
      return {{"k", c.k},
              {"objects", c.objects},
              {"isotropy_order", c.isotropy_order},
              {"arrow_count", c.arrow_count},
              {"origin", c.origin},
              {"isotropy_is_wreath", c.isotropy_is_wreath},
              {"diagonal_ok", c.diagonal_ok},
              {"equal_dimension_types", c.equal_dimension_types},
              {"csomi_attempts", c.csomi_attempts},
              {"types", std::move(types)},
              {"sum_D2", c.sum_D2},
              {"residuals",
               {{"csomi", number(c.residuals.csomi)},
                {"completeness", number(c.residuals.completeness)},
                {"orthogonality", number(c.residuals.orthogonality)},
                {"idempotence", number(c.residuals.idempotence)}}},
              {"idempotents", std::move(family)}};
    }

    ComponentReport parse_component(Json const& j) {
      ComponentReport c;
      c.k                     = get_unsigned<std::uint32_t>(j, "k");
      c.objects               = get_unsigned<std::uint64_t>(j, "objects");
      c.isotropy_order        = get_unsigned<std::uint64_t>(j, "isotropy_order");
      c.arrow_count           = get_unsigned<std::uint64_t>(j, "arrow_count");
      c.origin                = get_string(j, "origin");
      c.isotropy_is_wreath    = get_bool(j, "isotropy_is_wreath");
      c.diagonal_ok           = get_bool(j, "diagonal_ok");
      c.equal_dimension_types = get_bool(j, "equal_dimension_types");
      c.csomi_attempts        = get_unsigned<std::uint32_t>(j, "csomi_attempts");
      c.sum_D2                = get_unsigned<std::uint64_t>(j, "sum_D2");
      for (auto const& t : get_array(j, "types")) {
        ComponentType type;
        type.index        = get_unsigned<std::uint32_t>(t, "index");
        type.d            = get_unsigned<std::uint32_t>(t, "d");
        type.D            = get_unsigned<std::uint32_t>(t, "D");
        type.multiplicity = get_unsigned<std::uint32_t>(t, "multiplicity");
        type.measured     = get_unsigned<std::uint32_t>(t, "measured_dimension");
        c.types.push_back(type);
      }
      auto const& res          = field(j, "residuals");
      c.residuals.csomi         = parse_number(field(res, "csomi"), "residual");
      c.residuals.completeness  = parse_number(field(res, "completeness"), "residual");
      c.residuals.orthogonality = parse_number(field(res, "orthogonality"), "residual");
      c.residuals.idempotence   = parse_number(field(res, "idempotence"), "residual");
      for (auto const& e : get_array(j, "idempotents")) {
        ConjugatedIdempotent ci;
        auto const&          obj = field(e, "object");
        if (!obj.is_number_integer()) {
          bad("object must be an integer");
        }
        ci.object             = obj.get<int>();
        ci.index              = get_unsigned<std::uint32_t>(e, "index");
        ci.type               = get_unsigned<std::uint32_t>(e, "type");
        ci.measured_dimension = get_unsigned<std::uint32_t>(e, "measured_dimension");
        ci.element            = complex_element_from_json(field(e, "element"));
        c.idempotents.push_back(std::move(ci));
      }
      return c;
    }

  }  // namespace

  Json to_json(CycNum const& x) {
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
      if (x.coeffs()[i] != 0) {
        coeffs.push_back(Json::array({i, x.coeffs()[i].get_str()}));
      }
    }
    return {{"order", x.order()}, {"coeffs", std::move(coeffs)}};
  }

  CycNum cyc_from_json(Json const& j) {
    auto const order = get_unsigned<std::uint32_t>(j, "order");
    if (order == 0) {
      bad("cyclotomic order must be positive");
    }
    std::vector<mpq_class> powers(order);
    for (auto const& t : get_array(j, "coeffs")) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned()) {
        bad("cyclotomic coefficient must be [exponent, \"p/q\"]");
      }
      auto const e = t[0].get<std::uint64_t>();
      if (e >= order) {
        bad("exponent outside [0, order)");
      }
      powers[e] += parse_rational(t[1]);
    }
    return CycNum::from_powers(order, std::move(powers));
  }

  Json to_json(RookMatrix const& m) {
    return {{"n", m.n()}, {"r", m.r()}, {"entries", entries_json(m)}};
  }

  RookMatrix rook_from_json(Json const& j) {
    auto const [n, r] = parse_nr(j);
    return parse_entries(n, r, field(j, "entries"));
  }

  Json to_json(ComplexElement const& x) {
    return element_json(x, complex_json);
  }

  ComplexElement complex_element_from_json(Json const& j) {
    return parse_element<Complex>(j, parse_complex);
  }

  Json to_json(ExactElement const& x) {
    return element_json(x, [](CycNum const& c) { return to_json(c); });
  }

  ExactElement exact_element_from_json(Json const& j) {
    return parse_element<CycNum>(j, cyc_from_json);
  }

  Json to_json(Groupoid const& g) {
    Json arrows = Json::array();
    for (int a = 0; a < static_cast<int>(g.arrow_count()); ++a) {
      Json rec = {{"id", a}, {"source", g.source(a)}, {"target", g.target(a)}};
      if (g.arrow(a).payload) {
        rec["entries"] = entries_json(*g.arrow(a).payload);
      }
      arrows.push_back(std::move(rec));
    }
    Json units = Json::array();
    for (int x = 0; x < static_cast<int>(g.object_count()); ++x) {
      units.push_back(g.unit(x));
    }
    Json out = {{"objects", g.data().objects},
                {"arrows", std::move(arrows)},
                {"units", std::move(units)},
                {"inverse", g.data().inverse},
                {"connected", g.connected()}};
    if (g.is_rook()) {
      out["n"] = g.rook_n();
      out["r"] = g.rook_r();
      out["k"] = g.rook_k();
    }
    return out;
  }

  Json to_json(Csomi const& c) {
    Json types = Json::array();
    for (auto const& t : c.types) {
      types.push_back(
          {{"dimension", t.dimension}, {"rounding_residual", number(t.rounding_residual)}});
    }
    Json family = Json::array();
    for (auto const& e : c.idempotents) {
      Json v = Json::array();
      for (auto const& z : e) {
        v.push_back(complex_json(z));
      }
      family.push_back(std::move(v));
    }
    return {{"group_order", c.group_order},
            {"seed", c.seed},
            {"tolerance", number(c.tolerance)},
            {"attempts", c.attempts},
            {"types", std::move(types)},
            {"block_map", c.block_map},
            {"residuals",
             {{"completeness", number(c.residuals.completeness)},
              {"orthogonality", number(c.residuals.orthogonality)},
              {"idempotence", number(c.residuals.idempotence)},
              {"dimension", number(c.residuals.dimension)}}},
            {"idempotents", std::move(family)}};
  }

  Json to_json(Verdict const& v) {
    return {{"name", v.name},
            {"passed", v.passed},
            {"residual", number(v.residual)},
            {"detail", v.detail}};
  }

  Json to_json(DecompositionReport const& rep) {
    Json comps = Json::array();
    for (auto const& c : rep.components) {
      comps.push_back(component_json(c));
    }
    Json verdicts = Json::array();
    for (auto const& v : rep.verdicts) {
      verdicts.push_back(to_json(v));
    }
    return {{"schema", rep.schema},
            {"n", rep.n},
            {"r", rep.r},
            {"seed", rep.seed},
            {"tolerance", number(rep.tolerance)},
            {"count", rep.count},
            {"grand_total", rep.grand_total},
            {"passed", rep.passed()},
            {"verdicts", std::move(verdicts)},
            {"components", std::move(comps)}};
  }

  DecompositionReport report_from_json(Json const& j) {
    DecompositionReport rep;
    rep.schema = get_string(j, "schema");
    if (rep.schema != kReportSchema) {
      bad("unsupported schema \"" + rep.schema + "\"");
    }
    std::tie(rep.n, rep.r) = parse_nr(j);
    rep.seed               = get_unsigned<std::uint64_t>(j, "seed");
    rep.tolerance          = parse_number(field(j, "tolerance"), "tolerance");
    rep.count              = get_string(j, "count");
    rep.grand_total        = get_string(j, "grand_total");
    for (auto const& v : get_array(j, "verdicts")) {
      Verdict verdict;
      verdict.name     = get_string(v, "name");
      verdict.passed   = get_bool(v, "passed");
      verdict.residual = parse_number(field(v, "residual"), "residual");
      verdict.detail   = get_string(v, "detail");
      rep.verdicts.push_back(std::move(verdict));
    }
    for (auto const& c : get_array(j, "components")) {
      rep.components.push_back(parse_component(c));
    }
    return rep;
  }

  std::string dump_report(DecompositionReport const& rep) {
    return to_json(rep).dump(2) + "\n";
  }

  DecompositionReport parse_report(std::string_view text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::parse_error const& ex) {
      bad(std::string("malformed JSON: ") + ex.what());
    }
    try {
      return report_from_json(j);
    } catch (SchemaError const&) {
      throw;
    } catch (std::exception const& ex) {
      bad(std::string("invalid report: ") + ex.what());
    }
  }

}  // namespace rookoid
