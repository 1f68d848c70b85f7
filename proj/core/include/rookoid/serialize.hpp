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

// JSON encodings. Rationals are strings "p/q", complex numbers [re, im],
// rook matrices {"n", "r", "entries": [[col, row, exp], ...]}, algebra
// elements {"n", "r", "scalar", "terms": [[matrix, scalar], ...]} in basis
// order. Every parser throws SchemaError on malformed input.

#ifndef ROOKOID_SERIALIZE_HPP
#define ROOKOID_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rookoid/cyclotomic.hpp"
#include "rookoid/group_rep.hpp"
#include "rookoid/groupoid.hpp"
#include "rookoid/monoid_algebra.hpp"
#include "rookoid/rook.hpp"
#include "rookoid/wa_decomposition.hpp"

namespace rookoid {

  using Json = nlohmann::json;

  Json   to_json(CycNum const& x);
  CycNum cyc_from_json(Json const& j);

  Json       to_json(RookMatrix const& m);
  RookMatrix rook_from_json(Json const& j);

  Json           to_json(ComplexElement const& x);
  ComplexElement complex_element_from_json(Json const& j);

  Json         to_json(ExactElement const& x);
  ExactElement exact_element_from_json(Json const& j);

  Json to_json(Groupoid const& g);
  Json to_json(Csomi const& c);
  Json to_json(Verdict const& v);

  Json                to_json(DecompositionReport const& rep);
  DecompositionReport report_from_json(Json const& j);

  //! Two-space indented JSON with a trailing newline; stable for a given
  //! report.
  std::string         dump_report(DecompositionReport const& rep);
  DecompositionReport parse_report(std::string_view text);

}  // namespace rookoid

#endif  // ROOKOID_SERIALIZE_HPP
