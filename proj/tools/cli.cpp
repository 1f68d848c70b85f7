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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rookoid/errors.hpp"
#include "rookoid/rook.hpp"
#include "rookoid/serialize.hpp"

namespace rookoid::cli {

  namespace {

    constexpr double kDefaultTolerance = 1e-9;

    // Throws ResourceError or DomainError; callers map both to kExitUsage.
    void check_bounds(CliConfig const& cfg) {
      if (cfg.n < 1 || cfg.n > kMaxN || cfg.r < 1 || cfg.r > kMaxR) {
        throw DomainError("bounds: need 1 <= n <= " + std::to_string(kMaxN) + " and 1 <= r <= "
                          + std::to_string(kMaxR) + ", got n = " + std::to_string(cfg.n)
                          + ", r = " + std::to_string(cfg.r));
      }
      if (cfg.k && *cfg.k > cfg.n) {
        throw DomainError("bounds: k = " + std::to_string(*cfg.k) + " exceeds n");
      }
      mpz_class const size = count(cfg.n, cfg.r);
      if (size > mpz_class(std::to_string(cfg.max_elements))) {
        throw ResourceError("cap exceeded: |R_" + std::to_string(cfg.n) + "^(" + std::to_string(cfg.r)
                            + ")| = " + size.get_str() + " > " + std::to_string(cfg.max_elements));
      }
    }

    // Runs body against the configured sink: the --out file or out.
    template <typename Body>
    int with_sink(CliConfig const& cfg, std::ostream& out, std::ostream& err, Body body) {
      if (cfg.out.empty()) {
        return body(out);
      }
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << cfg.out << " for writing\n";
        return kExitUsage;
      }
      int const code = body(file);
      file.close();
      if (!file) {
        err << "error: failed writing " << cfg.out << "\n";
        return kExitUsage;
      }
      return code;
    }

    std::uint64_t factorial(std::uint32_t k) {
      std::uint64_t f = 1;
      for (std::uint32_t i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    }

    void print_verdicts(std::vector<Verdict> const& verdicts, std::ostream& os) {
      for (auto const& v : verdicts) {
        os << (v.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << v.name
           << " residual " << std::scientific << std::setprecision(3) << v.residual
           << std::defaultfloat;
        if (!v.detail.empty()) {
          os << "  " << v.detail;
        }
        os << "\n";
      }
    }

    std::optional<std::uint64_t> env_cap(std::ostream& err) {
      char const* raw = std::getenv("ROOKOID_MAX_ELEMENTS");
      if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
      }
      try {
        std::size_t used = 0;
        auto const  v    = std::stoull(raw, &used);
        if (used == std::string(raw).size() && v > 0) {
          return v;
        }
      } catch (std::exception const&) {
      }
      err << "warning: ignoring malformed ROOKOID_MAX_ELEMENTS=" << raw << "\n";
      return std::nullopt;
    }

  }  // namespace

  std::string text_summary(DecompositionReport const& rep) {
    std::ostringstream os;
    os << "C[R_" << rep.n << "^(" << rep.r << ")]  seed " << rep.seed << "  tolerance "
       << rep.tolerance << "\n";
    os << std::right << std::setw(3) << "k" << std::setw(10) << "objects" << std::setw(12)
       << "isotropy" << std::setw(10) << "sum D^2" << "  D_i\n";
    for (auto const& c : rep.components) {
      os << std::setw(3) << c.k << std::setw(10) << c.objects << std::setw(12)
         << c.isotropy_order << std::setw(10) << c.sum_D2 << "  ";
      for (std::size_t i = 0; i < c.types.size(); ++i) {
        os << (i ? " " : "") << c.types[i].D;
      }
      if (c.equal_dimension_types) {
        os << "  (equal-dimension types)";
      }
      os << "\n";
    }
    os << "grand total " << rep.grand_total << " / |R| = " << rep.count << "\n";
    print_verdicts(rep.verdicts, os);
    os << (rep.passed() ? "result: pass" : "result: FAIL") << "\n";
    return os.str();
  }

  int cmd_enumerate(CliConfig const& cfg, std::ostream& out, std::ostream& err) {
    try {
      check_bounds(cfg);
    } catch (std::exception const& ex) {
      err << "error: " << ex.what() << "\n";
      return kExitUsage;
    }
    return with_sink(cfg, out, err, [&](std::ostream& os) {
      mpz_class const total = cfg.k ? stratum_count(cfg.n, cfg.r, *cfg.k) : count(cfg.n, cfg.r);
      os << "count: " << total.get_str() << "\n";
      RookEnumeration stream(cfg.n, cfg.r, cfg.k);
      while (auto m = stream.next()) {
        if (cfg.format == "text") {
          os << m->to_string() << "\n";
        } else {
          os << to_json(*m).dump() << "\n";
        }
      }
      return static_cast<int>(kExitPass);
    });
  }

  int cmd_decompose(CliConfig const& cfg, std::ostream& out, std::ostream& err) {
    try {
      check_bounds(cfg);
    } catch (std::exception const& ex) {
      err << "error: " << ex.what() << "\n";
      return kExitUsage;
    }
    double const tol = cfg.tolerance.value_or(kDefaultTolerance);
    DecompositionReport rep;
    try {
      rep = decompose(cfg.n, cfg.r, cfg.seed, tol, cfg.max_elements);
    } catch (NumericDegeneracyError const& ex) {
      err << "numeric degeneracy: " << ex.what() << "\n"
          << "  best residual " << ex.residual() << ", requested tolerance " << tol
          << ", try --tolerance " << ex.suggested_tolerance() << "\n";
      return kExitNumeric;
    } catch (std::exception const& ex) {
      err << "error: " << ex.what() << "\n";
      return kExitUsage;
    }
    return with_sink(cfg, out, err, [&](std::ostream& os) {
      os << (cfg.format == "text" ? text_summary(rep) : dump_report(rep));
      return static_cast<int>(rep.passed() ? kExitPass : kExitVerifyFail);
    });
  }

  int cmd_verify(CliConfig const& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream file(cfg.input, std::ios::binary);
    if (!file) {
      err << "error: cannot read " << cfg.input << "\n";
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    DecompositionReport rep;
    try {
      rep = parse_report(buffer.str());
    } catch (SchemaError const& ex) {
      err << "schema error: " << ex.what() << "\n";
      return kExitUsage;
    }
    double const tol = cfg.tolerance.value_or(rep.tolerance);
    if (!(tol > 0.0)) {
      err << "error: tolerance must be positive\n";
      return kExitUsage;
    }
    CliConfig bounds = cfg;
    bounds.n         = rep.n;
    bounds.r         = rep.r;
    bounds.k.reset();
    try {
      check_bounds(bounds);
    } catch (std::exception const& ex) {
      err << "error: " << ex.what() << "\n";
      return kExitUsage;
    }
    VerificationReport const result = verify_decomposition(rep, tol);
    return with_sink(cfg, out, err, [&](std::ostream& os) {
      if (cfg.format == "text") {
        print_verdicts(result.verdicts, os);
        os << (result.passed() ? "result: pass" : "result: FAIL") << "\n";
      } else {
        Json verdicts = Json::array();
        for (auto const& v : result.verdicts) {
          verdicts.push_back(to_json(v));
        }
        os << Json{{"passed", result.passed()}, {"verdicts", verdicts}}.dump(2) << "\n";
      }
      return static_cast<int>(result.passed() ? kExitPass : kExitVerifyFail);
    });
  }

  int cmd_selftest(CliConfig const& cfg, std::ostream& out, std::ostream& err) {
    struct Case {
      std::uint32_t n, r;
      char const*   total;
    };
    bool ok = true;
    for (auto const& c : {Case{1, 1, "2"}, Case{2, 1, "7"}, Case{2, 2, "17"}, Case{3, 1, "34"}}) {
      try {
        auto const rep  = decompose(c.n, c.r, cfg.seed, cfg.tolerance.value_or(kDefaultTolerance));
        bool const pass = rep.passed() && rep.grand_total == c.total
                          && verify_decomposition(parse_report(dump_report(rep)),
                                                  rep.tolerance)
                                 .passed();
        out << (pass ? "PASS" : "FAIL") << " decompose(" << c.n << ", " << c.r
            << ") total " << rep.grand_total << "\n";
        ok = ok && pass;
      } catch (NumericDegeneracyError const& ex) {
        err << "numeric degeneracy in (" << c.n << ", " << c.r << "): " << ex.what() << "\n";
        return kExitNumeric;
      }
    }
    return ok ? kExitPass : kExitVerifyFail;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    if (auto cap = env_cap(err)) {
      cfg.max_elements = *cap;
    }

    CLI::App app{"Coloured rook monoid algebras and their Wedderburn-Artin splitting", "rookoid"};
    app.require_subcommand(1);
    double tolerance = kDefaultTolerance;

    auto add_shape = [&](CLI::App* sub, bool with_k) {
      sub->add_option("--n", cfg.n, "matrix size")->required();
      sub->add_option("--r", cfg.r, "colour order")->required();
      if (with_k) {
        sub->add_option("--k", cfg.k, "restrict to one rank");
      }
    };
    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--format", cfg.format, "json or text")
          ->check(CLI::IsMember({"json", "text"}));
      sub->add_option("--out", cfg.out, "output file (default: standard output)");
    };
    auto add_numeric = [&](CLI::App* sub) {
      sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
      sub->add_option("--tolerance", tolerance, "residual tolerance")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
    };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list R_n^(r) in basis order");
    add_shape(enumerate_cmd, true);
    add_common(enumerate_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "split C[R_n^(r)] and certify it");
    add_shape(decompose_cmd, false);
    add_numeric(decompose_cmd);
    add_common(decompose_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "re-check a stored report");
    verify_cmd->add_option("file", cfg.input, "report JSON")->required();
    verify_cmd->add_option("--tolerance", tolerance, "override the report tolerance")
        ->check(CLI::PositiveNumber);
    add_common(verify_cmd);

    auto* selftest_cmd = app.add_subcommand("selftest", "decompose a few small cases");
    add_numeric(selftest_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitPass : kExitUsage;
    }

    for (auto* sub : {decompose_cmd, verify_cmd, selftest_cmd}) {
      if (sub->parsed() && sub->count("--tolerance") > 0) {
        cfg.tolerance = tolerance;
      }
    }
    if (enumerate_cmd->parsed()) {
      cfg.command = "enumerate";
      return cmd_enumerate(cfg, out, err);
    }
    if (decompose_cmd->parsed()) {
      cfg.command = "decompose";
      return cmd_decompose(cfg, out, err);
    }
    if (verify_cmd->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
    cfg.command = "selftest";
    return cmd_selftest(cfg, out, err);
  }

}  // namespace rookoid::cli
