// Copyright 2026 The fcrs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fcrs/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fcrs/catalogue.hpp"
#include "fcrs/confluence.hpp"
#include "fcrs/constructions.hpp"
#include "fcrs/error.hpp"
#include "fcrs/io.hpp"
#include "fcrs/orders.hpp"
#include "fcrs/semigroup.hpp"

namespace fcrs::cli {

  namespace {

    namespace fs = std::filesystem;

    std::string join(std::vector<std::string> const& parts) {
      std::string s;
      for (auto const& p : parts) {
        s += (s.empty() ? "" : " ") + p;
      }
      return s;
    }

    std::string quoted(Alphabet const& a, Word const& w) {
      return "\"" + to_string(a, w) + "\"";
    }

    void check_budget(std::size_t budget, char const* what) {
      if (budget == 0 || budget > max_budget) {
        throw InputError(std::string(what) + " must lie in 1.." + std::to_string(max_budget));
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // normalize
    ////////////////////////////////////////////////////////////////////////

    struct NormalizeArgs {
      std::string              path;
      std::vector<std::string> word;
      std::size_t              budget = default_step_budget;
    };

    void print_trace(Alphabet const& a, ReductionTrace const& t, std::ostream& out) {
      for (std::size_t k = 0; k < t.steps.size(); ++k) {
        auto const& s    = t.steps[k];
        auto const& next = k + 1 < t.steps.size() ? t.steps[k + 1].word : t.final;
        out << quoted(a, s.word) << " →[rule " << s.rule << " @ pos " << s.pos << "] "
            << quoted(a, next) << '\n';
      }
    }

    int normalize_cmd(NormalizeArgs const& args, std::ostream& out, std::ostream& err) {
      check_budget(args.budget, "--budget");
      auto sys = parse_presentation(read_file(args.path));
      auto w   = parse_word(sys.alphabet(), join(args.word));
      if (w.empty()) {
        throw InputError("the word must be non-empty");
      }
      try {
        auto trace = normalize(sys, w, args.budget);
        print_trace(sys.alphabet(), trace, out);
        out << "final: " << quoted(sys.alphabet(), trace.final) << '\n'
            << "steps: " << trace.steps.size() << '\n';
        return ok;
      } catch (NormalizeBudgetExhausted const& e) {
        print_trace(sys.alphabet(), e.partial(), out);
        out << "partial: " << quoted(sys.alphabet(), e.partial().final) << '\n'
            << "steps: " << e.partial().steps.size() << '\n';
        err << "error: " << e.what() << '\n';
        return fails;
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // check
    ////////////////////////////////////////////////////////////////////////

    struct CheckArgs {
      std::string path;
      bool        confluence = false;
      std::size_t ball       = 0;
      std::string certificate;
      std::string small;
      std::string zero_letter;
      std::string aux;
      std::string format    = "text";
      std::size_t budget    = default_step_budget;
      std::size_t max_words = default_ball_word_budget;
    };

    int check_cmd(CheckArgs const& args, std::ostream& out) {
      check_budget(args.budget, "--budget");
      check_budget(args.max_words, "--max-words");
      if (args.ball > max_ball_length) {
        throw InputError("--termination-ball must lie in 1.." + std::to_string(max_ball_length));
      }
      bool json = args.format == "json";
      auto doc  = parse_output(read_file(args.path));
      auto const& a = doc.system.alphabet();
      if (!args.certificate.empty()) {
        doc.certificate.kind = certificate_kind(args.certificate);
      }
      if (!args.small.empty()) {
        std::istringstream in(args.small);
        doc.certificate.small_letters.clear();
        for (std::string t; in >> t;) {
          static_cast<void>(a.letter(t));
          doc.certificate.small_letters.push_back(t);
        }
      }
      if (!args.zero_letter.empty()) {
        static_cast<void>(a.letter(args.zero_letter));
        doc.certificate.zero = args.zero_letter;
      }
      if (!args.aux.empty()) {
        doc.certificate.aux = parse_presentation(read_file(args.aux));
      }

      bool do_confluence = args.confluence || args.ball == 0;
      bool pass          = true;
      ConfluenceReport confluence;
      BallReport       ball;
      if (do_confluence) {
        confluence = check_local_confluence(doc.system, args.budget);
        out << (json ? format_json_lines(a, confluence) : format_text(a, confluence));
        pass = pass && confluence.locally_confluent();
      }
      if (args.ball != 0) {
        auto order = make_comparator(doc.system, doc.certificate, args.budget);
        ball       = verify_decrease_on_ball(doc.system, *order, args.ball, args.max_words);
        out << (json ? format_json_lines(a, ball) : format_text(a, ball));
        pass = pass && ball.holds();
      }
      if (do_confluence && args.ball != 0) {
        auto verdict = completeness_verdict(ball, confluence);
        if (json) {
          out << nlohmann::json{{"type", "verdict"}, {"verdict", std::string(to_string(verdict))}}.dump()
              << '\n';
        } else {
          out << "verdict=" << to_string(verdict) << '\n';
        }
      }
      return pass ? ok : fails;
    }

    ////////////////////////////////////////////////////////////////////////
    // construct
    ////////////////////////////////////////////////////////////////////////

    struct ConstructArgs {
      std::string              kind;
      std::vector<std::string> inputs;
      std::string              output;
      bool                     no_verify = false;
      std::string              zero;
      std::string              ideal;
    };

    void require_inputs(ConstructArgs const& args, std::size_t n) {
      if (args.inputs.size() != n) {
        throw InputError("construct " + args.kind + " expects " + std::to_string(n)
                         + " input file(s)");
      }
    }

    std::vector<std::size_t> parse_elements(FiniteSemigroup const& s, std::string const& text) {
      std::istringstream       in(text);
      std::vector<std::size_t> out;
      for (std::string t; in >> t;) {
        out.push_back(s.index(t));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      if (out.empty()) {
        throw InputError("--ideal needs at least one element");
      }
      return out;
    }

    int construct_cmd(ConstructArgs const& args, std::ostream& out, std::ostream& err) {
      ConstructionOutput             result;
      std::optional<FiniteSemigroup> table;
      auto const&                    kind = args.kind;
      if (kind == "adjoin-zero") {
        require_inputs(args, 1);
        if (args.zero.empty()) {
          throw InputError("adjoin-zero needs --zero WORD");
        }
        auto sys = parse_presentation(read_file(args.inputs[0]));
        result   = adjoin_zero(sys, parse_word(sys.alphabet(), args.zero));
      } else if (kind == "ideal-extension") {
        require_inputs(args, 1);
        if (args.ideal.empty()) {
          throw InputError("ideal-extension needs --ideal \"ELEMENTS\"");
        }
        auto s  = load_and_validate(read_file(args.inputs[0]));
        auto ti = parse_elements(s, args.ideal);
        auto q  = rees_quotient(s, ti, fresh_name(s, "0"));
        auto ts = subsemigroup(s, ti);
        auto tc = cayley_fcrs(ts);
        auto uc = cayley_fcrs(q.semigroup);
        ConstructionOutput t{tc.system, {}, {}, {}};
        ConstructionOutput u{uc.system, {}, {}, {}};
        for (std::size_t k = 0; k < ts.size(); ++k) {
          t.witness.push_back({ts.name(k), tc.witness[k]});
        }
        for (std::size_t k = 0; k < q.semigroup.size(); ++k) {
          u.witness.push_back({q.semigroup.name(k), uc.witness[k]});
        }
        u.certificate.zero = q.semigroup.name(q.zero);
        result             = ideal_extension(s, ti, t, u);
        table              = std::move(s);
      } else if (kind == "rees-zero" || kind == "rees-simple") {
        require_inputs(args, 1);
        fs::path path = args.inputs[0];
        auto     d    = parse_rees_datum(read_file(path), path.parent_path());
        result        = kind == "rees-zero" ? rees_zero(d) : rees_simple(d);
      } else if (kind == "regular") {
        require_inputs(args, 1);
        auto s = load_and_validate(read_file(args.inputs[0]));
        result = regular_pipeline(s).output;
        table  = std::move(s);
      } else {
        throw InputError("unknown construction \"" + kind
                         + "\" (adjoin-zero, ideal-extension, rees-zero, rees-simple, regular)");
      }

      auto text = format_output(result);
      if (args.output.empty()) {
        out << text;
      } else {
        std::ofstream f(args.output, std::ios::binary);
        if (!f || !(f << text)) {
          throw InputError("cannot write " + args.output);
        }
      }
      if (args.no_verify) {
        return ok;
      }
      std::ostream& report = args.output.empty() ? err : out;
      auto          v      = certify(result);
      report << "verdict=" << to_string(v.verdict) << " pairs=" << v.confluence.pairs.size()
             << " unresolved=" << v.confluence.unresolved()
             << " undecided=" << v.confluence.undecided() << " ball=" << v.ball.max_len
             << " checked=" << v.ball.checked << " violations=" << v.ball.violations.size()
             << (v.ball.truncated ? " truncated" : "") << '\n';
      bool pass = v.verdict == Completeness::complete_certified_at_scale;
      if (table) {
        auto t = verify_against_table(result, *table);
        report << "products=" << t.checked << " failed=" << t.mismatches.size() << '\n';
        pass = pass && t.mismatches.empty();
      }
      return pass ? ok : fails;
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    int verify_cmd(std::string const& output, std::string const& cayley, std::ostream& out) {
      auto doc = parse_output(read_file(output));
      auto s   = load_and_validate(read_file(cayley));
      auto t   = verify_against_table(doc, s);
      auto const& a = doc.system.alphabet();
      for (auto const& m : t.mismatches) {
        out << "MISMATCH " << m.x << "*" << m.y << " expected=" << quoted(a, m.expected)
            << " actual=" << quoted(a, m.actual) << '\n';
      }
      out << "products=" << t.checked << " passed=" << t.checked - t.mismatches.size()
          << " failed=" << t.mismatches.size() << '\n';
      return t.mismatches.empty() ? ok : fails;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite complete rewriting systems for finite semigroups", "fcrs"};
    app.require_subcommand(1);

    NormalizeArgs na;
    auto*         normalize = app.add_subcommand("normalize", "Reduce a word to normal form");
    normalize->add_option("presentation", na.path, "Presentation file (.prs)")->required();
    normalize->add_option("word", na.word, "Word, tokens separated by spaces")->required();
    normalize->add_option("--budget", na.budget, "Step budget");

    CheckArgs ca;
    auto*     check = app.add_subcommand("check", "Critical pairs and termination ball");
    check->add_option("presentation", ca.path, "Presentation or construction output")->required();
    check->add_flag("--confluence", ca.confluence, "Check local confluence (default)");
    check->add_option("--termination-ball", ca.ball, "Verify decrease on words up to length L");
    check->add_option("--certificate", ca.certificate,
                      "length, adjoin-zero, ideal-extension or rees");
    check->add_option("--small", ca.small, "Letters of the inner alphabet A");
    check->add_option("--zero-letter", ca.zero_letter, "Zero letter");
    check->add_option("--aux", ca.aux, "Quotient presentation for ideal-extension");
    check->add_option("--format", ca.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--budget", ca.budget, "Step budget");
    check->add_option("--max-words", ca.max_words, "Word budget of the termination ball");

    ConstructArgs ka;
    auto*         construct = app.add_subcommand("construct", "Build a complete system");
    construct->add_option("kind", ka.kind,
                          "adjoin-zero, ideal-extension, rees-zero, rees-simple or regular")
        ->required();
    construct->add_option("inputs", ka.inputs, "Input files");
    construct->add_option("-o,--output", ka.output, "Output file (default: standard output)");
    construct->add_flag("--no-verify", ka.no_verify, "Skip verification");
    construct->add_option("--zero", ka.zero, "Zero word (adjoin-zero)");
    construct->add_option("--ideal", ka.ideal, "Ideal elements (ideal-extension)");

    std::string vo, vc;
    auto*       verify = app.add_subcommand("verify", "Check a construction against a table");
    verify->add_option("output", vo, "Construction output")->required();
    verify->add_option("cayley", vc, "Cayley table document")->required();

    std::string cn;
    auto*       cat = app.add_subcommand("catalogue", "List or print built-in semigroups");
    cat->add_option("name", cn, "Semigroup name");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }

    try {
      if (*normalize) {
        return normalize_cmd(na, out, err);
      }
      if (*check) {
        return check_cmd(ca, out);
      }
      if (*construct) {
        return construct_cmd(ka, out, err);
      }
      if (*verify) {
        return verify_cmd(vo, vc, out);
      }
      if (*cat) {
        if (cn.empty()) {
          for (auto const& n : catalogue::names()) {
            out << n << '\n';
          }
        } else {
          out << to_json(catalogue::by_name(cn));
        }
        return ok;
      }
    } catch (InputError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return fails;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return fails;
    }
    return input_error;
  }

}  // namespace fcrs::cli
