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

#include "fcrs/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcrs/error.hpp"
#include "fcrs/semigroup.hpp"

namespace fcrs {

  namespace {

    std::vector<std::string> split_tokens(std::string_view text) {
      std::istringstream       in{std::string(text)};
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      auto const ws = " \t\r";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      return s.substr(b, s.find_last_not_of(ws) - b + 1);
    }

    bool starts_with_key(std::string_view line, std::string_view key, std::string_view& rest) {
      if (line.size() > key.size() && line.substr(0, key.size()) == key
          && line[key.size()] == ':') {
        rest = line.substr(key.size() + 1);
        return true;
      }
      return false;
    }

    Word word_at(Alphabet const& a, std::vector<std::string> const& toks, std::size_t line) {
      Word w;
      for (auto const& t : toks) {
        auto x = a.find(t);
        if (!x) {
          throw ParseError(line, "unknown letter \"" + t + "\"");
        }
        w.push_back(*x);
      }
      return w;
    }

    Alphabet letters_at(std::string_view rest, std::size_t line) {
      Alphabet a;
      for (auto& t : split_tokens(rest)) {
        if (t == "->") {
          throw ParseError(line, "\"->\" cannot be a letter");
        }
        if (a.contains(t)) {
          throw ParseError(line, "duplicate letter \"" + t + "\"");
        }
        a.add(std::move(t));
      }
      return a;
    }

    Rule rule_at(Alphabet const& a, std::string_view rest, std::size_t line) {
      auto toks  = split_tokens(rest);
      auto arrow = std::find(toks.begin(), toks.end(), "->");
      if (arrow == toks.end()) {
        throw ParseError(line, "rule needs \"->\"");
      }
      if (std::find(arrow + 1, toks.end(), "->") != toks.end()) {
        throw ParseError(line, "rule has more than one \"->\"");
      }
      Rule r{word_at(a, {toks.begin(), arrow}, line), word_at(a, {arrow + 1, toks.end()}, line)};
      if (r.lhs.empty() || r.rhs.empty()) {
        throw ParseError(line, "both sides of a rule must be non-empty");
      }
      if (r.lhs == r.rhs) {
        throw ParseError(line, "rule has equal sides");
      }
      return r;
    }

    struct Document {
      std::optional<Alphabet> alphabet;
      std::vector<Rule>       rules;
      std::set<std::pair<Word, Word>> seen;
      ConstructionOutput      out;
      std::optional<Alphabet> aux_alphabet;
      std::vector<Rule>       aux_rules;
    };

    ConstructionOutput parse(std::string_view text, bool extended) {
      Document           doc;
      bool               in_witness = false;
      std::size_t        line_no    = 0;
      std::istringstream in{std::string(text)};
      std::string        raw;
      bool               have_cert = false;
      while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty()) {
          continue;
        }
        std::string_view rest;
        if (line.front() == '#') {
          if (extended && starts_with_key(trim(line.substr(1)), "provenance", rest)) {
            doc.out.provenance = std::string(trim(rest));
          }
          continue;
        }
        if (in_witness) {
          auto toks = split_tokens(line);
          if (toks.size() < 3 || toks[1] != "=") {
            throw ParseError(line_no, "witness line must read \"<element> = <word>\"");
          }
          if (find_witness(doc.out.witness, toks[0]) != nullptr) {
            throw ParseError(line_no, "duplicate witness for \"" + toks[0] + "\"");
          }
          doc.out.witness.push_back(
              {toks[0], word_at(*doc.alphabet, {toks.begin() + 2, toks.end()}, line_no)});
          continue;
        }
        if (starts_with_key(line, "letters", rest)) {
          if (doc.alphabet) {
            throw ParseError(line_no, "second \"letters:\" line");
          }
          doc.alphabet = letters_at(rest, line_no);
          continue;
        }
        if (!doc.alphabet) {
          throw ParseError(line_no, "expected \"letters:\" first");
        }
        if (starts_with_key(line, "rule", rest)) {
          if (have_cert) {
            throw ParseError(line_no, "rule after the certificate");
          }
          auto r = rule_at(*doc.alphabet, rest, line_no);
          if (!doc.seen.emplace(r.lhs, r.rhs).second) {
            throw ParseError(line_no, "duplicate rule");
          }
          doc.rules.push_back(std::move(r));
          continue;
        }
        if (!extended) {
          throw ParseError(line_no, "expected \"rule:\"");
        }
        if (starts_with_key(line, "certificate", rest)) {
          try {
            doc.out.certificate.kind = certificate_kind(trim(rest));
          } catch (InputError const& e) {
            throw ParseError(line_no, e.what());
          }
          have_cert = true;
        } else if (starts_with_key(line, "certificate-letters", rest)) {
          auto small = split_tokens(rest);
          for (auto const& t : small) {
            if (!doc.alphabet->contains(t)) {
              throw ParseError(line_no, "unknown letter \"" + t + "\"");
            }
          }
          doc.out.certificate.small_letters = small;
        } else if (starts_with_key(line, "certificate-zero", rest)) {
          auto z = std::string(trim(rest));
          if (!doc.alphabet->contains(z)) {
            throw ParseError(line_no, "unknown letter \"" + z + "\"");
          }
          doc.out.certificate.zero = z;
        } else if (starts_with_key(line, "certificate-zero-word", rest)) {
          doc.out.certificate.zero_word = word_at(*doc.alphabet, split_tokens(rest), line_no);
        } else if (starts_with_key(line, "certificate-aux-letters", rest)) {
          doc.aux_alphabet = letters_at(rest, line_no);
        } else if (starts_with_key(line, "certificate-aux-rule", rest)) {
          if (!doc.aux_alphabet) {
            throw ParseError(line_no, "\"certificate-aux-letters:\" must come first");
          }
          doc.aux_rules.push_back(rule_at(*doc.aux_alphabet, rest, line_no));
        } else if (line == "witness:") {
          in_witness = true;
        } else {
          throw ParseError(line_no, "unrecognized line");
        }
      }
      if (!doc.alphabet) {
        throw ParseError(0, "missing \"letters:\" line");
      }
      try {
        doc.out.system = RewritingSystem(std::move(*doc.alphabet), std::move(doc.rules));
        if (doc.aux_alphabet) {
          doc.out.certificate.aux
              = RewritingSystem(std::move(*doc.aux_alphabet), std::move(doc.aux_rules));
        }
      } catch (ParseError const&) {
        throw;
      } catch (InputError const& e) {
        throw ParseError(0, e.what());
      }
      return doc.out;
    }

    void check_name(std::string const& name) {
      if (!is_valid_token(name)) {
        throw InputError("element name \"" + name + "\" cannot be serialized");
      }
    }

  }  // namespace

  RewritingSystem parse_presentation(std::string_view text) {
    return parse(text, false).system;
  }

  std::string format_presentation(RewritingSystem const& sys) {
    std::string out = "letters:";
    for (auto const& t : sys.alphabet().tokens()) {
      out += " " + t;
    }
    out += '\n';
    for (auto const& r : sys.rules()) {
      out += "rule: " + to_string(sys.alphabet(), r.lhs) + " -> "
             + to_string(sys.alphabet(), r.rhs) + "\n";
    }
    return out;
  }

  ConstructionOutput parse_output(std::string_view text) {
    return parse(text, true);
  }

  std::string format_output(ConstructionOutput const& out) {
    std::string text;
    if (!out.provenance.empty()) {
      text += "# provenance: " + out.provenance + "\n";
    }
    text += format_presentation(out.system);
    auto const& c        = out.certificate;
    auto const& alphabet = out.system.alphabet();
    text += "certificate: " + std::string(to_string(c.kind)) + "\n";
    if (!c.small_letters.empty()) {
      text += "certificate-letters:";
      for (auto const& t : c.small_letters) {
        text += " " + t;
      }
      text += '\n';
    }
    if (c.zero) {
      text += "certificate-zero: " + *c.zero + "\n";
    }
    if (!c.zero_word.empty()) {
      text += "certificate-zero-word: " + to_string(alphabet, c.zero_word) + "\n";
    }
    if (c.aux) {
      auto aux = format_presentation(*c.aux);
      // Prefix each line of the auxiliary presentation.
      std::istringstream in(aux);
      std::string        line;
      while (std::getline(in, line)) {
        text += "certificate-aux-" + line + "\n";
      }
    }
    text += "witness:\n";
    for (auto const& e : out.witness) {
      check_name(e.element);
      text += e.element + " = " + to_string(alphabet, e.word) + "\n";
    }
    return text;
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read " + path.string());
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  ReesDatum parse_rees_datum(std::string_view json_text, std::filesystem::path const& base) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(0, std::string("Rees datum: ") + e.what());
    }
    auto need = [&](char const* key) -> nlohmann::json const& {
      if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(0, std::string("Rees datum needs field \"") + key + "\"");
      }
      return doc.at(key);
    };
    ReesDatum d;
    try {
      auto const& group = need("group");
      if (group.is_string()) {
        auto path      = base / group.get<std::string>();
        d.group_system = parse_presentation(read_file(path));
      } else {
        auto g         = load_and_validate(group.dump());
        auto cf        = cayley_fcrs(g);
        d.group_system = cf.system;
        for (std::size_t k = 0; k < g.size(); ++k) {
          d.group_elements.push_back({g.name(k), cf.witness[k]});
        }
      }
      auto const& alphabet = d.group_system.alphabet();
      if (doc.contains("identity_word") && !doc.at("identity_word").is_null()) {
        d.identity_word = parse_word(alphabet, doc.at("identity_word").get<std::string>());
      }
      d.i_size      = need("I").get<std::size_t>();
      d.lambda_size = need("Lambda").get<std::size_t>();
      auto const& m = need("matrix");
      if (!m.is_array() || m.size() != d.lambda_size) {
        throw ParseError(0, "matrix must have Lambda rows");
      }
      for (auto const& row : m) {
        if (!row.is_array() || row.size() != d.i_size) {
          throw ParseError(0, "every matrix row must have I entries");
        }
        for (auto const& entry : row) {
          if (entry.is_null()) {
            d.matrix.emplace_back(std::nullopt);
          } else {
            d.matrix.emplace_back(parse_word(alphabet, entry.get<std::string>()));
          }
        }
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(0, std::string("Rees datum: ") + e.what());
    }
    return d;
  }

}  // namespace fcrs
