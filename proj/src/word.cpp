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

#include "fcrs/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "fcrs/error.hpp"

namespace fcrs {

  bool is_valid_token(std::string_view token) noexcept {
    return !token.empty()
           && std::none_of(token.begin(), token.end(), [](char c) {
                return std::isspace(static_cast<unsigned char>(c)) != 0;
              });
  }

  Alphabet::Alphabet(std::vector<std::string> tokens) {
    for (auto& t : tokens) {
      add(std::move(t));
    }
  }

  letter_type Alphabet::add(std::string token) {
    if (!is_valid_token(token)) {
      throw InputError("invalid letter token \"" + token + "\"");
    }
    if (index_.count(token) != 0) {
      throw InputError("duplicate letter token \"" + token + "\"");
    }
    auto x = static_cast<letter_type>(tokens_.size());
    index_.emplace(token, x);
    tokens_.push_back(std::move(token));
    return x;
  }

  bool Alphabet::contains(std::string_view token) const {
    return index_.count(std::string(token)) != 0;
  }

  std::optional<letter_type> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  letter_type Alphabet::letter(std::string_view token) const {
    auto x = find(token);
    if (!x) {
      throw InputError("unknown letter \"" + std::string(token) + "\"");
    }
    return *x;
  }

  std::string const& Alphabet::token(letter_type x) const {
    if (x >= tokens_.size()) {
      throw InputError("letter index " + std::to_string(x)
                       + " outside alphabet of size "
                       + std::to_string(tokens_.size()));
    }
    return tokens_[x];
  }

  std::string Alphabet::fresh_token(std::string const& base) const {
    std::string t = base;
    while (contains(t)) {
      t += '\'';
    }
    return t;
  }

  Word parse_word(Alphabet const& alphabet, std::string_view text) {
    Word               w;
    std::istringstream in{std::string(text)};
    std::string        tok;
    while (in >> tok) {
      w.push_back(alphabet.letter(tok));
    }
    return w;
  }

  std::string to_string(Alphabet const& alphabet, Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.token(w[i]);
    }
    return out;
  }

  void validate_word(Alphabet const& alphabet, Word const& w) {
    for (auto x : w) {
      if (!alphabet.contains(x)) {
        throw InputError("letter index " + std::to_string(x)
                         + " outside alphabet of size "
                         + std::to_string(alphabet.size()));
      }
    }
  }

  std::size_t length_in(Alphabet const&              alphabet,
                        Word const&                  w,
                        std::span<letter_type const> subset) {
    validate_word(alphabet, w);
    std::vector<bool> in_subset(alphabet.size(), false);
    for (auto y : subset) {
      if (!alphabet.contains(y)) {
        throw InputError("subset letter outside the alphabet");
      }
      in_subset[y] = true;
    }
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [&](letter_type x) {
          return in_subset[x];
        }));
  }

  bool occurs_at(Word const& w, Word const& factor, std::size_t pos) noexcept {
    return pos + factor.size() <= w.size()
           && std::equal(factor.begin(), factor.end(), w.begin() + pos);
  }

  std::vector<std::size_t> find_occurrences(Word const& w, Word const& factor) {
    if (factor.empty()) {
      throw InputError("find_occurrences: empty factor");
    }
    std::vector<std::size_t> result;
    if (factor.size() > w.size()) {
      return result;
    }
    for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
      if (occurs_at(w, factor, i)) {
        result.push_back(i);
      }
    }
    return result;
  }

  Word splice(Word const& w,
              std::size_t pos,
              std::size_t old_len,
              Word const& replacement) {
    if (pos > w.size() || old_len > w.size() - pos) {
      throw InputError("splice window [" + std::to_string(pos) + ", "
                       + std::to_string(pos + old_len)
                       + ") outside word of length "
                       + std::to_string(w.size()));
    }
    Word result;
    result.reserve(w.size() - old_len + replacement.size());
    result.insert(result.end(), w.begin(), w.begin() + pos);
    result.insert(result.end(), replacement.begin(), replacement.end());
    result.insert(result.end(), w.begin() + pos + old_len, w.end());
    return result;
  }

  Word concat(Word const& u, Word const& v) {
    Word result(u);
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  bool shortlex_less(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over the letter indices.
    std::size_t h = 14695981039346656037ULL;
    for (auto x : w) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::size_t ball_size(std::size_t alphabet_size,
                        std::size_t max_len) noexcept {
    constexpr auto cap   = std::numeric_limits<std::size_t>::max();
    std::size_t    total = 0;
    std::size_t    level = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
      if (alphabet_size != 0 && level > cap / alphabet_size) {
        return cap;
      }
      level *= alphabet_size;
      if (total > cap - level) {
        return cap;
      }
      total += level;
    }
    return total;
  }

}  // namespace fcrs
