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

// Alphabets of string tokens and words as sequences of letter indices.
//
// A letter is identified by its position in the alphabet; tokens are only
// consulted when reading or printing. Multi-character tokens such as "b2" or
// "c_3" stay atomic.

#ifndef FCRS_WORD_HPP_
#define FCRS_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fcrs {

  using letter_type = std::uint32_t;
  using Word        = std::vector<letter_type>;

  class Alphabet {
   public:
    Alphabet() = default;

    //! Throws InputError on an empty token, a token containing whitespace,
    //! or a duplicate.
    explicit Alphabet(std::vector<std::string> tokens);

    //! Appends a token and returns its letter.
    letter_type add(std::string token);

    [[nodiscard]] std::size_t size() const noexcept {
      return tokens_.size();
    }

    [[nodiscard]] bool contains(std::string_view token) const;
    [[nodiscard]] bool contains(letter_type x) const noexcept {
      return x < tokens_.size();
    }

    [[nodiscard]] std::optional<letter_type> find(std::string_view token) const;

    //! Throws InputError if the token is unknown.
    [[nodiscard]] letter_type letter(std::string_view token) const;

    [[nodiscard]] std::string const& token(letter_type x) const;

    [[nodiscard]] std::vector<std::string> const& tokens() const noexcept {
      return tokens_;
    }

    //! Returns `base` if unused, otherwise `base'`, `base''`, ...
    [[nodiscard]] std::string fresh_token(std::string const& base) const;

    bool operator==(Alphabet const& that) const {
      return tokens_ == that.tokens_;
    }

   private:
    std::vector<std::string>                     tokens_;
    std::unordered_map<std::string, letter_type> index_;
  };

  //! True if `token` is usable as a letter (non-empty, no whitespace).
  [[nodiscard]] bool is_valid_token(std::string_view token) noexcept;

  //! Parses whitespace-separated tokens. Throws InputError on unknown tokens.
  [[nodiscard]] Word parse_word(Alphabet const& alphabet, std::string_view text);

  //! Tokens joined by single spaces; the empty word prints as "".
  [[nodiscard]] std::string to_string(Alphabet const& alphabet, Word const& w);

  //! Throws InputError if some letter of `w` is outside `alphabet`.
  void validate_word(Alphabet const& alphabet, Word const& w);

  //! |w|_Y: the number of positions of `w` holding a letter of `subset`.
  [[nodiscard]] std::size_t length_in(Alphabet const&              alphabet,
                                      Word const&                  w,
                                      std::span<letter_type const> subset);

  //! Start positions of every occurrence of `factor` in `w`, overlapping ones
  //! included, ascending. Throws InputError if `factor` is empty.
  [[nodiscard]] std::vector<std::size_t> find_occurrences(Word const& w,
                                                          Word const& factor);

  //! True if `factor` occurs in `w` starting at `pos`.
  [[nodiscard]] bool occurs_at(Word const& w,
                               Word const& factor,
                               std::size_t pos) noexcept;

  //! `w` with `w[pos, pos + old_len)` replaced by `replacement`.
  [[nodiscard]] Word splice(Word const& w,
                            std::size_t pos,
                            std::size_t old_len,
                            Word const& replacement);

  [[nodiscard]] Word concat(Word const& u, Word const& v);

  //! Length first, then lexicographic by letter index.
  [[nodiscard]] bool shortlex_less(Word const& u, Word const& v) noexcept;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  //! Calls `f(w)` for every word of length 1..max_len in shortlex order.
  //! Stops early and returns false if `f` returns false.
  template <typename F>
  bool for_each_word(std::size_t alphabet_size, std::size_t max_len, F&& f) {
    if (alphabet_size == 0) {
      return true;
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
      Word w(len, 0);
      while (true) {
        if (!f(static_cast<Word const&>(w))) {
          return false;
        }
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == alphabet_size) {
          w[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1];
      }
    }
    return true;
  }

  //! Number of words of length 1..max_len, saturating at SIZE_MAX.
  [[nodiscard]] std::size_t ball_size(std::size_t alphabet_size,
                                      std::size_t max_len) noexcept;

}  // namespace fcrs

#endif  // FCRS_WORD_HPP_
