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

// Well-founded orders used as termination certificates, and a bounded check
// that every single-step reduction on a ball of words strictly decreases one.
//
// A comparator is asked about a pair (w, w') where w' is the word before a
// reduction and w the word after; the verdict `decreases` means w < w'.

#ifndef FCRS_ORDERS_HPP_
#define FCRS_ORDERS_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcrs/rewriting.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

  ////////////////////////////////////////////////////////////////////////
  // Multisets of naturals
  ////////////////////////////////////////////////////////////////////////

  class NatMultiset {
   public:
    NatMultiset() = default;
    NatMultiset(std::initializer_list<std::size_t> entries);
    explicit NatMultiset(std::vector<std::size_t> entries);

    //! Parses "[3,1,1]" (any order, whitespace allowed). "[]" is empty.
    static NatMultiset parse(std::string_view text);

    void insert(std::size_t x);

    [[nodiscard]] std::size_t size() const noexcept {
      return entries_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return entries_.empty();
    }

    //! Entries in non-increasing order.
    [[nodiscard]] std::vector<std::size_t> const& entries() const noexcept {
      return entries_;
    }

    [[nodiscard]] std::size_t count(std::size_t x) const;

    //! "[3,1,1]", entries in non-increasing order.
    [[nodiscard]] std::string to_string() const;

    bool operator==(NatMultiset const&) const = default;

   private:
    std::vector<std::size_t> entries_;  // sorted, non-increasing
  };

  //! M >_mult N: after cancelling common entries, the rest of M is non-empty
  //! and every remaining entry of N lies below some remaining entry of M.
  [[nodiscard]] bool multiset_greater(NatMultiset const& m, NatMultiset const& n);

  ////////////////////////////////////////////////////////////////////////
  // Verdicts
  ////////////////////////////////////////////////////////////////////////

  enum class Relation { decreases, equal, increases, incomparable };

  [[nodiscard]] std::string_view to_string(Relation r) noexcept;

  struct OrderVerdict {
    Relation    relation;
    std::string witness;  // the deciding clause, human readable
  };

  ////////////////////////////////////////////////////////////////////////
  // Segment decompositions
  ////////////////////////////////////////////////////////////////////////

  //! A word split into segments over a "small" alphabet and separators.
  //!
  //! Indices run right to left: the word is
  //!   segments[n] separators[n-1] ... segments[1] separators[0] segments[0]
  //! so segments has exactly one more entry than separators. Segments may be
  //! empty; separators never are.
  struct SegmentDecomposition {
    std::vector<Word> segments;
    std::vector<Word> separators;

    bool operator==(SegmentDecomposition const&) const = default;
  };

  //! Separators are maximal blocks of non-small letters; inner segments are
  //! then non-empty.
  [[nodiscard]] SegmentDecomposition
  decompose_blocks(Word const& w, std::vector<bool> const& small);

  //! Every non-small letter is its own separator.
  [[nodiscard]] SegmentDecomposition
  decompose_letters(Word const& w, std::vector<bool> const& small);

  [[nodiscard]] Word reassemble(SegmentDecomposition const& d);

  ////////////////////////////////////////////////////////////////////////
  // Comparators
  ////////////////////////////////////////////////////////////////////////

  class Comparator {
   public:
    virtual ~Comparator() = default;

    //! Verdict on whether `w` < `w_prime`.
    [[nodiscard]] virtual OrderVerdict compare(Word const& w,
                                               Word const& w_prime)
        = 0;

    [[nodiscard]] virtual std::string name() const = 0;
  };

  //! Word length; words of equal length are incomparable.
  class LengthOrder final : public Comparator {
   public:
    OrderVerdict compare(Word const& w, Word const& w_prime) override;
    std::string  name() const override {
      return "length";
    }
  };

  //! Order behind the zero-adjoining construction. Each word maps to its
  //! image with the zero letter replaced by the zero word z; w < w' when the
  //! image of w' reduces to that of w in one or more steps of the original
  //! system, or the images coincide and w has fewer non-zero letters.
  class AdjoinZeroOrder final : public Comparator {
   public:
    //! `sys` is the extended system; `zero` its zero letter; `z` the word
    //! over the original letters representing zero.
    AdjoinZeroOrder(RewritingSystem const& sys,
                    letter_type            zero,
                    Word                   z,
                    std::size_t            budget = default_explore_budget);

    OrderVerdict compare(Word const& w, Word const& w_prime) override;
    std::string  name() const override {
      return "adjoin-zero";
    }

    [[nodiscard]] Word replace_zero(Word const& w) const;

   private:
    RewritingSystem original_;
    letter_type     zero_;
    Word            z_;
    std::size_t     budget_;
  };

  //! Order for ideal-extension systems over A and B \ B0. Words are cut into
  //! maximal B-blocks v_1..v_n and A-segments u_0..u_n. w < w' when, in
  //! priority order:
  //!  (i)   the multiset of Q-stretches of the blocks of w' is >_mult that of w;
  //!  (ii)  the multisets agree and the first differing block of w is a
  //!        one-step (Q \ Q0)-reduct of the block of w';
  //!  (iii) the blocks agree and the first differing A-segment of w is a
  //!        one-step R-reduct of the segment of w'.
  class IdealExtensionOrder final : public Comparator {
   public:
    //! `v` is the extension system; `small[x]` marks the A letters of `v`;
    //! `q` is the complete system for the quotient, whose alphabet contains
    //! every non-A token of `v`.
    IdealExtensionOrder(RewritingSystem const& v,
                        std::vector<bool>      small,
                        RewritingSystem        q,
                        std::size_t            budget = default_explore_budget);

    IdealExtensionOrder(IdealExtensionOrder const&)            = delete;
    IdealExtensionOrder& operator=(IdealExtensionOrder const&) = delete;

    OrderVerdict compare(Word const& w, Word const& w_prime) override;
    std::string  name() const override {
      return "ideal-extension";
    }

    [[nodiscard]] NatMultiset block_stretches(SegmentDecomposition const& d);

   private:
    std::vector<bool>           small_;
    RewritingSystem             r_;          // rules of v over A
    RewritingSystem             q_nonzero_;  // rules of v over B \ B0
    RewritingSystem             q_;
    std::vector<letter_type>    to_q_;
    std::unique_ptr<StretchOracle> q_stretch_;
  };

  //! Order for Rees matrix systems over A, B, C and an optional zero letter.
  //! Words are cut as x_n u_n ... x_1 u_1 x_0 with u_i single non-A letters.
  //! w < w' when, in priority order:
  //!  (i)   w' has more B and C letters;
  //!  (ii)  same, and w' has more zero letters;
  //!  (iii) same, and the multiset of R-stretches of x'_0..x'_n is >_mult that
  //!        of x_0..x_n;
  //!  (iv)  same multisets, and the first differing segment of w is a one-step
  //!        R-reduct of the segment of w'.
  class ReesOrder final : public Comparator {
   public:
    ReesOrder(RewritingSystem const&     sys,
              std::vector<bool>          small,
              std::optional<letter_type> zero,
              std::size_t                budget = default_explore_budget);

    ReesOrder(ReesOrder const&)            = delete;
    ReesOrder& operator=(ReesOrder const&) = delete;

    OrderVerdict compare(Word const& w, Word const& w_prime) override;
    std::string  name() const override {
      return "rees";
    }

    [[nodiscard]] NatMultiset segment_stretches(SegmentDecomposition const& d);

   private:
    std::vector<bool>              small_;
    std::optional<letter_type>     zero_;
    RewritingSystem                r_;
    std::unique_ptr<StretchOracle> r_stretch_;
  };

  //! True if `to` is obtained from `from` by one rule application.
  [[nodiscard]] bool is_one_step_reduct(RewritingSystem const& sys,
                                        Word const&            from,
                                        Word const&            to);

  ////////////////////////////////////////////////////////////////////////
  // Bounded verification
  ////////////////////////////////////////////////////////////////////////

  struct OrderViolation {
    Word        before;  // w'
    Word        after;   // w
    std::size_t rule;
    std::size_t pos;
    Relation    verdict;
    std::string witness;
  };

  struct BallReport {
    std::size_t                 max_len = 0;
    std::size_t                 words   = 0;  // words enumerated
    std::size_t                 checked = 0;  // reductions compared
    std::vector<OrderViolation> violations;
    bool                        truncated = false;

    [[nodiscard]] bool holds() const noexcept {
      return violations.empty() && !truncated;
    }
  };

  inline constexpr std::size_t default_ball_word_budget = 1'000'000;

  //! Compares every single-step reduction w' -> w (all redexes) for every
  //! word w' of length 1..max_len. Violations come out sorted by w'
  //! (shortlex), then position, then rule. Enumeration stops, and the report
  //! is flagged truncated, after `word_budget` words.
  [[nodiscard]] BallReport
  verify_decrease_on_ball(RewritingSystem const& sys,
                          Comparator&            order,
                          std::size_t            max_len,
                          std::size_t word_budget = default_ball_word_budget);

  //! Lines "VIOLATION <w'> -> <w> rule=<k> pos=<i> verdict=<v>" then
  //! "checked=<n> violations=<m>" (and "truncated" when applicable).
  [[nodiscard]] std::string format_text(Alphabet const&   alphabet,
                                        BallReport const& report);

  //! One JSON object per line mirroring `format_text`.
  [[nodiscard]] std::string format_json_lines(Alphabet const&   alphabet,
                                              BallReport const& report);

}  // namespace fcrs

#endif  // FCRS_ORDERS_HPP_
