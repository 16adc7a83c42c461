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

// String rewriting systems over a finite alphabet: single-step reduction,
// normal forms, irreducible enumeration and stretch.
//
// Reduction strategy: leftmost position first, then lowest rule index among
// rules matching at that position. For a complete system the normal form does
// not depend on the strategy; the strategy only fixes the recorded trace.

#ifndef FCRS_REWRITING_HPP_
#define FCRS_REWRITING_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fcrs/error.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

  struct Rule {
    Word lhs;
    Word rhs;

    bool operator==(Rule const&) const = default;
  };

  //! An occurrence of a rule's left-hand side.
  struct Redex {
    std::size_t rule;
    std::size_t pos;

    bool operator==(Redex const&) const = default;
  };

  class RewritingSystem {
   public:
    RewritingSystem() = default;

    //! Validates every rule: both sides non-empty and over `alphabet`,
    //! lhs != rhs, no rule listed twice. Throws InputError otherwise.
    RewritingSystem(Alphabet alphabet, std::vector<Rule> rules);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] std::vector<Rule> const& rules() const noexcept {
      return rules_;
    }
    [[nodiscard]] Rule const& rule(std::size_t i) const {
      return rules_.at(i);
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return rules_.size();
    }
    [[nodiscard]] std::size_t max_lhs_length() const noexcept {
      return max_lhs_;
    }

    //! The redex chosen by the strategy, if any.
    [[nodiscard]] std::optional<Redex> first_redex(Word const& w) const;

    //! Every redex of `w`, sorted by position then rule index.
    [[nodiscard]] std::vector<Redex> redexes(Word const& w) const;

    //! True if some rule lhs is a suffix of `w`.
    [[nodiscard]] bool has_suffix_redex(Word const& w) const;

    //! `w` rewritten at `r`. The redex must be valid for `w`.
    [[nodiscard]] Word apply(Word const& w, Redex r) const;

    bool operator==(RewritingSystem const& that) const {
      return alphabet_ == that.alphabet_ && rules_ == that.rules_;
    }

   private:
    Alphabet                              alphabet_;
    std::vector<Rule>                     rules_;
    std::vector<std::vector<std::size_t>> by_first_;
    std::vector<std::vector<std::size_t>> by_last_;
    std::size_t                           max_lhs_ = 0;
  };

  struct ReductionStep {
    Word        word;  // the word before the step
    std::size_t rule;
    std::size_t pos;
  };

  struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Word                       final;
  };

  //! Thrown by `normalize` when the step budget runs out; carries the steps
  //! taken so far.
  class NormalizeBudgetExhausted : public BudgetExhausted {
   public:
    NormalizeBudgetExhausted(std::string const& what, ReductionTrace partial)
        : BudgetExhausted(what), partial_(std::move(partial)) {}

    [[nodiscard]] ReductionTrace const& partial() const noexcept {
      return partial_;
    }

   private:
    ReductionTrace partial_;
  };

  inline constexpr std::size_t default_step_budget    = 100'000;
  inline constexpr std::size_t default_explore_budget = 100'000;

  struct StepResult {
    Word  word;
    Redex redex;
  };

  [[nodiscard]] std::optional<StepResult> single_step(RewritingSystem const& sys,
                                                      Word const&            w);

  //! Throws InputError on a zero budget or a foreign letter, and
  //! NormalizeBudgetExhausted (a BudgetExhausted) when `step_budget` steps
  //! do not reach an irreducible word.
  [[nodiscard]] ReductionTrace normalize(RewritingSystem const& sys,
                                         Word const&            w,
                                         std::size_t step_budget
                                         = default_step_budget);

  //! Shorthand for `normalize(sys, w, budget).final`.
  [[nodiscard]] Word normal_form(RewritingSystem const& sys,
                                 Word const&            w,
                                 std::size_t budget = default_step_budget);

  [[nodiscard]] bool is_irreducible(RewritingSystem const& sys, Word const& w);

  //! Irreducible words of length 1..max_len in shortlex order, grown as a
  //! prefix tree that discards any prefix containing a redex.
  [[nodiscard]] std::vector<Word>
  enumerate_irreducibles(RewritingSystem const& sys, std::size_t max_len);

  //! All irreducible words, by growing the prefix tree until a level is empty.
  //! Throws BudgetExhausted if more than `cap` words are found (the set of
  //! irreducibles is then probably infinite).
  [[nodiscard]] std::vector<Word> all_irreducibles(RewritingSystem const& sys,
                                                   std::size_t cap = 100'000);

  //! Maximum length over all descendants of a word (the word included),
  //! following every redex rather than the strategy path. Memoized across
  //! calls. A reduction cycle, or more than `budget` distinct words explored
  //! by one query, throws BudgetExhausted.
  class StretchOracle {
   public:
    explicit StretchOracle(RewritingSystem const& sys,
                           std::size_t            budget = default_explore_budget)
        : sys_(&sys), budget_(budget) {}

    std::size_t operator()(Word const& w);

   private:
    RewritingSystem const*                            sys_;
    std::size_t                                       budget_;
    std::unordered_map<Word, std::size_t, WordHash>   memo_;
  };

  [[nodiscard]] std::size_t stretch(RewritingSystem const& sys,
                                    Word const&            w,
                                    std::size_t budget = default_explore_budget);

  //! Compares normal forms. Decides the word problem only when `sys` is
  //! complete; otherwise the answer is advisory.
  [[nodiscard]] bool bounded_equivalence_check(RewritingSystem const& sys,
                                               Word const&            u,
                                               Word const&            v,
                                               std::size_t            budget
                                               = default_step_budget);

  //! Every word reachable from `w` (including `w`). Throws BudgetExhausted
  //! past `budget` words.
  [[nodiscard]] std::vector<Word> descendants(RewritingSystem const& sys,
                                              Word const&            w,
                                              std::size_t            budget
                                              = default_explore_budget);

  //! The sub-system of rules whose two sides only use letters with
  //! `keep[x] == true`; the alphabet is unchanged.
  [[nodiscard]] RewritingSystem restrict_rules(RewritingSystem const& sys,
                                               std::vector<bool> const& keep);

}  // namespace fcrs

#endif  // FCRS_REWRITING_HPP_
