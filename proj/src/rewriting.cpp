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

#include "fcrs/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace fcrs {

  RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules)
      : alphabet_(std::move(alphabet)),
        rules_(std::move(rules)),
        by_first_(alphabet_.size()),
        by_last_(alphabet_.size()) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      auto const& r = rules_[i];
      if (r.lhs.empty() || r.rhs.empty()) {
        throw InputError("rule " + std::to_string(i) + " has an empty side");
      }
      validate_word(alphabet_, r.lhs);
      validate_word(alphabet_, r.rhs);
      if (r.lhs == r.rhs) {
        throw InputError("rule " + std::to_string(i) + " has lhs == rhs");
      }
      auto key = to_string(alphabet_, r.lhs) + " -> " + to_string(alphabet_, r.rhs);
      if (!seen.insert(key).second) {
        throw InputError("duplicate rule " + key);
      }
      by_first_[r.lhs.front()].push_back(i);
      by_last_[r.lhs.back()].push_back(i);
      max_lhs_ = std::max(max_lhs_, r.lhs.size());
    }
  }

  std::optional<Redex> RewritingSystem::first_redex(Word const& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] >= by_first_.size()) {
        throw InputError("word letter outside the system's alphabet");
      }
      for (auto i : by_first_[w[pos]]) {
        if (occurs_at(w, rules_[i].lhs, pos)) {
          return Redex{i, pos};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Redex> RewritingSystem::redexes(Word const& w) const {
    std::vector<Redex> result;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] >= by_first_.size()) {
        throw InputError("word letter outside the system's alphabet");
      }
      for (auto i : by_first_[w[pos]]) {
        if (occurs_at(w, rules_[i].lhs, pos)) {
          result.push_back(Redex{i, pos});
        }
      }
    }
    return result;
  }

  bool RewritingSystem::has_suffix_redex(Word const& w) const {
    if (w.empty()) {
      return false;
    }
    for (auto i : by_last_.at(w.back())) {
      auto const& lhs = rules_[i].lhs;
      if (lhs.size() <= w.size() && occurs_at(w, lhs, w.size() - lhs.size())) {
        return true;
      }
    }
    return false;
  }

  Word RewritingSystem::apply(Word const& w, Redex r) const {
    auto const& rule = rules_.at(r.rule);
    return splice(w, r.pos, rule.lhs.size(), rule.rhs);
  }

  std::optional<StepResult> single_step(RewritingSystem const& sys,
                                        Word const&            w) {
    auto r = sys.first_redex(w);
    if (!r) {
      return std::nullopt;
    }
    return StepResult{sys.apply(w, *r), *r};
  }

  ReductionTrace normalize(RewritingSystem const& sys,
                           Word const&            w,
                           std::size_t            step_budget) {
    if (step_budget == 0) {
      throw InputError("normalize: step budget must be positive");
    }
    validate_word(sys.alphabet(), w);
    ReductionTrace trace;
    trace.final = w;
    while (auto r = sys.first_redex(trace.final)) {
      if (trace.steps.size() == step_budget) {
        throw NormalizeBudgetExhausted(
            "normalize: step budget of " + std::to_string(step_budget)
                + " exhausted (system may not be noetherian)",
            std::move(trace));
      }
      Word next = sys.apply(trace.final, *r);
      trace.steps.push_back({std::move(trace.final), r->rule, r->pos});
      trace.final = std::move(next);
    }
    return trace;
  }

  Word normal_form(RewritingSystem const& sys, Word const& w, std::size_t budget) {
    return normalize(sys, w, budget).final;
  }

  bool is_irreducible(RewritingSystem const& sys, Word const& w) {
    validate_word(sys.alphabet(), w);
    return !sys.first_redex(w).has_value();
  }

  std::vector<Word> enumerate_irreducibles(RewritingSystem const& sys,
                                           std::size_t            max_len) {
    if (max_len == 0) {
      throw InputError("enumerate_irreducibles: max_len must be positive");
    }
    std::vector<Word> result;
    std::vector<Word> level{Word{}};
    auto const        n = static_cast<letter_type>(sys.alphabet().size());
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
      std::vector<Word> next;
      for (auto const& prefix : level) {
        Word w = prefix;
        w.push_back(0);
        for (letter_type x = 0; x < n; ++x) {
          w.back() = x;
          // `prefix` is irreducible, so only redexes ending at the new letter
          // can appear.
          if (!sys.has_suffix_redex(w)) {
            next.push_back(w);
          }
        }
      }
      result.insert(result.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return result;
  }

  std::vector<Word> all_irreducibles(RewritingSystem const& sys, std::size_t cap) {
    std::vector<Word> result;
    std::vector<Word> level{Word{}};
    auto const        n = static_cast<letter_type>(sys.alphabet().size());
    while (!level.empty()) {
      std::vector<Word> next;
      for (auto const& prefix : level) {
        Word w = prefix;
        w.push_back(0);
        for (letter_type x = 0; x < n; ++x) {
          w.back() = x;
          if (!sys.has_suffix_redex(w)) {
            next.push_back(w);
            if (result.size() + next.size() > cap) {
              throw BudgetExhausted("more than " + std::to_string(cap)
                                    + " irreducible words");
            }
          }
        }
      }
      result.insert(result.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return result;
  }

  std::size_t StretchOracle::operator()(Word const& root) {
    if (auto it = memo_.find(root); it != memo_.end()) {
      return it->second;
    }
    validate_word(sys_->alphabet(), root);

    struct Frame {
      Word              word;
      std::vector<Word> children;
      std::size_t       next = 0;
      std::size_t       best = 0;
    };

    std::unordered_set<Word, WordHash> on_stack;
    std::vector<Frame>                 stack;
    std::size_t                        explored = 0;

    auto push = [&](Word const& w) {
      if (++explored > budget_) {
        throw BudgetExhausted("stretch: exploration budget of "
                              + std::to_string(budget_)
                              + " words exhausted (system may not be noetherian)");
      }
      Frame f;
      f.word = w;
      f.best = w.size();
      for (auto r : sys_->redexes(w)) {
        f.children.push_back(sys_->apply(w, r));
      }
      on_stack.insert(w);
      stack.push_back(std::move(f));
    };

    push(root);
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next < top.children.size()) {
        Word child = top.children[top.next++];
        if (auto it = memo_.find(child); it != memo_.end()) {
          top.best = std::max(top.best, it->second);
        } else if (on_stack.count(child) != 0) {
          throw BudgetExhausted("stretch: reduction cycle through \""
                                + to_string(sys_->alphabet(), child)
                                + "\" (system is not noetherian)");
        } else {
          push(child);
        }
        continue;
      }
      std::size_t best = top.best;
      memo_.emplace(top.word, best);
      on_stack.erase(top.word);
      stack.pop_back();
      if (!stack.empty()) {
        stack.back().best = std::max(stack.back().best, best);
      }
    }
    return memo_.at(root);
  }

  std::size_t stretch(RewritingSystem const& sys, Word const& w, std::size_t budget) {
    StretchOracle oracle(sys, budget);
    return oracle(w);
  }

  bool bounded_equivalence_check(RewritingSystem const& sys,
                                 Word const&            u,
                                 Word const&            v,
                                 std::size_t            budget) {
    return normal_form(sys, u, budget) == normal_form(sys, v, budget);
  }

  std::vector<Word> descendants(RewritingSystem const& sys,
                                Word const&            w,
                                std::size_t            budget) {
    validate_word(sys.alphabet(), w);
    std::unordered_set<Word, WordHash> seen{w};
    std::vector<Word>                  result{w};
    std::deque<Word>                   queue{w};
    while (!queue.empty()) {
      Word u = std::move(queue.front());
      queue.pop_front();
      for (auto r : sys.redexes(u)) {
        Word v = sys.apply(u, r);
        if (seen.insert(v).second) {
          if (result.size() == budget) {
            throw BudgetExhausted("descendants: budget of "
                                  + std::to_string(budget) + " words exhausted");
          }
          result.push_back(v);
          queue.push_back(std::move(v));
        }
      }
    }
    return result;
  }

  RewritingSystem restrict_rules(RewritingSystem const&   sys,
                                 std::vector<bool> const& keep) {
    auto inside = [&](Word const& w) {
      return std::all_of(w.begin(), w.end(), [&](letter_type x) {
        return x < keep.size() && keep[x];
      });
    };
    std::vector<Rule> rules;
    for (auto const& r : sys.rules()) {
      if (inside(r.lhs) && inside(r.rhs)) {
        rules.push_back(r);
      }
    }
    return RewritingSystem(sys.alphabet(), std::move(rules));
  }

}  // namespace fcrs
