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

// Critical pairs of a string rewriting system and the local confluence check.
// Together with a termination certificate, joinability of every critical pair
// gives completeness (Newman's lemma).

#ifndef FCRS_CONFLUENCE_HPP_
#define FCRS_CONFLUENCE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fcrs/orders.hpp"
#include "fcrs/rewriting.hpp"

namespace fcrs {

  enum class PairKind { overlap, containment };

  struct CriticalPair {
    Word     source;
    Word     left;   // reduct by `left_redex`
    Word     right;  // reduct by `right_redex`
    Redex    left_redex;
    Redex    right_redex;
    PairKind kind;
  };

  //! All critical pairs: proper suffix/prefix overlaps of every ordered pair
  //! of rules (a rule with itself included, offset zero excluded) and every
  //! occurrence of one lhs inside another. Sorted by source (shortlex), then
  //! rule indices; no two pairs share a source and an unordered redex pair.
  [[nodiscard]] std::vector<CriticalPair> critical_pairs(RewritingSystem const& sys);

  enum class PairStatus { resolved, unresolved, undecided };

  [[nodiscard]] std::string_view to_string(PairStatus s) noexcept;

  struct ResolvedPair {
    CriticalPair pair;
    PairStatus   status;
    Word         left_final;   // empty when undecided
    Word         right_final;  // empty when undecided
  };

  struct ConfluenceReport {
    std::vector<ResolvedPair> pairs;

    [[nodiscard]] std::size_t unresolved() const noexcept;
    [[nodiscard]] std::size_t undecided() const noexcept;
    [[nodiscard]] bool        incomplete() const noexcept {
      return undecided() != 0;
    }
    [[nodiscard]] bool locally_confluent() const noexcept {
      return unresolved() == 0 && undecided() == 0;
    }
  };

  //! Normalizes both sides of each critical pair. A pair whose normalization
  //! exhausts `budget` steps is marked undecided.
  [[nodiscard]] ConfluenceReport
  check_local_confluence(RewritingSystem const& sys,
                         std::size_t            budget = default_step_budget);

  enum class Completeness { complete_certified_at_scale, not_locally_confluent, undecided };

  [[nodiscard]] std::string_view to_string(Completeness c) noexcept;

  //! Complete (at the checked scale) iff every critical pair resolves and the
  //! termination evidence has no violations and was not truncated. Any
  //! unresolved pair gives not-locally-confluent; everything else undecided.
  [[nodiscard]] Completeness completeness_verdict(BallReport const&       termination,
                                                  ConfluenceReport const& report);

  [[nodiscard]] std::string format_text(Alphabet const&         alphabet,
                                        ConfluenceReport const& report);

  //! One JSON object per pair: source, both reducts, both finals, status.
  [[nodiscard]] std::string format_json_lines(Alphabet const&         alphabet,
                                              ConfluenceReport const& report);

}  // namespace fcrs

#endif  // FCRS_CONFLUENCE_HPP_
