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

// Brute-force oracles shared by the unit tests and the acceptance binary.
// None of them calls the library code it is used to check.

#ifndef FCRS_TESTS_SUPPORT_HPP_
#define FCRS_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fcrs/constructions.hpp"
#include "fcrs/rewriting.hpp"
#include "fcrs/semigroup.hpp"

namespace fcrs::test {

  //! Builds a system from text like {"a a a -> a", "b -> a"}.
  RewritingSystem make_system(std::vector<std::string> const& letters,
                              std::vector<std::string> const& rules);

  Word w(RewritingSystem const& sys, std::string const& text);

  //! Every associative table on {0..n-1} (labelled, so isomorphic copies
  //! repeat), elements named x0, x1, ...
  std::vector<FiniteSemigroup> all_semigroups(std::size_t n);

  //! S with an identity element "1" adjoined (name made fresh).
  FiniteSemigroup with_identity(FiniteSemigroup const& s);

  //! The catalogue semigroups of order <= max_order plus all semigroups of
  //! order <= 3.
  std::vector<FiniteSemigroup> small_corpus(std::size_t max_order);

  //! Green's relations from principal ideal sets: class id per element
  //! (numbered by least element) for R, L, J, and the J-order on elements.
  struct IdealOracle {
    std::vector<std::size_t>       r, l, j, h;
    std::vector<std::vector<bool>> j_leq;  // per element pair: J_x <= J_y
  };
  IdealOracle green_by_ideals(FiniteSemigroup const& s);

  //! M0[G; I, Lambda; P] tabulated from the multiplication rule. Elements are
  //! named rees_element_name(i, g, lambda) in (i, g, lambda) order, then
  //! "0" when `with_zero`. `p` is Lambda x I row-major, group indices.
  FiniteSemigroup rees_table(FiniteSemigroup const&                         g,
                             std::size_t                                    i_size,
                             std::size_t                                    lambda_size,
                             std::vector<std::optional<std::size_t>> const& p,
                             bool                                           with_zero);

  //! A Rees datum over cayley_fcrs(g) whose group elements are named as in
  //! rees_table.
  ReesDatum rees_datum(FiniteSemigroup const&                         g,
                       std::size_t                                    i_size,
                       std::size_t                                    lambda_size,
                       std::vector<std::optional<std::size_t>> const& p);

  //! Words of length <= max_len containing no lhs, by generate and filter.
  std::set<Word> naive_irreducibles(RewritingSystem const& sys, std::size_t max_len);

  //! All words reachable in zero or more steps, by breadth-first search over
  //! every redex (no budget; caller guarantees termination).
  std::set<Word> reachable(RewritingSystem const& sys, Word const& w);

  //! True iff every word of length <= max_len with two one-step reducts has
  //! them joinable (common descendant). Requires a length non-increasing
  //! terminating system.
  bool all_forks_joinable(RewritingSystem const& sys, std::size_t max_len);

  //! M >_mult N decided by searching chains of single replacements (an
  //! element replaced by any number of smaller ones) over multisets with at
  //! most `size_cap` entries below `entry_bound`.
  class ReplacementOracle {
   public:
    ReplacementOracle(std::size_t entry_bound, std::size_t size_cap);
    bool greater(std::vector<std::size_t> m, std::vector<std::size_t> n) const;

   private:
    std::size_t entry_bound_, size_cap_;
  };

  //! All multisets (sorted non-increasing) with entries < entry_bound and at
  //! most max_size entries.
  std::vector<std::vector<std::size_t>> all_multisets(std::size_t entry_bound, std::size_t max_size);

  //! cayley_fcrs(s) as a construction output with the witness named by the
  //! elements of `s`.
  ConstructionOutput cayley_output(FiniteSemigroup const& s);

  //! Element of `s` named by the product of the elements named by the tokens.
  std::size_t evaluate(FiniteSemigroup const& s, Alphabet const& a, Word const& w);

}  // namespace fcrs::test

#endif  // FCRS_TESTS_SUPPORT_HPP_
