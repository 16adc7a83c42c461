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

// Finite semigroups given by Cayley tables, Green's relations, principal
// factors, Rees coordinates of completely (0-)simple semigroups, and the
// multiplication-table rewriting system.

#ifndef FCRS_SEMIGROUP_HPP_
#define FCRS_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcrs/rewriting.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

  class FiniteSemigroup {
   public:
    using element_type = std::size_t;

    FiniteSemigroup() = default;

    //! `table[i][j]` is the index of the product i * j (left factor first).
    //! Validates shape, index range, unique non-empty names and associativity
    //! (exhaustively). A failed associativity check throws InputError naming
    //! a triple (x, y, z) with (xy)z != x(yz).
    FiniteSemigroup(std::vector<std::string>                    names,
                    std::vector<std::vector<element_type>> const& table);

    [[nodiscard]] std::size_t size() const noexcept {
      return names_.size();
    }

    [[nodiscard]] element_type product(element_type x, element_type y) const {
      return table_[x * names_.size() + y];
    }

    [[nodiscard]] std::string const& name(element_type x) const {
      return names_.at(x);
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    [[nodiscard]] std::optional<element_type> find(std::string_view name) const;
    //! Throws InputError for unknown names.
    [[nodiscard]] element_type index(std::string_view name) const;

    [[nodiscard]] std::vector<std::vector<element_type>> rows() const;

    [[nodiscard]] bool is_idempotent(element_type x) const {
      return product(x, x) == x;
    }

    [[nodiscard]] std::optional<element_type> zero() const;
    [[nodiscard]] std::optional<element_type> identity() const;
    [[nodiscard]] bool                         is_group() const;

   private:
    std::vector<std::string>  names_;
    std::vector<element_type> table_;
  };

  //! Reads {"elements": [...], "table": [[...], ...]}.
  [[nodiscard]] FiniteSemigroup load_and_validate(std::string_view json_text);
  [[nodiscard]] std::string     to_json(FiniteSemigroup const& s);

  //! The subsemigroup on `elements` (kept in the given order, names kept).
  //! Throws InputError if the set is not closed under multiplication.
  [[nodiscard]] FiniteSemigroup subsemigroup(FiniteSemigroup const&          s,
                                             std::vector<std::size_t> const& elements);

  struct QuotientSemigroup {
    FiniteSemigroup          semigroup;
    std::vector<std::size_t> embedding;  // quotient index -> S index, except the zero
    std::size_t              zero;       // quotient index of the collapsed ideal
  };

  //! S/T: the ideal `ideal` collapsed to a single zero named `zero_name`
  //! (made unique against existing names). Elements of S \ T keep their
  //! names and relative order; the zero comes last. Throws InputError if
  //! `ideal` is empty or not an ideal.
  [[nodiscard]] QuotientSemigroup rees_quotient(FiniteSemigroup const&          s,
                                                std::vector<std::size_t> const& ideal,
                                                std::string const&              zero_name = "0");

  //! A name not used by `s`: `base`, `base'`, `base''`, ...
  [[nodiscard]] std::string fresh_name(FiniteSemigroup const& s, std::string const& base);

  //! Class ids of Green's relations. Classes are numbered in order of their
  //! least element.
  struct GreenClasses {
    std::vector<std::size_t> r, l, h, d, j;  // class id per element
    std::size_t              r_count = 0, l_count = 0, h_count = 0, j_count = 0;
    //! j_leq[a][b] == true iff J-class a lies below J-class b.
    std::vector<std::vector<bool>> j_leq;

    [[nodiscard]] std::vector<std::size_t> j_class_elements(std::size_t id) const;
    //! J-classes not strictly below any other, ascending.
    [[nodiscard]] std::vector<std::size_t> maximal_j_classes() const;
  };

  //! Computed from the strongly connected components of the right, left and
  //! two-sided Cayley graphs.
  [[nodiscard]] GreenClasses green_classes(FiniteSemigroup const& s);

  [[nodiscard]] bool is_regular(FiniteSemigroup const& s);

  struct Subgroup {
    FiniteSemigroup          group;
    std::vector<std::size_t> embedding;  // group index -> S index (ascending)
  };

  //! The H-class of the idempotent `e`. Throws InputError if `e` is not
  //! idempotent.
  [[nodiscard]] Subgroup maximal_subgroup(FiniteSemigroup const& s, std::size_t e);

  struct PrincipalFactor {
    std::vector<std::size_t> j_class;    // S indices, ascending
    FiniteSemigroup          semigroup;  // J then the adjoined zero (last)
    std::size_t              zero;       // index of the adjoined zero
  };

  //! J^0: the J-class with every product leaving it sent to a new zero
  //! named `zero_name` (made unique against the names in J).
  [[nodiscard]] PrincipalFactor principal_factor(FiniteSemigroup const&          s,
                                                 std::vector<std::size_t> const& j_class,
                                                 std::string const&              zero_name = "0");

  //! Rees coordinates (i, g, lambda) of a completely simple or completely
  //! 0-simple semigroup. Indices are 0-based here; index 0 is the R-class
  //! (resp. L-class) of the least idempotent, so the sandwich entry p_00 is
  //! the identity of the group.
  struct ReesCoordinatization {
    FiniteSemigroup          group;           // the H-class H_00
    std::vector<std::size_t> group_embedding; // group index -> semigroup index
    std::size_t              i_size      = 0;
    std::size_t              lambda_size = 0;
    //! Lambda x I row-major: matrix[lambda * i_size + i], nullopt for zero.
    std::vector<std::optional<std::size_t>> matrix;
    struct Coordinates {
      std::size_t i, g, lambda;
    };
    //! Per semigroup element; nullopt for the zero.
    std::vector<std::optional<Coordinates>> coords;
    std::optional<std::size_t>               zero;
    std::vector<std::size_t>                 r_reps;  // r_i in R_i and L_0
    std::vector<std::size_t>                 q_reps;  // q_lambda in L_lambda and R_0

    [[nodiscard]] std::optional<std::size_t> entry(std::size_t lambda, std::size_t i) const {
      return matrix[lambda * i_size + i];
    }
  };

  enum class SimplicityKind { automatic, completely_simple, completely_zero_simple };

  //! Throws NotCompletelyZeroSimple if the Rees multiplication rule does not
  //! reproduce the whole table. With `automatic`, a semigroup with more than
  //! one element and a zero is treated as completely 0-simple.
  [[nodiscard]] ReesCoordinatization coordinatize(FiniteSemigroup const& s,
                                                  SimplicityKind kind = SimplicityKind::automatic);

  //! A complete rewriting system for a finite semigroup: one letter per
  //! element (token = element name) and a rule xy -> z for each pair with
  //! z the table product. Irreducibles are exactly the letters.
  struct CayleyFcrs {
    RewritingSystem   system;
    std::vector<Word> witness;  // element -> its letter
  };

  //! Throws InputError if an element name is not a valid letter token.
  [[nodiscard]] CayleyFcrs cayley_fcrs(FiniteSemigroup const& s);

}  // namespace fcrs

#endif  // FCRS_SEMIGROUP_HPP_
