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

// Constructions of finite complete rewriting systems: adjoining a zero,
// ideal extensions, Rees matrix semigroups (with and without zero), and the
// recursive construction for finite regular semigroups.
//
// Every construction returns a ConstructionOutput: the system, a witness map
// from semantic elements to irreducible words, and the termination
// certificate (which comparator proves the system noetherian).

#ifndef FCRS_CONSTRUCTIONS_HPP_
#define FCRS_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcrs/confluence.hpp"
#include "fcrs/orders.hpp"
#include "fcrs/rewriting.hpp"
#include "fcrs/semigroup.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

  struct WitnessEntry {
    std::string element;
    Word        word;

    bool operator==(WitnessEntry const&) const = default;
  };

  using Witness = std::vector<WitnessEntry>;

  //! The word of `element`, or nullptr.
  [[nodiscard]] Word const* find_witness(Witness const& w, std::string const& element);

  enum class CertificateKind { length, adjoin_zero, ideal_extension, rees };

  [[nodiscard]] std::string_view to_string(CertificateKind k) noexcept;
  //! Throws InputError for unknown names.
  [[nodiscard]] CertificateKind certificate_kind(std::string_view name);

  //! Enough data to rebuild the comparator for a system.
  struct Certificate {
    CertificateKind            kind = CertificateKind::length;
    std::vector<std::string>   small_letters;  // A (ideal-extension, rees)
    std::optional<std::string> zero;           // zero letter (adjoin-zero, rees)
    Word                       zero_word;      // z over the system alphabet (adjoin-zero)
    std::optional<RewritingSystem> aux;        // the quotient system (ideal-extension)

    bool operator==(Certificate const&) const = default;
  };

  struct ConstructionOutput {
    RewritingSystem system;
    Witness         witness;
    Certificate     certificate;
    std::string     provenance;  // construction name, digest, notes
  };

  //! Builds the comparator named by `cert` for `sys`. The system must outlive
  //! the comparator.
  [[nodiscard]] std::unique_ptr<Comparator> make_comparator(RewritingSystem const& sys,
                                                            Certificate const&     cert,
                                                            std::size_t budget
                                                            = default_explore_budget);

  ////////////////////////////////////////////////////////////////////////
  // Adjoining a zero
  ////////////////////////////////////////////////////////////////////////

  //! Adds a letter `zero_token` and the rules z -> 0, 0x -> 0, x0 -> 0 (x over
  //! the old letters and 0 itself, 00 -> 0 once) after the rules of `sys`.
  //! The witness entry whose word is z is remapped to the zero letter. An
  //! empty `witness` is filled from the irreducibles of `sys` when they are
  //! finitely many, each element named by its word with tokens joined by '.'.
  //!
  //! Throws InputError if z is empty or reducible, if z is not absorbing
  //! (x z or z x has a normal form other than z for some letter x), or if
  //! `zero_token` is already a letter.
  [[nodiscard]] ConstructionOutput adjoin_zero(RewritingSystem const& sys,
                                               Word const&            z,
                                               Witness                witness    = {},
                                               std::string const&     zero_token = "0");

  ////////////////////////////////////////////////////////////////////////
  // Ideal extensions
  ////////////////////////////////////////////////////////////////////////

  //! Words are over the T alphabet (values) and the U alphabet (keys of rho,
  //! letters of sigma and pi), identified by token.
  struct IdealExtensionGlue {
    std::map<Word, Word>                                   rho;
    std::map<std::pair<std::string, std::string>, Word>   sigma;  // (a, b)
    std::map<std::pair<std::string, std::string>, Word>   pi;     // (b, a)
  };

  //! Zero letter, B0 and Q0 of a system in adjoined-zero form.
  struct ZeroSplit {
    letter_type       zero;
    std::vector<bool> b0;  // per letter: normal form is the zero letter
    std::vector<bool> q0;  // per rule: lhs normalizes to the zero letter
  };

  //! A letter 0 with rules 0x -> 0 and x0 -> 0 for every letter x, or
  //! nullopt. `hint` names a candidate token to test first.
  [[nodiscard]] std::optional<ZeroSplit>
  find_zero_split(RewritingSystem const& u, std::optional<std::string> const& hint = std::nullopt);

  //! Glue maps read off the table of S. The witnesses of `t` and `u` must
  //! name elements of S; `u` has exactly one extra entry, its zero. Throws
  //! InputError if `t_elements` is not an ideal (naming the pair) or if a
  //! witness does not match.
  [[nodiscard]] IdealExtensionGlue derive_glue(FiniteSemigroup const&          s,
                                               std::vector<std::size_t> const& t_elements,
                                               ConstructionOutput const&       t,
                                               ConstructionOutput const&       u);

  //! The extension system over A and B \ B0 with rules R, Q \ Q0, u -> rho(u),
  //! ab -> sigma(a, b) and ba -> pi(b, a). `u` must already be in
  //! adjoined-zero form. Throws InputError for missing glue, a U system
  //! without a zero letter, or colliding tokens.
  [[nodiscard]] ConstructionOutput ideal_extension(ConstructionOutput const&  t,
                                                   ConstructionOutput const&  u,
                                                   IdealExtensionGlue const& glue);

  //! Table-driven entry point: adjoins a zero to `u` first when it lacks
  //! one (using its zero witness as z), then derives the glue from `s`.
  [[nodiscard]] ConstructionOutput ideal_extension(FiniteSemigroup const&          s,
                                                   std::vector<std::size_t> const& t_elements,
                                                   ConstructionOutput const&       t,
                                                   ConstructionOutput const&       u);

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  struct ReesDatum {
    RewritingSystem group_system;
    //! Found as the unique idempotent irreducible when absent.
    std::optional<Word> identity_word;
    std::size_t         i_size      = 1;
    std::size_t         lambda_size = 1;
    //! Lambda x I row-major; nullopt is the zero entry.
    std::vector<std::optional<Word>> matrix;
    //! Named group elements. When empty, the irreducibles of the group system
    //! are used, named by their tokens joined with '.'.
    Witness group_elements;
    //! Optional letter tokens, one per row index of the datum (size I) and
    //! column index (size Lambda); the token of the index placed first is
    //! unused. Default "b<i>" and "c<lambda>". Clashing tokens get primes.
    std::vector<std::string> b_tokens;
    std::vector<std::string> c_tokens;
    std::string              zero_token   = "0";
    std::string              zero_element = "0";
  };

  //! Witness element name of (i, g, lambda), 1-based indices.
  [[nodiscard]] std::string rees_element_name(std::size_t        i,
                                              std::string const& g,
                                              std::size_t        lambda);

  //! The Rees presentation of M0[G; I, Lambda; P]. If p_11 is zero, rows and
  //! columns are swapped to bring the least non-zero entry (row-major) to
  //! position (1, 1); if p_11 is not the identity, row 1 is rescaled by its
  //! inverse. Both are recorded in the provenance, and the witness always
  //! refers to the coordinates of the datum as given.
  //!
  //! Throws InputError for a non-regular matrix, entries that are not
  //! irreducible group words, or an identity word that is not idempotent.
  [[nodiscard]] ConstructionOutput rees_zero(ReesDatum const& datum);

  //! As rees_zero without the zero letter and its rules. Throws InputError
  //! if the matrix has a zero entry.
  [[nodiscard]] ConstructionOutput rees_simple(ReesDatum const& datum);

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  struct VerificationReport {
    ConfluenceReport confluence;
    BallReport       ball;
    Completeness     verdict = Completeness::undecided;
  };

  //! Largest L <= cap with ball_size(alphabet_size, L) <= word_budget
  //! (at least 1).
  [[nodiscard]] std::size_t adaptive_ball_length(std::size_t alphabet_size,
                                                 std::size_t cap         = 6,
                                                 std::size_t word_budget = default_ball_word_budget);

  //! Critical pairs plus the certificate's comparator on the ball of length
  //! `ball_len` (adaptive when nullopt).
  [[nodiscard]] VerificationReport certify(ConstructionOutput const&  out,
                                           std::optional<std::size_t> ball_len    = std::nullopt,
                                           std::size_t                word_budget = default_ball_word_budget,
                                           std::size_t                step_budget = default_step_budget);

  struct TableMismatch {
    std::string x, y;
    Word        expected;  // witness of xy
    Word        actual;    // normal form of witness(x) witness(y)
  };

  struct TableReport {
    std::size_t                checked = 0;
    std::vector<TableMismatch> mismatches;
  };

  //! normalize(witness(x) witness(y)) == witness(xy) for all pairs. Throws
  //! InputError if an element of `s` has no witness.
  [[nodiscard]] TableReport verify_against_table(ConstructionOutput const& out,
                                                 FiniteSemigroup const&    s);

  ////////////////////////////////////////////////////////////////////////
  // Finite regular semigroups
  ////////////////////////////////////////////////////////////////////////

  //! A complete system for a maximal subgroup, witness named by the elements
  //! of the H-class in S.
  struct GroupSystem {
    RewritingSystem system;
    Witness         witness;
  };

  struct PipelineLevel {
    std::string  label;  // elements of the semigroup handled at this level
    std::string  construction;
    std::size_t  letters = 0;
    std::size_t  rules   = 0;
    std::size_t  ball    = 0;
    std::size_t  pairs   = 0;
    Completeness verdict = Completeness::undecided;
  };

  struct PipelineResult {
    ConstructionOutput         output;
    std::vector<PipelineLevel> levels;
  };

  //! Recursion on J-classes: a single J-class goes through rees_simple;
  //! otherwise the maximal J-class with the least element is split off,
  //! S \ J handled recursively, J0 built with rees_zero, and the two joined by
  //! ideal_extension. Maximal subgroups use cayley_fcrs unless `overrides`
  //! has an entry keyed by the name of the idempotent.
  //!
  //! Every level is certified and checked against the table; a failure
  //! throws ConstructionBug. Throws InputError if S is not regular.
  [[nodiscard]] PipelineResult
  regular_pipeline(FiniteSemigroup const&                    s,
                   std::map<std::string, GroupSystem> const& overrides = {});

}  // namespace fcrs

#endif  // FCRS_CONSTRUCTIONS_HPP_
