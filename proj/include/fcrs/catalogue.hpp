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

// Small finite semigroups with fixed element names, used by the CLI and the
// tests.

#ifndef FCRS_CATALOGUE_HPP_
#define FCRS_CATALOGUE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fcrs/semigroup.hpp"

namespace fcrs::catalogue {

  //! Z_n with elements e, a, a2, ..., a<n-1>.
  [[nodiscard]] FiniteSemigroup cyclic_group(std::size_t n);

  //! Z_2 x Z_2 with elements e, a, b, ab.
  [[nodiscard]] FiniteSemigroup klein_four();

  //! Permutations of {1..n} in one-line notation ("123", "132", ...), in
  //! lexicographic order. Composition is left to right: (fg)(x) = g(f(x)).
  [[nodiscard]] FiniteSemigroup symmetric_group(std::size_t n);

  //! All maps {1..n} -> {1..n}, named by their image strings ("11", "12",
  //! ...), composed left to right as above. Constant maps are right zeros.
  [[nodiscard]] FiniteSemigroup full_transformation_monoid(std::size_t n);

  //! The Brandt semigroup B2 = {a, b, ab, ba, 0} with aba = a, bab = b and
  //! aa = bb = 0.
  [[nodiscard]] FiniteSemigroup brandt_b2();

  //! I x Lambda with (i, l)(j, m) = (i, m); elements r<i><l>.
  [[nodiscard]] FiniteSemigroup rectangular_band(std::size_t i_size, std::size_t lambda_size);

  //! s1 < s2 < ... < sn under minimum.
  [[nodiscard]] FiniteSemigroup chain_semilattice(std::size_t n);

  //! {0, a1, ..., a<n-1>} with every product 0 (for n = 2 the second element
  //! is named a).
  [[nodiscard]] FiniteSemigroup null_semigroup(std::size_t n);

  //! xy = y on elements z1..zn.
  [[nodiscard]] FiniteSemigroup right_zero_semigroup(std::size_t n);

  //! Names accepted by `by_name`.
  [[nodiscard]] std::vector<std::string> names();

  //! "trivial", "z2".."z6", "klein4", "s3", "b2", "t2", "t3", "rect2x2",
  //! "chain3", "null2", "rightzero2". Throws InputError otherwise.
  [[nodiscard]] FiniteSemigroup by_name(std::string_view name);

}  // namespace fcrs::catalogue

#endif  // FCRS_CATALOGUE_HPP_
