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

// Text formats.
//
// Presentation (.prs), line oriented:
//
//   # comment
//   letters: a b 0
//   rule: a a a -> a
//
// A serialized construction output is a presentation followed by
// `certificate...:` lines and a `witness:` section of `<element> = <word>`
// lines. Rees datum documents (.rees) are JSON with fields `group` (an
// inline Cayley table or a path to a .prs file), `identity_word`, `I`,
// `Lambda` and `matrix` (Lambda rows of I words, null for zero).

#ifndef FCRS_IO_HPP_
#define FCRS_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "fcrs/constructions.hpp"
#include "fcrs/rewriting.hpp"

namespace fcrs {

  //! Throws ParseError with the offending line number.
  [[nodiscard]] RewritingSystem parse_presentation(std::string_view text);
  [[nodiscard]] std::string     format_presentation(RewritingSystem const& sys);

  //! Also accepts a plain presentation (length certificate, empty witness).
  [[nodiscard]] ConstructionOutput parse_output(std::string_view text);
  [[nodiscard]] std::string        format_output(ConstructionOutput const& out);

  //! `base` resolves a relative group path.
  [[nodiscard]] ReesDatum parse_rees_datum(std::string_view             json_text,
                                           std::filesystem::path const& base = {});

  //! Throws InputError if the file cannot be read.
  [[nodiscard]] std::string read_file(std::filesystem::path const& path);

}  // namespace fcrs

#endif  // FCRS_IO_HPP_
