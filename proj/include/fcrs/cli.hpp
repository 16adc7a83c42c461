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

#ifndef FCRS_CLI_HPP_
#define FCRS_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace fcrs::cli {

  //! Exit codes.
  inline constexpr int ok          = 0;
  inline constexpr int fails       = 1;  // property fails or undecided
  inline constexpr int input_error = 2;

  //! Hard caps on user-supplied bounds.
  inline constexpr std::size_t max_ball_length = 8;
  inline constexpr std::size_t max_budget      = 1'000'000;

  //! Runs the command line `args` (without the program name).
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace fcrs::cli

#endif  // FCRS_CLI_HPP_
