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


#include <catch2/catch.hpp>

#include <algorithm>
#include <random>

#include "fcrs/error.hpp"
#include "fcrs/rewriting.hpp"
#include "support.hpp"

using namespace fcrs;
using fcrs::test::make_system;
using fcrs::test::w;

TEST_CASE("single step takes the leftmost redex", "[rewriting]") {
  auto s = make_system({"a"}, {"a a a -> a"});
  auto r = single_step(s, w(s, "a a a a"));
  REQUIRE(r);
  CHECK(r->word == w(s, "a a"));
  CHECK(r->redex == Redex{0, 0});
  CHECK_FALSE(single_step(s, w(s, "a a")));

  auto t = make_system({"a", "b"}, {"a b -> a", "b a -> b"});
  auto u = single_step(t, w(t, "a b a"));
  REQUIRE(u);
  CHECK(u->word == w(t, "a a"));
  CHECK(u->redex == Redex{0, 0});
}

TEST_CASE("lowest rule index wins at the same position", "[rewriting]") {
  auto s = make_system({"a", "b"}, {"a b -> b", "a -> b"});
  auto r = single_step(s, w(s, "a b"));
  REQUIRE(r);
  CHECK(r->redex == Redex{0, 0});
  auto t = make_system({"a", "b"}, {"a -> b", "a b -> b"});
  CHECK(single_step(t, w(t, "a b"))->redex == Redex{0, 0});
  CHECK(single_step(t, w(t, "a b"))->word == w(t, "b b"));
}

TEST_CASE("normalize examples", "[rewriting]") {
  auto s = make_system({"a"}, {"a a a -> a"});
  CHECK(normalize(s, w(s, "a a a a a")).final == w(s, "a"));
  auto tr = normalize(s, w(s, "a a"));
  CHECK(tr.final == w(s, "a a"));
  CHECK(tr.steps.empty());
  auto t = make_system({"a", "b"}, {"a b -> a", "b a -> b"});
  CHECK(normalize(t, w(t, "a b"), 10).final == w(t, "a"));
}

TEST_CASE("normalize errors", "[rewriting]") {
  auto s = make_system({"a"}, {"a -> a a"});
  CHECK_THROWS_AS(normalize(s, w(s, "a"), 0), InputError);
  CHECK_THROWS_AS(normalize(s, Word{3}), InputError);
  try {
    (void) normalize(s, w(s, "a"), 5);
    FAIL("budget not exhausted");
  } catch (NormalizeBudgetExhausted const& e) {
    CHECK(e.partial().steps.size() == 5);
  }
}

TEST_CASE("normalize traces replay and end irreducible", "[rewriting][property]") {
  auto         s = make_system({"a", "b"}, {"a a a -> a", "b b -> b", "b a b -> a", "a b a -> b"});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Word x(1 + rng() % 10);
    for (auto& c : x) {
      c = rng() % 2;
    }
    auto tr  = normalize(s, x);
    Word cur = x;
    for (auto const& step : tr.steps) {
      REQUIRE(step.word == cur);
      auto const& rule = s.rule(step.rule);
      REQUIRE(occurs_at(cur, rule.lhs, step.pos));
      cur = splice(cur, step.pos, rule.lhs.size(), rule.rhs);
    }
    CHECK(cur == tr.final);
    CHECK(is_irreducible(s, tr.final));
    CHECK(fcrs::test::reachable(s, x).count(tr.final) == 1);
  }
}

TEST_CASE("irreducibility", "[rewriting]") {
  auto s = make_system({"a"}, {"a a a -> a"});
  CHECK(is_irreducible(s, w(s, "a a")));
  CHECK_FALSE(is_irreducible(s, w(s, "a a a")));
}

TEST_CASE("enumerate irreducibles examples", "[rewriting]") {
  auto s = make_system({"a"}, {"a a a -> a"});
  CHECK(enumerate_irreducibles(s, 4) == std::vector<Word>{w(s, "a"), w(s, "a a")});
  auto none = make_system({"a"}, {});
  CHECK(enumerate_irreducibles(none, 2) == std::vector<Word>{w(none, "a"), w(none, "a a")});
  auto idem = make_system({"a"}, {"a a -> a"});
  CHECK(enumerate_irreducibles(idem, 5) == std::vector<Word>{w(idem, "a")});
  CHECK(all_irreducibles(s).size() == 2);
  CHECK_THROWS_AS(all_irreducibles(none, 50), BudgetExhausted);
}

TEST_CASE("enumerate irreducibles matches generate and filter", "[rewriting][property]") {
  std::vector<std::vector<std::string>> systems{
      {"a a -> a", "b b -> b"},
      {"a b -> b a"},
      {"a b a -> b", "b b b -> a"},
      {"b -> a", "a a a -> a"},
      {},
  };
  for (auto const& rules : systems) {
    auto s      = make_system({"a", "b"}, rules);
    auto got    = enumerate_irreducibles(s, 6);
    auto oracle = fcrs::test::naive_irreducibles(s, 6);
    CHECK(std::set<Word>(got.begin(), got.end()) == oracle);
    CHECK(std::is_sorted(got.begin(), got.end(), shortlex_less));
  }
}

TEST_CASE("stretch examples", "[rewriting]") {
  auto s = make_system({"a"}, {"a a a -> a"});
  CHECK(stretch(s, w(s, "a a a a")) == 4);
  CHECK(stretch(s, w(s, "a")) == 1);
  auto t = make_system({"a", "b"}, {"a b -> b a"});
  CHECK(stretch(t, w(t, "a b")) == 2);
  auto loop = make_system({"a", "b"}, {"a b -> b a", "b a -> a b"});
  CHECK_THROWS_AS(stretch(loop, w(loop, "a b")), BudgetExhausted);
}

TEST_CASE("stretch is the longest descendant", "[rewriting][property]") {
  // Terminating (b moves left) but length-increasing.
  auto         s = make_system({"a", "b"}, {"a b -> b a a"});
  StretchOracle st(s);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Word x(1 + rng() % 5);
    for (auto& c : x) {
      c = rng() % 2;
    }
    auto        all  = fcrs::test::reachable(s, x);
    std::size_t best = 0;
    for (auto const& y : all) {
      best = std::max(best, y.size());
    }
    CHECK(st(x) == best);
    CHECK(descendants(s, x).size() == all.size());
  }
}

TEST_CASE("bounded equivalence", "[rewriting]") {
  auto s = make_system({"a"}, {"a a a -> a"});
  CHECK(bounded_equivalence_check(s, w(s, "a a a a a"), w(s, "a a a")));
  CHECK_FALSE(bounded_equivalence_check(s, w(s, "a"), w(s, "a a")));
  CHECK(bounded_equivalence_check(s, w(s, "a a"), w(s, "a a")));
}

TEST_CASE("system validation", "[rewriting]") {
  Alphabet a({"a"});
  CHECK_THROWS_AS(RewritingSystem(a, {{Word{}, Word{0}}}), InputError);
  CHECK_THROWS_AS(RewritingSystem(a, {{Word{0}, Word{}}}), InputError);
  CHECK_THROWS_AS(RewritingSystem(a, {{Word{0}, Word{1}}}), InputError);
}
