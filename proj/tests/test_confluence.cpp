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

#include <random>

#include "fcrs/catalogue.hpp"
#include "fcrs/confluence.hpp"
#include "fcrs/constructions.hpp"
#include "support.hpp"

using namespace fcrs;
using fcrs::test::make_system;
using fcrs::test::w;

TEST_CASE("overlap pairs", "[confluence]") {
  auto s     = make_system({"a", "b"}, {"a b -> a", "b a -> b"});
  auto pairs = critical_pairs(s);
  bool found = false;
  for (auto const& p : pairs) {
    if (p.source == w(s, "a b a")) {
      found = true;
      CHECK(p.kind == PairKind::overlap);
      CHECK(p.left == w(s, "a a"));
      CHECK(p.right == w(s, "a b"));
      CHECK(p.left_redex == Redex{0, 0});
      CHECK(p.right_redex == Redex{1, 1});
    }
  }
  CHECK(found);
}

TEST_CASE("self overlaps at nonzero offsets", "[confluence]") {
  auto           s = make_system({"a"}, {"a a a -> a"});
  std::set<Word> sources;
  for (auto const& p : critical_pairs(s)) {
    sources.insert(p.source);
  }
  CHECK(sources == std::set<Word>{w(s, "a a a a"), w(s, "a a a a a")});
}

TEST_CASE("containment pairs", "[confluence]") {
  auto s     = make_system({"a", "b", "c"}, {"a b -> a", "b -> c"});
  auto pairs = critical_pairs(s);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].kind == PairKind::containment);
  CHECK(pairs[0].source == w(s, "a b"));
  CHECK(pairs[0].left == w(s, "a"));
  CHECK(pairs[0].right == w(s, "a c"));
}

TEST_CASE("critical pairs replay as single steps", "[confluence][property]") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rule> rules;
    std::set<Word>    lhs;
    auto              n = 1 + rng() % 3;
    while (rules.size() < n) {
      Word l(1 + rng() % 3), r(1 + rng() % 2);
      for (auto& c : l) {
        c = rng() % 2;
      }
      for (auto& c : r) {
        c = rng() % 2;
      }
      if (l != r && lhs.insert(l).second) {
        rules.push_back({l, r});
      }
    }
    RewritingSystem s(Alphabet({"a", "b"}), rules);
    auto            pairs = critical_pairs(s);
    for (auto const& p : pairs) {
      auto const& lr = s.rule(p.left_redex.rule);
      auto const& rr = s.rule(p.right_redex.rule);
      REQUIRE(occurs_at(p.source, lr.lhs, p.left_redex.pos));
      REQUIRE(occurs_at(p.source, rr.lhs, p.right_redex.pos));
      CHECK(splice(p.source, p.left_redex.pos, lr.lhs.size(), lr.rhs) == p.left);
      CHECK(splice(p.source, p.right_redex.pos, rr.lhs.size(), rr.rhs) == p.right);
      CHECK_FALSE(p.left_redex == p.right_redex);
    }
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      CHECK_FALSE(shortlex_less(pairs[k].source, pairs[k - 1].source));
    }
  }
}

TEST_CASE("local confluence examples", "[confluence]") {
  auto good = make_system({"a"}, {"a a a -> a"});
  auto rep  = check_local_confluence(good);
  CHECK(rep.locally_confluent());
  CHECK_FALSE(rep.pairs.empty());

  auto bad  = make_system({"a", "b"}, {"a b -> a", "b a -> b"});
  auto rep2 = check_local_confluence(bad);
  CHECK_FALSE(rep2.locally_confluent());
  bool aba = false;
  for (auto const& p : rep2.pairs) {
    if (p.pair.source == w(bad, "a b a")) {
      aba = true;
      CHECK(p.status == PairStatus::unresolved);
      CHECK(p.left_final == w(bad, "a a"));
      CHECK(p.right_final == w(bad, "a"));
    }
  }
  CHECK(aba);

  auto empty = make_system({"a"}, {});
  CHECK(check_local_confluence(empty).pairs.empty());
  CHECK(check_local_confluence(empty).locally_confluent());
}

TEST_CASE("undecided pairs", "[confluence]") {
  auto s   = make_system({"a", "b"}, {"a -> a b", "a b -> b"});
  auto rep = check_local_confluence(s, 5);
  CHECK(rep.undecided() > 0);
  CHECK(rep.incomplete());
}

TEST_CASE("completeness verdicts", "[confluence]") {
  auto g   = catalogue::cyclic_group(2);
  auto out = rees_zero(fcrs::test::rees_datum(g, 2, 2, {0, 0, 0, 0}));
  CHECK(certify(out).verdict == Completeness::complete_certified_at_scale);

  auto        bad = make_system({"a", "b"}, {"a b -> a", "b a -> b"});
  LengthOrder lo;
  auto        ball = verify_decrease_on_ball(bad, lo, 4);
  CHECK(ball.holds());
  CHECK(completeness_verdict(ball, check_local_confluence(bad))
        == Completeness::not_locally_confluent);

  auto swap = make_system({"a", "b"}, {"a b -> b a"});
  auto tiny = verify_decrease_on_ball(swap, lo, 3, 1);
  CHECK(completeness_verdict(tiny, check_local_confluence(swap)) == Completeness::undecided);
}

TEST_CASE("local confluence matches joinability on small systems", "[confluence][oracle]") {
  // A random sample; the acceptance binary runs the whole universe.
  std::vector<Rule> pool;
  for (std::size_t ll = 1; ll <= 3; ++ll) {
    for_each_word(2, ll, [&](Word const& l) {
      if (l.size() != ll) {
        return true;
      }
      for_each_word(2, ll, [&](Word const& r) {
        if (shortlex_less(r, l)) {
          pool.push_back({l, r});
        }
        return true;
      });
      return true;
    });
  }
  REQUIRE(pool.size() == 91);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    std::set<std::size_t> pick;
    auto                  n = 1 + rng() % 3;
    while (pick.size() < n) {
      pick.insert(rng() % pool.size());
    }
    std::vector<Rule> rules;
    for (auto k : pick) {
      rules.push_back(pool[k]);
    }
    RewritingSystem s(Alphabet({"a", "b"}), rules);
    CHECK(check_local_confluence(s).locally_confluent() == fcrs::test::all_forks_joinable(s, 6));
  }
}

TEST_CASE("reports print one record per line", "[confluence]") {
  auto bad  = make_system({"a", "b"}, {"a b -> a", "b a -> b"});
  auto rep  = check_local_confluence(bad);
  auto json = format_json_lines(bad.alphabet(), rep);
  CHECK(static_cast<std::size_t>(std::count(json.begin(), json.end(), '\n')) >= rep.pairs.size());
  CHECK(format_text(bad.alphabet(), rep).find("unresolved") != std::string::npos);
}
