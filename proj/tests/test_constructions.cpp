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

#include "fcrs/catalogue.hpp"
#include "fcrs/constructions.hpp"
#include "fcrs/error.hpp"
#include "support.hpp"

using namespace fcrs;
using fcrs::test::make_system;
using fcrs::test::w;

namespace {
  std::set<std::pair<std::string, std::string>> rule_strings(RewritingSystem const& s) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto const& r : s.rules()) {
      out.insert({to_string(s.alphabet(), r.lhs), to_string(s.alphabet(), r.rhs)});
    }
    return out;
  }

  bool has_rule(RewritingSystem const& s, std::string const& lhs, std::string const& rhs) {
    return rule_strings(s).count({lhs, rhs}) != 0;
  }

  void require_complete(ConstructionOutput const& out, FiniteSemigroup const& s) {
    auto rep = certify(out);
    CHECK(rep.verdict == Completeness::complete_certified_at_scale);
    auto table = verify_against_table(out, s);
    CHECK(table.mismatches.empty());
    CHECK(table.checked == s.size() * s.size());
    CHECK(all_irreducibles(out.system).size() == s.size());
  }
}  // namespace

TEST_CASE("adjoining a zero to the null semigroup", "[constructions]") {
  auto sys = make_system({"a"}, {"a a a -> a a"});
  auto out = adjoin_zero(sys, w(sys, "a a"));
  CHECK(rule_strings(out.system)
        == std::set<std::pair<std::string, std::string>>{
            {"a a a", "a a"}, {"a a", "0"}, {"0 a", "0"}, {"a 0", "0"}, {"0 0", "0"}});
  CHECK(out.system.size() == 5);
  auto irr = enumerate_irreducibles(out.system, 2);
  CHECK(irr == std::vector<Word>{Word{0}, Word{1}});
  CHECK(out.certificate.kind == CertificateKind::adjoin_zero);
  CHECK(certify(out).verdict == Completeness::complete_certified_at_scale);
  REQUIRE(out.witness.size() == 2);
  CHECK(out.witness[1].element == "a.a");
  CHECK(out.witness[1].word == w(out.system, "0"));
}

TEST_CASE("adjoin zero preconditions", "[constructions]") {
  auto sys = make_system({"a"}, {"a a a -> a a"});
  CHECK_THROWS_AS(adjoin_zero(sys, w(sys, "a a a")), InputError);
  CHECK_THROWS_AS(adjoin_zero(sys, Word{}), InputError);
  CHECK_THROWS_AS(adjoin_zero(sys, w(sys, "a a"), {}, "a"), InputError);
  auto free = make_system({"a", "b"}, {});
  CHECK_THROWS_AS(adjoin_zero(free, w(free, "a")), InputError);
}

TEST_CASE("adjoin zero rule count and completeness on semigroups with zero", "[constructions][property]") {
  std::size_t seen = 0;
  for (auto const& s : fcrs::test::small_corpus(5)) {
    auto z = s.zero();
    if (!z || s.size() < 2) {
      continue;
    }
    ++seen;
    auto c   = fcrs::test::cayley_output(s);
    auto out = adjoin_zero(c.system, c.witness[*z].word, c.witness, c.system.alphabet().fresh_token("0"));
    auto const x = c.system.alphabet().size();
    CHECK(out.system.size() == c.system.size() + 1 + 2 * (x + 1) - 1);
    require_complete(out, s);
  }
  CHECK(seen > 10);
}

TEST_CASE("zero split of a quotient system", "[constructions]") {
  auto u  = make_system({"e", "0"}, {"e e -> e", "0 e -> 0", "e 0 -> 0", "0 0 -> 0"});
  auto zs = find_zero_split(u);
  REQUIRE(zs);
  CHECK(zs->zero == u.alphabet().letter("0"));
  CHECK(zs->b0 == std::vector<bool>{false, true});
  CHECK(zs->q0 == std::vector<bool>{false, true, true, true});
  CHECK(find_zero_split(make_system({"a"}, {"a a -> a"})));
  CHECK_FALSE(find_zero_split(make_system({"a", "b"}, {"a a -> a"})));
}

TEST_CASE("glue read off a table", "[constructions]") {
  auto s  = fcrs::test::with_identity(catalogue::null_semigroup(2));
  auto ti = std::vector<std::size_t>{s.index("0"), s.index("a")};
  auto q  = rees_quotient(s, ti, fresh_name(s, "0"));
  auto t  = fcrs::test::cayley_output(subsemigroup(s, ti));
  auto u  = fcrs::test::cayley_output(q.semigroup);
  u.certificate.zero = q.semigroup.name(q.zero);
  auto glue = derive_glue(s, ti, t, u);
  // sigma(x, b) is the witness of x * (element of b).
  for (auto const& [key, word] : glue.sigma) {
    auto x  = s.index(key.first);
    auto y  = s.index(key.second);
    auto xy = s.name(s.product(x, y));
    CHECK(word == *find_witness(t.witness, xy));
  }
  CHECK(glue.sigma.size() == 2);
  CHECK(glue.pi.size() == 2);

  auto v = ideal_extension(t, u, glue);
  for (auto const& a : t.system.alphabet().tokens()) {
    CHECK(has_rule(v.system, a + " " + "1", to_string(t.system.alphabet(), glue.sigma.at({a, "1"}))));
  }
  require_complete(v, s);

  auto bad = std::vector<std::size_t>{s.index("1")};
  CHECK_THROWS_AS(derive_glue(s, bad, t, u), InputError);
}

TEST_CASE("glue for the whole semigroup is empty", "[constructions]") {
  auto s  = catalogue::null_semigroup(2);
  auto ti = std::vector<std::size_t>{0, 1};
  auto q  = rees_quotient(s, ti, fresh_name(s, "0"));
  CHECK(q.semigroup.size() == 1);
  auto t = fcrs::test::cayley_output(s);
  auto u = fcrs::test::cayley_output(q.semigroup);
  u.certificate.zero = q.semigroup.name(q.zero);
  auto glue = derive_glue(s, ti, t, u);
  CHECK(glue.sigma.empty());
  CHECK(glue.pi.empty());
  auto v = ideal_extension(t, u, glue);
  CHECK(rule_strings(v.system) == rule_strings(t.system));
}

TEST_CASE("ideal extension needs complete glue", "[constructions]") {
  auto s  = fcrs::test::with_identity(catalogue::null_semigroup(2));
  auto ti = std::vector<std::size_t>{s.index("0"), s.index("a")};
  auto q  = rees_quotient(s, ti, fresh_name(s, "0"));
  auto t  = fcrs::test::cayley_output(subsemigroup(s, ti));
  auto u  = fcrs::test::cayley_output(q.semigroup);
  auto glue = derive_glue(s, ti, t, u);
  glue.sigma.erase(glue.sigma.begin());
  CHECK_THROWS_AS(ideal_extension(t, u, glue), InputError);
  CHECK_THROWS_AS(ideal_extension(t, t, derive_glue(s, ti, t, u)), InputError);
}

TEST_CASE("ideal extension on every ideal of small semigroups", "[constructions][property]") {
  std::size_t cases = 0;
  for (auto const& s : fcrs::test::small_corpus(4)) {
    // Proper ideals: closures of single elements under two-sided products.
    std::set<std::vector<std::size_t>> ideals;
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::set<std::size_t> i{x};
      for (std::size_t a = 0; a < s.size(); ++a) {
        i.insert(s.product(a, x));
        i.insert(s.product(x, a));
        for (std::size_t b = 0; b < s.size(); ++b) {
          i.insert(s.product(s.product(a, x), b));
        }
      }
      if (i.size() < s.size()) {
        ideals.insert({i.begin(), i.end()});
      }
    }
    for (auto const& ti : ideals) {
      auto q = rees_quotient(s, ti, fresh_name(s, "0"));
      auto t = fcrs::test::cayley_output(subsemigroup(s, ti));
      auto u = fcrs::test::cayley_output(q.semigroup);
      auto v = ideal_extension(s, ti, t, u);
      require_complete(v, s);
      ++cases;
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("Rees system over Z2 with a zero entry", "[constructions]") {
  auto g   = catalogue::cyclic_group(2);
  auto out = rees_zero(fcrs::test::rees_datum(g, 2, 2, {0, 0, 0, std::nullopt}));
  CHECK(certify(out).verdict == Completeness::complete_certified_at_scale);
  CHECK(enumerate_irreducibles(out.system, 3).size() == 9);
  CHECK(all_irreducibles(out.system).size() == 9);
  CHECK(has_rule(out.system, "c2 b2", "0"));
  require_complete(out, fcrs::test::rees_table(g, 2, 2, {0, 0, 0, std::nullopt}, true));
}

TEST_CASE("zero entries in the first column", "[constructions]") {
  auto g   = catalogue::cyclic_group(2);
  auto p   = std::vector<std::optional<std::size_t>>{0, 0, std::nullopt, 1};
  auto out = rees_zero(fcrs::test::rees_datum(g, 2, 2, p));
  CHECK(has_rule(out.system, "c2 e", "0"));
  CHECK(has_rule(out.system, "c2 a", "0"));
  require_complete(out, fcrs::test::rees_table(g, 2, 2, p, true));
}

TEST_CASE("Brandt semigroup from its datum", "[constructions]") {
  auto g   = catalogue::by_name("trivial");
  auto p   = std::vector<std::optional<std::size_t>>{0, std::nullopt, std::nullopt, 0};
  auto out = rees_zero(fcrs::test::rees_datum(g, 2, 2, p));
  require_complete(out, fcrs::test::rees_table(g, 2, 2, p, true));
}

TEST_CASE("zero in the corner is moved away", "[constructions]") {
  auto g   = catalogue::cyclic_group(3);
  auto p   = std::vector<std::optional<std::size_t>>{std::nullopt, 1, 2, 0};
  auto out = rees_zero(fcrs::test::rees_datum(g, 2, 2, p));
  CHECK(out.provenance.find("swap") != std::string::npos);
  require_complete(out, fcrs::test::rees_table(g, 2, 2, p, true));
}

TEST_CASE("corner entry other than the identity is rescaled", "[constructions]") {
  auto g   = catalogue::cyclic_group(3);
  auto p   = std::vector<std::optional<std::size_t>>{2, 1, 0, 1};
  auto out = rees_simple(fcrs::test::rees_datum(g, 2, 2, p));
  CHECK(out.provenance.find("rescale") != std::string::npos);
  require_complete(out, fcrs::test::rees_table(g, 2, 2, p, false));
}

TEST_CASE("rectangular band from an all-identity matrix", "[constructions]") {
  auto g   = catalogue::by_name("trivial");
  auto p   = std::vector<std::optional<std::size_t>>{0, 0, 0, 0};
  auto out = rees_simple(fcrs::test::rees_datum(g, 2, 2, p));
  require_complete(out, fcrs::test::rees_table(g, 2, 2, p, false));
  CHECK_FALSE(out.system.alphabet().contains("0"));
  CHECK(out.system.alphabet().size() == 3);
}

TEST_CASE("one by one Rees system is the group", "[constructions]") {
  auto g   = catalogue::symmetric_group(3);
  auto out = rees_simple(fcrs::test::rees_datum(g, 1, 1, {g.identity()}));
  CHECK(out.system.alphabet().size() == g.size());
  CHECK(rule_strings(out.system) == rule_strings(cayley_fcrs(g).system));
  require_complete(out, fcrs::test::rees_table(g, 1, 1, {g.identity()}, false));
}

TEST_CASE("Rees datum errors", "[constructions]") {
  auto g = catalogue::cyclic_group(2);
  CHECK_THROWS_AS(rees_simple(fcrs::test::rees_datum(g, 2, 2, {0, 0, 0, std::nullopt})), InputError);
  try {
    (void) rees_simple(fcrs::test::rees_datum(g, 2, 2, {0, 0, 0, std::nullopt}));
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("rees-zero") != std::string::npos);
  }
  CHECK_THROWS_AS(rees_zero(fcrs::test::rees_datum(g, 2, 2, {0, 0, std::nullopt, std::nullopt})),
                  InputError);
  auto d = fcrs::test::rees_datum(g, 1, 1, {0});
  d.matrix.push_back(d.matrix[0]);
  CHECK_THROWS_AS(rees_zero(d), InputError);
  auto e = fcrs::test::rees_datum(g, 1, 1, {0});
  e.identity_word = w(e.group_system, "a");
  CHECK_THROWS_AS(rees_zero(e), InputError);
}

TEST_CASE("Rees witness words have the expected shape", "[constructions]") {
  auto g   = catalogue::cyclic_group(2);
  auto out = rees_zero(fcrs::test::rees_datum(g, 2, 3, {0, 1, 0, std::nullopt, 1, 0}));
  CHECK(*find_witness(out.witness, "(1,e,1)") == w(out.system, "e"));
  CHECK(*find_witness(out.witness, "(2,e,1)") == w(out.system, "b2"));
  CHECK(*find_witness(out.witness, "(1,e,3)") == w(out.system, "c3"));
  CHECK(*find_witness(out.witness, "(2,a,2)") == w(out.system, "b2 a c2"));
  CHECK(*find_witness(out.witness, "0") == w(out.system, "0"));
  CHECK(out.witness.size() == 2 * 2 * 3 + 1);
}

TEST_CASE("adaptive ball length", "[constructions]") {
  CHECK(adaptive_ball_length(2) == 6);
  CHECK(adaptive_ball_length(15) == 5);
  CHECK(adaptive_ball_length(500) == 2);
  CHECK(adaptive_ball_length(2000) == 1);
  CHECK(ball_size(15, adaptive_ball_length(15)) <= default_ball_word_budget);
}

TEST_CASE("table verification reports mismatches", "[constructions]") {
  auto g   = catalogue::cyclic_group(2);
  auto out = fcrs::test::cayley_output(g);
  std::swap(out.witness[0].word, out.witness[1].word);
  auto rep = verify_against_table(out, g);
  CHECK_FALSE(rep.mismatches.empty());
  out.witness.pop_back();
  CHECK_THROWS_AS(verify_against_table(out, g), InputError);
}
