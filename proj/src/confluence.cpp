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

#include "fcrs/confluence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace fcrs {

  std::vector<CriticalPair> critical_pairs(RewritingSystem const& sys) {
    std::vector<CriticalPair> pairs;
    // (source, min redex, max redex) for deduplication
    std::set<std::tuple<Word, std::size_t, std::size_t, std::size_t, std::size_t>> seen;

    auto emit = [&](Word source, Redex l, Redex r, PairKind kind) {
      auto a = std::make_pair(l.rule, l.pos);
      auto b = std::make_pair(r.rule, r.pos);
      if (a == b) {
        return;
      }
      auto lo = std::min(a, b), hi = std::max(a, b);
      if (!seen.emplace(source, lo.first, lo.second, hi.first, hi.second).second) {
        return;
      }
      Word left  = sys.apply(source, l);
      Word right = sys.apply(source, r);
      pairs.push_back({std::move(source), std::move(left), std::move(right), l, r, kind});
    };

    auto const& rules = sys.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      auto const& l1 = rules[i].lhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        auto const& l2 = rules[j].lhs;
        // Overlap: a proper suffix of l1 of length k equals a proper prefix
        // of l2.
        for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
          if (std::equal(l1.end() - k, l1.end(), l2.begin())) {
            Word source = l1;
            source.insert(source.end(), l2.begin() + k, l2.end());
            emit(std::move(source), Redex{i, 0}, Redex{j, l1.size() - k}, PairKind::overlap);
          }
        }
        // Containment: l2 is a factor of l1.
        if (i != j && l2.size() <= l1.size()) {
          for (auto pos : find_occurrences(l1, l2)) {
            emit(l1, Redex{i, 0}, Redex{j, pos}, PairKind::containment);
          }
        }
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](auto const& x, auto const& y) {
      if (x.source != y.source) {
        return shortlex_less(x.source, y.source);
      }
      return std::tie(x.left_redex.rule, x.right_redex.rule, x.left_redex.pos, x.right_redex.pos)
             < std::tie(y.left_redex.rule, y.right_redex.rule, y.left_redex.pos, y.right_redex.pos);
    });
    return pairs;
  }

  std::string_view to_string(PairStatus s) noexcept {
    switch (s) {
      case PairStatus::resolved:
        return "resolved";
      case PairStatus::unresolved:
        return "unresolved";
      case PairStatus::undecided:
        return "undecided";
    }
    return "undecided";
  }

  std::size_t ConfluenceReport::unresolved() const noexcept {
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](auto const& p) {
      return p.status == PairStatus::unresolved;
    }));
  }

  std::size_t ConfluenceReport::undecided() const noexcept {
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](auto const& p) {
      return p.status == PairStatus::undecided;
    }));
  }

  ConfluenceReport check_local_confluence(RewritingSystem const& sys, std::size_t budget) {
    ConfluenceReport report;
    for (auto& cp : critical_pairs(sys)) {
      ResolvedPair rp{std::move(cp), PairStatus::undecided, {}, {}};
      try {
        rp.left_final  = normal_form(sys, rp.pair.left, budget);
        rp.right_final = normal_form(sys, rp.pair.right, budget);
        rp.status      = rp.left_final == rp.right_final ? PairStatus::resolved
                                                         : PairStatus::unresolved;
      } catch (BudgetExhausted const&) {
        rp.left_final.clear();
        rp.right_final.clear();
      }
      report.pairs.push_back(std::move(rp));
    }
    return report;
  }

  std::string_view to_string(Completeness c) noexcept {
    switch (c) {
      case Completeness::complete_certified_at_scale:
        return "complete-certified-at-scale";
      case Completeness::not_locally_confluent:
        return "not-locally-confluent";
      case Completeness::undecided:
        return "undecided";
    }
    return "undecided";
  }

  Completeness completeness_verdict(BallReport const& termination, ConfluenceReport const& report) {
    if (report.unresolved() != 0) {
      return Completeness::not_locally_confluent;
    }
    if (report.undecided() != 0 || !termination.holds()) {
      return Completeness::undecided;
    }
    return Completeness::complete_certified_at_scale;
  }

  namespace {
    std::string redex_string(Redex r) {
      return std::to_string(r.rule) + "@" + std::to_string(r.pos);
    }
  }  // namespace

  std::string format_text(Alphabet const& alphabet, ConfluenceReport const& report) {
    std::ostringstream out;
    for (auto const& rp : report.pairs) {
      auto const& p = rp.pair;
      out << "PAIR source=\"" << to_string(alphabet, p.source) << "\" left=\""
          << to_string(alphabet, p.left) << "\" right=\"" << to_string(alphabet, p.right)
          << "\" redexes=" << redex_string(p.left_redex) << ',' << redex_string(p.right_redex)
          << " kind=" << (p.kind == PairKind::overlap ? "overlap" : "containment")
          << " status=" << to_string(rp.status);
      if (rp.status != PairStatus::undecided) {
        out << " left_final=\"" << to_string(alphabet, rp.left_final) << "\" right_final=\""
            << to_string(alphabet, rp.right_final) << '"';
      }
      out << '\n';
    }
    out << "pairs=" << report.pairs.size() << " unresolved=" << report.unresolved()
        << " undecided=" << report.undecided() << '\n';
    return out.str();
  }

  std::string format_json_lines(Alphabet const& alphabet, ConfluenceReport const& report) {
    std::ostringstream out;
    for (auto const& rp : report.pairs) {
      auto const&    p = rp.pair;
      nlohmann::json j = {{"type", "critical-pair"},
                          {"source", to_string(alphabet, p.source)},
                          {"left", to_string(alphabet, p.left)},
                          {"right", to_string(alphabet, p.right)},
                          {"left_redex", redex_string(p.left_redex)},
                          {"right_redex", redex_string(p.right_redex)},
                          {"kind", p.kind == PairKind::overlap ? "overlap" : "containment"},
                          {"status", std::string(to_string(rp.status))},
                          {"resolved", rp.status == PairStatus::resolved}};
      if (rp.status != PairStatus::undecided) {
        j["left_final"]  = to_string(alphabet, rp.left_final);
        j["right_final"] = to_string(alphabet, rp.right_final);
      }
      out << j.dump() << '\n';
    }
    nlohmann::json summary = {{"type", "confluence-summary"},
                              {"pairs", report.pairs.size()},
                              {"unresolved", report.unresolved()},
                              {"undecided", report.undecided()}};
    out << summary.dump() << '\n';
    return out.str();
  }

}  // namespace fcrs
