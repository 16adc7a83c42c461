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

#include "fcrs/orders.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "fcrs/error.hpp"

namespace fcrs {

  ////////////////////////////////////////////////////////////////////////
  // NatMultiset
  ////////////////////////////////////////////////////////////////////////

  NatMultiset::NatMultiset(std::initializer_list<std::size_t> entries)
      : NatMultiset(std::vector<std::size_t>(entries)) {}

  NatMultiset::NatMultiset(std::vector<std::size_t> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
  }

  NatMultiset NatMultiset::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw InputError("multiset must look like [n1,...,nr]: " + std::string(text));
    }
    std::vector<std::size_t> entries;
    std::string              body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
      std::istringstream in(body);
      std::string        item;
      while (std::getline(in, item, ',')) {
        if (item.empty()
            || !std::all_of(item.begin(), item.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c)) != 0;
               })) {
          throw InputError("bad multiset entry \"" + item + "\"");
        }
        entries.push_back(std::stoull(item));
      }
      if (body.back() == ',') {
        throw InputError("bad multiset: trailing comma");
      }
    }
    return NatMultiset(std::move(entries));
  }

  void NatMultiset::insert(std::size_t x) {
    entries_.insert(
        std::upper_bound(entries_.begin(), entries_.end(), x, std::greater<>()),
        x);
  }

  std::size_t NatMultiset::count(std::size_t x) const {
    return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), x));
  }

  std::string NatMultiset::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(entries_[i]);
    }
    return out + "]";
  }

  bool multiset_greater(NatMultiset const& m, NatMultiset const& n) {
    // Cancel common entries by merging the two sorted lists.
    std::vector<std::size_t> m_rest, n_rest;
    auto const&              a = m.entries();
    auto const&              b = n.entries();
    std::size_t              i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        ++i;
        ++j;
      } else if (a[i] > b[j]) {
        m_rest.push_back(a[i++]);
      } else {
        n_rest.push_back(b[j++]);
      }
    }
    m_rest.insert(m_rest.end(), a.begin() + i, a.end());
    n_rest.insert(n_rest.end(), b.begin() + j, b.end());
    if (m_rest.empty()) {
      return false;
    }
    // Both lists are non-increasing, so the maxima are at the front.
    return n_rest.empty() || n_rest.front() < m_rest.front();
  }

  std::string_view to_string(Relation r) noexcept {
    switch (r) {
      case Relation::decreases:
        return "decreases";
      case Relation::equal:
        return "equal";
      case Relation::increases:
        return "increases";
      case Relation::incomparable:
        return "incomparable";
    }
    return "incomparable";
  }

  ////////////////////////////////////////////////////////////////////////
  // Decompositions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_small(std::vector<bool> const& small, letter_type x) {
      return x < small.size() && small[x];
    }

    // Collects left to right and reverses at the end to get the right-to-left
    // indexing.
    SegmentDecomposition finish(std::vector<Word> segments,
                                std::vector<Word> separators) {
      std::reverse(segments.begin(), segments.end());
      std::reverse(separators.begin(), separators.end());
      return {std::move(segments), std::move(separators)};
    }
  }  // namespace

  SegmentDecomposition decompose_blocks(Word const& w, std::vector<bool> const& small) {
    std::vector<Word> segments{Word{}};
    std::vector<Word> separators;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (is_small(small, w[i])) {
        segments.back().push_back(w[i]);
      } else {
        if (i == 0 || is_small(small, w[i - 1])) {
          separators.emplace_back();
          segments.emplace_back();
        }
        separators.back().push_back(w[i]);
      }
    }
    return finish(std::move(segments), std::move(separators));
  }

  SegmentDecomposition decompose_letters(Word const& w, std::vector<bool> const& small) {
    std::vector<Word> segments{Word{}};
    std::vector<Word> separators;
    for (auto x : w) {
      if (is_small(small, x)) {
        segments.back().push_back(x);
      } else {
        separators.push_back(Word{x});
        segments.emplace_back();
      }
    }
    return finish(std::move(segments), std::move(separators));
  }

  Word reassemble(SegmentDecomposition const& d) {
    Word w;
    for (std::size_t k = d.segments.size(); k-- > 0;) {
      w.insert(w.end(), d.segments[k].begin(), d.segments[k].end());
      if (k > 0) {
        auto const& sep = d.separators.at(k - 1);
        w.insert(w.end(), sep.begin(), sep.end());
      }
    }
    return w;
  }

  bool is_one_step_reduct(RewritingSystem const& sys, Word const& from, Word const& to) {
    for (auto r : sys.redexes(from)) {
      auto const& rule = sys.rule(r.rule);
      if (from.size() - rule.lhs.size() + rule.rhs.size() == to.size()
          && sys.apply(from, r) == to) {
        return true;
      }
    }
    return false;
  }

  namespace {
    // Shared tail of the ideal-extension and Rees orders: compares the
    // stretch multisets, then walks a list of positional pairs and decides by
    // the first difference with a one-step relation.
    OrderVerdict compare_multisets(NatMultiset const& m_w,
                                   NatMultiset const& m_wp,
                                   std::string const& clause,
                                   std::string const& what) {
      if (multiset_greater(m_wp, m_w)) {
        return {Relation::decreases,
                clause + ": " + what + " " + m_wp.to_string() + " >mult "
                    + m_w.to_string()};
      }
      if (multiset_greater(m_w, m_wp)) {
        return {Relation::increases,
                clause + ": " + what + " " + m_w.to_string() + " >mult "
                    + m_wp.to_string()};
      }
      return {Relation::incomparable,
              clause + ": " + what + " " + m_wp.to_string() + " vs "
                  + m_w.to_string() + " incomparable"};
    }

    std::optional<OrderVerdict> first_difference(std::vector<Word> const& items,
                                                 std::vector<Word> const& items_p,
                                                 RewritingSystem const&   step_sys,
                                                 std::string const&       clause,
                                                 std::string const&       what) {
      for (std::size_t k = 0; k < items.size() && k < items_p.size(); ++k) {
        if (items[k] == items_p[k]) {
          continue;
        }
        if (is_one_step_reduct(step_sys, items_p[k], items[k])) {
          return OrderVerdict{Relation::decreases,
                              clause + ": " + what + " " + std::to_string(k)
                                  + " rewritten in one step"};
        }
        if (is_one_step_reduct(step_sys, items[k], items_p[k])) {
          return OrderVerdict{Relation::increases,
                              clause + ": " + what + " " + std::to_string(k)
                                  + " rewritten backwards"};
        }
        return OrderVerdict{Relation::incomparable,
                            clause + ": " + what + " " + std::to_string(k)
                                + " differs by more than one step"};
      }
      return std::nullopt;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LengthOrder
  ////////////////////////////////////////////////////////////////////////

  OrderVerdict LengthOrder::compare(Word const& w, Word const& w_prime) {
    if (w == w_prime) {
      return {Relation::equal, "identical words"};
    }
    auto what = "length " + std::to_string(w_prime.size()) + " vs "
                + std::to_string(w.size());
    if (w.size() < w_prime.size()) {
      return {Relation::decreases, what};
    }
    if (w.size() > w_prime.size()) {
      return {Relation::increases, what};
    }
    return {Relation::incomparable, what};
  }

  ////////////////////////////////////////////////////////////////////////
  // AdjoinZeroOrder
  ////////////////////////////////////////////////////////////////////////

  AdjoinZeroOrder::AdjoinZeroOrder(RewritingSystem const& sys,
                                   letter_type            zero,
                                   Word                   z,
                                   std::size_t            budget)
      : zero_(zero), z_(std::move(z)), budget_(budget) {
    if (!sys.alphabet().contains(zero)) {
      throw InputError("adjoin-zero order: zero letter outside the alphabet");
    }
    std::vector<bool> keep(sys.alphabet().size(), true);
    keep[zero] = false;
    original_ = restrict_rules(sys, keep);
    if (z_.empty()
        || std::any_of(z_.begin(), z_.end(), [&](letter_type x) {
             return x == zero || !sys.alphabet().contains(x);
           })) {
      throw InputError("adjoin-zero order: z must be a non-empty word without the zero letter");
    }
  }

  Word AdjoinZeroOrder::replace_zero(Word const& w) const {
    Word out;
    for (auto x : w) {
      if (x == zero_) {
        out.insert(out.end(), z_.begin(), z_.end());
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  namespace {
    // True if `to` is reachable from `from` in at least one step.
    bool reaches(RewritingSystem const& sys,
                 Word const&            from,
                 Word const&            to,
                 std::size_t            budget) {
      std::unordered_set<Word, WordHash> seen{from};
      std::deque<Word>                   queue{from};
      while (!queue.empty()) {
        Word u = std::move(queue.front());
        queue.pop_front();
        for (auto r : sys.redexes(u)) {
          Word v = sys.apply(u, r);
          if (v == to) {
            return true;
          }
          if (seen.insert(v).second) {
            if (seen.size() > budget) {
              throw BudgetExhausted("reachability: budget of "
                                    + std::to_string(budget)
                                    + " words exhausted");
            }
            queue.push_back(std::move(v));
          }
        }
      }
      return false;
    }
  }  // namespace

  OrderVerdict AdjoinZeroOrder::compare(Word const& w, Word const& w_prime) {
    if (w == w_prime) {
      return {Relation::equal, "identical words"};
    }
    Word t  = replace_zero(w);
    Word tp = replace_zero(w_prime);
    if (t == tp) {
      auto nonzero = [&](Word const& u) {
        return std::count_if(u.begin(), u.end(), [&](letter_type x) {
          return x != zero_;
        });
      };
      auto n = nonzero(w), np = nonzero(w_prime);
      auto what = "same image, non-zero letters " + std::to_string(np) + " vs "
                  + std::to_string(n);
      if (n < np) {
        return {Relation::decreases, what};
      }
      if (n > np) {
        return {Relation::increases, what};
      }
      return {Relation::incomparable, what};
    }
    if (reaches(original_, tp, t, budget_)) {
      return {Relation::decreases, "image of w' reduces to image of w"};
    }
    if (reaches(original_, t, tp, budget_)) {
      return {Relation::increases, "image of w reduces to image of w'"};
    }
    return {Relation::incomparable, "images unrelated by reduction"};
  }

  ////////////////////////////////////////////////////////////////////////
  // IdealExtensionOrder
  ////////////////////////////////////////////////////////////////////////

  IdealExtensionOrder::IdealExtensionOrder(RewritingSystem const& v,
                                           std::vector<bool>      small,
                                           RewritingSystem        q,
                                           std::size_t            budget)
      : small_(std::move(small)), q_(std::move(q)) {
    auto const& alphabet = v.alphabet();
    if (small_.size() != alphabet.size()) {
      throw InputError("ideal-extension order: letter mask has the wrong size");
    }
    std::vector<bool> big(alphabet.size());
    to_q_.assign(alphabet.size(), 0);
    for (letter_type x = 0; x < alphabet.size(); ++x) {
      big[x] = !small_[x];
      if (big[x]) {
        auto y = q_.alphabet().find(alphabet.token(x));
        if (!y) {
          throw InputError("ideal-extension order: letter \"" + alphabet.token(x)
                           + "\" missing from the quotient system");
        }
        to_q_[x] = *y;
      }
    }
    r_         = restrict_rules(v, small_);
    q_nonzero_ = restrict_rules(v, big);
    q_stretch_ = std::make_unique<StretchOracle>(q_, budget);
  }

  NatMultiset IdealExtensionOrder::block_stretches(SegmentDecomposition const& d) {
    NatMultiset m;
    for (auto const& block : d.separators) {
      Word in_q;
      for (auto x : block) {
        in_q.push_back(to_q_.at(x));
      }
      m.insert((*q_stretch_)(in_q));
    }
    return m;
  }

  OrderVerdict IdealExtensionOrder::compare(Word const& w, Word const& w_prime) {
    if (w == w_prime) {
      return {Relation::equal, "identical words"};
    }
    auto d  = decompose_blocks(w, small_);
    auto dp = decompose_blocks(w_prime, small_);
    auto m  = block_stretches(d);
    auto mp = block_stretches(dp);
    if (m != mp) {
      return compare_multisets(m, mp, "(i)", "block stretches");
    }
    if (d.separators != dp.separators) {
      if (auto v = first_difference(d.separators, dp.separators, q_nonzero_, "(ii)", "block")) {
        return *v;
      }
    }
    if (auto v = first_difference(d.segments, dp.segments, r_, "(iii)", "segment")) {
      return *v;
    }
    return {Relation::incomparable, "no clause applies"};
  }

  ////////////////////////////////////////////////////////////////////////
  // ReesOrder
  ////////////////////////////////////////////////////////////////////////

  ReesOrder::ReesOrder(RewritingSystem const&     sys,
                       std::vector<bool>          small,
                       std::optional<letter_type> zero,
                       std::size_t                budget)
      : small_(std::move(small)), zero_(zero) {
    if (small_.size() != sys.alphabet().size()) {
      throw InputError("rees order: letter mask has the wrong size");
    }
    if (zero_ && (!sys.alphabet().contains(*zero_) || small_[*zero_])) {
      throw InputError("rees order: bad zero letter");
    }
    r_         = restrict_rules(sys, small_);
    r_stretch_ = std::make_unique<StretchOracle>(r_, budget);
  }

  NatMultiset ReesOrder::segment_stretches(SegmentDecomposition const& d) {
    NatMultiset m;
    for (auto const& x : d.segments) {
      m.insert((*r_stretch_)(x));
    }
    return m;
  }

  OrderVerdict ReesOrder::compare(Word const& w, Word const& w_prime) {
    if (w == w_prime) {
      return {Relation::equal, "identical words"};
    }
    auto count = [&](Word const& u, bool zeros) {
      return static_cast<std::size_t>(std::count_if(u.begin(), u.end(), [&](letter_type x) {
        bool is_zero = zero_ && x == *zero_;
        return zeros ? is_zero : (!is_small(small_, x) && !is_zero);
      }));
    };
    auto bc = count(w, false), bcp = count(w_prime, false);
    if (bc != bcp) {
      auto what = "(i): B/C letters " + std::to_string(bcp) + " vs " + std::to_string(bc);
      return {bc < bcp ? Relation::decreases : Relation::increases, what};
    }
    auto z = count(w, true), zp = count(w_prime, true);
    if (z != zp) {
      auto what = "(ii): zero letters " + std::to_string(zp) + " vs " + std::to_string(z);
      return {z < zp ? Relation::decreases : Relation::increases, what};
    }
    auto d  = decompose_letters(w, small_);
    auto dp = decompose_letters(w_prime, small_);
    auto m  = segment_stretches(d);
    auto mp = segment_stretches(dp);
    if (m != mp) {
      return compare_multisets(m, mp, "(iii)", "segment stretches");
    }
    if (auto v = first_difference(d.segments, dp.segments, r_, "(iv)", "segment")) {
      return *v;
    }
    return {Relation::incomparable, "no clause applies"};
  }

  ////////////////////////////////////////////////////////////////////////
  // Ball verification
  ////////////////////////////////////////////////////////////////////////

  BallReport verify_decrease_on_ball(RewritingSystem const& sys,
                                     Comparator&            order,
                                     std::size_t            max_len,
                                     std::size_t            word_budget) {
    BallReport report;
    report.max_len = max_len;
    for_each_word(sys.alphabet().size(), max_len, [&](Word const& wp) {
      if (report.words == word_budget) {
        report.truncated = true;
        return false;
      }
      ++report.words;
      for (auto r : sys.redexes(wp)) {
        Word w = sys.apply(wp, r);
        ++report.checked;
        auto verdict = order.compare(w, wp);
        if (verdict.relation != Relation::decreases) {
          report.violations.push_back(
              {wp, std::move(w), r.rule, r.pos, verdict.relation, std::move(verdict.witness)});
        }
      }
      return true;
    });
    return report;
  }

  std::string format_text(Alphabet const& alphabet, BallReport const& report) {
    std::ostringstream out;
    for (auto const& v : report.violations) {
      out << "VIOLATION " << to_string(alphabet, v.before) << " -> "
          << to_string(alphabet, v.after) << " rule=" << v.rule << " pos=" << v.pos
          << " verdict=" << to_string(v.verdict) << '\n';
    }
    out << "checked=" << report.checked << " violations=" << report.violations.size()
        << '\n';
    if (report.truncated) {
      out << "truncated words=" << report.words << '\n';
    }
    return out.str();
  }

  std::string format_json_lines(Alphabet const& alphabet, BallReport const& report) {
    std::ostringstream out;
    for (auto const& v : report.violations) {
      nlohmann::json j = {{"type", "violation"},
                          {"before", to_string(alphabet, v.before)},
                          {"after", to_string(alphabet, v.after)},
                          {"rule", v.rule},
                          {"pos", v.pos},
                          {"verdict", std::string(to_string(v.verdict))},
                          {"witness", v.witness}};
      out << j.dump() << '\n';
    }
    nlohmann::json summary = {{"type", "ball-summary"},
                              {"max_len", report.max_len},
                              {"words", report.words},
                              {"checked", report.checked},
                              {"violations", report.violations.size()},
                              {"truncated", report.truncated}};
    out << summary.dump() << '\n';
    return out.str();
  }

}  // namespace fcrs
