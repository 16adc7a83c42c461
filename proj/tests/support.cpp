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

#include "support.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fcrs/catalogue.hpp"

namespace fcrs::test {

  RewritingSystem make_system(std::vector<std::string> const& letters,
                              std::vector<std::string> const& rules) {
    Alphabet          a(letters);
    std::vector<Rule> rs;
    for (auto const& r : rules) {
      auto arrow = r.find("->");
      rs.push_back({parse_word(a, r.substr(0, arrow)), parse_word(a, r.substr(arrow + 2))});
    }
    return RewritingSystem(std::move(a), std::move(rs));
  }

  Word w(RewritingSystem const& sys, std::string const& text) {
    return parse_word(sys.alphabet(), text);
  }

  std::vector<FiniteSemigroup> all_semigroups(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) {
      names.push_back("x" + std::to_string(k));
    }
    std::vector<FiniteSemigroup> out;
    std::vector<std::size_t>     t(n * n, 0);
    while (true) {
      bool assoc = true;
      for (std::size_t x = 0; x < n && assoc; ++x) {
        for (std::size_t y = 0; y < n && assoc; ++y) {
          for (std::size_t z = 0; z < n && assoc; ++z) {
            assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
          }
        }
      }
      if (assoc) {
        std::vector<std::vector<std::size_t>> rows(n);
        for (std::size_t x = 0; x < n; ++x) {
          rows[x].assign(t.begin() + x * n, t.begin() + (x + 1) * n);
        }
        out.emplace_back(names, rows);
      }
      std::size_t i = t.size();
      while (i > 0 && t[i - 1] + 1 == n) {
        t[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++t[i - 1];
    }
    return out;
  }

  FiniteSemigroup with_identity(FiniteSemigroup const& s) {
    auto names = s.names();
    auto one   = fresh_name(s, "1");
    names.push_back(one);
    auto const                            n = s.size();
    std::vector<std::vector<std::size_t>> rows(n + 1, std::vector<std::size_t>(n + 1));
    for (std::size_t x = 0; x <= n; ++x) {
      for (std::size_t y = 0; y <= n; ++y) {
        rows[x][y] = x == n ? y : y == n ? x : s.product(x, y);
      }
    }
    return FiniteSemigroup(names, rows);
  }

  std::vector<FiniteSemigroup> small_corpus(std::size_t max_order) {
    std::vector<FiniteSemigroup> out;
    for (auto const& name : catalogue::names()) {
      auto s = catalogue::by_name(name);
      if (s.size() <= max_order) {
        out.push_back(std::move(s));
      }
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& s : all_semigroups(n)) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  IdealOracle green_by_ideals(FiniteSemigroup const& s) {
    auto const                         n = s.size();
    std::vector<std::set<std::size_t>> right(n), left(n), both(n);
    for (std::size_t x = 0; x < n; ++x) {
      right[x].insert(x);
      left[x].insert(x);
      both[x].insert(x);
      for (std::size_t a = 0; a < n; ++a) {
        right[x].insert(s.product(x, a));
        left[x].insert(s.product(a, x));
        both[x].insert(s.product(x, a));
        both[x].insert(s.product(a, x));
        for (std::size_t b = 0; b < n; ++b) {
          both[x].insert(s.product(s.product(a, x), b));
        }
      }
    }
    auto classes = [n](auto const& ideals) {
      std::vector<std::size_t>                         id(n);
      std::vector<std::set<std::size_t>>               seen;
      for (std::size_t x = 0; x < n; ++x) {
        auto it = std::find(seen.begin(), seen.end(), ideals[x]);
        id[x]   = static_cast<std::size_t>(it - seen.begin());
        if (it == seen.end()) {
          seen.push_back(ideals[x]);
        }
      }
      return id;
    };
    IdealOracle o;
    o.r = classes(right);
    o.l = classes(left);
    o.j = classes(both);
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (std::size_t x = 0; x < n; ++x) {
      std::pair key{o.r[x], o.l[x]};
      auto      it = std::find(keys.begin(), keys.end(), key);
      o.h.push_back(static_cast<std::size_t>(it - keys.begin()));
      if (it == keys.end()) {
        keys.push_back(key);
      }
    }
    o.j_leq.assign(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        o.j_leq[x][y] = std::includes(both[y].begin(), both[y].end(), both[x].begin(), both[x].end());
      }
    }
    return o;
  }

  FiniteSemigroup rees_table(FiniteSemigroup const&                         g,
                             std::size_t                                    I,
                             std::size_t                                    L,
                             std::vector<std::optional<std::size_t>> const& p,
                             bool                                           with_zero) {
    struct Triple {
      std::size_t i, g, l;
    };
    std::vector<Triple>      elems;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < I; ++i) {
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t l = 0; l < L; ++l) {
          elems.push_back({i, x, l});
          names.push_back(rees_element_name(i + 1, g.name(x), l + 1));
        }
      }
    }
    auto const m    = elems.size();
    auto       zero = m;
    if (with_zero) {
      names.push_back("0");
    }
    auto index = [&](Triple t) { return (t.i * g.size() + t.g) * L + t.l; };
    std::vector<std::vector<std::size_t>> rows(names.size(), std::vector<std::size_t>(names.size(), zero));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto const& x     = elems[a];
        auto const& y     = elems[b];
        auto const& entry = p[x.l * I + y.i];
        if (!entry) {
          if (!with_zero) {
            throw std::logic_error("zero entry without zero");
          }
          continue;
        }
        rows[a][b] = index({x.i, g.product(g.product(x.g, *entry), y.g), y.l});
      }
    }
    return FiniteSemigroup(names, rows);
  }

  ReesDatum rees_datum(FiniteSemigroup const&                         g,
                       std::size_t                                    I,
                       std::size_t                                    L,
                       std::vector<std::optional<std::size_t>> const& p) {
    auto      cf = cayley_fcrs(g);
    ReesDatum d;
    d.group_system = cf.system;
    for (std::size_t x = 0; x < g.size(); ++x) {
      d.group_elements.push_back({g.name(x), cf.witness[x]});
    }
    d.identity_word = cf.witness[*g.identity()];
    d.i_size        = I;
    d.lambda_size   = L;
    for (auto const& e : p) {
      d.matrix.push_back(e ? std::optional<Word>(cf.witness[*e]) : std::nullopt);
    }
    return d;
  }

  namespace {
    bool contains_factor(Word const& w, Word const& f) {
      return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
    }

    std::vector<Word> one_step(RewritingSystem const& sys, Word const& w) {
      std::vector<Word> out;
      for (auto const& r : sys.rules()) {
        if (r.lhs.size() > w.size()) {
          continue;
        }
        for (std::size_t i = 0; i + r.lhs.size() <= w.size(); ++i) {
          if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
            Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            v.insert(v.end(), r.rhs.begin(), r.rhs.end());
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + r.lhs.size()), w.end());
            out.push_back(std::move(v));
          }
        }
      }
      return out;
    }

    template <typename F>
    void words_up_to(std::size_t k, std::size_t max_len, F&& f) {
      for (std::size_t len = 1; len <= max_len; ++len) {
        Word x(len, 0);
        while (true) {
          f(x);
          std::size_t i = len;
          while (i > 0 && x[i - 1] + 1 == k) {
            x[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            break;
          }
          ++x[i - 1];
        }
      }
    }
  }  // namespace

  std::set<Word> naive_irreducibles(RewritingSystem const& sys, std::size_t max_len) {
    std::set<Word> out;
    words_up_to(sys.alphabet().size(), max_len, [&](Word const& x) {
      for (auto const& r : sys.rules()) {
        if (contains_factor(x, r.lhs)) {
          return;
        }
      }
      out.insert(x);
    });
    return out;
  }

  std::set<Word> reachable(RewritingSystem const& sys, Word const& start) {
    std::set<Word>   seen{start};
    std::deque<Word> todo{start};
    while (!todo.empty()) {
      auto x = std::move(todo.front());
      todo.pop_front();
      for (auto& y : one_step(sys, x)) {
        if (seen.insert(y).second) {
          todo.push_back(std::move(y));
        }
      }
    }
    return seen;
  }

  bool all_forks_joinable(RewritingSystem const& sys, std::size_t max_len) {
    auto const k = sys.alphabet().size();
    // Index words of length <= max_len; descendants of a word stay inside
    // because no rule lengthens.
    std::vector<std::size_t> offset(max_len + 2, 0);
    std::size_t              pw = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
      pw *= k;
      offset[len + 1] = offset[len] + pw;
    }
    auto const total = offset[max_len + 1];
    auto       index = [&](Word const& x) {
      std::size_t v = 0;
      for (auto c : x) {
        v = v * k + c;
      }
      return offset[x.size()] + v;
    };
    auto const                              blocks = (total + 63) / 64;
    std::vector<std::vector<std::uint64_t>> desc(total);
    std::vector<bool>                       done(total, false);
    std::function<std::vector<std::uint64_t> const&(Word const&)> descendants
        = [&](Word const& x) -> std::vector<std::uint64_t> const& {
      auto id = index(x);
      if (!done[id]) {
        std::vector<std::uint64_t> bits(blocks, 0);
        bits[id / 64] |= std::uint64_t{1} << (id % 64);
        for (auto const& y : one_step(sys, x)) {
          if (y.size() > x.size()) {
            throw std::logic_error("all_forks_joinable needs non-lengthening rules");
          }
          auto const& d = descendants(y);
          for (std::size_t b = 0; b < blocks; ++b) {
            bits[b] |= d[b];
          }
        }
        desc[id] = std::move(bits);
        done[id] = true;
      }
      return desc[id];
    };
    bool ok = true;
    words_up_to(k, max_len, [&](Word const& x) {
      if (!ok) {
        return;
      }
      auto reducts = one_step(sys, x);
      for (std::size_t a = 0; a < reducts.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < reducts.size() && ok; ++b) {
          auto const& da     = descendants(reducts[a]);
          auto const& db     = descendants(reducts[b]);
          bool        common = false;
          for (std::size_t i = 0; i < blocks && !common; ++i) {
            common = (da[i] & db[i]) != 0;
          }
          ok = common;
        }
      }
    });
    return ok;
  }

  ReplacementOracle::ReplacementOracle(std::size_t entry_bound, std::size_t size_cap)
      : entry_bound_(entry_bound), size_cap_(size_cap) {}

  bool ReplacementOracle::greater(std::vector<std::size_t> m, std::vector<std::size_t> n) const {
    std::sort(m.rbegin(), m.rend());
    std::sort(n.rbegin(), n.rend());
    static std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>,
                    std::set<std::vector<std::size_t>>>
        cache;
    auto& reach = cache[{entry_bound_, size_cap_, m}];
    if (reach.empty()) {
      // Multisets reachable in one or more replacements.
      std::deque<std::vector<std::size_t>> todo{m};
      std::set<std::vector<std::size_t>>   seen;
      while (!todo.empty()) {
        auto cur = std::move(todo.front());
        todo.pop_front();
        for (std::size_t pos = 0; pos < cur.size(); ++pos) {
          if (pos > 0 && cur[pos] == cur[pos - 1]) {
            continue;
          }
          auto x    = cur[pos];
          auto rest = cur;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
          auto room = size_cap_ - rest.size();
          // Every multiset over {0..x-1} with at most `room` entries.
          std::vector<std::size_t>                        add;
          std::function<void(std::size_t)> extend = [&](std::size_t below) {
            auto next = rest;
            next.insert(next.end(), add.begin(), add.end());
            std::sort(next.rbegin(), next.rend());
            if (seen.insert(next).second) {
              todo.push_back(next);
            }
            if (add.size() == room) {
              return;
            }
            for (std::size_t y = 0; y < below; ++y) {
              add.push_back(y);
              extend(y + 1);
              add.pop_back();
            }
          };
          extend(x);
        }
      }
      reach = std::move(seen);
      reach.insert({static_cast<std::size_t>(-1)});  // marks the cache entry as filled
    }
    return reach.count(n) != 0;
  }

  std::vector<std::vector<std::size_t>> all_multisets(std::size_t entry_bound, std::size_t max_size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              cur;
    std::function<void(std::size_t)>      rec = [&](std::size_t below) {
      out.push_back(cur);
      if (cur.size() == max_size) {
        return;
      }
      for (std::size_t y = 0; y < below; ++y) {
        cur.push_back(y);
        rec(y + 1);
        cur.pop_back();
      }
    };
    rec(entry_bound);
    return out;
  }

  ConstructionOutput cayley_output(FiniteSemigroup const& s) {
    auto               cf = cayley_fcrs(s);
    ConstructionOutput out{cf.system, {}, {}, {}};
    for (std::size_t x = 0; x < s.size(); ++x) {
      out.witness.push_back({s.name(x), cf.witness[x]});
    }
    return out;
  }

  std::size_t evaluate(FiniteSemigroup const& s, Alphabet const& a, Word const& x) {
    auto v = s.index(a.token(x.front()));
    for (std::size_t i = 1; i < x.size(); ++i) {
      v = s.product(v, s.index(a.token(x[i])));
    }
    return v;
  }

}  // namespace fcrs::test
