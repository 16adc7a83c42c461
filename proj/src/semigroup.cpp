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

#include "fcrs/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "fcrs/error.hpp"

namespace fcrs {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(std::vector<std::string>                      names,
                                   std::vector<std::vector<element_type>> const& table)
      : names_(std::move(names)) {
    auto const n = names_.size();
    if (n == 0) {
      throw InputError("a semigroup needs at least one element");
    }
    std::unordered_set<std::string> seen;
    for (auto const& nm : names_) {
      if (nm.empty()) {
        throw InputError("empty element name");
      }
      if (!seen.insert(nm).second) {
        throw InputError("duplicate element name \"" + nm + "\"");
      }
    }
    if (table.size() != n) {
      throw InputError("table has " + std::to_string(table.size()) + " rows, expected "
                       + std::to_string(n));
    }
    table_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw InputError("table row " + std::to_string(i) + " has "
                         + std::to_string(table[i].size()) + " entries, expected "
                         + std::to_string(n));
      }
      for (auto v : table[i]) {
        if (v >= n) {
          throw InputError("table entry " + std::to_string(v) + " in row "
                           + std::to_string(i) + " out of range");
        }
        table_.push_back(v);
      }
    }
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        auto xy = product(x, y);
        for (element_type z = 0; z < n; ++z) {
          if (product(xy, z) != product(x, product(y, z))) {
            throw InputError("table is not associative: (" + names_[x] + "*" + names_[y]
                             + ")*" + names_[z] + " != " + names_[x] + "*(" + names_[y]
                             + "*" + names_[z] + ") for (x,y,z) = (" + names_[x] + ","
                             + names_[y] + "," + names_[z] + ")");
          }
        }
      }
    }
  }

  std::optional<FiniteSemigroup::element_type>
  FiniteSemigroup::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<element_type>(it - names_.begin());
  }

  FiniteSemigroup::element_type FiniteSemigroup::index(std::string_view name) const {
    auto x = find(name);
    if (!x) {
      throw InputError("unknown element \"" + std::string(name) + "\"");
    }
    return *x;
  }

  std::vector<std::vector<FiniteSemigroup::element_type>> FiniteSemigroup::rows() const {
    auto const                             n = size();
    std::vector<std::vector<element_type>> rows(n);
    for (element_type x = 0; x < n; ++x) {
      rows[x].assign(table_.begin() + x * n, table_.begin() + (x + 1) * n);
    }
    return rows;
  }

  std::optional<FiniteSemigroup::element_type> FiniteSemigroup::zero() const {
    for (element_type z = 0; z < size(); ++z) {
      bool ok = true;
      for (element_type x = 0; x < size() && ok; ++x) {
        ok = product(z, x) == z && product(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::optional<FiniteSemigroup::element_type> FiniteSemigroup::identity() const {
    for (element_type e = 0; e < size(); ++e) {
      bool ok = true;
      for (element_type x = 0; x < size() && ok; ++x) {
        ok = product(e, x) == x && product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool FiniteSemigroup::is_group() const {
    auto e = identity();
    if (!e) {
      return false;
    }
    for (element_type x = 0; x < size(); ++x) {
      bool has_inverse = false;
      for (element_type y = 0; y < size() && !has_inverse; ++y) {
        has_inverse = product(x, y) == *e && product(y, x) == *e;
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

  FiniteSemigroup load_and_validate(std::string_view json_text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(0, std::string("Cayley table document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("table")) {
      throw ParseError(0, "Cayley table document needs fields \"elements\" and \"table\"");
    }
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> table;
    try {
      names = doc.at("elements").get<std::vector<std::string>>();
      table = doc.at("table").get<std::vector<std::vector<std::size_t>>>();
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(0, std::string("Cayley table document: ") + e.what());
    }
    return FiniteSemigroup(std::move(names), table);
  }

  std::string to_json(FiniteSemigroup const& s) {
    // One row per line keeps the documents diff-friendly.
    std::string out = "{\n  \"elements\": " + nlohmann::json(s.names()).dump() + ",\n  \"table\": [\n";
    auto        rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out += "    " + nlohmann::json(rows[i]).dump() + (i + 1 < rows.size() ? ",\n" : "\n");
    }
    return out + "  ]\n}\n";
  }

  FiniteSemigroup subsemigroup(FiniteSemigroup const& s, std::vector<std::size_t> const& elements) {
    std::vector<std::size_t> pos(s.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t k = 0; k < elements.size(); ++k) {
      pos.at(elements[k]) = k;
    }
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> table(elements.size());
    for (std::size_t a = 0; a < elements.size(); ++a) {
      names.push_back(s.name(elements[a]));
      for (std::size_t b = 0; b < elements.size(); ++b) {
        auto p = s.product(elements[a], elements[b]);
        if (pos[p] == std::numeric_limits<std::size_t>::max()) {
          throw InputError("subset is not closed: " + s.name(elements[a]) + "*"
                           + s.name(elements[b]) + " = " + s.name(p));
        }
        table[a].push_back(pos[p]);
      }
    }
    return FiniteSemigroup(std::move(names), table);
  }

  std::string fresh_name(FiniteSemigroup const& s, std::string const& base) {
    std::string nm = base;
    while (s.find(nm)) {
      nm += '\'';
    }
    return nm;
  }

  QuotientSemigroup rees_quotient(FiniteSemigroup const&          s,
                                  std::vector<std::size_t> const& ideal,
                                  std::string const&              zero_name) {
    if (ideal.empty()) {
      throw InputError("the ideal must be non-empty");
    }
    std::vector<bool> in_ideal(s.size(), false);
    for (auto t : ideal) {
      in_ideal.at(t) = true;
    }
    for (auto t : ideal) {
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (!in_ideal[s.product(t, x)]) {
          throw InputError("not an ideal: " + s.name(t) + "*" + s.name(x) + " = "
                           + s.name(s.product(t, x)) + " leaves it");
        }
        if (!in_ideal[s.product(x, t)]) {
          throw InputError("not an ideal: " + s.name(x) + "*" + s.name(t) + " = "
                           + s.name(s.product(x, t)) + " leaves it");
        }
      }
    }
    QuotientSemigroup        q;
    std::vector<std::size_t> pos(s.size());
    std::vector<std::string> names;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (!in_ideal[x]) {
        pos[x] = q.embedding.size();
        q.embedding.push_back(x);
        names.push_back(s.name(x));
      }
    }
    q.zero = q.embedding.size();
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (in_ideal[x]) {
        pos[x] = q.zero;
      }
    }
    std::string zn = zero_name;
    while (std::find(names.begin(), names.end(), zn) != names.end()) {
      zn += '\'';
    }
    names.push_back(zn);
    std::vector<std::vector<std::size_t>> table(names.size(),
                                                std::vector<std::size_t>(names.size(), q.zero));
    for (std::size_t a = 0; a < q.embedding.size(); ++a) {
      for (std::size_t b = 0; b < q.embedding.size(); ++b) {
        table[a][b] = pos[s.product(q.embedding[a], q.embedding[b])];
      }
    }
    q.semigroup = FiniteSemigroup(std::move(names), table);
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Graph = std::vector<std::vector<std::size_t>>;

    // Tarjan's algorithm, iterative. Returns a component id per vertex with
    // components renumbered by least vertex.
    std::vector<std::size_t> strongly_connected_components(Graph const& g,
                                                           std::size_t& count) {
      auto const               n     = g.size();
      auto const               undef = std::numeric_limits<std::size_t>::max();
      std::vector<std::size_t> index(n, undef), low(n, 0), comp(n, undef);
      std::vector<bool>        on_stack(n, false);
      std::vector<std::size_t> stack;
      std::size_t              next_index = 0, next_comp = 0;

      struct Frame {
        std::size_t v, edge;
      };
      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != undef) {
          continue;
        }
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& f = call.back();
          if (f.edge < g[f.v].size()) {
            auto w = g[f.v][f.edge++];
            if (index[w] == undef) {
              index[w] = low[w] = next_index++;
              stack.push_back(w);
              on_stack[w] = true;
              call.push_back({w, 0});
            } else if (on_stack[w]) {
              low[f.v] = std::min(low[f.v], index[w]);
            }
            continue;
          }
          auto v = f.v;
          call.pop_back();
          if (!call.empty()) {
            low[call.back().v] = std::min(low[call.back().v], low[v]);
          }
          if (low[v] == index[v]) {
            std::size_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = next_comp;
            } while (w != v);
            ++next_comp;
          }
        }
      }
      // Renumber by least vertex.
      std::vector<std::size_t> relabel(next_comp, undef);
      std::size_t              k = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (relabel[comp[v]] == undef) {
          relabel[comp[v]] = k++;
        }
        comp[v] = relabel[comp[v]];
      }
      count = k;
      return comp;
    }
  }  // namespace

  std::vector<std::size_t> GreenClasses::j_class_elements(std::size_t id) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < j.size(); ++x) {
      if (j[x] == id) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<std::size_t> GreenClasses::maximal_j_classes() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < j_count; ++a) {
      bool maximal = true;
      for (std::size_t b = 0; b < j_count && maximal; ++b) {
        maximal = b == a || !j_leq[a][b];
      }
      if (maximal) {
        out.push_back(a);
      }
    }
    return out;
  }

  GreenClasses green_classes(FiniteSemigroup const& s) {
    auto const n = s.size();
    Graph      right(n), left(n), both(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        right[x].push_back(s.product(x, y));
        left[x].push_back(s.product(y, x));
      }
      both[x] = right[x];
      both[x].insert(both[x].end(), left[x].begin(), left[x].end());
    }
    GreenClasses g;
    g.r = strongly_connected_components(right, g.r_count);
    g.l = strongly_connected_components(left, g.l_count);
    g.j = strongly_connected_components(both, g.j_count);
    g.d = g.j;

    std::vector<std::pair<std::size_t, std::size_t>> h_keys;
    g.h.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::pair key{g.r[x], g.l[x]};
      auto      it = std::find(h_keys.begin(), h_keys.end(), key);
      g.h[x]       = static_cast<std::size_t>(it - h_keys.begin());
      if (it == h_keys.end()) {
        h_keys.push_back(key);
      }
    }
    g.h_count = h_keys.size();

    // J_a <= J_b iff a representative of a is reachable from one of b.
    g.j_leq.assign(g.j_count, std::vector<bool>(g.j_count, false));
    for (std::size_t x = 0; x < n; ++x) {
      if (g.j_leq[g.j[x]][g.j[x]]) {
        continue;  // class already processed
      }
      std::vector<bool>        seen(n, false);
      std::vector<std::size_t> todo{x};
      seen[x] = true;
      while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        g.j_leq[g.j[v]][g.j[x]] = true;
        for (auto w : both[v]) {
          if (!seen[w]) {
            seen[w] = true;
            todo.push_back(w);
          }
        }
      }
    }
    return g;
  }

  bool is_regular(FiniteSemigroup const& s) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      bool found = false;
      for (std::size_t y = 0; y < s.size() && !found; ++y) {
        found = s.product(s.product(x, y), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Subgroup maximal_subgroup(FiniteSemigroup const& s, std::size_t e) {
    if (e >= s.size() || !s.is_idempotent(e)) {
      throw InputError("maximal_subgroup: element is not an idempotent");
    }
    auto     g = green_classes(s);
    Subgroup result;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (g.h[x] == g.h[e]) {
        result.embedding.push_back(x);
      }
    }
    result.group = subsemigroup(s, result.embedding);
    if (!result.group.is_group()) {
      throw Error("maximal_subgroup: H-class of an idempotent is not a group");
    }
    return result;
  }

  PrincipalFactor principal_factor(FiniteSemigroup const&          s,
                                   std::vector<std::size_t> const& j_class,
                                   std::string const&              zero_name) {
    PrincipalFactor pf;
    pf.j_class = j_class;
    std::sort(pf.j_class.begin(), pf.j_class.end());
    auto const               m = pf.j_class.size();
    std::vector<std::size_t> pos(s.size(), m);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < m; ++k) {
      pos.at(pf.j_class[k]) = k;
      names.push_back(s.name(pf.j_class[k]));
    }
    std::string zn = zero_name;
    while (std::find(names.begin(), names.end(), zn) != names.end()) {
      zn += '\'';
    }
    names.push_back(zn);
    pf.zero = m;
    std::vector<std::vector<std::size_t>> table(m + 1, std::vector<std::size_t>(m + 1, m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        table[a][b] = pos[s.product(pf.j_class[a], pf.j_class[b])];
      }
    }
    pf.semigroup = FiniteSemigroup(std::move(names), table);
    return pf;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees coordinates
  ////////////////////////////////////////////////////////////////////////

  ReesCoordinatization coordinatize(FiniteSemigroup const& s, SimplicityKind kind) {
    ReesCoordinatization rc;
    auto const           n    = s.size();
    auto const           zero = s.zero();
    bool                 zero_mode;
    switch (kind) {
      case SimplicityKind::completely_simple:
        zero_mode = false;
        break;
      case SimplicityKind::completely_zero_simple:
        if (!zero) {
          throw NotCompletelyZeroSimple("completely 0-simple semigroup must have a zero");
        }
        zero_mode = true;
        break;
      default:
        zero_mode = zero.has_value() && n > 1;
    }
    if (zero_mode) {
      rc.zero = zero;
    }
    auto is_nonzero = [&](std::size_t x) { return !rc.zero || x != *rc.zero; };

    auto g = green_classes(s);
    std::optional<std::size_t> e;
    std::optional<std::size_t> j_id;
    for (std::size_t x = 0; x < n; ++x) {
      if (!is_nonzero(x)) {
        continue;
      }
      if (!j_id) {
        j_id = g.j[x];
      } else if (g.j[x] != *j_id) {
        throw NotCompletelyZeroSimple("non-zero elements " + s.name(x)
                                      + " and others lie in different J-classes");
      }
      if (!e && s.is_idempotent(x)) {
        e = x;
      }
    }
    if (!e) {
      throw NotCompletelyZeroSimple("no non-zero idempotent");
    }

    // Index R- and L-classes of non-zero elements: the class of e first,
    // then by least element.
    auto index_classes = [&](std::vector<std::size_t> const& cls) {
      std::vector<std::size_t> order{cls[*e]};
      for (std::size_t x = 0; x < n; ++x) {
        if (is_nonzero(x) && std::find(order.begin(), order.end(), cls[x]) == order.end()) {
          order.push_back(cls[x]);
        }
      }
      return order;
    };
    auto r_order = index_classes(g.r);
    auto l_order = index_classes(g.l);
    rc.i_size      = r_order.size();
    rc.lambda_size = l_order.size();
    auto i_of = [&](std::size_t x) {
      return static_cast<std::size_t>(std::find(r_order.begin(), r_order.end(), g.r[x]) - r_order.begin());
    };
    auto lambda_of = [&](std::size_t x) {
      return static_cast<std::size_t>(std::find(l_order.begin(), l_order.end(), g.l[x]) - l_order.begin());
    };

    auto sub           = maximal_subgroup(s, *e);
    rc.group           = std::move(sub.group);
    rc.group_embedding = std::move(sub.embedding);
    std::vector<std::optional<std::size_t>> group_index(n);
    for (std::size_t k = 0; k < rc.group_embedding.size(); ++k) {
      group_index[rc.group_embedding[k]] = k;
    }

    rc.r_reps.assign(rc.i_size, *e);
    rc.q_reps.assign(rc.lambda_size, *e);
    for (std::size_t i = 1; i < rc.i_size; ++i) {
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x) {
        if (is_nonzero(x) && i_of(x) == i && lambda_of(x) == 0) {
          rc.r_reps[i] = x;
          found        = true;
        }
      }
      if (!found) {
        throw NotCompletelyZeroSimple("R-class " + std::to_string(i) + " misses the L-class of "
                                      + s.name(*e));
      }
    }
    for (std::size_t l = 1; l < rc.lambda_size; ++l) {
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x) {
        if (is_nonzero(x) && lambda_of(x) == l && i_of(x) == 0) {
          rc.q_reps[l] = x;
          found        = true;
        }
      }
      if (!found) {
        throw NotCompletelyZeroSimple("L-class " + std::to_string(l) + " misses the R-class of "
                                      + s.name(*e));
      }
    }

    rc.matrix.resize(rc.lambda_size * rc.i_size);
    for (std::size_t l = 0; l < rc.lambda_size; ++l) {
      for (std::size_t i = 0; i < rc.i_size; ++i) {
        auto p = s.product(rc.q_reps[l], rc.r_reps[i]);
        if (group_index[p]) {
          rc.matrix[l * rc.i_size + i] = group_index[p];
        } else if (!rc.zero || p != *rc.zero) {
          throw NotCompletelyZeroSimple("sandwich product " + s.name(rc.q_reps[l]) + "*"
                                        + s.name(rc.r_reps[i]) + " is neither in the group "
                                        "H-class nor zero");
        }
      }
    }

    rc.coords.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (!is_nonzero(x)) {
        continue;
      }
      auto i = i_of(x), l = lambda_of(x);
      for (std::size_t k = 0; k < rc.group_embedding.size(); ++k) {
        auto y = s.product(s.product(rc.r_reps[i], rc.group_embedding[k]), rc.q_reps[l]);
        if (y == x) {
          rc.coords[x] = ReesCoordinatization::Coordinates{i, k, l};
          break;
        }
      }
      if (!rc.coords[x]) {
        throw NotCompletelyZeroSimple("element " + s.name(x) + " has no Rees coordinates");
      }
    }

    // The coordinates must transport the whole table.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto const&                                       cx = rc.coords[x];
        auto const&                                       cy = rc.coords[y];
        std::optional<ReesCoordinatization::Coordinates> expected;
        if (cx && cy) {
          if (auto p = rc.entry(cx->lambda, cy->i)) {
            auto gp  = rc.group.product(rc.group.product(cx->g, *p), cy->g);
            expected = ReesCoordinatization::Coordinates{cx->i, gp, cy->lambda};
          }
        }
        auto const& actual = rc.coords[s.product(x, y)];
        bool        same   = expected.has_value() == actual.has_value()
                    && (!expected
                        || (expected->i == actual->i && expected->g == actual->g
                            && expected->lambda == actual->lambda));
        if (!same) {
          throw NotCompletelyZeroSimple("Rees multiplication fails for " + s.name(x) + "*"
                                        + s.name(y));
        }
      }
    }
    return rc;
  }

  CayleyFcrs cayley_fcrs(FiniteSemigroup const& s) {
    Alphabet alphabet;
    for (auto const& nm : s.names()) {
      alphabet.add(nm);
    }
    std::vector<Rule> rules;
    auto const        n = s.size();
    rules.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        rules.push_back({Word{static_cast<letter_type>(x), static_cast<letter_type>(y)},
                         Word{static_cast<letter_type>(s.product(x, y))}});
      }
    }
    CayleyFcrs out{RewritingSystem(std::move(alphabet), std::move(rules)), {}};
    for (std::size_t x = 0; x < n; ++x) {
      out.witness.push_back(Word{static_cast<letter_type>(x)});
    }
    return out;
  }

}  // namespace fcrs
