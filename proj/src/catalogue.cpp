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

#include "fcrs/catalogue.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fcrs/error.hpp"

namespace fcrs::catalogue {

  namespace {
    using Product = std::function<std::size_t(std::size_t, std::size_t)>;

    FiniteSemigroup tabulate(std::vector<std::string> names, Product const& mul) {
      auto const                            n = names.size();
      std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          table[x][y] = mul(x, y);
        }
      }
      return FiniteSemigroup(std::move(names), table);
    }

    void require_positive(std::size_t n, char const* what) {
      if (n == 0) {
        throw InputError(std::string(what) + " needs a positive size");
      }
    }

    // Maps {0..n-1} -> {0..n-1} as image vectors, lexicographic.
    std::vector<std::vector<std::size_t>> all_maps(std::size_t n, bool bijective) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              f(n, 0);
      while (true) {
        std::vector<std::size_t> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (!bijective || std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
          out.push_back(f);
        }
        std::size_t i = n;
        while (i > 0 && f[i - 1] + 1 == n) {
          f[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++f[i - 1];
      }
      return out;
    }

    FiniteSemigroup transformations(std::size_t n, bool bijective) {
      auto                     maps = all_maps(n, bijective);
      std::vector<std::string> names;
      for (auto const& f : maps) {
        std::string nm;
        for (auto v : f) {
          nm += std::to_string(v + 1);
        }
        names.push_back(nm);
      }
      return tabulate(std::move(names), [&](std::size_t x, std::size_t y) {
        std::vector<std::size_t> h(n);
        for (std::size_t k = 0; k < n; ++k) {
          h[k] = maps[y][maps[x][k]];
        }
        return static_cast<std::size_t>(std::find(maps.begin(), maps.end(), h) - maps.begin());
      });
    }
  }  // namespace

  FiniteSemigroup cyclic_group(std::size_t n) {
    require_positive(n, "cyclic_group");
    std::vector<std::string> names{"e"};
    for (std::size_t k = 1; k < n; ++k) {
      names.push_back(k == 1 ? "a" : "a" + std::to_string(k));
    }
    return tabulate(std::move(names), [n](std::size_t x, std::size_t y) { return (x + y) % n; });
  }

  FiniteSemigroup klein_four() {
    // Bit 0 is a, bit 1 is b.
    return tabulate({"e", "a", "b", "ab"}, [](std::size_t x, std::size_t y) { return x ^ y; });
  }

  FiniteSemigroup symmetric_group(std::size_t n) {
    require_positive(n, "symmetric_group");
    return transformations(n, true);
  }

  FiniteSemigroup full_transformation_monoid(std::size_t n) {
    require_positive(n, "full_transformation_monoid");
    return transformations(n, false);
  }

  FiniteSemigroup brandt_b2() {
    // Matrix units: a = e12, b = e21, ab = e11, ba = e22.
    struct Unit {
      int r, c;
    };
    std::vector<Unit> units{{1, 2}, {2, 1}, {1, 1}, {2, 2}};
    return tabulate({"a", "b", "ab", "ba", "0"}, [&](std::size_t x, std::size_t y) -> std::size_t {
      if (x == 4 || y == 4 || units[x].c != units[y].r) {
        return 4;
      }
      for (std::size_t k = 0; k < 4; ++k) {
        if (units[k].r == units[x].r && units[k].c == units[y].c) {
          return k;
        }
      }
      return 4;
    });
  }

  FiniteSemigroup rectangular_band(std::size_t i_size, std::size_t lambda_size) {
    require_positive(i_size * lambda_size, "rectangular_band");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < i_size; ++i) {
      for (std::size_t l = 0; l < lambda_size; ++l) {
        names.push_back("r" + std::to_string(i + 1) + std::to_string(l + 1));
      }
    }
    return tabulate(std::move(names), [lambda_size](std::size_t x, std::size_t y) {
      return (x / lambda_size) * lambda_size + y % lambda_size;
    });
  }

  FiniteSemigroup chain_semilattice(std::size_t n) {
    require_positive(n, "chain_semilattice");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) {
      names.push_back("s" + std::to_string(k + 1));
    }
    return tabulate(std::move(names), [](std::size_t x, std::size_t y) { return std::min(x, y); });
  }

  FiniteSemigroup null_semigroup(std::size_t n) {
    require_positive(n, "null_semigroup");
    std::vector<std::string> names{"0"};
    for (std::size_t k = 1; k < n; ++k) {
      names.push_back(n == 2 ? "a" : "a" + std::to_string(k));
    }
    return tabulate(std::move(names), [](std::size_t, std::size_t) { return std::size_t{0}; });
  }

  FiniteSemigroup right_zero_semigroup(std::size_t n) {
    require_positive(n, "right_zero_semigroup");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) {
      names.push_back("z" + std::to_string(k + 1));
    }
    return tabulate(std::move(names), [](std::size_t, std::size_t y) { return y; });
  }

  namespace {
    std::map<std::string, std::function<FiniteSemigroup()>> const& registry() {
      static std::map<std::string, std::function<FiniteSemigroup()>> const r{
          {"trivial", [] { return cyclic_group(1); }},
          {"z2", [] { return cyclic_group(2); }},
          {"z3", [] { return cyclic_group(3); }},
          {"z4", [] { return cyclic_group(4); }},
          {"z5", [] { return cyclic_group(5); }},
          {"z6", [] { return cyclic_group(6); }},
          {"klein4", [] { return klein_four(); }},
          {"s3", [] { return symmetric_group(3); }},
          {"b2", [] { return brandt_b2(); }},
          {"t2", [] { return full_transformation_monoid(2); }},
          {"t3", [] { return full_transformation_monoid(3); }},
          {"rect2x2", [] { return rectangular_band(2, 2); }},
          {"chain3", [] { return chain_semilattice(3); }},
          {"null2", [] { return null_semigroup(2); }},
          {"rightzero2", [] { return right_zero_semigroup(2); }},
      };
      return r;
    }
  }  // namespace

  std::vector<std::string> names() {
    std::vector<std::string> out;
    for (auto const& [name, make] : registry()) {
      out.push_back(name);
    }
    return out;
  }

  FiniteSemigroup by_name(std::string_view name) {
    auto it = registry().find(std::string(name));
    if (it == registry().end()) {
      throw InputError("unknown catalogue semigroup \"" + std::string(name) + "\"");
    }
    return it->second();
  }

}  // namespace fcrs::catalogue
