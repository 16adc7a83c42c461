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

#include "fcrs/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "fcrs/error.hpp"

namespace fcrs {

  namespace {

    std::string join_tokens(Alphabet const& alphabet, Word const& w, char sep) {
      std::string out;
      for (auto x : w) {
        if (!out.empty()) {
          out += sep;
        }
        out += alphabet.token(x);
      }
      return out;
    }

    // FNV-1a over letters and rules; identifies the emitted system.
    std::string digest(RewritingSystem const& sys) {
      std::uint64_t h    = 14695981039346656037ULL;
      auto          feed = [&h](std::string const& s) {
        for (unsigned char c : s) {
          h ^= c;
          h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
      };
      for (auto const& t : sys.alphabet().tokens()) {
        feed(t);
      }
      for (auto const& r : sys.rules()) {
        feed(to_string(sys.alphabet(), r.lhs));
        feed(to_string(sys.alphabet(), r.rhs));
      }
      std::ostringstream out;
      out << std::hex << h;
      return "fnv1a:" + out.str();
    }

    // Word over `from` rewritten letter by letter into `to` (same tokens).
    Word translate(Word const& w, Alphabet const& from, Alphabet const& to) {
      Word out;
      out.reserve(w.size());
      for (auto x : w) {
        out.push_back(to.letter(from.token(x)));
      }
      return out;
    }

    // Rule list with exact duplicates dropped, first occurrence kept.
    class RuleSet {
     public:
      void add(Word lhs, Word rhs) {
        if (seen_.emplace(lhs, rhs).second) {
          rules_.push_back({std::move(lhs), std::move(rhs)});
        }
      }
      std::vector<Rule> take() {
        return std::move(rules_);
      }

     private:
      std::set<std::pair<Word, Word>> seen_;
      std::vector<Rule>               rules_;
    };

  }  // namespace

  Word const* find_witness(Witness const& w, std::string const& element) {
    for (auto const& e : w) {
      if (e.element == element) {
        return &e.word;
      }
    }
    return nullptr;
  }

  std::string_view to_string(CertificateKind k) noexcept {
    switch (k) {
      case CertificateKind::length:
        return "length";
      case CertificateKind::adjoin_zero:
        return "adjoin-zero";
      case CertificateKind::ideal_extension:
        return "ideal-extension";
      case CertificateKind::rees:
        return "rees";
    }
    return "length";
  }

  CertificateKind certificate_kind(std::string_view name) {
    for (auto k : {CertificateKind::length, CertificateKind::adjoin_zero,
                   CertificateKind::ideal_extension, CertificateKind::rees}) {
      if (to_string(k) == name) {
        return k;
      }
    }
    throw InputError("unknown certificate \"" + std::string(name)
                     + "\" (expected length, adjoin-zero, ideal-extension or rees)");
  }

  std::unique_ptr<Comparator> make_comparator(RewritingSystem const& sys,
                                              Certificate const&     cert,
                                              std::size_t            budget) {
    auto const& alphabet = sys.alphabet();
    auto        mask     = [&] {
      std::vector<bool> small(alphabet.size(), false);
      for (auto const& t : cert.small_letters) {
        small[alphabet.letter(t)] = true;
      }
      return small;
    };
    switch (cert.kind) {
      case CertificateKind::length:
        return std::make_unique<LengthOrder>();
      case CertificateKind::adjoin_zero:
        if (!cert.zero) {
          throw InputError("adjoin-zero certificate needs a zero letter");
        }
        return std::make_unique<AdjoinZeroOrder>(sys, alphabet.letter(*cert.zero),
                                                 cert.zero_word, budget);
      case CertificateKind::ideal_extension:
        if (!cert.aux) {
          throw InputError("ideal-extension certificate needs the quotient system");
        }
        return std::make_unique<IdealExtensionOrder>(sys, mask(), *cert.aux, budget);
      case CertificateKind::rees: {
        std::optional<letter_type> zero;
        if (cert.zero) {
          zero = alphabet.letter(*cert.zero);
        }
        return std::make_unique<ReesOrder>(sys, mask(), zero, budget);
      }
    }
    throw InputError("unknown certificate");
  }

  ////////////////////////////////////////////////////////////////////////
  // Adjoining a zero
  ////////////////////////////////////////////////////////////////////////

  ConstructionOutput adjoin_zero(RewritingSystem const& sys,
                                 Word const&            z,
                                 Witness                witness,
                                 std::string const&     zero_token) {
    auto const& alphabet = sys.alphabet();
    if (z.empty()) {
      throw InputError("the zero word must be non-empty");
    }
    validate_word(alphabet, z);
    if (!is_irreducible(sys, z)) {
      throw InputError("the zero word \"" + to_string(alphabet, z) + "\" is reducible");
    }
    if (alphabet.contains(zero_token)) {
      throw InputError("letter \"" + zero_token
                       + "\" already exists; rename it before adjoining a zero");
    }
    for (letter_type x = 0; x < alphabet.size(); ++x) {
      for (auto const& w : {concat(Word{x}, z), concat(z, Word{x})}) {
        if (normal_form(sys, w) != z) {
          throw InputError("\"" + to_string(alphabet, z) + "\" is not a zero: \""
                           + to_string(alphabet, w) + "\" does not reduce to it");
        }
      }
    }

    if (witness.empty()) {
      try {
        for (auto const& w : all_irreducibles(sys, 10'000)) {
          witness.push_back({join_tokens(alphabet, w, '.'), w});
        }
      } catch (BudgetExhausted const&) {
        witness.clear();
      }
    }

    Alphabet ext = alphabet;
    auto     o   = ext.add(zero_token);
    RuleSet  rules;
    for (auto const& r : sys.rules()) {
      rules.add(r.lhs, r.rhs);
    }
    rules.add(z, {o});
    for (letter_type x = 0; x < alphabet.size(); ++x) {
      rules.add({o, x}, {o});
      rules.add({x, o}, {o});
    }
    rules.add({o, o}, {o});

    for (auto& e : witness) {
      if (e.word == z) {
        e.word = {o};
      }
    }

    ConstructionOutput out{RewritingSystem(std::move(ext), rules.take()), std::move(witness), {}, {}};
    out.certificate.kind      = CertificateKind::adjoin_zero;
    out.certificate.zero      = zero_token;
    out.certificate.zero_word = z;
    out.provenance            = "adjoin-zero " + digest(out.system);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal extensions
  ////////////////////////////////////////////////////////////////////////

  std::optional<ZeroSplit> find_zero_split(RewritingSystem const&            u,
                                           std::optional<std::string> const& hint) {
    auto const&                     alphabet = u.alphabet();
    std::set<std::pair<Word, Word>> rules;
    for (auto const& r : u.rules()) {
      rules.emplace(r.lhs, r.rhs);
    }
    std::vector<letter_type> candidates;
    if (hint) {
      if (auto h = alphabet.find(*hint)) {
        candidates.push_back(*h);
      }
    }
    for (letter_type x = 0; x < alphabet.size(); ++x) {
      candidates.push_back(x);
    }
    for (auto o : candidates) {
      bool absorbing = true;
      for (letter_type x = 0; x < alphabet.size() && absorbing; ++x) {
        absorbing = rules.count({Word{o, x}, Word{o}}) != 0 && rules.count({Word{x, o}, Word{o}}) != 0;
      }
      if (!absorbing) {
        continue;
      }
      ZeroSplit split{o, std::vector<bool>(alphabet.size()), std::vector<bool>(u.size())};
      for (letter_type x = 0; x < alphabet.size(); ++x) {
        split.b0[x] = normal_form(u, Word{x}) == Word{o};
      }
      for (std::size_t k = 0; k < u.size(); ++k) {
        split.q0[k] = normal_form(u, u.rule(k).lhs) == Word{o};
      }
      return split;
    }
    return std::nullopt;
  }

  namespace {

    bool avoids(Word const& w, std::vector<bool> const& mask) {
      return std::none_of(w.begin(), w.end(), [&](letter_type x) { return mask[x]; });
    }

    void check_ideal(FiniteSemigroup const& s, std::vector<std::size_t> const& t_elements) {
      std::vector<bool> in_t(s.size(), false);
      for (auto t : t_elements) {
        in_t.at(t) = true;
      }
      for (auto t : t_elements) {
        for (std::size_t x = 0; x < s.size(); ++x) {
          if (!in_t[s.product(t, x)]) {
            throw InputError("not an ideal: " + s.name(t) + "*" + s.name(x) + " = "
                             + s.name(s.product(t, x)));
          }
          if (!in_t[s.product(x, t)]) {
            throw InputError("not an ideal: " + s.name(x) + "*" + s.name(t) + " = "
                             + s.name(s.product(x, t)));
          }
        }
      }
    }

    // Element of S represented by a word, read off the witness of `out`.
    std::optional<std::size_t> element_of(FiniteSemigroup const&    s,
                                          ConstructionOutput const& out,
                                          Word const&               w) {
      auto nf = normal_form(out.system, w);
      for (auto const& e : out.witness) {
        if (e.word == nf) {
          return s.find(e.element);
        }
      }
      throw InputError("word \"" + to_string(out.system.alphabet(), w)
                       + "\" has a normal form missing from the witness");
    }

  }  // namespace

  IdealExtensionGlue derive_glue(FiniteSemigroup const&          s,
                                 std::vector<std::size_t> const& t_elements,
                                 ConstructionOutput const&       t,
                                 ConstructionOutput const&       u) {
    check_ideal(s, t_elements);
    std::vector<bool> in_t(s.size(), false);
    for (auto x : t_elements) {
      in_t[x] = true;
    }
    auto split = find_zero_split(u.system, u.certificate.zero);
    if (!split) {
      throw InputError("the quotient system has no zero letter; adjoin a zero first");
    }
    auto const& ta = t.system.alphabet();
    auto const& ua = u.system.alphabet();

    auto t_word = [&](std::size_t x) -> Word {
      if (!in_t[x]) {
        throw InputError("product " + s.name(x) + " lies outside the ideal");
      }
      auto const* w = find_witness(t.witness, s.name(x));
      if (w == nullptr) {
        throw InputError("ideal element " + s.name(x) + " has no witness");
      }
      return *w;
    };

    std::vector<std::size_t> a_el(ta.size()), b_el(ua.size());
    for (letter_type a = 0; a < ta.size(); ++a) {
      auto x = element_of(s, t, Word{a});
      if (!x || !in_t[*x]) {
        throw InputError("letter " + ta.token(a) + " does not represent an ideal element");
      }
      a_el[a] = *x;
    }
    for (letter_type b = 0; b < ua.size(); ++b) {
      if (split->b0[b]) {
        continue;
      }
      auto x = element_of(s, u, Word{b});
      if (!x || in_t[*x]) {
        throw InputError("letter " + ua.token(b)
                         + " does not represent an element outside the ideal");
      }
      b_el[b] = *x;
    }

    IdealExtensionGlue glue;
    for (letter_type a = 0; a < ta.size(); ++a) {
      for (letter_type b = 0; b < ua.size(); ++b) {
        if (split->b0[b]) {
          continue;
        }
        glue.sigma[{ta.token(a), ua.token(b)}] = t_word(s.product(a_el[a], b_el[b]));
        glue.pi[{ua.token(b), ta.token(a)}]    = t_word(s.product(b_el[b], a_el[a]));
      }
    }
    for (std::size_t k = 0; k < u.system.size(); ++k) {
      if (!split->q0[k]) {
        continue;
      }
      for (auto const* side : {&u.system.rule(k).lhs, &u.system.rule(k).rhs}) {
        if (!avoids(*side, split->b0) || glue.rho.count(*side) != 0) {
          continue;
        }
        std::size_t x = b_el[side->front()];
        for (std::size_t i = 1; i < side->size(); ++i) {
          x = s.product(x, b_el[(*side)[i]]);
        }
        glue.rho[*side] = t_word(x);
      }
    }
    return glue;
  }

  ConstructionOutput ideal_extension(ConstructionOutput const&  t,
                                     ConstructionOutput const&  u,
                                     IdealExtensionGlue const& glue) {
    auto split = find_zero_split(u.system, u.certificate.zero);
    if (!split) {
      throw InputError("the quotient system has no zero letter with rules 0x -> 0 and "
                       "x0 -> 0; run adjoin_zero on it first");
    }
    auto const& ta = t.system.alphabet();
    auto const& ua = u.system.alphabet();

    Alphabet v = ta;
    for (letter_type b = 0; b < ua.size(); ++b) {
      if (split->b0[b]) {
        continue;
      }
      if (v.contains(ua.token(b))) {
        throw InputError("letter \"" + ua.token(b) + "\" occurs in both systems");
      }
      v.add(ua.token(b));
    }
    auto from_u = [&](Word const& w) { return translate(w, ua, v); };

    RuleSet rules;
    for (auto const& r : t.system.rules()) {
      rules.add(r.lhs, r.rhs);
    }
    for (std::size_t k = 0; k < u.system.size(); ++k) {
      if (!split->q0[k]) {
        rules.add(from_u(u.system.rule(k).lhs), from_u(u.system.rule(k).rhs));
      }
    }
    for (std::size_t k = 0; k < u.system.size(); ++k) {
      if (!split->q0[k]) {
        continue;
      }
      for (auto const* side : {&u.system.rule(k).lhs, &u.system.rule(k).rhs}) {
        if (!avoids(*side, split->b0)) {
          continue;
        }
        auto it = glue.rho.find(*side);
        if (it == glue.rho.end()) {
          throw InputError("glue has no value for rho(" + to_string(ua, *side) + ")");
        }
        validate_word(ta, it->second);
        rules.add(from_u(*side), it->second);
      }
    }
    for (letter_type a = 0; a < ta.size(); ++a) {
      for (letter_type b = 0; b < ua.size(); ++b) {
        if (split->b0[b]) {
          continue;
        }
        auto it = glue.sigma.find({ta.token(a), ua.token(b)});
        if (it == glue.sigma.end()) {
          throw InputError("glue has no value for sigma(" + ta.token(a) + ", " + ua.token(b) + ")");
        }
        validate_word(ta, it->second);
        rules.add({a, v.letter(ua.token(b))}, it->second);
      }
    }
    for (letter_type b = 0; b < ua.size(); ++b) {
      if (split->b0[b]) {
        continue;
      }
      for (letter_type a = 0; a < ta.size(); ++a) {
        auto it = glue.pi.find({ua.token(b), ta.token(a)});
        if (it == glue.pi.end()) {
          throw InputError("glue has no value for pi(" + ua.token(b) + ", " + ta.token(a) + ")");
        }
        validate_word(ta, it->second);
        rules.add({v.letter(ua.token(b)), a}, it->second);
      }
    }

    Witness witness = t.witness;
    for (auto const& e : u.witness) {
      if (e.word == Word{split->zero}) {
        continue;
      }
      if (!avoids(e.word, split->b0)) {
        throw InputError("witness of " + e.element + " uses a zero letter");
      }
      witness.push_back({e.element, from_u(e.word)});
    }

    ConstructionOutput out{RewritingSystem(std::move(v), rules.take()), std::move(witness), {}, {}};
    out.certificate.kind          = CertificateKind::ideal_extension;
    out.certificate.small_letters = ta.tokens();
    out.certificate.aux           = u.system;
    out.provenance                = "ideal-extension " + digest(out.system);
    return out;
  }

  ConstructionOutput ideal_extension(FiniteSemigroup const&          s,
                                     std::vector<std::size_t> const& t_elements,
                                     ConstructionOutput const&       t,
                                     ConstructionOutput const&       u) {
    check_ideal(s, t_elements);
    if (find_zero_split(u.system, u.certificate.zero)) {
      return ideal_extension(t, u, derive_glue(s, t_elements, t, u));
    }
    WitnessEntry const* zero_entry = nullptr;
    for (auto const& e : u.witness) {
      if (!s.find(e.element)) {
        if (zero_entry != nullptr) {
          throw InputError("quotient witness has more than one entry outside S");
        }
        zero_entry = &e;
      }
    }
    if (zero_entry == nullptr) {
      throw InputError("quotient witness has no zero entry");
    }
    auto zeroed = adjoin_zero(u.system, zero_entry->word, u.witness,
                              u.system.alphabet().fresh_token("0"));
    return ideal_extension(t, zeroed, derive_glue(s, t_elements, t, zeroed));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  std::string rees_element_name(std::size_t i, std::string const& g, std::size_t lambda) {
    return "(" + std::to_string(i) + "," + g + "," + std::to_string(lambda) + ")";
  }

  namespace {

    ConstructionOutput rees_impl(ReesDatum const& d, bool with_zero) {
      auto const& gs = d.group_system;
      auto const& A  = gs.alphabet();
      auto const  I = d.i_size, L = d.lambda_size;
      if (I == 0 || L == 0) {
        throw InputError("I and Lambda must be non-empty");
      }
      if (d.matrix.size() != I * L) {
        throw InputError("sandwich matrix has " + std::to_string(d.matrix.size())
                         + " entries, expected Lambda x I = " + std::to_string(L * I));
      }
      auto check_element = [&](Word const& w, std::string const& what) {
        if (w.empty()) {
          throw InputError(what + " is empty");
        }
        validate_word(A, w);
        if (!is_irreducible(gs, w)) {
          throw InputError(what + " \"" + to_string(A, w) + "\" is not irreducible");
        }
      };
      for (std::size_t l = 0; l < L; ++l) {
        for (std::size_t i = 0; i < I; ++i) {
          if (auto const& p = d.matrix[l * I + i]) {
            check_element(*p, "matrix entry (" + std::to_string(l + 1) + ","
                                  + std::to_string(i + 1) + ")");
          } else if (!with_zero) {
            throw InputError("sandwich matrix has a zero entry at (" + std::to_string(l + 1)
                             + "," + std::to_string(i + 1) + "); use rees-zero");
          }
        }
      }
      for (std::size_t l = 0; l < L; ++l) {
        bool nonzero = false;
        for (std::size_t i = 0; i < I; ++i) {
          nonzero = nonzero || d.matrix[l * I + i].has_value();
        }
        if (!nonzero) {
          throw InputError("sandwich matrix is not regular: row " + std::to_string(l + 1)
                           + " is zero");
        }
      }
      for (std::size_t i = 0; i < I; ++i) {
        bool nonzero = false;
        for (std::size_t l = 0; l < L; ++l) {
          nonzero = nonzero || d.matrix[l * I + i].has_value();
        }
        if (!nonzero) {
          throw InputError("sandwich matrix is not regular: column " + std::to_string(i + 1)
                           + " is zero");
        }
      }

      Witness elements = d.group_elements;
      if (elements.empty()) {
        for (auto const& w : all_irreducibles(gs)) {
          elements.push_back({join_tokens(A, w, '.'), w});
        }
      } else {
        for (auto const& e : elements) {
          check_element(e.word, "group element " + e.element);
        }
      }
      auto mul = [&](Word const& x, Word const& y) { return normal_form(gs, concat(x, y)); };

      Word e;
      if (d.identity_word) {
        e = *d.identity_word;
        check_element(e, "identity word");
        if (mul(e, e) != e) {
          throw InputError("identity word \"" + to_string(A, e) + "\" is not idempotent");
        }
      } else {
        std::vector<Word> idempotents;
        for (auto const& g : elements) {
          if (mul(g.word, g.word) == g.word) {
            idempotents.push_back(g.word);
          }
        }
        if (idempotents.size() != 1) {
          throw InputError("group system has " + std::to_string(idempotents.size())
                           + " idempotent irreducibles; give identity_word");
        }
        e = idempotents.front();
      }

      std::string notes;
      // Bring a non-zero entry to (1,1).
      std::vector<std::size_t> row_of(L), col_of(I);
      for (std::size_t l = 0; l < L; ++l) {
        row_of[l] = l;
      }
      for (std::size_t i = 0; i < I; ++i) {
        col_of[i] = i;
      }
      if (!d.matrix[0]) {
        for (std::size_t k = 0; k < L * I; ++k) {
          if (d.matrix[k]) {
            auto l = k / I, i = k % I;
            std::swap(row_of[0], row_of[l]);
            std::swap(col_of[0], col_of[i]);
            notes += " swap-rows=1," + std::to_string(l + 1) + " swap-columns=1,"
                     + std::to_string(i + 1);
            break;
          }
        }
      }
      std::vector<std::optional<Word>> P(L * I);
      for (std::size_t l = 0; l < L; ++l) {
        for (std::size_t i = 0; i < I; ++i) {
          P[row_of[l] * I + col_of[i]] = d.matrix[l * I + i];
        }
      }
      // Rescale row 1 so that p_11 is the identity: (i, g, 1) -> (i, g p_11, 1).
      Word p11 = *P[0];
      if (p11 != e) {
        std::optional<Word> inverse;
        for (auto const& g : elements) {
          if (mul(p11, g.word) == e) {
            inverse = g.word;
            break;
          }
        }
        if (!inverse) {
          throw InputError("matrix entry \"" + to_string(A, p11) + "\" has no inverse");
        }
        for (std::size_t i = 0; i < I; ++i) {
          if (P[i]) {
            P[i] = mul(*inverse, *P[i]);
          }
        }
        notes += " rescale-row-1=" + to_string(A, *inverse);
      }

      Alphabet             X = A;
      std::vector<letter_type> b(I), c(L);
      for (std::size_t i = 0; i < I; ++i) {
        if (col_of[i] != 0) {
          auto base = i < d.b_tokens.size() ? d.b_tokens[i] : "b" + std::to_string(i + 1);
          b[col_of[i]] = X.add(X.fresh_token(base));
        }
      }
      for (std::size_t l = 0; l < L; ++l) {
        if (row_of[l] != 0) {
          auto base = l < d.c_tokens.size() ? d.c_tokens[l] : "c" + std::to_string(l + 1);
          c[row_of[l]] = X.add(X.fresh_token(base));
        }
      }
      auto zero_token = X.fresh_token(d.zero_token);
      auto o          = X.add(zero_token);

      // Products of letters and matrix entries; a zero entry makes the rhs 0.
      using Piece = std::optional<Word>;
      auto rhs    = [&](std::initializer_list<Piece> pieces) -> Word {
        Word w;
        for (auto const& p : pieces) {
          if (!p) {
            return {o};
          }
          w.insert(w.end(), p->begin(), p->end());
        }
        return w;
      };
      auto p = [&](std::size_t l, std::size_t i) -> Piece { return P[l * I + i]; };

      RuleSet rules;
      for (auto const& r : gs.rules()) {
        rules.add(r.lhs, r.rhs);
      }
      for (std::size_t i = 1; i < I; ++i) {
        rules.add(concat({b[i]}, e), {b[i]});
      }
      for (std::size_t l = 1; l < L; ++l) {
        rules.add(concat(e, {c[l]}), {c[l]});
      }
      for (std::size_t i = 1; i < I; ++i) {
        rules.add(concat(e, {b[i]}), rhs({p(0, i)}));
      }
      for (std::size_t l = 1; l < L; ++l) {
        rules.add(concat({c[l]}, e), rhs({p(l, 0)}));
      }
      for (std::size_t l = 1; l < L; ++l) {
        for (std::size_t i = 1; i < I; ++i) {
          rules.add({c[l], b[i]}, rhs({p(l, i)}));
        }
      }
      for (letter_type a = 0; a < A.size(); ++a) {
        for (std::size_t i = 1; i < I; ++i) {
          rules.add({a, b[i]}, rhs({Word{a}, p(0, i)}));
        }
      }
      for (letter_type a = 0; a < A.size(); ++a) {
        for (std::size_t l = 1; l < L; ++l) {
          rules.add({c[l], a}, rhs({p(l, 0), Word{a}}));
        }
      }
      for (std::size_t l = 1; l < L; ++l) {
        for (std::size_t m = 1; m < L; ++m) {
          rules.add({c[l], c[m]}, rhs({p(l, 0), Word{c[m]}}));
        }
      }
      for (std::size_t i = 1; i < I; ++i) {
        for (std::size_t j = 1; j < I; ++j) {
          rules.add({b[i], b[j]}, rhs({Word{b[i]}, p(0, j)}));
        }
      }
      for (letter_type x = 0; x < o; ++x) {
        rules.add({o, x}, {o});
        rules.add({x, o}, {o});
      }
      rules.add({o, o}, {o});

      Witness witness;
      for (std::size_t i = 0; i < I; ++i) {
        for (auto const& g : elements) {
          for (std::size_t l = 0; l < L; ++l) {
            auto ni = col_of[i], nl = row_of[l];
            Word gw = nl == 0 ? mul(g.word, p11) : g.word;
            Word w;
            if (ni != 0) {
              w.push_back(b[ni]);
            }
            if (gw != e || (ni == 0 && nl == 0)) {
              w.insert(w.end(), gw.begin(), gw.end());
            }
            if (nl != 0) {
              w.push_back(c[nl]);
            }
            witness.push_back({rees_element_name(i + 1, g.element, l + 1), std::move(w)});
          }
        }
      }

      ConstructionOutput out;
      out.certificate.kind          = CertificateKind::rees;
      out.certificate.small_letters = A.tokens();
      if (with_zero) {
        witness.push_back({d.zero_element, {o}});
        out.system           = RewritingSystem(std::move(X), rules.take());
        out.certificate.zero = zero_token;
        out.provenance       = "rees-zero " + digest(out.system) + notes;
      } else {
        // No zero entries: the letter 0 occurs only in its own rules.
        auto              tokens = X.tokens();
        std::vector<Rule> kept;
        for (auto& r : rules.take()) {
          if (std::find(r.lhs.begin(), r.lhs.end(), o) == r.lhs.end()
              && std::find(r.rhs.begin(), r.rhs.end(), o) == r.rhs.end()) {
            kept.push_back(std::move(r));
          }
        }
        tokens.pop_back();
        out.system     = RewritingSystem(Alphabet(std::move(tokens)), std::move(kept));
        out.provenance = "rees-simple " + digest(out.system) + notes;
      }
      out.witness = std::move(witness);
      return out;
    }

  }  // namespace

  ConstructionOutput rees_zero(ReesDatum const& datum) {
    return rees_impl(datum, true);
  }

  ConstructionOutput rees_simple(ReesDatum const& datum) {
    return rees_impl(datum, false);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  std::size_t adaptive_ball_length(std::size_t alphabet_size,
                                   std::size_t cap,
                                   std::size_t word_budget) {
    for (std::size_t len = cap; len > 1; --len) {
      if (ball_size(alphabet_size, len) <= word_budget) {
        return len;
      }
    }
    return 1;
  }

  VerificationReport certify(ConstructionOutput const&  out,
                             std::optional<std::size_t> ball_len,
                             std::size_t                word_budget,
                             std::size_t                step_budget) {
    VerificationReport report;
    auto               len = ball_len ? *ball_len
                                      : adaptive_ball_length(out.system.alphabet().size(), 6, word_budget);
    auto order        = make_comparator(out.system, out.certificate);
    report.ball       = verify_decrease_on_ball(out.system, *order, len, word_budget);
    report.confluence = check_local_confluence(out.system, step_budget);
    report.verdict    = completeness_verdict(report.ball, report.confluence);
    return report;
  }

  TableReport verify_against_table(ConstructionOutput const& out, FiniteSemigroup const& s) {
    std::vector<Word const*> words(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      words[x] = find_witness(out.witness, s.name(x));
      if (words[x] == nullptr) {
        throw InputError("element " + s.name(x) + " has no witness");
      }
    }
    TableReport report;
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        ++report.checked;
        auto const& expected = *words[s.product(x, y)];
        Word        actual;
        try {
          actual = normal_form(out.system, concat(*words[x], *words[y]));
        } catch (BudgetExhausted const&) {
          actual.clear();
        }
        if (actual != expected) {
          report.mismatches.push_back({s.name(x), s.name(y), expected, actual});
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite regular semigroups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Pipeline {
     public:
      Pipeline(FiniteSemigroup const& s, std::map<std::string, GroupSystem> const& overrides)
          : s_(s), overrides_(overrides), zero_name_(fresh_name(s, "0")) {}

      // Elements are indices of S, ascending; the witness is named by S.
      ConstructionOutput build(std::vector<std::size_t> const& elements) {
        auto sub = subsemigroup(s_, elements);
        auto g   = green_classes(sub);
        if (g.j_count == 1) {
          auto rc  = coordinatize(sub, SimplicityKind::completely_simple);
          auto out = rees_simple(datum(sub, rc));
          relabel(out, sub, rc);
          check(out, sub, "rees-simple");
          return out;
        }
        auto                     top = g.maximal_j_classes().front();
        std::vector<std::size_t> t_sub, t_s;
        for (std::size_t x = 0; x < sub.size(); ++x) {
          if (g.j[x] != top) {
            t_sub.push_back(x);
            t_s.push_back(elements[x]);
          }
        }
        auto t_out = build(t_s);

        auto pf  = principal_factor(sub, g.j_class_elements(top), zero_name_);
        auto rc  = coordinatize(pf.semigroup, SimplicityKind::completely_zero_simple);
        auto u   = rees_zero(datum(pf.semigroup, rc));
        relabel(u, pf.semigroup, rc);
        check(u, pf.semigroup, "rees-zero");

        auto out = ideal_extension(sub, t_sub, t_out, u);
        check(out, sub, "ideal-extension");
        return out;
      }

      std::vector<PipelineLevel> levels;

     private:
      ReesDatum datum(FiniteSemigroup const& f, ReesCoordinatization const& rc) {
        ReesDatum d;
        auto      e    = rc.group_embedding.at(*rc.group.identity());
        auto      over = overrides_.find(f.name(e));
        if (over != overrides_.end()) {
          d.group_system = over->second.system;
          for (auto x : rc.group_embedding) {
            auto const* w = find_witness(over->second.witness, f.name(x));
            if (w == nullptr) {
              throw InputError("subgroup system for " + f.name(e) + " has no witness for "
                               + f.name(x));
            }
            d.group_elements.push_back({f.name(x), *w});
          }
        } else {
          auto cf        = cayley_fcrs(rc.group);
          d.group_system = std::move(cf.system);
          for (std::size_t k = 0; k < rc.group.size(); ++k) {
            d.group_elements.push_back({rc.group.name(k), cf.witness[k]});
          }
        }
        d.identity_word = d.group_elements.at(*rc.group.identity()).word;
        d.i_size        = rc.i_size;
        d.lambda_size   = rc.lambda_size;
        for (auto const& entry : rc.matrix) {
          d.matrix.push_back(entry ? std::optional<Word>(d.group_elements.at(*entry).word)
                                   : std::nullopt);
        }
        for (auto r : rc.r_reps) {
          d.b_tokens.push_back(f.name(r));
        }
        for (auto q : rc.q_reps) {
          d.c_tokens.push_back(f.name(q));
        }
        if (rc.zero) {
          d.zero_token   = f.name(*rc.zero);
          d.zero_element = f.name(*rc.zero);
        }
        return d;
      }

      // Rees witness names "(i,g,lambda)" become element names of f.
      static void relabel(ConstructionOutput& out, FiniteSemigroup const& f,
                          ReesCoordinatization const& rc) {
        Witness named;
        for (std::size_t x = 0; x < f.size(); ++x) {
          std::string key = f.name(x);
          if (auto const& c = rc.coords[x]) {
            key = rees_element_name(c->i + 1, rc.group.name(c->g), c->lambda + 1);
          }
          auto const* w = find_witness(out.witness, key);
          if (w == nullptr) {
            throw ConstructionBug("Rees witness misses " + key);
          }
          named.push_back({f.name(x), *w});
        }
        out.witness = std::move(named);
      }

      void check(ConstructionOutput const& out, FiniteSemigroup const& f,
                 std::string const& construction) {
        auto          report = certify(out);
        PipelineLevel level;
        for (auto const& nm : f.names()) {
          level.label += (level.label.empty() ? "" : " ") + nm;
        }
        level.construction = construction;
        level.letters      = out.system.alphabet().size();
        level.rules        = out.system.size();
        level.ball         = report.ball.max_len;
        level.pairs        = report.confluence.pairs.size();
        level.verdict      = report.verdict;
        levels.push_back(level);
        if (report.verdict != Completeness::complete_certified_at_scale) {
          throw ConstructionBug(construction + " system for {" + level.label + "} is "
                                + std::string(to_string(report.verdict)) + ": "
                                + std::to_string(report.confluence.unresolved())
                                + " unresolved pairs, "
                                + std::to_string(report.ball.violations.size())
                                + " order violations");
        }
        auto table = verify_against_table(out, f);
        if (!table.mismatches.empty()) {
          auto const& m = table.mismatches.front();
          throw ConstructionBug(construction + " system for {" + level.label
                                + "} multiplies " + m.x + "*" + m.y + " wrongly");
        }
      }

      FiniteSemigroup const&                    s_;
      std::map<std::string, GroupSystem> const& overrides_;
      std::string                               zero_name_;
    };

  }  // namespace

  PipelineResult regular_pipeline(FiniteSemigroup const&                    s,
                                  std::map<std::string, GroupSystem> const& overrides) {
    if (!is_regular(s)) {
      throw InputError("semigroup is not regular");
    }
    Pipeline                 p(s, overrides);
    std::vector<std::size_t> all(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      all[x] = x;
    }
    PipelineResult result;
    result.output = p.build(all);
    result.levels = std::move(p.levels);
    result.output.provenance = "regular " + result.output.provenance;
    return result;
  }

}  // namespace fcrs
