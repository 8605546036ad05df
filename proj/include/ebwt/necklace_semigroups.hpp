#ifndef EBWT_NECKLACE_SEMIGROUPS_HPP
#define EBWT_NECKLACE_SEMIGROUPS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ebwt/error.hpp"
#include "ebwt/semigroup.hpp"
#include "ebwt/transform.hpp"
#include "ebwt/words.hpp"

namespace ebwt {

using LetterActions = std::map<Letter, PartialInjection>;

// The letters acting by conjugation on the necklace of a primitive word.
// The necklace is identified with [|u|] in lexicographic order; letter a maps
// each rotation ax to xa.
inline LetterActions letter_actions(WordView u) {
  const Necklace necklace = lyndon_representative(u);
  const std::size_t n = necklace.size();
  std::vector<std::size_t> offsets(n);
  for (std::size_t i = 0; i < n; ++i) {
    offsets[i] = i;
  }
  const Word& lyn = necklace.lyndon();
  std::sort(offsets.begin(), offsets.end(), [&](std::size_t a, std::size_t b) {
    return omega_compare(lyn, lyn, a, b) < 0;
  });
  std::vector<std::size_t> rank_of_offset(n);
  for (std::size_t r = 0; r < n; ++r) {
    rank_of_offset[offsets[r]] = r;
  }
  LetterActions actions;
  for (Letter a : lyn) {
    actions.try_emplace(a, n);
  }
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t off = offsets[r];
    actions.at(lyn[off]).set(r, rank_of_offset[(off + 1) % n]);
  }
  return actions;
}

// S(u): the subsemigroup of POI_n generated by the letter actions.
inline FiniteSemigroup<PartialInjection> action_semigroup(
    WordView u, std::size_t guard = kDefaultClosureGuard) {
  return generate_closure(letter_actions(u), guard);
}

// Complete deterministic automaton over letters 0..k-1 (transitions[s][a]).
struct Automaton {
  std::size_t initial = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<std::size_t>> transitions;
  std::size_t states() const noexcept { return transitions.size(); }
};

// Recognizer of {u^m : m >= 1} over letters 0..k-1. States 0 (start),
// 1..n-1 (inside a copy of u), n (accept), n+1 (sink).
inline Automaton power_language_automaton(WordView u, std::size_t k) {
  detail::require_nonempty(u, "power_language_automaton");
  const std::size_t n = u.size();
  const std::size_t sink = n + 1;
  Automaton dfa;
  dfa.accepting.assign(n + 2, false);
  dfa.accepting[n] = true;
  dfa.transitions.assign(n + 2, std::vector<std::size_t>(k, sink));
  auto advance = [&](std::size_t from, std::size_t pos) {
    dfa.transitions[from][u[pos]] = pos + 1;
  };
  advance(0, 0);
  for (std::size_t i = 1; i < n; ++i) {
    advance(i, i);
  }
  advance(n, 0);
  return dfa;
}

// Moore partition refinement; returns the minimal automaton of the reachable
// part.
inline Automaton minimize(const Automaton& dfa) {
  const std::size_t k = dfa.transitions.empty() ? 0 : dfa.transitions[0].size();
  // reachable states
  std::vector<std::size_t> order{dfa.initial};
  std::vector<bool> reached(dfa.states(), false);
  reached[dfa.initial] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t t : dfa.transitions[order[i]]) {
      if (!reached[t]) {
        reached[t] = true;
        order.push_back(t);
      }
    }
  }
  std::vector<std::size_t> cls(dfa.states(), 0);
  for (std::size_t s : order) {
    cls[s] = dfa.accepting[s] ? 1 : 0;
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signature;
    std::vector<std::size_t> next(dfa.states(), 0);
    for (std::size_t s : order) {
      std::vector<std::size_t> sig{cls[s]};
      for (std::size_t t : dfa.transitions[s]) {
        sig.push_back(cls[t]);
      }
      next[s] = signature.try_emplace(std::move(sig), signature.size())
                    .first->second;
    }
    const bool stable = signature.size() == classes;
    classes = signature.size();
    cls = std::move(next);
    if (stable) {
      break;
    }
  }
  Automaton out;
  out.initial = cls[dfa.initial];
  out.accepting.assign(classes, false);
  out.transitions.assign(classes, std::vector<std::size_t>(k, 0));
  for (std::size_t s : order) {
    out.accepting[cls[s]] = dfa.accepting[s];
    for (std::size_t a = 0; a < k; ++a) {
      out.transitions[cls[s]][a] = cls[dfa.transitions[s][a]];
    }
  }
  return out;
}

struct SyntacticSemigroup {
  FiniteSemigroup<Transformation> semigroup;
  Automaton automaton;  // minimal recognizer of the powers of u
  bool primitive;       // the isomorphism with S(u) needs a primitive u
};

// Syntactic semigroup of the language of positive powers of u over the
// letters of u, realised as the transition semigroup of its minimal
// recognizer.
inline SyntacticSemigroup syntactic_semigroup(
    WordView u, std::size_t guard = kDefaultClosureGuard) {
  detail::require_nonempty(u, "syntactic_semigroup");
  const std::size_t k =
      static_cast<std::size_t>(*std::max_element(u.begin(), u.end())) + 1;
  Automaton dfa = minimize(power_language_automaton(u, k));
  std::map<Letter, Transformation> gens;
  for (Letter a : u) {
    if (gens.contains(a)) {
      continue;
    }
    std::vector<std::uint32_t> image(dfa.states());
    for (std::size_t s = 0; s < dfa.states(); ++s) {
      image[s] = static_cast<std::uint32_t>(dfa.transitions[s][a]);
    }
    gens.emplace(a, Transformation(std::move(image)));
  }
  return SyntacticSemigroup{generate_closure(gens, guard), std::move(dfa),
                            is_primitive(u)};
}

// S(M) together with its restrictions to the cycles of pi(BW(M)).
struct MultisetSemigroup {
  FiniteSemigroup<PartialInjection> semigroup;
  std::vector<std::vector<std::size_t>> cycles;  // each sorted ascending
  std::vector<Word> cycle_words;                  // Lyndon word per cycle
  // for cycle j, the subsemigroup of POI_{C_j} generated by the restrictions
  // of the letters of cycle_words[j]
  std::vector<FiniteSemigroup<PartialInjection>> projections;
  // restriction tuple of each element of `semigroup`
  std::vector<std::vector<PartialInjection>> restrictions;
  bool restriction_injective = false;
};

inline MultisetSemigroup semigroup_of_multiset(
    const NecklaceMultiset& m, std::size_t guard = kDefaultClosureGuard) {
  if (m.empty()) {
    throw InputError("semigroup_of_multiset: empty multiset");
  }
  const Word w = transform(m);
  const StandardPermutation pi(w);
  LetterActions gens;
  for (Letter a = 0; a < pi.letter_bound(); ++a) {
    const auto [first, last] = pi.domain(a);
    if (first == last) {
      continue;
    }
    PartialInjection f(pi.size());
    for (std::size_t i = first; i < last; ++i) {
      f.set(i, pi(i));
    }
    gens.emplace(a, std::move(f));
  }
  MultisetSemigroup out{generate_closure(gens, guard), {}, {}, {}, {}, false};

  for (auto cycle : pi.cycles()) {
    out.cycle_words.push_back(
        lyndon_representative(cycle_word(pi, cycle)).lyndon());
    std::sort(cycle.begin(), cycle.end());
    out.cycles.push_back(std::move(cycle));
  }
  for (std::size_t j = 0; j < out.cycles.size(); ++j) {
    LetterActions restricted;
    for (Letter a : out.cycle_words[j]) {
      if (!restricted.contains(a)) {
        restricted.emplace(a, gens.at(a).restrict_to(out.cycles[j]));
      }
    }
    out.projections.push_back(generate_closure(restricted, guard));
  }

  std::unordered_set<std::string> seen;
  out.restriction_injective = true;
  for (const auto& e : out.semigroup.elements()) {
    std::vector<PartialInjection> tuple;
    std::string key;
    for (const auto& cycle : out.cycles) {
      tuple.push_back(e.restrict_to(cycle));
      for (std::uint32_t y : tuple.back().raw()) {
        key.append(std::to_string(y)).push_back(',');
      }
      key.push_back('|');
    }
    if (!seen.insert(std::move(key)).second) {
      out.restriction_injective = false;
    }
    out.restrictions.push_back(std::move(tuple));
  }
  return out;
}

}  // namespace ebwt

#endif  // EBWT_NECKLACE_SEMIGROUPS_HPP
