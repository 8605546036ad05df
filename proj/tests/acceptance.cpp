// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time bounds are wall-clock and pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ebwt/ebwt.hpp"
#include "oracles.hpp"

using namespace ebwt;
using oracle::s;
using oracle::w;

namespace {

using Clock = std::chrono::steady_clock;
using Cycles = std::vector<std::vector<std::size_t>>;

constexpr double kC1Millis = 1.0;
constexpr double kC4Seconds = 30.0;
constexpr double kC6Seconds = 60.0;
constexpr double kC7Seconds = 120.0;
constexpr double kC9WitnessSeconds = 5.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

NecklaceMultiset multiset(std::initializer_list<const char*> lyndons) {
  NecklaceMultiset m;
  for (const char* x : lyndons) m.add(Necklace::from_lyndon(w(x)));
  return m;
}

Word blocks(const std::string& greek) {
  std::string out;
  for (char c : greek) out += c == 'A' ? "ab" : "ba";
  return w(out);
}

std::vector<Word> primitive_words(std::size_t max_len, std::size_t k) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (auto& x : oracle::all_words(n, k)) {
      if (oracle::primitive(x)) out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<Word> expand(const NecklaceMultiset& m) {
  std::vector<Word> out;
  for (const auto& e : m.entries()) {
    for (std::size_t i = 0; i < e.multiplicity; ++i) out.push_back(e.necklace.lyndon());
  }
  return out;
}

Outcome c1() {
  Outcome o;
  const auto start = Clock::now();
  const auto m = multiset({"aab", "ab", "abb"});
  const Word bw = transform(m);
  const StandardPermutation pi(bw);
  const auto back = inverse_transform(bw);
  const double ms = seconds_since(start) * 1000.0;
  o.expect(s(bw) == "babbaaba", "transform gave " + s(bw));
  o.expect(std::vector<std::size_t>(pi.image().begin(), pi.image().end()) ==
               std::vector<std::size_t>{1, 4, 5, 7, 0, 2, 3, 6},
           "wrong permutation image");
  o.expect(pi.cycles() == Cycles{{0, 1, 4}, {2, 5}, {3, 7, 6}}, "wrong cycles");
  o.expect(back == m, "inverse did not recover the multiset");
  o.expect(ms < kC1Millis, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome c2() {
  Outcome o;
  const Word v1 = blocks("BBBBABBB");
  const StandardPermutation p1(v1);
  o.expect(p1.cycles() ==
               Cycles{{0, 1, 3, 7, 15, 14, 12, 9, 2, 5, 11, 6, 13, 10, 4, 8}},
           "first cycle structure differs");
  o.expect(inverse_transform(v1) == multiset({"aaaabbbbaababbab"}),
           "first inverse differs");

  const Word v2 = blocks("BAABBAAB");
  const StandardPermutation p2(v2);
  o.expect(p2.cycles() ==
               Cycles{{0, 1, 2, 4, 9, 3, 7, 15, 14, 13, 11, 6, 12, 8}, {5, 10}},
           "second cycle structure differs");
  o.expect(inverse_transform(v2) == multiset({"aaaabaabbbbabb", "ab"}),
           "second inverse differs");
  return o;
}

Outcome c3() {
  Outcome o;
  o.expect(s(least_debruijn_word(2, 5)) ==
               "a" "aaaab" "aaabb" "aabab" "aabbb" "ababb" "abbbb" "b",
           "span-5 binary word differs");
  o.expect(s(least_debruijn_word(3, 3)) ==
               "a" "aab" "aac" "abb" "abc" "acb" "acc" "b" "bbc" "bcc" "c",
           "span-3 ternary word differs");
  const StandardPermutation p2(oracle::power(w("ab"), 16));
  o.expect(p2.cycles() == Cycles{{0},
                                 {1, 2, 4, 8, 16},
                                 {3, 6, 12, 24, 17},
                                 {5, 10, 20, 9, 18},
                                 {7, 14, 28, 25, 19},
                                 {11, 22, 13, 26, 21},
                                 {15, 30, 29, 27, 23},
                                 {31}},
           "cycles of pi((ab)^16) differ");
  const StandardPermutation p3(oracle::power(w("abc"), 9));
  o.expect(p3.cycles() == Cycles{{0},
                                 {1, 3, 9},
                                 {2, 6, 18},
                                 {4, 12, 10},
                                 {5, 15, 19},
                                 {7, 21, 11},
                                 {8, 24, 20},
                                 {13},
                                 {14, 16, 22},
                                 {17, 25, 23},
                                 {26}},
           "cycles of pi((abc)^9) differ");
  return o;
}

Outcome c4() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& x : oracle::all_words(n, 2)) {
      ++checked;
      if (transform(inverse_transform(x)) != x) {
        o.fail("round trip failed on " + s(x));
      }
    }
  }
  const double secs = seconds_since(start);
  o.expect(checked == 8190, "checked " + std::to_string(checked) + " words");
  o.expect(secs < kC4Seconds, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome c5() {
  Outcome o;
  for (std::size_t n : {2, 3}) {
    const auto all = enumerate_gamma(2, n, 1000);
    std::set<std::vector<Word>> images;
    std::size_t singletons = 0;
    for (const auto& v : all) {
      const auto set = debruijn_set_from_gamma(v);
      o.expect(is_debruijn_set(set.necklaces(), 2, n),
               "not a de Bruijn set: " + s(v.word()));
      o.expect(transform(set.necklaces()) == v.word(),
               "re-transform differs: " + s(v.word()));
      images.insert(expand(set.necklaces()));
      if (set.necklaces().count() == 1) ++singletons;
    }
    o.expect(images.size() == all.size(), "map not injective at n=" + std::to_string(n));
    if (n == 3) {
      o.expect(all.size() == 16, "Gamma_{2,3} has " + std::to_string(all.size()));
      o.expect(singletons == 2, std::to_string(singletons) + " singletons");
      o.expect(count_debruijn_words(2, 3) == 2, "count formula differs");
    }
  }
  return o;
}

Outcome c6() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t pairs = 0;
  for (std::size_t k : {2, 3, 4}) {
    std::size_t kn = k;
    for (std::size_t n = 1; kn <= (std::size_t{1} << 16); ++n, kn *= k) {
      ++pairs;
      if (least_debruijn_word(k, n) != lyndon_concatenation_oracle(k, n)) {
        o.fail("mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  }
  const double secs = seconds_since(start);
  // n <= 16, 10, 8
  o.expect(pairs == 34, std::to_string(pairs) + " pairs checked");
  o.expect(secs < kC6Seconds, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome c7() {
  Outcome o;
  const auto start = Clock::now();
  std::vector<Word> words = primitive_words(6, 2);
  for (auto& u : primitive_words(4, 3)) words.push_back(std::move(u));
  for (const auto& u : words) {
    const auto su = syntactic_semigroup(u);
    if (!letter_induced_isomorphic(su.semigroup, action_semigroup(u))) {
      o.fail("not isomorphic for " + s(u));
    }
    for (std::size_t off = 1; off < u.size(); ++off) {
      const auto conj = syntactic_semigroup(oracle::rotation(u, off));
      if (!letter_induced_isomorphic(su.semigroup, conj.semigroup)) {
        o.fail("conjugate differs for " + s(u));
      }
    }
  }
  const double secs = seconds_since(start);
  o.expect(secs < kC7Seconds, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome c8() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<std::size_t> alphabet(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    NecklaceMultiset m;
    const std::size_t k = alphabet(rng);
    const int c = count(rng);
    for (int i = 0; i < c; ++i) {
      m.add(Necklace::from_lyndon(oracle::random_lyndon(rng, 5, k)));
    }
    const auto sm = semigroup_of_multiset(m);
    o.expect(sm.restriction_injective, "restriction map not injective");
    for (std::size_t j = 0; j < sm.cycles.size(); ++j) {
      if (!letter_induced_isomorphic(sm.projections[j],
                                     action_semigroup(sm.cycle_words[j]))) {
        o.fail("projection " + std::to_string(j) + " differs for " +
               s(sm.cycle_words[j]));
      }
    }
  }
  return o;
}

Outcome c9() {
  Outcome o;
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const auto& x : oracle::all_words(n, 2)) {
      if (distinct_factors(x) != oracle::distinct_factors(x)) {
        o.fail("count differs on " + s(x));
      }
    }
  }
  for (std::size_t n = 1; n <= 16; ++n) {
    const std::uint64_t f = max_factors_exhaustive(n, 2).value;
    if (n > 2) {
      o.expect(f <= factor_occurrences(n) - repeated_factor_lower_bound(n, 2),
               "upper envelope fails at n=" + std::to_string(n));
      const auto wit = debruijn_factor_witness(n, 2);
      o.expect(f >= wit.bound && wit.distinct >= wit.bound,
               "lower envelope fails at n=" + std::to_string(n));
    } else {
      o.expect(f == factor_occurrences(n), "f(" + std::to_string(n) + ")");
    }
  }
  const auto start = Clock::now();
  for (std::size_t k : {2, 3}) {
    for (std::size_t n = k + 1; n <= 4096; n = n < 512 ? n + 1 : n * 2) {
      const auto wit = debruijn_factor_witness(n, k);
      if (wit.distinct < wit.bound) {
        o.fail("witness fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  const double secs = seconds_since(start);
  o.expect(secs < kC9WitnessSeconds, "witnesses took " + std::to_string(secs) + " s");
  return o;
}

// Condensed property sweep over every module.
Outcome c10() {
  Outcome o;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> count(1, 4);

  // primitivity and roots: u^omega = root^omega, shift order = |root|
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& x : oracle::all_words(n, 2)) {
      o.expect(root(x) == oracle::root(x), "root differs on " + s(x));
      Word y = conjugate_shift(x);
      std::size_t t = 1;
      while (y != x) {
        y = conjugate_shift(y);
        ++t;
      }
      o.expect(t == oracle::root(x).size(), "shift order differs on " + s(x));
    }
  }

  // rotation table properties
  for (int trial = 0; trial < 300; ++trial) {
    NecklaceMultiset m;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) {
      m.add(Necklace::from_lyndon(oracle::random_lyndon(rng, 6, 2 + trial % 2)));
    }
    const Word bw = transform(m);
    const StandardPermutation pi(bw);
    const auto table = build_table(bw);
    const auto& rows = table.rows;
    o.expect(rows == oracle::multiset_table(expand(m)), "table differs");
    std::vector<std::size_t> cycle_len(rows.size());
    for (const auto& cyc : pi.cycles()) {
      for (std::size_t i : cyc) cycle_len[i] = cyc.size();
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      o.expect(rows[pi(i)] == conjugate_shift(rows[i]), "pi is not the shift");
      o.expect(oracle::root(rows[i]).size() == cycle_len[i], "cycle length");
      o.expect(word_action(pi, i, rows[i]) == std::optional<std::size_t>{i},
               "row word does not fix its index");
      o.expect(rows[i].back() == bw[i], "last column differs");
      const Word ri = oracle::root(rows[i]);
      if (oracle::lyndon(ri)) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
          if (rows[j] != rows[i]) {
            o.expect(rows[i] < oracle::root(rows[j]), "Lyndon row order");
          }
        }
      }
    }
  }

  // necklace action: x.v = wv, and one defined word per length
  for (const auto& u : primitive_words(6, 2)) {
    const auto acts = letter_actions(u);
    std::vector<Word> nk;
    for (std::size_t off = 0; off < u.size(); ++off) nk.push_back(oracle::rotation(u, off));
    std::sort(nk.begin(), nk.end());
    auto act = [&](std::size_t x, const Word& y) -> std::optional<std::size_t> {
      std::optional<std::size_t> at = x;
      for (Letter a : y) {
        auto it = acts.find(a);
        if (it == acts.end() || !(at = it->second(*at))) return std::nullopt;
      }
      return at;
    };
    for (std::size_t i = 0; i < nk.size(); ++i) {
      const Word& x = nk[i];
      for (std::size_t cut = 0; cut <= x.size(); ++cut) {
        Word v(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(cut));
        Word wv(x.begin() + static_cast<std::ptrdiff_t>(cut), x.end());
        wv.insert(wv.end(), v.begin(), v.end());
        const auto target = std::lower_bound(nk.begin(), nk.end(), wv) - nk.begin();
        o.expect(act(i, v) == std::optional<std::size_t>(static_cast<std::size_t>(target)),
                 "conjugation action differs on " + s(x));
      }
      for (std::size_t t = 1; t <= 2 * x.size() && t <= 10; ++t) {
        std::size_t defined = 0;
        for (const auto& y : oracle::all_words(t, 2)) {
          if (act(i, y)) {
            ++defined;
            for (std::size_t p = 0; p < t; ++p) {
              o.expect(y[p] == x[p % x.size()], "defined word is not a prefix");
            }
          }
        }
        o.expect(defined == 1, "defined words per length");
      }
    }
    const auto sg = action_semigroup(u);
    for (const auto& e : sg.elements()) {
      o.expect(e.is_order_preserving(), "element not order preserving");
    }
  }

  // Gamma words: block counts and pi structure, k=2 n=4
  for (const auto& v : enumerate_gamma(2, 4, 1000)) {
    const auto set = debruijn_set_from_gamma(v);
    o.expect(set.necklaces().total_length() == 16, "total length");
    const StandardPermutation pi(v.word());
    for (Letter a = 0; a < 2; ++a) {
      std::vector<int> hits(8, 0);
      for (std::size_t x : pi.range(a)) ++hits[x / 2];
      o.expect(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }),
               "range misses a block");
    }
    for (std::size_t x = 0; x < 16; ++x) {
      Word digits{static_cast<Letter>(x >> 3 & 1), static_cast<Letter>(x >> 2 & 1),
                  static_cast<Letter>(x >> 1 & 1), static_cast<Letter>(x & 1)};
      o.expect(word_action(pi, x, digits).has_value(), "base-k prefix undefined");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"C1 small example transform, permutation and inverse (< 1 ms)", c1},
      {"C2 Gamma word inversions with cycle structure", c2},
      {"C3 least de Bruijn words and power permutations", c3},
      {"C4 exhaustive binary round trip to length 12 (< 30 s)", c4},
      {"C5 Gamma words and de Bruijn sets for k=2, n=2,3", c5},
      {"C6 least word equals the Lyndon oracle, k^n <= 65536 (< 60 s)", c6},
      {"C7 syntactic and action semigroups isomorphic (< 120 s)", c7},
      {"C8 multiset semigroups embed in their projections", c8},
      {"C9 factor counts, envelopes and witnesses to 4096 (< 5 s)", c9},
      {"C10 property sweep across modules", c10},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (o.pass) {
      std::printf("PASS %s\n", name);
    } else {
      std::printf("FAIL %s: %s\n", name, o.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
