#ifndef EBWT_FACTORS_HPP
#define EBWT_FACTORS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ebwt/debruijn.hpp"
#include "ebwt/error.hpp"
#include "ebwt/words.hpp"

namespace ebwt {

// Online suffix automaton. The number of distinct nonempty factors of the
// text read so far is the sum over non-initial states of len - len(link).
class SuffixAutomaton {
 public:
  SuffixAutomaton() { states_.push_back(State{}); }

  void extend(Letter a) {
    const std::size_t cur = states_.size();
    states_.push_back(State{states_[last_].len + 1, 0, {}});
    std::ptrdiff_t p = static_cast<std::ptrdiff_t>(last_);
    while (p != -1 && !states_[p].next.contains(a)) {
      states_[p].next[a] = cur;
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const std::size_t q = states_[p].next[a];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = static_cast<std::ptrdiff_t>(q);
      } else {
        const std::size_t clone = states_.size();
        State copy = states_[q];
        copy.len = states_[p].len + 1;
        states_.push_back(std::move(copy));
        while (p != -1) {
          auto it = states_[p].next.find(a);
          if (it == states_[p].next.end() || it->second != q) {
            break;
          }
          it->second = clone;
          p = states_[p].link;
        }
        states_[q].link = static_cast<std::ptrdiff_t>(clone);
        states_[cur].link = static_cast<std::ptrdiff_t>(clone);
      }
    }
    distinct_ += states_[cur].len - states_[states_[cur].link].len;
    last_ = cur;
  }

  // Distinct nonempty factors of the text so far.
  std::uint64_t distinct_factors() const noexcept { return distinct_; }

 private:
  struct State {
    std::size_t len = 0;
    std::ptrdiff_t link = -1;
    std::map<Letter, std::size_t> next;
  };
  std::vector<State> states_;
  std::size_t last_ = 0;
  std::uint64_t distinct_ = 0;
};

struct FactorStats {
  std::size_t length = 0;
  std::uint64_t distinct = 0;
  std::size_t alphabet_size = 0;
};

inline std::uint64_t distinct_factors(WordView w) {
  detail::require_nonempty(w, "distinct_factors");
  SuffixAutomaton sam;
  for (Letter a : w) {
    sam.extend(a);
  }
  return sam.distinct_factors();
}

inline FactorStats factor_stats(WordView w, std::size_t k) {
  return FactorStats{w.size(), distinct_factors(w), k};
}

// n(n+1)/2, the number of factor occurrences of a length-n word.
inline std::uint64_t factor_occurrences(std::uint64_t n) {
  return n * (n + 1) / 2;
}

struct MaxFactors {
  std::uint64_t value = 0;
  Word witness;  // lexicographically least word attaining value
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = std::uint64_t{1} << 20;

// Merge of two partial maxima; associative and commutative.
inline MaxFactors merge(const MaxFactors& a, const MaxFactors& b) {
  if (a.value != b.value) {
    return a.value > b.value ? a : b;
  }
  return a.witness <= b.witness ? a : b;
}

// f(n): maximum of distinct_factors over all k^n words.
inline MaxFactors max_factors_exhaustive(
    std::size_t n, std::size_t k,
    std::uint64_t budget = kDefaultExhaustiveBudget) {
  if (n < 1 || k < 1 || k > kMaxAlphabet) {
    throw InputError("max_factors_exhaustive needs n >= 1 and k in [1, 256]");
  }
  if (!detail::bounded_power(k, n, budget)) {
    throw GuardError(std::to_string(k) + "^" + std::to_string(n) +
                     " words exceed the exhaustive budget of " +
                     std::to_string(budget));
  }
  MaxFactors best;
  Word w(n, 0);
  for (;;) {
    const std::uint64_t f = distinct_factors(w);
    if (f > best.value) {
      best = MaxFactors{f, w};
    }
    std::size_t i = n;
    while (i > 0 && w[i - 1] == k - 1) {
      w[--i] = 0;
    }
    if (i == 0) {
      break;
    }
    ++w[i - 1];
  }
  return best;
}

// Lower bound on the number of repeated factor occurrences of any length-n
// word: sum over r = 1..t of (n - r + 1 - k^r), t = max{r : r + k^r <= n},
// in closed form (n+1)t - t(t+1)/2 - k(k^t - 1)/(k - 1).
inline std::uint64_t repeated_factor_lower_bound(std::uint64_t n,
                                                 std::uint64_t k) {
  if (k < 2 || n <= k) {
    throw InputError("repeated_factor_lower_bound needs n > k >= 2");
  }
  std::uint64_t t = 0;
  std::uint64_t kt = 1;  // k^t
  while (t + 1 + kt * k <= n) {
    ++t;
    kt *= k;
  }
  return (n + 1) * t - t * (t + 1) / 2 - k * (kt - 1) / (k - 1);
}

// f(n) <= n(n+1)/2 - repeated_factor_lower_bound(n, k), or n(n+1)/2 when
// n <= k.
inline std::uint64_t factor_upper_bound(std::uint64_t n, std::uint64_t k) {
  if (k >= 2 && n > k) {
    return factor_occurrences(n) - repeated_factor_lower_bound(n, k);
  }
  return factor_occurrences(n);
}

struct FactorWitness {
  Word word;
  std::size_t span = 0;        // m with k^(m-1) < n <= k^m
  std::uint64_t distinct = 0;  // f_w
  std::uint64_t bound = 0;     // (n-m+1)(n-m+2)/2
};

// Length-n prefix of the least de Bruijn word of span m, whose factors of
// length >= m are pairwise distinct.
inline FactorWitness debruijn_factor_witness(
    std::size_t n, std::size_t k, std::size_t guard = kDefaultDeBruijnGuard) {
  if (k < 2 || n <= k) {
    throw InputError("debruijn_factor_witness needs n > k >= 2");
  }
  std::size_t m = 1;
  std::size_t km = k;
  while (km < n) {
    ++m;
    km *= k;
  }
  Word d = least_debruijn_word(k, m, guard);
  d.resize(n);
  FactorWitness out;
  out.span = m;
  out.distinct = distinct_factors(d);
  out.bound = static_cast<std::uint64_t>(n - m + 1) * (n - m + 2) / 2;
  out.word = std::move(d);
  return out;
}

}  // namespace ebwt

#endif  // EBWT_FACTORS_HPP
