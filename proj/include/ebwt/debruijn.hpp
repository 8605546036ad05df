#ifndef EBWT_DEBRUIJN_HPP
#define EBWT_DEBRUIJN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ebwt/error.hpp"
#include "ebwt/transform.hpp"
#include "ebwt/words.hpp"

namespace ebwt {

using BigInt = boost::multiprecision::cpp_int;

// Largest k^n accepted for generation.
inline constexpr std::size_t kDefaultDeBruijnGuard = std::size_t{1} << 24;

namespace detail {

// k^n, or nullopt if it exceeds limit.
inline std::optional<std::size_t> bounded_power(std::size_t k, std::size_t n,
                                                std::size_t limit) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k != 0 && p > limit / k) {
      return std::nullopt;
    }
    p *= k;
  }
  if (p > limit) {
    return std::nullopt;
  }
  return p;
}

inline std::size_t guarded_power(std::size_t k, std::size_t n,
                                 std::size_t limit) {
  auto p = bounded_power(k, n, limit);
  if (!p) {
    throw GuardError(std::to_string(k) + "^" + std::to_string(n) +
                     " exceeds the guard of " + std::to_string(limit));
  }
  return *p;
}

inline void check_span_args(std::size_t k, std::size_t n) {
  if (k < 2 || k > kMaxAlphabet) {
    throw InputError("alphabet size k must be in [2, 256], got " +
                     std::to_string(k));
  }
  if (n < 1) {
    throw InputError("span n must be at least 1");
  }
}

}  // namespace detail

// Index of the first length-k block of w that is not a permutation of the
// alphabet 0..k-1, or nullopt if every block is. Length is not checked.
inline std::optional<std::size_t> first_bad_block(WordView w, std::size_t k) {
  std::vector<bool> seen(k);
  const std::size_t blocks = w.size() / k;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < k; ++j) {
      const Letter a = w[b * k + j];
      if (a >= k || seen[a]) {
        return b;
      }
      seen[a] = true;
    }
  }
  if (w.size() % k != 0) {
    return blocks;
  }
  return std::nullopt;
}

// w has length k^n and is a product of k^(n-1) permutations of the alphabet.
inline bool is_gamma(WordView w, std::size_t k, std::size_t n) {
  if (k < 1 || n < 1) {
    return false;
  }
  const auto len = detail::bounded_power(k, n, w.size());
  return len && *len == w.size() && !first_bad_block(w, k);
}

// A word of Gamma_{k,n}: a product of k^(n-1) blocks, each a permutation of
// the k letters.
class GammaWord {
 public:
  GammaWord(Word word, std::size_t k, std::size_t n)
      : word_(std::move(word)), k_(k), n_(n) {
    detail::check_span_args(k, n);
    const auto len = detail::bounded_power(k, n, word_.size());
    if (!len || *len != word_.size()) {
      throw InputError("word of length " + std::to_string(word_.size()) +
                       " is not of length " + std::to_string(k) + "^" +
                       std::to_string(n));
    }
    if (auto bad = first_bad_block(word_, k)) {
      throw InputError("block " + std::to_string(*bad) +
                       " is not a permutation of the alphabet");
    }
  }

  const Word& word() const noexcept { return word_; }
  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t span() const noexcept { return n_; }

 private:
  Word word_;
  std::size_t k_;
  std::size_t n_;
};

// Every length-n word over k letters occurs exactly once as a length-n prefix
// of a power of some word of some necklace, and the lengths sum to k^n.
inline bool is_debruijn_set(const NecklaceMultiset& m, std::size_t k,
                            std::size_t n) {
  if (k < 1 || n < 1) {
    return false;
  }
  const auto total = detail::bounded_power(k, n, m.total_length());
  if (!total || *total != m.total_length()) {
    return false;
  }
  std::vector<bool> seen(*total, false);
  for (const auto& e : m.entries()) {
    if (e.multiplicity != 1) {
      return false;
    }
    const Word& u = e.necklace.lyndon();
    for (std::size_t start = 0; start < u.size(); ++start) {
      std::size_t code = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const Letter a = u[(start + j) % u.size()];
        if (a >= k) {
          return false;
        }
        code = code * k + a;
      }
      if (seen[code]) {
        return false;
      }
      seen[code] = true;
    }
  }
  return true;
}

class DeBruijnSet {
 public:
  DeBruijnSet(NecklaceMultiset necklaces, std::size_t k, std::size_t n)
      : necklaces_(std::move(necklaces)), k_(k), n_(n) {
    if (!is_debruijn_set(necklaces_, k, n)) {
      throw InputError("multiset is not a de Bruijn set of span " +
                       std::to_string(n));
    }
  }

  const NecklaceMultiset& necklaces() const noexcept { return necklaces_; }
  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t span() const noexcept { return n_; }

 private:
  NecklaceMultiset necklaces_;
  std::size_t k_;
  std::size_t n_;
};

// Inverts a Gamma word. The result is always a de Bruijn set; a failure here
// is a logic error, not an input error.
inline DeBruijnSet debruijn_set_from_gamma(const GammaWord& v) {
  auto m = inverse_transform(v.word());
  if (!is_debruijn_set(m, v.alphabet_size(), v.span())) {
    throw std::logic_error("inverse of a Gamma word is not a de Bruijn set");
  }
  return DeBruijnSet(std::move(m), v.alphabet_size(), v.span());
}

// alpha^(k^(n-1)) with alpha = 0 1 ... k-1.
inline Word alpha_power(std::size_t k, std::size_t n,
                        std::size_t guard = kDefaultDeBruijnGuard) {
  detail::check_span_args(k, n);
  const std::size_t len = detail::guarded_power(k, n, guard);
  Word v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = static_cast<Letter>(i % k);
  }
  return v;
}

// Least de Bruijn word of span n: invert alpha^(k^(n-1)) and concatenate the
// Lyndon words of the resulting necklaces in ascending order.
inline Word least_debruijn_word(std::size_t k, std::size_t n,
                                std::size_t guard = kDefaultDeBruijnGuard) {
  const Word v = alpha_power(k, n, guard);
  const auto m = inverse_transform(v);
  Word out;
  out.reserve(v.size());
  for (const auto& e : m.entries()) {
    for (std::size_t rep = 0; rep < e.multiplicity; ++rep) {
      const Word& u = e.necklace.lyndon();
      out.insert(out.end(), u.begin(), u.end());
    }
  }
  return out;
}

// Concatenation of all Lyndon words of length dividing n in lexicographic
// order, generated by the next-Lyndon-word successor step.
inline Word lyndon_concatenation_oracle(
    std::size_t k, std::size_t n, std::size_t guard = kDefaultDeBruijnGuard) {
  detail::check_span_args(k, n);
  const std::size_t len = detail::guarded_power(k, n, guard);
  Word out;
  out.reserve(len);
  const Letter top = static_cast<Letter>(k - 1);
  Word w{0};
  while (!w.empty()) {
    if (n % w.size() == 0) {
      out.insert(out.end(), w.begin(), w.end());
    }
    const std::size_t period = w.size();
    while (w.size() < n) {
      w.push_back(w[w.size() - period]);
    }
    while (!w.empty() && w.back() == top) {
      w.pop_back();
    }
    if (!w.empty()) {
      ++w.back();
    }
  }
  return out;
}

// (k!)^(k^(n-1)) / k^n
inline BigInt count_debruijn_words(std::size_t k, std::size_t n) {
  detail::check_span_args(k, n);
  // exponent k^(n-1) must stay representable; beyond 2^24 the result has
  // tens of millions of digits
  const std::size_t exponent = detail::guarded_power(k, n - 1, std::size_t{1} << 24);
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    factorial *= i;
  }
  BigInt numerator = boost::multiprecision::pow(factorial,
                                                static_cast<unsigned>(exponent));
  BigInt denominator = boost::multiprecision::pow(BigInt(k),
                                                  static_cast<unsigned>(n));
  return numerator / denominator;
}

// Number of elements of Gamma_{k,n}: (k!)^(k^(n-1)).
inline BigInt gamma_size(std::size_t k, std::size_t n) {
  return count_debruijn_words(k, n) * boost::multiprecision::pow(
                                          BigInt(k), static_cast<unsigned>(n));
}

// Lexicographic stream over Gamma_{k,n}.
class GammaEnumerator {
 public:
  GammaEnumerator(std::size_t k, std::size_t n, std::uint64_t limit)
      : k_(k), n_(n) {
    detail::check_span_args(k, n);
    const BigInt total = gamma_size(k, n);
    if (total > limit) {
      throw GuardError("Gamma_{" + std::to_string(k) + "," +
                       std::to_string(n) + "} has " + total.str() +
                       " elements, above the limit of " +
                       std::to_string(limit));
    }
    Word perm(k);
    for (std::size_t i = 0; i < k; ++i) {
      perm[i] = static_cast<Letter>(i);
    }
    do {
      blocks_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    digits_.assign(*detail::bounded_power(k, n - 1, SIZE_MAX), 0);
  }

  std::optional<GammaWord> next() {
    if (done_) {
      return std::nullopt;
    }
    Word w;
    w.reserve(digits_.size() * k_);
    for (std::size_t d : digits_) {
      w.insert(w.end(), blocks_[d].begin(), blocks_[d].end());
    }
    // odometer, most significant block first
    std::size_t i = digits_.size();
    while (i > 0) {
      --i;
      if (++digits_[i] < blocks_.size()) {
        break;
      }
      digits_[i] = 0;
      if (i == 0) {
        done_ = true;
      }
    }
    return GammaWord(std::move(w), k_, n_);
  }

 private:
  std::size_t k_;
  std::size_t n_;
  std::vector<Word> blocks_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

inline std::vector<GammaWord> enumerate_gamma(std::size_t k, std::size_t n,
                                              std::uint64_t limit) {
  GammaEnumerator it(k, n, limit);
  std::vector<GammaWord> out;
  while (auto v = it.next()) {
    out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace ebwt

#endif  // EBWT_DEBRUIJN_HPP
