#ifndef EBWT_WORDS_HPP
#define EBWT_WORDS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ebwt/error.hpp"

namespace ebwt {

// Letters are contiguous codes 0..k-1; code order is the letter order.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

inline constexpr std::size_t kMaxAlphabet = 256;

// Bijection between letter codes and display characters. Characters are kept
// in ascending code-point order so that the rendering preserves letter order.
class Alphabet {
 public:
  // The first k letters of "ab...zAB...Z01...9".
  static Alphabet latin(std::size_t k) {
    static constexpr std::string_view kPool =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    if (k == 0 || k > kPool.size()) {
      throw InputError("alphabet size must be in [1, " +
                       std::to_string(kPool.size()) + "], got " +
                       std::to_string(k));
    }
    std::string chars(kPool.substr(0, k));
    // beyond 26 letters, code order follows ASCII (digits, upper, lower)
    std::sort(chars.begin(), chars.end());
    return Alphabet(std::move(chars));
  }

  // Sorted set of the characters occurring in text.
  static Alphabet infer(std::string_view text) {
    std::string chars(text);
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    if (chars.empty()) {
      chars = "a";
    }
    return Alphabet(std::move(chars));
  }

  explicit Alphabet(std::string chars) : chars_(std::move(chars)) {
    if (chars_.empty() || chars_.size() > kMaxAlphabet) {
      throw InputError("alphabet must have between 1 and 256 symbols");
    }
    for (std::size_t i = 0; i < chars_.size(); ++i) {
      index_[static_cast<unsigned char>(chars_[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 1; i < chars_.size(); ++i) {
      if (static_cast<unsigned char>(chars_[i - 1]) >=
          static_cast<unsigned char>(chars_[i])) {
        throw InputError("alphabet symbols must be distinct and ascending: \"" +
                         chars_ + "\"");
      }
    }
  }

  std::size_t size() const noexcept { return chars_.size(); }
  std::string_view symbols() const noexcept { return chars_; }

  char symbol(Letter code) const {
    if (code >= chars_.size()) {
      throw InputError("letter code " + std::to_string(code) +
                       " outside alphabet \"" + chars_ + "\"");
    }
    return chars_[code];
  }

  bool contains(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)] >= 0;
  }

  Letter code(char c) const {
    int idx = index_[static_cast<unsigned char>(c)];
    if (idx < 0) {
      throw InputError(std::string("character '") + c +
                       "' is not in alphabet \"" + chars_ + "\"");
    }
    return static_cast<Letter>(idx);
  }

  Word encode(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
      w.push_back(code(c));
    }
    return w;
  }

  std::string decode(WordView w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) {
      out.push_back(symbol(a));
    }
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.chars_ == b.chars_;
  }

 private:
  std::string chars_;
  std::array<int, 256> index_ = make_empty_index();

  static std::array<int, 256> make_empty_index() {
    std::array<int, 256> idx{};
    idx.fill(-1);
    return idx;
  }
};

namespace detail {

inline void require_nonempty(WordView w, const char* op) {
  if (w.empty()) {
    throw InputError(std::string(op) + ": the empty word is not allowed");
  }
}

// KMP failure function: fail[i] is the length of the longest proper border
// of w[0..i].
inline std::vector<std::size_t> failure_function(WordView w) {
  std::vector<std::size_t> fail(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) {
      k = fail[k - 1];
    }
    if (w[i] == w[k]) {
      ++k;
    }
    fail[i] = k;
  }
  return fail;
}

// Booth's algorithm: start index of the lexicographically least rotation.
inline std::size_t least_rotation(WordView s) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
  if (n <= 1) {
    return 0;
  }
  std::vector<std::ptrdiff_t> f(static_cast<std::size_t>(2 * n), -1);
  std::ptrdiff_t k = 0;
  auto at = [&](std::ptrdiff_t i) { return s[static_cast<std::size_t>(i % n)]; };
  for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
    const Letter sj = at(j);
    std::ptrdiff_t i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) {
        k = j - i - 1;
      }
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + i + 1)) {
      // i == -1 here
      if (sj < at(k)) {
        k = j;
      }
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k % n);
}

inline Word rotate_left(WordView w, std::size_t offset) {
  Word out;
  out.reserve(w.size());
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(w[(offset + i) % n]);
  }
  return out;
}

}  // namespace detail

// The conjugation map au -> ua.
inline Word conjugate_shift(WordView w) {
  detail::require_nonempty(w, "conjugate_shift");
  return detail::rotate_left(w, 1);
}

inline std::size_t root_length(WordView w) {
  detail::require_nonempty(w, "root");
  const auto fail = detail::failure_function(w);
  const std::size_t period = w.size() - fail.back();
  return w.size() % period == 0 ? period : w.size();
}

// Shortest r with w = r^t.
inline Word root(WordView w) {
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(root_length(w)));
}

inline bool is_primitive(WordView w) { return root_length(w) == w.size(); }

inline bool has_border(WordView w) {
  detail::require_nonempty(w, "has_border");
  return detail::failure_function(w).back() > 0;
}

// Thrown by lyndon_representative on a proper power; carries the root so
// the caller may canonicalize that instead.
class NotPrimitiveError : public InputError {
 public:
  explicit NotPrimitiveError(Word root)
      : InputError("word is not primitive (a proper power of its root)"),
        root_(std::move(root)) {}
  const Word& root() const noexcept { return root_; }

 private:
  Word root_;
};

// Conjugacy class of a primitive word, held by its Lyndon word.
class Necklace {
 public:
  // Accepts only a Lyndon word (primitive and least among its rotations).
  static Necklace from_lyndon(Word lyndon) {
    detail::require_nonempty(lyndon, "Necklace");
    if (!is_primitive(lyndon)) {
      throw NotPrimitiveError(root(lyndon));
    }
    if (detail::least_rotation(lyndon) != 0) {
      throw InputError("word is primitive but not the least rotation of its "
                       "necklace");
    }
    return Necklace(std::move(lyndon));
  }

  const Word& lyndon() const noexcept { return lyndon_; }
  std::size_t size() const noexcept { return lyndon_.size(); }

  // Rotation starting at offset; offset 0 is the Lyndon word itself.
  Word rotation(std::size_t offset) const {
    return detail::rotate_left(lyndon_, offset);
  }

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace& a, const Necklace& b) {
    return a.lyndon_ <=> b.lyndon_;
  }

 private:
  explicit Necklace(Word lyndon) : lyndon_(std::move(lyndon)) {}
  friend Necklace lyndon_representative(WordView w);

  Word lyndon_;
};

inline Necklace lyndon_representative(WordView w) {
  detail::require_nonempty(w, "lyndon_representative");
  if (!is_primitive(w)) {
    throw NotPrimitiveError(root(w));
  }
  return Necklace(detail::rotate_left(w, detail::least_rotation(w)));
}

// Order of u^omega against v^omega, over n-letter prefixes where
// n = |u| + |v| - gcd(|u|, |v|); equal iff root(u) == root(v).
inline std::weak_ordering omega_compare(WordView u, WordView v,
                                        std::size_t u_offset = 0,
                                        std::size_t v_offset = 0) {
  detail::require_nonempty(u, "omega_compare");
  detail::require_nonempty(v, "omega_compare");
  const std::size_t nu = u.size();
  const std::size_t nv = v.size();
  const std::size_t bound = nu + nv - std::gcd(nu, nv);
  std::size_t iu = u_offset % nu;
  std::size_t iv = v_offset % nv;
  for (std::size_t i = 0; i < bound; ++i) {
    if (u[iu] != v[iv]) {
      return u[iu] < v[iv] ? std::weak_ordering::less
                           : std::weak_ordering::greater;
    }
    if (++iu == nu) iu = 0;
    if (++iv == nv) iv = 0;
  }
  return std::weak_ordering::equivalent;
}

// The |w| length-m factors of w^omega starting at 0..|w|-1.
inline std::vector<Word> cyclic_factors(WordView w, std::size_t m) {
  detail::require_nonempty(w, "cyclic_factors");
  if (m == 0 || m > w.size()) {
    throw InputError("cyclic_factors: length " + std::to_string(m) +
                     " outside [1, " + std::to_string(w.size()) + "]");
  }
  const std::size_t n = w.size();
  std::vector<Word> out;
  out.reserve(n);
  for (std::size_t start = 0; start < n; ++start) {
    Word f;
    f.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      f.push_back(w[(start + i) % n]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ebwt

#endif  // EBWT_WORDS_HPP
