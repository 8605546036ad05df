#ifndef EBWT_TRANSFORM_HPP
#define EBWT_TRANSFORM_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ebwt/error.hpp"
#include "ebwt/words.hpp"

namespace ebwt {

// A finite multiset of necklaces, kept sorted by Lyndon word with merged
// multiplicities.
class NecklaceMultiset {
 public:
  struct Entry {
    Necklace necklace;
    std::size_t multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  NecklaceMultiset() = default;

  NecklaceMultiset(std::initializer_list<Necklace> necklaces) {
    for (const auto& n : necklaces) {
      add(n);
    }
  }

  void add(const Necklace& necklace, std::size_t multiplicity = 1) {
    if (multiplicity == 0) {
      return;
    }
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), necklace,
        [](const Entry& e, const Necklace& n) { return e.necklace < n; });
    if (it != entries_.end() && it->necklace == necklace) {
      it->multiplicity += multiplicity;
    } else {
      entries_.insert(it, Entry{necklace, multiplicity});
    }
    total_length_ += multiplicity * necklace.size();
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  // n = sum of multiplicity * |necklace|
  std::size_t total_length() const noexcept { return total_length_; }

  // Number of necklaces counted with multiplicity.
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (const auto& e : entries_) {
      c += e.multiplicity;
    }
    return c;
  }

  friend bool operator==(const NecklaceMultiset& a, const NecklaceMultiset& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::size_t total_length_ = 0;
};

// One row of the (conceptual) rotation table: a rotation of a necklace word.
struct RotationRef {
  std::size_t entry;   // index into NecklaceMultiset::entries()
  std::size_t offset;  // rotation start within the Lyndon word
};

// Rotations of every necklace (with multiplicity) sorted by the order of
// their infinite powers. Rows that are rotations of equal necklaces compare
// equivalent and stay adjacent.
inline std::vector<RotationRef> sorted_rotations(const NecklaceMultiset& m) {
  std::vector<RotationRef> rows;
  rows.reserve(m.total_length());
  const auto& entries = m.entries();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    for (std::size_t rep = 0; rep < entries[e].multiplicity; ++rep) {
      for (std::size_t off = 0; off < entries[e].necklace.size(); ++off) {
        rows.push_back({e, off});
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const RotationRef& a, const RotationRef& b) {
                     return omega_compare(entries[a.entry].necklace.lyndon(),
                                          entries[b.entry].necklace.lyndon(),
                                          a.offset, b.offset) < 0;
                   });
  return rows;
}

// Extended Burrows-Wheeler transform: last letters of the sorted rotations.
inline Word transform(const NecklaceMultiset& m) {
  const auto& entries = m.entries();
  Word out;
  out.reserve(m.total_length());
  for (const auto& row : sorted_rotations(m)) {
    const Word& u = entries[row.entry].necklace.lyndon();
    out.push_back(u[(row.offset + u.size() - 1) % u.size()]);
  }
  return out;
}

// Standard permutation of a word, as the union of one order-preserving
// partial injection per letter. dom(a) is the interval of positions taken by
// a in the sorted rearrangement of w; ran(a) is the increasing list of
// positions of a in w.
class StandardPermutation {
 public:
  explicit StandardPermutation(WordView w) : image_(w.size()) {
    detail::require_nonempty(w, "standard_permutation");
    const std::size_t k =
        static_cast<std::size_t>(*std::max_element(w.begin(), w.end())) + 1;
    dom_start_.assign(k + 1, 0);
    for (Letter a : w) {
      ++dom_start_[a + 1];
    }
    std::partial_sum(dom_start_.begin(), dom_start_.end(), dom_start_.begin());
    std::vector<std::size_t> next(dom_start_.begin(), dom_start_.end() - 1);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      image_[next[w[pos]]++] = pos;
    }
  }

  std::size_t size() const noexcept { return image_.size(); }

  // Letters 0..letter_bound()-1 may have nonempty maps.
  std::size_t letter_bound() const noexcept { return dom_start_.size() - 1; }

  std::span<const std::size_t> image() const noexcept { return image_; }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }

  // dom(a) as the half-open interval [first, second).
  std::pair<std::size_t, std::size_t> domain(Letter a) const noexcept {
    if (a >= letter_bound()) {
      return {size(), size()};
    }
    return {dom_start_[a], dom_start_[a + 1]};
  }

  // ran(a), strictly increasing.
  std::span<const std::size_t> range(Letter a) const noexcept {
    const auto [first, last] = domain(a);
    return std::span<const std::size_t>(image_).subspan(first, last - first);
  }

  // The letter c with i in dom(c).
  Letter letter_at(std::size_t i) const {
    auto it = std::upper_bound(dom_start_.begin(), dom_start_.end(), i);
    return static_cast<Letter>(std::distance(dom_start_.begin(), it) - 1);
  }

  // i . pi_a, or nullopt when i is outside dom(a).
  std::optional<std::size_t> apply(Letter a, std::size_t i) const noexcept {
    const auto [first, last] = domain(a);
    if (i < first || i >= last) {
      return std::nullopt;
    }
    return image_[i];
  }

  // Disjoint cycles ordered by least element, each read from its least
  // element.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
      if (seen[start]) {
        continue;
      }
      std::vector<std::size_t> cycle;
      for (std::size_t i = start; !seen[i]; i = image_[i]) {
        seen[i] = true;
        cycle.push_back(i);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

 private:
  std::vector<std::size_t> image_;
  std::vector<std::size_t> dom_start_;
};

inline StandardPermutation standard_permutation(WordView w) {
  return StandardPermutation(w);
}

// Letters read along a cycle: each element m becomes the c with m in dom(c).
inline Word cycle_word(const StandardPermutation& p,
                       std::span<const std::size_t> cycle) {
  Word u;
  u.reserve(cycle.size());
  for (std::size_t m : cycle) {
    u.push_back(p.letter_at(m));
  }
  return u;
}

inline NecklaceMultiset inverse_transform(WordView w) {
  NecklaceMultiset m;
  if (w.empty()) {
    return m;
  }
  const StandardPermutation p(w);
  for (const auto& cycle : p.cycles()) {
    m.add(lyndon_representative(cycle_word(p, cycle)));
  }
  return m;
}

// i . pi_u, composing the letter maps left to right.
inline std::optional<std::size_t> word_action(const StandardPermutation& p,
                                              std::size_t i, WordView u) {
  if (i >= p.size()) {
    throw InputError("word_action: position " + std::to_string(i) +
                     " outside [0, " + std::to_string(p.size()) + ")");
  }
  std::optional<std::size_t> at = i;
  for (Letter b : u) {
    at = p.apply(b, *at);
    if (!at) {
      break;
    }
  }
  return at;
}

struct RotationTable {
  std::size_t width = 0;
  std::vector<Word> rows;
};

inline constexpr std::size_t kDefaultTableCells = std::size_t{1} << 20;

namespace detail {

inline std::size_t checked_lcm(std::size_t a, std::size_t b,
                               std::size_t limit) {
  const std::size_t g = std::gcd(a, b);
  const std::size_t step = a / g;
  if (b != 0 && step > limit / b) {
    throw GuardError("table width (lcm of cycle lengths) exceeds guard of " +
                     std::to_string(limit) + " cells");
  }
  return step * b;
}

inline void check_cells(std::size_t rows, std::size_t width,
                        std::size_t max_cells) {
  if (rows != 0 && width > max_cells / rows) {
    throw GuardError("table of " + std::to_string(rows) + " rows and width " +
                     std::to_string(width) + " (lcm of root lengths) exceeds "
                     "guard of " + std::to_string(max_cells) + " cells");
  }
}

}  // namespace detail

// The table of a word: row i is the unique width-l word u with i . pi_u
// defined, l the lcm of the cycle lengths of pi(w).
inline RotationTable build_table(WordView w,
                                 std::size_t max_cells = kDefaultTableCells) {
  const StandardPermutation p(w);
  std::size_t width = 1;
  for (const auto& cycle : p.cycles()) {
    width = detail::checked_lcm(width, cycle.size(), max_cells);
  }
  detail::check_cells(p.size(), width, max_cells);
  RotationTable table{width, {}};
  table.rows.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Word row;
    row.reserve(width);
    std::size_t at = i;
    for (std::size_t j = 0; j < width; ++j) {
      row.push_back(p.letter_at(at));
      at = p(at);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// The table of a multiset: every power u^(l/|u|) of every necklace word,
// sorted lexicographically.
inline RotationTable build_table(const NecklaceMultiset& m,
                                 std::size_t max_cells = kDefaultTableCells) {
  std::size_t width = 1;
  for (const auto& e : m.entries()) {
    width = detail::checked_lcm(width, e.necklace.size(), max_cells);
  }
  detail::check_cells(m.total_length(), width, max_cells);
  RotationTable table{m.empty() ? 0 : width, {}};
  for (const auto& e : m.entries()) {
    const Word& u = e.necklace.lyndon();
    for (std::size_t off = 0; off < u.size(); ++off) {
      Word row;
      row.reserve(width);
      for (std::size_t j = 0; j < width; ++j) {
        row.push_back(u[(off + j) % u.size()]);
      }
      for (std::size_t rep = 0; rep < e.multiplicity; ++rep) {
        table.rows.push_back(row);
      }
    }
  }
  std::sort(table.rows.begin(), table.rows.end());
  return table;
}

}  // namespace ebwt

#endif  // EBWT_TRANSFORM_HPP
