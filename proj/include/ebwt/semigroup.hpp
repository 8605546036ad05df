#ifndef EBWT_SEMIGROUP_HPP
#define EBWT_SEMIGROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ebwt/error.hpp"
#include "ebwt/words.hpp"

namespace ebwt {

namespace detail {

template <typename T>
std::size_t hash_range(std::span<const T> values) {
  // FNV-1a over the element values
  std::uint64_t h = 1469598103934665603ULL;
  for (const T& v : values) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace detail

// A partial one-to-one map on [0, degree). Maps compose left to right:
// x . (f * g) = (x . f) . g.
class PartialInjection {
 public:
  static constexpr std::uint32_t kUndefined = UINT32_MAX;

  PartialInjection() = default;
  explicit PartialInjection(std::size_t degree) : image_(degree, kUndefined) {}

  // From (source, target) pairs; sources and targets must each be distinct.
  PartialInjection(std::size_t degree,
                   std::span<const std::pair<std::size_t, std::size_t>> graph)
      : image_(degree, kUndefined) {
    std::vector<bool> hit(degree, false);
    for (auto [src, dst] : graph) {
      if (src >= degree || dst >= degree) {
        throw InputError("partial injection pair outside degree " +
                         std::to_string(degree));
      }
      if (image_[src] != kUndefined || hit[dst]) {
        throw InputError("partial injection graph is not injective");
      }
      image_[src] = static_cast<std::uint32_t>(dst);
      hit[dst] = true;
    }
  }

  std::size_t degree() const noexcept { return image_.size(); }

  std::optional<std::size_t> operator()(std::size_t x) const noexcept {
    if (x >= image_.size() || image_[x] == kUndefined) {
      return std::nullopt;
    }
    return image_[x];
  }

  void set(std::size_t x, std::size_t y) {
    image_.at(x) = static_cast<std::uint32_t>(y);
  }

  // Canonical form: (source, target) pairs sorted by source.
  std::vector<std::pair<std::size_t, std::size_t>> graph() const {
    std::vector<std::pair<std::size_t, std::size_t>> g;
    for (std::size_t x = 0; x < image_.size(); ++x) {
      if (image_[x] != kUndefined) {
        g.emplace_back(x, image_[x]);
      }
    }
    return g;
  }

  std::size_t rank() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(image_.begin(), image_.end(),
                      [](std::uint32_t y) { return y != kUndefined; }));
  }

  bool is_empty_map() const noexcept { return rank() == 0; }

  // Sources increasing implies targets increasing (membership in POI_n).
  bool is_order_preserving() const noexcept {
    std::uint32_t last = 0;
    bool any = false;
    for (std::uint32_t y : image_) {
      if (y == kUndefined) {
        continue;
      }
      if (any && y <= last) {
        return false;
      }
      last = y;
      any = true;
    }
    return true;
  }

  // Restriction to the subchain `domain` (ascending), relabelled by rank.
  // The domain must be invariant under this map.
  PartialInjection restrict_to(std::span<const std::size_t> domain) const {
    std::unordered_map<std::size_t, std::size_t> rank_of;
    for (std::size_t r = 0; r < domain.size(); ++r) {
      rank_of.emplace(domain[r], r);
    }
    PartialInjection out(domain.size());
    for (std::size_t r = 0; r < domain.size(); ++r) {
      if (auto y = (*this)(domain[r])) {
        auto it = rank_of.find(*y);
        if (it == rank_of.end()) {
          throw InputError("restriction domain is not invariant");
        }
        out.image_[r] = static_cast<std::uint32_t>(it->second);
      }
    }
    return out;
  }

  std::span<const std::uint32_t> raw() const noexcept { return image_; }

  friend PartialInjection operator*(const PartialInjection& f,
                                    const PartialInjection& g) {
    if (f.degree() != g.degree()) {
      throw InputError("composing partial injections of different degree");
    }
    PartialInjection out(f.degree());
    for (std::size_t x = 0; x < f.image_.size(); ++x) {
      const std::uint32_t y = f.image_[x];
      if (y != kUndefined) {
        out.image_[x] = g.image_[y];
      }
    }
    return out;
  }

  friend bool operator==(const PartialInjection&,
                         const PartialInjection&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

// A total map on [0, degree), composed left to right.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint32_t> image)
      : image_(std::move(image)) {}

  std::size_t degree() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t x) const { return image_.at(x); }
  std::span<const std::uint32_t> raw() const noexcept { return image_; }

  friend Transformation operator*(const Transformation& f,
                                  const Transformation& g) {
    std::vector<std::uint32_t> out(f.image_.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] = g.image_[f.image_[x]];
    }
    return Transformation(std::move(out));
  }

  friend bool operator==(const Transformation&,
                         const Transformation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

}  // namespace ebwt

template <>
struct std::hash<ebwt::PartialInjection> {
  std::size_t operator()(const ebwt::PartialInjection& f) const noexcept {
    return ebwt::detail::hash_range(f.raw());
  }
};

template <>
struct std::hash<ebwt::Transformation> {
  std::size_t operator()(const ebwt::Transformation& f) const noexcept {
    return ebwt::detail::hash_range(f.raw());
  }
};

namespace ebwt {

inline constexpr std::size_t kDefaultClosureGuard = 1'000'000;

template <typename Element>
class FiniteSemigroup;

template <typename Element>
FiniteSemigroup<Element> generate_closure(
    const std::map<Letter, Element>& gens,
    std::size_t guard = kDefaultClosureGuard);

// Finite semigroup generated by letter-labelled elements, with its right
// Cayley graph and one shortest generator word per element.
template <typename Element>
class FiniteSemigroup {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  // Generator labels in ascending order.
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  // Element index of the generator labelled letters()[g].
  std::size_t generator(std::size_t g) const { return generators_.at(g); }

  // A shortest word over letters() (letter codes) evaluating to element i.
  const Word& word(std::size_t i) const { return words_.at(i); }

  // Index of element i * generator g.
  std::size_t right(std::size_t i, std::size_t g) const {
    return right_.at(i).at(g);
  }

  std::optional<std::size_t> index_of(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  // Evaluates a nonempty word over letters(); nullopt if some letter is not
  // a generator label.
  std::optional<std::size_t> evaluate(WordView w) const {
    if (w.empty()) {
      throw InputError("a semigroup has no value for the empty word");
    }
    std::optional<std::size_t> at;
    for (Letter a : w) {
      auto g = generator_slot(a);
      if (!g) {
        return std::nullopt;
      }
      at = at ? right_[*at][*g] : generators_[*g];
    }
    return at;
  }

  // Index of element i * element j, following j's word in the Cayley graph.
  std::size_t product(std::size_t i, std::size_t j) const {
    std::size_t at = i;
    for (Letter a : words_.at(j)) {
      at = right_[at][*generator_slot(a)];
    }
    return at;
  }

  std::vector<std::vector<std::size_t>> multiplication_table() const {
    std::vector<std::vector<std::size_t>> table(size(),
                                                std::vector<std::size_t>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        table[i][j] = product(i, j);
      }
    }
    return table;
  }

  std::optional<std::size_t> generator_slot(Letter a) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
    if (it == letters_.end() || *it != a) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(std::distance(letters_.begin(), it));
  }

  friend FiniteSemigroup generate_closure<Element>(
      const std::map<Letter, Element>&, std::size_t);

 private:
  std::vector<Letter> letters_;
  std::vector<Element> elements_;
  std::vector<std::size_t> generators_;
  std::vector<Word> words_;
  std::vector<std::vector<std::size_t>> right_;
  std::unordered_map<Element, std::size_t> index_;
};

// Breadth-first closure of the generators under multiplication.
template <typename Element>
FiniteSemigroup<Element> generate_closure(
    const std::map<Letter, Element>& gens, std::size_t guard) {
  FiniteSemigroup<Element> s;
  if (gens.empty()) {
    throw InputError("generate_closure: no generators");
  }
  const std::size_t degree = gens.begin()->second.degree();
  auto add = [&](Element e, Word w) -> std::size_t {
    auto [it, inserted] = s.index_.emplace(e, s.elements_.size());
    if (inserted) {
      if (s.elements_.size() >= guard) {
        throw GuardError("semigroup closure exceeds the guard of " +
                         std::to_string(guard) + " elements");
      }
      s.elements_.push_back(std::move(e));
      s.words_.push_back(std::move(w));
    }
    return it->second;
  };
  for (const auto& [letter, e] : gens) {
    if (e.degree() != degree) {
      throw InputError("generators have different degrees");
    }
    s.letters_.push_back(letter);
    s.generators_.push_back(add(e, Word{letter}));
  }
  const std::size_t ngens = s.letters_.size();
  for (std::size_t i = 0; i < s.elements_.size(); ++i) {
    std::vector<std::size_t> row(ngens);
    for (std::size_t g = 0; g < ngens; ++g) {
      Element prod = s.elements_[i] * s.elements_[s.generators_[g]];
      Word w = s.words_[i];
      w.push_back(s.letters_[g]);
      row[g] = add(std::move(prod), std::move(w));
    }
    s.right_.push_back(std::move(row));
  }
  return s;
}

// Whether sending each lettered generator of a to the same-lettered
// generator of b extends to an isomorphism. Checked by mapping each element
// of a through its word into b and comparing right Cayley graphs.
template <typename E1, typename E2>
bool letter_induced_isomorphic(const FiniteSemigroup<E1>& a,
                               const FiniteSemigroup<E2>& b) {
  if (a.letters() != b.letters()) {
    throw InputError("semigroups are generated by different letter sets");
  }
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<std::size_t> phi(a.size());
  std::vector<bool> hit(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    phi[i] = *b.evaluate(a.word(i));
    if (hit[phi[i]]) {
      return false;
    }
    hit[phi[i]] = true;
  }
  const std::size_t ngens = a.letters().size();
  for (std::size_t g = 0; g < ngens; ++g) {
    if (phi[a.generator(g)] != b.generator(g)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t g = 0; g < ngens; ++g) {
      if (phi[a.right(i, g)] != b.right(phi[i], g)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ebwt

#endif  // EBWT_SEMIGROUP_HPP
