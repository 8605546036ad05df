// ebwt: command-line front end for the extended Burrows-Wheeler transform,
// de Bruijn generation, necklace semigroups and factor counting.
//
// Exit codes: 0 success, 2 input error, 3 resource guard exceeded.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ebwt/ebwt.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct GlobalOptions {
  bool json = false;
  std::string alphabet;
  std::optional<std::size_t> guard;
  std::string file;
};

std::string read_input(const std::optional<std::string>& positional,
                       const std::string& file) {
  if (positional) {
    return *positional;
  }
  if (!file.empty()) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw ebwt::InputError("cannot open " + file);
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

std::string trim_word(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

ebwt::Alphabet pick_alphabet(const GlobalOptions& g, const std::string& text) {
  return g.alphabet.empty() ? ebwt::Alphabet::infer(text)
                            : ebwt::Alphabet(g.alphabet);
}

ebwt::Alphabet alphabet_of_size(const GlobalOptions& g, std::size_t k) {
  if (g.alphabet.empty()) {
    return ebwt::Alphabet::latin(k);
  }
  ebwt::Alphabet a(g.alphabet);
  if (a.size() != k) {
    throw ebwt::InputError("--alphabet has " + std::to_string(a.size()) +
                           " symbols but k = " + std::to_string(k));
  }
  return a;
}

void emit(const GlobalOptions& g, const json& doc, const std::string& text) {
  if (g.json) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << text;
  }
}

// transform ----------------------------------------------------------------

struct TransformArgs {
  std::optional<std::string> input;
  bool canonicalize = false;
};

void run_transform(const GlobalOptions& g, const TransformArgs& args) {
  const std::string text = read_input(args.input, g.file);
  const auto entries = ebwt::io::parse_entries(text);
  const auto alphabet = pick_alphabet(g, ebwt::io::entry_symbols(entries));
  const auto m = ebwt::io::to_multiset(entries, alphabet, args.canonicalize);
  const std::string word = alphabet.decode(ebwt::transform(m));
  emit(g, json{{"word", word}}, word + "\n");
}

// invert -------------------------------------------------------------------

struct InvertArgs {
  std::optional<std::string> input;
};

void run_invert(const GlobalOptions& g, const InvertArgs& args) {
  const std::string word = trim_word(read_input(args.input, g.file));
  const auto alphabet = pick_alphabet(g, word);
  const auto m = ebwt::inverse_transform(alphabet.encode(word));
  emit(g, ebwt::io::to_json(m, alphabet), ebwt::io::format_text(m, alphabet));
}

// debruijn -----------------------------------------------------------------

struct DeBruijnArgs {
  std::vector<std::size_t> span;  // k n
  bool least = false;
  bool count = false;
  std::optional<std::string> gamma;
};

void run_debruijn(const GlobalOptions& g, const DeBruijnArgs& args) {
  const int modes = int(args.least) + int(args.count) + int(args.gamma.has_value());
  if (modes != 1) {
    throw ebwt::InputError("debruijn needs exactly one of --least, --count, "
                           "--from-gamma");
  }
  const std::size_t guard = g.guard.value_or(ebwt::kDefaultDeBruijnGuard);

  if (args.gamma) {
    const std::string word = trim_word(*args.gamma);
    const auto alphabet =
        args.span.empty() ? pick_alphabet(g, word)
                          : alphabet_of_size(g, args.span[0]);
    const std::size_t k = alphabet.size();
    const ebwt::Word v = alphabet.encode(word);
    if (k < 2) {
      throw ebwt::InputError("a Gamma word needs at least two letters");
    }
    std::size_t n = 0;
    for (std::size_t p = 1; p < v.size(); p *= k) {
      ++n;
    }
    if (auto bad = ebwt::first_bad_block(v, k)) {
      throw ebwt::InputError("not a Gamma word: block " + std::to_string(*bad) +
                             " (letters " + std::to_string(*bad * k) + ".." +
                             std::to_string(*bad * k + k - 1) +
                             ") is not a permutation of the alphabet");
    }
    if (n == 0 || !ebwt::is_gamma(v, k, n)) {
      throw ebwt::InputError("not a Gamma word: length " +
                             std::to_string(v.size()) + " is not a power of " +
                             std::to_string(k));
    }
    if (args.span.size() == 2 && args.span[1] != n) {
      throw ebwt::InputError("word length " + std::to_string(v.size()) +
                             " does not match span " +
                             std::to_string(args.span[1]));
    }
    const auto set = ebwt::debruijn_set_from_gamma(ebwt::GammaWord(v, k, n));
    json doc = ebwt::io::to_json(set.necklaces(), alphabet);
    doc["k"] = k;
    doc["n"] = n;
    emit(g, doc, ebwt::io::format_text(set.necklaces(), alphabet));
    return;
  }

  if (args.span.size() != 2) {
    throw ebwt::InputError("debruijn --least/--count need K and N");
  }
  const std::size_t k = args.span[0];
  const std::size_t n = args.span[1];
  if (args.count) {
    const std::string count = ebwt::count_debruijn_words(k, n).str();
    emit(g, json{{"k", k}, {"n", n}, {"count", count}}, count + "\n");
    return;
  }
  const auto alphabet = alphabet_of_size(g, k);
  const std::string word =
      alphabet.decode(ebwt::least_debruijn_word(k, n, guard));
  emit(g, json{{"k", k}, {"n", n}, {"word", word}}, word + "\n");
}

// semigroup ----------------------------------------------------------------

struct SemigroupArgs {
  std::optional<std::string> input;
  bool syntactic = false;
  bool action = false;
  bool check_iso = false;
  bool table = false;
};

template <typename Element>
std::string describe(const std::string& label,
                     const ebwt::FiniteSemigroup<Element>& s,
                     const ebwt::Alphabet& alphabet) {
  std::string out = label + "order " + std::to_string(s.size()) + "\n";
  out += label + "generators";
  for (ebwt::Letter a : s.letters()) {
    out += ' ';
    out += alphabet.symbol(a);
  }
  return out + "\n";
}

// Grid: one `e<i> <word>` line per element, then a header of column indices
// and one row per element giving the index of e<row> * e<col>.
template <typename Element>
std::string table_text(const ebwt::FiniteSemigroup<Element>& s,
                       const ebwt::Alphabet& alphabet) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << 'e' << i << ' ' << alphabet.decode(s.word(i)) << '\n';
  }
  const auto table = s.multiplication_table();
  out << '*';
  for (std::size_t j = 0; j < s.size(); ++j) {
    out << ' ' << j;
  }
  out << '\n';
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << i;
    for (std::size_t j = 0; j < s.size(); ++j) {
      out << ' ' << table[i][j];
    }
    out << '\n';
  }
  return out.str();
}

template <typename Element>
json semigroup_json(const ebwt::FiniteSemigroup<Element>& s,
                    const ebwt::Alphabet& alphabet, bool with_table) {
  json doc{{"order", s.size()}};
  json gens = json::array();
  for (ebwt::Letter a : s.letters()) {
    gens.push_back(std::string(1, alphabet.symbol(a)));
  }
  doc["generators"] = gens;
  if (with_table) {
    json words = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      words.push_back(alphabet.decode(s.word(i)));
    }
    doc["elements"] = words;
    doc["table"] = s.multiplication_table();
  }
  return doc;
}

void run_semigroup(const GlobalOptions& g, const SemigroupArgs& args) {
  const int modes = int(args.syntactic) + int(args.action) + int(args.check_iso);
  if (modes != 1) {
    throw ebwt::InputError("semigroup needs exactly one of --syntactic, "
                           "--action, --check-iso");
  }
  const std::string word = trim_word(read_input(args.input, g.file));
  const auto alphabet = pick_alphabet(g, word);
  const ebwt::Word u = alphabet.encode(word);
  const std::size_t guard = g.guard.value_or(ebwt::kDefaultClosureGuard);

  if (args.action) {
    if (!ebwt::is_primitive(u)) {
      throw ebwt::InputError("--action needs a primitive word, \"" + word +
                             "\" is a proper power");
    }
    const auto s = ebwt::action_semigroup(u, guard);
    std::string text = describe("", s, alphabet);
    if (args.table) {
      text += table_text(s, alphabet);
    }
    emit(g, semigroup_json(s, alphabet, args.table), text);
    return;
  }

  const auto syn = ebwt::syntactic_semigroup(u, guard);
  if (!syn.primitive) {
    std::cerr << "ebwt: warning: \"" << word
              << "\" is not primitive; the action semigroup is undefined\n";
  }
  if (args.syntactic) {
    std::string text = describe("", syn.semigroup, alphabet);
    text += "states " + std::to_string(syn.automaton.states()) + "\n";
    if (args.table) {
      text += table_text(syn.semigroup, alphabet);
    }
    json doc = semigroup_json(syn.semigroup, alphabet, args.table);
    doc["states"] = syn.automaton.states();
    doc["primitive"] = syn.primitive;
    emit(g, doc, text);
    return;
  }

  if (!syn.primitive) {
    throw ebwt::InputError("--check-iso needs a primitive word");
  }
  const auto act = ebwt::action_semigroup(u, guard);
  const bool iso = ebwt::letter_induced_isomorphic(syn.semigroup, act);
  std::string text = "syntactic order " + std::to_string(syn.semigroup.size()) +
                     "\naction order " + std::to_string(act.size()) + "\n" +
                     (iso ? "ISOMORPHIC\n" : "NOT ISOMORPHIC\n");
  emit(g,
       json{{"syntactic_order", syn.semigroup.size()},
            {"action_order", act.size()},
            {"isomorphic", iso}},
       text);
}

// factors ------------------------------------------------------------------

struct FactorsArgs {
  std::optional<std::string> input;
  std::vector<std::size_t> max;
  std::vector<std::size_t> witness;
};

void run_factors(const GlobalOptions& g, const FactorsArgs& args) {
  const int modes = int(!args.max.empty()) + int(!args.witness.empty());
  if (modes > 1) {
    throw ebwt::InputError("factors takes at most one of --max, --witness");
  }
  if (!args.max.empty()) {
    const std::size_t n = args.max[0];
    const std::size_t k = args.max[1];
    const auto alphabet = alphabet_of_size(g, k);
    const std::uint64_t budget =
        g.guard.value_or(ebwt::kDefaultExhaustiveBudget);
    std::string text = "n f(n) upper witness\n";
    json rows = json::array();
    for (std::size_t len = 1; len <= n; ++len) {
      const auto best = ebwt::max_factors_exhaustive(len, k, budget);
      const std::uint64_t upper = ebwt::factor_upper_bound(len, k);
      const std::string witness = alphabet.decode(best.witness);
      text += std::to_string(len) + ' ' + std::to_string(best.value) + ' ' +
              std::to_string(upper) + ' ' + witness + '\n';
      rows.push_back(
          {{"n", len}, {"f", best.value}, {"upper", upper}, {"witness", witness}});
    }
    emit(g, json{{"k", k}, {"rows", rows}}, text);
    return;
  }
  if (!args.witness.empty()) {
    const std::size_t n = args.witness[0];
    const std::size_t k = args.witness[1];
    const auto alphabet = alphabet_of_size(g, k);
    const auto w = ebwt::debruijn_factor_witness(
        n, k, g.guard.value_or(ebwt::kDefaultDeBruijnGuard));
    const std::string word = alphabet.decode(w.word);
    std::string text = "word " + word + "\nspan " + std::to_string(w.span) +
                       "\ndistinct " + std::to_string(w.distinct) +
                       "\nbound " + std::to_string(w.bound) + "\n";
    emit(g,
         json{{"n", n},
              {"k", k},
              {"word", word},
              {"span", w.span},
              {"distinct", w.distinct},
              {"bound", w.bound}},
         text);
    return;
  }
  const std::string word = trim_word(read_input(args.input, g.file));
  const auto alphabet = pick_alphabet(g, word);
  const auto stats = ebwt::factor_stats(alphabet.encode(word), alphabet.size());
  emit(g,
       json{{"word", word}, {"length", stats.length}, {"distinct", stats.distinct}},
       std::to_string(stats.distinct) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Burrows-Wheeler transform toolkit", "ebwt"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--alphabet", g.alphabet,
                 "Letters in ascending order (default: inferred from input)");
  app.add_option("--guard-cells", g.guard,
                 "Override the resource guard of the chosen command");
  app.add_option("--file", g.file, "Read input from a file");

  TransformArgs transform_args;
  auto* transform = app.add_subcommand(
      "transform", "Transform of a necklace multiset (text or JSON input)");
  transform->add_option("input", transform_args.input, "Multiset text");
  transform->add_flag("--canonicalize", transform_args.canonicalize,
                      "Accept any primitive word and use its Lyndon rotation");

  InvertArgs invert_args;
  auto* invert = app.add_subcommand("invert", "Inverse transform of a word");
  invert->add_option("input", invert_args.input, "Word");

  DeBruijnArgs db_args;
  auto* debruijn = app.add_subcommand("debruijn", "de Bruijn words and sets");
  debruijn->add_option("span", db_args.span, "K N")->expected(0, 2);
  debruijn->add_flag("--least", db_args.least,
                     "Lexicographically least de Bruijn word of span N");
  debruijn->add_flag("--count", db_args.count,
                     "Number of de Bruijn words of span N");
  debruijn->add_option("--from-gamma", db_args.gamma,
                       "Invert a product of alphabet permutations");

  SemigroupArgs sg_args;
  auto* semigroup =
      app.add_subcommand("semigroup", "Necklace and syntactic semigroups");
  semigroup->add_option("input", sg_args.input, "Word u");
  semigroup->add_flag("--syntactic", sg_args.syntactic,
                      "Syntactic semigroup of the powers of u");
  semigroup->add_flag("--action", sg_args.action,
                      "Semigroup of letter actions on the necklace of u");
  semigroup->add_flag("--check-iso", sg_args.check_iso,
                      "Compare the two under the letter-induced map");
  semigroup->add_flag("--table", sg_args.table, "Print the multiplication table");

  FactorsArgs factor_args;
  auto* factors = app.add_subcommand("factors", "Distinct factor counts");
  factors->add_option("input", factor_args.input, "Word");
  factors->add_option("--max", factor_args.max, "N K: exhaustive f(1..N)")
      ->expected(2);
  factors->add_option("--witness", factor_args.witness,
                      "N K: de Bruijn prefix witness")
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*transform) {
      run_transform(g, transform_args);
    } else if (*invert) {
      run_invert(g, invert_args);
    } else if (*debruijn) {
      run_debruijn(g, db_args);
    } else if (*semigroup) {
      run_semigroup(g, sg_args);
    } else if (*factors) {
      run_factors(g, factor_args);
    }
  } catch (const ebwt::GuardError& e) {
    std::cerr << "ebwt: resource guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ebwt::InputError& e) {
    std::cerr << "ebwt: error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
