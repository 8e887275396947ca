#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "traag/mixed_graph.hpp"

namespace traag {

/// A maximal power g^e of one generator; e != 0.
struct Syllable {
  std::string generator;
  std::int64_t exponent = 1;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A group word as a list of syllables. The empty word is the identity.
/// Reduced words have no two adjacent syllables on the same generator.
struct Word {
  std::vector<Syllable> syllables;

  Word() = default;
  Word(std::initializer_list<Syllable> s) : syllables(s) {}
  explicit Word(std::vector<Syllable> s) : syllables(std::move(s)) {}

  bool empty() const noexcept { return syllables.empty(); }
  std::size_t size() const noexcept { return syllables.size(); }
  const Syllable& operator[](std::size_t i) const { return syllables[i]; }

  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Sum of |exponent| over all syllables.
std::int64_t letter_length(const Word& w);

/// Tokens "name" or "name^k" separated by whitespace; "" and "1" are the
/// identity. Tokens are kept as written; no reduction is applied.
Word parse_word(std::string_view text);
/// As above, additionally rejecting generators that are not vertices of `g`.
Word parse_word(std::string_view text, const MixedGraph& g);
std::string serialize_word(const Word& w);

Word free_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
/// u w u^-1, freely reduced.
Word conjugate(const Word& w, const Word& u);
/// Every exponent doubled: the image of v -> v^2.
Word square_map(const Word& w);

/// [a,b] = a b a^-1 b^-1 (a before b in canonical order) for an undirected
/// edge; [a,b> = a b a b^-1 for a directed edge with origin a and terminus b.
/// Throws UnknownEdge when `e` is not an edge record of `g`.
Word relator(const MixedGraph& g, const Edge& e);

/// Exchanges syllables i and i+1 using the defining relation between their
/// generators, then freely reduces. Commuting generators swap unchanged. For
/// a directed edge with origin p and terminus q, the terminus exponent is
/// kept and the origin exponent changes sign iff the terminus exponent is
/// odd: conjugating by q inverts p, so p^a q^b = q^b p^(a(-1)^b) and
/// q^b p^a = p^(a(-1)^b) q^b. Returns nullopt when the generators are not
/// adjacent. Throws PreconditionError for an invalid position or equal
/// generators.
std::optional<Word> swap_adjacent(const MixedGraph& g, const Word& w, std::size_t i);

/// Shortlex order: letter length first, then letters compared left to
/// right, a letter keyed by (vertex position, positive before negative).
bool shortlex_less(const MixedGraph& g, const Word& a, const Word& b);

/// The shortlex-least word representing the same element of T(g).
/// Throws UnknownGenerator.
Word normal_form(const MixedGraph& g, const Word& w);
bool equals(const MixedGraph& g, const Word& a, const Word& b);
bool is_identity(const MixedGraph& g, const Word& w);

/// Brute-force neighbourhood of a word: every freely reduced word reachable
/// from free_reduce(w) by at most `radius` applications of swap_adjacent
/// (free reduction after each move). Throws SizeLimit once more than `cap`
/// words have been collected, PreconditionError if w is longer than 10
/// letters.
std::set<Word> bfs_equivalence_class(const MixedGraph& g, const Word& w, std::size_t radius,
                                     std::size_t cap = 200000);

}  // namespace traag
