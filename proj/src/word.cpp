#include "traag/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "traag/errors.hpp"

namespace traag {

namespace {

// Index-level syllable used inside the rewriting engine.
struct Letter {
  std::size_t gen;
  std::int64_t exp;
};

using IndexWord = std::vector<Letter>;

IndexWord to_index(const MixedGraph& g, const Word& w) {
  IndexWord out;
  out.reserve(w.size());
  for (const auto& s : w.syllables) {
    auto i = g.find(s.generator);
    if (!i) throw UnknownGenerator(s.generator);
    out.push_back({*i, s.exponent});
  }
  return out;
}

Word from_index(const MixedGraph& g, const IndexWord& w) {
  Word out;
  out.syllables.reserve(w.size());
  for (const auto& l : w) out.syllables.push_back({g.name(l.gen), l.exp});
  return out;
}

bool odd(std::int64_t e) { return (e % 2) != 0; }

// Exchanges w[p] and w[p+1], whose generators must be adjacent in g.
void exchange(const MixedGraph& g, IndexWord& w, std::size_t p) {
  Letter& left = w[p];
  Letter& right = w[p + 1];
  switch (g.link(left.gen, right.gen)) {
    case Link::Undirected: break;
    case Link::Out:  // left is the origin
      if (odd(right.exp)) left.exp = -left.exp;
      break;
    case Link::In:  // right is the origin
      if (odd(left.exp)) right.exp = -right.exp;
      break;
    case Link::None: throw InternalDisagreement("exchange of non-adjacent generators");
  }
  std::swap(left, right);
}

void free_reduce_in_place(IndexWord& w) {
  IndexWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  w = std::move(out);
}

// Merges syllables on one generator whenever everything between them
// shuffles past; repeats until no such pair exists.
void syllable_reduce(const MixedGraph& g, IndexWord& w) {
  free_reduce_in_place(w);
  for (;;) {
    bool merged = false;
    for (std::size_t j = 1; j < w.size() && !merged; ++j) {
      const std::size_t x = w[j].gen;
      std::size_t k = j;
      while (k > 0 && w[k - 1].gen != x && g.adjacent(w[k - 1].gen, x)) --k;
      if (k == 0 || w[k - 1].gen != x) continue;
      for (std::size_t p = j; p > k; --p) exchange(g, w, p - 1);
      w[k - 1].exp += w[k].exp;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
      if (w[k - 1].exp == 0) w.erase(w.begin() + static_cast<std::ptrdiff_t>(k - 1));
      free_reduce_in_place(w);
      merged = true;
    }
    if (!merged) return;
  }
}

// Lexicographically least shuffle of a reduced word: repeatedly bring the
// smallest generator that can reach the front to the front.
IndexWord least_shuffle(const MixedGraph& g, IndexWord w) {
  IndexWord out;
  out.reserve(w.size());
  std::size_t start = 0;
  while (start < w.size()) {
    std::size_t best = w.size();
    for (std::size_t k = start; k < w.size(); ++k) {
      bool reachable = true;
      for (std::size_t m = start; m < k && reachable; ++m) reachable = g.adjacent(w[m].gen, w[k].gen);
      if (reachable && (best == w.size() || w[k].gen < w[best].gen)) best = k;
    }
    for (std::size_t p = best; p > start; --p) exchange(g, w, p - 1);
    out.push_back(w[start]);
    ++start;
  }
  return out;
}

std::int64_t parse_exponent(std::string_view s) {
  std::int64_t v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || b == e) throw ParseError(0, "bad exponent '" + std::string(s) + "'");
  return v;
}

bool valid_generator(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

std::int64_t letter_length(const Word& w) {
  std::int64_t n = 0;
  for (const auto& s : w.syllables) n += std::llabs(s.exponent);
  return n;
}

Word parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<std::string> tokens;
  while (in >> tok) tokens.push_back(tok);
  Word w;
  if (tokens.size() == 1 && tokens.front() == "1") return w;
  for (const auto& t : tokens) {
    auto caret = t.find('^');
    std::string name = t.substr(0, caret);
    if (!valid_generator(name)) throw ParseError(0, "bad token '" + t + "'");
    std::int64_t e = 1;
    if (caret != std::string::npos) e = parse_exponent(std::string_view(t).substr(caret + 1));
    if (e == 0) throw ParseError(0, "zero exponent in '" + t + "'");
    w.syllables.push_back({name, e});
  }
  return w;
}

Word parse_word(std::string_view text, const MixedGraph& g) {
  Word w = parse_word(text);
  for (const auto& s : w.syllables)
    if (!g.has_vertex(s.generator)) throw ParseError(0, "unknown generator '" + s.generator + "'");
  return w;
}

std::string serialize_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (const auto& s : w.syllables) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return Word(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Syllable> out(w.syllables.rbegin(), w.syllables.rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return free_reduce(Word(std::move(out)));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Syllable> out = a.syllables;
  out.insert(out.end(), b.syllables.begin(), b.syllables.end());
  return free_reduce(Word(std::move(out)));
}

Word conjugate(const Word& w, const Word& u) { return concat(concat(u, w), invert(u)); }

Word square_map(const Word& w) {
  Word out = w;
  for (auto& s : out.syllables) s.exponent *= 2;
  return out;
}

Word relator(const MixedGraph& g, const Edge& e) {
  auto actual = g.has_vertex(e.first) && g.has_vertex(e.second) ? g.edge_between(e.first, e.second)
                                                                 : std::nullopt;
  bool matches = actual && actual->directed == e.directed && (!e.directed || *actual == e);
  if (!matches) throw UnknownEdge("not an edge of the graph: " + e.first + (e.directed ? " > " : " - ") + e.second);
  const std::string& a = actual->first;
  const std::string& b = actual->second;
  if (actual->directed) return Word{{a, 1}, {b, 1}, {a, 1}, {b, -1}};
  return Word{{a, 1}, {b, 1}, {a, -1}, {b, -1}};
}

std::optional<Word> swap_adjacent(const MixedGraph& g, const Word& w, std::size_t i) {
  if (i + 1 >= w.size()) throw PreconditionError("swap position out of range");
  IndexWord iw = to_index(g, w);
  if (iw[i].gen == iw[i + 1].gen) throw PreconditionError("swap of two syllables on one generator");
  if (!g.adjacent(iw[i].gen, iw[i + 1].gen)) return std::nullopt;
  exchange(g, iw, i);
  free_reduce_in_place(iw);
  return from_index(g, iw);
}

bool shortlex_less(const MixedGraph& g, const Word& a, const Word& b) {
  std::int64_t la = letter_length(a), lb = letter_length(b);
  if (la != lb) return la < lb;
  auto letters = [&](const Word& w) {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& s : w.syllables) {
      auto key = std::make_pair(g.index_of(s.generator), s.exponent > 0 ? 0 : 1);
      for (std::int64_t k = 0; k < std::llabs(s.exponent); ++k) out.push_back(key);
    }
    return out;
  };
  return letters(a) < letters(b);
}

Word normal_form(const MixedGraph& g, const Word& w) {
  IndexWord iw = to_index(g, w);
  syllable_reduce(g, iw);
  return from_index(g, least_shuffle(g, std::move(iw)));
}

bool equals(const MixedGraph& g, const Word& a, const Word& b) {
  return normal_form(g, a) == normal_form(g, b);
}

bool is_identity(const MixedGraph& g, const Word& w) { return normal_form(g, w).empty(); }

std::set<Word> bfs_equivalence_class(const MixedGraph& g, const Word& w, std::size_t radius,
                                     std::size_t cap) {
  if (letter_length(w) > 10) throw PreconditionError("oracle words are limited to 10 letters");
  IndexWord start = to_index(g, w);
  free_reduce_in_place(start);
  std::set<Word> seen{from_index(g, start)};
  std::vector<IndexWord> frontier{start};
  for (std::size_t step = 0; step < radius && !frontier.empty(); ++step) {
    std::vector<IndexWord> next;
    for (const auto& cur : frontier) {
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (!g.adjacent(cur[i].gen, cur[i + 1].gen)) continue;
        IndexWord moved = cur;
        exchange(g, moved, i);
        free_reduce_in_place(moved);
        if (seen.insert(from_index(g, moved)).second) {
          if (seen.size() > cap)
            throw SizeLimit("oracle frontier exceeded " + std::to_string(cap) + " words");
          next.push_back(std::move(moved));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace traag
