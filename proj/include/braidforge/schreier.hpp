#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidforge/coset_table.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/word.hpp"

namespace braidforge {

// Coset representatives read off the standardised table by breadth-first
// search; coset 1 gets the empty word and the set is prefix-closed.
struct SchreierTransversal {
  std::vector<Word> reps;  // reps[c - 1] is the representative of coset c

  const Word& rep(std::uint32_t coset) const { return reps.at(coset - 1); }
};

inline SchreierTransversal schreier_transversal(const CosetTable& t) {
  SchreierTransversal tr;
  tr.reps.resize(t.n_cosets());
  std::vector<bool> seen(t.n_cosets() + 1, false);
  std::vector<std::uint32_t> queue{1};
  seen[1] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t c = queue[head];
    for (int g = 1; g <= t.n_gens(); ++g)
      for (Letter l : {Letter(g), Letter(-g)}) {
        std::uint32_t d = t.act(c, l);
        if (seen[d]) continue;
        seen[d] = true;
        tr.reps[d - 1] = concat(tr.reps[c - 1], Word::generator(letter_index(l), l > 0 ? +1 : -1));
        queue.push_back(d);
      }
  }
  for (bool s : seen)
    if (!s) throw std::logic_error("transversal: table not transitive");
  return tr;
}

namespace detail {

struct SchreierEdges {
  // gen_index[(c-1) * n_gens + (g-1)]: 1-based Schreier generator of the edge
  // (c, g), or 0 when the edge lies in the spanning tree.
  std::vector<std::size_t> gen_index;
  std::size_t n_schreier = 0;
};

inline SchreierEdges schreier_edges(const CosetTable& t, const SchreierTransversal& tr) {
  SchreierEdges e;
  e.gen_index.assign(t.n_cosets() * static_cast<std::size_t>(t.n_gens()), 0);
  for (std::uint32_t c = 1; c <= t.n_cosets(); ++c)
    for (int g = 1; g <= t.n_gens(); ++g) {
      std::uint32_t d = t.act(c, g);
      // tree edge iff  rep(c) * g  is freely equal to rep(d)
      if (concat(tr.rep(c), Word::generator(g)) == tr.rep(d)) continue;
      e.gen_index[(c - 1) * t.n_gens() + (g - 1)] = ++e.n_schreier;
    }
  return e;
}

// Rewrites the trace of w starting at coset c into Schreier generators.
inline Word rewrite(const CosetTable& t, const SchreierEdges& e, std::uint32_t c, const Word& w) {
  Word out;
  for (Letter l : w.letters()) {
    if (l > 0) {
      std::size_t s = e.gen_index[(c - 1) * t.n_gens() + (l - 1)];
      if (s != 0) out.push_reduced(static_cast<Letter>(s));
      c = t.act(c, l);
    } else {
      std::uint32_t b = t.act(c, l);  // edge (b, -l) leads back to c
      std::size_t s = e.gen_index[(b - 1) * t.n_gens() + (-l - 1)];
      if (s != 0) out.push_reduced(-static_cast<Letter>(s));
      c = b;
    }
  }
  return out;
}

}  // namespace detail

// Number of Schreier generators before any simplification:
// index * |gens| - (index - 1).
inline std::size_t schreier_generator_count(const CosetTable& t) {
  return detail::schreier_edges(t, schreier_transversal(t)).n_schreier;
}

// Reidemeister-Schreier presentation of the subgroup a completed coset table
// describes: generators are the non-tree edges (c, g), relators are the
// rewritten conjugates  rep(c) r rep(c)^-1  of the relators r of p.
//
// Simplification is conservative: empty relators are dropped and a relator
// that reduces to a single letter forces its generator trivial, which deletes
// the generator everywhere; nothing more aggressive is attempted.
inline Presentation subgroup_presentation(const Presentation& p, const CosetTable& t,
                                          bool simplify = true) {
  if (p.alphabet.arity() != t.n_gens())
    throw std::invalid_argument("subgroup_presentation: table does not match presentation");
  SchreierTransversal tr = schreier_transversal(t);
  detail::SchreierEdges edges = detail::schreier_edges(t, tr);

  std::vector<Word> relators;
  for (std::uint32_t c = 1; c <= t.n_cosets(); ++c)
    for (const Word& r : p.relators) relators.push_back(detail::rewrite(t, edges, c, r));

  std::vector<bool> killed(edges.n_schreier + 1, false);
  if (simplify) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Word& r : relators)
        if (r.length() == 1) {
          std::size_t g = static_cast<std::size_t>(letter_index(r.letters()[0]));
          if (!killed[g]) {
            killed[g] = true;
            changed = true;
          }
        }
      if (!changed) break;
      for (Word& r : relators) {
        Word next;
        for (Letter l : r.letters())
          if (!killed[static_cast<std::size_t>(letter_index(l))]) next.push_reduced(l);
        r = std::move(next);
      }
    }
  }

  // renumber surviving generators
  std::vector<Letter> renumber(edges.n_schreier + 1, 0);
  std::vector<std::string> names;
  Letter next = 0;
  for (std::size_t g = 1; g <= edges.n_schreier; ++g) {
    if (killed[g]) continue;
    renumber[g] = ++next;
    names.push_back("y" + std::to_string(next));
  }

  Presentation sub;
  sub.alphabet = Alphabet(std::move(names));
  sub.family = Family::Custom;
  sub.strands = 0;
  sub.label = "sub(" + p.label + ", index " + std::to_string(t.n_cosets()) + ")";
  for (const Word& r : relators) {
    Word w;
    for (Letter l : r.letters()) {
      Letter m = renumber[static_cast<std::size_t>(letter_index(l))];
      if (m != 0) w.push_reduced(l > 0 ? m : -m);
    }
    if (!w.empty()) sub.relators.push_back(w);
  }
  return sub;
}

// The word in the generators of the ambient group that a Schreier generator
// stands for:  rep(c) g rep(c.g)^-1. Useful for sanity traces.
inline std::vector<Word> schreier_generator_words(const CosetTable& t) {
  SchreierTransversal tr = schreier_transversal(t);
  detail::SchreierEdges edges = detail::schreier_edges(t, tr);
  std::vector<Word> words(edges.n_schreier);
  for (std::uint32_t c = 1; c <= t.n_cosets(); ++c)
    for (int g = 1; g <= t.n_gens(); ++g) {
      std::size_t s = edges.gen_index[(c - 1) * t.n_gens() + (g - 1)];
      if (s == 0) continue;
      words[s - 1] = concat(concat(tr.rep(c), Word::generator(g)), tr.rep(t.act(c, g)).inverse());
    }
  return words;
}

}  // namespace braidforge
