#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

enum class Family {
  Artin,            // B:n      braid group of the disc
  Sphere,           // BS2:n    braid group of the 2-sphere
  ProjectivePlane,  // BP2:n    braid group of the projective plane
  McgDisc,          // MCG-D2:n
  McgSphere,        // MCG-S2:n
  McgRp2,           // MCG-RP2:n
  Custom,
};

inline bool has_rho_generators(Family f) {
  return f == Family::ProjectivePlane || f == Family::McgRp2;
}

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  Family family = Family::Custom;
  int strands = 0;  // number of strands n for the braid families, 0 otherwise
  std::string label;

  void check_word(const Word& w) const {
    if (w.max_index() > alphabet.arity())
      throw std::invalid_argument("presentation: word uses letters outside the alphabet");
  }
};

namespace detail {

// sigma_from ... sigma_to ascending; empty when from > to.
inline Word sigma_up(int from, int to) {
  Word w;
  for (int i = from; i <= to; ++i) w.push_reduced(i);
  return w;
}

// sigma_from ... sigma_to descending; empty when from < to.
inline Word sigma_down(int from, int to) {
  Word w;
  for (int i = from; i >= to; --i) w.push_reduced(i);
  return w;
}

}  // namespace detail

// Braid group of the disc on n strands: generators s1..s{n-1}, the usual
// commutation and braid relations, each relation u = v stored as the single
// relator u v^-1.
inline Presentation artin(int n) {
  if (n < 2) throw std::invalid_argument("artin: need n >= 2");
  Presentation p;
  p.alphabet = Alphabet::sigma(n);
  p.family = Family::Artin;
  p.strands = n;
  p.label = "B:" + std::to_string(n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.relators.push_back(Word{i, j, -i, -j});
  for (int i = 1; i <= n - 2; ++i)
    p.relators.push_back(Word{i, i + 1, i, -(i + 1), -i, -(i + 1)});
  return p;
}

// The word s1 ... s{n-2} s{n-1}^2 s{n-2} ... s1 (equal to 1 on the sphere).
inline Word sphere_surface_relator(int n) {
  if (n < 2) return Word{};
  Word w = detail::sigma_up(1, n - 2);
  w.push_reduced(n - 1);
  w.push_reduced(n - 1);
  w.append_reduced(detail::sigma_down(n - 2, 1));
  return w;
}

inline Presentation sphere(int n) {
  Presentation p = artin(n);
  p.family = Family::Sphere;
  p.label = "BS2:" + std::to_string(n);
  p.relators.push_back(sphere_surface_relator(n));
  return p;
}

// Braid group of the projective plane on n strands, generators
// s1..s{n-1}, r1..rn. The defining relations are
//   (i)   the commutation and braid relations among the s_i,
//   (ii)  s_i r_j = r_j s_i for j not in {i, i+1},
//   (iii) r_{i+1} = s_i^-1 r_i s_i^-1,
//   (iv)  r_{i+1}^-1 r_i^-1 r_{i+1} r_i = s_i^2,
//   (v)   r_1^2 = s1 ... s{n-2} s{n-1}^2 s{n-2} ... s1.
// For n = 1 this degenerates to < r1 | r1^2 >.
inline Presentation projective_plane(int n) {
  if (n < 1) throw std::invalid_argument("projective_plane: need n >= 1");
  Presentation p;
  p.alphabet = Alphabet::sigma_rho(n);
  p.family = Family::ProjectivePlane;
  p.strands = n;
  p.label = "BP2:" + std::to_string(n);
  auto rho = [n](int k) { return n - 1 + k; };  // generator index of r_k

  // (i)
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.relators.push_back(Word{i, j, -i, -j});
  for (int i = 1; i <= n - 2; ++i)
    p.relators.push_back(Word{i, i + 1, i, -(i + 1), -i, -(i + 1)});
  // (ii)
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      p.relators.push_back(Word{i, rho(j), -i, -rho(j)});
    }
  // (iii)
  for (int i = 1; i <= n - 1; ++i)
    p.relators.push_back(Word{rho(i + 1), i, -rho(i), i});
  // (iv)
  for (int i = 1; i <= n - 1; ++i)
    p.relators.push_back(Word{-rho(i + 1), -rho(i), rho(i + 1), rho(i), -i, -i});
  // (v)
  {
    Word w{rho(1), rho(1)};
    w.append_reduced(sphere_surface_relator(n).inverse());
    p.relators.push_back(w.cyclically_reduced());
  }
  return p;
}

// Quotient by the normal closure of the given words: presentation of the
// same generators with the words appended as relators (cyclic reduction
// replaces each word by a conjugate, which does not change the closure).
inline Presentation add_relators(const Presentation& p, const std::vector<Word>& ws) {
  Presentation q = p;
  std::string tail;
  for (const Word& w : ws) {
    p.check_word(w);
    q.relators.push_back(w.cyclically_reduced());
    if (!tail.empty()) tail += ",";
    tail += word_text(p.alphabet, w);
  }
  if (!ws.empty()) {
    q.family = Family::Custom;
    q.strands = p.strands;
    q.label = p.label + "/<<" + tail + ">>";
  }
  return q;
}

// --- named words ------------------------------------------------------------

enum class NamedElement {
  Alpha0,    // s1 ... s{n-1}
  Alpha1,    // s1 ... s{n-2} s{n-1}^2
  Alpha2,    // s1 ... s{n-3} s{n-2}^2
  Garside,   // (s1...s{n-1})(s1...s{n-2})...(s1 s2) s1
  FullTwist, // (s1...s{n-1})^n
  Aij,       // s{j-1}...s{i+1} s_i^2 s{i+1}^-1...s{j-1}^-1
  LittleA,   // rn s{n-1} ... s1
  LittleB,   // r{n-1} s{n-2} ... s1
  ACap,      // a^n
  BCap,      // b^{n-1}
  Rho,       // r_k
  YConj,     // a^-j b^{n-1} a^j, j = 0..n-2
};

inline std::optional<NamedElement> named_element_from_string(std::string_view s) {
  if (s == "alpha0") return NamedElement::Alpha0;
  if (s == "alpha1") return NamedElement::Alpha1;
  if (s == "alpha2") return NamedElement::Alpha2;
  if (s == "garside" || s == "delta") return NamedElement::Garside;
  if (s == "full_twist") return NamedElement::FullTwist;
  if (s == "a") return NamedElement::LittleA;
  if (s == "b") return NamedElement::LittleB;
  if (s == "A") return NamedElement::ACap;
  if (s == "B") return NamedElement::BCap;
  return std::nullopt;
}

// Builds the named element as a word over the alphabet of the family.
// i and j parametrise Aij (pair), Rho (k = i) and YConj (j = i).
inline Word named_word(Family family, NamedElement name, int n, int i = 0, int j = 0) {
  bool rho_ok = has_rho_generators(family);
  auto need_rho = [&] {
    if (!rho_ok)
      throw std::invalid_argument("named_word: element needs the rho generators of the RP2 family");
  };
  auto rho = [n](int k) { return n - 1 + k; };
  switch (name) {
    case NamedElement::Alpha0:
      if (n < 2) throw std::invalid_argument("named_word: alpha0 needs n >= 2");
      return detail::sigma_up(1, n - 1);
    case NamedElement::Alpha1: {
      if (n < 2) throw std::invalid_argument("named_word: alpha1 needs n >= 2");
      Word w = detail::sigma_up(1, n - 2);
      w.push_reduced(n - 1);
      w.push_reduced(n - 1);
      return w;
    }
    case NamedElement::Alpha2: {
      if (n < 3) throw std::invalid_argument("named_word: alpha2 needs n >= 3");
      Word w = detail::sigma_up(1, n - 3);
      w.push_reduced(n - 2);
      w.push_reduced(n - 2);
      return w;
    }
    case NamedElement::Garside: {
      Word w;
      for (int top = n - 1; top >= 1; --top) w.append_reduced(detail::sigma_up(1, top));
      return w;
    }
    case NamedElement::FullTwist:
      return power(detail::sigma_up(1, n - 1), n);
    case NamedElement::Aij: {
      if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("named_word: Aij needs 1 <= i < j <= n");
      Word c = detail::sigma_down(j - 1, i + 1);
      Word w = c;
      w.push_reduced(i);
      w.push_reduced(i);
      w.append_reduced(c.inverse());
      return w;
    }
    case NamedElement::LittleA: {
      need_rho();
      Word w = Word::generator(rho(n));
      w.append_reduced(detail::sigma_down(n - 1, 1));
      return w;
    }
    case NamedElement::LittleB: {
      need_rho();
      if (n < 2) throw std::invalid_argument("named_word: b needs n >= 2");
      Word w = Word::generator(rho(n - 1));
      w.append_reduced(detail::sigma_down(n - 2, 1));
      return w;
    }
    case NamedElement::ACap:
      need_rho();
      return power(named_word(family, NamedElement::LittleA, n), n);
    case NamedElement::BCap:
      need_rho();
      return power(named_word(family, NamedElement::LittleB, n), n - 1);
    case NamedElement::Rho:
      need_rho();
      if (i < 1 || i > n) throw std::invalid_argument("named_word: rho index out of range");
      return Word::generator(rho(i));
    case NamedElement::YConj: {
      need_rho();
      if (i < 0 || i > n - 2) throw std::invalid_argument("named_word: Y conjugate index out of range");
      Word a = named_word(family, NamedElement::LittleA, n);
      Word b_pow = named_word(family, NamedElement::BCap, n);
      return conjugate(b_pow, power(a, -i));
    }
  }
  throw std::logic_error("named_word: unreachable");
}

// The full torsion generating set of the pure RP2 braid group:
// { a^n } followed by a^-j b^{n-1} a^j for j = 0..n-2.
inline std::vector<Word> y_generating_set(Family family, int n) {
  std::vector<Word> ys;
  ys.push_back(named_word(family, NamedElement::ACap, n));
  for (int j = 0; j <= n - 2; ++j) ys.push_back(named_word(family, NamedElement::YConj, n, j));
  return ys;
}

// All pure braid generators A_{i,j}, 1 <= i < j <= n, in lexicographic order.
inline std::vector<Word> aij_generating_set(Family family, int n) {
  std::vector<Word> ws;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) ws.push_back(named_word(family, NamedElement::Aij, n, i, j));
  return ws;
}

// Central quotient by the full twist; this is the mapping class group of the
// corresponding surface with n marked points.
inline Presentation central_quotient(const Presentation& p, int n) {
  if (p.strands != n) throw std::invalid_argument("central_quotient: strand count mismatch");
  Presentation q = p;
  q.relators.push_back(named_word(p.family, NamedElement::FullTwist, n).cyclically_reduced());
  switch (p.family) {
    case Family::Artin:
      q.family = Family::McgDisc;
      q.label = "MCG-D2:" + std::to_string(n);
      break;
    case Family::Sphere:
      q.family = Family::McgSphere;
      q.label = "MCG-S2:" + std::to_string(n);
      break;
    case Family::ProjectivePlane:
      q.family = Family::McgRp2;
      q.label = "MCG-RP2:" + std::to_string(n);
      break;
    default:
      throw std::invalid_argument("central_quotient: not a braid family presentation");
  }
  return q;
}

// Images of the generators under the permutation map to S_n:
// s_i -> (i, i+1) and r_j -> identity.
inline GeneratorImages strand_images(const Presentation& p) {
  if (p.strands < 1) throw std::invalid_argument("strand_images: presentation has no strand count");
  int n = p.strands;
  GeneratorImages images;
  for (int i = 1; i <= n - 1; ++i) images.push_back(Permutation::transposition(n, i, i + 1));
  if (has_rho_generators(p.family))
    for (int k = 1; k <= n; ++k) images.push_back(Permutation::identity(n));
  return images;
}

// --- family / group spec parsing -------------------------------------------

// "B:4", "BS2:5", "BP2:3", "MCG-D2:4", "MCG-S2:3", "MCG-RP2:2"
inline Presentation parse_group(std::string_view spec) {
  auto pos = spec.find(':');
  if (pos == std::string_view::npos)
    throw std::invalid_argument("group: expected FAMILY:n, got '" + std::string(spec) + "'");
  std::string fam(spec.substr(0, pos));
  int n = 0;
  try {
    std::size_t used = 0;
    std::string num(spec.substr(pos + 1));
    n = std::stoi(num, &used);
    if (used != num.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("group: bad strand count in '" + std::string(spec) + "'");
  }
  if (fam == "B") return artin(n);
  if (fam == "BS2") return sphere(n);
  if (fam == "BP2") return projective_plane(n);
  if (fam == "MCG-D2") return central_quotient(artin(n), n);
  if (fam == "MCG-S2") return central_quotient(sphere(n), n);
  if (fam == "MCG-RP2") return central_quotient(projective_plane(n), n);
  throw std::invalid_argument("group: unknown family '" + fam + "'");
}

// Text DSL for arbitrary presentations:
//   gens: s1 s2 ; rels: s1 s2 s1 s2^-1 s1^-1 s2^-1 , s1^2
inline Presentation parse_presentation(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("presentation: expected 'gens: ... ; rels: ...'");
  std::string_view gpart = strip(text.substr(0, semi));
  std::string_view rpart = strip(text.substr(semi + 1));
  if (!gpart.starts_with("gens:") || !rpart.starts_with("rels:"))
    throw std::invalid_argument("presentation: expected 'gens: ... ; rels: ...'");
  gpart = strip(gpart.substr(5));
  rpart = strip(rpart.substr(5));

  std::vector<std::string> names;
  {
    std::istringstream in{std::string(gpart)};
    std::string tok;
    while (in >> tok) names.push_back(tok);
  }
  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  p.family = Family::Custom;
  p.label = "custom";

  std::string rels(rpart);
  std::size_t start = 0;
  while (start <= rels.size()) {
    auto comma = rels.find(',', start);
    std::string piece = comma == std::string::npos ? rels.substr(start) : rels.substr(start, comma - start);
    bool last = comma == std::string::npos;
    Word w = parse_word(p.alphabet, piece);
    if (!w.empty()) p.relators.push_back(w);
    if (last) break;
    start = comma + 1;
  }
  return p;
}

}  // namespace braidforge
