#pragma once

#include <string>
#include <vector>

#include "braidforge/intmat.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/word.hpp"

namespace braidforge {

// Invariant-factor description of a finitely generated abelian group:
// torsion d1 | d2 | ... (all >= 2) plus the free rank.
struct AbelianInvariants {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  std::size_t min_generators() const { return torsion.size() + free_rank; }
  bool operator==(const AbelianInvariants&) const = default;

  // "0", "Z", "Z^3", "Z8", "Z2 x Z2", "Z x Z2", ...
  std::string str() const {
    std::string out;
    auto piece = [&](const std::string& s) {
      if (!out.empty()) out += " x ";
      out += s;
    };
    if (free_rank == 1) piece("Z");
    if (free_rank > 1) piece("Z^" + std::to_string(free_rank));
    for (const BigInt& d : torsion) piece("Z" + d.str());
    return out.empty() ? "0" : out;
  }
};

// One row per relator, one column per generator, entry = net exponent.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), static_cast<std::size_t>(p.alphabet.arity()));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto e = exponent_vector(p.alphabet.arity(), p.relators[r]);
    for (std::size_t c = 0; c < e.size(); ++c) m.at(r, c) = e[c];
  }
  return m;
}

namespace detail {

inline AbelianInvariants invariants_from_diagonal(const std::vector<BigInt>& diag, std::size_t n_gens) {
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const BigInt& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = n_gens - nonzero;
  return inv;
}

}  // namespace detail

// Abelianisation of the presented group (cokernel of the relation matrix
// acting on the generator lattice).
inline AbelianInvariants abelian_invariants(const Presentation& p) {
  if (p.alphabet.arity() == 0) return {};
  return detail::invariants_from_diagonal(smith_diagonal(relation_matrix(p)),
                                          static_cast<std::size_t>(p.alphabet.arity()));
}

// Prop-style lower bound: any (normal) generating set of the group has at
// least as many elements as a minimal generating set of its abelianisation.
inline std::size_t min_gens_lower_bound(const Presentation& p) {
  return abelian_invariants(p).min_generators();
}

// Image of a word in the computed abelianisation, in the coordinates of
// abelian_invariants: residues (mod each torsion factor, in [0, d)) followed
// by the free coordinates. The coordinates come from the column transform of
// the Smith normal form and are canonical only up to an automorphism of the
// abelian group.
struct AbelianImage {
  std::vector<BigInt> torsion_residues;
  std::vector<BigInt> free_coords;
  bool zero() const {
    for (const BigInt& x : torsion_residues)
      if (x != 0) return false;
    for (const BigInt& x : free_coords)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const AbelianImage&) const = default;
};

namespace detail {

struct AbelianMap {
  SmithResult snf;         // of the relation matrix
  std::size_t n_gens = 0;
};

inline AbelianMap abelian_map(const Presentation& p) {
  return {smith_normal_form(relation_matrix(p)), static_cast<std::size_t>(p.alphabet.arity())};
}

inline AbelianImage image_under(const AbelianMap& map, const Presentation& p, const Word& w) {
  p.check_word(w);
  auto e = exponent_vector(p.alphabet.arity(), w);
  // coordinates f = e * V  (e as a row vector)
  std::vector<BigInt> f(map.n_gens, 0);
  for (std::size_t j = 0; j < map.n_gens; ++j)
    for (std::size_t i = 0; i < map.n_gens; ++i) f[j] += BigInt(e[i]) * map.snf.v.at(i, j);
  AbelianImage img;
  std::size_t k = std::min(map.snf.d.rows(), map.snf.d.cols());
  for (std::size_t t = 0; t < map.n_gens; ++t) {
    BigInt d = t < k ? map.snf.d.at(t, t) : BigInt(0);
    if (d == 1) continue;  // trivial factor
    if (d == 0) {
      img.free_coords.push_back(f[t]);
    } else {
      BigInt r = f[t] % d;
      if (r < 0) r += d;
      img.torsion_residues.push_back(r);
    }
  }
  return img;
}

}  // namespace detail

inline AbelianImage abelianized_image(const Presentation& p, const Word& w) {
  return detail::image_under(detail::abelian_map(p), p, w);
}

// Net exponent sum over all generators; for presentations whose
// abelianisation is cyclic with every generator in one class, the value mod
// the group order is the canonical abelianised image.
inline BigInt total_exponent(const Presentation& p, const Word& w) {
  p.check_word(w);
  BigInt s = 0;
  for (Letter l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

}  // namespace braidforge
