#include <set>

#include "braidforge/coset_table.hpp"
#include "braidforge/presentation.hpp"
#include "catch_amalgamated.hpp"

using namespace braidforge;

namespace {

EnumLimits felsch() {
  EnumLimits l;
  l.strategy = EnumLimits::Strategy::Felsch;
  return l;
}

// Runs both strategies, checks they agree, returns the HLT table.
CosetTable enumerate_both(const Presentation& p, const std::vector<Word>& sub) {
  EnumOutcome h = enumerate(p, sub);
  EnumOutcome f = enumerate(p, sub, felsch());
  REQUIRE(h.completed());
  REQUIRE(f.completed());
  CHECK(h.table->n_cosets() == f.table->n_cosets());
  CHECK(h.table->serialize() == f.table->serialize());
  return *h.table;
}

std::size_t closure_order(const GeneratorImages& images) {
  std::set<Permutation> seen(images.begin(), images.end());
  seen.insert(Permutation::identity(images.front().degree()));
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier)
      for (const Permutation& g : images) {
        Permutation y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("orders of the finite braid groups", "[coset]") {
  CHECK(group_order(sphere(2)) == 2);
  CHECK(group_order(sphere(3)) == 12);
  CHECK(group_order(projective_plane(1)) == 2);
  CHECK(group_order(projective_plane(2)) == 16);
  CHECK(group_order(sphere(3), felsch()) == 12);
  CHECK(group_order(projective_plane(2), felsch()) == 16);
}

TEST_CASE("quotients of the sphere braid groups by torsion elements", "[coset]") {
  for (int n = 3; n <= 8; ++n) {
    Presentation bs = sphere(n);
    auto quot = [&](NamedElement e) {
      return group_order(add_relators(bs, {named_word(Family::Sphere, e, n)}));
    };
    CHECK(quot(NamedElement::Alpha1) == static_cast<std::size_t>(std::gcd(n, 2)));
    CHECK(quot(NamedElement::Alpha0) == static_cast<std::size_t>(n - 1));
    if (n == 3)
      CHECK(quot(NamedElement::Alpha2) == 6);
    else
      CHECK(quot(NamedElement::Alpha2) == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("normal closure of s1 is the whole braid group", "[coset]") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(group_order(add_relators(artin(n), {Word{1}})) == 1);
    CHECK(group_order(add_relators(sphere(n), {Word{1}})) == 1);
  }
}

TEST_CASE("generating sets have index 1", "[coset]") {
  for (int n = 3; n <= 6; ++n) {
    Presentation bs = sphere(n);
    std::vector<Word> gens{named_word(Family::Sphere, NamedElement::Alpha0, n),
                           named_word(Family::Sphere, NamedElement::Alpha1, n)};
    EnumOutcome out = enumerate(bs, gens);
    REQUIRE(out.completed());
    CHECK(out.table->n_cosets() == 1);
  }
  for (int n = 2; n <= 5; ++n) {
    Presentation bp = projective_plane(n);
    std::vector<Word> gens{named_word(Family::ProjectivePlane, NamedElement::LittleA, n),
                           named_word(Family::ProjectivePlane, NamedElement::LittleB, n)};
    EnumOutcome out = enumerate(bp, gens);
    REQUIRE(out.completed());
    CHECK(out.table->n_cosets() == 1);
  }
}

TEST_CASE("RP2 quotients by the normal closures of a and b", "[coset]") {
  for (int n = 2; n <= 5; ++n) {
    Presentation bp = projective_plane(n);
    for (NamedElement e : {NamedElement::LittleA, NamedElement::LittleB})
      CHECK(group_order(add_relators(bp, {named_word(Family::ProjectivePlane, e, n)})) == 2);
  }
}

TEST_CASE("pure braid generating sets have index n!", "[coset]") {
  auto factorial = [](int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int n = 3; n <= 4; ++n) {
    CosetTable t = enumerate_both(artin(n), aij_generating_set(Family::Artin, n));
    CHECK(t.n_cosets() == factorial(n));
  }
  for (int n = 2; n <= 3; ++n) {
    std::vector<Word> gens = aij_generating_set(Family::ProjectivePlane, n);
    for (int k = 1; k <= n; ++k) gens.push_back(named_word(Family::ProjectivePlane, NamedElement::Rho, n, k));
    CosetTable t = enumerate_both(projective_plane(n), gens);
    CHECK(t.n_cosets() == factorial(n));
  }
  for (int n = 2; n <= 4; ++n) {
    CosetTable t = enumerate_both(projective_plane(n), y_generating_set(Family::ProjectivePlane, n));
    CHECK(t.n_cosets() == factorial(n));
  }
}

TEST_CASE("permutation representation is sound", "[coset]") {
  Presentation p = sphere(3);
  EnumOutcome out = enumerate(p, {});
  REQUIRE(out.completed());
  GeneratorImages images = permutation_representation(*out.table);
  for (const Word& r : p.relators) CHECK(evaluate_perm(r, images).is_identity());
  CHECK(closure_order(images) == 12);  // regular representation

  // subgroup tables: point 1 fixed by the subgroup generators
  std::vector<Word> sub = aij_generating_set(Family::Artin, 4);
  EnumOutcome ps = enumerate(artin(4), sub);
  REQUIRE(ps.completed());
  GeneratorImages sub_images = permutation_representation(*ps.table);
  for (const Word& w : sub) CHECK(evaluate_perm(w, sub_images).image(1) == 1);
  CHECK(closure_order(sub_images) == 24);  // factors through the S_4 coset action
}

TEST_CASE("Lagrange consistency", "[coset]") {
  Presentation p = projective_plane(2);
  std::size_t order = *group_order(p);
  for (const std::vector<Word>& sub :
       {std::vector<Word>{named_word(Family::ProjectivePlane, NamedElement::LittleA, 2)},
        std::vector<Word>{named_word(Family::ProjectivePlane, NamedElement::LittleB, 2)},
        std::vector<Word>{named_word(Family::ProjectivePlane, NamedElement::Rho, 2, 1)}}) {
    EnumOutcome out = enumerate(p, sub);
    REQUIRE(out.completed());
    CHECK(order % out.table->n_cosets() == 0);
  }
}

TEST_CASE("determinism: identical runs serialize identically", "[coset]") {
  Presentation p = sphere(3);
  EnumOutcome a = enumerate(p, {});
  EnumOutcome b = enumerate(p, {});
  REQUIRE(a.completed());
  REQUIRE(b.completed());
  CHECK(a.table->serialize() == b.table->serialize());
  CHECK(*a.table == *b.table);
}

TEST_CASE("resource exhaustion is inconclusive, not refutation", "[coset]") {
  EnumLimits tight;
  tight.max_cosets = 200;
  EnumOutcome out = enumerate(artin(3), {}, tight);  // infinite group
  CHECK(!out.completed());
  CHECK(out.cosets_used >= 200);

  EnumLimits tight_felsch = tight;
  tight_felsch.strategy = EnumLimits::Strategy::Felsch;
  CHECK(!enumerate(artin(3), {}, tight_felsch).completed());
}

TEST_CASE("malformed subgroup words are rejected", "[coset]") {
  CHECK_THROWS_AS(enumerate(artin(3), {Word{7}}), std::invalid_argument);
}

TEST_CASE("table serialization format", "[coset]") {
  // sphere(2) = <s1 | s1^2>: two cosets swapped by s1
  EnumOutcome out = enumerate(sphere(2), {});
  REQUIRE(out.completed());
  CHECK(out.table->serialize() == "2 2\n1 1\n");
  CHECK(out.table->act(1, 1) == 2);
  CHECK(out.table->trace(1, Word{1, 1}) == 1);
}
