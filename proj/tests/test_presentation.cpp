#include "braidforge/presentation.hpp"
#include "catch_amalgamated.hpp"

using namespace braidforge;

TEST_CASE("artin families", "[presentation]") {
  Presentation b2 = artin(2);
  CHECK(b2.alphabet.arity() == 1);
  CHECK(b2.relators.empty());

  Presentation b3 = artin(3);
  REQUIRE(b3.relators.size() == 1);
  CHECK(b3.relators[0] == Word{1, 2, 1, -2, -1, -2});

  Presentation b4 = artin(4);
  CHECK(b4.alphabet.arity() == 3);
  REQUIRE(b4.relators.size() == 3);  // one commutation, two braid relations
  CHECK(b4.relators[0] == Word{1, 3, -1, -3});

  CHECK_THROWS_AS(artin(1), std::invalid_argument);
}

TEST_CASE("sphere families", "[presentation]") {
  Presentation s2 = sphere(2);
  REQUIRE(s2.relators.size() == 1);
  CHECK(s2.relators[0] == Word{1, 1});

  Presentation s3 = sphere(3);
  REQUIRE(s3.relators.size() == 2);
  CHECK(s3.relators[1] == Word{1, 2, 2, 1});
  CHECK(s3.label == "BS2:3");
}

TEST_CASE("projective plane families", "[presentation]") {
  Presentation p1 = projective_plane(1);
  CHECK(p1.alphabet.arity() == 1);
  REQUIRE(p1.relators.size() == 1);
  CHECK(p1.relators[0] == Word{1, 1});

  Presentation p2 = projective_plane(2);
  CHECK(p2.alphabet.arity() == 3);  // s1 r1 r2
  CHECK(p2.alphabet.name(2) == "r1");

  // family relation counts at n = 3: (i) 1, (ii) 2, (iii) 2, (iv) 2, (v) 1
  Presentation p3 = projective_plane(3);
  CHECK(p3.alphabet.arity() == 5);
  CHECK(p3.relators.size() == 8);
}

TEST_CASE("every family relator is in the kernel of the strand permutation map", "[presentation]") {
  for (int n = 2; n <= 6; ++n) {
    for (const Presentation& p : {artin(n), sphere(n), projective_plane(n)}) {
      auto images = strand_images(p);
      for (const Word& r : p.relators) CHECK(evaluate_perm(r, images).is_identity());
    }
  }
}

TEST_CASE("named words", "[presentation]") {
  CHECK(named_word(Family::Sphere, NamedElement::Alpha0, 4) == Word{1, 2, 3});
  CHECK(named_word(Family::Sphere, NamedElement::Alpha1, 4) == Word{1, 2, 3, 3});
  CHECK(named_word(Family::Sphere, NamedElement::Alpha2, 4) == Word{1, 2, 2});
  CHECK(named_word(Family::Artin, NamedElement::Garside, 3) == Word{1, 2, 1});
  CHECK(named_word(Family::Artin, NamedElement::Aij, 4, 1, 3) == Word{2, 1, 1, -2});
  CHECK(named_word(Family::Artin, NamedElement::Aij, 4, 2, 3) == Word{2, 2});

  // a = rn s{n-1} ... s1 and b = r{n-1} s{n-2} ... s1 over s1..s{n-1},r1..rn
  CHECK(named_word(Family::ProjectivePlane, NamedElement::LittleA, 2) == Word{3, 1});
  CHECK(named_word(Family::ProjectivePlane, NamedElement::LittleB, 2) == Word{2});
  CHECK(named_word(Family::ProjectivePlane, NamedElement::LittleA, 3) == Word{5, 2, 1});

  CHECK_THROWS_AS(named_word(Family::Sphere, NamedElement::Rho, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(named_word(Family::Artin, NamedElement::Aij, 4, 3, 3), std::invalid_argument);
}

TEST_CASE("full twist is the n-th power of alpha0", "[presentation]") {
  for (int n = 2; n <= 6; ++n) {
    Word delta_sq = named_word(Family::Artin, NamedElement::FullTwist, n);
    CHECK(delta_sq == power(named_word(Family::Artin, NamedElement::Alpha0, n), n));
  }
}

TEST_CASE("Y generating set has n elements of the expected shape", "[presentation]") {
  for (int n = 2; n <= 5; ++n) {
    auto ys = y_generating_set(Family::ProjectivePlane, n);
    REQUIRE(ys.size() == static_cast<std::size_t>(n));
    Word a = named_word(Family::ProjectivePlane, NamedElement::LittleA, n);
    Word bcap = named_word(Family::ProjectivePlane, NamedElement::BCap, n);
    CHECK(ys[0] == power(a, n));
    CHECK(ys[1] == bcap);
    if (n >= 3) CHECK(ys[2] == conjugate(bcap, a.inverse()));
  }
}

TEST_CASE("add_relators and central_quotient", "[presentation]") {
  Presentation b3 = artin(3);
  Presentation same = add_relators(b3, {});
  CHECK(same.relators == b3.relators);
  CHECK(same.label == b3.label);

  Presentation killed = add_relators(b3, {Word{1}});
  CHECK(killed.relators.size() == 2);
  CHECK(killed.label == "B:3/<<s1>>");
  CHECK(b3.relators.size() == 1);  // input not mutated

  Presentation m2 = central_quotient(artin(2), 2);
  REQUIRE(m2.relators.size() == 1);
  CHECK(m2.relators[0] == Word{1, 1});
  CHECK(m2.label == "MCG-D2:2");

  CHECK_THROWS_AS(central_quotient(artin(3), 4), std::invalid_argument);
}

TEST_CASE("labels are deterministic and group specs parse", "[presentation]") {
  CHECK(parse_group("B:4").label == "B:4");
  CHECK(parse_group("BS2:5").label == "BS2:5");
  CHECK(parse_group("BP2:3").alphabet.arity() == 5);
  CHECK(parse_group("MCG-S2:3").label == "MCG-S2:3");
  CHECK(parse_group("MCG-RP2:2").relators.size() == projective_plane(2).relators.size() + 1);
  CHECK_THROWS_AS(parse_group("XYZ:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("B4"), std::invalid_argument);
}

TEST_CASE("presentation DSL", "[presentation]") {
  Presentation p = parse_presentation("gens: s1 s2 ; rels: s1 s2 s1 s2^-1 s1^-1 s2^-1 , s1^2");
  CHECK(p.alphabet.arity() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == Word{1, 2, 1, -2, -1, -2});
  CHECK(p.relators[1] == Word{1, 1});
  CHECK_THROWS_AS(parse_presentation("nonsense"), std::invalid_argument);
}
