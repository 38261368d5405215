#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geomult/cartan.hpp"

using namespace geomult;

TEST_CASE("A2 root datum basics") {
  RootDatum d = RootDatum::make("A", 2);
  CHECK(d.rank() == 2);
  CHECK(d.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(d.simple_root(1).c == std::vector<long>{2, -1});
  CHECK(d.simple_root(2).c == std::vector<long>{-1, 2});
  CHECK(d.simple_coroot(1).c == std::vector<long>{2, -1});
  CHECK(d.rho().c == std::vector<long>{1, 1});
  CHECK(d.num_positive_roots() == 3);
  CHECK(d.is_positive_root(Weight{{1, 1}}));
  CHECK(!d.is_positive_root(Weight{{1, 0}}));
}

TEST_CASE("reflections and Weyl action") {
  RootDatum d = RootDatum::make("A", 2);
  Weight w{{1, 0}};
  CHECK(d.simple_reflection(1, w).c == std::vector<long>{-1, 1});
  CHECK(d.simple_reflection(2, w).c == std::vector<long>{1, 0});
  WeylElt w0 = d.longest_element();
  CHECK(w0.length() == 3);
  CHECK(d.canonical_word(w0) == std::vector<int>{1, 2, 1});
  // w0 sends dominant to antidominant: w0 omega_1 = -omega_2
  CHECK(d.weyl_act(w0, Weight{{1, 0}}).c == std::vector<long>{0, -1});
  CHECK(d.star(1) == 2);
  CHECK(d.star(2) == 1);
}

TEST_CASE("words and lengths") {
  RootDatum d = RootDatum::make("A", 2);
  CHECK(d.is_reduced({1, 2, 1}));
  CHECK(d.is_reduced({2, 1, 2}));
  CHECK(!d.is_reduced({1, 1}));
  CHECK(d.from_word({1, 2, 1}) == d.from_word({2, 1, 2}));
  CHECK(d.length(d.from_word({1, 2})) == 2);
  auto words = d.all_reduced_words(d.longest_element());
  CHECK(words.size() == 2);
  CHECK(d.all_elements().size() == 6);
}

TEST_CASE("group operations") {
  RootDatum d = RootDatum::make("A", 3);
  WeylElt w0 = d.longest_element();
  CHECK(w0.length() == 6);
  CHECK(d.multiply(w0, w0).is_identity());
  CHECK(d.inverse(w0) == w0);
  WeylElt s1 = d.simple_elt(1);
  WeylElt s2 = d.simple_elt(2);
  // braid relation s1 s2 s1 = s2 s1 s2
  CHECK(d.multiply(d.multiply(s1, s2), s1) == d.multiply(d.multiply(s2, s1), s2));
  CHECK(d.star(1) == 3);
  CHECK(d.star(2) == 2);
}

TEST_CASE("parabolic longest elements") {
  RootDatum d = RootDatum::make("A", 3);
  CHECK(d.longest_element(std::vector<int>{}).is_identity());
  CHECK(d.longest_element(std::vector<int>{1}).length() == 1);
  CHECK(d.longest_element(std::vector<int>{1, 3}).length() == 2);
  CHECK(d.longest_element(std::vector<int>{1, 2}).length() == 3);
  CHECK(d.longest_element(std::vector<int>{1, 2, 3}) == d.longest_element());
}

TEST_CASE("bipartite presentation of w0") {
  for (int r : {2, 3}) {
    RootDatum d = RootDatum::make("A", r);
    auto bp = d.bipartite_w0();
    // reassemble w0 = (ab)^n a^eps
    WeylElt w = d.identity_elt();
    for (int k = 0; k < bp.n; ++k) w = d.multiply(w, d.multiply(bp.a, bp.b));
    if (bp.eps) w = d.multiply(w, bp.a);
    CHECK(w == d.longest_element());
  }
  RootDatum d3 = RootDatum::make("A", 3);
  auto bp = d3.bipartite_w0();
  CHECK(bp.a.length() + bp.b.length() == 3);
}

TEST_CASE("langlands dual") {
  RootDatum b2 = RootDatum::make("B", 2);
  RootDatum c2 = b2.langlands_dual();
  CHECK(c2.cartan()[0][1] == b2.cartan()[1][0]);
  CHECK(c2.cartan()[1][0] == b2.cartan()[0][1]);
  RootDatum a2 = RootDatum::make("A", 2);
  CHECK(a2.langlands_dual().cartan() == a2.cartan());
  RootDatum g2 = RootDatum::make("G", 2);
  CHECK(g2.num_positive_roots() == 6);
}

TEST_CASE("minimal lift weight") {
  RootDatum d = RootDatum::make("A", 2);
  // lambda_i = omega_i + s_i omega_i = 2 omega_i - alpha_i
  Weight l1 = d.minimal_lift_weight(1);
  CHECK(l1.c == std::vector<long>{0, 1});
  Weight l2 = d.minimal_lift_weight(2);
  CHECK(l2.c == std::vector<long>{1, 0});
}

TEST_CASE("symmetrized form") {
  RootDatum b2 = RootDatum::make("B", 2);
  auto B = b2.symmetrized_form();
  CHECK(B[0][1] == B[1][0]);
  RootDatum g2 = RootDatum::make("G", 2);
  auto Bg = g2.symmetrized_form();
  CHECK(Bg[0][1] == Bg[1][0]);
}
