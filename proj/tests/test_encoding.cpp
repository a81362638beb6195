#include <set>

#include "doctest.h"
#include "ldq/encoding.hpp"
#include "support/generators.hpp"

using namespace ldq;

namespace {

Term u(const char* s) { return Term::uri(s); }

}  // namespace

TEST_CASE("triple encoding") {
  CHECK(enc_triple(Triple(u("num:1"), u("num:succ"), u("num:2"))) ==
        "⟨ <num:1> , <num:succ> , <num:2> ⟩");
  CHECK(enc_triple(Triple(u("a"), u("p"), Term::literal("x"))) ==
        "⟨ <a> , <p> , \"x\" ⟩");
  CHECK(enc_triple(Triple(Term::blank("d1", "b"), u("p"), u("o"))) ==
        "⟨ _:d1/b , <p> , <o> ⟩");
}

TEST_CASE("triple-set encoding sorts members") {
  CHECK(enc_triple_set({}) == "⟨⟨ ⟩⟩");
  Triple t1(u("a"), u("p"), u("x"));
  Triple t2(u("b"), u("p"), u("x"));
  std::string forward = enc_triple_set({t1, t2});
  CHECK(forward.find(enc_triple(t1)) < forward.find(enc_triple(t2)));
  CHECK(enc_triple_set({t2, t1}) == forward);
}

TEST_CASE("valuation encoding sorts variables") {
  CHECK(enc_valuation(Valuation{}) == "⟨⟨ ⟩⟩");
  Valuation mu;
  mu.bind(Variable{"v"}, u("num:2"));
  CHECK(enc_valuation(mu) == "⟨⟨ ?v → <num:2> ⟩⟩");

  Valuation two;
  two.bind(Variable{"b"}, u("x"));
  two.bind(Variable{"a"}, Term::literal("y"));
  CHECK(enc_valuation(two) == "⟨⟨ ?a → \"y\" , ?b → <x> ⟩⟩");
}

TEST_CASE("solution-set encoding is order-insensitive and line-based") {
  CHECK(enc_solution_set({}) == "");
  CHECK(enc_solution_set({Valuation{}}) == "⟨⟨ ⟩⟩\n");

  testing::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    SolutionSet sols = eval(*testing::random_expression(rng, 2), testing::random_graph(rng, 6));
    // Re-inserting in a different order must not change the text.
    SolutionSet reversed;
    for (auto it = sols.rbegin(); it != sols.rend(); ++it) reversed.insert(*it);
    CHECK(enc_solution_set(sols) == enc_solution_set(reversed));
  }
}

TEST_CASE("encodings are injective over random corpora") {
  testing::Rng rng(43);
  std::set<Triple> triples;
  std::set<std::string> triple_texts;
  for (int i = 0; i < 500; ++i) triples.insert(testing::random_triple(rng));
  for (const Triple& t : triples) triple_texts.insert(enc_triple(t));
  CHECK(triple_texts.size() == triples.size());

  std::set<Valuation> valuations;
  std::set<std::string> valuation_texts;
  for (int i = 0; i < 300; ++i) {
    SolutionSet sols = eval(*testing::random_expression(rng, 2), testing::random_graph(rng, 6));
    valuations.insert(sols.begin(), sols.end());
  }
  for (const Valuation& mu : valuations) valuation_texts.insert(enc_valuation(mu));
  CHECK(valuation_texts.size() == valuations.size());
}

TEST_CASE("encodings are deterministic for equal inputs") {
  testing::Rng rng_a(47);
  testing::Rng rng_b(47);
  for (int i = 0; i < 100; ++i) {
    Triple ta = testing::random_triple(rng_a);
    Triple tb = testing::random_triple(rng_b);
    REQUIRE(ta == tb);
    CHECK(enc_triple(ta) == enc_triple(tb));
  }
}
