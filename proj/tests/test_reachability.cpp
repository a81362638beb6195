#include <algorithm>
#include <functional>

#include "doctest.h"
#include "ldq/parser.hpp"
#include "ldq/reachability.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ldq;
using Criterion = ReachabilityCriterion;

namespace {

Term u(const char* s) { return Term::uri(s); }

ExprPtr q(const char* text) { return parse_expression(text); }

std::set<DocumentId> doc_ids(const ReachablePart& part) {
  std::set<DocumentId> out;
  for (const auto& [uri, doc] : part.documents) out.insert(doc);
  return out;
}

}  // namespace

TEST_CASE("criterion evaluation per variant") {
  ExprPtr P = q("(<u1> <succ> ?v)");
  Triple matching(u("u1"), u("succ"), u("u2"));
  Triple other(u("u2"), u("succ"), u("u3"));

  CHECK(criterion_eval(Criterion::all(), other, u("x"), *P));
  CHECK_FALSE(criterion_eval(Criterion::none(), matching, u("u1"), *P));
  CHECK(criterion_eval(Criterion::match(), matching, u("anything"), *P));
  CHECK_FALSE(criterion_eval(Criterion::match(), other, u("anything"), *P));

  Triple t1(u("s"), u("p"), u("o"));
  Triple t2(u("s2"), u("p"), u("o"));
  Criterion disj = Criterion::const_or({u("a")}, {t1});
  CHECK(criterion_eval(disj, t2, u("a"), *P));
  CHECK(criterion_eval(disj, t1, u("b"), *P));
  CHECK_FALSE(criterion_eval(disj, t2, u("b"), *P));

  Criterion conj = Criterion::const_and({u("a")}, {t1});
  CHECK(criterion_eval(conj, t1, u("a"), *P));
  CHECK_FALSE(criterion_eval(conj, t1, u("b"), *P));
  CHECK_FALSE(criterion_eval(conj, t2, u("a"), *P));

  CHECK(criterion_eval(Criterion::const_u({u("a")}), t2, u("a"), *P));
  CHECK_FALSE(criterion_eval(Criterion::const_u({u("a")}), t2, u("b"), *P));
  CHECK(criterion_eval(Criterion::const_t({t1}), t1, u("zzz"), *P));
  CHECK_FALSE(criterion_eval(Criterion::const_t({t1}), t2, u("zzz"), *P));
}

TEST_CASE("restrictiveness of constant criteria") {
  Triple t1(u("s"), u("p"), u("o"));
  Triple t2(u("s2"), u("p"), u("o"));
  UriSet U = {u("a"), u("b")};
  UriSet U_small = {u("a")};
  TripleSet T = {t1, t2};
  TripleSet T_small = {t1};

  CHECK(less_restrictive_constant(Criterion::const_u(U), Criterion::const_u(U_small)) ==
        Restrictiveness::LessRestrictive);
  CHECK(less_restrictive_constant(Criterion::const_u(U_small), Criterion::const_u(U)) ==
        Restrictiveness::MoreRestrictive);
  CHECK(less_restrictive_constant(Criterion::const_t(T), Criterion::const_t(T_small)) ==
        Restrictiveness::LessRestrictive);

  CHECK(less_restrictive_constant(Criterion::const_or(U, T), Criterion::const_u(U)) ==
        Restrictiveness::LessRestrictive);
  CHECK(less_restrictive_constant(Criterion::const_or(U, T), Criterion::const_t(T)) ==
        Restrictiveness::LessRestrictive);
  CHECK(less_restrictive_constant(Criterion::const_u(U), Criterion::const_and(U, T)) ==
        Restrictiveness::LessRestrictive);
  CHECK(less_restrictive_constant(Criterion::const_t(T), Criterion::const_and(U, T)) ==
        Restrictiveness::LessRestrictive);
  CHECK(less_restrictive_constant(Criterion::const_and(U, T),
                                  Criterion::const_and(U_small, T_small)) ==
        Restrictiveness::LessRestrictive);
  CHECK(less_restrictive_constant(Criterion::const_or(U, T),
                                  Criterion::const_or(U_small, T_small)) ==
        Restrictiveness::LessRestrictive);

  CHECK(less_restrictive_constant(Criterion::const_u(U_small), Criterion::const_t(T_small)) ==
        Restrictiveness::Incomparable);
  CHECK(less_restrictive_constant(Criterion::const_u(U), Criterion::none()) ==
        Restrictiveness::LessRestrictive);
  CHECK(less_restrictive_constant(Criterion::none(), Criterion::const_u({})) ==
        Restrictiveness::Equivalent);
  CHECK(less_restrictive_constant(Criterion::none(), Criterion::const_and(U, {})) ==
        Restrictiveness::Equivalent);

  CHECK_THROWS_AS(less_restrictive_constant(Criterion::all(), Criterion::none()), Error);
  CHECK_THROWS_AS(less_restrictive_constant(Criterion::none(), Criterion::match()), Error);
}

TEST_CASE("restrictiveness agrees with exhaustive semantic evaluation") {
  // Universe: pool triples x pool URIs, with one URI and one triple that no
  // criterion ever uses, so strictness always has an in-universe witness.
  std::vector<Triple> triples;
  for (int i = 0; i < 9; ++i) {
    triples.emplace_back(u(("s" + std::to_string(i)).c_str()), u("p"), u("o"));
  }
  triples.emplace_back(u("outside"), u("p"), u("o"));
  std::vector<Term> uris = {u("a"), u("b"), u("c"), u("d"), u("never")};
  ExprPtr P = q("(?x <p> ?y)");

  testing::Rng rng(61);
  auto random_constant = [&]() -> Criterion {
    UriSet U;
    TripleSet T;
    for (int i = 0; i < 4; ++i) {
      if (testing::chance(rng, 0.4)) U.insert(uris[i]);
    }
    for (int i = 0; i < 9; ++i) {
      if (testing::chance(rng, 0.3)) T.insert(triples[i]);
    }
    switch (testing::pick(rng, 5)) {
      case 0:
        return Criterion::none();
      case 1:
        return Criterion::const_u(U);
      case 2:
        return Criterion::const_t(T);
      case 3:
        return Criterion::const_and(U, T);
      default:
        return Criterion::const_or(U, T);
    }
  };

  for (int i = 0; i < 200; ++i) {
    Criterion c1 = random_constant();
    Criterion c2 = random_constant();
    CAPTURE(i);
    CHECK(less_restrictive_constant(c1, c2) ==
          testing::semantic_restrictiveness(c1, c2, triples, uris, *P));
  }
}

TEST_CASE("empty seed set yields an empty complete part") {
  NumberWeb web = number_web();
  ReachablePart part =
      compute_reachable_part(web, {}, Criterion::all(), *q("(?x <num:succ> ?y)"),
                             Budget::unlimited());
  CHECK(part.documents.empty());
  CHECK(part.triples.empty());
  CHECK(part.complete);
  CHECK(part.lookups_spent == 0);
}

TEST_CASE("the none criterion stops at the seed documents") {
  NumberWeb web = number_web();
  ReachablePart part = compute_reachable_part(web, {u("num:1")}, Criterion::none(),
                                              *q("(?x <num:succ> ?y)"), Budget::unlimited());
  CHECK(doc_ids(part) == std::set<DocumentId>{DocumentId{"num:1"}});
  CHECK(part.complete);
  CHECK(part.lookups_spent == 0);
}

TEST_CASE("the match criterion follows only matching triples") {
  NumberWeb web = number_web();
  ReachablePart part = compute_reachable_part(web, {u("num:1")}, Criterion::match(),
                                              *q("(<num:1> <num:succ> ?v)"), Budget::unlimited());
  // The seed document's triple matches, so all three of its URIs are
  // expanded: <num:succ> is broken, <num:2> yields the second document whose
  // triple no longer matches.
  CHECK(doc_ids(part) == std::set<DocumentId>{DocumentId{"num:1"}, DocumentId{"num:2"}});
  CHECK(part.complete);
  CHECK(part.lookups_spent == 2);
}

TEST_CASE("the all criterion on an infinite web exhausts its budget") {
  NumberWeb web = number_web();
  ReachablePart part = compute_reachable_part(web, {u("num:1")}, Criterion::all(),
                                              *q("(?x <num:succ> ?y)"), Budget::limited(100));
  CHECK_FALSE(part.complete);
  CHECK(part.lookups_spent == 100);
  // Seed document plus one new document per non-broken lookup.
  CHECK(part.documents.size() == 100);
}

TEST_CASE("expansion order is deterministic and FIFO") {
  NumberWeb web = number_web();
  ReachablePart part = compute_reachable_part(web, {u("num:1")}, Criterion::all(),
                                              *q("(?x <num:succ> ?y)"), Budget::limited(4));
  REQUIRE(part.documents.size() == 4);
  CHECK(part.documents[0].second == DocumentId{"num:1"});
  CHECK(part.documents[1].second == DocumentId{"num:2"});
  CHECK(part.documents[2].second == DocumentId{"num:3"});
  CHECK(part.documents[3].second == DocumentId{"num:4"});
}

TEST_CASE("documents reachable via two URIs are stored once") {
  FiniteWeb web = parse_web(R"({
    "documents": {
      "hub": [["<a>", "<p>", "<b>"]],
      "leaf": [["<b>", "<p>", "<a>"]]
    },
    "adoc": { "<a>": "hub", "<b>": "leaf", "<p>": "hub" }
  })");
  ReachablePart part = compute_reachable_part(web, {u("a")}, Criterion::all(), *q("(?x <p> ?y)"),
                                              Budget::unlimited());
  CHECK(part.documents.size() == 2);
  CHECK(part.complete);
  // Data of a shared document appears once; seeds and discovered URIs are
  // deduplicated.
  CHECK(part.triples == all_data(web));
}

TEST_CASE("broken seeds are legal and contribute nothing") {
  NumberWeb web = number_web();
  ReachablePart part = compute_reachable_part(web, {u("nowhere"), u("num:3")}, Criterion::none(),
                                              *q("(?x <num:succ> ?y)"), Budget::unlimited());
  CHECK(doc_ids(part) == std::set<DocumentId>{DocumentId{"num:3"}});
  CHECK(part.complete);
}

TEST_CASE("traversal matches the fixpoint closure on random finite webs") {
  testing::Rng rng(67);
  ExprPtr queries[] = {q("(?x <p0> ?y)"), q("((?x <p0> ?y) AND (?y <p1> ?z))"),
                       q("(<u0> ?p ?o)")};
  for (int i = 0; i < 150; ++i) {
    FiniteWeb web = testing::random_finite_web(rng, 10);
    UriSet seeds = testing::random_seeds(rng, 3);
    const ExprPtr& P = queries[testing::pick(rng, 3)];
    Criterion criteria[] = {Criterion::all(), Criterion::none(), Criterion::match(),
                            Criterion::const_u({u("u0"), u("doc1")})};
    const Criterion& c = criteria[testing::pick(rng, 4)];

    ReachablePart part = compute_reachable_part(web, seeds, c, *P, Budget::unlimited());
    CHECK(part.complete);
    CHECK(doc_ids(part) == testing::reachable_docs_fixpoint(web, seeds, c, *P));

    // Soundness of the data: exactly the union over reached documents.
    TripleSet expected;
    for (const auto& [uri, doc] : part.documents) {
      TripleSet d = web.data(doc);
      expected.insert(d.begin(), d.end());
    }
    CHECK(part.triples == expected);
  }
}

TEST_CASE("less restrictive criteria reach at least as many documents") {
  testing::Rng rng(71);
  Triple link(u("u0"), u("p0"), u("doc1"));
  for (int i = 0; i < 80; ++i) {
    FiniteWeb web = testing::random_finite_web(rng, 10);
    UriSet seeds = testing::random_seeds(rng, 2);
    ExprPtr P = q("(?x <p0> ?y)");

    UriSet U = {u("u0"), u("doc1"), u("doc2")};
    UriSet U_small = {u("u0")};
    Criterion c1 = Criterion::const_or(U, {link});
    Criterion c2 = Criterion::const_u(U_small);
    REQUIRE(less_restrictive_constant(c1, c2) == Restrictiveness::LessRestrictive);

    auto part1 = compute_reachable_part(web, seeds, c1, *P, Budget::unlimited());
    auto part2 = compute_reachable_part(web, seeds, c2, *P, Budget::unlimited());
    std::set<DocumentId> d1 = doc_ids(part1);
    std::set<DocumentId> d2 = doc_ids(part2);
    CHECK(std::includes(d1.begin(), d1.end(), d2.begin(), d2.end()));
  }
}

TEST_CASE("completion under a less restrictive criterion caps the lookups of a more restrictive one") {
  testing::Rng rng(73);
  ChainWeb web = chain_web(std::nullopt);
  for (int i = 0; i < 30; ++i) {
    UriSet U;
    for (int k = 0; k < 4; ++k) {
      if (testing::chance(rng, 0.5)) {
        U.insert(u(("chain:" + std::to_string(1 + testing::pick(rng, 6))).c_str()));
      }
    }
    UriSet U_small;
    for (const Term& t : U) {
      if (testing::chance(rng, 0.5)) U_small.insert(t);
    }
    Criterion less = Criterion::const_u(U);
    Criterion more = Criterion::const_u(U_small);
    if (less_restrictive_constant(less, more) != Restrictiveness::LessRestrictive) continue;

    ExprPtr P = q("(?x <chain:next> ?y)");
    auto part_less = compute_reachable_part(web, {u("chain:1")}, less, *P, Budget::limited(1000));
    auto part_more = compute_reachable_part(web, {u("chain:1")}, more, *P, Budget::limited(1000));
    REQUIRE(part_less.complete);
    CHECK(part_more.complete);
    CHECK(part_more.lookups_spent <= part_less.lookups_spent);
  }
}

TEST_CASE("constant criteria keep reachable parts within the size bound") {
  // The bound |documents| <= |S| + |U| + 3|T| is first validated by
  // exhaustive small-web enumeration, then relied on at larger scale.
  for (std::uint64_t length = 1; length <= 10; ++length) {
    ChainWeb web = chain_web(length);
    ExprPtr P = q("(?x <chain:next> ?y)");
    std::vector<Term> pool;
    for (std::uint64_t k = 1; k <= length; ++k) {
      pool.push_back(u(("chain:" + std::to_string(k)).c_str()));
    }
    std::vector<Triple> links;
    for (std::uint64_t k = 1; k < length; ++k) {
      links.emplace_back(u(("chain:" + std::to_string(k)).c_str()), u("chain:next"),
                         u(("chain:" + std::to_string(k + 1)).c_str()));
    }
    // All U of size <= 2 from the first URIs, all T of size <= 2 from the
    // chain links, all four constant kinds.
    std::vector<UriSet> u_choices = {{}};
    for (std::size_t a = 0; a < pool.size() && a < 5; ++a) {
      u_choices.push_back({pool[a]});
      for (std::size_t b = a + 1; b < pool.size() && b < 5; ++b) {
        u_choices.push_back({pool[a], pool[b]});
      }
    }
    std::vector<TripleSet> t_choices = {{}};
    for (std::size_t a = 0; a < links.size(); ++a) {
      t_choices.push_back({links[a]});
      for (std::size_t b = a + 1; b < links.size(); ++b) {
        t_choices.push_back({links[a], links[b]});
      }
    }
    for (const UriSet& U : u_choices) {
      for (const TripleSet& T : t_choices) {
        for (int kind = 0; kind < 4; ++kind) {
          Criterion c = kind == 0   ? Criterion::const_u(U)
                        : kind == 1 ? Criterion::const_t(T)
                        : kind == 2 ? Criterion::const_and(U, T)
                                    : Criterion::const_or(U, T);
          UriSet seeds = {u("chain:1")};
          auto part = compute_reachable_part(web, seeds, c, *P, Budget::unlimited());
          CHECK(part.complete);
          CHECK(part.documents.size() <= seeds.size() + U.size() + 3 * T.size());
        }
      }
    }
  }
}

TEST_CASE("criterion files load URI and triple sets") {
  const std::string dir = LDQ_TEST_DATA_DIR;
  UriSet uris = load_uri_set(dir + "/criterion_uris.txt");
  CHECK(uris == UriSet{u("num:2"), u("num:3")});
  TripleSet triples = load_triple_set(dir + "/criterion_triples.txt");
  CHECK(triples == TripleSet{Triple(u("num:1"), u("num:succ"), u("num:2")),
                             Triple(u("a"), u("p"), Term::literal("x y"))});
  CHECK_THROWS_AS(load_uri_set(dir + "/does_not_exist.txt"), Error);
}
