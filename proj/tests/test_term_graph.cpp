#include "doctest.h"
#include "fixtures.hpp"
#include "generate.hpp"
#include "ntg/errors.hpp"
#include "ntg/term_graph.hpp"
#include "oracles.hpp"

using namespace ntg;
using ntg::test::make_tg;

TEST_CASE("labels print with their kind") {
  CHECK(Label::atomic("lam", 1).str() == "lam");
  CHECK(Label::output().str() == "o");
  CHECK(Label::input(2).str() == "i2");
  CHECK(Label::primed("v").str() == "v'");
  CHECK(Label::fo_input().str() == "i");
  CHECK(Label::fo_input_root().str() == "i_r");
  CHECK(Label::bottom().symbol == kBottomSymbol);
  CHECK(Label::bottom().arity == 0);
}

TEST_CASE("construction rejects arity mismatches and dangling edges") {
  CHECK_THROWS_AS(TermGraph({Label::atomic("f", 2)}, {{0}}, 0), GraphError);
  CHECK_THROWS_AS(TermGraph({Label::atomic("g", 1)}, {{3}}, 0), GraphError);
  CHECK_THROWS_AS(TermGraph({Label::atomic("a", 0)}, {{}}, 1), GraphError);
  CHECK_THROWS_AS(TermGraph({Label::atomic("a", 0)}, {{}, {}}, 0), GraphError);
  CHECK_NOTHROW(TermGraph({Label::atomic("g", 1)}, {{0}}, 0));
}

TEST_CASE("sub-term graphs") {
  TermGraph g = make_tg({{"f", {1, 2}}, {"g", {2}}, {"a", {}}});
  SUBCASE("at the root of a root-connected graph") {
    SubGraph s = sub_term_graph(g, 0);
    CHECK(tg_isomorphic(s.graph, g).has_value());
  }
  SUBCASE("at a leaf") {
    SubGraph s = sub_term_graph(g, 2);
    CHECK(s.graph.size() == 1);
    CHECK(s.origin == std::vector<VertexId>{2});
  }
  SUBCASE("through a cycle") {
    // the application vertex of f2's body: a -> app(b, c), c -> app(d, a)
    Rgs n = test::load_rgs("N.rgs");
    const TermGraph& f2 = n.find("f2")->body;
    VertexId app = 0;
    while (!(f2.label(app).symbol == "app" && f2.names()[app] == "a")) ++app;
    SubGraph s = sub_term_graph(f2, app);
    CHECK(s.graph.size() == 8);  // everything but o and l
    CHECK(check_root_connected(s.graph).connected());
  }
  CHECK_THROWS(sub_term_graph(g, 7));
}

TEST_CASE("root connectivity") {
  CHECK(check_root_connected(make_tg({{"c", {}}})).connected());
  RootConnectivity rc = check_root_connected(make_tg({{"g", {0}}, {"c", {}}}));
  REQUIRE_FALSE(rc.connected());
  CHECK(*rc.unreachable == 1);
  Rgs n = test::load_rgs("N.rgs");
  for (const auto& d : n.definitions()) CHECK(check_root_connected(d.body).connected());
}

TEST_CASE("homomorphisms") {
  TermGraph tree = make_tg({{"f", {1, 2}}, {"c", {}}, {"c", {}}});
  TermGraph shared = make_tg({{"f", {1, 1}}, {"c", {}}});
  SUBCASE("identity") {
    HomResult h = tg_hom(tree, tree);
    REQUIRE(h);
    CHECK(*h.map == std::vector<VertexId>{0, 1, 2});
  }
  SUBCASE("merging map") {
    HomResult h = tg_hom(tree, shared);
    REQUIRE(h);
    CHECK(*h.map == std::vector<VertexId>{0, 1, 1});
    CHECK(verify_tg_hom(tree, shared, *h.map));
  }
  SUBCASE("no split") {
    HomResult h = tg_hom(shared, tree);
    CHECK_FALSE(h);
    REQUIRE(h.conflict);
    CHECK(h.conflict->first == 1);
    CHECK(oracle::all_tg_homs(shared, tree).empty());
  }
  SUBCASE("label clash") {
    HomResult h = tg_hom(make_tg({{"f", {1, 2}}, {"c", {}}, {"d", {}}}), tree);
    CHECK_FALSE(h);
    REQUIRE(h.conflict);
    CHECK(*h.conflict == std::pair<VertexId, VertexId>{2, 2});
  }
  CHECK_FALSE(verify_tg_hom(tree, shared, {0, 1}));
  CHECK_FALSE(verify_tg_hom(tree, shared, {1, 1, 1}));
}

TEST_CASE("collapse") {
  SUBCASE("already minimal") {
    TermGraph g = make_tg({{"f", {1, 2}}, {"c", {}}, {"d", {}}});
    Collapse c = tg_collapse(g);
    CHECK(c.graph.size() == 3);
    CHECK(tg_isomorphic(c.graph, g).has_value());
  }
  SUBCASE("two equal constants") {
    Collapse c = tg_collapse(make_tg({{"f", {1, 2}}, {"c", {}}, {"c", {}}}));
    CHECK(c.graph.size() == 2);
    CHECK(c.quotient == std::vector<VertexId>{0, 1, 1});
  }
  SUBCASE("two-cycle") {
    Collapse c = tg_collapse(make_tg({{"a", {1}}, {"a", {0}}}));
    REQUIRE(c.graph.size() == 1);
    CHECK(c.graph.args(0) == std::vector<VertexId>{0});
  }
  SUBCASE("blocks are numbered by least member") {
    TermGraph g = make_tg({{"f", {1, 2}}, {"g", {3}}, {"g", {3}}, {"c", {}}});
    CHECK(bisimulation_partition(g) == std::vector<VertexId>{0, 1, 1, 2});
  }
}

TEST_CASE("bisimilarity and isomorphism") {
  TermGraph tree = make_tg({{"f", {1, 2}}, {"c", {}}, {"c", {}}});
  TermGraph shared = make_tg({{"f", {1, 1}}, {"c", {}}});
  TermGraph cd = make_tg({{"f", {1, 2}}, {"c", {}}, {"d", {}}});
  CHECK(tg_bisimilar(tree, tree));
  CHECK(tg_bisimilar(tree, shared));
  CHECK_FALSE(tg_bisimilar(tree, cd));

  TermGraph renamed = make_tg({{"c", {}}, {"f", {0, 2}}, {"c", {}}}, 1);
  auto iso = tg_isomorphic(tree, renamed);
  REQUIRE(iso);
  CHECK(*iso == std::vector<VertexId>{1, 0, 2});
  CHECK_FALSE(tg_isomorphic(tree, shared));
  CHECK_FALSE(tg_isomorphic(tree, cd));
}

TEST_CASE("disjoint union") {
  Union u = disjoint_union(make_tg({{"g", {1}}, {"c", {}}}), make_tg({{"c", {}}}));
  CHECK(u.graph.size() == 3);
  CHECK(u.offset == 2);
  CHECK(u.graph.root() == 0);
}

TEST_CASE("random graphs agree with the brute-force oracles") {
  test::Rng rng(7);
  for (int round = 0; round < 300; ++round) {
    std::size_t n1 = 1 + round % 6, n2 = 1 + (round / 6) % 6;
    TermGraph g1 = test::random_term_graph(rng, n1);
    TermGraph g2 = round % 3 == 0 ? test::random_quotient(g1, rng) : test::random_term_graph(rng, n2);
    CAPTURE(round);

    auto brute = oracle::all_tg_homs(g1, g2);
    HomResult h = tg_hom(g1, g2);
    CHECK(brute.size() <= 1);
    CHECK(h.map.has_value() == !brute.empty());
    if (h && !brute.empty()) CHECK(*h.map == brute.front());

    CHECK(tg_bisimilar(g1, g2) == oracle::bisimilar(g1, g2));

    Collapse c = tg_collapse(g1);
    CHECK(c.graph.size() == oracle::bisim_classes(g1));
    auto rel = oracle::greatest_bisimulation(g1, g1);
    for (VertexId u = 0; u < g1.size(); ++u)
      for (VertexId v = 0; v < g1.size(); ++v) CHECK((c.quotient[u] == c.quotient[v]) == rel[u][v]);
    CHECK(verify_tg_hom(g1, c.graph, c.quotient));
    CHECK(tg_isomorphic(tg_collapse(c.graph).graph, c.graph).has_value());

    for (VertexId v = 0; v < g1.size(); ++v) CHECK(check_root_connected(sub_term_graph(g1, v).graph).connected());
  }
}

TEST_CASE("bisimilarity is an equivalence on a sample") {
  test::Rng rng(11);
  std::vector<TermGraph> sample;
  for (int k = 0; k < 12; ++k) {
    TermGraph g = test::random_term_graph(rng, 2 + k % 4);
    sample.push_back(g);
    sample.push_back(test::random_quotient(g, rng));
  }
  for (const auto& a : sample) {
    CHECK(tg_bisimilar(a, a));
    for (const auto& b : sample) {
      CHECK(tg_bisimilar(a, b) == tg_bisimilar(b, a));
      if (!tg_bisimilar(a, b)) continue;
      for (const auto& c : sample)
        if (tg_bisimilar(b, c)) CHECK(tg_bisimilar(a, c));
    }
  }
}
