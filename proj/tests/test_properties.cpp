#include <set>

#include "doctest.h"
#include "generate.hpp"
#include "ntg/equivalence.hpp"
#include "ntg/firstorder.hpp"
#include "ntg/io.hpp"
#include "ntg/sntg.hpp"
#include "oracles.hpp"

using namespace ntg;

namespace {

const std::vector<Label> kPool{Label::atomic("f", 2), Label::atomic("g", 1), Label::atomic("a", 0),
                               Label::atomic("b", 0)};

std::vector<TermGraph> graphs_up_to(std::size_t n, const std::vector<Label>& pool) {
  std::vector<TermGraph> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& g : oracle::enumerate_term_graphs(k, pool)) out.push_back(std::move(g));
  return out;
}

std::size_t classes(const std::vector<std::vector<bool>>& rel) {
  std::vector<bool> seen(rel.size());
  std::size_t n = 0;
  for (std::size_t v = 0; v < rel.size(); ++v) {
    if (seen[v]) continue;
    ++n;
    for (std::size_t w = v; w < rel.size(); ++w)
      if (rel[v][w]) seen[w] = true;
  }
  return n;
}

void check_collapse(const TermGraph& g) {
  Collapse c = tg_collapse(g);
  auto rel = oracle::greatest_bisimulation(g, g);
  CHECK(c.graph.size() == classes(rel));
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = 0; v < g.size(); ++v) CHECK((c.quotient[u] == c.quotient[v]) == rel[u][v]);
  CHECK(verify_tg_hom(g, c.graph, c.quotient));
}

void check_hom(const TermGraph& g1, const TermGraph& g2) {
  auto brute = oracle::all_tg_homs(g1, g2);
  HomResult h = tg_hom(g1, g2);
  CHECK(brute.size() <= 1);
  CHECK(h.map.has_value() == !brute.empty());
  if (h && !brute.empty()) CHECK(*h.map == brute.front());
}

// Distinct small ntgs, at most `limit` flattened vertices each.
std::vector<Rgs> small_ntgs(test::Rng& rng, std::size_t limit, std::size_t want) {
  test::GenParams p;
  p.max_vertices = limit;
  p.max_defs = 3;
  p.max_extra = 2;
  std::vector<Rgs> out;
  std::set<std::string> seen;
  for (int tries = 0; out.size() < want && tries < 20000; ++tries) {
    Rgs n = test::random_ntg(rng, p);
    if (tries % 2) n = test::mutate(n, rng, static_cast<test::Mutation>(tries % 3));
    if (FlatRgs(n).size() > limit) continue;
    if (seen.insert(print_rgs(n)).second) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

TEST_CASE("every term graph up to four vertices") {
  auto all = graphs_up_to(4, kPool);
  CHECK(all.size() > 300);
  std::size_t pairs = 0;
  for (const auto& g1 : all)
    for (const auto& g2 : all) {
      if (g1.size() + g2.size() > 7) continue;
      check_hom(g1, g2);
      ++pairs;
    }
  CHECK(pairs > 10000);
  std::size_t smaller_images = 0;
  for (const auto& g : all) {
    check_collapse(g);
    // nothing smaller than the collapse is a homomorphic image
    std::size_t m = tg_collapse(g).graph.size();
    for (const auto& h : all)
      if (h.size() < m && !oracle::all_tg_homs(g, h, 1).empty()) ++smaller_images;
  }
  CHECK(smaller_images == 0);
}

TEST_CASE("sampled term graphs up to eight vertices") {
  test::Rng rng(8);
  for (int round = 0; round < 400; ++round) {
    CAPTURE(round);
    std::size_t n1 = 5 + round % 4, n2 = 1 + (round / 4) % 8;
    TermGraph g1 = test::random_term_graph(rng, n1);
    TermGraph g2 = round % 2 ? test::random_quotient(g1, rng, 1 + round % 3) : test::random_term_graph(rng, n2);
    check_hom(g1, g2);
    check_hom(g2, g1);
    check_collapse(g1);
    check_collapse(g2);
  }
}

TEST_CASE("small ntgs against the exhaustive hom search") {
  test::Rng rng(88);
  auto ntgs = small_ntgs(rng, 8, 70);
  CHECK(ntgs.size() >= 50);
  std::size_t found = 0;
  for (std::size_t i = 0; i < ntgs.size(); ++i)
    for (std::size_t j = 0; j < ntgs.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      auto brute = oracle::all_ntg_homs(ntgs[i], ntgs[j]);
      REQUIRE(brute);
      CHECK(brute->size() <= 1);
      NtgHomResult h = ntg_hom(ntgs[i], ntgs[j]);
      CHECK(h.map.has_value() == !brute->empty());
      if (h && !brute->empty()) CHECK(*h.map == brute->front());
      found += h.map.has_value();
    }
  CHECK(found > ntgs.size());  // more than the identities
}

TEST_CASE("small ntg collapses against the scoped bisimulation") {
  test::Rng rng(89);
  for (const Rgs& n : small_ntgs(rng, 8, 80)) {
    const TermGraph g = interpret(n).graph;
    auto rel = oracle::scoped_bisimulation(g);
    REQUIRE(rel.size() == g.size());
    Collapse rc = rg_collapse(g);
    CHECK(rc.graph.size() == classes(rel));
    for (VertexId u = 0; u < g.size(); ++u)
      for (VertexId v = 0; v < g.size(); ++v) CHECK((rc.quotient[u] == rc.quotient[v]) == rel[u][v]);
    Rgs c = ntg_collapse(n);
    // interpret may unshare constant chains again, so compare after collapsing
    CHECK(tg_isomorphic(rg_collapse(interpret(c).graph).graph, rc.graph).has_value());
    CHECK(ntg_isomorphic(ntg_collapse(c), c).has_value());
    CHECK(ntg_hom(n, c));
  }
}

TEST_CASE("small first-order graphs") {
  const std::vector<Label> pool{Label::fo_output_root(), Label::fo_output(), Label::fo_input(),
                                Label::fo_input_root(), Label::primed("c"), Label::atomic("g", 1)};
  std::size_t members = 0;
  for (const auto& g : graphs_up_to(5, pool)) {
    check_collapse(g);
    if (!is_rg_member(g)) continue;
    ++members;
    Collapse rc = rg_collapse(g);
    auto rel = oracle::scoped_bisimulation(g);
    CHECK(rc.graph.size() == classes(rel));
    CHECK(is_rg_member(rc.graph));
    if (check_fully_backlinked(g).ok) CHECK(is_rg_member(tg_collapse(g).graph));
  }
  CHECK(members > 5);
}
