#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "families.hpp"
#include "graphperiod/named_graphs.hpp"
#include "graphperiod/primes.hpp"
#include "graphperiod/symmetry.hpp"

using namespace graphperiod;

namespace {

// Pairs a vertex permutation with the index-order edge matching.
Automorphism lift(const MultiGraph& g, std::vector<VertexId> vertex_perm) {
  Automorphism h;
  h.vertex_perm = std::move(vertex_perm);
  std::vector<bool> used(g.edge_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto a = h.vertex_perm[g.edge(e).a];
    const auto b = h.vertex_perm[g.edge(e).b];
    const Edge target{std::min(a, b), std::max(a, b)};
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      if (!used[f] && g.edge(f) == target) {
        used[f] = true;
        h.edge_perm.push_back(f);
        break;
      }
    }
  }
  return h;
}

std::vector<VertexId> rotation(std::size_t n, std::size_t step) {
  std::vector<VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>((i + step) % n);
  return perm;
}

Automorphism petersen_rotation(const MultiGraph& g) {
  std::vector<VertexId> perm(10);
  for (VertexId i = 0; i < 5; ++i) {
    perm[i] = (i + 1) % 5;
    perm[5 + i] = 5 + (i + 1) % 5;
  }
  return lift(g, perm);
}

void expect_free_period(const MultiGraph& g, const Automorphism& h, std::uint32_t p) {
  ASSERT_TRUE(is_automorphism(g, h));
  EXPECT_EQ(automorphism_order(h), p);
  EXPECT_EQ(power(h, p), identity_automorphism(g));
  const auto o = orbits(g, h);
  for (const auto& orbit : o.edges) EXPECT_EQ(orbit.size(), p);
  for (const auto& orbit : o.vertices) EXPECT_TRUE(orbit.size() == 1 || orbit.size() == p);
  EXPECT_NO_THROW(validate_free_period(g, h, p));
}

}  // namespace

TEST(Automorphisms, NamedCounts) {
  EXPECT_EQ(enumerate_automorphisms(named_graph("frucht")).size(), 1u);
  EXPECT_EQ(enumerate_automorphisms(named_graph("petersen")).size(), 120u);
  EXPECT_EQ(enumerate_automorphisms(named_graph_from_spec("cycle:4")).size(), 8u);
  EXPECT_EQ(enumerate_automorphisms(named_graph_from_spec("complete:5")).size(), 120u);
}

TEST(Automorphisms, FruchtOnlyIdentity) {
  const auto g = named_graph("frucht");
  const auto all = enumerate_automorphisms(g);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all.front(), identity_automorphism(g));
}

TEST(Automorphisms, MatchBruteForceCount) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 150; ++i) {
    const auto g = testkit::random_multigraph(rng, 6, 8);
    const auto all = enumerate_automorphisms(g);
    EXPECT_EQ(all.size(), testkit::brute_force_automorphism_count(g)) << to_edge_list(g);
    for (const auto& h : all) EXPECT_TRUE(is_automorphism(g, h));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                               [](const auto& a, const auto& b) { return a.vertex_perm < b.vertex_perm; }));
  }
}

TEST(Automorphisms, VertexLimit) {
  EXPECT_THROW(enumerate_automorphisms(MultiGraph(40, {})), LimitExceeded);
  EXPECT_THROW(enumerate_automorphisms(named_graph("petersen"), 9), LimitExceeded);
}

TEST(Automorphisms, IncompatibleEdgePermutationRejected) {
  const auto g = named_graph_from_spec("path:3");
  Automorphism h{{2, 1, 0}, {0, 1}};
  EXPECT_FALSE(is_automorphism(g, h));
  EXPECT_TRUE(is_automorphism(g, Automorphism{{2, 1, 0}, {1, 0}}));
  EXPECT_THROW(orbits(g, h), std::invalid_argument);
}

TEST(FreePeriod, Examples) {
  const auto petersen = named_graph("petersen");
  const auto h = find_free_period(petersen, 5);
  ASSERT_TRUE(h.has_value());
  expect_free_period(petersen, *h, 5);
  EXPECT_FALSE(find_free_period(named_graph("frucht"), 3).has_value());
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const auto cycle = named_graph_from_spec("cycle:" + std::to_string(p));
    const auto r = find_free_period(cycle, p);
    ASSERT_TRUE(r.has_value()) << p;
    expect_free_period(cycle, *r, p);
  }
}

TEST(FreePeriod, SwappedEdgeCountsAsFixed) {
  EXPECT_FALSE(find_free_period(MultiGraph(2, {{0, 1}}), 2).has_value());
  const auto c2 = named_graph_from_spec("cycle:2");
  const auto h = find_free_period(c2, 2);
  ASSERT_TRUE(h.has_value());
  expect_free_period(c2, *h, 2);
}

TEST(FreePeriod, ParallelEdgesRotatedOnFixedVertices) {
  const auto theta = named_graph_from_spec("theta:3");
  const auto h = find_free_period(theta, 3);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->vertex_perm, (std::vector<VertexId>{0, 1}));
  expect_free_period(theta, *h, 3);
  EXPECT_FALSE(find_free_period(named_graph_from_spec("theta:4"), 3).has_value());
}

TEST(FreePeriod, NonPrimeRejected) {
  EXPECT_THROW(find_free_period(named_graph_from_spec("cycle:4"), 4), std::invalid_argument);
}

TEST(FreePeriod, AgreesWithBruteForceOnSimpleGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : testkit::all_simple_graphs(n)) {
      for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto h = find_free_period(g, p);
        EXPECT_EQ(h.has_value(), testkit::brute_force_has_free_period_simple(g, p)) << to_edge_list(g) << "p=" << p;
        if (h) expect_free_period(g, *h, p);
      }
    }
  }
}

// A 3-cycle of the five underlying points fixes one vertex and no edge.
TEST(FreePeriod, PetersenOrderThree) {
  const auto g = named_graph("petersen");
  const auto h = find_free_period(g, 3);
  ASSERT_TRUE(h.has_value());
  expect_free_period(g, *h, 3);
  EXPECT_EQ(orbits(g, *h).vertices.size(), 4u);
}

TEST(FreePeriod, DeterministicAndRelabelingInvariant) {
  std::mt19937_64 rng(71);
  const auto g = named_graph("petersen");
  EXPECT_EQ(find_free_period(g, 5), find_free_period(g, 5));
  for (int i = 0; i < 10; ++i) {
    EXPECT_TRUE(find_free_period(testkit::random_relabel(g, rng), 5).has_value());
    EXPECT_TRUE(find_free_period(testkit::random_relabel(g, rng), 3).has_value());
    EXPECT_FALSE(find_free_period(testkit::random_relabel(g, rng), 7).has_value());
  }
}

TEST(Orbits, Petersen) {
  const auto g = named_graph("petersen");
  const auto o = orbits(g, petersen_rotation(g));
  ASSERT_EQ(o.vertices.size(), 2u);
  EXPECT_EQ(o.vertices[0], (std::vector<VertexId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(o.vertices[1], (std::vector<VertexId>{5, 6, 7, 8, 9}));
  EXPECT_EQ(o.edges.size(), 3u);
}

TEST(Orbits, IdentityGivesSingletons) {
  const auto g = named_graph("frucht");
  const auto o = orbits(g, identity_automorphism(g));
  EXPECT_EQ(o.vertices.size(), 12u);
  EXPECT_EQ(o.edges.size(), 18u);
}

TEST(Orbits, SixCycleRotationByTwo) {
  const auto g = named_graph_from_spec("cycle:6");
  const auto h = lift(g, rotation(6, 2));
  ASSERT_TRUE(is_automorphism(g, h));
  const auto o = orbits(g, h);
  ASSERT_EQ(o.vertices.size(), 2u);
  ASSERT_EQ(o.edges.size(), 2u);
  for (const auto& orbit : o.vertices) EXPECT_EQ(orbit.size(), 3u);
  for (const auto& orbit : o.edges) EXPECT_EQ(orbit.size(), 3u);
}

TEST(Quotient, CycleGivesOneLoop) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto g = named_graph_from_spec("cycle:" + std::to_string(p));
    const auto h = p == 2 ? Automorphism{{1, 0}, {1, 0}} : lift(g, rotation(p, 1));
    const auto map = quotient_graph(g, h);
    EXPECT_EQ(map.quotient, MultiGraph(1, {{0, 0}})) << p;
    EXPECT_EQ(map.period, p);
  }
}

TEST(Quotient, Petersen) {
  const auto g = named_graph("petersen");
  const auto map = quotient_graph(g, petersen_rotation(g));
  EXPECT_EQ(map.quotient.vertex_count(), 2u);
  EXPECT_EQ(canonical_key(map.quotient), canonical_key(MultiGraph(2, {{0, 0}, {0, 1}, {1, 1}})));
  for (VertexId v = 0; v < 10; ++v) EXPECT_EQ(map.vertex_projection[v], v < 5 ? 0u : 1u);
}

TEST(Quotient, SwapOfTwoEdges) {
  const MultiGraph g(4, {{0, 1}, {2, 3}});
  const auto map = quotient_graph(g, lift(g, {2, 3, 0, 1}));
  EXPECT_EQ(map.quotient, MultiGraph(2, {{0, 1}}));
}

TEST(Quotient, ReversedPath) {
  const auto path = named_graph_from_spec("path:3");
  const auto map = quotient_graph(path, lift(path, {2, 1, 0}));
  EXPECT_EQ(map.quotient, MultiGraph(2, {{0, 1}}));
}

TEST(Quotient, FixedVertexAllowed) {
  const MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto map = quotient_graph(star, lift(star, {0, 2, 3, 1}));
  EXPECT_EQ(map.quotient, MultiGraph(2, {{0, 1}}));
}

TEST(Quotient, Preconditions) {
  const auto c6 = named_graph_from_spec("cycle:6");
  EXPECT_THROW(quotient_graph(c6, lift(c6, rotation(6, 1))), std::invalid_argument);
  const MultiGraph k2(2, {{0, 1}});
  EXPECT_THROW(quotient_graph(k2, Automorphism{{1, 0}, {0}}), std::invalid_argument);
  EXPECT_THROW(quotient_graph(c6, identity_automorphism(c6)), std::invalid_argument);
  EXPECT_THROW(validate_free_period(c6, lift(c6, rotation(6, 2)), 2), std::invalid_argument);
}

TEST(Quotient, ConsistencyOverSmallGraphs) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : testkit::all_simple_graphs(n)) {
      for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto h = find_free_period(g, p);
        if (!h) continue;
        const auto map = quotient_graph(g, *h);
        const auto& q = map.quotient;
        EXPECT_LE(q.vertex_count(), g.vertex_count());
        EXPECT_EQ(q.edge_count() * p, g.edge_count());
        std::set<VertexId> hit_v(map.vertex_projection.begin(), map.vertex_projection.end());
        std::set<EdgeId> hit_e(map.edge_projection.begin(), map.edge_projection.end());
        EXPECT_EQ(hit_v.size(), q.vertex_count());
        EXPECT_EQ(hit_e.size(), q.edge_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          EXPECT_EQ(map.vertex_projection[v], map.vertex_projection[h->vertex_perm[v]]);
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          EXPECT_EQ(map.edge_projection[e], map.edge_projection[h->edge_perm[e]]);
          const auto& image = q.edge(map.edge_projection[e]);
          const auto a = map.vertex_projection[g.edge(e).a];
          const auto b = map.vertex_projection[g.edge(e).b];
          EXPECT_EQ(image, (Edge{std::min(a, b), std::max(a, b)}));
        }
      }
    }
  }
}
