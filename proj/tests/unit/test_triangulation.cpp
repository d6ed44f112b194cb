#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "support.hpp"
#include "triwalk/error.hpp"
#include "triwalk/operators.hpp"
#include "triwalk/triangulation.hpp"

namespace triwalk {
namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TRIWALK_TEST_DATA) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Reference enumeration straight from vertex triples.
std::size_t brute_force_directed_triangles(const Graph& g) {
  std::size_t count = 0;
  const std::size_t n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w)
        if (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w)) count += 2;
  return count;
}

TrianglePartition must_partition(const Graph& g) {
  auto result = find_partition(g);
  EXPECT_TRUE(std::holds_alternative<TrianglePartition>(result));
  return std::get<TrianglePartition>(std::move(result));
}

TEST(EnumerateDirectedTriangles, Examples) {
  EXPECT_EQ(enumerate_directed_triangles(gen_complete(4)).size(), 8u);
  EXPECT_EQ(brute_force_directed_triangles(gen_complete(4)), 8u);
  EXPECT_TRUE(enumerate_directed_triangles(gen_cycle(4)).empty());
  const auto c3 = enumerate_directed_triangles(gen_cycle(3));
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_NE(c3[0], c3[1]);
  for (const auto& t : c3) {
    EXPECT_TRUE(t.is_cycle());
    EXPECT_TRUE(t.has_distinct_vertices());
  }
}

TEST(EnumerateDirectedTriangles, MatchesVertexTripleCount) {
  for (const auto seed : testing::property_seeds()) {
    const Graph g = testing::random_triangulable(seed, 6).graph;
    const auto listed = enumerate_directed_triangles(g);
    EXPECT_EQ(listed.size(), brute_force_directed_triangles(g));
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
  }
}

TEST(FindPartition, CompleteGraphK4) {
  const Graph g = gen_complete(4);
  const auto pi = must_partition(g);
  EXPECT_EQ(pi.size(), 4u);
  EXPECT_TRUE(validate_partition(g, pi.triangles()).ok());
}

TEST(FindPartition, TriangleUsesBothOrientations) {
  const Graph g = gen_cycle(3);
  const auto pi = must_partition(g);
  ASSERT_EQ(pi.size(), 2u);
  std::set<DirectedTriangle> found(pi.triangles().begin(), pi.triangles().end());
  std::set<DirectedTriangle> expected{DirectedTriangle::through(0, 1, 2).canonical(),
                                      DirectedTriangle::through(0, 2, 1).canonical()};
  std::set<DirectedTriangle> canon;
  for (const auto& t : found) canon.insert(t.canonical());
  EXPECT_EQ(canon, expected);
}

TEST(FindPartition, DoubleCones) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const Graph g = gen_double_cone(n);
    const auto pi = must_partition(g);
    EXPECT_EQ(pi.size(), 2 * n);
    EXPECT_TRUE(validate_partition(g, pi.triangles()).ok());
  }
}

TEST(FindPartition, NotTriangulableReasons) {
  auto reason = [](const Graph& g) {
    auto result = find_partition(g);
    EXPECT_TRUE(std::holds_alternative<NotTriangulable>(result));
    return std::get<NotTriangulable>(result);
  };
  const auto c4 = reason(gen_cycle(4));
  EXPECT_EQ(c4.reason, NotTriangulable::Reason::kNoDirectedTriangles);
  EXPECT_EQ(c4.message(), "not triangulable: no directed triangles");
  EXPECT_EQ(reason(gen_cycle(5)).reason, NotTriangulable::Reason::kNoDirectedTriangles);
  EXPECT_EQ(reason(gen_star(3)).reason, NotTriangulable::Reason::kNoDirectedTriangles);

  // K4 minus an edge: 10 arcs.
  const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(reason(diamond).reason, NotTriangulable::Reason::kArcCountNotDivisible);

  // A triangle with a pendant path of three edges: 12 arcs, pendant arcs in no triangle.
  const Graph tailed =
      Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  const auto t = reason(tailed);
  EXPECT_EQ(t.reason, NotTriangulable::Reason::kArcInNoTriangle);
  ASSERT_TRUE(t.witness.has_value());
}

// Exhaustive check over every subset of directed triangles.
bool has_exact_cover(const Graph& g) {
  const auto candidates = enumerate_directed_triangles(g);
  const std::size_t arcs = 2 * g.num_edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    std::vector<DirectedTriangle> chosen;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask >> i & 1) chosen.push_back(candidates[i]);
    if (3 * chosen.size() == arcs && validate_partition(g, chosen).ok()) return true;
  }
  return false;
}

TEST(FindPartition, ExhaustedSearchOnBookGraph) {
  // Four triangles sharing the edge {4,5}: every page needs both orientations.
  const Graph book = Graph::from_edges(
      6, {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  auto result = find_partition(book);
  ASSERT_TRUE(std::holds_alternative<NotTriangulable>(result));
  EXPECT_EQ(std::get<NotTriangulable>(result).reason, NotTriangulable::Reason::kSearchExhausted);
  EXPECT_FALSE(has_exact_cover(book));
  EXPECT_TRUE(has_exact_cover(gen_complete(4)));
  EXPECT_TRUE(has_exact_cover(gen_double_cone(3)));
}

TEST(FindPartition, BudgetIsDistinctFromFailure) {
  try {
    find_partition(gen_double_cone(8), 1);
    FAIL() << "expected the budget to be exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchBudgetExceeded);
  }
  EXPECT_NO_THROW(find_partition(gen_double_cone(8), 1'000'000));
}

TEST(FindPartition, Deterministic) {
  const Graph g = gen_double_cone(6);
  EXPECT_EQ(must_partition(g).triangles(), must_partition(g).triangles());
}

TEST(CanonicalDoubleCone, Shape) {
  EXPECT_EQ(canonical_double_cone_partition(3).size(), 6u);
  const auto pi5 = canonical_double_cone_partition(5);
  EXPECT_EQ(pi5.size(), 10u);
  const auto pi4 = canonical_double_cone_partition(4);
  EXPECT_TRUE(validate_partition(gen_double_cone(4), pi4.triangles()).ok());
  const auto& first = pi5.triangles();
  EXPECT_NE(std::find(first.begin(), first.end(), DirectedTriangle::through(0, 2, 3)), first.end());
  EXPECT_NE(std::find(first.begin(), first.end(), DirectedTriangle::through(1, 3, 2)), first.end());
}

TEST(ValidatePartition, K4Fixture) {
  const Graph g = parse_edge_list(read_data("k4.edges"));
  const auto triangles = parse_partition(read_data("k4.partition"));
  EXPECT_TRUE(validate_partition(g, triangles).ok());
}

TEST(ValidatePartition, ReportsViolations) {
  const Graph g = gen_complete(4);
  auto triangles = parse_partition(read_data("k4.partition"));

  auto missing = triangles;
  missing.pop_back();
  const auto r1 = validate_partition(g, missing);
  ASSERT_FALSE(r1.ok());
  EXPECT_TRUE(std::all_of(r1.violations.begin(), r1.violations.end(),
                          [](const auto& v) { return v.kind == Violation::Kind::kUncovered; }));
  EXPECT_EQ(r1.violations.size(), 3u);

  auto broken = triangles;
  broken[0].arcs[1] = Arc{2, 3};
  const auto r2 = validate_partition(g, broken);
  EXPECT_TRUE(std::any_of(r2.violations.begin(), r2.violations.end(),
                          [](const auto& v) { return v.kind == Violation::Kind::kBrokenCycle; }));

  const auto corrupted = parse_partition(read_data("k4_corrupted.partition"));
  const auto r3 = validate_partition(g, corrupted);
  EXPECT_TRUE(std::any_of(r3.violations.begin(), r3.violations.end(),
                          [](const auto& v) { return v.kind == Violation::Kind::kOverlap; }));
  EXPECT_THROW(TrianglePartition::from_triangles(g, corrupted), Error);

  const auto r4 = validate_partition(g, std::vector{DirectedTriangle::through(0, 1, 4)});
  EXPECT_TRUE(std::any_of(r4.violations.begin(), r4.violations.end(),
                          [](const auto& v) { return v.kind == Violation::Kind::kUnknownArc; }));
}

TEST(TrianglesAt, Bijection) {
  const Graph k4 = gen_complete(4);
  const auto pi = TrianglePartition::from_triangles(k4, parse_partition(read_data("k4.partition")));
  for (Vertex x = 0; x < 4; ++x) {
    const auto at = triangles_at(pi, x);
    ASSERT_EQ(at.size(), 3u);
    const auto in = pi.arc_set().in_arcs(x);
    for (std::size_t i = 0; i < at.size(); ++i) {
      const auto& arcs = at[i].arcs;
      EXPECT_NE(std::find(arcs.begin(), arcs.end(), pi.arc_set()[in[i]]), arcs.end());
    }
  }
  EXPECT_EQ(triangles_at(canonical_double_cone_partition(3), 0).size(), 3u);
  EXPECT_EQ(triangles_at(canonical_double_cone_partition(5), 4).size(), 4u);
  EXPECT_THROW(triangles_at(pi, 7), Error);
}

TEST(BuildR, IncidenceIdentities) {
  const Graph k4 = gen_complete(4);
  const auto pi = must_partition(k4);
  const Eigen::MatrixXi R = build_R(pi);
  const auto [A, D] = adjacency_and_degree(k4);
  EXPECT_EQ(R.rowwise().sum(), D.diagonal());
  EXPECT_EQ((R * R.transpose()).eval(), (2 * A + D).eval());
  const Eigen::MatrixXi R4 = build_R(canonical_double_cone_partition(4));
  EXPECT_TRUE((R4.colwise().sum().array() == 3).all());
}

TEST(PartitionText, RoundTripAndJson) {
  const auto pi = canonical_double_cone_partition(3);
  const auto text = format_partition(pi.triangles());
  EXPECT_EQ(parse_partition(text), pi.triangles());
  EXPECT_EQ(partition_to_json(std::vector{DirectedTriangle::through(0, 1, 2)}),
            R"({"triangles": [[0, 1, 2]]})");
  EXPECT_THROW(parse_partition("0 1\n"), Error);
}

TEST(TriangulationProperties, RandomGraphs) {
  for (const auto seed : testing::property_seeds()) {
    const auto sample = testing::random_triangulable(seed, 3 + seed % 7);
    const Graph& g = sample.graph;
    EXPECT_TRUE(validate_partition(g, sample.partition).ok());

    const auto pi = must_partition(g);
    EXPECT_TRUE(validate_partition(g, pi.triangles()).ok());
    EXPECT_EQ(3 * pi.size(), pi.arc_set().size());

    const Permutation& tau = pi.tau();
    EXPECT_TRUE(tau.power(3).is_identity());
    EXPECT_FALSE(tau.has_fixed_point());
    for (std::size_t a = 0; a < tau.size(); ++a) {
      EXPECT_NE(tau(a), pi.arc_set().reverse(a));
      EXPECT_EQ(pi.triangle_of(tau(a)), pi.triangle_of(a));
    }
    const auto [A, D] = adjacency_and_degree(g);
    const Eigen::MatrixXi R = build_R(pi);
    EXPECT_EQ((R * R.transpose()).eval(), (2 * A + D).eval());
  }
}

}  // namespace
}  // namespace triwalk
