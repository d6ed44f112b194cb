#include "triwalk/triangulation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json_format.hpp"
#include "text_records.hpp"
#include "triwalk/error.hpp"

namespace triwalk {

namespace {

std::string arc_str(Arc a) {
  return "(" + std::to_string(a.origin) + "," + std::to_string(a.terminus) + ")";
}

}  // namespace

DirectedTriangle DirectedTriangle::canonical() const {
  std::size_t start = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (arcs[i].origin < arcs[start].origin) start = i;
  return {{arcs[start], arcs[(start + 1) % 3], arcs[(start + 2) % 3]}};
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kUnknownArc: return "unknown arc";
    case Violation::Kind::kBrokenCycle: return "broken cycle";
    case Violation::Kind::kRepeatedVertex: return "repeated vertex";
    case Violation::Kind::kOverlap: return "overlap";
    case Violation::Kind::kUncovered: return "uncovered arcs";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid partition";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (const auto& v : violations) os << "\n  " << to_string(v.kind) << ": " << v.message;
  return os.str();
}

ValidationReport validate_partition(const Graph& g,
                                    std::span<const DirectedTriangle> triangles) {
  const ArcSet arcs(g);
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(arcs.size(), kNone);
  ValidationReport report;

  for (std::size_t c = 0; c < triangles.size(); ++c) {
    const auto& tri = triangles[c];
    const std::string tag = "triangle " + std::to_string(c);
    if (!tri.is_cycle()) {
      report.violations.push_back({Violation::Kind::kBrokenCycle, c, std::nullopt,
                                   tag + " is not head-to-tail"});
    }
    if (!tri.has_distinct_vertices()) {
      report.violations.push_back({Violation::Kind::kRepeatedVertex, c, std::nullopt,
                                   tag + " does not span three distinct vertices"});
    }
    for (const Arc& a : tri.arcs) {
      auto idx = arcs.find(a);
      if (!idx) {
        report.violations.push_back({Violation::Kind::kUnknownArc, c, a,
                                     tag + " uses " + arc_str(a) + ", which is not an arc"});
        continue;
      }
      if (owner[*idx] != kNone) {
        report.violations.push_back(
            {Violation::Kind::kOverlap, c, a,
             "arc " + arc_str(a) + " appears in triangles " +
                 std::to_string(owner[*idx]) + " and " + std::to_string(c)});
        continue;
      }
      owner[*idx] = c;
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (owner[i] == kNone) {
      report.violations.push_back({Violation::Kind::kUncovered, std::nullopt, arcs[i],
                                   "arc " + arc_str(arcs[i]) + " is not covered"});
    }
  }
  return report;
}

TrianglePartition TrianglePartition::from_triangles(
    const Graph& g, std::vector<DirectedTriangle> triangles) {
  auto report = validate_partition(g, triangles);
  if (!report.ok()) throw Error(ErrorCode::kInvalidPartition, report.summary());

  TrianglePartition pi{ArcSet(g)};
  const auto m = pi.arcs_.size();
  pi.triangles_ = std::move(triangles);
  pi.arc_to_triangle_.resize(m);
  std::vector<std::size_t> tau(m);
  for (std::size_t c = 0; c < pi.triangles_.size(); ++c) {
    std::array<std::size_t, 3> ids{};
    for (std::size_t i = 0; i < 3; ++i) ids[i] = pi.arcs_.index(pi.triangles_[c].arcs[i]);
    for (std::size_t i = 0; i < 3; ++i) {
      tau[ids[i]] = ids[(i + 1) % 3];
      pi.arc_to_triangle_[ids[i]] = c;
    }
    pi.triangle_arcs_.push_back(ids);
  }
  pi.tau_ = Permutation(std::move(tau));
  return pi;
}

std::vector<DirectedTriangle> enumerate_directed_triangles(const Graph& g) {
  std::vector<DirectedTriangle> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        out.push_back(DirectedTriangle::through(u, v, w));
        out.push_back(DirectedTriangle::through(u, w, v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string NotTriangulable::message() const {
  switch (reason) {
    case Reason::kNoDirectedTriangles:
      return "not triangulable: no directed triangles";
    case Reason::kArcCountNotDivisible:
      return "not triangulable: arc count is not divisible by 3";
    case Reason::kArcInNoTriangle:
      return "not triangulable: arc " + (witness ? arc_str(*witness) : std::string("?")) +
             " lies in no directed triangle";
    case Reason::kSearchExhausted:
      return "not triangulable: exhaustive search found no partition";
  }
  return "not triangulable";
}

namespace {

class ExactCoverSearch {
 public:
  ExactCoverSearch(const std::vector<std::array<std::size_t, 3>>& tri_arcs,
                   std::size_t num_arcs, std::optional<std::uint64_t> limit)
      : tri_arcs_(tri_arcs), arc_tris_(num_arcs), covered_(num_arcs, 0), limit_(limit) {
    for (std::size_t t = 0; t < tri_arcs_.size(); ++t)
      for (auto a : tri_arcs_[t]) arc_tris_[a].push_back(t);
  }

  std::size_t arc_degree(std::size_t a) const { return arc_tris_[a].size(); }

  bool run(std::size_t remaining) {
    if (remaining == 0) return true;

    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::size_t pick = kNone;
    std::size_t best = kNone;
    for (std::size_t a = 0; a < covered_.size(); ++a) {
      if (covered_[a]) continue;
      std::size_t count = 0;
      for (auto t : arc_tris_[a]) count += admissible(t);
      if (count == 0) return false;
      if (count < best) {
        best = count;
        pick = a;
      }
    }

    for (auto t : arc_tris_[pick]) {
      if (!admissible(t)) continue;
      if (limit_ && ++expansions_ > *limit_) {
        throw Error(ErrorCode::kSearchBudgetExceeded,
                    "triangle search exceeded " + std::to_string(*limit_) +
                        " node expansions");
      }
      set_cover(t, 1);
      chosen_.push_back(t);
      if (run(remaining - 3)) return true;
      chosen_.pop_back();
      set_cover(t, 0);
    }
    return false;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool admissible(std::size_t t) const {
    for (auto a : tri_arcs_[t])
      if (covered_[a]) return false;
    return true;
  }
  void set_cover(std::size_t t, char value) {
    for (auto a : tri_arcs_[t]) covered_[a] = value;
  }

  const std::vector<std::array<std::size_t, 3>>& tri_arcs_;
  std::vector<std::vector<std::size_t>> arc_tris_;
  std::vector<char> covered_;
  std::vector<std::size_t> chosen_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

PartitionResult find_partition(const Graph& g, std::optional<std::uint64_t> limit) {
  const ArcSet arcs(g);
  const auto triangles = enumerate_directed_triangles(g);
  using Reason = NotTriangulable::Reason;
  if (triangles.empty()) return NotTriangulable{Reason::kNoDirectedTriangles, std::nullopt};
  if (arcs.size() % 3 != 0)
    return NotTriangulable{Reason::kArcCountNotDivisible, std::nullopt};

  std::vector<std::array<std::size_t, 3>> tri_arcs;
  tri_arcs.reserve(triangles.size());
  for (const auto& t : triangles)
    tri_arcs.push_back({arcs.index(t.arcs[0]), arcs.index(t.arcs[1]), arcs.index(t.arcs[2])});

  ExactCoverSearch search(tri_arcs, arcs.size(), limit);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (search.arc_degree(a) == 0) return NotTriangulable{Reason::kArcInNoTriangle, arcs[a]};
  }
  if (!search.run(arcs.size())) return NotTriangulable{Reason::kSearchExhausted, std::nullopt};

  std::vector<DirectedTriangle> chosen;
  for (auto t : search.chosen()) chosen.push_back(triangles[t]);
  std::sort(chosen.begin(), chosen.end());
  return TrianglePartition::from_triangles(g, std::move(chosen));
}

TrianglePartition canonical_double_cone_partition(std::size_t n) {
  const Graph g = gen_double_cone(n);
  constexpr Vertex kPlus = 0;
  constexpr Vertex kMinus = 1;
  std::vector<DirectedTriangle> triangles;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex xi = 2 + i;
    const Vertex next = 2 + (i + 1) % n;
    triangles.push_back(DirectedTriangle::through(kPlus, xi, next));
    triangles.push_back(DirectedTriangle::through(kMinus, next, xi));
  }
  return TrianglePartition::from_triangles(g, std::move(triangles));
}

std::vector<DirectedTriangle> triangles_at(const TrianglePartition& pi, Vertex x) {
  std::vector<DirectedTriangle> out;
  for (auto a : pi.arc_set().in_arcs(x)) out.push_back(pi.triangles()[pi.triangle_of(a)]);
  return out;
}

Eigen::MatrixXi build_R(const TrianglePartition& pi) {
  Eigen::MatrixXi R = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(pi.num_vertices()),
                                            static_cast<Eigen::Index>(pi.size()));
  for (std::size_t c = 0; c < pi.size(); ++c)
    for (const Arc& a : pi.triangles()[c].arcs)
      R(static_cast<Eigen::Index>(a.terminus), static_cast<Eigen::Index>(c)) = 1;
  return R;
}

std::vector<DirectedTriangle> parse_partition(std::string_view text) {
  std::vector<DirectedTriangle> out;
  detail::for_each_record(text, [&](std::size_t line_no, const auto& tokens) {
    if (tokens.size() != 3) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected three vertex indices, got " +
                                         std::to_string(tokens.size()));
    }
    out.push_back(DirectedTriangle::through(detail::parse_index(tokens[0], line_no),
                                            detail::parse_index(tokens[1], line_no),
                                            detail::parse_index(tokens[2], line_no)));
  });
  return out;
}

std::string format_partition(std::span<const DirectedTriangle> triangles) {
  std::ostringstream os;
  for (const auto& t : triangles) {
    auto v = t.vertices();
    os << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  }
  return os.str();
}

std::string partition_to_json(std::span<const DirectedTriangle> triangles) {
  auto list = nlohmann::ordered_json::array();
  for (const auto& t : triangles) {
    auto v = t.vertices();
    list.push_back({v[0], v[1], v[2]});
  }
  nlohmann::ordered_json j;
  j["triangles"] = std::move(list);
  return detail::dump_json(j);
}

}  // namespace triwalk
