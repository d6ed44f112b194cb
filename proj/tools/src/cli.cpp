#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "json_format.hpp"
#include "triwalk/error.hpp"
#include "triwalk/graph.hpp"
#include "triwalk/linalg.hpp"
#include "triwalk/operators.hpp"
#include "triwalk/oracles.hpp"
#include "triwalk/spectral.hpp"
#include "triwalk/triangulation.hpp"
#include "triwalk/walk.hpp"

namespace triwalk::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kDefaultMaxDim = 2000;

// Raised for conditions that map straight to an exit status without being
// library errors.
struct Exit {
  int code;
  std::string message;
};

struct Options {
  std::string family;
  std::string graph_path;
  std::string partition_path;
  std::string out_path;
  std::string format;
  std::string op = "T";
  std::string what = "T-spectrum";
  std::string walk = "moving-shift";
  std::string start_arc;
  std::optional<std::size_t> start_vertex;
  std::optional<std::uint64_t> limit;
  std::optional<int> k;
  std::size_t n = 0;
  std::size_t steps = 100;
  std::size_t stride = 1;
  bool conventional = false;
  Tolerances tol;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kIo:
      return kExitUsage;
    case ErrorCode::kParse:
    case ErrorCode::kLoopEdge:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kDisconnected:
    case ErrorCode::kEmptyGraph:
    case ErrorCode::kUnknownVertex:
    case ErrorCode::kUnknownArc:
    case ErrorCode::kInvalidPartition:
      return kExitValidation;
    default:
      return kExitNumerical;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t max_dim() {
  const char* env = std::getenv("TRIWALK_MAX_DIM");
  if (env == nullptr || *env == '\0') return kDefaultMaxDim;
  std::size_t value = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Exit{kExitUsage, "TRIWALK_MAX_DIM must be a non-negative integer"};
  }
  return value;
}

void check_dim(const Graph& g) {
  const std::size_t dim = 2 * g.num_edges();
  const std::size_t cap = max_dim();
  if (dim > cap) {
    throw Exit{kExitNumerical, "arc space dimension " + std::to_string(dim) +
                                   " exceeds TRIWALK_MAX_DIM = " + std::to_string(cap)};
  }
}

Graph load_graph(const Options& o) { return parse_edge_list(read_file(o.graph_path)); }

TrianglePartition load_or_find_partition(const Graph& g, const Options& o) {
  if (o.partition_path.empty()) {
    auto result = find_partition(g, o.limit);
    if (auto* failure = std::get_if<NotTriangulable>(&result)) {
      throw Exit{kExitNotTriangulable, failure->message()};
    }
    return std::get<TrianglePartition>(std::move(result));
  }
  const auto triangles = parse_partition(read_file(o.partition_path));
  const ValidationReport report = validate_partition(g, triangles);
  if (!report.ok()) throw Exit{kExitValidation, report.summary()};
  return TrianglePartition::from_triangles(g, triangles);
}

Graph generate(const std::string& family) {
  if (family == "k4") return gen_complete(4);
  const auto colon = family.find(':');
  if (colon == std::string::npos) throw Exit{kExitUsage, "unknown family '" + family + "'"};
  const std::string name = family.substr(0, colon);
  const std::string arg = family.substr(colon + 1);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    throw Exit{kExitUsage, "family size must be a non-negative integer, got '" + arg + "'"};
  }
  if (name == "complete") return gen_complete(n);
  if (name == "cycle") return gen_cycle(n);
  if (name == "double-cone") return gen_double_cone(n);
  if (name == "star") return gen_star(n);
  throw Exit{kExitUsage, "unknown family '" + name + "'"};
}

Json complex_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

template <typename Vector>
Json complex_array(const Vector& v) {
  auto arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_json(v(i)));
  return arr;
}

Json complex_array(const std::vector<Complex>& v) {
  auto arr = Json::array();
  for (const auto& z : v) arr.push_back(complex_json(z));
  return arr;
}

std::string cmd_gen(const Options& o) {
  const Graph g = generate(o.family);
  if (o.format == "json") return graph_to_json(g) + "\n";
  return format_edge_list(g);
}

std::string cmd_triangulate(const Options& o) {
  const Graph g = load_graph(o);
  const TrianglePartition pi = load_or_find_partition(g, o);
  if (o.format == "json") return partition_to_json(pi.triangles()) + "\n";
  return format_partition(pi.triangles());
}

std::string report_text(const SpectrumReport& r) {
  std::ostringstream s;
  s << "walk: " << r.walk << "\n"
    << "matched: " << (r.matched ? "true" : "false") << "\n"
    << "max_pairing_error: " << detail::format_double(r.max_pairing_error) << "\n"
    << "residual_max: " << detail::format_double(r.residual_max) << "\n"
    << "total_computed: " << r.total_computed << "\n"
    << "total_predicted: " << r.total_predicted << "\n"
    << "clusters (re im computed predicted):\n";
  const std::size_t rows = std::max(r.computed.size(), r.predicted.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& c = i < r.computed.size() ? r.computed[i] : r.predicted[i];
    s << detail::format_double(c.value.real()) << ' ' << detail::format_double(c.value.imag())
      << ' ' << (i < r.computed.size() ? r.computed[i].multiplicity : 0) << ' '
      << (i < r.predicted.size() ? r.predicted[i].multiplicity : 0) << "\n";
  }
  return s.str();
}

int cmd_verify(const Options& o, std::string& output) {
  const Graph g = load_graph(o);
  check_dim(g);
  SpectrumReport report;
  if (o.conventional) {
    report = verify_conventional(g, o.tol);
  } else {
    report = verify_mapping(g, load_or_find_partition(g, o), o.tol);
  }
  output = o.format == "text" ? report_text(report) : report_to_json(report) + "\n";
  return report.matched ? kExitOk : kExitValidation;
}

std::string cmd_spectrum(const Options& o) {
  const Graph g = load_graph(o);
  check_dim(g);
  if (o.op == "T") {
    const auto values = eig_symmetric(build_T(g), o.tol.residual).values;
    if (o.format == "json") {
      Json j;
      j["op"] = o.op;
      j["eigenvalues"] = std::vector<double>(values.data(), values.data() + values.size());
      return detail::dump_json(j) + "\n";
    }
    std::string out;
    for (Eigen::Index i = 0; i < values.size(); ++i) out += detail::format_double(values(i)) + "\n";
    return out;
  }

  Eigen::MatrixXd M;
  if (o.op == "U" || o.op == "S") {
    const ArcSet arcs(g);
    M = build_flipflop(arcs);
    if (o.op == "U") M = M * grover_coin(build_boundary(g));
  } else if (o.op == "Uc" || o.op == "Sc") {
    const OperatorSet ops = build_operators(g, load_or_find_partition(g, o));
    M = o.op == "Uc" ? ops.Uc : ops.Sc;
  } else {
    throw Exit{kExitUsage, "unknown operator '" + o.op + "'"};
  }
  const UnitaryEigen eig = eig_unitary(M.cast<Complex>(), o.tol.residual);
  if (o.format == "json") {
    Json j;
    j["op"] = o.op;
    j["eigenvalues"] = complex_array(eig.values);
    j["residual_max"] = eig.residual_max;
    return detail::dump_json(j) + "\n";
  }
  std::string out;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    out += detail::format_double(eig.values(i).real()) + ' ' +
           detail::format_double(eig.values(i).imag()) + "\n";
  }
  return out;
}

Arc parse_arc(const std::string& text) {
  std::istringstream in(text);
  Vertex u = 0;
  Vertex v = 0;
  std::string rest;
  if (!(in >> u >> v) || (in >> rest)) {
    throw Exit{kExitUsage, "--start-arc expects two vertex indices, got '" + text + "'"};
  }
  return {u, v};
}

std::string cmd_simulate(const Options& o) {
  const Graph g = load_graph(o);
  check_dim(g);
  if (!o.start_arc.empty() && o.start_vertex) {
    throw Exit{kExitUsage, "--start-arc and --start-vertex are mutually exclusive"};
  }
  Eigen::MatrixXd U;
  ArcSet arcs(g);
  if (o.walk == "moving-shift") {
    const OperatorSet ops = build_operators(g, load_or_find_partition(g, o));
    U = ops.Uc;
  } else if (o.walk == "grover") {
    U = build_flipflop(arcs) * grover_coin(build_boundary(g));
  } else {
    throw Exit{kExitUsage, "unknown walk '" + o.walk + "'"};
  }
  InitialSpec spec = start::Uniform{};
  if (!o.start_arc.empty()) spec = start::Point{parse_arc(o.start_arc)};
  if (o.start_vertex) spec = start::VertexUniform{*o.start_vertex};
  const WalkState psi = initial_state(arcs, spec);
  const Trajectory trajectory = evolve(U, psi, o.steps, o.stride);
  return trajectory_to_csv(arcs, trajectory);
}

std::string cmd_ledger(const Options& o) {
  const Graph g = load_graph(o);
  check_dim(g);
  const DimensionLedger l = compute_dimension_ledger(g, load_or_find_partition(g, o), o.tol.rank);
  Json j;
  j["num_vertices"] = l.num_vertices;
  j["num_edges"] = l.num_edges;
  j["num_arcs"] = l.num_arcs;
  j["num_triangles"] = l.num_triangles;
  j["b"] = l.b;
  j["dim_ker_T_minus_1"] = l.kernel_T_minus_1;
  j["rank_L"] = l.rank_L;
  j["dim_ker_L"] = l.dim_ker_L;
  j["dim_ker_Ttilde3_plus_I"] = l.dim_ker_Ttilde3_plus_I;
  j["dim_L_perp"] = l.dim_L_perp;
  j["dim_ker_R"] = l.dim_ker_R;
  j["dim_B_minus_1"] = l.dim_B_minus1;
  j["dim_B_minus_omega"] = l.dim_B_minus_omega;
  j["dim_B_minus_omega2"] = l.dim_B_minus_omega2;
  j["consistent"] = l.consistent();
  return detail::dump_json(j) + "\n";
}

std::string cmd_oracle(const Options& o) {
  const std::size_t n = o.n;
  Json j;
  j["family"] = "double-cone";
  j["n"] = n;
  if (o.what == "T-spectrum") {
    const auto spectrum = double_cone_T_spectrum(n);
    j["spectrum"] = spectrum;
    j["b"] = n % 2 == 0 ? 2 : 1;
  } else if (o.what == "T-eigenvectors") {
    auto pairs = Json::array();
    for (const auto& p : double_cone_T_eigenvectors(n)) {
      Json e;
      e["eigenvalue"] = p.eigenvalue;
      e["vector"] = complex_array(p.vector);
      pairs.push_back(std::move(e));
    }
    j["eigenpairs"] = std::move(pairs);
  } else if (o.what == "birth-vectors") {
    if (o.k && (*o.k < 0 || *o.k > 2)) throw Exit{kExitUsage, "--k must be 0, 1 or 2"};
    const TrianglePartition pi = canonical_double_cone_partition(n);
    auto families = Json::array();
    for (int k = 0; k < 3; ++k) {
      if (o.k && *o.k != k) continue;
      std::vector<BirthVectorRecipe> recipes;
      for (std::size_t l = 1; l < n; ++l) recipes.push_back(birth_recipe(n, k, l));
      if (k == 0 && n % 2 == 0) recipes.push_back(even_extra_recipe(n));
      Json family;
      family["k"] = k;
      family["eigenvalue"] = complex_json(-omega_power(k));
      auto vectors = Json::array();
      for (const auto& r : recipes) {
        Json v;
        if (r.even_extra) {
          v["even_extra"] = true;
        } else {
          v["l"] = r.l;
        }
        v["a"] = complex_array(r.a);
        v["b"] = complex_array(r.b);
        v["psi"] = complex_array(complete_birth_vector(r, pi));
        vectors.push_back(std::move(v));
      }
      family["vectors"] = std::move(vectors);
      families.push_back(std::move(family));
    }
    j["families"] = std::move(families);
  } else {
    throw Exit{kExitUsage, "unknown --what '" + o.what + "'"};
  }
  return detail::dump_json(j) + "\n";
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot write " + o.out_path);
  file << text;
}

void add_tolerance_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol.pairing, "Maximum pairing error between eigenvalue clusters")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cluster-tol", o.tol.cluster, "Distance at which eigenvalues merge")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rank-tol", o.tol.rank, "Relative singular-value threshold")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--residual-tol", o.tol.residual, "Eigenpair residual bound")
      ->check(CLI::PositiveNumber);
}

void add_graph_inputs(CLI::App* cmd, Options& o, bool with_partition) {
  cmd->add_option("graph", o.graph_path, "Edge-list file")->required();
  if (with_partition) {
    cmd->add_option("partition", o.partition_path,
                    "Partition file; searched for when omitted");
    cmd->add_option("--limit", o.limit, "Node-expansion budget for the partition search");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Moving-shift quantum walks on triangulable graphs", "triwalk"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write the edge list of a graph family");
  gen->add_option("family", o.family, "k4 | complete:N | cycle:N | double-cone:N | star:N")
      ->required();
  gen->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* tri = app.add_subcommand("triangulate", "Partition the arcs into directed triangles");
  add_graph_inputs(tri, o, false);
  tri->add_option("--limit", o.limit, "Node-expansion budget for the search");
  tri->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* verify = app.add_subcommand("verify", "Compare sigma(U_c) with the mapping prediction");
  add_graph_inputs(verify, o, true);
  verify->add_flag("--conventional", o.conventional, "Check the Grover walk instead");
  add_tolerance_flags(verify, o);
  verify->add_option("--format", o.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of one operator");
  add_graph_inputs(spectrum, o, true);
  spectrum->add_option("--op", o.op, "T | U | Uc | S | Sc")
      ->check(CLI::IsMember({"T", "U", "Uc", "S", "Sc"}));
  add_tolerance_flags(spectrum, o);
  spectrum->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* simulate = app.add_subcommand("simulate", "Vertex distributions along a walk");
  add_graph_inputs(simulate, o, true);
  simulate->add_option("--steps", o.steps, "Number of steps")->default_val(100);
  simulate->add_option("--stride", o.stride, "Record every s-th step")
      ->check(CLI::PositiveNumber)
      ->default_val(1);
  simulate->add_option("--start-arc", o.start_arc, "Start on one arc, e.g. \"0 1\"");
  simulate->add_option("--start-vertex", o.start_vertex, "Start uniformly on the arcs into x");
  simulate->add_option("--walk", o.walk, "moving-shift | grover")
      ->check(CLI::IsMember({"moving-shift", "grover"}));
  simulate->add_option("--format", o.format, "csv")
      ->check(CLI::IsMember({"csv"}))
      ->default_val("csv");

  auto* ledger = app.add_subcommand("ledger", "Dimensions of the inherited and birth spaces");
  add_graph_inputs(ledger, o, true);
  add_tolerance_flags(ledger, o);

  auto* oracle = app.add_subcommand("oracle", "Closed-form results for a graph family");
  auto* cone = oracle->add_subcommand("double-cone", "The double cone over C_n");
  oracle->require_subcommand(1);
  cone->add_option("n", o.n, "Cycle length (n >= 3)")->required();
  cone->add_option("--what", o.what, "T-spectrum | T-eigenvectors | birth-vectors")
      ->check(CLI::IsMember({"T-spectrum", "T-eigenvectors", "birth-vectors"}));
  cone->add_option("--k", o.k, "Restrict birth vectors to eigenvalue -omega^k");

  for (auto* cmd : {gen, tri, verify, spectrum, simulate, ledger, cone}) {
    cmd->add_option("--out", o.out_path, "Write output to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    int status = kExitOk;
    if (*gen) {
      text = cmd_gen(o);
    } else if (*tri) {
      text = cmd_triangulate(o);
    } else if (*verify) {
      status = cmd_verify(o, text);
    } else if (*spectrum) {
      text = cmd_spectrum(o);
    } else if (*simulate) {
      text = cmd_simulate(o);
    } else if (*ledger) {
      text = cmd_ledger(o);
    } else if (*cone) {
      text = cmd_oracle(o);
    }
    write_output(o, text, out);
    return status;
  } catch (const Exit& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace triwalk::cli
