// Command line front end: analyze tables, build Cayley graphs, compute
// minimum spans, run verification campaigns, enumerate small semigroups.
//
// Exit codes: 0 success, 1 verification found counterexamples, 2 bad input,
// 3 cap or budget exceeded (partial results), 70 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "caylabel/enumerate.hpp"
#include "caylabel/errors.hpp"
#include "caylabel/graph.hpp"
#include "caylabel/labelling.hpp"
#include "caylabel/rees.hpp"
#include "caylabel/semigroup.hpp"
#include "caylabel/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace caylabel;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int parse_positive(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size() || value <= 0) throw InputError("");
    return value;
  } catch (const std::exception&) {
    throw InputError("expected a positive integer for " + what + ", got '" + text + "'");
  }
}

// Grammar (kind-prefixed, ':' separated):
//   cyclic:N | leftzero:N | rightzero:N
//   adjoin-zero:SPEC
//   product:SPEC,SPEC        (parenthesise an operand that itself has commas)
//   rees:GROUPSPEC;i=N;l=M;p=g,g,...   (p row-major, M rows by N columns)
Semigroup from_generator_spec(const std::string& spec) {
  auto strip_parens = [](std::string text) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
      return text.substr(1, text.size() - 2);
    return text;
  };
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError("generator spec needs kind:args, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (rest.empty()) throw InputError("generator spec '" + kind + ":' is missing arguments");
  if (kind == "cyclic") return cyclic_group(parse_positive(rest, "cyclic order"));
  if (kind == "leftzero") return left_zero_band(parse_positive(rest, "left zero order"));
  if (kind == "rightzero") return right_zero_band(parse_positive(rest, "right zero order"));
  if (kind == "adjoin-zero") return adjoin_zero(from_generator_spec(rest));
  if (kind == "product") {
    std::size_t split;
    if (rest.front() == '(') {
      int depth = 0;
      split = std::string::npos;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')') --depth;
        if (depth == 0) {
          split = rest.find(',', i);
          break;
        }
      }
    } else {
      split = rest.find(',');
    }
    if (split == std::string::npos)
      throw InputError("product spec needs two comma separated operands: '" + rest + "'");
    Semigroup left = from_generator_spec(strip_parens(rest.substr(0, split)));
    Semigroup right = from_generator_spec(strip_parens(rest.substr(split + 1)));
    return direct_product(left, right);
  }
  if (kind == "rees") {
    std::size_t p_pos = rest.rfind(";p=");
    std::size_t l_pos = rest.rfind(";l=", p_pos == std::string::npos ? p_pos : p_pos - 1);
    std::size_t i_pos = rest.rfind(";i=", l_pos == std::string::npos ? l_pos : l_pos - 1);
    if (p_pos == std::string::npos || l_pos == std::string::npos || i_pos == std::string::npos)
      throw InputError("rees spec needs ;i=N;l=M;p=... after the group spec");
    Semigroup group = from_generator_spec(strip_parens(rest.substr(0, i_pos)));
    int i_size = parse_positive(rest.substr(i_pos + 3, l_pos - (i_pos + 3)), "rees i");
    int lambda_size = parse_positive(rest.substr(l_pos + 3, p_pos - (l_pos + 3)), "rees l");
    std::vector<int> flat;
    std::stringstream ss(rest.substr(p_pos + 3));
    for (std::string cell; std::getline(ss, cell, ',');) {
      if (cell.empty()) throw InputError("empty entry in rees sandwich list");
      std::size_t used = 0;
      int value = std::stoi(cell, &used);
      if (used != cell.size() || value < 0 || value >= group.order())
        throw InputError("rees sandwich entry '" + cell + "' is not a group index");
      flat.push_back(value);
    }
    if (static_cast<int>(flat.size()) != i_size * lambda_size)
      throw InputError("rees sandwich needs i*l entries");
    std::vector<std::vector<int>> sandwich(lambda_size, std::vector<int>(i_size));
    for (int l = 0; l < lambda_size; ++l)
      for (int i = 0; i < i_size; ++i) sandwich[l][i] = flat[l * i_size + i];
    return rees_matrix_semigroup(group, i_size, lambda_size, sandwich);
  }
  throw InputError("unknown generator kind '" + kind + "'");
}

Semigroup load_semigroup(const std::string& table_path, const std::string& gen_spec) {
  if (table_path.empty() == gen_spec.empty())
    throw InputError("provide exactly one of --table and --gen");
  if (!table_path.empty()) return Semigroup::parse(read_file(table_path));
  return from_generator_spec(gen_spec);
}

ElementSubset connection_subset(const Semigroup& s, const std::vector<int>& indices) {
  if (indices.empty()) throw InputError("--connection needs at least one element index");
  for (int i : indices)
    if (i < 0 || i >= s.order())
      throw InputError("connection index " + std::to_string(i) + " is outside the semigroup");
  return make_subset(s.order(), indices);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string table_path;
  std::string gen_spec;
  bool as_json = false;
};

int run_analyze(const AnalyzeArgs& args) {
  Semigroup s = load_semigroup(args.table_path, args.gen_spec);
  GreenClasses green = green_classes(s);
  std::optional<int> identity = find_identity(s);
  bool completely_simple = is_completely_simple(s);
  std::optional<ReesDecomposition> rees;
  if (completely_simple) rees = rees_decompose(s);

  if (args.as_json) {
    json doc;
    doc["order"] = s.order();
    doc["table"] = s.encode();
    json pred;
    pred["band"] = is_band(s);
    pred["leftZeroBand"] = is_left_zero_band(s);
    pred["rightZeroBand"] = is_right_zero_band(s);
    pred["rectangularBand"] = is_rectangular_band(s);
    pred["combinatorial"] = is_combinatorial(s);
    pred["leftSimple"] = is_left_simple(s);
    pred["rightSimple"] = is_right_simple(s);
    pred["simple"] = is_simple(s);
    pred["completelySimple"] = completely_simple;
    pred["leftCancellative"] = is_left_cancellative(s);
    pred["rightCancellative"] = is_right_cancellative(s);
    pred["leftGroup"] = is_left_group(s);
    pred["rightGroup"] = is_right_group(s);
    pred["group"] = is_group(s);
    doc["predicates"] = pred;
    doc["identity"] = identity ? json(*identity) : json(nullptr);
    doc["idempotents"] = subset_members(idempotents(s));
    json gr;
    gr["rClasses"] = green.r_count;
    gr["lClasses"] = green.l_count;
    gr["hClasses"] = green.h_count;
    doc["green"] = gr;
    if (rees) {
      json rd;
      rd["groupOrder"] = rees->group.order();
      rd["iSize"] = rees->i_size;
      rd["lambdaSize"] = rees->lambda_size;
      rd["sandwich"] = rees->sandwich;
      doc["rees"] = rd;
    } else {
      doc["rees"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "order: " << s.order() << "\n";
  std::cout << "table: " << s.encode() << "\n";
  std::cout << "band: " << yes_no(is_band(s)) << "\n";
  std::cout << "left zero band: " << yes_no(is_left_zero_band(s)) << "\n";
  std::cout << "right zero band: " << yes_no(is_right_zero_band(s)) << "\n";
  std::cout << "rectangular band: " << yes_no(is_rectangular_band(s)) << "\n";
  std::cout << "combinatorial: " << yes_no(is_combinatorial(s)) << "\n";
  std::cout << "left simple: " << yes_no(is_left_simple(s)) << "\n";
  std::cout << "right simple: " << yes_no(is_right_simple(s)) << "\n";
  std::cout << "simple: " << yes_no(is_simple(s)) << "\n";
  std::cout << "completely simple: " << yes_no(completely_simple) << "\n";
  std::cout << "left cancellative: " << yes_no(is_left_cancellative(s)) << "\n";
  std::cout << "right cancellative: " << yes_no(is_right_cancellative(s)) << "\n";
  std::cout << "left group: " << yes_no(is_left_group(s)) << "\n";
  std::cout << "right group: " << yes_no(is_right_group(s)) << "\n";
  std::cout << "group: " << yes_no(is_group(s)) << "\n";
  if (identity)
    std::cout << "identity: " << *identity << "\n";
  else
    std::cout << "identity: none\n";
  std::cout << "idempotents: " << subset_str(idempotents(s)) << "\n";
  std::cout << "green classes: r=" << green.r_count << " l=" << green.l_count
            << " h=" << green.h_count << "\n";
  if (rees) {
    std::cout << "rees: group=" << rees->group.order() << " i=" << rees->i_size
              << " lambda=" << rees->lambda_size << "\n";
    for (const auto& row : rees->sandwich) {
      std::cout << "rees sandwich:";
      for (int g : row) std::cout << " " << g;
      std::cout << "\n";
    }
  }
  return 0;
}

// --- graph ------------------------------------------------------------------

struct GraphArgs {
  std::string table_path;
  std::string gen_spec;
  std::vector<int> connection;
  bool underlying = false;
  bool as_dot = false;
  bool as_json = false;
};

int run_graph(const GraphArgs& args) {
  Semigroup s = load_semigroup(args.table_path, args.gen_spec);
  ElementSubset c = connection_subset(s, args.connection);
  Graph g = build_cayley_graph(s, c);
  if (args.underlying) g = underlying_undirected(g);

  bool undirected = is_undirected(g);
  std::vector<int> sizes = weak_component_sizes(g);
  bool uoc_loops = is_disjoint_union_of_completes(g, true);
  bool uoc_free = is_disjoint_union_of_completes(g, false);

  if (args.as_json) {
    json doc;
    doc["order"] = g.order();
    doc["label"] = g.label();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = edges;
    doc["undirected"] = undirected;
    doc["componentSizes"] = sizes;
    doc["unionOfCompletesWithLoops"] = uoc_loops;
    doc["unionOfCompletesLoopFree"] = uoc_free;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (args.as_dot) {
    std::cout << to_dot(g);
    return 0;
  }
  std::cout << to_edge_list(g);
  std::cout << "# undirected: " << yes_no(undirected) << "\n";
  std::cout << "# components:";
  for (int size : sizes) std::cout << " " << size;
  std::cout << "\n";
  std::cout << "# union of completes (loops required): " << yes_no(uoc_loops) << "\n";
  std::cout << "# union of completes (loops ignored): " << yes_no(uoc_free) << "\n";
  return 0;
}

// --- span -------------------------------------------------------------------

struct SpanArgs {
  std::string graph_path;
  std::string table_path;
  std::string gen_spec;
  std::vector<int> connection;
  std::string kappa_csv;
  bool underlying = false;
  bool formula_only = false;
  int solver_cap = kDefaultSolverCap;
  bool as_json = false;
};

int run_span(const SpanArgs& args) {
  DistanceConstraint kappa = DistanceConstraint::parse(args.kappa_csv);
  Graph g = [&] {
    if (!args.graph_path.empty()) {
      if (!args.table_path.empty() || !args.gen_spec.empty())
        throw InputError("--graph-file excludes --table and --gen");
      if (!args.connection.empty())
        throw InputError("--connection only applies to semigroup input");
      return parse_edge_list(read_file(args.graph_path));
    }
    Semigroup s = load_semigroup(args.table_path, args.gen_spec);
    return build_cayley_graph(s, connection_subset(s, args.connection));
  }();
  if (args.underlying) g = underlying_undirected(g);

  long long value = 0;
  std::string method;
  std::optional<SpanResult> result;
  if (args.formula_only) {
    value = span_union_of_completes(g, kappa.k(1));
    method = "formula";
  } else {
    result = exact_span(g, kappa, args.solver_cap);
    value = result->value;
    method = result->method == SpanMethod::formula ? "formula" : "exact";
  }

  if (args.as_json) {
    json doc;
    doc["kappa"] = kappa.str();
    doc["value"] = value;
    doc["method"] = method;
    if (result) {
      doc["lowerBound"] = result->lower_bound;
      doc["labels"] = result->certificate.labels;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "kappa: " << kappa.str() << "\n";
  std::cout << "value: " << value << "\n";
  std::cout << "method: " << method << "\n";
  if (result) {
    std::cout << "lower bound: " << result->lower_bound << "\n";
    std::cout << "labels:";
    for (long long label : result->certificate.labels) std::cout << " " << label;
    std::cout << "\n";
  }
  return 0;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  int order = 0;
  std::string dedup = "none";
  bool count_only = false;
  long long limit = 0;
};

int run_enumerate(const EnumerateArgs& args) {
  Dedup dedup;
  if (args.dedup == "none")
    dedup = Dedup::none;
  else if (args.dedup == "iso")
    dedup = Dedup::iso;
  else
    throw InputError("--dedup must be none or iso");
  if (args.count_only) {
    std::cout << count_semigroups(args.order, dedup) << "\n";
    return 0;
  }
  long long emitted = 0;
  enumerate_semigroups(args.order, dedup, [&](const Semigroup& s) {
    std::cout << s.to_table_string() << "\n";
    ++emitted;
    return args.limit == 0 || emitted < args.limit;
  });
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  CampaignOptions opts;
  std::string grid_text;
  bool as_json = false;
  bool with_timing = false;
};

int run_verify(VerifyArgs args) {
  if (!args.grid_text.empty()) args.opts.grid = KGrid::parse(args.grid_text);
  VerificationReport report = run_campaign(args.opts);
  if (args.as_json)
    std::cout << report.to_json(args.with_timing) << "\n";
  else
    std::cout << report.text();
  if (report.counterexample_total > 0) return 1;
  if (report.partial) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum span distance labellings of Cayley graphs of finite semigroups"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "structural report for a semigroup table");
  analyze->add_option("--table", analyze_args.table_path, "table document file");
  analyze->add_option("--gen", analyze_args.gen_spec,
                      "generator spec (cyclic:N, leftzero:N, rightzero:N, adjoin-zero:S, "
                      "product:S,T, rees:G;i=N;l=M;p=...)");
  analyze->add_flag("--json", analyze_args.as_json, "emit a JSON document");

  GraphArgs graph_args;
  CLI::App* graph = app.add_subcommand("graph", "build the Cayley graph of (S, C)");
  graph->add_option("--table", graph_args.table_path, "table document file");
  graph->add_option("--gen", graph_args.gen_spec, "generator spec");
  graph->add_option("--connection", graph_args.connection, "connection set element indices")
      ->expected(-1);
  graph->add_flag("--underlying", graph_args.underlying, "symmetrise before reporting");
  graph->add_flag("--dot", graph_args.as_dot, "emit DOT instead of an edge list");
  graph->add_flag("--json", graph_args.as_json, "emit a JSON document");

  SpanArgs span_args;
  CLI::App* span = app.add_subcommand("span", "minimum span of a distance labelling");
  span->add_option("--graph-file", span_args.graph_path, "edge list document file");
  span->add_option("--table", span_args.table_path, "table document file");
  span->add_option("--gen", span_args.gen_spec, "generator spec");
  span->add_option("--connection", span_args.connection, "connection set element indices")
      ->expected(-1);
  span->add_option("--k", span_args.kappa_csv, "separation vector, e.g. 2,1")->required();
  span->add_flag("--underlying", span_args.underlying, "work on the underlying undirected graph");
  span->add_flag("--formula", span_args.formula_only,
                 "use the union-of-completes closed form (error if the shape is wrong)");
  span->add_option("--solver-cap", span_args.solver_cap, "largest order the search accepts");
  span->add_flag("--json", span_args.as_json, "emit a JSON document");

  EnumerateArgs enumerate_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list associative tables of one order");
  enumerate->add_option("--order", enumerate_args.order, "semigroup order")->required();
  enumerate->add_option("--dedup", enumerate_args.dedup, "none (default) or iso");
  enumerate->add_flag("--count", enumerate_args.count_only, "print only the count");
  enumerate->add_option("--limit", enumerate_args.limit, "stop after this many tables (0 = all)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--theorem", verify_args.opts.theorem, "statement to check, 1..4")
      ->required();
  verify->add_option("--order-cap", verify_args.opts.order_cap,
                     "largest semigroup order (statements 1-3)");
  verify->add_option("--grid", verify_args.grid_text,
                     "separation grid, e.g. ell=2,3;k=1,2,3 or ell=2;k1=1,2;k2=1");
  verify->add_option("--seed", verify_args.opts.seed, "random graph seed (statement 4)");
  verify->add_flag("--fail-fast", verify_args.opts.fail_fast,
                   "stop after the first counterexample batch");
  verify->add_option("--workers", verify_args.opts.workers, "worker threads (0 = all cores)");
  verify->add_option("--budget-ms", verify_args.opts.budget_ms,
                     "time budget; exceeding it yields a partial report");
  verify->add_option("--random-count", verify_args.opts.random_count,
                     "random graphs on 6..8 vertices (statement 4)");
  verify->add_option("--exhaustive-max", verify_args.opts.exhaustive_max,
                     "exhaustive graph orders 1..N (statement 4)");
  verify->add_option("--solver-cap", verify_args.opts.solver_cap,
                     "largest order the span search accepts");
  verify->add_flag("--json", verify_args.as_json, "emit a JSON document");
  verify->add_flag("--timing", verify_args.with_timing, "include elapsed time in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return run_analyze(analyze_args);
    if (*graph) return run_graph(graph_args);
    if (*span) return run_span(span_args);
    if (*enumerate) return run_enumerate(enumerate_args);
    if (*verify) return run_verify(verify_args);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
