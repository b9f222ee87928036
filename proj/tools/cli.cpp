#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "anumber/building_set.hpp"
#include "anumber/corpus.hpp"
#include "anumber/error.hpp"
#include "anumber/invariants.hpp"

namespace anumber::cli {

namespace {

using nlohmann::json;

struct HelpRequested {
  std::string text;
};

std::string join(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out + "]";
}

template <typename Int>
std::string join_ints(const std::vector<Int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

json to_json_array(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw MalformedInput("cannot open edge list '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

VertexSubset parse_vertex_list(std::string_view text, int order) {
  VertexSubset out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(token, &used);
      if (used != token.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= order) throw MalformedInput("bad vertex '" + token + "' in subset list");
    out = out.with(v);
  }
  return out;
}

const SimpleGraph& require_graph(const CliConfig& config) {
  if (!config.graph) throw MalformedInput("this command needs a graph input");
  return *config.graph;
}

// Family member for a table row; C_1 and C_2 are read as the paths P_1, P_2.
SimpleGraph table_graph(GraphFamily family, int n) {
  if (family == GraphFamily::cycle && (n == 1 || n == 2)) return generate(GraphFamily::path, n);
  return generate(family, n);
}

std::string family_symbol(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "P_n";
    case GraphFamily::cycle: return "C_n";
    case GraphFamily::complete: return "K_n";
    case GraphFamily::star: return "K_{1,n-1}";
  }
  return "?";
}

int run_invariants(const CliConfig& config, std::ostream& out) {
  const auto& g = require_graph(config);
  auto table = compute_sa_table(g, config.toric_options().dp);
  if (config.output == OutputFormat::json) {
    json doc;
    doc["graph"] = encode_graph6(g);
    doc["sa"] = to_string(table.sa());
    doc["a_vector"] = to_json_array(table.a_vector());
    doc["b"] = to_string(table.b_total());
    out << doc.dump() << '\n';
  } else {
    out << "sa=" << to_string(table.sa()) << '\n'
        << "a=" << join(table.a_vector()) << '\n'
        << "b=" << to_string(table.b_total()) << '\n';
  }
  return kExitOk;
}

void print_report(const BettiReport& report, std::ostream& out) {
  out << method_name(report.method) << ": betti=" << join(report.betti)
      << " euler=" << to_string(report.euler) << '\n';
}

int run_betti(const CliConfig& config, std::ostream& out) {
  const auto& g = require_graph(config);
  auto report = betti_report(g, config.method.value_or(BettiMethod::recursion), config.toric_options());
  if (config.output == OutputFormat::json) {
    out << report_to_json(report) << '\n';
  } else {
    print_report(report, out);
  }
  return kExitOk;
}

SimplicialComplex selected_complex(const CliConfig& config) {
  const auto& g = require_graph(config);
  const auto options = config.toric_options().complex;
  const std::string& which = config.which;
  if (which == "full") {
    if (!is_connected(g)) throw DomainError("nested set complex of B(G) requires a connected graph");
    return nested_set_complex(graphical_building_set(g), options);
  }
  if (which == "even") return k_even(g, options);
  if (which == "odd") return k_odd(g, options);
  if (which == "poset") {
    if (g.order() > options.max_host_size) {
      throw ResourceLimit("even poset on " + std::to_string(g.order()) + " vertices exceeds the cap");
    }
    return order_complex(even_poset(g));
  }
  if (which.starts_with("T=")) return kp_T(g, parse_vertex_list(which.substr(2), g.order()), options);
  if (which.starts_with("Tpp=")) {
    return kpp_T(g, parse_vertex_list(which.substr(4), g.order()), options);
  }
  throw MalformedInput("--which must be full, even, odd, poset, T=<v,...> or Tpp=<v,...>");
}

int run_complex(const CliConfig& config, std::ostream& out) {
  auto complex = selected_complex(config);
  if (config.output == OutputFormat::json) {
    out << complex_to_json(complex) << '\n';
    return kExitOk;
  }
  out << "dimension=" << complex.dimension() << " vertices=" << complex.vertex_count()
      << " facets=" << complex.facets().size() << '\n';
  for (const auto& facet : complex.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (i) out << ' ';
      out << complex.labels()[static_cast<std::size_t>(facet[i])].to_string();
    }
    out << '\n';
  }
  return kExitOk;
}

int run_hvector(const CliConfig& config, std::ostream& out) {
  const auto& g = require_graph(config);
  if (!is_connected(g)) throw DomainError("hvector requires a connected graph");
  auto complex = nested_set_complex(graphical_building_set(g), config.toric_options().complex);
  auto f = f_vector(complex);
  auto h = h_vector_from_f(f);
  if (config.output == OutputFormat::json) {
    json doc;
    doc["graph"] = encode_graph6(g);
    doc["f"] = f;
    doc["h"] = h;
    out << doc.dump() << '\n';
  } else {
    out << "f=" << join_ints(f) << '\n' << "h=" << join_ints(h) << '\n';
  }
  return kExitOk;
}

int run_table(const CliConfig& config, std::ostream& out) {
  if (config.max_n < 0) throw MalformedInput("--max-n must be non-negative");
  const auto dp = config.toric_options().dp;
  json rows = json::array();
  if (config.output == OutputFormat::human) out << "a_i(" << family_symbol(config.family) << ")\n";
  for (int n = 0; n <= config.max_n; ++n) {
    auto a = a_vector(table_graph(config.family, n), dp);
    if (config.output == OutputFormat::json) {
      rows.push_back({{"n", n}, {"a_vector", to_json_array(a)}});
    } else {
      out << "n=" << n << ':';
      for (const auto& v : a) out << ' ' << to_string(v);
      out << '\n';
    }
  }
  if (config.output == OutputFormat::json) {
    json doc;
    doc["family"] = std::string(family_name(config.family));
    doc["rows"] = std::move(rows);
    out << doc.dump() << '\n';
  }
  return kExitOk;
}

struct VerifyResult {
  SimpleGraph graph;
  std::vector<BettiReport> reports;
  BigInt b_total;
  std::vector<std::string> failures;
};

VerifyResult verify_graph(const SimpleGraph& g, const ToricOptions& options) {
  VerifyResult result;
  result.graph = g;
  result.b_total = b_total(g, options.dp);
  for (auto method : {BettiMethod::recursion, BettiMethod::homology_T, BettiMethod::homology_S,
                      BettiMethod::product_fast_path}) {
    result.reports.push_back(betti_report(g, method, options));
  }
  const auto& reference = result.reports.front();
  for (const auto& report : result.reports) {
    if (report.betti != reference.betti) {
      result.failures.push_back(std::string(method_name(report.method)) + " Betti numbers differ");
    }
    if (report.euler != result.b_total) {
      result.failures.push_back(std::string(method_name(report.method)) + " Euler characteristic != b");
    }
  }
  if (g.order() == 0 || !is_connected(g)) return result;

  // Per-T checks on the nested set complex: K'_T and K''_T agree and carry a
  // single reduced class group whose rank is the product of component ta.
  const auto nested = nested_set_complex(graphical_building_set(g), options.complex);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
    auto t = VertexSubset::from_bits(bits);
    if (t.size() % 2 != 0) continue;
    auto kp = reduced_betti(p_prime_T(nested, t), options.homology);
    auto kpp = reduced_betti(induced_subcomplex(nested, [t](VertexSubset i) {
                               return i.is_subset_of(t) && i.size() % 2 != 0;
                             }),
                             options.homology);
    auto expected = reduced_rank_via_product(g, t, TaSource::recursion, options);
    if (!(kp == kpp)) result.failures.push_back("K'_T and K''_T homology differ for T=" + t.to_string());
    if (!kpp.concentrated_in(expected.degree) || BigInt(static_cast<long>(kpp.at(expected.degree))) != expected.rank) {
      result.failures.push_back("K''_T homology differs from the component product for T=" +
                                t.to_string());
    }
  }
  return result;
}

json verify_to_json(const VerifyResult& result) {
  json reports = json::array();
  for (const auto& report : result.reports) reports.push_back(json::parse(report_to_json(report)));
  json doc;
  doc["graph"] = encode_graph6(result.graph);
  doc["reports"] = std::move(reports);
  doc["b"] = to_string(result.b_total);
  doc["failures"] = result.failures;
  doc["ok"] = result.failures.empty();
  return doc;
}

int run_verify(const CliConfig& config, std::ostream& out) {
  const auto options = config.toric_options();
  std::vector<SimpleGraph> graphs;
  if (config.sweep_up_to) {
    if (config.graph) throw MalformedInput("--all-connected-up-to cannot be combined with a graph input");
    graphs = connected_graphs_up_to(*config.sweep_up_to);
  } else {
    graphs.push_back(require_graph(config));
  }

  bool all_ok = true;
  json docs = json::array();
  for (const auto& g : graphs) {
    auto result = verify_graph(g, options);
    all_ok = all_ok && result.failures.empty();
    if (config.output == OutputFormat::json) {
      docs.push_back(verify_to_json(result));
      continue;
    }
    if (config.sweep_up_to) {
      out << encode_graph6(g) << ' ' << (result.failures.empty() ? "OK" : "MISMATCH") << ' '
          << join(result.reports.front().betti) << '\n';
    } else {
      for (const auto& report : result.reports) print_report(report, out);
      out << "b=" << to_string(result.b_total) << '\n';
      out << (result.failures.empty() ? "OK" : "MISMATCH") << '\n';
    }
    for (const auto& failure : result.failures) out << "  " << failure << '\n';
  }
  if (config.output == OutputFormat::json) {
    out << (config.sweep_up_to ? docs.dump() : docs.front().dump()) << '\n';
  } else if (config.sweep_up_to) {
    out << graphs.size() << " graphs, " << (all_ok ? "all OK" : "MISMATCH") << '\n';
  }
  return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

ToricOptions CliConfig::toric_options() const {
  ToricOptions options;
  options.dp.max_vertices = dp_cap;
  options.complex.max_host_size = homology_cap;
  return options;
}

CliConfig parse_args(const std::vector<std::string>& args, std::istream& in) {
  CliConfig config;
  CLI::App app{"a-number invariants and Betti numbers of real toric manifolds over graph associahedra",
               "anumber"};
  app.require_subcommand(1);

  std::string edges_path;
  std::string graph6;
  std::string gen;
  bool from_stdin = false;
  std::string output = "human";
  auto* input_group = app.add_option_group("input", "graph source (exactly one)");
  input_group->add_option("--edges", edges_path, "edge list file: n, then one 'u v' pair per line");
  input_group->add_option("--graph6", graph6, "graph6 string");
  input_group->add_option("--gen", gen, "generator spec, e.g. path:6, cycle:5, complete:4, star:8");
  input_group->add_flag("--stdin", from_stdin, "read a graph6 string from standard input");
  input_group->require_option(0, 1);

  app.add_option("--output", output, "human or json")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--dp-cap", config.dp_cap, "largest order for the subset DP")
      ->envname("ANUMBER_DP_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--homology-cap", config.homology_cap, "largest order for homology routes")
      ->envname("ANUMBER_HOMOLOGY_CAP")
      ->check(CLI::PositiveNumber);

  auto* invariants = app.add_subcommand("invariants", "print sa, the a-vector and b");
  auto* betti = app.add_subcommand("betti", "Betti numbers of the real toric manifold");
  std::string method;
  betti->add_option("--method", method, "recursion, homology_T, homology_S or product_fast_path");
  auto* complex = app.add_subcommand("complex", "nested set complex or one of its subcomplexes");
  complex->add_option("--which", config.which, "full, even, odd, poset, T=<v,...> or Tpp=<v,...>");
  auto* hvector = app.add_subcommand("hvector", "f- and h-vectors of the nested set complex");
  auto* table = app.add_subcommand("table", "a-vectors of a graph family for n = 0..max-n");
  std::string family = "path";
  table->add_option("--family", family, "path, cycle, complete or star")->required();
  table->add_option("--max-n", config.max_n, "largest order")->required();
  auto* verify = app.add_subcommand("verify", "cross-check every Betti route");
  int sweep = 0;
  auto* sweep_opt = verify->add_option("--all-connected-up-to", sweep,
                                       "sweep every connected graph up to this order")
                        ->check(CLI::Range(1, kMaxCorpusOrder));

  for (auto* sub : {invariants, betti, complex, hvector, table, verify}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw MalformedInput(e.what());
  }

  if (invariants->parsed()) config.command = Command::invariants;
  if (betti->parsed()) config.command = Command::betti;
  if (complex->parsed()) config.command = Command::complex;
  if (hvector->parsed()) config.command = Command::hvector;
  if (table->parsed()) config.command = Command::table;
  if (verify->parsed()) config.command = Command::verify;

  config.output = output == "json" ? OutputFormat::json : OutputFormat::human;
  if (!method.empty()) config.method = parse_method(method);
  if (table->parsed()) config.family = parse_family(family);
  if (*sweep_opt) config.sweep_up_to = sweep;

  if (!edges_path.empty()) config.graph = parse_edge_list(read_file(edges_path));
  if (!graph6.empty()) config.graph = parse_graph6(graph6);
  if (!gen.empty()) config.graph = generate_from_spec(gen);
  if (from_stdin) {
    std::string line;
    std::getline(in, line);
    config.graph = parse_graph6(line);
  }
  return config;
}

int run(const CliConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::invariants: return run_invariants(config, out);
    case Command::betti: return run_betti(config, out);
    case Command::complex: return run_complex(config, out);
    case Command::hvector: return run_hvector(config, out);
    case Command::table: return run_table(config, out);
    case Command::verify: return run_verify(config, out);
  }
  return kExitBadInput;
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  try {
    return run(parse_args(args, in), out);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace anumber::cli
