#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "levelnum/errors.hpp"
#include "render.hpp"

namespace levelnum::cli {

namespace {

struct Options {
  std::string target;
  std::string graph;  // verify-cert and render: graph override
  std::string spine;
  std::string output;
  bool json = false;
  bool timings = false;
  bool literal_prop = false;
  bool svg = false;
  bool dot = false;
  bool oracle = false;
  unsigned workers = 1;
  std::optional<std::size_t> cap;
  int max_vertices = 9;
  int max_edges = 18;
  std::size_t oracle_limit = 12;

  SolveOptions solve() const {
    SolveOptions s;
    s.cycle_cap = cap;
    s.workers = workers;
    s.disk_test = literal_prop ? DiskTest::fragment_only : DiskTest::with_spine;
    return s;
  }
};

struct Loaded {
  Graph graph;
  std::string source;
};

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_all(std::istream& stream) {
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return read_all(in);
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw InvalidInput("cannot read '" + path + "'");
  }
  return read_all(file);
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && (text[first] == '{' || text[first] == '[');
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(what + " is not valid JSON: " + e.what());
  }
}

Graph graph_from_text(const std::string& text, const std::string& what) {
  if (!looks_like_json(text)) {
    return parse_edge_list(text);
  }
  const Json doc = parse_json(text, what);
  return graph_from_json(doc.contains("input") ? doc.at("input") : doc);
}

Loaded load_graph(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    return {graph_from_text(read_all(in), "standard input"), "-"};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    return {graph_from_text(read_source(arg, in), arg), arg};
  }
  FamilySpec spec;
  try {
    spec = parse_family(arg);
  } catch (const InvalidInput& e) {
    throw InvalidInput("'" + arg + "' is neither a readable file nor a graph family (" + e.what() + ")");
  }
  return {generate(spec), to_string(spec)};
}

std::vector<Vertex> parse_spine_argument(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw InvalidInput("malformed spine '" + text + "': expected comma-separated vertex ids");
    }
    out.push_back(value);
  }
  return out;
}

template <class Range>
std::string joined(const Range& values, const std::string& separator = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : separator) << v;
    first = false;
  }
  return out.str();
}

Json header(const std::string& command, const Loaded& loaded) {
  return Json{{"command", command}, {"input", graph_to_json(loaded.graph, loaded.source)}};
}

void emit_json(std::ostream& out, Json doc, const Options& opt, double seconds) {
  if (opt.timings) {
    doc["timings"] = Json{{"seconds", seconds}};
  }
  out << doc.dump() << '\n';
}

void emit_level(std::ostream& out, const std::string& command, const Loaded& loaded, const LevelResult& result,
                const Options& opt, double seconds, const std::optional<LevelValue>& oracle = std::nullopt) {
  const bool exact = result.exactness == Exactness::exact;
  if (opt.json) {
    Json doc = header(command, loaded);
    doc["value"] = level_value_to_json(result.value);
    doc["exact"] = exact;
    if (result.certificate) {
      doc["certificate"] = certificate_to_json(loaded.graph, *result.certificate);
    }
    if (oracle) {
      doc["oracle"] = level_value_to_json(*oracle);
    }
    emit_json(out, std::move(doc), opt, seconds);
    return;
  }
  out << to_string(result.value) << '\n';
  out << "exact: " << (exact ? "yes" : "no, cycle cap reached (upper bound)") << '\n';
  if (result.certificate) {
    out << "spine: " << joined(result.certificate->spine.vertices()) << '\n';
    out << "levels: " << joined(result.certificate->levels) << '\n';
  }
  if (oracle) {
    out << "oracle: " << to_string(*oracle) << '\n';
  }
  if (opt.timings) {
    out << "seconds: " << seconds << '\n';
  }
}

int cmd_level(const Options& opt, std::istream& in, std::ostream& out, bool hamiltonian) {
  const Loaded loaded = load_graph(opt.target, in);
  const Stopwatch clock;
  const LevelResult result =
      hamiltonian ? hamiltonian_level_number(loaded.graph, opt.solve()) : level_number(loaded.graph, opt.solve());
  emit_level(out, hamiltonian ? "hlevel" : "level", loaded, result, opt, clock.seconds());
  return exit_ok;
}

int cmd_spine_level(const Options& opt, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_graph(opt.target, in);
  const Spine spine = make_spine(loaded.graph, parse_spine_argument(opt.spine));
  const Stopwatch clock;
  const LevelResult result = spine_level_number(loaded.graph, spine, opt.solve());
  std::optional<LevelValue> oracle;
  if (opt.oracle) {
    oracle = brute_force_min_levels(loaded.graph, spine, opt.oracle_limit);
  }
  emit_level(out, "spine-level", loaded, result, opt, clock.seconds(), oracle);
  return exit_ok;
}

int cmd_decide(const Options& opt, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_graph(opt.target, in);
  const Stopwatch clock;
  const LeveledDecision decision = has_leveled_embedding(loaded.graph, opt.solve().disk_test);
  if (opt.json) {
    Json doc = header("decide-leveled", loaded);
    doc["value"] = decision.answer;
    doc["witness"] = decision.witness ? Json(std::vector<Vertex>(decision.witness->vertices().begin(),
                                                                 decision.witness->vertices().end()))
                                      : Json(nullptr);
    emit_json(out, std::move(doc), opt, clock.seconds());
    return exit_ok;
  }
  out << (decision.answer ? "true" : "false") << '\n';
  if (decision.witness) {
    out << "spine: " << joined(decision.witness->vertices()) << '\n';
  }
  return exit_ok;
}

int cmd_book(const Options& opt, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_graph(opt.target, in);
  const Stopwatch clock;
  const BookEmbedding book = book_embedding(loaded.graph, opt.max_vertices);
  const auto edges = loaded.graph.edges();
  if (opt.json) {
    Json pages = Json::array();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      pages.push_back({edges[i].u, edges[i].v, book.pages.page_of_edge[i] + 1});
    }
    Json doc = header("book-thickness", loaded);
    doc["value"] = book.pages.pages;
    doc["exact"] = true;
    doc["book_embedding"] = Json{{"order", std::vector<Vertex>(book.order.vertices().begin(), book.order.vertices().end())},
                                 {"pages", std::move(pages)}};
    emit_json(out, std::move(doc), opt, clock.seconds());
    return exit_ok;
  }
  out << book.pages.pages << '\n';
  out << "order: " << joined(book.order.vertices()) << '\n';
  for (int page = 0; page < book.pages.pages; ++page) {
    std::vector<std::string> listed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (book.pages.page_of_edge[i] == page) {
        listed.push_back(std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v));
      }
    }
    out << "page " << page + 1 << ": " << joined(listed) << '\n';
  }
  return exit_ok;
}

int cmd_thickness(const Options& opt, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_graph(opt.target, in);
  const Stopwatch clock;
  const auto partition = thickness_partition(loaded.graph, opt.max_edges);
  const auto edges = loaded.graph.edges();
  if (opt.json) {
    Json classes = Json::array();
    for (const auto& piece : partition) {
      Json list = Json::array();
      for (std::size_t i : piece) {
        list.push_back({edges[i].u, edges[i].v});
      }
      classes.push_back(std::move(list));
    }
    Json doc = header("thickness", loaded);
    doc["value"] = partition.size();
    doc["exact"] = true;
    doc["partition"] = std::move(classes);
    emit_json(out, std::move(doc), opt, clock.seconds());
    return exit_ok;
  }
  out << partition.size() << '\n';
  for (std::size_t k = 0; k < partition.size(); ++k) {
    std::vector<std::string> listed;
    for (std::size_t i : partition[k]) {
      listed.push_back(std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v));
    }
    out << "plane " << k + 1 << ": " << joined(listed) << '\n';
  }
  return exit_ok;
}

int cmd_check_formulas(const Options& opt, std::ostream& out) {
  const FamilySpec spec = parse_family(opt.target);
  const ExpectedLevels expected = expected_values(spec);
  const Loaded loaded{generate(spec), to_string(spec)};
  const Stopwatch clock;
  const LevelResult level = level_number(loaded.graph, opt.solve());
  const LevelResult hlevel = hamiltonian_level_number(loaded.graph, opt.solve());

  std::string status = "PASS";
  if (hlevel.value != expected.hamiltonian_level) {
    status = "FAIL";
  } else if (level.value != expected.level) {
    // A capped search only bounds the level from above.
    const bool exact = level.exactness == Exactness::exact;
    status = exact || level.value < expected.level ? "FAIL" : "UNDECIDED";
  } else if (level.exactness != Exactness::exact) {
    status = "UNDECIDED";
  }

  if (opt.json) {
    Json doc = header("check-formulas", loaded);
    doc["expected"] = Json{{"level", level_value_to_json(expected.level)},
                           {"hamiltonian_level", level_value_to_json(expected.hamiltonian_level)}};
    doc["solver"] = Json{{"level", level_value_to_json(level.value)},
                         {"level_exact", level.exactness == Exactness::exact},
                         {"hamiltonian_level", level_value_to_json(hlevel.value)}};
    doc["status"] = status;
    emit_json(out, std::move(doc), opt, clock.seconds());
    return exit_ok;
  }
  out << loaded.source << ": solver l=" << to_string(level.value)
      << (level.exactness == Exactness::exact ? "" : " (upper bound)") << ", hl=" << to_string(hlevel.value)
      << " vs expected " << to_string(expected.level) << ", " << to_string(expected.hamiltonian_level) << ": "
      << status << '\n';
  return exit_ok;
}

// Problems with the certificate itself map to exit_bad_certificate; problems
// reading the files are usage errors.
int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const Json doc = parse_json(read_source(opt.target, in), opt.target);
  std::optional<Graph> graph;
  if (!opt.graph.empty()) {
    graph = load_graph(opt.graph, in).graph;
  } else if (doc.is_object() && doc.contains("input")) {
    graph = graph_from_json(doc.at("input"));
  } else {
    throw InvalidInput("certificate file has no \"input\" graph; pass --graph");
  }

  CertificateCheck check;
  int k = 0;
  try {
    const bool wrapped = doc.is_object() && doc.contains("certificate");
    if (!wrapped && doc.is_object() && doc.contains("value")) {
      throw InvalidInput("file carries no certificate (value " + doc.at("value").dump() + ")");
    }
    const LevelCertificate cert = certificate_from_json(wrapped ? doc.at("certificate") : doc);
    k = cert.k;
    check = verify_certificate(*graph, cert);
    if (check.ok && doc.is_object() && doc.contains("value") && doc.at("value") != Json(cert.k)) {
      check = {false, "claimed value " + doc.at("value").dump() + " differs from the certificate's " +
                          std::to_string(cert.k) + " levels"};
    }
  } catch (const InvalidInput& e) {
    check = {false, e.what()};
  }

  if (opt.json) {
    Json result{{"command", "verify-cert"}, {"value", check.ok}};
    if (check.ok) {
      result["levels"] = k;
    } else {
      result["reason"] = check.reason;
    }
    out << result.dump() << '\n';
  } else if (check.ok) {
    out << "valid\nlevels: " << k << '\n';
  } else {
    out << "invalid\nreason: " << check.reason << '\n';
  }
  return check.ok ? exit_ok : exit_bad_certificate;
}

int cmd_cross_levels(const Options& opt, std::istream& in, std::ostream& out) {
  const CrossRelation relation = relation_from_json(parse_json(read_source(opt.target, in), opt.target));
  const LayeringOutcome outcome = level_partition_from_crossings(relation);
  const auto* partition = std::get_if<LevelPartition>(&outcome);
  int levels = 0;
  if (partition) {
    for (int level : partition->levels) {
      levels = std::max(levels, level);
    }
  }
  if (opt.json) {
    Json doc{{"command", "cross-levels"}, {"input", relation_to_json(relation)}};
    if (partition) {
      doc["outcome"] = "partition";
      doc["value"] = levels;
      doc["levels"] = partition->levels;
    } else {
      doc["outcome"] = "witness";
      doc["witness"] = std::get<CrossingCycle>(outcome).fragments;
    }
    out << doc.dump() << '\n';
    return exit_ok;
  }
  if (partition) {
    out << levels << "\nlevels: " << joined(partition->levels) << '\n';
  } else {
    out << "witness\ncycle: " << joined(std::get<CrossingCycle>(outcome).fragments) << '\n';
  }
  return exit_ok;
}

template <class T, class Show>
void print_field(std::ostream& out, const std::string& name, const Field<T>& field, const Options& opt, Show show) {
  out << name << ": " << (field.value ? show(*field.value) : "skipped (" + field.skipped_reason + ")");
  if (opt.timings) {
    out << " [" << field.seconds << " s]";
  }
  out << '\n';
}

int cmd_report(const Options& opt, std::istream& in, std::ostream& out) {
  const Loaded loaded = load_graph(opt.target, in);
  ReportLimits limits;
  limits.book_max_vertices = opt.max_vertices;
  limits.thickness_max_edges = opt.max_edges;
  limits.solve = opt.solve();
  const InvariantReport report = validate_inequalities(loaded.graph, loaded.source, limits);
  if (opt.json) {
    Json doc = header("report", loaded);
    const Json fields = report_to_json(report, opt.timings);
    for (const auto& [key, value] : fields.items()) {
      doc[key] = value;
    }
    out << doc.dump() << '\n';
    return exit_ok;
  }
  const auto level = [](const LevelResult& r) {
    return to_string(r.value) + (r.exactness == Exactness::exact ? "" : " (upper bound)");
  };
  const auto count = [](int v) { return std::to_string(v); };
  out << (report.all_pass() ? "pass" : "fail") << '\n';
  out << "graph: " << report.graph_id << '\n';
  print_field(out, "level", report.level, opt, level);
  print_field(out, "hamiltonian_level", report.hamiltonian_level, opt, level);
  print_field(out, "book_thickness", report.book_thickness, opt, count);
  print_field(out, "thickness", report.thickness, opt, count);
  for (const InequalityCheck& c : report.checks()) {
    out << c.name << ": " << to_string(c.status);
    if (c.status != CheckStatus::skipped) {
      out << " (" << c.lhs << ", " << c.rhs << ")";
    }
    out << '\n';
  }
  return exit_ok;
}

int cmd_render(const Options& opt, std::istream& in, std::ostream& out) {
  const Json doc = parse_json(read_source(opt.target, in), opt.target);
  const bool wrapped = doc.is_object() && doc.contains("certificate");
  Graph graph;
  if (!opt.graph.empty()) {
    graph = load_graph(opt.graph, in).graph;
  } else if (doc.is_object() && doc.contains("input")) {
    graph = graph_from_json(doc.at("input"));
  } else {
    throw InvalidInput("certificate file has no \"input\" graph; pass --graph");
  }
  if (!wrapped && doc.is_object() && doc.contains("value")) {
    throw InvalidInput("file carries no certificate to draw");
  }
  const LevelCertificate cert = certificate_from_json(wrapped ? doc.at("certificate") : doc);
  if (!is_cycle_of(graph, cert.spine)) {
    throw InvalidInput("certificate spine is not a cycle of the graph");
  }
  const std::string drawing = opt.svg ? render_svg(graph, cert) : render_dot(graph, cert);
  if (opt.output.empty()) {
    out << drawing;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!(file << drawing)) {
      throw InvalidInput("cannot write '" + opt.output + "'");
    }
  }
  return exit_ok;
}

void add_output_flags(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json, "Print one JSON object instead of text");
  cmd->add_flag("--timings", opt.timings, "Include wall-clock seconds (output is then not reproducible)");
}

void add_solver_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--workers", opt.workers, "Worker threads for spine search")->check(CLI::Range(1u, 256u));
  cmd->add_flag("--literal-prop", opt.literal_prop,
                "Admit a fragment when it is planar by itself rather than together with the spine");
}

CLI::App* graph_command(CLI::App& app, const std::string& name, const std::string& help, Options& opt) {
  CLI::App* cmd = app.add_subcommand(name, help);
  cmd->add_option("graph", opt.target, "Edge-list or JSON file, '-' for stdin, or a family like K5, K3,3, C7, M16")
      ->required();
  add_output_flags(cmd, opt);
  return cmd;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app("Exact level numbers, book thickness and thickness of small graphs", "levelnum");
  app.require_subcommand(1);

  CLI::App* level = graph_command(app, "level", "Level number over all cycles, with certificate", opt);
  add_solver_flags(level, opt);
  level->add_option("--cap", opt.cap, "Stop after this many cycles (result becomes an upper bound)")
      ->check(CLI::PositiveNumber);

  CLI::App* hlevel = graph_command(app, "hlevel", "Hamiltonian level number, with certificate", opt);
  add_solver_flags(hlevel, opt);

  CLI::App* spine = graph_command(app, "spine-level", "Fewest levels for one given spine", opt);
  add_solver_flags(spine, opt);
  spine->add_option("--spine", opt.spine, "Cycle as comma-separated vertices, e.g. 0,1,2,3")->required();
  spine->add_flag("--oracle", opt.oracle, "Also run the partition brute force for comparison");
  spine->add_option("--oracle-limit", opt.oracle_limit, "Fragment limit for --oracle");

  CLI::App* decide = graph_command(app, "decide-leveled", "Whether some cycle admits a leveled embedding", opt);
  decide->add_flag("--literal-prop", opt.literal_prop, "Use the fragment-only planarity test");

  CLI::App* book = graph_command(app, "book-thickness", "Exact book thickness with a page assignment", opt);
  book->add_option("--max-vertices", opt.max_vertices, "Refuse larger graphs");

  CLI::App* thick = graph_command(app, "thickness", "Exact thickness with a planar edge partition", opt);
  thick->add_option("--max-edges", opt.max_edges, "Refuse larger graphs");

  CLI::App* formulas = app.add_subcommand("check-formulas", "Compare solver results with the closed forms");
  formulas->add_option("family", opt.target, "Kn or Km,n")->required();
  add_output_flags(formulas, opt);
  add_solver_flags(formulas, opt);
  formulas->add_option("--cap", opt.cap, "Cycle cap for the level search")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify-cert", "Re-check a certificate written by level/hlevel/spine-level");
  verify->add_option("file", opt.target, "JSON file, or '-' for stdin")->required();
  verify->add_option("--graph", opt.graph, "Graph to check against instead of the file's input");
  verify->add_flag("--json", opt.json, "Print one JSON object instead of text");

  CLI::App* cross = app.add_subcommand("cross-levels", "Level partition or crossing cycle of a crosses-over relation");
  cross->add_option("relation", opt.target, "JSON file, or '-' for stdin")->required();
  cross->add_flag("--json", opt.json, "Print one JSON object instead of text");

  CLI::App* report = graph_command(app, "report", "All invariants and the inequalities between them", opt);
  add_solver_flags(report, opt);
  report->add_option("--cap", opt.cap, "Cycle cap for the level search")->check(CLI::PositiveNumber);
  report->add_option("--max-vertices", opt.max_vertices, "Book thickness size limit");
  report->add_option("--max-edges", opt.max_edges, "Thickness size limit");

  CLI::App* render = app.add_subcommand("render", "Draw a certificate as SVG or DOT");
  render->add_option("certificate", opt.target, "JSON file, or '-' for stdin")->required();
  render->add_option("--graph", opt.graph, "Graph for a bare certificate");
  CLI::Option* svg = render->add_flag("--svg", opt.svg, "SVG output");
  CLI::Option* dot = render->add_flag("--dot", opt.dot, "Graphviz DOT output");
  svg->excludes(dot);
  render->add_option("-o,--output", opt.output, "Write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (render->parsed() && !opt.svg && !opt.dot) {
      throw CLI::ValidationError("render", "one of --svg or --dot is required");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (level->parsed()) return cmd_level(opt, in, out, false);
    if (hlevel->parsed()) return cmd_level(opt, in, out, true);
    if (spine->parsed()) return cmd_spine_level(opt, in, out);
    if (decide->parsed()) return cmd_decide(opt, in, out);
    if (book->parsed()) return cmd_book(opt, in, out);
    if (thick->parsed()) return cmd_thickness(opt, in, out);
    if (formulas->parsed()) return cmd_check_formulas(opt, out);
    if (verify->parsed()) return cmd_verify(opt, in, out);
    if (cross->parsed()) return cmd_cross_levels(opt, in, out);
    if (report->parsed()) return cmd_report(opt, in, out);
    if (render->parsed()) return cmd_render(opt, in, out);
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_size_limit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace levelnum::cli
