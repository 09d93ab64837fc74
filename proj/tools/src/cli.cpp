#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "hypfan/error.hpp"
#include "hypfan/export.hpp"
#include "hypfan/fansearch.hpp"
#include "hypfan/flow.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/io.hpp"
#include "hypfan/moves.hpp"
#include "hypfan/sphere2.hpp"

namespace hypfan::cli {

namespace {

using json = nlohmann::ordered_json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

json verdicts_json(const std::vector<Verdict>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  return a;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

// Prints a report and returns the exit code it implies.
int emit(const Streams& io, const std::string& format, json report, const std::vector<Verdict>& verdicts) {
  bool ok = all_pass(verdicts);
  report["ok"] = ok;
  report["verdicts"] = verdicts_json(verdicts);
  if (format == "text") {
    for (const auto& v : verdicts)
      io.out << (v.pass ? "PASS " : "FAIL ") << v.name << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
    io.out << (ok ? "ok" : "failed") << "\n";
  } else {
    io.out << report.dump(2) << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

Fan resolve_fan(const ComplexDocument& doc, const std::string& fan_path, const Streams& io, bool required) {
  if (!fan_path.empty()) return parse_fan(slurp(fan_path, io.in));
  if (doc.fan) return *doc.fan;
  if (required) throw Error(ErrorCode::MalformedInput, "no fan: pass --fan or embed \"fan\" in the complex");
  return Fan(std::holds_alternative<SurfaceComplex>(doc.complex) ? 2 : 3);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& q : parse_vector(text)) {
    if (q.get_den() != 1) throw Error(ErrorCode::ParseError, "expected integers: " + text);
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

// ---- validate ----

int cmd_validate(const Streams& io, const std::string& input, const std::string& fan_path, const std::string& format) {
  std::vector<Verdict> vs;
  json report{{"command", "validate"}};
  std::optional<ComplexDocument> parsed;
  try {
    parsed = parse_complex(slurp(input, io.in));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::MalformedInput) throw;
    check(vs, "complex construction", false, e.what());
    report["error"] = std::string(to_string(e.code()));
    return emit(io, format, report, vs);
  }
  const ComplexDocument& doc = *parsed;
  std::optional<FanReport> fr;
  Fan fan = resolve_fan(doc, fan_path, io, false);
  if (const auto* c = std::get_if<SurfaceComplex>(&doc.complex)) {
    const int V = static_cast<int>(c->num_vertices()), E = static_cast<int>(c->num_edges());
    const int F = static_cast<int>(c->num_faces()), chi = c->euler_characteristic();
    report["counts"] = {{"V", V}, {"E", E}, {"F", F}, {"N", c->num_loops()}, {"euler", chi}};
    report["surface"] = to_string(c->surface());
    check(vs, "E = 2V", E == 2 * V, std::to_string(E) + " vs " + std::to_string(2 * V));
    check(vs, "F = V + chi", F == V + chi, std::to_string(F) + " vs " + std::to_string(V + chi));
    std::size_t loop_edges = 0, walk = 0;
    for (const auto& l : c->loops()) loop_edges += l.edges.size();
    for (const auto& f : c->faces()) walk += f.size();
    check(vs, "loops partition edges", static_cast<int>(loop_edges) == E);
    check(vs, "face walks partition darts", static_cast<int>(walk) == 2 * E);
    auto selfs = c->self_loop_edges();
    if (!selfs.empty()) report["self_loop_edges"] = selfs;
    if (fan.size() > 0) fr = fan_compatible(*c, fan);
  } else {
    const auto& c3 = std::get<CellComplex3>(doc.complex);
    report["counts"] = {{"0", c3.count(0)}, {"1", c3.count(1)}, {"2", c3.count(2)}, {"3", c3.count(3)},
                        {"euler", c3.euler_characteristic()}};
    auto vr = validate_complex3(c3);
    json findings = json::array();
    for (const auto& f : vr.findings)
      findings.push_back({{"kind", f.kind}, {"dimension", f.dimension}, {"cells", f.cells}, {"detail", f.detail}});
    report["findings"] = findings;
    check(vs, "complex invariants", vr.ok(), std::to_string(vr.findings.size()) + " findings");
    check(vs, "euler characteristic 0", c3.euler_characteristic() == 0, std::to_string(c3.euler_characteristic()));
    if (fan.size() > 0) fr = fan_compatible(c3, fan);
  }
  if (fr) {
    json bad = json::array();
    for (const auto& d : fr->domains)
      if (!d.result.ok) bad.push_back({{"domain", d.domain}, {"reason", d.result.reason}, {"detail", d.result.detail}});
    report["incompatible_domains"] = bad;
    std::string detail = fr->missing_labels.empty() ? std::to_string(fr->domains.size()) + " domains checked"
                                                    : std::to_string(fr->missing_labels.size()) + " labels without vectors";
    check(vs, "fan compatibility", fr->ok, detail);
  }
  return emit(io, format, report, vs);
}

// ---- check-s2 ----

int cmd_check_s2(const Streams& io, const std::string& input, const std::string& format) {
  ComplexDocument doc = parse_complex(slurp(input, io.in));
  const auto* c = std::get_if<SurfaceComplex>(&doc.complex);
  if (!c) throw Error(ErrorCode::NotOnSphere, "check-s2 needs a 2-dimensional complex");
  json report{{"command", "check-s2"}};
  std::vector<Verdict> vs;
  try {
    vs = run_sphere_suite(*c).verdicts;
    auto col = bicolor(*c);
    report["colors"] = {{"black", col.count(Color::Black)}, {"white", col.count(Color::White)}};
  } catch (const Error& e) {
    check(vs, "sphere suite", false, e.what());
  }
  report["counts"] = {{"N", c->num_loops()}, {"V", c->num_vertices()}, {"F", c->num_faces()}};
  return emit(io, format, report, vs);
}

// ---- flow ----

struct FlowOptions {
  std::string input, fan_path, w, betti, format = "json";
  int samples = 0, jobs = 1;
  std::uint64_t seed = 0;
};

struct SampleResult {
  Vec w;
  std::vector<int> counts;
  std::size_t cycles = 0;
};

template <class C>
std::vector<SampleResult> sample_directions(const C& c, const Fan& fan, const Skeleton& s, const FlowOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> coord(-50, 50);
  auto sets = vertex_label_sets(c);
  std::vector<Vec> ws;
  std::size_t attempts = 0;
  while (static_cast<int>(ws.size()) < o.samples && attempts++ < 100u * static_cast<std::size_t>(o.samples) + 100) {
    Vec w;
    for (int i = 0; i < fan.dimension(); ++i) w.emplace_back(coord(rng));
    if (is_zero(w) || !is_generic(w, fan, sets).generic) continue;
    ws.push_back(std::move(w));
  }
  std::vector<SampleResult> out(ws.size());
  auto work = [&](std::size_t k) {
    auto g = orient_edges(s, fan, ws[k]);
    out[k] = {ws[k], index_counts(s, fan, ws[k]).c, detect_cycles(g).size()};
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, o.jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < ws.size(); k += jobs) work(k);
    });
  for (auto& th : pool) th.join();
  return out;
}

template <class C>
int run_flow(const Streams& io, const C& c, const Fan& fan, const FlowOptions& o) {
  Vec w = parse_vector(o.w);
  if (static_cast<int>(w.size()) != fan.dimension())
    throw Error(ErrorCode::DimensionMismatch, "--w has " + std::to_string(w.size()) + " components, fan is " +
                                                  std::to_string(fan.dimension()) + "-dimensional");
  Direction dir(w, fan, vertex_label_sets(c));
  Skeleton s = skeleton(c);
  std::vector<Verdict> vs;
  json report{{"command", "flow"}, {"w", vec_json(w)}};

  IndexCounts counts = index_counts(s, fan, w);
  report["index_counts"] = counts.c;
  FlowGraph g = orient_edges(s, fan, w);
  json arcs = json::array();
  for (const auto& a : g.arcs) arcs.push_back({a.tail, a.head});
  report["arcs"] = arcs;
  json idx = json::array();
  for (const auto& n : g.nodes) idx.push_back(n.index);
  report["vertex_index"] = idx;

  int alt = 0;
  for (std::size_t i = 0; i < counts.c.size(); ++i) alt += (i % 2 ? -1 : 1) * counts.c[i];
  report["alternating_sum"] = alt;
  check(vs, "alternating sum = euler characteristic", alt == s.euler,
        std::to_string(alt) + " vs " + std::to_string(s.euler));

  auto cycles = detect_cycles(g);
  report["cycles"] = cycles;
  if (s.n == 2) check(vs, "flow graph acyclic", cycles.empty(), std::to_string(cycles.size()) + " cycles");
  if (cycles.empty()) {
    auto levels = assign_levels(g);
    report["levels"] = levels;
    bool increasing = true;
    for (const auto& a : g.arcs) increasing = increasing && levels[a.tail] < levels[a.head];
    check(vs, "levels increase along arcs", increasing);
  }

  auto dc = check_domain_count(s, fan, w);
  report["domains"] = dc.domains;
  report["attractors"] = dc.attractors;
  json jig = json::object();
  for (const auto& [v, ds] : dc.jigsaw) jig[std::to_string(v)] = ds;
  report["jigsaw"] = jig;
  vs.insert(vs.end(), dc.verdicts.begin(), dc.verdicts.end());

  if constexpr (std::is_same_v<C, SurfaceComplex>) {
    if (c.surface().orientable && c.euler_characteristic() == 2) {
      auto pd = attractor_pair_decomposition_s2(c, fan, w);
      report["pair_decomposition_total"] = pd.total;
      vs.insert(vs.end(), pd.verdicts.begin(), pd.verdicts.end());
    }
  }
  if (!o.betti.empty()) {
    auto mr = morse_inequalities(counts, parse_ints(o.betti));
    vs.insert(vs.end(), mr.verdicts.begin(), mr.verdicts.end());
  }
  if (o.samples > 0) {
    json samples = json::array();
    for (const auto& r : sample_directions(c, fan, s, o))
      samples.push_back({{"w", vec_json(r.w)}, {"index_counts", r.counts}, {"cycles", r.cycles}});
    report["samples"] = samples;
    report["seed"] = o.seed;
  }
  if (o.format == "dot") {
    io.out << export_dot(c, &g);
    return all_pass(vs) ? kOk : kCheckFailed;
  }
  return emit(io, o.format, report, vs);
}

int cmd_flow(const Streams& io, const FlowOptions& o) {
  ComplexDocument doc = parse_complex(slurp(o.input, io.in));
  Fan fan = resolve_fan(doc, o.fan_path, io, true);
  if (const auto* c = std::get_if<SurfaceComplex>(&doc.complex)) return run_flow(io, *c, fan, o);
  return run_flow(io, std::get<CellComplex3>(doc.complex), fan, o);
}

// ---- move / generate / replay / search / export ----

void write_state(const Streams& io, const State& s) { io.out << write_complex(to_document(s)); }

int cmd_move(const Streams& io, const std::string& input, const std::string& fan_path, const MoveOp& op) {
  ComplexDocument doc = parse_complex(slurp(input, io.in));
  Fan fan = resolve_fan(doc, fan_path, io, true);
  doc.fan = fan;
  State s = apply_move(to_state(std::move(doc)), op);
  write_state(io, s);
  return kOk;
}

int cmd_search(const Streams& io, const std::string& input, std::uint64_t budget, const std::string& format) {
  ComplexDocument doc = parse_complex(slurp(input, io.in));
  const auto* c = std::get_if<SurfaceComplex>(&doc.complex);
  if (!c) throw Error(ErrorCode::DimensionMismatch, "fan search is only available for 2-dimensional complexes");
  RealizabilityReport rep = realizability_report(*c, budget);
  if (rep.search.fan && format != "text") {
    io.out << write_fan(*rep.search.fan);
    return kOk;
  }
  json report{{"command", "search"}, {"verdict", rep.verdict}, {"nodes", rep.search.nodes}};
  if (!rep.failed_condition.empty()) report["failed_condition"] = rep.failed_condition;
  if (!rep.search.reason.empty()) report["reason"] = rep.search.reason;
  return emit(io, format, report, rep.verdicts);
}

int cmd_export(const Streams& io, const std::string& input, const std::string& fan_path, const std::string& format,
               const std::string& w, bool coloring) {
  ComplexDocument doc = parse_complex(slurp(input, io.in));
  std::optional<FlowGraph> g;
  std::optional<FaceColoring> col;
  if (!w.empty()) {
    Fan fan = resolve_fan(doc, fan_path, io, true);
    Vec wv = parse_vector(w);
    std::visit([&](const auto& c) {
      Direction dir(wv, fan, vertex_label_sets(c));
      g = orient_edges(skeleton(c), fan, wv);
    }, doc.complex);
  }
  if (const auto* c = std::get_if<SurfaceComplex>(&doc.complex)) {
    if (coloring) col = bicolor(*c);
    if (format == "svg")
      io.out << export_svg(*c);
    else
      io.out << export_dot(*c, g ? &*g : nullptr, col ? &*col : nullptr);
  } else {
    if (format == "svg") throw Error(ErrorCode::DimensionMismatch, "svg export is only available in dimension 2");
    io.out << export_dot(std::get<CellComplex3>(doc.complex), g ? &*g : nullptr);
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::MalformedInput:
    case ErrorCode::NonGenericDirection:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnknownLabel:
    case ErrorCode::ZeroVector:
    case ErrorCode::NotAVertex:
    case ErrorCode::VectorOutsideCorner:
    case ErrorCode::NotASpherePair:
      return kUsage;
    case ErrorCode::InconsistentEdgeSigns:
      return kInternal;
    default:
      return kCheckFailed;
  }
}

}  // namespace

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"hypfan: labelled cell complexes, fans and flows"};
  app.require_subcommand(1);

  std::string input, fan_path, format = "json";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "complex JSON (default: stdin)");
  };

  auto* validate = app.add_subcommand("validate", "check complex invariants and fan compatibility");
  add_input(validate);
  validate->add_option("--fan", fan_path, "fan JSON");
  validate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* s2 = app.add_subcommand("check-s2", "run the sphere parity suite");
  add_input(s2);
  s2->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  FlowOptions fo;
  auto* flow = app.add_subcommand("flow", "flow graph, indices and domain counts for a direction");
  flow->add_option("input", fo.input, "complex JSON (default: stdin)");
  flow->add_option("--w", fo.w, "direction, e.g. 2,1 or 3/2,1")->required();
  flow->add_option("--fan", fo.fan_path, "fan JSON");
  flow->add_option("--betti", fo.betti, "Betti numbers, e.g. 1,0,1");
  flow->add_option("--samples", fo.samples, "extra random generic directions to analyse")->check(CLI::NonNegativeNumber);
  flow->add_option("--seed", fo.seed, "seed for --samples");
  flow->add_option("--jobs", fo.jobs, "worker threads for --samples")->check(CLI::PositiveNumber);
  flow->add_option("--format", fo.format)->check(CLI::IsMember({"json", "text", "dot"}));

  auto* move = app.add_subcommand("move", "surgery on a complex with its fan");
  move->require_subcommand(1);
  int x = 0, inner = -1, outer = -1, k = 1;
  std::string w_prime;
  auto* ins = move->add_subcommand("insert-spheres", "insert two concentric spheres around a vertex");
  add_input(ins);
  ins->add_option("--fan", fan_path);
  ins->add_option("--x", x, "vertex")->required();
  ins->add_option("--w-prime", w_prime, "vector strictly inside the corner at x");
  auto* rem = move->add_subcommand("remove-spheres", "remove an inserted pair of spheres");
  add_input(rem);
  rem->add_option("--fan", fan_path);
  rem->add_option("--inner", inner)->required();
  rem->add_option("--outer", outer)->required();
  auto* aug = move->add_subcommand("augment", "k insertions at vertex 0");
  add_input(aug);
  aug->add_option("--fan", fan_path);
  aug->add_option("--k", k)->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("generate", "emit a built-in example with its fan");
  gen->require_subcommand(1);
  int g = 1, variant = 8;
  std::uint64_t budget = kDefaultSearchBudget;
  auto* g_oct = gen->add_subcommand("octahedral", "three great circles on the sphere");
  auto* g_genus = gen->add_subcommand("genus", "orientable surface of genus g");
  g_genus->add_option("--g", g)->required()->check(CLI::NonNegativeNumber);
  g_genus->add_option("--variant", variant)->check(CLI::IsMember({8, 16}));
  g_genus->add_option("--budget", budget);
  auto* g_non = gen->add_subcommand("nonorientable", "quotient of the sixteen-domain genus complex");
  g_non->add_option("--g", g)->required()->check(CLI::PositiveNumber);
  g_non->add_option("--budget", budget);
  auto* g_s3 = gen->add_subcommand("s3", "the 3-sphere example");
  gen->add_subcommand("rp3", "its antipodal quotient");

  auto* search = app.add_subcommand("search", "look for a compatible planar fan");
  add_input(search);
  search->add_option("--budget", budget);
  search->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string script_path;
  auto* rep = app.add_subcommand("replay", "run a move script");
  rep->add_option("script", script_path, "move script JSON")->required();
  rep->add_option("--input", input, "initial complex JSON");

  std::string w;
  bool coloring = false;
  auto* exp = app.add_subcommand("export", "render as DOT or SVG");
  add_input(exp);
  exp->add_option("--fan", fan_path);
  exp->add_option("--format", format)->check(CLI::IsMember({"dot", "svg"}));
  exp->add_option("--w", w, "orient edges by this direction");
  exp->add_flag("--coloring", coloring, "fill faces by the checkerboard colouring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(io, input, fan_path, format);
    if (*s2) return cmd_check_s2(io, input, format);
    if (*flow) return cmd_flow(io, fo);
    if (*ins) {
      MoveOp op{"insert_spheres", {{"x", std::to_string(x)}}};
      if (!w_prime.empty()) op.args["w_prime"] = w_prime;
      return cmd_move(io, input, fan_path, op);
    }
    if (*rem)
      return cmd_move(io, input, fan_path,
                      {"remove_spheres", {{"inner", std::to_string(inner)}, {"outer", std::to_string(outer)}}});
    if (*aug) return cmd_move(io, input, fan_path, {"augment", {{"k", std::to_string(k)}}});
    if (*gen) {
      if (*g_oct) {
        auto o = generate_octahedral();
        io.out << write_complex({o.complex, o.fan, std::nullopt, std::nullopt});
      } else if (*g_genus || *g_non) {
        auto s = *g_genus ? generate_genus_g(g, variant, budget) : generate_nonorientable(g, budget);
        io.out << write_complex({s.complex, s.fan, s.involution, std::nullopt});
      } else {
        auto s = *g_s3 ? generate_s3() : generate_rp3();
        io.out << write_complex({s.complex, s.fan, std::nullopt, s.involution});
      }
      return kOk;
    }
    if (*search) return cmd_search(io, input, budget, format);
    if (*rep) {
      MoveScript script = parse_script(slurp(script_path, in));
      std::optional<State> init;
      if (!input.empty()) init = to_state(parse_complex(slurp(input, in)));
      write_state(io, replay(script, init));
      return kOk;
    }
    if (*exp) return cmd_export(io, input, fan_path, format == "json" ? "dot" : format, w, coloring);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace hypfan::cli
