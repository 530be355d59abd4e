// sr-chroma: command-line front end.
//
// Exit codes: 0 positive, 1 certified negative, 2 input error, 3 resource cap,
// 4 inconclusive.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "srchroma/errors.hpp"
#include "srchroma/graph.hpp"
#include "srchroma/realizability.hpp"
#include "srchroma/span_coloring.hpp"
#include "srchroma/sr_algebra.hpp"
#include "srchroma/steenrod.hpp"
#include "srchroma/unknown_poly.hpp"

using namespace srchroma;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kPositive = 0, kNegative = 1, kInput = 2, kCap = 3, kInconclusive = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string format = "text";
  int jobs = 1;
  std::string graph;
  std::string family;
  std::string vector;
  unsigned p = 0;
  std::string free;
  std::string complex;
  std::string table;
  unsigned degree_bound = 0;
  std::string relations = "p1pp,wd";
  std::uint64_t cap = 100'000'000;
  std::string multiset_family;
  unsigned span = 0;
  std::string s;
  int c = -1;
  std::string multiset;
};

struct Report {
  std::string status;
  int exit = kPositive;
  std::string text;
  json data = json::object();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// key=value lines; a key names a long option of the active command. Values
// only fill options absent from the command line.
void apply_config(CLI::App* cmd, const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected key=value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "config") throw ParseError(lineno, "config files cannot include other config files");
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (!opt) throw ParseError(lineno, "unknown key '" + key + "' for command " + cmd->get_name());
    if (opt->count() == 0) {
      opt->add_result(value);
      opt->run_callback();
    }
  }
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const std::string& what) {
  std::vector<unsigned> out;
  if (text.empty() || text == "-") return out;
  std::istringstream in(text);
  for (std::string piece; std::getline(in, piece, ',');) {
    piece = trim(piece);
    try {
      std::size_t used = 0;
      const long v = std::stol(piece, &used);
      if (used != piece.size() || v < 0) throw std::invalid_argument(piece);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw InputError("bad " + what + " entry '" + piece + "'");
    }
  }
  return out;
}

std::string paren(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Graph load_graph(const Options& o) {
  if (o.graph.empty()) throw InputError("a graph file is required");
  return parse_graph(read_file(o.graph));
}

FamilySpec family_spec(const Options& o) {
  FamilySpec spec;
  if (o.family == "A") {
    spec.family = Family::A;
  } else if (o.family == "Ap") {
    spec.family = Family::Ap;
  } else if (o.family == "Bp") {
    spec.family = Family::Bp;
  } else if (o.family == "B") {
    spec.family = Family::B;
  } else if (o.family.empty()) {
    throw InputError("--family is required (A, Ap, Bp or B)");
  } else {
    throw InputError("unknown family '" + o.family + "' (A, Ap, Bp or B)");
  }
  spec.vector = parse_unsigned_list(o.vector, "vector");
  if (spec.vector.empty()) throw InputError("--vector is required");
  spec.p = spec.family == Family::B ? 3 : o.p;
  if ((spec.family == Family::Ap || spec.family == Family::Bp) && o.p == 0) throw InputError("--p is required");
  if (spec.family == Family::B && o.p != 0 && o.p != 3) throw InputError("B(n,G) is defined at p = 3");
  return spec;
}

std::vector<std::pair<std::string, unsigned>> parse_free(const std::string& text) {
  std::vector<std::pair<std::string, unsigned>> gens;
  std::istringstream in(text);
  for (std::string piece; std::getline(in, piece, ',');) {
    const auto colon = piece.find(':');
    if (colon == std::string::npos) throw InputError("free generators are written name:degree, got '" + piece + "'");
    const auto deg = parse_unsigned_list(piece.substr(colon + 1), "degree");
    if (deg.size() != 1) throw InputError("bad degree in '" + piece + "'");
    gens.emplace_back(trim(piece.substr(0, colon)), deg[0]);
  }
  return gens;
}

// The complex plus the prime its Steenrod action lives over.
struct ActionInput {
  std::shared_ptr<const JoinComplex> cx;
  Residue p = 0;
};

ActionInput action_input(const Options& o) {
  const int sources = !o.free.empty() + !o.complex.empty() + !o.family.empty();
  if (sources != 1) throw InputError("give exactly one of --family (with a graph), --free or --complex");
  ActionInput in;
  if (!o.free.empty()) {
    in.cx = free_polynomial(parse_free(o.free));
    in.p = o.p;
  } else if (!o.complex.empty()) {
    in.cx = parse_complex(read_file(o.complex));
    in.p = o.p ? o.p : in.cx->spec().p;
  } else {
    const auto spec = family_spec(o);
    in.cx = make_complex(spec, load_graph(o));
    in.p = o.p ? o.p : in.cx->spec().p;
  }
  if (in.p == 0) throw InputError("--p is required");
  if (in.p == 2 || !is_prime(in.p)) throw InputError("action commands need an odd prime, got p = " + std::to_string(in.p));
  const auto fam = in.cx->spec().family;
  if ((fam == Family::Ap || fam == Family::Bp || fam == Family::B) && in.cx->spec().p != in.p)
    throw InputError("--p " + std::to_string(in.p) + " disagrees with the family prime " +
                     std::to_string(in.cx->spec().p));
  return in;
}

DegreeMultisetFamily multiset_family(const Options& o) {
  if (o.multiset_family.empty()) return DegreeMultisetFamily::anderson_grodal();
  return DegreeMultisetFamily::parse(read_file(o.multiset_family));
}

json partition_json(const JoinComplex& cx, const Partition& part) {
  json blocks = json::array();
  for (const auto& b : part.blocks) {
    json names = json::array();
    for (auto g : b) names.push_back(cx.generator(g).name);
    blocks.push_back(names);
  }
  return blocks;
}

json span_json(const Graph& g, const SpanColoring& c) {
  json out = json::object();
  for (Vertex v = 0; v < g.size(); ++v) out[g.label(v)] = c.assignment[v].coords();
  return out;
}

bool cokernel_check_applies(const JoinComplex& cx) {
  const auto fam = cx.spec().family;
  return (fam == Family::Bp || fam == Family::B) && !cx.graph().empty() && cx.graph().min_degree() >= 2;
}

// ---------------------------------------------------------------------------

Report cmd_chromatic(const Options& o) {
  const Graph g = load_graph(o);
  Report r;
  const auto chi = chromatic_number(g);
  r.text = "chi = " + std::to_string(chi.chromatic_number) + "\n";
  r.data["chi"] = chi.chromatic_number;
  r.data["coloring"] = json::object();
  for (Vertex v = 0; v < g.size(); ++v) r.data["coloring"][g.label(v)] = chi.witness.color[v];
  if (o.span) {
    if (o.span != 2 && !is_prime(o.span)) throw InputError("--span needs a prime");
    const auto s = o.jobs > 1 ? span_chromatic_number_parallel(g, o.span) : span_chromatic_number(g, o.span);
    r.text += "s_" + std::to_string(o.span) + "chi = " + std::to_string(s.span_chromatic_number) + "\n";
    r.text += format_span_coloring(g, s.witness);
    r.data["span_p"] = o.span;
    r.data["span_chi"] = s.span_chromatic_number;
    r.data["span_witness"] = span_json(g, s.witness);
  }
  r.status = "computed";
  return r;
}

Report cmd_span_chromatic(const Options& o) {
  const Graph g = load_graph(o);
  if (o.p == 0) throw InputError("--p is required");
  if (o.p != 2 && !is_prime(o.p)) throw InputError("--p must be prime");
  const auto s = o.jobs > 1 ? span_chromatic_number_parallel(g, o.p) : span_chromatic_number(g, o.p);
  Report r;
  r.status = "computed";
  r.text = "s_" + std::to_string(o.p) + "chi = " + std::to_string(s.span_chromatic_number) + "\n" +
           format_span_coloring(g, s.witness);
  r.data["p"] = o.p;
  r.data["span_chi"] = s.span_chromatic_number;
  r.data["witness"] = span_json(g, s.witness);
  r.data["nodes"] = s.nodes;
  return r;
}

Report cmd_build_complex(const Options& o) {
  std::shared_ptr<const JoinComplex> cx;
  if (!o.free.empty()) {
    cx = free_polynomial(parse_free(o.free));
  } else {
    cx = make_complex(family_spec(o), load_graph(o));
  }
  Report r;
  r.status = "built";
  r.text = cx->serialize();
  json gens = json::array();
  for (const auto& gen : cx->generators()) gens.push_back({{"name", gen.name}, {"degree", gen.degree}});
  r.data["generators"] = gens;
  r.data["maximal_faces"] = cx->maximal_faces().size();
  return r;
}

Report cmd_action_search(const Options& o) {
  const auto in = action_input(o);
  SearchOptions opt;
  opt.relations = RelationSet::parse(o.relations);
  opt.degree_bound = o.degree_bound;
  opt.node_cap = o.cap;
  const auto res = search_action(in.cx, in.p, opt);
  Report r;
  r.status = res.found ? "found" : "exhausted";
  r.exit = res.found ? kPositive : kNegative;
  r.text = res.to_text();
  r.data["scope"] = res.scope();
  r.data["unknowns"] = res.unknowns;
  r.data["equations"] = res.equations;
  r.data["nodes"] = res.nodes;
  if (res.found) {
    r.data["table"] = res.table->serialize();
    if (cokernel_check_applies(*in.cx)) {
      const auto cok = coloring_from_action(*res.table);
      r.text += cok.to_text(in.cx->graph());
      r.data["cokernels_nonzero"] = cok.all_nonzero();
    }
  }
  return r;
}

Report cmd_action_check(const Options& o) {
  const auto in = action_input(o);
  if (o.table.empty()) throw InputError("--table is required");
  const auto table = SteenrodTable::parse(in.cx, in.p, read_file(o.table));
  const auto rs = RelationSet::parse(o.relations);
  const unsigned bound = o.degree_bound ? o.degree_bound : default_degree_bound(in.p);
  const auto rel = o.jobs > 1 ? check_relations_parallel(table, rs, bound) : check_relations(table, rs, bound);
  Report r;
  r.text = rel.to_text();
  bool ok = rel.ok();
  r.data["relations_ok"] = rel.ok();
  r.data["violations"] = rel.violations.size();
  if (in.cx->spec().family != Family::Free) {
    const auto ideal = check_ideal_preservation(table);
    r.text += ideal.to_text();
    ok = ok && ideal.ok();
    r.data["ideal_ok"] = ideal.ok();
  }
  if (ok && cokernel_check_applies(*in.cx)) {
    const auto cok = coloring_from_action(table);
    r.text += cok.to_text(in.cx->graph());
    r.data["cokernels_nonzero"] = cok.all_nonzero();
  }
  r.status = ok ? "valid" : "invalid";
  r.exit = ok ? kPositive : kNegative;
  return r;
}

Report cmd_necessary(const Options& o) {
  const auto spec = family_spec(o);
  const Graph g = load_graph(o);
  const auto res = necessary_condition(spec, g, o.jobs);
  Report r;
  r.text = res.to_text(g);
  switch (res.status) {
    case NecessaryStatus::Pass: r.status = "pass"; r.exit = kPositive; break;
    case NecessaryStatus::Fail: r.status = "fail"; r.exit = kNegative; break;
    case NecessaryStatus::NotApplicable: r.status = "not-applicable"; r.exit = kInconclusive; break;
  }
  if (res.status != NecessaryStatus::NotApplicable) {
    r.data["p"] = res.p;
    r.data["bound"] = res.bound;
    r.data["span_chi"] = res.span_chromatic;
  }
  return r;
}

Report cmd_partition(const Options& o) {
  const auto spec = family_spec(o);
  const Graph g = load_graph(o);
  const auto cx = build_complex(spec, g);
  const auto fam = multiset_family(o);
  const auto chi = chromatic_number(g);
  Report r;
  std::optional<Partition> part;
  std::string construction;
  bool uniform = cx.block_count() > 0;
  for (std::size_t k = 0; k < cx.block_count(); ++k)
    uniform = uniform && cx.block(k).labels.size() == cx.block(0).labels.size();
  if (uniform && spec.family != Family::A && chi.chromatic_number <= cx.block(0).labels.size()) {
    part = partition_from_coloring(cx, chi.witness);
    construction = "coloring";
  } else if (auto d = decompose_s(slot_vector(cx), chi.chromatic_number)) {
    part = partition_from_decomposition(cx, *d, chi.witness);
    construction = "decomposition";
    r.data["s_prime"] = d->prime;
    r.data["s_double_prime"] = d->double_prime;
  }
  if (!part) {
    r.status = "none";
    r.exit = kInconclusive;
    r.text = "no partition construction applies (chi = " + std::to_string(chi.chromatic_number) + ")\n";
    return r;
  }
  const bool ok = verify_partition(cx, *part, fam);
  r.status = ok ? "verified" : "rejected";
  r.exit = ok ? kPositive : kNegative;
  r.text = "construction: " + construction + "\n" + format_partition(cx, *part) +
           "verified: " + (ok ? "yes" : "no") + "\n";
  r.data["construction"] = construction;
  r.data["blocks"] = partition_json(cx, *part);
  return r;
}

Report cmd_decompose(const Options& o) {
  const auto s = parse_unsigned_list(o.s, "s");
  if (s.empty()) throw InputError("--s is required");
  std::size_t c = 0;
  if (o.c >= 0) {
    c = static_cast<std::size_t>(o.c);
  } else if (!o.graph.empty()) {
    c = chromatic_number(load_graph(o)).chromatic_number;
  } else {
    throw InputError("give --c or a graph");
  }
  Report r;
  r.data["s"] = s;
  r.data["c"] = c;
  if (auto d = decompose_s(s, c)) {
    r.status = "found";
    r.text = "s' = " + paren(d->prime) + "\ns'' = " + paren(d->double_prime) + "\n";
    r.data["s_prime"] = d->prime;
    r.data["s_double_prime"] = d->double_prime;
  } else {
    r.status = "none";
    r.exit = kNegative;
    r.text = "no decomposition of " + paren(s) + " for c = " + std::to_string(c) + "\n";
  }
  return r;
}

Report cmd_multiset(const Options& o) {
  DegreeMultiset m = parse_unsigned_list(o.multiset, "multiset");
  for (auto d : m)
    if (d == 0 || d % 2) throw InputError("multiset entries must be positive and even");
  std::sort(m.begin(), m.end());
  const auto fam = multiset_family(o);
  Report r;
  r.data["multiset"] = m;
  if (auto parts = multiset_decomposable(m, fam)) {
    r.status = "decomposable";
    std::string joined;
    json arr = json::array();
    for (std::size_t i = 0; i < parts->size(); ++i) {
      joined += (i ? " + " : "") + format_multiset((*parts)[i]);
      arr.push_back((*parts)[i]);
    }
    r.text = "decomposable: " + format_multiset(m) + " = " + (joined.empty() ? "{}" : joined) + "\n";
    r.data["parts"] = arr;
  } else {
    r.status = "not-decomposable";
    r.exit = kNegative;
    r.text = "not decomposable: " + format_multiset(m) + " over " + fam.describe() + "\n";
  }
  return r;
}

Report cmd_realizable(const Options& o) {
  const auto spec = family_spec(o);
  const Graph g = load_graph(o);
  RealizabilityOptions opt;
  opt.family = multiset_family(o);
  opt.jobs = o.jobs;
  const auto v = check_realizable(spec, g, opt);
  const auto cx = build_complex(spec, g);
  Report r;
  r.status = verdict_name(v.status);
  r.exit = v.status == Verdict::CertifiedRealizable ? kPositive
           : v.status == Verdict::CertifiedNotRealizable ? kNegative
                                                          : kInconclusive;
  r.text = v.to_text(cx);
  r.data["chi"] = v.chromatic;
  if (v.partition) {
    r.data["construction"] = v.construction;
    r.data["blocks"] = partition_json(cx, *v.partition);
  }
  if (v.face_multiset) r.data["face_multiset"] = *v.face_multiset;
  if (v.necessary && v.necessary->status == NecessaryStatus::Fail) {
    r.data["span_chi"] = v.necessary->span_chromatic;
    r.data["bound"] = v.necessary->bound;
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

void emit(const std::string& command, const Options& o, const Report& r) {
  if (o.format == "json") {
    json out;
    out["command"] = command;
    out["status"] = r.status;
    out["exit_code"] = r.exit;
    out["report"] = split_lines(r.text);
    out["data"] = r.data;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
}

void emit_error(const std::string& command, const Options& o, int code, const std::string& msg) {
  if (o.format == "json") {
    json out;
    out["command"] = command;
    out["status"] = code == kCap ? "cap-exceeded" : "error";
    out["exit_code"] = code;
    out["error"] = msg;
    std::cout << out.dump(2) << "\n";
  }
  std::cerr << "sr-chroma: " << msg << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Span colorings, Stanley-Reisner algebras and Steenrod actions"};
  app.require_subcommand(1);
  Options o;

  using Handler = Report (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "key=value file; command-line flags take precedence");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", o.jobs, "worker threads for parallel kernels")->check(CLI::PositiveNumber);
  };
  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph,--graph", o.graph, "graph file (edge-list format)"); };
  auto family_args = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "A, Ap, Bp or B");
    sub->add_option("--vector", o.vector, "comma separated block sizes, e.g. 1,1");
    sub->add_option("--p", o.p, "prime");
  };
  auto multiset_arg = [&](CLI::App* sub) {
    sub->add_option("--multiset-family", o.multiset_family, "file of base degree sets");
  };
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, h);
    return sub;
  };

  auto* chromatic = add("chromatic", "chromatic number (and span chromatic number with --span)", cmd_chromatic);
  graph_arg(chromatic);
  chromatic->add_option("--span", o.span, "also compute the span chromatic number over F_p");

  auto* span = add("span-chromatic", "span chromatic number with witness", cmd_span_chromatic);
  graph_arg(span);
  span->add_option("--p", o.p, "prime (2 allowed)");

  auto* build = add("build-complex", "serialize the join complex of a family", cmd_build_complex);
  graph_arg(build);
  family_args(build);
  build->add_option("--free", o.free, "free polynomial ring, e.g. x:4,y:8");

  auto action_args = [&](CLI::App* sub) {
    graph_arg(sub);
    family_args(sub);
    sub->add_option("--free", o.free, "free polynomial ring, e.g. x:4,y:8");
    sub->add_option("--complex", o.complex, "serialized complex file");
    sub->add_option("--degree-bound", o.degree_bound, "largest target degree checked (default 2p^2+2p)");
    sub->add_option("--relations", o.relations, "comma separated subset of p1pp, adem, wd");
  };
  auto* search = add("action-search", "exhaustive search for a Steenrod action", cmd_action_search);
  action_args(search);
  search->add_option("--cap", o.cap, "search node cap");

  auto* check = add("action-check", "check a Steenrod table against the relations", cmd_action_check);
  action_args(check);
  check->add_option("--table", o.table, "table file with lines P^k(gen) = element");

  auto* necessary = add("necessary", "span chromatic necessary condition", cmd_necessary);
  graph_arg(necessary);
  family_args(necessary);

  auto* partition = add("partition", "construct and verify a realizing partition", cmd_partition);
  graph_arg(partition);
  family_args(partition);
  multiset_arg(partition);

  auto* decompose = add("decompose", "search a decomposition s = s' + s''", cmd_decompose);
  graph_arg(decompose);
  decompose->add_option("--s", o.s, "comma separated vector");
  decompose->add_option("--c", o.c, "chromatic number (default: computed from the graph)");

  auto* multiset = add("multiset", "decompose a degree multiset into base sets", cmd_multiset);
  multiset->add_option("multiset,--multiset", o.multiset, "comma separated even degrees");
  multiset_arg(multiset);

  auto* realizable = add("realizable", "realizability verdict", cmd_realizable);
  graph_arg(realizable);
  family_args(realizable);
  multiset_arg(realizable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    try {
      if (!o.config.empty()) apply_config(sub, o.config);
      if (o.format != "text" && o.format != "json") throw InputError("--format must be text or json");
      if (o.jobs < 1) throw InputError("--jobs must be positive");
      const Report r = handler(o);
      emit(name, o, r);
      return r.exit;
    } catch (const NodeCapExceeded& e) {
      emit_error(name, o, kCap, e.what());
      return kCap;
    } catch (const ParseError& e) {
      emit_error(name, o, kInput, e.what());
      return kInput;
    } catch (const CLI::ParseError& e) {
      emit_error(name, o, kInput, e.what());
      return kInput;
    } catch (const InputError& e) {
      emit_error(name, o, kInput, e.what());
      return kInput;
    } catch (const ContractError& e) {
      emit_error(name, o, kInput, e.what());
      return kInput;
    } catch (const LookupError& e) {
      emit_error(name, o, kInput, e.what());
      return kInput;
    } catch (const IncompleteTableError& e) {
      emit_error(name, o, kInput, e.what());
      return kInput;
    }
  }
  return kInput;
}
