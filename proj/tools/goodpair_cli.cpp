#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "goodpair/crosscheck.hpp"
#include "goodpair/dispatch.hpp"
#include "goodpair/document.hpp"
#include "goodpair/generators.hpp"
#include "goodpair/oracle.hpp"

using namespace goodpair;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

// Inputs beyond this are refused rather than truncated.
constexpr int kMaxOrder = 64;

struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RootFlags {
  std::string u, v;
};

void add_root_flags(CLI::App* cmd, RootFlags& r) {
  cmd->add_option("--u", r.u, "out-branching root (overrides the roots line)");
  cmd->add_option("--v", r.v, "in-branching root (overrides the roots line)");
}

Document with_roots(Document d, const RootFlags& r, int max_order) {
  const int n = d.composition.order();
  if (n == 0) throw PreconditionError("input has no vertices");
  if (n > max_order)
    throw Refusal("input has " + std::to_string(n) + " vertices, the limit is " + std::to_string(max_order));
  auto pick = [&](const std::string& name, std::optional<Vertex>& slot, const char* flag) {
    if (name.empty()) return;
    Vertex x = d.find(name);
    if (x == kNoVertex) throw PreconditionError(std::string(flag) + ": unknown vertex '" + name + "'");
    slot = x;
  };
  pick(r.u, d.u, "--u");
  pick(r.v, d.v, "--v");
  if (!d.u || !d.v) throw PreconditionError("roots missing: give a roots line or --u and --v");
  return d;
}

Document load(const std::string& path, const RootFlags& r, int max_order) {
  return with_roots(parse_document(read_all(path)), r, max_order);
}

std::string join(const Document& d, const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex x : vs) s += " " + d.names[x];
  return s;
}

void print_layers(std::ostream& out, const LayerWitness& w, const std::vector<std::string>& names) {
  out << "witness kind " << (w.kind == LayerKind::A ? "A" : "B") << " parameter " << w.parameter() << '\n';
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    out << "witness layer " << i + 1;
    for (Vertex x : w.layers[i]) out << ' ' << names[x];
    out << '\n';
  }
  for (const Arc& a : w.backward) out << "witness backward " << names[a.tail] << ' ' << names[a.head] << '\n';
}

void print_witness(std::ostream& out, const Decision& d, const Document& doc) {
  const std::vector<std::string>& quotient_names = doc.flat() ? doc.names : doc.part_names;
  if (d.semicomplete) {
    const ScVerdict& s = *d.semicomplete;
    if (s.exception) out << "witness small-exception " << to_string(*s.exception) << '\n';
    if (s.reason == ScReason::RootComponent) out << "witness root-component\n";
    if (s.arc) out << "witness arc " << doc.arc_name(*s.arc) << '\n';
    if (s.witness) print_layers(out, *s.witness, doc.names);
  }
  if (d.composition) {
    const CompVerdict& c = *d.composition;
    if (c.exception) {
      out << "witness exception-family " << to_string(c.exception->family) << (c.exception->reversed ? " converse" : "") << '\n';
      if (!c.exception->parameters.empty()) out << "witness parameters " << c.exception->parameters << '\n';
      for (std::size_t i = 0; i < c.exception->blocks.size(); ++i)
        out << "witness block " << i + 1 << join(doc, c.exception->blocks[i]) << '\n';
    }
    if (c.witness) print_layers(out, *c.witness, quotient_names);
    for (const BackwardEvidence& e : c.evidence)
      out << "witness evidence " << quotient_names[e.arc.tail] << ' ' << quotient_names[e.arc.head]
          << " blocking=" << (e.blocking ? 1 : 0) << '\n';
  }
  if (d.transitive && !d.transitive->pattern.empty()) out << "witness pattern" << join(doc, d.transitive->pattern) << '\n';
  if (d.quasi_transitive)
    for (std::size_t i = 0; i < d.quasi_transitive->parts.size(); ++i)
      out << "witness qt-part " << i + 1 << join(doc, d.quasi_transitive->parts[i]) << '\n';
}

// Verifies with vertex names in the diagnostics.
std::string explain(const Digraph& g, const BranchingPair& p, Vertex u, Vertex v, const Document& doc) {
  auto one = [&](const Branching& b, Orientation o, Vertex root) -> std::string {
    const std::string name = o == Orientation::Out ? "out-branching" : "in-branching";
    Check c = verify_branching(g, b, o, root);
    if (c.ok) return {};
    switch (c.defect) {
      case Defect::WrongRoot: return name + " is not rooted at " + doc.names[root];
      case Defect::MissingArc: return name + " uses " + doc.arc_name(*c.arc) + ", which is not an arc";
      case Defect::WrongOrder:
        if (c.vertex) return name + " is not spanning, it misses vertex " + doc.names[*c.vertex];
        return name + " is not spanning";
      case Defect::Cycle: return name + " has a cycle through " + doc.names[*c.vertex];
      default: return name + ": " + c.detail;
    }
  };
  if (std::string s = one(p.out, Orientation::Out, u); !s.empty()) return s;
  if (std::string s = one(p.in, Orientation::In, v); !s.empty()) return s;
  std::vector<Arc> shared = p.shared_arcs();
  if (!shared.empty()) return "branchings share arc " + doc.arc_name(shared.front());
  return {};
}

int cmd_decide(const std::string& path, const RootFlags& roots, const std::string& cls_name) {
  auto cls = parse_input_class(cls_name);
  if (!cls) throw PreconditionError("unknown class '" + cls_name + "'");
  Document doc = load(path, roots, kMaxOrder);
  Decision d = decide(doc.composition, *doc.u, *doc.v, *cls);
  std::ostringstream out;
  out << "verdict " << (d.yes ? "YES" : "NO") << '\n';
  out << "class " << to_string(d.engine) << '\n';
  out << "reason " << d.reason << '\n';
  if (d.yes) {
    if (!d.pair) throw InternalInconsistency("YES without a pair");
    const Digraph g = doc.composition.flatten();
    if (std::string bad = explain(g, *d.pair, *doc.u, *doc.v, doc); !bad.empty())
      throw InternalInconsistency("engine pair rejected: " + bad);
    out << emit_pair(doc, *d.pair);
  } else {
    print_witness(out, d, doc);
  }
  std::cout << out.str();
  return d.yes ? kYes : kNo;
}

int cmd_verify(const std::string& path, const RootFlags& roots, const std::string& pair_path) {
  Document doc = parse_document(read_all(path));
  PairDocument claimed;
  try {
    claimed = parse_pair(read_all(pair_path), doc);
  } catch (const PreconditionError& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kNo;
  }
  RootFlags r = roots;
  if (r.u.empty() && !doc.u) r.u = doc.names[claimed.u];
  if (r.v.empty() && !doc.v) r.v = doc.names[claimed.v];
  doc = with_roots(std::move(doc), r, kMaxOrder);
  std::string bad = explain(doc.composition.flatten(), claimed.pair, *doc.u, *doc.v, doc);
  if (!bad.empty()) {
    std::cout << "invalid: " << bad << '\n';
    return kNo;
  }
  std::cout << "valid\n";
  return kYes;
}

int cmd_oracle(const std::string& path, const RootFlags& roots, int max_order, long budget) {
  Document doc = load(path, roots, max_order);
  OracleLimits limits{max_order, budget};
  OracleResult r = oracle_good_pair(doc.composition.flatten(), *doc.u, *doc.v, limits);
  std::ostringstream out;
  out << "verdict " << (r.has_pair ? "YES" : "NO") << '\n';
  out << "nodes " << r.nodes << '\n';
  if (r.pair) out << emit_pair(doc, *r.pair);
  std::cout << out.str();
  return r.has_pair ? kYes : kNo;
}

struct GenFlags {
  std::string family;
  int n = 5;
  int index = 0;
  int parameter = 2;
  int max_layer = 2;
  int max_order = 8;
  std::uint64_t seed = 0;
  bool with_vu = false;
  bool count = false;
};

std::optional<ExceptionFamily> exception_family(const std::string& name) {
  for (ExceptionFamily f : {ExceptionFamily::A, ExceptionFamily::B, ExceptionFamily::C, ExceptionFamily::D, ExceptionFamily::E, ExceptionFamily::F,
                        ExceptionFamily::G})
    if (name == "exception-" + to_string(f)) return f;
  return std::nullopt;
}

void require_range(const char* what, long value, long lo, long hi) {
  if (value < lo || value > hi)
    throw Refusal(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                  std::to_string(value));
}

// Members of an indexed family, or nullopt for parametric families.
std::optional<std::vector<Instance>> indexed_members(const GenFlags& f) {
  if (f.family == "path-separation") {
    std::vector<Instance> r;
    for (int i = 0; i < path_separation_member_count(); ++i) r.push_back(path_separation_member(i));
    return r;
  }
  if (f.family == "exception-b" && !f.count) return std::nullopt;
  if (auto t = exception_family(f.family)) {
    require_range("--max-order", f.max_order, 2, 8);
    return exception_family_members(*t, f.max_order);
  }
  if (f.family == "semicomplete") {
    require_range("--n", f.n, 1, 5);
    std::vector<Instance> r;
    for (Digraph& g : semicomplete_digraphs(f.n)) r.push_back({"semicomplete", 0, singleton_composition(g), {}, {}, {}});
    return r;
  }
  return std::nullopt;
}

int cmd_gen(const GenFlags& f) {
  std::optional<std::vector<Instance>> members = indexed_members(f);
  if (f.count) {
    if (!members) throw PreconditionError("--count applies to indexed families only");
    std::cout << members->size() << '\n';
    return kYes;
  }
  Document doc;
  if (members) {
    require_range("--index", f.index, 0, static_cast<long>(members->size()) - 1);
    const Instance& in = (*members)[f.index];
    doc = numbered_document(in.composition, f.family == "semicomplete", in.u, in.v);
  } else if (f.family == "exception-b") {
    require_range("--n", f.n, 3, kMaxOrder);
    Instance in = independent_middle_member(f.n, f.with_vu);
    doc = numbered_document(in.composition, false, in.u, in.v);
  } else if (f.family == "layered-a" || f.family == "layered-b") {
    require_range("--parameter", f.parameter, 1, 6);
    require_range("--max-layer", f.max_layer, 1, 4);
    Instance in =
        layered_instance(f.seed, f.family == "layered-a" ? LayerKind::A : LayerKind::B, f.parameter, f.max_layer);
    doc = numbered_document(in.composition, true, in.u, in.v);
  } else if (f.family == "random-composition") {
    require_range("--max-order", f.max_order, 2, kMaxOrder);
    RandomCompositionSpec spec;
    spec.max_order = f.max_order;
    Instance in = random_composition(f.seed, spec);
    doc = numbered_document(in.composition, false, in.u, in.v);
  } else if (f.family == "random-semicomplete") {
    require_range("--n", f.n, 1, kMaxOrder);
    doc = flat_document(random_strong_semicomplete(f.seed, f.n));
  } else if (f.family == "random-qt") {
    require_range("--n", f.n, 1, kMaxOrder);
    doc = flat_document(random_quasi_transitive(f.seed, f.n));
  } else {
    throw PreconditionError("unknown family '" + f.family + "'");
  }
  std::cout << emit_document(doc);
  return kYes;
}

struct CrossFlags {
  int exhaustive_semicomplete = 0;
  bool tournaments_only = false;
  int exhaustive_qt = 0;
  int random_compositions = 0;
  int random_qt = 0;
  int random_qt_max = 6;
  bool exception_families = false;
  std::uint64_t seed = 0;
  bool records = false;
  bool timings = false;
};

int cmd_crosscheck(const CrossFlags& f) {
  std::vector<std::pair<std::vector<Instance>, InputClass>> batches;
  auto flat_batch = [](const std::vector<Digraph>& gs, const std::string& tag) {
    std::vector<Instance> r;
    for (std::size_t i = 0; i < gs.size(); ++i) r.push_back({tag, i, singleton_composition(gs[i]), {}, {}, {}});
    return r;
  };
  if (f.exhaustive_semicomplete) {
    require_range("--exhaustive-semicomplete", f.exhaustive_semicomplete, 1, 5);
    batches.push_back({flat_batch(semicomplete_digraphs(f.exhaustive_semicomplete, f.tournaments_only),
                                  "semicomplete/n=" + std::to_string(f.exhaustive_semicomplete)),
                       InputClass::Semicomplete});
  }
  if (f.exhaustive_qt) {
    require_range("--exhaustive-qt", f.exhaustive_qt, 1, 4);
    batches.push_back({flat_batch(quasi_transitive_digraphs(f.exhaustive_qt), "qt/n=" + std::to_string(f.exhaustive_qt)),
                       InputClass::QuasiTransitive});
  }
  if (f.random_compositions) {
    require_range("--random-compositions", f.random_compositions, 1, 100000);
    std::vector<Instance> r;
    for (int i = 0; i < f.random_compositions; ++i) r.push_back(random_composition(f.seed + i));
    batches.push_back({r, InputClass::Composition});
  }
  if (f.random_qt) {
    require_range("--random-qt", f.random_qt, 1, 100000);
    require_range("--random-qt-max", f.random_qt_max, 1, 9);
    std::vector<Instance> r;
    for (int i = 0; i < f.random_qt; ++i) {
      const std::uint64_t s = f.seed + i;
      const int n = 1 + static_cast<int>(s % f.random_qt_max);
      r.push_back({"random-qt/n=" + std::to_string(n), s, singleton_composition(random_quasi_transitive(s, n)), {}, {}, {}});
    }
    batches.push_back({r, InputClass::QuasiTransitive});
  }
  if (f.exception_families) {
    std::vector<Instance> r;
    for (ExceptionFamily t : {ExceptionFamily::A, ExceptionFamily::B, ExceptionFamily::C, ExceptionFamily::D, ExceptionFamily::E,
                          ExceptionFamily::F, ExceptionFamily::G})
      for (Instance& in : exception_family_members(t, 8)) r.push_back(std::move(in));
    batches.push_back({r, InputClass::Composition});
  }
  if (batches.empty()) throw PreconditionError("nothing to check; pick at least one instance source");
  CrossReport total;
  for (const auto& [instances, cls] : batches) {
    CrossReport rep = crosscheck(instances, cls, {}, [&](const CrossRecord& r) {
      if (f.records || !r.ok()) std::cout << format_record(r, f.timings) << '\n';
    });
    total.instances += rep.instances;
    total.checked += rep.checked;
    total.yes += rep.yes;
    total.mismatches += rep.mismatches;
  }
  std::cout << "instances=" << total.instances << " checked=" << total.checked << " yes=" << total.yes
            << " mismatches=" << total.mismatches << '\n';
  return total.mismatches == 0 ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Good (u,v)-pair decision for semicomplete, composition and quasi-transitive digraphs"};
  app.require_subcommand(1);

  std::string path = "-";
  RootFlags roots;
  std::string cls = "auto";
  std::string pair_path;
  int oracle_max = 9;
  long budget = OracleLimits{}.budget;
  GenFlags gen;
  CrossFlags cross;

  auto* decide_cmd = app.add_subcommand("decide", "decide and print a pair or an obstruction witness");
  decide_cmd->add_option("input", path, "input document, - for stdin");
  add_root_flags(decide_cmd, roots);
  decide_cmd->add_option("--class", cls, "auto|semicomplete|composition|transitive|qt");

  auto* verify_cmd = app.add_subcommand("verify", "check a claimed pair against an input document");
  verify_cmd->add_option("input", path, "input document, - for stdin");
  verify_cmd->add_option("--pair", pair_path, "pair document (decide output works)")->required();
  add_root_flags(verify_cmd, roots);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference answer");
  oracle_cmd->add_option("input", path, "input document, - for stdin");
  add_root_flags(oracle_cmd, roots);
  oracle_cmd->add_option("--max-order", oracle_max, "refuse larger inputs")->check(CLI::Range(1, 12));
  oracle_cmd->add_option("--budget", budget, "search node budget");

  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance document");
  gen_cmd->add_option("--family", gen.family,
                      "exception-a..exception-g, path-separation, layered-a, layered-b, random-composition, random-semicomplete, "
                      "random-qt, semicomplete")
      ->required();
  gen_cmd->add_option("--n", gen.n, "order (exception-b, random-semicomplete, random-qt, semicomplete)");
  gen_cmd->add_option("--index", gen.index, "member index for indexed families");
  gen_cmd->add_option("--parameter", gen.parameter, "alpha or beta for layered families");
  gen_cmd->add_option("--max-layer", gen.max_layer, "largest layer for layered families");
  gen_cmd->add_option("--max-order", gen.max_order, "largest order for exception and random compositions");
  gen_cmd->add_option("--seed", gen.seed, "seed for random families");
  gen_cmd->add_flag("--with-vu", gen.with_vu, "exception-b: add the arc from v to u");
  gen_cmd->add_flag("--count", gen.count, "print the number of members instead");

  auto* cross_cmd = app.add_subcommand("crosscheck", "compare the engines with the oracle");
  cross_cmd->add_option("--exhaustive-semicomplete", cross.exhaustive_semicomplete,
                        "all semicomplete digraphs of this order up to isomorphism");
  cross_cmd->add_flag("--tournaments-only", cross.tournaments_only, "restrict the exhaustive run to tournaments");
  cross_cmd->add_option("--exhaustive-qt", cross.exhaustive_qt, "all labelled quasi-transitive digraphs of this order");
  cross_cmd->add_option("--random-compositions", cross.random_compositions, "seeded random compositions");
  cross_cmd->add_option("--random-qt", cross.random_qt, "seeded random quasi-transitive digraphs");
  cross_cmd->add_option("--random-qt-max", cross.random_qt_max, "largest order of random quasi-transitive digraphs");
  cross_cmd->add_flag("--exception-families", cross.exception_families, "every exception family member up to 8 vertices");
  cross_cmd->add_option("--seed", cross.seed, "first seed of random batches");
  cross_cmd->add_flag("--records", cross.records, "print every record, not only mismatches");
  cross_cmd->add_flag("--timings", cross.timings, "add timings to records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*decide_cmd) return cmd_decide(path, roots, cls);
    if (*verify_cmd) return cmd_verify(path, roots, pair_path);
    if (*oracle_cmd) return cmd_oracle(path, roots, oracle_max, budget);
    if (*gen_cmd) return cmd_gen(gen);
    if (*cross_cmd) return cmd_crosscheck(cross);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ResourceExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
