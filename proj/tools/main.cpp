// Command-line front end: validation, submodularity checks, dependency
// digraphs, completions, representations, function constructions and
// decompositions over the shared document format.
//
// Exit codes: 0 the checked property holds / the command succeeded,
//             1 the checked property fails,
//             2 the input is invalid.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seps/birkhoff.hpp"
#include "seps/completion.hpp"
#include "seps/decomposition.hpp"
#include "seps/error.hpp"
#include "seps/fixtures.hpp"
#include "seps/functions.hpp"
#include "seps/io.hpp"
#include "seps/order_induced.hpp"
#include "seps/submodularity.hpp"

using namespace seps;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInvalid = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << bytes;
}

LoadedStructure load_or_exit(const std::string& path, int max_elements) {
  return load_structure(parse_document(read_file(path)), max_elements);
}

std::string cycle_to_text(const Poset& p, const std::vector<int>& cycle) {
  std::string out;
  for (int v : cycle) out += p.label(v) + " -> ";
  out += p.label(cycle.front());
  return out;
}

int cmd_validate(const std::string& path, int max_elements) {
  Document doc = parse_document(read_file(path));
  Report report = validate_document(doc, max_elements);
  if (report.ok()) {
    std::cout << "valid " << doc.kind << "\n";
    return kExitHolds;
  }
  std::cout << report.to_string();
  return kExitFails;
}

int cmd_check(const std::string& path, bool local, bool in_host, bool order_induced,
              bool symmetric, int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  const Poset& host = s.order();
  Bitset members = s.subsystem ? *s.subsystem : Bitset::full(host.size());

  if (order_induced) {
    if (!host.is_lattice()) throw Error(ErrorKind::NotALattice, "host is not a lattice");
    const std::vector<int>* inv = nullptr;
    std::vector<int> inv_store;
    if (symmetric) {
      if (!s.system)
        throw Error(ErrorKind::InvolutionRequired, "--symmetric needs an involution");
      inv_store = s.system->involution();
      inv = &inv_store;
    }
    OrderInducedResult r = find_inducing_function(host, members, symmetric, inv);
    if (r.order_induced()) {
      WitnessCheck check = verify_witness(host, members, *r.witness, inv);
      if (!check.ok)
        throw Error(ErrorKind::InternalContradiction, check.violations.front());
      std::cout << "order-induced\n" << witness_to_text(host, *r.witness);
      return kExitHolds;
    }
    std::cout << "NOT order-induced\n";
    if (auto cycle = find_cycle(dependency_digraph(host, members)))
      std::cout << "dependency cycle: " << cycle_to_text(host, *cycle) << "\n";
    return kExitFails;
  }

  if (in_host || (!local && s.subsystem)) {
    SubmodularityCheck check = is_submodular_in(host, members);
    if (check.ok) {
      std::cout << "submodular in host\n";
      return kExitHolds;
    }
    std::cout << "NOT submodular in host; violating pairs:\n";
    for (auto [a, b] : check.violations)
      std::cout << "  " << host.label(a) << " , " << host.label(b) << "\n";
    return kExitFails;
  }

  Poset sub = host.induced(members.to_vector());
  if (is_submodular(sub)) {
    std::cout << "submodular\n";
    return kExitHolds;
  }
  std::cout << "NOT submodular\n";
  return kExitFails;
}

int cmd_depgraph(const std::string& path, const std::string& dot_path, bool want_cycle,
                 int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  const Poset& host = s.order();
  if (!host.is_lattice()) throw Error(ErrorKind::NotALattice, "host is not a lattice");
  Bitset members = s.subsystem ? *s.subsystem : Bitset::full(host.size());
  DependencyDigraph d = dependency_digraph(host, members);
  std::optional<std::vector<int>> cycle;
  if (want_cycle) {
    cycle = find_cycle(d);
    if (cycle)
      std::cout << "cycle: " << cycle_to_text(host, *cycle) << "\n";
    else
      std::cout << "no cycle\n";
  }
  write_file(dot_path, depgraph_dot(d, host, cycle ? &*cycle : nullptr));
  return kExitHolds;
}

int cmd_dm_complete(const std::string& path, const std::string& out, int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  if (!s.system) throw Error(ErrorKind::InvolutionRequired, "input needs an involution");
  DMCompletion c = dm_complete(*s.system, max_elements);
  Report check = verify_dm(c);
  if (!check.ok()) throw Error(ErrorKind::InternalContradiction, check.problems.front());
  Document doc = document_of_universe(c.universe);
  attach_subsystem(doc, c.universe.poset(), c.embedded_members());
  write_file(out, serialize_document(doc));
  std::cout << "completion with " << c.universe.size() << " elements\n";
  return kExitHolds;
}

int cmd_birkhoff(const std::string& path, const std::string& out, int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  Document doc;
  if (s.universe) {
    BirkhoffRep rep = birkhoff_universe(*s.universe);
    doc = document_of_involution_poset(SepSystem(rep.jposet, rep.jinv));
  } else if (!s.system) {
    BirkhoffRep rep = birkhoff(s.order());
    doc = document_of_poset(rep.jposet);
  } else {
    throw Error(ErrorKind::ParseError,
                "birkhoff expects a lattice (kind poset) or a universe");
  }
  write_file(out, serialize_document(doc));
  std::cout << "irreducibles written\n";
  return kExitHolds;
}

int cmd_extend(const std::string& path, const std::vector<std::string>& interval,
               const std::string& valuation_path, const std::string& out, bool symmetric,
               int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  const Poset& host = s.order();
  if (!host.is_lattice()) throw Error(ErrorKind::NotALattice, "host is not a lattice");
  int x = host.index_of_label(interval[0]), y = host.index_of_label(interval[1]);
  if (x < 0 || y < 0) throw Error(ErrorKind::ParseError, "unknown interval endpoint");

  nlohmann::json vj;
  try {
    vj = nlohmann::json::parse(read_file(valuation_path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!vj.is_object())
    throw Error(ErrorKind::ParseError, "valuation file must be a JSON object");
  Valuation f(host.size());
  for (auto it = vj.begin(); it != vj.end(); ++it) {
    int idx = host.index_of_label(it.key());
    if (idx < 0) throw Error(ErrorKind::ParseError, "unknown label '" + it.key() + "'");
    if (!it.value().is_string())
      throw Error(ErrorKind::ParseError, "valuation values must be rational strings");
    f[idx] = Rat::from_string(it.value().get<std::string>());
  }

  Valuation g;
  if (symmetric) {
    if (!s.universe)
      throw Error(ErrorKind::InvolutionRequired, "--symmetric needs a universe");
    if (s.universe->inv(x) != y)
      throw Error(ErrorKind::NotSymmetricInterval, "interval must be [x, x*]");
    g = extend_order_function_from_symmetric_interval(*s.universe, x, f);
  } else {
    g = extend_from_interval(host, x, y, f);
  }
  Document doc = parse_document(read_file(path));
  doc.valuation.clear();
  attach_valuation(doc, host, g);
  write_file(out, serialize_document(doc));
  std::cout << "extension written\n";
  return kExitHolds;
}

int cmd_sublattice_fn(const std::string& path, const std::vector<std::string>& sub,
                      const std::string& out, bool symmetric, int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  const Poset& host = s.order();
  if (!host.is_lattice()) throw Error(ErrorKind::NotALattice, "host is not a lattice");
  Bitset members(host.size());
  for (const std::string& lab : sub) {
    int idx = host.index_of_label(lab);
    if (idx < 0) throw Error(ErrorKind::ParseError, "unknown label '" + lab + "'");
    members.set(idx);
  }
  ThresholdFunction tf;
  if (symmetric) {
    if (!s.universe)
      throw Error(ErrorKind::InvolutionRequired, "--symmetric needs a universe");
    tf = subuniverse_order_function(*s.universe, members);
  } else {
    tf = sublattice_function(host, members);
  }
  Document doc = parse_document(read_file(path));
  doc.valuation.clear();
  attach_valuation(doc, host, tf.values);
  doc.threshold = tf.threshold.to_string();
  write_file(out, serialize_document(doc));
  std::cout << "threshold function written (k = " << tf.threshold.to_string() << ")\n";
  return kExitHolds;
}

nlohmann::json embedding_to_json(const Universe& host, const CornerFaithfulEmbedding& e) {
  nlohmann::json j;
  j["ground"] = e.target.ground;
  nlohmann::json map = nlohmann::json::object();
  for (int a = e.source_members.first(); a >= 0; a = e.source_members.next(a))
    map[host.poset().label(a)] = e.target.uni.poset().label(e.map[a]);
  j["map"] = map;
  return j;
}

int cmd_decompose(const std::string& path, const std::string& mode,
                  const std::string& out, int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  if (!s.universe) throw Error(ErrorKind::ParseError, "decompose expects a universe");
  if (!s.subsystem) throw Error(ErrorKind::ParseError, "decompose needs a subsystem");
  const Universe& u = *s.universe;

  nlohmann::json j;
  j["kind"] = "decomposition";
  j["mode"] = mode;
  nlohmann::json parts = nlohmann::json::array();

  auto part_json = [&](const Bitset& part) {
    nlohmann::json p;
    nlohmann::json members = nlohmann::json::array();
    for (int a = part.first(); a >= 0; a = part.next(a))
      members.push_back(u.poset().label(a));
    p["members"] = members;
    return p;
  };
  auto flags_json = [](const Decomposition& d) {
    return nlohmann::json{{"disjoint", d.disjoint},
                          {"covering", d.covering},
                          {"each-proper", d.each_proper},
                          {"each-corner-closed", d.each_corner_closed}};
  };

  if (mode == "classes") {
    ClassDecomposition c = decompose_into_classes(u, *s.subsystem, max_elements);
    j["flags"] = flags_json(c.decomposition);
    for (size_t i = 0; i < c.decomposition.parts.size(); ++i) {
      nlohmann::json p = part_json(c.decomposition.parts[i]);
      p["embedding"] = embedding_to_json(u, c.embeddings[i]);
      parts.push_back(p);
    }
  } else {
    Decomposition d =
        s.bip ? decompose_bipartition(*s.bip, *s.subsystem)
              : *decompose_distributive(u, *s.subsystem, /*force_triple=*/true,
                                        max_elements)
                     .triple;
    j["flags"] = flags_json(d);
    for (const Bitset& part : d.parts) parts.push_back(part_json(part));
  }
  j["parts"] = parts;
  write_file(out, j.dump(2) + "\n");
  std::cout << parts.size() << " parts written\n";
  return kExitHolds;
}

int cmd_double(const std::string& path, const std::string& out, int max_elements) {
  LoadedStructure s = load_or_exit(path, max_elements);
  Universe u = double_universe(s.order());
  Document doc = document_of_universe(u);
  if (s.subsystem)
    attach_subsystem(doc, u.poset(), lift_subset_to_double(s.order(), *s.subsystem));
  write_file(out, serialize_document(doc));
  std::cout << "double with " << u.size() << " elements\n";
  return kExitHolds;
}

int cmd_paper_demo() {
  BipartitionFixture f = submodular_not_order_induced_fixture();
  const Universe& u = f.universe.uni;
  bool ok = true;

  bool submodular = is_submodular_in(u.poset(), f.members).ok;
  std::cout << (submodular ? "submodular-in-host ✓" : "submodular-in-host FAILED")
            << "\n";
  ok = ok && submodular;

  DependencyDigraph d = dependency_digraph(u.poset(), f.members);
  std::vector<int> expect = f.known_cycle();
  bool cycle_present = true;
  for (size_t i = 0; i < expect.size(); ++i)
    cycle_present =
        cycle_present && d.has_edge(expect[i], expect[(i + 1) % expect.size()]);
  cycle_present = cycle_present && find_cycle(d).has_value();
  std::cout << (cycle_present ? "6-cycle found ✓" : "6-cycle FAILED") << "\n";
  if (cycle_present) std::cout << "  " << cycle_to_text(u.poset(), expect) << "\n";
  ok = ok && cycle_present;

  std::vector<int> inv(u.size());
  for (int s = 0; s < u.size(); ++s) inv[s] = u.inv(s);
  bool infeasible =
      !find_inducing_function(u.poset(), f.members, true, &inv).order_induced();
  std::cout << (infeasible ? "LP infeasible ✓" : "LP infeasible FAILED") << "\n";
  ok = ok && infeasible;

  return ok ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separation systems, lattices and submodularity"};
  app.require_subcommand(1);
  int max_elements = kDefaultMaxElements;
  app.add_option("--max-elements", max_elements,
                 "guard on constructed structure sizes (default 4096)");

  std::string in_path, out_path, dot_path, valuation_path;
  std::string mode = "triple";
  std::vector<std::string> sub_labels, interval;
  bool local = false, in_host = false, order_induced = false, symmetric = false,
       want_cycle = false;

  CLI::App* validate = app.add_subcommand("validate", "run all structural validations");
  validate->add_option("file", in_path)->required();

  CLI::App* check = app.add_subcommand("check", "submodularity reports");
  check->add_option("file", in_path)->required();
  check->add_flag("--local", local, "the subsystem as a poset of its own");
  check->add_flag("--in-host", in_host, "structural submodularity in the host");
  check->add_flag("--order-induced", order_induced, "exact inducing-function search");
  check->add_flag("--symmetric", symmetric, "demand an order function f(s) = f(s*)");

  CLI::App* depgraph = app.add_subcommand("depgraph", "dependency digraph as DOT");
  depgraph->add_option("file", in_path)->required();
  depgraph->add_option("--dot", dot_path, "output DOT path")->required();
  depgraph->add_flag("--find-cycle", want_cycle, "search and highlight a cycle");

  CLI::App* dm = app.add_subcommand("dm-complete", "Dedekind-MacNeille completion");
  dm->add_option("file", in_path)->required();
  dm->add_option("-o,--output", out_path)->required();

  CLI::App* birk = app.add_subcommand("birkhoff", "poset of join-irreducibles");
  birk->add_option("file", in_path)->required();
  birk->add_option("-o,--output", out_path)->required();

  CLI::App* extend = app.add_subcommand("extend", "extend a submodular function");
  extend->add_option("file", in_path)->required();
  extend->add_option("--interval", interval, "endpoint labels x y")
      ->expected(2)
      ->required();
  extend->add_option("--valuation", valuation_path, "JSON object label -> p/q")
      ->required();
  extend->add_option("-o,--output", out_path)->required();
  extend->add_flag("--symmetric", symmetric, "symmetric interval [x, x*]");

  CLI::App* subfn =
      app.add_subcommand("sublattice-fn", "threshold function of a sublattice");
  subfn->add_option("file", in_path)->required();
  subfn->add_option("--sub", sub_labels, "sublattice member labels")->required();
  subfn->add_option("-o,--output", out_path)->required();
  subfn->add_flag("--symmetric", symmetric, "subuniverse order function");

  CLI::App* dec = app.add_subcommand("decompose", "corner-closed decompositions");
  dec->add_option("file", in_path)->required();
  dec->add_option("--mode", mode, "triple | classes")
      ->check(CLI::IsMember({"triple", "classes"}));
  dec->add_option("-o,--output", out_path)->required();

  CLI::App* dbl = app.add_subcommand("double", "order-reversed double universe");
  dbl->add_option("file", in_path)->required();
  dbl->add_option("-o,--output", out_path)->required();

  CLI::App* demo = app.add_subcommand("paper-demo", "run the built-in example end to end");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(in_path, max_elements);
    if (check->parsed())
      return cmd_check(in_path, local, in_host, order_induced, symmetric, max_elements);
    if (depgraph->parsed())
      return cmd_depgraph(in_path, dot_path, want_cycle, max_elements);
    if (dm->parsed()) return cmd_dm_complete(in_path, out_path, max_elements);
    if (birk->parsed()) return cmd_birkhoff(in_path, out_path, max_elements);
    if (extend->parsed())
      return cmd_extend(in_path, interval, valuation_path, out_path, symmetric,
                        max_elements);
    if (subfn->parsed())
      return cmd_sublattice_fn(in_path, sub_labels, out_path, symmetric, max_elements);
    if (dec->parsed()) return cmd_decompose(in_path, mode, out_path, max_elements);
    if (dbl->parsed()) return cmd_double(in_path, out_path, max_elements);
    if (demo->parsed()) return cmd_paper_demo();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
