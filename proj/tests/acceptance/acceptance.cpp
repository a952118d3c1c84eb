// Acceptance suite: one criterion per numbered block, one PASS/FAIL line
// each, with the per-criterion time budget enforced. Criterion 8 drives the
// CLI binary passed via --cli.

#include <chrono>
#include <json.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "seps/birkhoff.hpp"
#include "seps/completion.hpp"
#include "seps/decomposition.hpp"
#include "seps/error.hpp"
#include "seps/fixtures.hpp"
#include "seps/functions.hpp"
#include "seps/io.hpp"
#include "seps/order_induced.hpp"
#include "seps/submodularity.hpp"
#include "support/oracles.hpp"
#include "support/structures.hpp"

using namespace seps;
using namespace seps::testing;

namespace {

void write_file_or_throw(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << bytes;
}

struct Check {
  bool ok = true;
  std::string first_failure;
  long asserts = 0;

  void expect(bool condition, const std::string& what) {
    ++asserts;
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

int unoriented_size(const SepSystem& sys, const Bitset& members) {
  int c = 0;
  for (int s = members.first(); s >= 0; s = members.next(s))
    if (s <= sys.inv(s)) ++c;
  return c;
}

// --------------------------------------------------------------- criterion 1

void criterion_fixture(Check& c) {
  BipartitionFixture f = submodular_not_order_induced_fixture();
  const Universe& u = f.universe.uni;
  c.expect(u.size() == 64, "universe size");
  c.expect(f.members.count() == 20, "oriented member count");

  c.expect(is_submodular_in(u.poset(), f.members).ok, "(a) S submodular in U");

  DependencyDigraph d = dependency_digraph(u.poset(), f.members);
  std::vector<int> cycle = f.known_cycle();
  for (size_t i = 0; i < cycle.size(); ++i) {
    const DepEdge* e = d.edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    c.expect(e != nullptr, "(b) cycle edge present");
    if (e) c.expect(e->kind == DepEdge::Kind::Inner, "(b) cycle edge inner");
  }
  const DepEdge* first = d.edge(15, 3);
  c.expect(first && first->witness == 35 && !first->via_join,
           "(b) witness of the first cycle edge");
  c.expect(u.join(15, 35) == 47 && !f.members.test(47),
           "(b) witness join lies outside S");
  auto found = find_cycle(d);
  c.expect(found.has_value(), "(b) find_cycle returns a cycle");
  if (found) {
    c.expect(found->size() >= 3, "(b) cycle length");
    for (size_t i = 0; i < found->size(); ++i)
      c.expect(d.has_edge((*found)[i], (*found)[(i + 1) % found->size()]),
               "(b) found cycle edges re-verify");
  }

  std::vector<int> inv(u.size());
  for (int s = 0; s < u.size(); ++s) inv[s] = u.inv(s);
  OrderInducedResult r = find_inducing_function(u.poset(), f.members, true, &inv);
  c.expect(!r.order_induced(), "(c) symmetric LP infeasible");
}

// --------------------------------------------------------------- criterion 2

void criterion_completion(Check& c) {
  SplitMix rng(1002);
  int small_filter_checks = 0;
  for (int t = 0; t < 200; ++t) {
    SepSystem s = random_sepsystem(rng, rng.range(1, 8));
    DMCompletion dm = dm_complete(s);
    Report r = verify_dm(dm);
    c.expect(r.ok(), "verify_dm: " + (r.ok() ? std::string() : r.problems.front()));
    if (is_submodular(s.poset()))
      c.expect(is_submodular_in(dm.universe.poset(), dm.embedded_members()).ok,
               "submodular source embeds submodularly");
    if (s.size() <= 5) {
      ++small_filter_checks;
      std::vector<Bitset> expect;
      for (uint32_t raw = 0; raw < (1u << s.size()); ++raw) {
        Bitset x(s.size());
        for (int a = 0; a < s.size(); ++a)
          if (raw >> a & 1) x.set(a);
        if (lower_bounds(s.poset(), upper_bounds(s.poset(), x)) == x)
          expect.push_back(x);
      }
      std::sort(expect.begin(), expect.end());
      c.expect(dm.cuts == expect, "closure equals the definitional filter");
    }
  }
  c.expect(small_filter_checks >= 50, "enough small instances for the filter check");
}

// --------------------------------------------------------------- criterion 3

void criterion_birkhoff(Check& c) {
  auto run_one = [&](const SepSystem& p) {
    InvPosetUniverse u = universe_from_involution_poset(p);
    BirkhoffRep rep = birkhoff_universe(u.uni);
    int m = int(rep.irreducibles.size());

    // Round trip to an isomorphic universe (order + involution).
    InvPosetUniverse back =
        universe_from_involution_poset(SepSystem(rep.jposet, rep.jinv));
    c.expect(back.uni.size() == u.uni.size(), "round trip size");
    std::vector<int> iso(u.uni.size(), -1);
    for (int a = 0; a < u.uni.size(); ++a) {
      iso[a] = back.index_of(rep.eta[a]);
      c.expect(iso[a] >= 0, "round trip hits every down-set");
    }
    for (int a = 0; a < u.uni.size(); ++a) {
      if (iso[a] < 0) continue;
      c.expect(back.uni.inv(iso[a]) == iso[u.uni.inv(a)], "round trip involution");
      for (int b = 0; b < u.uni.size(); ++b)
        if (iso[b] >= 0)
          c.expect(u.uni.poset().leq(a, b) == back.uni.poset().leq(iso[a], iso[b]),
                   "round trip order");
    }

    // (+): |X^*| = |P| - |X| for every down-set X.
    for (int a = 0; a < u.uni.size(); ++a)
      c.expect(rep.eta[u.uni.inv(a)].count() == m - rep.eta[a].count(),
               "|X^*| = |P| - |X|");
    // down(x)^* = P \ up(x') for every irreducible x.
    for (int k = 0; k < m; ++k) {
      int down_elt = rep.element_of(rep.jposet.down_set(k));
      c.expect(down_elt >= 0, "down-set of an irreducible is an eta image");
      if (down_elt >= 0)
        c.expect(rep.eta[u.uni.inv(down_elt)] ==
                     rep.jposet.up_set(rep.jinv[k]).complement(),
                 "down(x)^* = P \\ up(x')");
    }
  };

  // 43 isomorphism classes up to five points (1, 3, 4, 13, 22 per size; the
  // first three agree with the hand census).
  int exhaustive = 0;
  for (const SepSystem& p : all_involution_posets_upto_iso(5)) {
    run_one(p);
    ++exhaustive;
  }
  c.expect(exhaustive == 43, "exhaustive involution poset census");

  SplitMix rng(1003);
  for (int t = 0; t < 100; ++t) {
    SepSystem p = random_involution_poset(rng, rng.range(1, 8));
    run_one(p);
  }
}

// --------------------------------------------------------------- criterion 4

void criterion_lemma_suite(Check& c) {
  SplitMix rng(1004);
  int cycles_seen = 0, witnesses_seen = 0;
  for (int t = 0; t < 500; ++t) {
    Poset lat = random_lattice(rng, 12);
    Bitset p = random_submodular_subset(rng, lat);
    DependencyDigraph d = dependency_digraph(lat, p);
    for (const DepEdge& e : d.edges)
      c.expect(e.tail != e.head && !d.has_edge(e.head, e.tail),
               "no 2-cycles for submodular subsets");
    bool has_cycle = find_cycle(d).has_value();
    OrderInducedResult r = find_inducing_function(lat, p);
    if (r.order_induced()) {
      ++witnesses_seen;
      for (const DepEdge& e : d.edges)
        c.expect(r.witness->values[e.head] < r.witness->values[e.tail],
                 "every edge descends strictly under the witness");
      c.expect(!has_cycle, "a cycle would contradict the witness");
    }
    if (has_cycle) {
      ++cycles_seen;
      c.expect(!r.order_induced(), "digraph cycle forces LP infeasibility");
    }
  }
  c.expect(witnesses_seen >= 100, "enough order-induced instances");
}

// --------------------------------------------------------------- criterion 5

void criterion_lp_vs_oracle(Check& c) {
  std::vector<Poset> lattices = all_lattices_upto_iso(5);
  c.expect(int(lattices.size()) == 10, "lattice census to five elements");
  int instances = 0;
  for (const Poset& lat : lattices) {
    int n = lat.size();
    for (uint32_t raw = 0; raw < (1u << n); ++raw) {
      Bitset p(n);
      for (int a = 0; a < n; ++a)
        if (raw >> a & 1) p.set(a);
      bool lp = find_inducing_function(lat, p).order_induced();
      bool fm = order_induced_by_elimination(lat, p);
      c.expect(lp == fm, "LP agrees with the elimination oracle");
      ++instances;
    }
  }
  c.expect(instances == 206, "every subset of every lattice covered");
}

// --------------------------------------------------------------- criterion 6

int extension_case_of(const LevelledPartition& lp, int a, int b) {
  auto part = [&](int z) {
    if (lp.interval.test(z)) return 0;
    if (lp.below.test(z)) return 1;
    if (lp.above.test(z)) return 2;
    return 3;
  };
  int pa = part(a), pb = part(b);
  if (pa > pb) std::swap(pa, pb);
  if (pa == pb) return pa;
  if (pa == 0) return 3 + pb;
  if (pa == 1) return pb == 2 ? 7 : 8;
  return 9;
}

void criterion_functions(Check& c) {
  SplitMix rng(1006);

  // (a) Interval extension on >= 300 instances, all ten cases exercised.
  std::set<int> cases_seen;
  int instances = 0;
  while (instances < 300) {
    Poset lat = random_lattice(rng, 16);
    int x = rng.range(0, lat.size() - 1), y = rng.range(0, lat.size() - 1);
    if (!lat.leq(x, y)) continue;
    ++instances;
    Valuation f = random_submodular_valuation(rng, lat);
    LevelledPartition lp = levelled_partition(lat, x, y, Rat(0));
    Rat k(0);
    for (int z = lp.interval.first(); z >= 0; z = lp.interval.next(z)) k = max(k, f[z]);
    Valuation g = extend_from_interval(lat, x, y, f);
    c.expect(!find_submodularity_violation(lat, g).has_value(),
             "extension submodular (full scan)");
    for (int z = 0; z < lat.size(); ++z) {
      if (lp.interval.test(z)) c.expect(g[z] == f[z], "extension agrees inside");
      else c.expect(k < g[z], "extension exceeds k outside");
    }
    for (int a = 0; a < lat.size(); ++a)
      for (int b = a + 1; b < lat.size(); ++b)
        if (lat.incomparable(a, b)) cases_seen.insert(extension_case_of(lp, a, b));
  }
  {
    // A 4-cube pins the rare part pairs (below/above, beside combinations).
    Poset cube = boolean_lattice(4);
    Valuation f(cube.size(), Rat(0));
    extend_from_interval(cube, 1, 7, f);
    LevelledPartition lp = levelled_partition(cube, 1, 7, Rat(0));
    for (int a = 0; a < cube.size(); ++a)
      for (int b = a + 1; b < cube.size(); ++b)
        if (cube.incomparable(a, b)) cases_seen.insert(extension_case_of(lp, a, b));
  }
  c.expect(int(cases_seen.size()) == 10, "all ten proof cases exercised");

  // (b) Dense and threshold sublattice functions on >= 200 instances.
  for (int t = 0; t < 200; ++t) {
    Poset p = random_poset(rng, rng.range(1, 6));
    DownSetLattice op = downset_lattice(p);
    Bitset dense_members = random_sublattice(rng, op.lattice);
    dense_members.set(*op.lattice.bottom());
    dense_members.set(*op.lattice.top());
    while (true) {
      Bitset grown = dense_members;
      for (int a = dense_members.first(); a >= 0; a = dense_members.next(a))
        for (int b = dense_members.first(); b >= 0; b = dense_members.next(b)) {
          grown.set(op.lattice.join(a, b));
          grown.set(op.lattice.meet(a, b));
        }
      if (grown == dense_members) break;
      dense_members = grown;
    }
    Valuation dense = dense_sublattice_function(op, dense_members);
    for (int e = 0; e < op.lattice.size(); ++e)
      c.expect((dense[e] == Rat(0)) == dense_members.test(e), "f^{-1}(0) = Lp");

    Bitset sub = random_sublattice(rng, op.lattice);
    ThresholdFunction tf = sublattice_function(op.lattice, sub);
    c.expect(!find_submodularity_violation(op.lattice, tf.values).has_value(),
             "threshold function submodular");
    for (int e = 0; e < op.lattice.size(); ++e)
      c.expect((tf.values[e] <= tf.threshold) == sub.test(e), "f^{-1}([0,k]) = Lp");
  }

  // (c) Symmetric variants: subuniverse order functions and symmetric
  // interval extensions.
  for (int t = 0; t < 200; ++t) {
    Universe u = random_distributive_universe(rng, 5, 64);
    Bitset up = random_subuniverse(rng, u);
    ThresholdFunction tf = subuniverse_order_function(u, up);
    c.expect(!find_submodularity_violation(u.poset(), tf.values).has_value(),
             "subuniverse function submodular");
    for (int e = 0; e < u.size(); ++e) {
      c.expect(tf.values[e] == tf.values[u.inv(e)], "subuniverse function symmetric");
      c.expect((tf.values[e] <= tf.threshold) == up.test(e), "f^{-1}([0,k]) = U'");
    }
  }
  int symmetric_intervals = 0;
  while (symmetric_intervals < 200) {
    Universe u = double_universe(random_lattice(rng, 10));
    int x = rng.range(0, u.size() - 1);
    if (!u.poset().leq(x, u.inv(x))) continue;
    ++symmetric_intervals;
    Bitset interval = u.poset().up_set(x) & u.poset().down_set(u.inv(x));
    Valuation f = symmetrize_mean(u, random_submodular_valuation(rng, u.poset()));
    Rat k(0);
    for (int z = interval.first(); z >= 0; z = interval.next(z)) k = max(k, f[z]);
    Valuation g = extend_order_function_from_symmetric_interval(u, x, f);
    c.expect(!find_submodularity_violation(u.poset(), g).has_value(),
             "symmetric extension submodular");
    for (int z = 0; z < u.size(); ++z) {
      c.expect(g[z] == g[u.inv(z)], "symmetric extension symmetric");
      if (interval.test(z)) c.expect(g[z] == f[z], "agrees on the interval");
      else c.expect(k < g[z], "exceeds k outside the interval");
    }
  }
}

// --------------------------------------------------------------- criterion 7

void criterion_decompositions(Check& c) {
  SplitMix rng(1007);

  // (a) Bipartition decomposition on >= 200 random subsystems.
  for (int t = 0; t < 200; ++t) {
    int ground = rng.range(3, 6);
    std::vector<std::string> labels;
    for (int i = 0; i < ground; ++i) labels.push_back(std::string(1, char('a' + i)));
    BipartitionUniverse u = bipartition_universe(labels);
    Bitset s(u.uni.size());
    while (unoriented_size(u.uni.system(), s) < 3) {
      s = Bitset(u.uni.size());
      for (int e = 0; e < u.uni.size(); ++e)
        if (rng.range(0, 99) < 30) {
          s.set(e);
          s.set(u.uni.inv(e));
        }
    }
    Decomposition d = decompose_bipartition(u, s);
    c.expect(d.covering && d.each_proper && d.each_corner_closed,
             "(a) covering, proper, corner-closed");
    c.expect(verify_decomposition(u.uni, s, d).ok(), "(a) re-verification");
    int biggest = 0;
    for (const Bitset& part : d.parts)
      biggest = std::max(biggest, unoriented_size(u.uni.system(), part));
    c.expect(3 * biggest >= unoriented_size(u.uni.system(), s),
             "(a) pigeonhole: some part has a third of S");
  }

  // (b)+(c) Distributive decompositions and class partitions on >= 200
  // random submodular subsystems.
  int embeddings = 0;
  for (int t = 0; t < 200; ++t) {
    Universe u = t % 2 ? bipartition_universe({"a", "b", "c", "d"}).uni
                       : random_distributive_universe(rng, 6, 64);
    if (unoriented_size(u.system(), Bitset::full(u.size())) < 3) continue;
    Bitset s(u.size());
    while (unoriented_size(u.system(), s) < 3) {
      s = Bitset(u.size());
      for (int e = 0; e < u.size(); ++e)
        if (rng.range(0, 99) < 40) {
          s.set(e);
          s.set(u.inv(e));
        }
      while (true) {
        SubmodularityCheck check = is_submodular_in(u.poset(), s);
        if (check.ok) break;
        for (auto [a, b] : check.violations) {
          int fix = rng.coin() ? u.join(a, b) : u.meet(a, b);
          s.set(fix);
          s.set(u.inv(fix));
        }
      }
    }

    DistributiveDecomposition r = decompose_distributive(u, s);
    if (r.triple) {
      c.expect(r.triple->disjoint && r.triple->covering && r.triple->each_proper &&
                   r.triple->each_corner_closed,
               "(b) disjoint covering triple");
      c.expect(verify_decomposition(u, s, *r.triple).ok(), "(b) re-verification");
      for (const Bitset& part : r.triple->parts)
        c.expect(is_submodular_in(u.poset(), part).ok, "(b) parts submodular");
    } else {
      ++embeddings;
      c.expect(r.embedding.has_value(), "(b) embedding present");
      if (r.embedding)
        c.expect(verify_embedding(u, *r.embedding).ok(), "(b) embedding verifies");
    }

    ClassDecomposition cd = decompose_into_classes(u, s);
    c.expect(cd.decomposition.disjoint && cd.decomposition.covering,
             "(c) classes partition S");
    c.expect(verify_decomposition(u, s, cd.decomposition).ok(), "(c) re-verification");
    Bitset covered(u.size());
    for (size_t i = 0; i < cd.decomposition.parts.size(); ++i) {
      const Bitset& part = cd.decomposition.parts[i];
      c.expect(!covered.intersects(part), "(c) classes pairwise disjoint");
      covered |= part;
      int rep = part.first();
      int sig = u.meet(rep, u.inv(rep));
      for (int e = part.first(); e >= 0; e = part.next(e))
        c.expect(u.meet(e, u.inv(e)) == sig, "(c) classes grouped by s ^ s*");
      c.expect(is_corner_closed(u, part, s), "(c) classes corner-closed");
      c.expect(is_submodular_in(u.poset(), part).ok, "(c) classes submodular");
      c.expect(verify_embedding(u, cd.embeddings[i]).ok(), "(c) class embedding");
    }
    c.expect(covered == s, "(c) classes cover S");
  }
  c.expect(embeddings >= 50, "(b) embedding branch exercised");

  // (d) Doubling preserves submodularity of lifted subsets.
  for (int t = 0; t < 200; ++t) {
    Poset lat = random_lattice(rng, 12);
    Bitset p = random_submodular_subset(rng, lat);
    Universe u = double_universe(lat);
    c.expect(is_submodular_in(u.poset(), lift_subset_to_double(lat, p)).ok,
             "(d) P u P' submodular in the double");
  }
}

// --------------------------------------------------------------- criterion 8

struct CliRunner {
  std::string cli;
  std::string dir;
  int runs = 0;

  std::string path(const std::string& name) const { return dir + "/" + name; }

  // Runs the CLI, returns (exit code, stdout bytes).
  std::pair<int, std::string> run(const std::string& args) {
    std::string out_path = path("stdout_" + std::to_string(runs++) + ".txt");
    std::string cmd = cli + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(rc), buf.str()};
  }
};

void criterion_cli(Check& c, const std::string& cli_path) {
  char tmpl[] = "/tmp/seps_acceptance_XXXXXX";
  char* dirname = mkdtemp(tmpl);
  if (!dirname) {
    c.expect(false, "cannot create scratch directory");
    return;
  }
  CliRunner cli{cli_path, dirname};

  // Fixture documents.
  BipartitionFixture f = submodular_not_order_induced_fixture();
  Document bip = document_of_bipartition(f.universe);
  attach_subsystem(bip, f.universe.uni.poset(), f.members);
  write_file_or_throw(cli.path("fixture.json"), serialize_document(bip));

  Document dia;
  dia.kind = "universe";
  dia.elements = {"bot", "a", "b", "top"};
  dia.relation = {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}};
  dia.involution = {{"bot", "top"}, {"top", "bot"}, {"a", "b"}, {"b", "a"}};
  dia.subsystem = {"bot", "top"};
  write_file_or_throw(cli.path("diamond.json"), serialize_document(dia));

  Document anti;
  anti.kind = "separation-system";
  anti.elements = {"s", "t"};
  anti.involution = {{"s", "t"}, {"t", "s"}};
  write_file_or_throw(cli.path("antichain.json"), serialize_document(anti));

  Document broken = dia;
  broken.involution = {{"bot", "bot"}, {"top", "top"}, {"a", "a"}, {"b", "b"}};
  broken.subsystem.clear();
  write_file_or_throw(cli.path("broken.json"), serialize_document(broken));

  write_file_or_throw(cli.path("valuation.json"), "{\n  \"bot\": \"0/1\"\n}\n");

  auto rerun_identical = [&](const std::string& args_template,
                             const std::string& out_name) {
    std::string out1 = cli.path(out_name + ".1"), out2 = cli.path(out_name + ".2");
    auto [rc1, log1] = cli.run(args_template + " -o " + out1);
    auto [rc2, log2] = cli.run(args_template + " -o " + out2);
    c.expect(rc1 == 0 && rc2 == 0, out_name + ": exit 0");
    c.expect(log1 == log2, out_name + ": stdout identical");
    std::ifstream a(out1, std::ios::binary), b(out2, std::ios::binary);
    std::ostringstream ba, bb;
    ba << a.rdbuf();
    bb << b.rdbuf();
    c.expect(!ba.str().empty() && ba.str() == bb.str(), out_name + ": bytes identical");
    return ba.str();
  };

  // validate
  auto [vrc, vout] = cli.run("validate " + cli.path("diamond.json"));
  c.expect(vrc == 0, "validate exits 0 on a valid universe");
  auto [brc, bout] = cli.run("validate " + cli.path("broken.json"));
  c.expect(brc == 1, "validate exits 1 on a broken involution");
  c.expect(bout.find("order-reversing") != std::string::npos,
           "validate names the violated law");

  // check modes
  c.expect(cli.run("check " + cli.path("fixture.json") + " --in-host").first == 0,
           "fixture submodular in host");
  auto [oirc, oout] = cli.run("check " + cli.path("fixture.json") +
                              " --order-induced --symmetric");
  c.expect(oirc == 1, "fixture not order-induced");
  c.expect(oout.find("NOT order-induced") != std::string::npos, "report text");
  c.expect(oout.find("dependency cycle") != std::string::npos, "cycle printed");
  auto [wrc, wout] = cli.run("check " + cli.path("diamond.json") + " --order-induced");
  c.expect(wrc == 0 && wout.find("k = ") != std::string::npos, "witness printed");

  // depgraph determinism
  std::string dot1 = cli.path("d1.dot"), dot2 = cli.path("d2.dot");
  cli.run("depgraph " + cli.path("fixture.json") + " --dot " + dot1 + " --find-cycle");
  cli.run("depgraph " + cli.path("fixture.json") + " --dot " + dot2 + " --find-cycle");
  std::ifstream da(dot1, std::ios::binary), db(dot2, std::ios::binary);
  std::ostringstream sa, sb;
  sa << da.rdbuf();
  sb << db.rdbuf();
  c.expect(!sa.str().empty() && sa.str() == sb.str(), "DOT output byte-identical");
  c.expect(sa.str().find("color=red") != std::string::npos, "cycle highlighted");

  // output-producing commands re-parse, re-validate, rerun identically
  std::string dm =
      rerun_identical("dm-complete " + cli.path("antichain.json"), "dm.json");
  Document dm_doc = parse_document(dm);
  c.expect(validate_document(dm_doc).ok(), "dm output re-validates");
  c.expect(dm_doc.kind == "universe" && dm_doc.elements.size() == 4,
           "dm of the 2-antichain is the diamond universe");

  std::string birk = rerun_identical("birkhoff " + cli.path("diamond.json"), "birk.json");
  c.expect(validate_document(parse_document(birk)).ok(), "birkhoff output re-validates");

  std::string ext = rerun_identical("extend " + cli.path("diamond.json") +
                                        " --interval bot bot --valuation " +
                                        cli.path("valuation.json"),
                                    "ext.json");
  Document ext_doc = parse_document(ext);
  c.expect(validate_document(ext_doc).ok(), "extend output re-validates");
  c.expect(!ext_doc.valuation.empty(), "extend output carries a valuation");

  std::string subfn = rerun_identical("sublattice-fn " + cli.path("diamond.json") +
                                          " --sub bot --sub top --symmetric",
                                      "subfn.json");
  Document subfn_doc = parse_document(subfn);
  c.expect(validate_document(subfn_doc).ok(), "sublattice-fn output re-validates");
  c.expect(subfn_doc.threshold == "1/1", "subuniverse threshold is doubled");

  std::string dec = rerun_identical(
      "decompose " + cli.path("fixture.json") + " --mode classes", "classes.json");
  c.expect(dec.find("\"kind\": \"decomposition\"") != std::string::npos,
           "decomposition report kind");
  {
    // The fixture lives in a bipartition universe: one class, embedded by the
    // identity on sides.
    nlohmann::json dj = nlohmann::json::parse(dec);
    c.expect(dj["parts"].size() == 1, "bipartition-hosted system is one class");
  }
  std::string tri = rerun_identical(
      "decompose " + cli.path("fixture.json") + " --mode triple", "triple.json");
  c.expect(tri.find("\"each-corner-closed\": true") != std::string::npos,
           "triple parts corner-closed");

  std::string dbl = rerun_identical("double " + cli.path("diamond.json"), "double.json");
  Document dbl_doc = parse_document(dbl);
  c.expect(validate_document(dbl_doc).ok(), "double output re-validates");
  c.expect(dbl_doc.elements.size() == 8, "double of the diamond has 8 elements");

  // paper-demo
  auto [demo_rc, demo_out] = cli.run("paper-demo");
  c.expect(demo_rc == 0, "paper-demo exits 0");
  auto [demo_rc2, demo_out2] = cli.run("paper-demo");
  c.expect(demo_out == demo_out2, "paper-demo output identical across reruns");

  // invalid input exits 2
  write_file_or_throw(cli.path("garbage.json"), "{ nope");
  c.expect(cli.run("validate " + cli.path("garbage.json")).first == 2,
           "malformed input exits 2");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) cli_path = argv[++i];
    if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "six-point bipartition example reproduced exactly", 30, criterion_fixture},
      {2, "completion suite on 200 random separation systems", 60, criterion_completion},
      {3, "representation suite, exhaustive to 5 and random to 8", 60,
       criterion_birkhoff},
      {4, "dependency digraph lemmas on 500 random instances", 120,
       criterion_lemma_suite},
      {5, "inducing-function LP equals the elimination oracle", 120,
       criterion_lp_vs_oracle},
      {6, "function constructions: extension, sublattice, symmetric", 180,
       criterion_functions},
      {7, "decomposition suite: bipartition, distributive, classes, doubling", 180,
       criterion_decompositions},
      {8, "CLI round-trips, determinism and the built-in demo", 30,
       [&](Check& c) { criterion_cli(c, cli_path); }},
  };

  int failures = 0;
  for (Criterion& cr : criteria) {
    if (only && cr.id != only) continue;
    if (cr.id == 8 && cli_path.empty()) {
      std::cout << "criterion 8 SKIP (no --cli given): " << cr.name << "\n";
      continue;
    }
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.budget_seconds)
      check.expect(false, "time budget exceeded (" + std::to_string(seconds) + "s)");
    char line[512];
    std::snprintf(line, sizeof(line), "criterion %d %s: %s (%ld checks, %.1fs)", cr.id,
                  check.ok ? "PASS" : "FAIL", cr.name.c_str(), check.asserts, seconds);
    std::cout << line << "\n";
    if (!check.ok) {
      std::cout << "  first failure: " << check.first_failure << "\n";
      ++failures;
    }
  }
  return failures;
}
