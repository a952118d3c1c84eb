#include "seps/decomposition.hpp"

#include <algorithm>
#include <map>

#include "seps/birkhoff.hpp"
#include "seps/error.hpp"
#include "seps/submodularity.hpp"

namespace seps {

namespace {

int unoriented_count(const SepSystem& sys, const Bitset& members) {
  int c = 0;
  for (int s = members.first(); s >= 0; s = members.next(s))
    if (s <= sys.inv(s)) ++c;
  return c;
}

void require_subsystem(const SepSystem& sys, const Bitset& members) {
  Report r = validate_subsystem(sys, members);
  if (!r.ok()) throw Error(ErrorKind::InvalidInvolution, r.problems.front());
}

}  // namespace

Report verify_decomposition(const Universe& u, const Bitset& s, const Decomposition& d) {
  Report r;
  Bitset unioned(u.size());
  for (const Bitset& part : d.parts) {
    if (!part.is_subset_of(s)) r.add("part not contained in S");
    unioned |= part;
    Report sub = validate_subsystem(u.system(), part);
    if (!sub.ok()) r.add("part not involution-closed");
  }
  if ((unioned == s) != d.covering) r.add("covering flag wrong");
  bool proper = true, corner = true;
  for (const Bitset& part : d.parts) {
    if (part == s) proper = false;
    if (!is_corner_closed(u, part, s)) corner = false;
  }
  if (proper != d.each_proper) r.add("proper flag wrong");
  if (corner != d.each_corner_closed) r.add("corner-closed flag wrong");
  bool disjoint = true;
  for (size_t i = 0; i < d.parts.size(); ++i)
    for (size_t j = i + 1; j < d.parts.size(); ++j)
      if (d.parts[i].intersects(d.parts[j])) disjoint = false;
  if (disjoint != d.disjoint) r.add("disjoint flag wrong");
  if (!(d.whole == s)) r.add("whole mask mismatch");
  return r;
}

Report verify_embedding(const Universe& u, const CornerFaithfulEmbedding& e) {
  Report r;
  const Universe& t = e.target.uni;
  std::vector<int> hit(t.size(), -1);
  for (int a = e.source_members.first(); a >= 0; a = e.source_members.next(a)) {
    int img = e.map[a];
    if (img < 0 || img >= t.size()) {
      r.add("image out of range");
      return r;
    }
    if (hit[img] >= 0) {
      r.add("embedding not injective");
      return r;
    }
    hit[img] = a;
  }
  for (int a = e.source_members.first(); a >= 0; a = e.source_members.next(a)) {
    if (!e.source_members.test(u.inv(a))) {
      r.add("source not involution-closed");
      return r;
    }
    if (e.map[u.inv(a)] != t.inv(e.map[a]))
      r.add("involution not preserved at '" + u.poset().label(a) + "'");
  }
  for (int a = e.source_members.first(); a >= 0; a = e.source_members.next(a))
    for (int b = e.source_members.first(); b >= 0; b = e.source_members.next(b)) {
      if (u.poset().leq(a, b) != t.poset().leq(e.map[a], e.map[b])) {
        r.add("order not preserved");
        return r;
      }
      int join = u.join(a, b);
      if (e.source_members.test(join) && t.join(e.map[a], e.map[b]) != e.map[join]) {
        r.add("join not corner-faithful");
        return r;
      }
      int meet = u.meet(a, b);
      if (e.source_members.test(meet) && t.meet(e.map[a], e.map[b]) != e.map[meet]) {
        r.add("meet not corner-faithful");
        return r;
      }
    }
  return r;
}

Decomposition decompose_bipartition(const BipartitionUniverse& u, const Bitset& s) {
  require_subsystem(u.uni.system(), s);
  if (unoriented_count(u.uni.system(), s) < 3)
    throw Error(ErrorKind::TooSmall, "need at least 3 unoriented separations");

  int ground_n = int(u.ground.size());
  uint32_t full = (uint32_t(1) << ground_n) - 1;

  // Unoriented nontrivial separations by least orientation index.
  std::vector<uint32_t> reps;
  for (int e = s.first(); e >= 0; e = s.next(e)) {
    uint32_t a = u.mask_of(e), b = full & ~a;
    if (a == 0 || b == 0) continue;
    if (a < b) reps.push_back(a);
  }

  // Pick the least pair admitting the orientation conditions of the covering
  // argument: C not inside A or B, and B meeting D.
  bool found = false;
  uint32_t A = 0, B = 0, C = 0, D = 0;
  for (size_t i = 0; i < reps.size() && !found; ++i)
    for (size_t j = 0; j < reps.size() && !found; ++j) {
      if (i == j) continue;
      uint32_t a = reps[i], b = full & ~reps[i];
      for (uint32_t c : {reps[j], full & ~reps[j]}) {
        uint32_t d = full & ~c;
        if ((c & ~a) == 0 || (c & ~b) == 0) continue;
        A = a;
        B = b;
        if ((B & d) == 0) std::swap(A, B);
        C = c;
        D = d;
        found = true;
        break;
      }
    }
  if (!found)
    throw Error(ErrorKind::ProofPreconditionUnmet,
                "no separation pair admits the required orientation");

  int x = __builtin_ctz(A & C), y = __builtin_ctz(B & C), z = __builtin_ctz(B & D);

  auto not_separating = [&](int p, int q) {
    Bitset part(u.uni.size());
    for (int e = s.first(); e >= 0; e = s.next(e)) {
      uint32_t side = u.mask_of(e);
      if (((side >> p) & 1) == ((side >> q) & 1)) part.set(e);
    }
    return part;
  };

  Decomposition d;
  d.whole = s;
  d.parts = {not_separating(x, y), not_separating(x, z), not_separating(y, z)};

  // The chosen pair must fall outside the right parts; anything else means the
  // construction above is broken.
  int ab = u.element_of_mask(A), cd = u.element_of_mask(C);
  if (d.parts[0].test(ab) || d.parts[1].test(ab) || d.parts[1].test(cd) ||
      d.parts[2].test(cd))
    throw Error(ErrorKind::InternalContradiction, "witness separations inside their parts");

  Bitset unioned = d.parts[0] | d.parts[1] | d.parts[2];
  d.covering = unioned == s;
  d.each_proper = true;
  d.each_corner_closed = true;
  for (const Bitset& part : d.parts) {
    if (part == s) d.each_proper = false;
    if (!is_corner_closed(u.uni, part, s)) d.each_corner_closed = false;
  }
  d.disjoint = !d.parts[0].intersects(d.parts[1]) && !d.parts[0].intersects(d.parts[2]) &&
               !d.parts[1].intersects(d.parts[2]);
  if (!d.covering || !d.each_proper || !d.each_corner_closed)
    throw Error(ErrorKind::InternalContradiction, "decomposition failed verification");
  return d;
}

namespace {

struct Member {
  Bitset coords;  // current-level down-set mask over the irreducibles
  int host;       // element of the original universe
};

struct RecursionOutcome {
  bool bipartition_case = false;
  Bitset alive;                        // ground of the base case, over J
  std::vector<Bitset> parts_by_host;   // three parts, when a split was found
};

RecursionOutcome decompose_rec(const std::vector<int>& jinv, Bitset alive,
                               std::vector<Member> members, int host_size) {
  while (true) {
    if (alive.none() && members.size() > 1)
      throw Error(ErrorKind::InternalContradiction, "ground exhausted with members left");

    int descend_pivot = -1;
    for (int p = alive.first(); p >= 0; p = alive.next(p)) {
      int q = jinv[p];
      Bitset in_p(host_size), in_q(host_size), rest(host_size);
      int np = 0, nq = 0, nr = 0;
      for (const Member& m : members) {
        bool has_p = m.coords.test(p), has_q = m.coords.test(q);
        if (has_p && !has_q) {
          in_p.set(m.host);
          ++np;
        } else if (!has_p && has_q) {
          in_q.set(m.host);
          ++nq;
        } else {
          rest.set(m.host);
          ++nr;
        }
      }
      int total = int(members.size());
      if (np != total && nq != total && nr != total) {
        RecursionOutcome out;
        out.parts_by_host = {in_p, in_q, rest};
        return out;
      }
      if (np == total && descend_pivot < 0) descend_pivot = p;
    }

    if (descend_pivot >= 0) {
      int p = descend_pivot, q = jinv[p];
      alive.reset(p);
      alive.reset(q);
      for (Member& m : members) m.coords.reset(p);
      continue;
    }

    // Every member keeps p and p' together for every alive p: the members,
    // restricted to the alive ground, form a system of bipartition sides.
    RecursionOutcome out;
    out.bipartition_case = true;
    out.alive = alive;
    return out;
  }
}

}  // namespace

DistributiveDecomposition decompose_distributive(const Universe& u, const Bitset& s,
                                                 bool force_triple, int max_elements) {
  require_subsystem(u.system(), s);
  if (unoriented_count(u.system(), s) < 3)
    throw Error(ErrorKind::TooSmall, "need at least 3 unoriented separations");
  if (!is_submodular_in(u.poset(), s).ok)
    throw Error(ErrorKind::NotSubmodular, "subsystem is not submodular in the universe");

  BirkhoffRep rep = birkhoff_universe(u);  // throws NotDistributive
  int m = int(rep.irreducibles.size());

  std::vector<Member> members;
  for (int e = s.first(); e >= 0; e = s.next(e)) members.push_back({rep.eta[e], e});

  RecursionOutcome rec =
      decompose_rec(rep.jinv, Bitset::full(m), std::move(members), u.size());

  DistributiveDecomposition out;
  if (!rec.bipartition_case) {
    Decomposition d;
    d.whole = s;
    d.parts = std::move(rec.parts_by_host);
    d.covering = (d.parts[0] | d.parts[1] | d.parts[2]) == s;
    d.disjoint = !d.parts[0].intersects(d.parts[1]) &&
                 !d.parts[0].intersects(d.parts[2]) &&
                 !d.parts[1].intersects(d.parts[2]);
    d.each_proper = true;
    d.each_corner_closed = true;
    for (const Bitset& part : d.parts) {
      if (part == s) d.each_proper = false;
      if (!is_corner_closed(u, part, s)) d.each_corner_closed = false;
      Report sub = validate_subsystem(u.system(), part);
      if (!sub.ok())
        throw Error(ErrorKind::InternalContradiction, "part not involution-closed");
    }
    if (!d.covering || !d.disjoint || !d.each_proper || !d.each_corner_closed)
      throw Error(ErrorKind::InternalContradiction, "split failed verification");
    out.triple = std::move(d);
    return out;
  }

  // Bipartition base case: the alive irreducibles are the ground set and each
  // member maps to its alive coordinates.
  std::vector<int> ground_positions = rec.alive.to_vector();
  if (ground_positions.empty())
    throw Error(ErrorKind::InternalContradiction, "empty bipartition ground");
  if (int(ground_positions.size()) > 20 ||
      (int64_t(1) << ground_positions.size()) > max_elements)
    throw Error(ErrorKind::SizeLimitExceeded, "bipartition target too large");
  std::vector<std::string> ground_labels;
  for (int p : ground_positions) ground_labels.push_back(rep.jposet.label(p));

  CornerFaithfulEmbedding emb{s, bipartition_universe(ground_labels, max_elements),
                              std::vector<int>(u.size(), -1)};
  for (int e = s.first(); e >= 0; e = s.next(e)) {
    uint32_t mask = 0;
    for (size_t i = 0; i < ground_positions.size(); ++i)
      if (rep.eta[e].test(ground_positions[i])) mask |= uint32_t(1) << i;
    emb.map[e] = emb.target.element_of_mask(mask);
  }
  Report er = verify_embedding(u, emb);
  if (!er.ok()) throw Error(ErrorKind::InternalContradiction, er.problems.front());

  if (!force_triple) {
    out.embedding = std::move(emb);
    return out;
  }

  // Caller insisted on a triple: decompose the bipartition image and pull the
  // parts back along the embedding.
  Bitset image(emb.target.uni.size());
  for (int e = s.first(); e >= 0; e = s.next(e)) image.set(emb.map[e]);
  Decomposition inner = decompose_bipartition(emb.target, image);
  Decomposition d;
  d.whole = s;
  for (const Bitset& part : inner.parts) {
    Bitset back(u.size());
    for (int e = s.first(); e >= 0; e = s.next(e))
      if (part.test(emb.map[e])) back.set(e);
    d.parts.push_back(back);
  }
  d.covering = (d.parts[0] | d.parts[1] | d.parts[2]) == s;
  d.disjoint = !d.parts[0].intersects(d.parts[1]) && !d.parts[0].intersects(d.parts[2]) &&
               !d.parts[1].intersects(d.parts[2]);
  d.each_proper = true;
  d.each_corner_closed = true;
  for (const Bitset& part : d.parts) {
    if (part == s) d.each_proper = false;
    if (!is_corner_closed(u, part, s)) d.each_corner_closed = false;
  }
  if (!d.covering || !d.each_proper || !d.each_corner_closed)
    throw Error(ErrorKind::InternalContradiction, "pulled-back triple failed verification");
  out.triple = std::move(d);
  return out;
}

ClassDecomposition decompose_into_classes(const Universe& u, const Bitset& s,
                                          int max_elements) {
  require_subsystem(u.system(), s);
  if (!is_submodular_in(u.poset(), s).ok)
    throw Error(ErrorKind::NotSubmodular, "subsystem is not submodular in the universe");

  BirkhoffRep rep = birkhoff_universe(u);
  int m = int(rep.irreducibles.size());

  auto signature = [&](int e) {
    // s ^ s* in coordinates: the p in X with p' outside X.
    const Bitset& x = rep.eta[e];
    Bitset d(m);
    for (int p = x.first(); p >= 0; p = x.next(p))
      if (!x.test(rep.jinv[p])) d.set(p);
    return d;
  };

  std::map<Bitset, Bitset> classes;  // signature -> member mask
  for (int e = s.first(); e >= 0; e = s.next(e)) {
    Bitset d = signature(e);
    if (!(d == rep.eta[u.meet(e, u.inv(e))]))
      throw Error(ErrorKind::InternalContradiction, "signature disagrees with s ^ s*");
    auto it = classes.find(d);
    if (it == classes.end()) it = classes.emplace(d, Bitset(u.size())).first;
    it->second.set(e);
  }

  ClassDecomposition out;
  out.decomposition.whole = s;
  out.decomposition.covering = true;
  out.decomposition.disjoint = true;
  out.decomposition.each_proper = classes.size() >= 2;
  out.decomposition.each_corner_closed = true;

  for (const auto& [sig, part] : classes) {
    Bitset sig_inv(m);
    for (int p = sig.first(); p >= 0; p = sig.next(p)) sig_inv.set(rep.jinv[p]);
    if (sig.intersects(sig_inv))
      throw Error(ErrorKind::InternalContradiction, "signature meets its involution image");
    Bitset q = Bitset::full(m).minus(sig | sig_inv);

    Report sub = validate_subsystem(u.system(), part);
    if (!sub.ok())
      throw Error(ErrorKind::InternalContradiction, "class not involution-closed");
    if (!is_corner_closed(u, part, s))
      throw Error(ErrorKind::InternalContradiction, "class not corner-closed");

    // Ground: orbits of ' on Q.
    std::vector<int> orbit_rep;
    for (int p = q.first(); p >= 0; p = q.next(p))
      if (p <= rep.jinv[p]) orbit_rep.push_back(p);
    std::vector<std::string> labels;
    for (int p : orbit_rep) {
      std::string lab = rep.jposet.label(p);
      if (rep.jinv[p] != p) lab += "|" + rep.jposet.label(rep.jinv[p]);
      labels.push_back(lab);
    }
    // A class with empty Q consists of one self-inverse member and embeds
    // into the one-element universe over the empty ground.
    if (int(labels.size()) > 20 || (int64_t(1) << labels.size()) > max_elements)
      throw Error(ErrorKind::SizeLimitExceeded, "class embedding target too large");

    CornerFaithfulEmbedding emb{part, bipartition_universe(labels, max_elements),
                                std::vector<int>(u.size(), -1)};
    for (int e = part.first(); e >= 0; e = part.next(e)) {
      const Bitset& x = rep.eta[e];
      // X = D u (X n Q), with X n Q closed under '.
      Bitset xq = x & q;
      if (!((sig | xq) == x))
        throw Error(ErrorKind::InternalContradiction, "member not D u (X n Q)");
      uint32_t maskv = 0;
      for (size_t i = 0; i < orbit_rep.size(); ++i)
        if (x.test(orbit_rep[i])) maskv |= uint32_t(1) << i;
      emb.map[e] = emb.target.element_of_mask(maskv);
    }
    Report er = verify_embedding(u, emb);
    if (!er.ok()) throw Error(ErrorKind::InternalContradiction, er.problems.front());

    out.decomposition.parts.push_back(part);
    out.signatures.push_back(sig);
    out.embeddings.push_back(std::move(emb));
  }
  return out;
}

}  // namespace seps
