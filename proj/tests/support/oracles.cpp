#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ntg::oracle {

namespace {

constexpr VertexId kUnset = static_cast<VertexId>(-1);

// map[x] == y, treating an unassigned x as a wildcard.
bool sends(const std::vector<VertexId>& map, VertexId x, VertexId y) { return map[x] == kUnset || map[x] == y; }

// Depth-first enumeration of all maps picking map[v] from cand[v]; `ok`
// must accept partial maps (kUnset entries) whenever some completion can
// be accepted, so pruning never hides a solution.
std::vector<std::vector<VertexId>> enumerate_maps(const std::vector<std::vector<VertexId>>& cand,
                                                  const std::function<bool(const std::vector<VertexId>&)>& ok,
                                                  std::size_t limit) {
  std::vector<std::vector<VertexId>> found;
  std::vector<VertexId> map(cand.size(), kUnset);
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (found.size() >= limit) return;
    if (v == cand.size()) {
      found.push_back(map);
      return;
    }
    for (VertexId t : cand[v]) {
      map[v] = t;
      if (ok(map)) go(v + 1);
    }
    map[v] = kUnset;
  };
  if (ok(map)) go(0);
  return found;
}

std::size_t product(const std::vector<std::vector<VertexId>>& cand, std::size_t cap) {
  std::size_t p = 1;
  for (const auto& c : cand) {
    if (c.empty()) return 0;
    if (p > cap / c.size()) return cap + 1;
    p *= c.size();
  }
  return p;
}

bool same_atomic(const Label& a, const Label& b) {
  return a.kind == LabelKind::Atomic && b.kind == LabelKind::Atomic && a.symbol == b.symbol && a.arity == b.arity;
}

}  // namespace

std::vector<std::vector<VertexId>> all_tg_homs(const TermGraph& g1, const TermGraph& g2, std::size_t limit) {
  std::vector<std::vector<VertexId>> cand(g1.size());
  for (VertexId v = 0; v < g1.size(); ++v)
    for (VertexId w = 0; w < g2.size(); ++w)
      if (g1.label(v) == g2.label(w)) cand[v].push_back(w);
  auto ok = [&](const std::vector<VertexId>& m) {
    if (!sends(m, g1.root(), g2.root())) return false;
    for (VertexId v = 0; v < g1.size(); ++v) {
      if (m[v] == kUnset) continue;
      for (std::size_t i = 0; i < g1.args(v).size(); ++i)
        if (!sends(m, g1.args(v)[i], g2.args(m[v])[i])) return false;
    }
    return true;
  };
  return enumerate_maps(cand, ok, limit);
}

std::vector<std::vector<bool>> greatest_bisimulation(const TermGraph& g1, const TermGraph& g2) {
  std::vector<std::vector<bool>> rel(g1.size(), std::vector<bool>(g2.size()));
  for (VertexId v = 0; v < g1.size(); ++v)
    for (VertexId w = 0; w < g2.size(); ++w) rel[v][w] = g1.label(v) == g2.label(w);
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < g1.size(); ++v)
      for (VertexId w = 0; w < g2.size(); ++w) {
        if (!rel[v][w]) continue;
        for (std::size_t i = 0; i < g1.args(v).size(); ++i)
          if (!rel[g1.args(v)[i]][g2.args(w)[i]]) {
            rel[v][w] = false;
            changed = true;
            break;
          }
      }
  }
  return rel;
}

bool bisimilar(const TermGraph& g1, const TermGraph& g2) { return greatest_bisimulation(g1, g2)[g1.root()][g2.root()]; }

std::size_t bisim_classes(const TermGraph& g) {
  auto rel = greatest_bisimulation(g, g);
  std::vector<bool> seen(g.size());
  std::size_t classes = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (seen[v]) continue;
    ++classes;
    for (VertexId w = v; w < g.size(); ++w)
      if (rel[v][w]) seen[w] = true;
  }
  return classes;
}

std::vector<std::vector<bool>> scoped_bisimulation(const TermGraph& g) {
  std::vector<std::vector<VertexId>> anc;
  if (count_ancestor_assignments(g, 1, &anc) == 0) return {};
  auto rel = greatest_bisimulation(g, g);
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < g.size(); ++v)
      for (VertexId w = 0; w < g.size(); ++w) {
        if (!rel[v][w]) continue;
        bool ok = anc[v].size() == anc[w].size();
        for (std::size_t k = 0; ok && k < anc[v].size(); ++k) ok = rel[anc[v][k]][anc[w][k]];
        for (std::size_t i = 0; ok && i < g.args(v).size(); ++i) ok = rel[g.args(v)[i]][g.args(w)[i]];
        if (!ok) {
          rel[v][w] = false;
          changed = true;
        }
      }
  }
  return rel;
}

Flat flatten(const Rgs& n) {
  Flat f;
  const auto& defs = n.definitions();
  std::map<std::string, std::size_t> index;
  for (std::size_t d = 0; d < defs.size(); ++d) index[defs[d].symbol] = d;
  f.root_def = index.at(n.root_symbol());
  f.out_of.resize(defs.size());
  f.occurrence.resize(defs.size());
  std::vector<VertexId> base;
  for (const auto& d : defs) {
    base.push_back(static_cast<VertexId>(f.labels.size()));
    for (VertexId v = 0; v < d.body.size(); ++v) {
      f.labels.push_back(d.body.label(v));
      f.def_of.push_back(base.size() - 1);
    }
  }
  f.callee.assign(f.labels.size(), static_cast<std::size_t>(-1));
  for (std::size_t d = 0; d < defs.size(); ++d) {
    const TermGraph& b = defs[d].body;
    for (VertexId v = 0; v < b.size(); ++v) {
      std::vector<VertexId> a;
      for (VertexId t : b.args(v)) a.push_back(base[d] + t);
      f.args.push_back(std::move(a));
      const Label& l = b.label(v);
      if (l.is_output()) f.out_of[d] = base[d] + v;
      if (l.is_nested()) {
        std::size_t c = index.at(l.symbol);
        f.callee[base[d] + v] = c;
        f.occurrence[c] = base[d] + v;
      }
    }
  }
  return f;
}

bool is_ntg_hom(const Flat& a, const Flat& b, const std::vector<VertexId>& m) {
  if (!sends(m, a.out_of[a.root_def], b.out_of[b.root_def])) return false;
  for (VertexId v = 0; v < a.size(); ++v) {
    if (m[v] == kUnset) continue;
    const VertexId w = m[v];
    const Label& l = a.labels[v];
    const Label& k = b.labels[w];
    switch (l.kind) {
      case LabelKind::Atomic:
        if (!same_atomic(l, k)) return false;
        for (std::size_t i = 0; i < a.args[v].size(); ++i)
          if (!sends(m, a.args[v][i], b.args[w][i])) return false;
        break;
      case LabelKind::Nested:
        if (!k.is_nested()) return false;
        if (!sends(m, a.out_of[a.callee[v]], b.out_of[b.callee[w]])) return false;
        break;
      case LabelKind::Output:
        if (!k.is_output()) return false;
        if (!sends(m, a.args[v][0], b.args[w][0])) return false;
        break;
      case LabelKind::Input: {
        if (!k.is_input()) return false;
        auto u1 = a.occurrence[a.def_of[v]];
        auto u2 = b.occurrence[b.def_of[w]];
        if (!u1 || !u2) return false;
        if (k.index > b.args[*u2].size()) return false;
        if (!sends(m, a.args[*u1][l.index - 1], b.args[*u2][k.index - 1])) return false;
        break;
      }
      default:
        return false;
    }
  }
  return true;
}

std::optional<std::vector<std::vector<VertexId>>> all_ntg_homs(const Rgs& n1, const Rgs& n2, std::size_t budget) {
  Flat a = flatten(n1), b = flatten(n2);
  std::vector<std::vector<VertexId>> cand(a.size());
  for (VertexId v = 0; v < a.size(); ++v)
    for (VertexId w = 0; w < b.size(); ++w)
      if (a.labels[v].kind == b.labels[w].kind) cand[v].push_back(w);
  if (product(cand, budget) > budget) return std::nullopt;
  return enumerate_maps(cand, [&](const std::vector<VertexId>& m) { return is_ntg_hom(a, b, m); }, 4);
}

bool is_sntg_hom(const Sntg& a, const Sntg& b, const std::vector<VertexId>& m) {
  if (!sends(m, a.root, b.root)) return false;
  for (VertexId v = 0; v < a.size(); ++v) {
    if (m[v] == kUnset) continue;
    const VertexId w = m[v];
    if (a.anc[v].size() != b.anc[w].size()) return false;
    for (std::size_t k = 0; k < a.anc[v].size(); ++k)
      if (!sends(m, a.anc[v][k], b.anc[w][k])) return false;
    const Label& l = a.labels[v];
    const Label& k = b.labels[w];
    switch (l.kind) {
      case LabelKind::Atomic:
        if (!same_atomic(l, k)) return false;
        for (std::size_t i = 0; i < a.args[v].size(); ++i)
          if (!sends(m, a.args[v][i], b.args[w][i])) return false;
        break;
      case LabelKind::Nested:
        if (!k.is_nested() || !a.call[v] || !b.call[w] || !sends(m, *a.call[v], *b.call[w])) return false;
        break;
      case LabelKind::Output:
        if (!k.is_output() || !sends(m, a.args[v][0], b.args[w][0])) return false;
        break;
      case LabelKind::Input:
        if (!k.is_input() || !a.ret[v] || !b.ret[w] || !sends(m, *a.ret[v], *b.ret[w])) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

std::optional<std::vector<std::vector<VertexId>>> all_sntg_homs(const Sntg& s1, const Sntg& s2,
                                                                std::size_t budget) {
  std::vector<std::vector<VertexId>> cand(s1.size());
  for (VertexId v = 0; v < s1.size(); ++v)
    for (VertexId w = 0; w < s2.size(); ++w)
      if (s1.labels[v].kind == s2.labels[w].kind && s1.anc[v].size() == s2.anc[w].size()) cand[v].push_back(w);
  if (product(cand, budget) > budget) return std::nullopt;
  return enumerate_maps(cand, [&](const std::vector<VertexId>& m) { return is_sntg_hom(s1, s2, m); }, 4);
}

std::size_t count_ancestor_assignments(const TermGraph& g, std::size_t limit,
                                       std::vector<std::vector<VertexId>>* first) {
  const std::size_t n = g.size();
  auto kind = [&](VertexId v) { return g.label(v).kind; };
  std::vector<VertexId> outs;
  for (VertexId v = 0; v < n; ++v)
    if (kind(v) == LabelKind::FoOutput || kind(v) == LabelKind::FoOutputRoot) outs.push_back(v);
  // all sequences of pairwise distinct output vertices
  std::vector<std::vector<VertexId>> seqs{{}};
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (VertexId o : outs)
      if (std::find(seqs[i].begin(), seqs[i].end(), o) == seqs[i].end()) {
        auto s = seqs[i];
        s.push_back(o);
        seqs.push_back(std::move(s));
      }

  using Seq = std::vector<VertexId>;
  std::vector<const Seq*> anc(n, nullptr);
  auto pop = [](const Seq& s) { return Seq(s.begin(), s.end() - 1); };
  // Conditions on the edge v ->_k w, given anc of both ends.
  auto edge_ok = [&](VertexId v, std::size_t k, VertexId w) {
    const Seq& av = *anc[v];
    const Seq& aw = *anc[w];
    switch (kind(v)) {
      case LabelKind::FoOutput:
      case LabelKind::FoOutputRoot: {
        Seq s = av;
        s.push_back(v);
        return aw == s;
      }
      case LabelKind::Atomic:
      case LabelKind::PrimedConst:
        return aw == av;
      case LabelKind::FoInput:
        if (av.empty() || aw != pop(av)) return false;
        return k == 0 || (w == av.back() && kind(w) == LabelKind::FoOutput);
      case LabelKind::FoInputRoot:
        return av.size() == 1 && av[0] == g.root() && w == g.root();
      default:
        return false;
    }
  };
  auto vertex_ok = [&](VertexId v) {
    switch (kind(v)) {
      case LabelKind::FoOutputRoot:
        return v == g.root() && anc[v]->empty();
      case LabelKind::Atomic:
        return g.label(v).arity > 0;
      case LabelKind::Nested:
      case LabelKind::Output:
      case LabelKind::Input:
        return false;
      default:
        return true;
    }
  };
  // Below each primed constant: i-vertices along edge 0, then one i_r,
  // with as many vertices as the constant's nesting depth.
  auto chain_ok = [&](VertexId c) {
    VertexId w = g.args(c)[0];
    for (std::size_t step = 1; step < anc[c]->size(); ++step) {
      if (kind(w) != LabelKind::FoInput) return false;
      w = g.args(w)[0];
    }
    return kind(w) == LabelKind::FoInputRoot;
  };

  std::size_t count = 0;
  std::function<void(VertexId)> go = [&](VertexId v) {
    if (count >= limit) return;
    if (v == n) {
      for (VertexId c = 0; c < n; ++c)
        if (kind(c) == LabelKind::PrimedConst && !chain_ok(c)) return;
      if (count++ == 0 && first) {
        first->clear();
        for (const Seq* s : anc) first->push_back(*s);
      }
      return;
    }
    for (const Seq& s : seqs) {
      anc[v] = &s;
      bool ok = vertex_ok(v) && (v != g.root() || (s.empty() && kind(v) == LabelKind::FoOutputRoot));
      for (VertexId u = 0; ok && u <= v; ++u)
        for (std::size_t k = 0; ok && k < g.args(u).size(); ++k) {
          VertexId w = g.args(u)[k];
          if ((u == v || w == v) && w <= v) ok = edge_ok(u, k, w);
        }
      if (ok) go(v + 1);
    }
    anc[v] = nullptr;
  };
  go(0);
  return count;
}

std::vector<TermGraph> enumerate_term_graphs(std::size_t n, const std::vector<Label>& pool) {
  std::vector<TermGraph> out;
  std::vector<Label> labels(n);
  std::vector<std::vector<VertexId>> args(n);
  // Slots are filled in vertex order; a slot may point at any vertex seen
  // so far or at the next unseen one, which keeps ids in BFS order.
  std::function<void(std::size_t, std::size_t, std::size_t)> fill = [&](std::size_t v, std::size_t slot,
                                                                         std::size_t seen) {
    if (v == n) {
      if (seen == n) out.emplace_back(labels, args, 0);
      return;
    }
    if (v >= seen) return;  // v unreachable
    if (slot == 0) {
      for (const Label& l : pool) {
        labels[v] = l;
        args[v].assign(l.arity, 0);
        if (l.arity == 0)
          fill(v + 1, 0, seen);
        else
          fill(v, 1, seen);
      }
      return;
    }
    for (VertexId t = 0; t <= seen && t < n; ++t) {
      args[v][slot - 1] = t;
      std::size_t s = t == seen ? seen + 1 : seen;
      if (slot == labels[v].arity)
        fill(v + 1, 0, s);
      else
        fill(v, slot + 1, s);
    }
  };
  if (n > 0) fill(0, 0, 1);
  return out;
}

}  // namespace ntg::oracle
