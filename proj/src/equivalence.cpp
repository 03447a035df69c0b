#include "ntg/equivalence.hpp"

#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ntg/errors.hpp"
#include "ntg/firstorder.hpp"
#include "ntg/sntg.hpp"

namespace ntg {

namespace {

constexpr VertexId kUnset = static_cast<VertexId>(-1);

void require_ntg(const Rgs& r, const char* which) {
  ValidationReport rep = validate_rgs(r);
  if (!rep.ok()) throw PreconditionError(std::string(which) + " is invalid: " + rep.violations[0].str());
  NtgCheck c = is_ntg(r);
  if (!holds(c)) throw PreconditionError(std::string(which) + " is not an ntg: " + describe(r, c));
}

void require_valid(const Rgs& r, const char* which) {
  ValidationReport rep = validate_rgs(r);
  if (!rep.ok()) throw PreconditionError(std::string(which) + " is invalid: " + rep.violations[0].str());
}

// The unique occurrence vertex of each definition; kUnset for the root.
std::vector<VertexId> occurrences(const FlatRgs& f) {
  std::vector<VertexId> occ(f.def_root.size(), kUnset);
  for (VertexId v = 0; v < f.size(); ++v)
    if (f.callee[v] != FlatRgs::kNone) occ[f.callee[v]] = v;
  return occ;
}

bool compatible(const Label& a, const Label& b) {
  if (a.kind != b.kind) return false;
  return a.kind != LabelKind::Atomic || a == b;
}

// Items related in pairs, grouped into definitions. Shared by the
// bisimulation witness and the witness built from a nested relation.
struct PairGraph {
  std::vector<LabelKind> kind;
  std::vector<Label> atomic_label;
  std::vector<std::size_t> group;
  std::vector<std::vector<VertexId>> succ;  // atomic and output items
  std::vector<std::size_t> child;           // nested items: group entered
  std::vector<VertexId> ret;                // input items: item returned to
  std::vector<VertexId> group_root;         // output item of each group
  std::vector<VertexId> left, right;
  std::size_t root_group = 0;
};

std::string fresh_name(std::size_t k, const Arities& taken) {
  std::string s = "w" + std::to_string(k);
  while (taken.count(s)) s += "'";
  return s;
}

PairWitness build_pair_ntg(const PairGraph& p, Arities atomic) {
  const std::size_t groups = p.group_root.size();
  std::vector<std::vector<VertexId>> items(groups), inputs(groups);
  std::vector<VertexId> local(p.kind.size());
  for (VertexId it = 0; it < p.kind.size(); ++it) {
    local[it] = static_cast<VertexId>(items[p.group[it]].size());
    items[p.group[it]].push_back(it);
    if (p.kind[it] == LabelKind::Input) inputs[p.group[it]].push_back(it);
  }
  std::vector<std::string> names(groups);
  for (std::size_t g = 0; g < groups; ++g) names[g] = fresh_name(g, atomic);
  std::vector<std::uint32_t> index(p.kind.size(), 0);
  for (std::size_t g = 0; g < groups; ++g)
    for (std::size_t k = 0; k < inputs[g].size(); ++k) index[inputs[g][k]] = static_cast<std::uint32_t>(k + 1);

  PairWitness w;
  std::vector<Definition> defs;
  std::vector<std::size_t> group_order;
  for (std::size_t g = 0; g < groups; ++g) {
    std::vector<Label> labels;
    std::vector<std::vector<VertexId>> args;
    std::vector<std::string> vnames;
    for (VertexId it : items[g]) {
      std::vector<VertexId> a;
      Label l;
      switch (p.kind[it]) {
        case LabelKind::Atomic:
        case LabelKind::Output:
          l = p.kind[it] == LabelKind::Output ? Label::output() : p.atomic_label[it];
          for (VertexId s : p.succ[it]) a.push_back(local[s]);
          break;
        case LabelKind::Nested: {
          std::size_t c = p.child[it];
          l = Label::nested(names[c], static_cast<std::uint32_t>(inputs[c].size()));
          for (VertexId u : inputs[c]) {
            if (p.group[p.ret[u]] != g) throw std::logic_error("argument outside the calling body");
            a.push_back(local[p.ret[u]]);
          }
          break;
        }
        case LabelKind::Input:
          l = Label::input(index[it]);
          break;
        default:
          throw std::logic_error("unexpected label in pair graph");
      }
      labels.push_back(std::move(l));
      args.push_back(std::move(a));
      vnames.push_back("p" + std::to_string(it));
    }
    defs.push_back({names[g], static_cast<std::uint32_t>(inputs[g].size()),
                    TermGraph(std::move(labels), std::move(args), local[p.group_root[g]], std::move(vnames))});
    for (VertexId it : items[g]) {
      w.left.push_back(p.left[it]);
      w.right.push_back(p.right[it]);
    }
  }
  w.ntg = Rgs(std::move(atomic), std::move(defs), names[p.root_group]);
  return w;
}

Arities merged_atomic(const Rgs& a, const Rgs& b) {
  Arities m = a.atomic();
  for (const auto& [k, v] : b.atomic()) m.emplace(k, v);
  return m;
}

}  // namespace

NtgHomResult ntg_hom(const Rgs& n1, const Rgs& n2) {
  require_ntg(n1, "source");
  require_ntg(n2, "target");
  FlatRgs f1(n1), f2(n2);
  std::vector<VertexId> occ1 = occurrences(f1);
  std::vector<VertexId> map(f1.size(), kUnset);
  std::deque<std::pair<VertexId, VertexId>> work{{f1.root(), f2.root()}};
  NtgHomResult res;
  std::optional<std::string> clash;

  // Interface clause for input u of definition d, once both u and the
  // occurrence of d are mapped.
  auto interface = [&](VertexId u) {
    VertexId w = occ1[f1.def_of[u]];
    if (w == kUnset || map[w] == kUnset || map[u] == kUnset) return;
    VertexId fu = map[u], fw = map[w];
    if (f2.def_of[fu] != f2.callee[fw]) {
      clash = "input " + f1.names[u] + " leaves the body called at " + f2.names[fw];
      return;
    }
    work.emplace_back(f1.args[w][f1.labels[u].index - 1], f2.args[fw][f2.labels[fu].index - 1]);
  };

  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (map[x] != kUnset) {
      if (map[x] != y) {
        res.conflict = {x, y};
        res.reason = f1.names[x] + " is forced onto both " + f2.names[map[x]] + " and " + f2.names[y];
        return res;
      }
      continue;
    }
    if (!compatible(f1.labels[x], f2.labels[y])) {
      res.conflict = {x, y};
      res.reason = "label " + f1.labels[x].str() + " of " + f1.names[x] + " cannot map to " +
                   f2.labels[y].str() + " of " + f2.names[y];
      return res;
    }
    map[x] = y;
    switch (f1.labels[x].kind) {
      case LabelKind::Atomic:
        for (std::size_t i = 0; i < f1.args[x].size(); ++i) work.emplace_back(f1.args[x][i], f2.args[y][i]);
        break;
      case LabelKind::Output:
        work.emplace_back(f1.args[x][0], f2.args[y][0]);
        break;
      case LabelKind::Nested:
        work.emplace_back(f1.def_root[f1.callee[x]], f2.def_root[f2.callee[y]]);
        for (VertexId u : f1.inputs[f1.callee[x]]) interface(u);
        break;
      case LabelKind::Input:
        interface(x);
        break;
      default:
        break;
    }
    if (clash) {
      res.conflict = {x, y};
      res.reason = *clash;
      return res;
    }
  }
  for (VertexId v = 0; v < f1.size(); ++v)
    if (map[v] == kUnset) {
      res.reason = "vertex " + f1.names[v] + " is not reached from the root";
      return res;
    }
  if (!verify_ntg_hom(n1, n2, map)) throw std::logic_error("propagated ntg map fails verification");
  res.map = std::move(map);
  return res;
}

bool verify_ntg_hom(const Rgs& n1, const Rgs& n2, const std::vector<VertexId>& map) {
  FlatRgs f1(n1), f2(n2);
  if (map.size() != f1.size()) return false;
  for (VertexId t : map)
    if (t >= f2.size()) return false;
  if (map[f1.root()] != f2.root()) return false;
  for (VertexId w = 0; w < f1.size(); ++w) {
    const Label& l1 = f1.labels[w];
    VertexId fw = map[w];
    const Label& l2 = f2.labels[fw];
    switch (l1.kind) {
      case LabelKind::Atomic:
        if (l1 != l2) return false;
        for (std::size_t i = 0; i < f1.args[w].size(); ++i)
          if (map[f1.args[w][i]] != f2.args[fw][i]) return false;
        break;
      case LabelKind::Output:
        if (!l2.is_output() || map[f1.args[w][0]] != f2.args[fw][0]) return false;
        break;
      case LabelKind::Input:
        if (!l2.is_input()) return false;
        break;
      case LabelKind::Nested: {
        if (!l2.is_nested()) return false;
        std::size_t c1 = f1.callee[w], c2 = f2.callee[fw];
        if (map[f1.def_root[c1]] != f2.def_root[c2]) return false;
        for (VertexId u : f1.inputs[c1]) {
          VertexId fu = map[u];
          if (!f2.labels[fu].is_input() || f2.def_of[fu] != c2) return false;
          if (map[f1.args[w][f1.labels[u].index - 1]] != f2.args[fw][f2.labels[fu].index - 1])
            return false;
        }
        break;
      }
      default:
        return false;
    }
  }
  return true;
}

NtgBisimResult ntg_bisimilar(const Rgs& n1, const Rgs& n2) {
  require_ntg(n1, "first operand");
  require_ntg(n2, "second operand");
  FlatRgs f1(n1), f2(n2);
  std::vector<VertexId> occ1 = occurrences(f1), occ2 = occurrences(f2);
  NtgBisimResult res;

  PairGraph p;
  std::map<std::pair<VertexId, VertexId>, VertexId> item;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> group;
  auto group_of = [&](std::size_t d1, std::size_t d2) {
    auto [it, fresh] = group.try_emplace({d1, d2}, group.size());
    if (fresh) p.group_root.push_back(kUnset);
    return it->second;
  };
  auto intern = [&](VertexId a, VertexId b) {
    auto [it, fresh] = item.try_emplace({a, b}, static_cast<VertexId>(p.left.size()));
    if (fresh) {
      p.left.push_back(a);
      p.right.push_back(b);
    }
    return it->second;
  };
  p.root_group = group_of(f1.root_def, f2.root_def);
  intern(f1.root(), f2.root());
  for (VertexId it = 0; it < p.left.size(); ++it) {
    VertexId x = p.left[it], y = p.right[it];
    const Label& l1 = f1.labels[x];
    if (!compatible(l1, f2.labels[y])) {
      res.reason = "related vertices " + f1.names[x] + " and " + f2.names[y] + " have incompatible labels";
      return res;
    }
    p.kind.push_back(l1.kind);
    p.atomic_label.push_back(l1.is_atomic() ? l1 : Label{});
    p.group.push_back(group_of(f1.def_of[x], f2.def_of[y]));
    p.succ.emplace_back();
    p.child.push_back(FlatRgs::kNone);
    p.ret.push_back(kUnset);
    switch (l1.kind) {
      case LabelKind::Atomic:
        for (std::size_t i = 0; i < f1.args[x].size(); ++i) {
          VertexId s = intern(f1.args[x][i], f2.args[y][i]);
          p.succ[it].push_back(s);
        }
        break;
      case LabelKind::Output: {
        p.group_root[p.group[it]] = it;
        VertexId s = intern(f1.args[x][0], f2.args[y][0]);
        p.succ[it].push_back(s);
        break;
      }
      case LabelKind::Nested: {
        std::size_t c = group_of(f1.callee[x], f2.callee[y]);
        p.child[it] = c;
        intern(f1.def_root[f1.callee[x]], f2.def_root[f2.callee[y]]);
        break;
      }
      case LabelKind::Input: {
        VertexId w1 = occ1[f1.def_of[x]], w2 = occ2[f2.def_of[y]];
        if (!item.count({w1, w2})) throw std::logic_error("input related outside its calling context");
        VertexId r = intern(f1.args[w1][l1.index - 1], f2.args[w2][f2.labels[y].index - 1]);
        p.ret[it] = r;
        break;
      }
      default:
        break;
    }
  }
  PairWitness w = build_pair_ntg(p, merged_atomic(n1, n2));
  if (!verify_ntg_hom(w.ntg, n1, w.left) || !verify_ntg_hom(w.ntg, n2, w.right))
    throw std::logic_error("bisimulation witness projections are not homomorphisms");
  res.witness = std::move(w);
  return res;
}

std::optional<NtgIsomorphism> ntg_isomorphic(const Rgs& n1, const Rgs& n2) {
  require_ntg(n1, "first operand");
  require_ntg(n2, "second operand");
  FlatRgs f1(n1), f2(n2);
  if (f1.size() != f2.size() || f1.def_root.size() != f2.def_root.size()) return std::nullopt;
  std::vector<VertexId> occ1 = occurrences(f1), occ2 = occurrences(f2);
  std::vector<VertexId> fwd(f1.size(), kUnset), bwd(f2.size(), kUnset);
  std::vector<std::size_t> dfwd(f1.def_root.size(), FlatRgs::kNone), dbwd(f2.def_root.size(), FlatRgs::kNone);
  std::vector<std::vector<std::uint32_t>> perm(f1.def_root.size()), iperm(f2.def_root.size());
  for (std::size_t d = 0; d < f1.def_root.size(); ++d) perm[d].assign(f1.inputs[d].size(), 0);
  for (std::size_t d = 0; d < f2.def_root.size(); ++d) iperm[d].assign(f2.inputs[d].size(), 0);

  auto pair_defs = [&](std::size_t a, std::size_t b) {
    if (dfwd[a] == FlatRgs::kNone && dbwd[b] == FlatRgs::kNone) {
      dfwd[a] = b;
      dbwd[b] = a;
      return true;
    }
    return dfwd[a] == b && dbwd[b] == a;
  };
  if (!pair_defs(f1.root_def, f2.root_def)) return std::nullopt;
  std::deque<std::pair<VertexId, VertexId>> work{{f1.root(), f2.root()}};
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (fwd[x] != kUnset || bwd[y] != kUnset) {
      if (fwd[x] != y || bwd[y] != x) return std::nullopt;
      continue;
    }
    const Label& l1 = f1.labels[x];
    const Label& l2 = f2.labels[y];
    if (!compatible(l1, l2) || l1.arity != l2.arity) return std::nullopt;
    if (dfwd[f1.def_of[x]] != f2.def_of[y]) return std::nullopt;
    fwd[x] = y;
    bwd[y] = x;
    switch (l1.kind) {
      case LabelKind::Atomic:
        for (std::size_t i = 0; i < f1.args[x].size(); ++i) work.emplace_back(f1.args[x][i], f2.args[y][i]);
        break;
      case LabelKind::Output:
        work.emplace_back(f1.args[x][0], f2.args[y][0]);
        break;
      case LabelKind::Nested:
        if (!pair_defs(f1.callee[x], f2.callee[y])) return std::nullopt;
        work.emplace_back(f1.def_root[f1.callee[x]], f2.def_root[f2.callee[y]]);
        break;
      case LabelKind::Input: {
        std::size_t d1 = f1.def_of[x], d2 = f2.def_of[y];
        std::uint32_t i = l1.index, j = l2.index;
        if (perm[d1][i - 1] || iperm[d2][j - 1]) return std::nullopt;
        perm[d1][i - 1] = j;
        iperm[d2][j - 1] = i;
        work.emplace_back(f1.args[occ1[d1]][i - 1], f2.args[occ2[d2]][j - 1]);
        break;
      }
      default:
        return std::nullopt;
    }
  }
  for (VertexId v = 0; v < f1.size(); ++v)
    if (fwd[v] == kUnset) return std::nullopt;
  NtgIsomorphism iso;
  iso.vertex_map = std::move(fwd);
  const auto& d1 = n1.definitions();
  const auto& d2 = n2.definitions();
  for (std::size_t d = 0; d < d1.size(); ++d) {
    iso.symbols[d1[d].symbol] = d2[dfwd[d]].symbol;
    iso.input_permutation[d1[d].symbol] = perm[d];
  }
  return iso;
}

NestedBisimResult nested_bisim(const Rgs& r1, const Rgs& r2, std::optional<std::size_t> depth) {
  require_valid(r1, "first operand");
  require_valid(r2, "second operand");
  bool cyclic = has_reachable_cycle(r1) || has_reachable_cycle(r2);
  if (cyclic && !depth) throw MissingDepthError("a dependency ARS is cyclic; a depth bound is required");
  if (!cyclic) depth.reset();
  const std::size_t bound = depth.value_or(std::numeric_limits<std::size_t>::max());
  FlatRgs f1(r1), f2(r2);

  NestedBisimResult res;
  std::set<NestedConfig> seen;
  auto& configs = res.relation.configs;
  auto add = [&](NestedConfig c) {
    if (seen.insert(c).second) configs.push_back(std::move(c));
  };
  add({{}, f1.root(), {}, f2.root()});
  for (std::size_t k = 0; k < configs.size(); ++k) {
    NestedConfig c = configs[k];
    res.relation.max_stack = std::max(res.relation.max_stack, c.stack1.size());
    const Label& l1 = f1.labels[c.v1];
    const Label& l2 = f2.labels[c.v2];
    if (!compatible(l1, l2)) {
      res.verdict = NestedVerdict::NotBisimilar;
      res.failing = c;
      res.reason = "labels " + l1.str() + " (" + f1.names[c.v1] + ") and " + l2.str() + " (" + f2.names[c.v2] +
                   ") do not match";
      return res;
    }
    switch (l1.kind) {
      case LabelKind::Atomic:
        for (std::size_t i = 0; i < f1.args[c.v1].size(); ++i)
          add({c.stack1, f1.args[c.v1][i], c.stack2, f2.args[c.v2][i]});
        break;
      case LabelKind::Output:
        add({c.stack1, f1.args[c.v1][0], c.stack2, f2.args[c.v2][0]});
        break;
      case LabelKind::Nested: {
        if (c.stack1.size() + 1 > bound) {
          res.relation.exact = false;
          break;
        }
        NestedConfig n{c.stack1, f1.def_root[f1.callee[c.v1]], c.stack2, f2.def_root[f2.callee[c.v2]]};
        n.stack1.push_back(c.v1);
        n.stack2.push_back(c.v2);
        add(std::move(n));
        break;
      }
      case LabelKind::Input: {
        if (c.stack1.empty() || c.stack2.empty()) {
          res.verdict = NestedVerdict::NotBisimilar;
          res.failing = c;
          res.reason = "input reached with an empty stack";
          return res;
        }
        NestedConfig n{c.stack1, 0, c.stack2, 0};
        VertexId a = n.stack1.back(), b = n.stack2.back();
        n.stack1.pop_back();
        n.stack2.pop_back();
        n.v1 = f1.args[a][l1.index - 1];
        n.v2 = f2.args[b][l2.index - 1];
        add(std::move(n));
        break;
      }
      default:
        res.verdict = NestedVerdict::NotBisimilar;
        res.failing = c;
        res.reason = "unexpected label " + l1.str();
        return res;
    }
  }
  res.verdict = res.relation.exact ? NestedVerdict::Bisimilar : NestedVerdict::UnknownAtDepth;
  if (!res.relation.exact) res.reason = "no violation up to depth " + std::to_string(depth.value_or(0));
  return res;
}

NestedBisimRelation minimal_nested_self_bisimulation(const Rgs& r, std::optional<std::size_t> depth) {
  return nested_bisim(r, r, depth).relation;
}

NestedHomResult nested_hom(const Rgs& r1, const Rgs& r2, std::optional<std::size_t> depth) {
  NestedBisimResult b = nested_bisim(r1, r2, depth);
  NestedHomResult res;
  if (b.verdict == NestedVerdict::NotBisimilar) {
    res.reason = b.reason;
    return res;
  }
  std::map<std::pair<std::vector<VertexId>, VertexId>, const NestedConfig*> image;
  FlatRgs f1(r1);
  for (const auto& c : b.relation.configs) {
    auto [it, fresh] = image.try_emplace({c.stack1, c.v1}, &c);
    if (!fresh && (it->second->stack2 != c.stack2 || it->second->v2 != c.v2)) {
      res.reason = "configuration at " + f1.names[c.v1] + " is related to two different targets";
      return res;
    }
  }
  res.verdict = b.verdict;
  res.graph = std::move(b.relation.configs);
  if (b.verdict == NestedVerdict::UnknownAtDepth) res.reason = b.reason;
  return res;
}

PairWitness witness_ntg_from_relation(const NestedBisimRelation& rel, const Rgs& r1, const Rgs& r2) {
  FlatRgs f1(r1), f2(r2);
  PairGraph p;
  std::map<NestedConfig, VertexId> item;
  for (const auto& c : rel.configs) item.emplace(c, static_cast<VertexId>(item.size()));
  std::map<std::pair<std::vector<VertexId>, std::vector<VertexId>>, std::size_t> group;
  auto group_of = [&](const std::vector<VertexId>& s1, const std::vector<VertexId>& s2) {
    auto [it, fresh] = group.try_emplace({s1, s2}, group.size());
    if (fresh) p.group_root.push_back(kUnset);
    return it->second;
  };
  auto lookup = [&](const NestedConfig& c) {
    auto it = item.find(c);
    if (it == item.end()) throw PreconditionError("relation is not closed under the nested clauses");
    return it->second;
  };
  p.root_group = group_of({}, {});
  for (const auto& c : rel.configs) {
    const Label& l1 = f1.labels[c.v1];
    if (!compatible(l1, f2.labels[c.v2])) throw PreconditionError("relation relates incompatible labels");
    VertexId it = static_cast<VertexId>(p.kind.size());
    p.kind.push_back(l1.kind);
    p.atomic_label.push_back(l1.is_atomic() ? l1 : Label{});
    p.group.push_back(group_of(c.stack1, c.stack2));
    p.succ.emplace_back();
    p.child.push_back(FlatRgs::kNone);
    p.ret.push_back(kUnset);
    p.left.push_back(c.v1);
    p.right.push_back(c.v2);
    switch (l1.kind) {
      case LabelKind::Atomic:
        for (std::size_t i = 0; i < f1.args[c.v1].size(); ++i)
          p.succ[it].push_back(lookup({c.stack1, f1.args[c.v1][i], c.stack2, f2.args[c.v2][i]}));
        break;
      case LabelKind::Output:
        p.group_root[p.group[it]] = it;
        p.succ[it].push_back(lookup({c.stack1, f1.args[c.v1][0], c.stack2, f2.args[c.v2][0]}));
        break;
      case LabelKind::Nested: {
        std::vector<VertexId> s1 = c.stack1, s2 = c.stack2;
        s1.push_back(c.v1);
        s2.push_back(c.v2);
        p.child[it] = group_of(s1, s2);
        break;
      }
      case LabelKind::Input: {
        if (c.stack1.empty() || c.stack2.empty()) throw PreconditionError("relation has an input with an empty stack");
        NestedConfig n{c.stack1, 0, c.stack2, 0};
        VertexId a = n.stack1.back(), b = n.stack2.back();
        n.stack1.pop_back();
        n.stack2.pop_back();
        n.v1 = f1.args[a][l1.index - 1];
        n.v2 = f2.args[b][f2.labels[c.v2].index - 1];
        p.ret[it] = lookup(n);
        break;
      }
      default:
        throw PreconditionError("unexpected label in relation");
    }
  }
  for (VertexId r : p.group_root)
    if (r == kUnset) throw PreconditionError("relation enters a body without relating its output");
  return build_pair_ntg(p, merged_atomic(r1, r2));
}

bool CrossCheck::agree() const {
  bool homs = ntg_hom == sntg_hom && ntg_hom == fo_hom && ntg_hom == nested_hom;
  bool bisims = ntg_bisim == sntg_bisim && ntg_bisim == fo_bisim && ntg_bisim == nested_bisim &&
                ntg_bisim == collapses_isomorphic;
  return homs && bisims;
}

std::string CrossCheck::str() const {
  std::ostringstream os;
  os << "hom: ntg=" << ntg_hom << " sntg=" << sntg_hom << " first-order=" << fo_hom << " nested=" << nested_hom
     << "; bisim: ntg=" << ntg_bisim << " sntg=" << sntg_bisim << " first-order=" << fo_bisim
     << " nested=" << nested_bisim << " collapse-iso=" << collapses_isomorphic;
  return os.str();
}

CrossCheck cross_check_theorems(const Rgs& n1, const Rgs& n2) {
  CrossCheck c;
  c.ntg_hom = static_cast<bool>(ntg_hom(n1, n2));
  Sntg s1 = ntg_to_sntg(n1).sntg, s2 = ntg_to_sntg(n2).sntg;
  c.sntg_hom = static_cast<bool>(sntg_hom(s1, s2));
  TermGraph g1 = interpret(n1).graph, g2 = interpret(n2).graph;
  c.fo_hom = static_cast<bool>(tg_hom(g1, g2));
  c.nested_hom = static_cast<bool>(nested_hom(n1, n2));
  c.ntg_bisim = static_cast<bool>(ntg_bisimilar(n1, n2));
  c.sntg_bisim = static_cast<bool>(sntg_bisimilar(s1, s2));
  c.fo_bisim = tg_bisimilar(g1, g2);
  c.nested_bisim = nested_bisim(n1, n2).verdict == NestedVerdict::Bisimilar;
  c.collapses_isomorphic = ntg_isomorphic(ntg_collapse(n1), ntg_collapse(n2)).has_value();
  return c;
}

}  // namespace ntg
