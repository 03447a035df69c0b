#include "ntg/sntg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ntg/errors.hpp"

namespace ntg {

namespace {
constexpr VertexId kUnset = static_cast<VertexId>(-1);
}

TermGraph Sntg::term_graph() const { return TermGraph(labels, args, root, names); }

const char* condition_name(SntgCondition c) {
  switch (c) {
    case SntgCondition::Root: return "root";
    case SntgCondition::Nested: return "nested";
    case SntgCondition::Arguments: return "arguments";
    case SntgCondition::Defined: return "defined";
    case SntgCondition::StepInto: return "step-into";
    case SntgCondition::StepOut: return "step-out";
  }
  return "?";
}

std::vector<SntgViolation> check_sntg(const Sntg& s) {
  std::vector<SntgViolation> out;
  const std::size_t n = s.size();
  auto name = [&](VertexId v) { return v < s.names.size() ? s.names[v] : "v" + std::to_string(v); };
  auto add = [&](SntgCondition c, std::vector<VertexId> w, std::string msg) {
    out.push_back({c, std::move(w), std::move(msg)});
  };
  if (s.args.size() != n || s.call.size() != n || s.ret.size() != n || s.anc.size() != n || s.names.size() != n || s.root >= n) {
    add(SntgCondition::Root, {}, "malformed tables");
    return out;
  }
  if (!s.labels[s.root].is_nested() || !s.anc[s.root].empty())
    add(SntgCondition::Root, {s.root}, "root must be nested with empty ancestry");

  bool ranges_ok = true;
  for (VertexId w = 0; w < n; ++w) {
    for (VertexId a : s.anc[w]) ranges_ok &= a < n;
    for (VertexId a : s.args[w]) ranges_ok &= a < n;
    if (s.call[w]) ranges_ok &= *s.call[w] < n;
    if (s.ret[w]) ranges_ok &= *s.ret[w] < n;
    if (s.args[w].size() != s.labels[w].arity) ranges_ok = false;
  }
  if (!ranges_ok) {
    add(SntgCondition::Defined, {}, "a map points outside the vertex set or an arity is wrong");
    return out;
  }

  const TermGraph tg = s.term_graph();
  for (VertexId w = 0; w < n; ++w) {
    std::set<VertexId> letters(s.anc[w].begin(), s.anc[w].end());
    if (letters.size() != s.anc[w].size() || letters.count(w))
      add(SntgCondition::Nested, {w}, "ancestors of " + name(w) + " repeat");
    for (VertexId v : s.args[w])
      if (s.anc[v] != s.anc[w])
        add(SntgCondition::Arguments, {w, v}, name(w) + " and its successor " + name(v) + " differ in ancestry");
    const Label& l = s.labels[w];
    if (l.is_nested() != s.call[w].has_value())
      add(SntgCondition::Defined, {w}, "call of " + name(w) + " must be defined exactly on nested vertices");
    if (l.is_input() != s.ret[w].has_value())
      add(SntgCondition::Defined, {w}, "return of " + name(w) + " must be defined exactly on input vertices");
    if (!l.is_nested() || !s.call[w]) continue;

    VertexId c = *s.call[w];
    std::vector<VertexId> expected = s.anc[w];
    expected.push_back(w);
    if (!s.labels[c].is_output() || s.anc[c] != expected)
      add(SntgCondition::StepInto, {w, c}, "call of " + name(w) + " must be an output one level down");
    std::vector<VertexId> sub = reachable_from(tg, c);
    std::vector<std::vector<VertexId>> by_index(l.arity + 1);
    for (VertexId u : sub) {
      if (s.labels[u].is_output() && u != c)
        add(SntgCondition::StepInto, {w, u}, "second output " + name(u) + " below the call of " + name(w));
      if (s.labels[u].is_input()) {
        std::uint32_t j = s.labels[u].index;
        if (j < 1 || j > l.arity)
          add(SntgCondition::StepOut, {w, u}, "input " + name(u) + " has no matching argument of " + name(w));
        else
          by_index[j].push_back(u);
      }
    }
    for (std::uint32_t j = 1; j <= l.arity; ++j) {
      if (by_index[j].size() != 1) {
        add(SntgCondition::StepOut, {w}, "body called by " + name(w) + " needs exactly one input " + std::to_string(j));
        continue;
      }
      VertexId b = by_index[j][0];
      if (!s.ret[b] || *s.ret[b] != s.args[w][j - 1])
        add(SntgCondition::StepOut, {w, b}, "return of " + name(b) + " is not argument " + std::to_string(j) + " of " + name(w));
    }
  }
  return out;
}

SntgFromNtg ntg_to_sntg(const Rgs& n) {
  NtgCheck chk = is_ntg(n);
  if (!holds(chk)) throw PreconditionError("not an ntg: " + describe(n, chk));
  FlatRgs f(n);
  const std::size_t defs = n.definitions().size();
  SntgFromNtg res;
  Sntg& s = res.sntg;
  const std::size_t total = f.size() + 1;
  s.labels.resize(total);
  s.args.resize(total);
  s.call.assign(total, std::nullopt);
  s.ret.assign(total, std::nullopt);
  s.anc.resize(total);
  s.names.resize(total);
  s.root = 0;
  s.labels[0] = Label::nested(n.root_symbol(), 0);
  s.names[0] = n.root_symbol();
  s.call[0] = f.root() + 1;
  for (VertexId v = 0; v < f.size(); ++v) {
    s.labels[v + 1] = f.labels[v];
    for (VertexId t : f.args[v]) s.args[v + 1].push_back(t + 1);
    s.names[v + 1] = f.names[v];
    if (f.callee[v] != FlatRgs::kNone) s.call[v + 1] = f.def_root[f.callee[v]] + 1;
  }
  // the unique occurrence of each definition; the root's is the fresh vertex
  std::vector<VertexId> occ(defs, kUnset);
  occ[f.root_def] = 0;
  for (VertexId v = 0; v < f.size(); ++v)
    if (f.callee[v] != FlatRgs::kNone) occ[f.callee[v]] = v + 1;
  std::vector<std::string> order = reachable_symbols(n);
  for (const auto& sym : order) {
    std::size_t d = *n.index_of(sym);
    VertexId o = occ[d];
    std::vector<VertexId> a = s.anc[o];
    a.push_back(o);
    const TermGraph& body = n.definitions()[d].body;
    for (VertexId v = 0; v < body.size(); ++v) {
      VertexId sv = f.global(d, v) + 1;
      s.anc[sv] = a;
      if (body.label(v).is_input()) s.ret[sv] = s.args[o][body.label(v).index - 1];
    }
  }
  res.vertex_of.resize(defs);
  for (std::size_t d = 0; d < defs; ++d)
    for (VertexId v = 0; v < n.definitions()[d].body.size(); ++v)
      res.vertex_of[d].push_back(f.global(d, v) + 1);
  return res;
}

Rgs sntg_to_ntg(const Sntg& s) {
  auto viol = check_sntg(s);
  if (!viol.empty())
    throw PreconditionError(std::string("not an sntg: (") + condition_name(viol[0].condition) + ") " + viol[0].message);
  const std::size_t n = s.size();
  for (VertexId v = 0; v < n; ++v)
    if (v != s.root && s.anc[v].empty())
      throw PreconditionError("vertex " + s.names[v] + " lies outside every body");

  std::map<std::string, std::size_t> uses;
  for (VertexId v = 0; v < n; ++v)
    if (s.labels[v].is_nested()) ++uses[s.labels[v].symbol];
  auto symbol_of = [&](VertexId x) {
    const std::string& sym = s.labels[x].symbol;
    return uses[sym] == 1 ? sym : sym + "~" + std::to_string(x);
  };

  std::map<VertexId, std::vector<VertexId>> members;
  for (VertexId v = 0; v < n; ++v)
    if (!s.anc[v].empty()) members[s.anc[v].back()].push_back(v);

  Arities atomic;
  for (const Label& l : s.labels)
    if (l.is_atomic()) atomic[l.symbol] = l.arity;

  const TermGraph tg = s.term_graph();
  std::vector<Definition> defs;
  for (VertexId x = 0; x < n; ++x) {
    if (!s.labels[x].is_nested()) continue;
    const std::vector<VertexId>& mem = members[x];
    std::map<VertexId, VertexId> local;
    for (VertexId v : mem) local.emplace(v, static_cast<VertexId>(local.size()));
    // input indices from return links, visiting inputs in discovery order
    std::map<VertexId, std::uint32_t> index;
    std::vector<char> used(s.labels[x].arity + 1, 0);
    for (VertexId b : reachable_from(tg, *s.call[x])) {
      if (!s.labels[b].is_input()) continue;
      std::uint32_t pick = 0;
      for (std::uint32_t j = 1; j <= s.labels[x].arity && !pick; ++j)
        if (!used[j] && s.args[x][j - 1] == *s.ret[b]) pick = j;
      if (!pick) throw PreconditionError("input " + s.names[b] + " matches no free argument");
      used[pick] = 1;
      index[b] = pick;
    }
    std::vector<Label> labels;
    std::vector<std::vector<VertexId>> args;
    std::vector<std::string> names;
    for (VertexId v : mem) {
      Label l = s.labels[v];
      if (l.is_nested()) l.symbol = symbol_of(v);
      if (l.is_input()) {
        auto it = index.find(v);
        if (it == index.end()) throw PreconditionError("input " + s.names[v] + " is unreachable in its body");
        l.index = it->second;
      }
      std::vector<VertexId> a;
      for (VertexId t : s.args[v]) {
        auto it = local.find(t);
        if (it == local.end()) throw PreconditionError("edge from " + s.names[v] + " leaves its body");
        a.push_back(it->second);
      }
      labels.push_back(std::move(l));
      args.push_back(std::move(a));
      names.push_back(s.names[v]);
    }
    auto root_it = local.find(*s.call[x]);
    if (root_it == local.end()) throw PreconditionError("call target outside the body");
    defs.push_back({symbol_of(x), s.labels[x].arity,
                    TermGraph(std::move(labels), std::move(args), root_it->second, std::move(names))});
  }
  Rgs r(std::move(atomic), std::move(defs), symbol_of(s.root));
  ValidationReport rep = validate_rgs(r);
  if (!rep.ok()) throw PreconditionError("sntg does not describe an ntg: " + rep.violations[0].str());
  return r;
}

namespace {

bool compatible(const Label& a, const Label& b) {
  if (a.kind != b.kind) return false;
  return a.kind != LabelKind::Atomic || a == b;
}

}  // namespace

namespace {

void require_sntg(const Sntg& s, const char* which) {
  auto viol = check_sntg(s);
  if (!viol.empty())
    throw PreconditionError(std::string(which) + " is not an sntg: (" + condition_name(viol[0].condition) + ") " +
                            viol[0].message);
}

}  // namespace

SntgHomResult sntg_hom(const Sntg& s1, const Sntg& s2) {
  require_sntg(s1, "first operand");
  require_sntg(s2, "second operand");
  SntgHomResult res;
  std::vector<VertexId> map(s1.size(), kUnset);
  std::deque<std::pair<VertexId, VertexId>> work{{s1.root, s2.root}};
  auto fail = [&](VertexId x, VertexId y, std::string why) {
    res.conflict = {x, y};
    res.reason = std::move(why);
    return res;
  };
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (map[x] != kUnset) {
      if (map[x] != y) return fail(x, y, s1.names[x] + " is forced onto both " + s2.names[map[x]] + " and " + s2.names[y]);
      continue;
    }
    if (!compatible(s1.labels[x], s2.labels[y]))
      return fail(x, y, "labels of " + s1.names[x] + " and " + s2.names[y] + " are incompatible");
    if (s1.anc[x].size() != s2.anc[y].size())
      return fail(x, y, s1.names[x] + " and " + s2.names[y] + " sit at different depths");
    map[x] = y;
    for (std::size_t k = 0; k < s1.anc[x].size(); ++k) work.emplace_back(s1.anc[x][k], s2.anc[y][k]);
    switch (s1.labels[x].kind) {
      case LabelKind::Atomic:
        for (std::size_t i = 0; i < s1.args[x].size(); ++i) work.emplace_back(s1.args[x][i], s2.args[y][i]);
        break;
      case LabelKind::Output:
        work.emplace_back(s1.args[x][0], s2.args[y][0]);
        break;
      case LabelKind::Nested:
        work.emplace_back(*s1.call[x], *s2.call[y]);
        break;
      case LabelKind::Input:
        work.emplace_back(*s1.ret[x], *s2.ret[y]);
        break;
      default:
        return fail(x, y, "unexpected label " + s1.labels[x].str());
    }
  }
  for (VertexId v = 0; v < s1.size(); ++v)
    if (map[v] == kUnset) {
      res.reason = "vertex " + s1.names[v] + " is not reached from the root";
      return res;
    }
  if (!verify_sntg_hom(s1, s2, map)) throw std::logic_error("propagated sntg map fails verification");
  res.map = std::move(map);
  return res;
}

bool verify_sntg_hom(const Sntg& s1, const Sntg& s2, const std::vector<VertexId>& map) {
  if (map.size() != s1.size()) return false;
  for (VertexId t : map)
    if (t >= s2.size()) return false;
  if (map[s1.root] != s2.root) return false;
  for (VertexId w = 0; w < s1.size(); ++w) {
    VertexId fw = map[w];
    const Label& l1 = s1.labels[w];
    const Label& l2 = s2.labels[fw];
    if (s1.anc[w].size() != s2.anc[fw].size()) return false;
    for (std::size_t k = 0; k < s1.anc[w].size(); ++k)
      if (map[s1.anc[w][k]] != s2.anc[fw][k]) return false;
    switch (l1.kind) {
      case LabelKind::Atomic:
        if (l1 != l2) return false;
        for (std::size_t i = 0; i < s1.args[w].size(); ++i)
          if (map[s1.args[w][i]] != s2.args[fw][i]) return false;
        break;
      case LabelKind::Nested:
        if (!l2.is_nested() || map[*s1.call[w]] != *s2.call[fw]) return false;
        break;
      case LabelKind::Output:
        if (!l2.is_output() || map[s1.args[w][0]] != s2.args[fw][0]) return false;
        break;
      case LabelKind::Input:
        if (!l2.is_input() || map[*s1.ret[w]] != *s2.ret[fw]) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

SntgBisimResult sntg_bisimilar(const Sntg& s1, const Sntg& s2) {
  require_sntg(s1, "first operand");
  require_sntg(s2, "second operand");
  SntgBisimResult res;
  std::map<std::pair<VertexId, VertexId>, VertexId> id;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto intern = [&](VertexId a, VertexId b) {
    auto [it, fresh] = id.try_emplace({a, b}, static_cast<VertexId>(pairs.size()));
    if (fresh) pairs.emplace_back(a, b);
    return it->second;
  };
  intern(s1.root, s2.root);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    const Label& l1 = s1.labels[x];
    if (!compatible(l1, s2.labels[y])) {
      res.reason = "related vertices " + s1.names[x] + " and " + s2.names[y] + " have incompatible labels";
      return res;
    }
    if (s1.anc[x].size() != s2.anc[y].size()) {
      res.reason = "related vertices " + s1.names[x] + " and " + s2.names[y] + " sit at different depths";
      return res;
    }
    for (std::size_t k = 0; k < s1.anc[x].size(); ++k) intern(s1.anc[x][k], s2.anc[y][k]);
    switch (l1.kind) {
      case LabelKind::Atomic:
        for (std::size_t j = 0; j < s1.args[x].size(); ++j) intern(s1.args[x][j], s2.args[y][j]);
        break;
      case LabelKind::Output:
        intern(s1.args[x][0], s2.args[y][0]);
        break;
      case LabelKind::Nested:
        intern(*s1.call[x], *s2.call[y]);
        break;
      case LabelKind::Input:
        intern(*s1.ret[x], *s2.ret[y]);
        break;
      default:
        res.reason = "unexpected label " + l1.str();
        return res;
    }
  }

  const std::size_t n = pairs.size();
  Sntg w;
  w.labels.resize(n);
  w.args.resize(n);
  w.call.assign(n, std::nullopt);
  w.ret.assign(n, std::nullopt);
  w.anc.resize(n);
  w.names.resize(n);
  auto pid = [&](VertexId a, VertexId b) { return id.at({a, b}); };
  std::map<VertexId, std::vector<VertexId>> inputs_below;  // nested pair -> input pairs of its body
  for (VertexId p = 0; p < n; ++p) {
    auto [x, y] = pairs[p];
    for (std::size_t k = 0; k < s1.anc[x].size(); ++k) w.anc[p].push_back(pid(s1.anc[x][k], s2.anc[y][k]));
    w.names[p] = s1.names[x] + "|" + s2.names[y];
    if (s1.labels[x].is_input()) inputs_below[w.anc[p].back()].push_back(p);
  }
  for (VertexId p = 0; p < n; ++p) {
    auto [x, y] = pairs[p];
    const Label& l1 = s1.labels[x];
    switch (l1.kind) {
      case LabelKind::Atomic:
        w.labels[p] = l1;
        for (std::size_t j = 0; j < s1.args[x].size(); ++j) w.args[p].push_back(pid(s1.args[x][j], s2.args[y][j]));
        break;
      case LabelKind::Output:
        w.labels[p] = Label::output();
        w.args[p].push_back(pid(s1.args[x][0], s2.args[y][0]));
        break;
      case LabelKind::Nested: {
        const auto& ins = inputs_below[p];
        w.labels[p] = Label::nested(l1.symbol + "~" + s2.labels[y].symbol, static_cast<std::uint32_t>(ins.size()));
        w.call[p] = pid(*s1.call[x], *s2.call[y]);
        for (VertexId u : ins) w.args[p].push_back(pid(*s1.ret[pairs[u].first], *s2.ret[pairs[u].second]));
        break;
      }
      case LabelKind::Input: {
        const auto& sibs = inputs_below[w.anc[p].back()];
        auto pos = std::find(sibs.begin(), sibs.end(), p) - sibs.begin();
        w.labels[p] = Label::input(static_cast<std::uint32_t>(pos + 1));
        w.ret[p] = pid(*s1.ret[x], *s2.ret[y]);
        break;
      }
      default:
        break;
    }
  }
  w.root = 0;
  if (!check_sntg(w).empty()) throw std::logic_error("bisimulation witness is not an sntg");
  std::vector<VertexId> p1, p2;
  for (auto [a, b] : pairs) {
    p1.push_back(a);
    p2.push_back(b);
  }
  if (!verify_sntg_hom(w, s1, p1) || !verify_sntg_hom(w, s2, p2))
    throw std::logic_error("bisimulation witness projections are not homomorphisms");
  res.witness = std::move(w);
  res.pairs = std::move(pairs);
  return res;
}

std::string print_sntg(const Sntg& s) {
  std::ostringstream os;
  os << "sntg root " << s.names[s.root] << "\n";
  for (VertexId v = 0; v < s.size(); ++v) {
    const Label& l = s.labels[v];
    os << s.names[v] << ": ";
    if (l.is_output()) os << "out";
    else if (l.is_input()) os << "in " << l.index;
    else os << l.symbol;
    if (!s.args[v].empty()) {
      os << "(";
      for (std::size_t i = 0; i < s.args[v].size(); ++i) os << (i ? ", " : "") << s.names[s.args[v][i]];
      os << ")";
    }
    if (s.call[v]) os << " call=" << s.names[*s.call[v]];
    if (s.ret[v]) os << " return=" << s.names[*s.ret[v]];
    os << " anc=[";
    for (std::size_t k = 0; k < s.anc[v].size(); ++k) os << (k ? " " : "") << s.names[s.anc[v][k]];
    os << "]\n";
  }
  return os.str();
}

}  // namespace ntg
