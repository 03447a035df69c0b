#include "ntg/ntg.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "ntg/dot.hpp"
#include "ntg/equivalence.hpp"
#include "ntg/errors.hpp"
#include "ntg/firstorder.hpp"
#include "ntg/io.hpp"
#include "ntg/sntg.hpp"

struct ntg_rgs {
  ntg::Rgs value;
};

struct ntg_fo {
  ntg::FoGraph value;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

ntg_status set_error(ntg_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
ntg_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ntg::ParseError& e) {
    return set_error(NTG_E_PARSE, e.what());
  } catch (const ntg::ValidationError& e) {
    return set_error(NTG_E_INVALID, e.what());
  } catch (const ntg::MissingDepthError& e) {
    return set_error(NTG_E_DEPTH, e.what());
  } catch (const ntg::PreconditionError& e) {
    return set_error(NTG_E_PRECONDITION, e.what());
  } catch (const ntg::GraphError& e) {
    return set_error(NTG_E_INVALID, e.what());
  } catch (const std::exception& e) {
    return set_error(NTG_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(NTG_E_INTERNAL, "unknown error");
  }
}

std::optional<std::size_t> to_depth(long depth) {
  if (depth < 0) return std::nullopt;
  return static_cast<std::size_t>(depth);
}

void require_ntg(const ntg::Rgs& r) {
  ntg::NtgCheck c = ntg::is_ntg(r);
  if (!ntg::holds(c)) throw ntg::PreconditionError("not an ntg: " + ntg::describe(r, c));
}

// Acyclic specifications are compared through their unfoldings.
ntg::Rgs as_ntg(const ntg::Rgs& r) {
  if (ntg::holds(ntg::is_ntg(r))) return r;
  if (ntg::has_reachable_cycle(r))
    throw ntg::PreconditionError("cyclic specification has no finite first-order interpretation");
  return ntg::unfold_to_ntg(r).ntg;
}

}  // namespace

extern "C" {

const char* ntg_version(void) { return "1.0.0"; }

const char* ntg_last_error(void) { return last_error.c_str(); }

const char* ntg_status_name(ntg_status s) {
  switch (s) {
    case NTG_OK: return "ok";
    case NTG_NO: return "no";
    case NTG_UNKNOWN: return "unknown";
    case NTG_DISAGREE: return "disagreement";
    case NTG_E_PARSE: return "parse error";
    case NTG_E_INVALID: return "invalid specification";
    case NTG_E_PRECONDITION: return "precondition violated";
    case NTG_E_DEPTH: return "depth bound required";
    case NTG_E_ARG: return "bad argument";
    case NTG_E_INTERNAL: return "internal error";
  }
  return "?";
}

void ntg_string_free(char* s) { std::free(s); }

ntg_status ntg_rgs_parse(const char* text, ntg_rgs** out) {
  if (!text || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    *out = new ntg_rgs{ntg::parse_rgs(text)};
    return NTG_OK;
  });
}

ntg_status ntg_rgs_check(const char* text, char** report) {
  if (!text) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    ntg::Rgs r = ntg::parse_rgs_unchecked(text);
    ntg::ValidationReport rep = ntg::validate_rgs(r);
    std::ostringstream os;
    for (const auto& v : rep.violations) os << "error: " << v.str() << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    emit(report, os.str());
    if (!rep.ok()) return set_error(NTG_NO, "specification is invalid");
    return NTG_OK;
  });
}

void ntg_rgs_free(ntg_rgs* r) { delete r; }

size_t ntg_rgs_definition_count(const ntg_rgs* r) { return r ? r->value.definitions().size() : 0; }

ntg_status ntg_rgs_print(const ntg_rgs* r, char** out) {
  if (!r) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    emit(out, ntg::print_rgs(r->value));
    return NTG_OK;
  });
}

ntg_status ntg_rgs_deps(const ntg_rgs* r, char** out) {
  if (!r) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    ntg::DependencyArs a = ntg::dependency_ars(r->value);
    std::ostringstream os;
    os << "root " << a.root << "\n";
    for (const auto& s : a.steps) {
      const ntg::Definition* d = r->value.find(s.occurrence.body);
      os << s.source << " -> " << s.target << " at " << d->body.name(s.occurrence.vertex) << "\n";
    }
    emit(out, os.str());
    return NTG_OK;
  });
}

ntg_status ntg_rgs_is_ntg(const ntg_rgs* r, char** reason) {
  if (!r) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    ntg::NtgCheck c = ntg::is_ntg(r->value);
    emit(reason, ntg::describe(r->value, c));
    if (!ntg::holds(c)) return set_error(NTG_NO, ntg::describe(r->value, c));
    return NTG_OK;
  });
}

ntg_status ntg_rgs_unfold(const ntg_rgs* r, long depth, ntg_rgs** out, int* truncated) {
  if (!r || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    ntg::UnfoldResult u = ntg::unfold_to_ntg(r->value, to_depth(depth));
    if (truncated) *truncated = u.truncated ? 1 : 0;
    *out = new ntg_rgs{std::move(u.ntg)};
    return NTG_OK;
  });
}

ntg_status ntg_rgs_sntg(const ntg_rgs* r, char** out) {
  if (!r) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    emit(out, ntg::print_sntg(ntg::ntg_to_sntg(r->value).sntg));
    return NTG_OK;
  });
}

ntg_status ntg_rgs_interpret(const ntg_rgs* r, ntg_fo** out) {
  if (!r || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    *out = new ntg_fo{ntg::interpret(r->value)};
    return NTG_OK;
  });
}

ntg_status ntg_rgs_collapse(const ntg_rgs* r, ntg_rgs** out) {
  if (!r || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    *out = new ntg_rgs{ntg::ntg_collapse(r->value)};
    return NTG_OK;
  });
}

ntg_status ntg_rgs_roundtrip(const ntg_rgs* r, char** report) {
  if (!r) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    require_ntg(r->value);
    ntg::FoGraph fo = ntg::interpret(r->value);
    ntg::FoGraph reparsed = ntg::parse_fo(ntg::print_fo(fo));
    bool fo_same = ntg::tg_isomorphic(fo.graph, reparsed.graph).has_value();
    ntg::Rgs back = ntg::represent(reparsed);
    bool same = ntg::ntg_isomorphic(r->value, back).has_value();
    bool text_same = ntg::ntg_isomorphic(r->value, ntg::parse_rgs(ntg::print_rgs(r->value))).has_value();
    std::ostringstream os;
    os << "interpretation: " << fo.graph.size() << " vertices\n"
       << "first-order print/parse: " << (fo_same ? "identical" : "DIFFERENT") << "\n"
       << "represent(interpret(n)): " << (same ? "isomorphic" : "DIFFERENT") << "\n"
       << "print/parse: " << (text_same ? "isomorphic" : "DIFFERENT") << "\n";
    emit(report, os.str());
    if (!(fo_same && same && text_same)) return set_error(NTG_NO, "round trip changed the graph");
    return NTG_OK;
  });
}

ntg_status ntg_rgs_isomorphic(const ntg_rgs* a, const ntg_rgs* b) {
  if (!a || !b) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    if (!ntg::ntg_isomorphic(a->value, b->value)) return set_error(NTG_NO, "not isomorphic");
    return NTG_OK;
  });
}

ntg_status ntg_rgs_dot(const ntg_rgs* r, int sntg_view, char** out) {
  if (!r) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    emit(out, sntg_view ? ntg::export_dot(ntg::ntg_to_sntg(r->value).sntg) : ntg::export_dot(r->value));
    return NTG_OK;
  });
}

ntg_status ntg_bisim(const ntg_rgs* a, const ntg_rgs* b, ntg_bisim_method method, long depth, char** report) {
  if (!a || !b) return set_error(NTG_E_ARG, "null argument");
  if (method < NTG_BISIM_NESTED || method > NTG_BISIM_BOTH) return set_error(NTG_E_ARG, "unknown method");
  return guarded([&] {
    std::ostringstream os;
    ntg_status nested = NTG_OK, fo = NTG_OK;
    if (method != NTG_BISIM_FIRSTORDER) {
      ntg::NestedBisimResult r = ntg::nested_bisim(a->value, b->value, to_depth(depth));
      switch (r.verdict) {
        case ntg::NestedVerdict::Bisimilar:
          os << "nested: bisimilar (" << r.relation.configs.size() << " configurations)\n";
          break;
        case ntg::NestedVerdict::NotBisimilar:
          nested = NTG_NO;
          os << "nested: not bisimilar: " << r.reason << "\n";
          break;
        case ntg::NestedVerdict::UnknownAtDepth:
          nested = NTG_UNKNOWN;
          os << "nested: unknown: " << r.reason << "\n";
          break;
      }
    }
    if (method != NTG_BISIM_NESTED) {
      ntg::FoGraph ga = ntg::interpret(as_ntg(a->value)), gb = ntg::interpret(as_ntg(b->value));
      fo = ntg::tg_bisimilar(ga.graph, gb.graph) ? NTG_OK : NTG_NO;
      os << "first-order: " << (fo == NTG_OK ? "bisimilar" : "not bisimilar") << "\n";
    }
    emit(report, os.str());
    if (method == NTG_BISIM_BOTH && nested != NTG_UNKNOWN && nested != fo)
      return set_error(NTG_DISAGREE, "nested and first-order verdicts disagree");
    ntg_status s = method == NTG_BISIM_FIRSTORDER ? fo : nested;
    if (s == NTG_NO) return set_error(NTG_NO, "not bisimilar");
    if (s == NTG_UNKNOWN) return set_error(NTG_UNKNOWN, "undecided within the depth bound");
    return NTG_OK;
  });
}

ntg_status ntg_hom(const ntg_rgs* a, const ntg_rgs* b, ntg_hom_level level, char** report) {
  if (!a || !b) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    std::ostringstream os;
    bool found = false;
    std::string why;
    switch (level) {
      case NTG_HOM_NTG: {
        ntg::NtgHomResult h = ntg::ntg_hom(a->value, b->value);
        found = h.map.has_value();
        why = h.reason;
        if (found) {
          ntg::FlatRgs fa(a->value), fb(b->value);
          for (ntg::VertexId v = 0; v < fa.size(); ++v) os << fa.names[v] << " -> " << fb.names[(*h.map)[v]] << "\n";
        }
        break;
      }
      case NTG_HOM_SNTG: {
        ntg::Sntg sa = ntg::ntg_to_sntg(a->value).sntg, sb = ntg::ntg_to_sntg(b->value).sntg;
        ntg::SntgHomResult h = ntg::sntg_hom(sa, sb);
        found = h.map.has_value();
        why = h.reason;
        if (found)
          for (ntg::VertexId v = 0; v < sa.size(); ++v) os << sa.names[v] << " -> " << sb.names[(*h.map)[v]] << "\n";
        break;
      }
      case NTG_HOM_FIRSTORDER: {
        require_ntg(a->value);
        require_ntg(b->value);
        ntg::FoGraph ga = ntg::interpret(a->value), gb = ntg::interpret(b->value);
        ntg::HomResult h = ntg::tg_hom(ga.graph, gb.graph);
        found = h.map.has_value();
        why = h.reason;
        if (found)
          for (ntg::VertexId v = 0; v < ga.graph.size(); ++v)
            os << ga.graph.name(v) << " -> " << gb.graph.name((*h.map)[v]) << "\n";
        break;
      }
      case NTG_HOM_NESTED: {
        ntg::NestedHomResult h = ntg::nested_hom(a->value, b->value);
        found = static_cast<bool>(h);
        why = h.reason;
        if (h.verdict == ntg::NestedVerdict::UnknownAtDepth) return set_error(NTG_UNKNOWN, why);
        if (found) {
          ntg::FlatRgs fa(a->value), fb(b->value);
          auto stack = [](const ntg::FlatRgs& f, const std::vector<ntg::VertexId>& s) {
            std::string out;
            for (ntg::VertexId v : s) out += f.names[v] + " ";
            return out;
          };
          for (const auto& c : h.graph)
            os << "[" << stack(fa, c.stack1) << "] " << fa.names[c.v1] << " -> [" << stack(fb, c.stack2) << "] "
               << fb.names[c.v2] << "\n";
        }
        break;
      }
      default:
        return set_error(NTG_E_ARG, "unknown level");
    }
    emit(report, found ? os.str() : "no homomorphism: " + why + "\n");
    if (!found) return set_error(NTG_NO, "no homomorphism: " + why);
    return NTG_OK;
  });
}

ntg_status ntg_fo_parse(const char* text, ntg_fo** out) {
  if (!text || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    *out = new ntg_fo{ntg::parse_fo(text)};
    return NTG_OK;
  });
}

void ntg_fo_free(ntg_fo* g) { delete g; }

size_t ntg_fo_size(const ntg_fo* g) { return g ? g->value.graph.size() : 0; }

ntg_status ntg_fo_print(const ntg_fo* g, char** out) {
  if (!g) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    emit(out, ntg::print_fo(g->value));
    return NTG_OK;
  });
}

ntg_status ntg_fo_is_member(const ntg_fo* g, char** reason) {
  if (!g) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    ntg::Membership m = ntg::is_rg_member(g->value.graph);
    emit(reason, m ? "member of the RG class" : m.reason);
    if (!m) return set_error(NTG_NO, m.reason);
    return NTG_OK;
  });
}

ntg_status ntg_fo_represent(const ntg_fo* g, ntg_rgs** out) {
  if (!g || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    *out = new ntg_rgs{ntg::represent(g->value)};
    return NTG_OK;
  });
}

ntg_status ntg_fo_collapse(const ntg_fo* g, ntg_fo** out) {
  if (!g || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    *out = new ntg_fo{{g->value.atomic, ntg::tg_collapse(g->value.graph).graph}};
    return NTG_OK;
  });
}

ntg_status ntg_fo_rg_collapse(const ntg_fo* g, ntg_fo** out) {
  if (!g || !out) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    *out = new ntg_fo{{g->value.atomic, ntg::rg_collapse(g->value.graph).graph}};
    return NTG_OK;
  });
}

ntg_status ntg_fo_bisimilar(const ntg_fo* a, const ntg_fo* b) {
  if (!a || !b) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    if (!ntg::tg_bisimilar(a->value.graph, b->value.graph)) return set_error(NTG_NO, "not bisimilar");
    return NTG_OK;
  });
}

ntg_status ntg_fo_dot(const ntg_fo* g, char** out) {
  if (!g) return set_error(NTG_E_ARG, "null argument");
  return guarded([&] {
    emit(out, ntg::export_dot(g->value));
    return NTG_OK;
  });
}

}  // extern "C"
