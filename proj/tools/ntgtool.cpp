// Command-line front end. Each subcommand is a thin wrapper over one call
// of the C interface.
//
// Exit codes: 0 ok, 1 property fails, 2 parse or usage error,
// 3 oracle disagreement or internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ntg/ntg.h"

namespace {

struct RgsDeleter {
  void operator()(ntg_rgs* r) const { ntg_rgs_free(r); }
};
struct FoDeleter {
  void operator()(ntg_fo* g) const { ntg_fo_free(g); }
};
using RgsPtr = std::unique_ptr<ntg_rgs, RgsDeleter>;
using FoPtr = std::unique_ptr<ntg_fo, FoDeleter>;

struct Failure {
  int code;
};

int exit_code(ntg_status s) {
  switch (s) {
    case NTG_OK: return 0;
    case NTG_NO:
    case NTG_UNKNOWN:
    case NTG_E_PRECONDITION: return 1;
    case NTG_E_PARSE:
    case NTG_E_INVALID:
    case NTG_E_DEPTH:
    case NTG_E_ARG: return 2;
    case NTG_DISAGREE:
    case NTG_E_INTERNAL: return 3;
  }
  return 3;
}

// Throws Failure for anything but NTG_OK, after reporting on stderr.
void check(ntg_status s) {
  if (s == NTG_OK) return;
  std::cerr << "ntgtool: " << ntg_status_name(s);
  if (*ntg_last_error()) std::cerr << ": " << ntg_last_error();
  std::cerr << "\n";
  throw Failure{exit_code(s)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "ntgtool: cannot read " << path << "\n";
    throw Failure{2};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RgsPtr load_rgs(const std::string& path) {
  ntg_rgs* r = nullptr;
  check(ntg_rgs_parse(slurp(path).c_str(), &r));
  return RgsPtr(r);
}

FoPtr load_fo(const std::string& path) {
  ntg_fo* g = nullptr;
  check(ntg_fo_parse(slurp(path).c_str(), &g));
  return FoPtr(g);
}

bool looks_first_order(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("//", 0) == 0) {
      std::getline(in, tok);
      continue;
    }
    if (tok == "tg" || tok.rfind("tg{", 0) == 0) return true;
    if (tok == "def" || tok == "root") return false;
  }
  return false;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  // Writes and frees a library string; keeps going on NTG_NO so that
  // reports reach the user.
  void write(char* s) {
    if (!s) return;
    std::string text(s);
    ntg_string_free(s);
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary);
    if (!out) {
      std::cerr << "ntgtool: cannot write " << path_ << "\n";
      throw Failure{2};
    }
    out << text;
  }

 private:
  std::string path_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested term graph toolkit"};
  app.require_subcommand(1);
  std::string file, file2, out_path, method = "nested", level = "ntg";
  long depth = -1;
  bool sntg_view = false;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "input document")->required();
    return sub;
  };
  auto* validate = add("validate", "check a specification for well-formedness");
  auto* deps = add("deps", "list the dependency steps");
  auto* is_ntg = add("is-ntg", "decide whether a specification is a nested term graph");
  auto* unfold = add("unfold", "unfold a specification into a nested term graph");
  unfold->add_option("--depth", depth, "nesting bound, required for cyclic input");
  unfold->add_option("-o,--output", out_path);
  auto* sntg = add("sntg", "print the structured form of an ntg");
  auto* interpret = add("interpret", "first-order interpretation of an ntg");
  interpret->add_option("-o,--output", out_path);
  auto* represent = add("represent", "rebuild an ntg from a first-order document");
  represent->add_option("-o,--output", out_path);
  auto* collapse = add("collapse", "maximally shared bisimilar ntg");
  collapse->add_option("-o,--output", out_path);
  auto* bisim = add("bisim", "decide bisimilarity of two specifications");
  bisim->add_option("file2", file2)->required();
  bisim->add_option("--method", method)->check(CLI::IsMember({"nested", "firstorder", "both"}));
  bisim->add_option("--depth", depth, "nesting bound for cyclic input");
  auto* hom = add("hom", "find a homomorphism from the first ntg to the second");
  hom->add_option("file2", file2)->required();
  hom->add_option("--level", level)->check(CLI::IsMember({"ntg", "sntg", "fo", "nested"}));
  auto* roundtrip = add("roundtrip", "interpret, represent and compare");
  auto* dot = add("dot", "Graphviz rendering of a specification or first-order document");
  dot->add_flag("--sntg", sntg_view, "render the structured form");
  dot->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Output out(out_path);
    char* text = nullptr;
    if (validate->parsed()) {
      ntg_status s = ntg_rgs_check(slurp(file).c_str(), &text);
      if (s == NTG_NO) {
        if (text) std::cerr << text;
        ntg_string_free(text);
        return 1;
      }
      check(s);
      if (text) std::cerr << text;
      ntg_string_free(text);
      std::cout << "ok\n";
    } else if (deps->parsed()) {
      RgsPtr r = load_rgs(file);
      check(ntg_rgs_deps(r.get(), &text));
      out.write(text);
    } else if (is_ntg->parsed()) {
      RgsPtr r = load_rgs(file);
      check(ntg_rgs_is_ntg(r.get(), &text));
      out.write(text);
      std::cout << "\n";
    } else if (unfold->parsed()) {
      RgsPtr r = load_rgs(file);
      ntg_rgs* u = nullptr;
      int truncated = 0;
      check(ntg_rgs_unfold(r.get(), depth, &u, &truncated));
      RgsPtr owned(u);
      check(ntg_rgs_print(u, &text));
      out.write(text);
      if (truncated) std::cerr << "ntgtool: unfolding truncated at depth " << depth << "\n";
    } else if (sntg->parsed()) {
      RgsPtr r = load_rgs(file);
      check(ntg_rgs_sntg(r.get(), &text));
      out.write(text);
    } else if (interpret->parsed()) {
      RgsPtr r = load_rgs(file);
      ntg_fo* g = nullptr;
      check(ntg_rgs_interpret(r.get(), &g));
      FoPtr owned(g);
      check(ntg_fo_print(g, &text));
      out.write(text);
    } else if (represent->parsed()) {
      FoPtr g = load_fo(file);
      ntg_rgs* r = nullptr;
      check(ntg_fo_represent(g.get(), &r));
      RgsPtr owned(r);
      check(ntg_rgs_print(r, &text));
      out.write(text);
    } else if (collapse->parsed()) {
      RgsPtr r = load_rgs(file);
      ntg_rgs* c = nullptr;
      check(ntg_rgs_collapse(r.get(), &c));
      RgsPtr owned(c);
      check(ntg_rgs_print(c, &text));
      out.write(text);
    } else if (bisim->parsed()) {
      RgsPtr a = load_rgs(file), b = load_rgs(file2);
      ntg_bisim_method m = method == "nested"       ? NTG_BISIM_NESTED
                           : method == "firstorder" ? NTG_BISIM_FIRSTORDER
                                                    : NTG_BISIM_BOTH;
      ntg_status s = ntg_bisim(a.get(), b.get(), m, depth, &text);
      out.write(text);
      check(s);
    } else if (hom->parsed()) {
      RgsPtr a = load_rgs(file), b = load_rgs(file2);
      ntg_hom_level l = level == "ntg" ? NTG_HOM_NTG
                        : level == "sntg" ? NTG_HOM_SNTG
                        : level == "fo"   ? NTG_HOM_FIRSTORDER
                                          : NTG_HOM_NESTED;
      ntg_status s = ntg_hom(a.get(), b.get(), l, &text);
      out.write(text);
      check(s);
    } else if (roundtrip->parsed()) {
      RgsPtr r = load_rgs(file);
      ntg_status s = ntg_rgs_roundtrip(r.get(), &text);
      out.write(text);
      check(s);
    } else if (dot->parsed()) {
      std::string src = slurp(file);
      if (looks_first_order(src)) {
        FoPtr g = load_fo(file);
        check(ntg_fo_dot(g.get(), &text));
      } else {
        RgsPtr r = load_rgs(file);
        check(ntg_rgs_dot(r.get(), sntg_view ? 1 : 0, &text));
      }
      out.write(text);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
