#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ntg/io.hpp"

namespace ntg::test {

inline std::string fixture_path(const std::string& name) { return std::string(NTG_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Rgs load_rgs(const std::string& name) { return parse_rgs(read_fixture(name)); }
inline FoGraph load_fo(const std::string& name) { return parse_fo(read_fixture(name)); }

// Term graph over atomic symbols whose arity is the number of successors.
inline TermGraph make_tg(const std::vector<std::pair<std::string, std::vector<VertexId>>>& spec, VertexId root = 0) {
  std::vector<Label> labels;
  std::vector<std::vector<VertexId>> args;
  for (const auto& [sym, a] : spec) {
    labels.push_back(Label::atomic(sym, static_cast<std::uint32_t>(a.size())));
    args.push_back(a);
  }
  return TermGraph(std::move(labels), std::move(args), root);
}

// The corpus of finite ntgs used throughout the suites.
inline std::vector<std::pair<std::string, Rgs>> ntg_corpus() {
  std::vector<std::pair<std::string, Rgs>> out;
  for (const char* f : {"N.rgs", "N_triv.rgs", "N_triv_d.rgs", "chain_a.rgs", "chain_b.rgs", "chain_c.rgs",
                        "chain_d.rgs"})
    out.emplace_back(f, load_rgs(f));
  out.emplace_back("unfold(R0.rgs)", unfold_to_ntg(load_rgs("R0.rgs")).ntg);
  return out;
}

}  // namespace ntg::test
