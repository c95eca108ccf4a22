#include "edp3/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace edp3 {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

long parse_int(const std::string& tok, const std::string& what, int line_no) {
  size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                     tok + "'");
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  long n = 0, m = 0;
  long edges_seen = 0;
  int demands_seen = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      if (tokens.size() != 4 || tokens[1] != "edp")
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'p edp <n> <m>'");
      n = parse_int(tokens[2], "node count", line_no);
      m = parse_int(tokens[3], "edge count", line_no);
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative count");
      inst.graph = MultiGraph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError("line " + std::to_string(line_no) + ": '" + kind +
                       "' before header");
    if (kind == "e" || kind == "d") {
      if (tokens.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": expected '" + kind +
                         " <a> <b>'");
      long a = parse_int(tokens[1], "node id", line_no);
      long b = parse_int(tokens[2], "node id", line_no);
      if (a < 1 || a > n || b < 1 || b > n)
        throw ParseError("line " + std::to_string(line_no) + ": node id out of range");
      if (kind == "e") {
        if (a == b)
          throw ParseError("line " + std::to_string(line_no) +
                           ": loop edges are not allowed");
        if (++edges_seen > m)
          throw ParseError("line " + std::to_string(line_no) +
                           ": more edges than the header declares");
        inst.graph.add_edge(static_cast<NodeId>(a - 1), static_cast<NodeId>(b - 1));
      } else {
        if (++demands_seen > 3)
          throw ParseError("line " + std::to_string(line_no) +
                           ": more than three demand lines");
        inst.demands.push_back({static_cast<NodeId>(a - 1),
                                static_cast<NodeId>(b - 1), demands_seen});
      }
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" +
                     kind + "'");
  }
  if (!have_header) throw ParseError("missing 'p edp' header");
  if (edges_seen != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges_seen));
  if (demands_seen != 3)
    throw ParseError("expected exactly three 'd' lines, found " +
                     std::to_string(demands_seen));
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_instance(ss);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string render_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p edp " << inst.graph.node_count() << ' ' << inst.graph.live_edge_count()
      << '\n';
  for (EdgeId e = 0; e < inst.graph.edge_slots(); ++e) {
    if (!inst.graph.edge_alive(e)) continue;
    out << "e " << inst.graph.edge_u(e) + 1 << ' ' << inst.graph.edge_v(e) + 1
        << '\n';
  }
  for (const DemandPair& d : inst.demands)
    out << "d " << d.s + 1 << ' ' << d.t + 1 << '\n';
  return out.str();
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << render_instance(inst);
}

std::string render_solution(const Solution& sol) {
  std::ostringstream out;
  for (const PathSeq& p : sol.paths) {
    for (size_t i = 0; i < p.nodes.size(); ++i)
      out << (i ? " " : "") << p.nodes[i] + 1;
    out << '\n';
  }
  return out.str();
}

std::optional<Solution> parse_solution_text(const Instance& inst,
                                            const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  std::vector<std::vector<NodeId>> rows;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    std::vector<NodeId> nodes;
    for (const std::string& tok : tokens) {
      long v = parse_int(tok, "node id", line_no);
      if (v < 1 || v > inst.graph.node_count())
        throw ParseError("line " + std::to_string(line_no) + ": node id out of range");
      nodes.push_back(static_cast<NodeId>(v - 1));
    }
    rows.push_back(std::move(nodes));
  }
  if (rows.size() != 3) throw ParseError("expected exactly three path lines");

  // Assign concrete edges greedily; parallel edges are interchangeable, so
  // taking any unused one is exact.
  std::vector<char> used(inst.graph.edge_slots(), 0);
  Solution sol;
  for (int i = 0; i < 3; ++i) {
    PathSeq p;
    p.nodes = rows[i];
    for (size_t step = 0; step + 1 < rows[i].size(); ++step) {
      NodeId a = rows[i][step], b = rows[i][step + 1];
      EdgeId pick = -1;
      for (const auto& inc : inst.graph.incident(a)) {
        if (!inst.graph.edge_alive(inc.edge) || used[inc.edge]) continue;
        if (inc.other == b) {
          pick = inc.edge;
          break;
        }
      }
      if (pick < 0) return std::nullopt;
      used[pick] = 1;
      p.edges.push_back(pick);
    }
    sol.paths[i] = std::move(p);
  }
  return sol;
}

}  // namespace edp3
