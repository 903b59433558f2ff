// Command-line front end: expansions, matchings, F-polynomials, g-vectors and
// oracle verification for arcs on triangulated surfaces.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snakes/snakes.hpp"

namespace {

using namespace snakes;

enum Exit : int { Ok = 0, Mismatch = 1, BadInput = 2, Invalid = 3, NotFound = 4, Bug = 5 };

struct Options {
  std::string surface;
  std::string arc;
  std::string snake;
  int flip_label = 0;
  int max_depth = -1;
  bool json = false;
  bool terms = false;
};

/// Structural violations plus disagreement with any declared genus, boundary
/// count or marked-point count.
std::vector<std::string> surface_violations(const Triangulation& t) {
  auto out = validate(t);
  if (!out.empty()) return out;
  const Topology top = topology(t);
  if (top.punctures != 0) out.push_back("surface has " + std::to_string(top.punctures) + " punctures");
  auto declared = [&](const char* what, const std::optional<int>& want, int got) {
    if (want && *want != got)
      out.push_back(std::string(what) + " declared " + std::to_string(*want) + " but the triangles give " +
                    std::to_string(got));
  };
  declared("genus", t.genus, top.genus);
  declared("boundaries", t.boundaries, top.boundaries);
  declared("marked", t.marked, top.marked);
  if (t.genus && t.boundaries && t.marked) {
    const RankCheck r = rank_check(t, *t.genus, *t.boundaries, *t.marked);
    if (!r.ok)
      out.push_back("rank formula gives n = " + std::to_string(r.expected_n) + ", m = " +
                    std::to_string(r.expected_m) + " but the file has n = " + std::to_string(r.actual_n) +
                    ", m = " + std::to_string(r.actual_m));
  }
  return out;
}

Triangulation load_surface(const std::string& path) {
  Triangulation t = parse_triangulation(read_json_file(path), path);
  auto v = surface_violations(t);
  if (!v.empty()) throw ValidationError(std::move(v));
  return t;
}

ArcSpec load_arc(const std::string& path, const Triangulation& t) {
  ArcSpec a = parse_arc(read_json_file(path), path);
  connecting_arcs(t, a);
  return a;
}

SnakeGraph load_graph(const Options& o) {
  if (!o.snake.empty()) return parse_snake(read_json_file(o.snake), o.snake);
  const Triangulation t = load_surface(o.surface);
  return build_snake(t, load_arc(o.arc, t));
}

std::string y_text(const YMonomial& y) {
  ExpVector e(y.size());
  e.yexp = y;
  return render_monomial(e);
}

std::string joined(const std::vector<int>& v, const char* sep = " ") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

Json expansion_json(const Expansion& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms)
    terms.push_back({{"path", t.path_labels}, {"numerator", to_json(t.numerator)}, {"text", render_monomial(t.numerator)}});
  return Json{{"laurent", to_json(e.laurent)}, {"denominator", e.denominator}, {"terms", terms}};
}

void print_expansion(const Expansion& e, const Options& o) {
  if (o.json) {
    Json j = expansion_json(e);
    if (!o.terms) j.erase("terms");
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (o.terms)
    for (const auto& t : e.terms) std::cout << joined(t.path_labels) << " | " << render_monomial(t.numerator) << "\n";
  std::cout << e.laurent.to_string() << "\n";
}

int run_expand(const Options& o, bool subgraphs) {
  const SnakeGraph g = load_graph(o);
  print_expansion(subgraphs ? expand_via_subgraphs(g) : expand(g), o);
  return Ok;
}

int run_matchings(const Options& o) {
  const SnakeGraph g = load_graph(o);
  const Matching minus = boundary_matchings(g).minus;
  Json all = Json::array();
  for (const Matching& m : enumerate_matchings(g)) {
    const ExpVector w = weight(g, m);
    const YMonomial y = y_monomial_oriented(g, m);
    const auto h = height_function(g, m, minus);
    if (o.json) {
      all.push_back({{"edges", to_json(g, m)}, {"weight", render_monomial(w)}, {"y", y}, {"heights", h}});
      continue;
    }
    std::ostringstream edges;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      const Edge& e = g.edges[m.edges[i]];
      edges << (i ? " " : "") << "(" << e.u.x << "," << e.u.y << ")-(" << e.v.x << "," << e.v.y << "):" << e.label;
    }
    std::cout << edges.str() << " | " << render_monomial(w) << " | " << y_text(y) << " | " << joined(h) << "\n";
  }
  if (o.json) std::cout << all.dump(2) << "\n";
  return Ok;
}

int run_fpoly(const Options& o) {
  const LaurentPoly f = f_polynomial(load_graph(o));
  std::cout << (o.json ? to_json(f).dump(2) : f.to_string()) << "\n";
  return Ok;
}

int run_gvec(const Options& o) {
  const Triangulation t = load_surface(o.surface);
  const auto g = g_vector(t, load_arc(o.arc, t));
  if (o.json)
    std::cout << Json(g).dump() << "\n";
  else
    std::cout << joined(std::vector<int>(g.begin(), g.end())) << "\n";
  return Ok;
}

int run_count(const Options& o) {
  std::cout << count_matchings(load_graph(o)).str() << "\n";
  return Ok;
}

int run_verify(const Options& o) {
  const Triangulation t = load_surface(o.surface);
  const ArcSpec a = load_arc(o.arc, t);
  const int depth = o.max_depth >= 0 ? o.max_depth : default_max_depth(a);
  const auto found = find_flip_sequence(t, a, depth);
  if (!found) {
    std::cerr << "no flip sequence within depth " << depth << "; raise --max-depth\n";
    return NotFound;
  }
  const LaurentPoly matching = expand(t, a).laurent;
  const LaurentPoly subgraph = expand_via_subgraphs(t, a).laurent;
  const LaurentPoly oracle = oracle_expand(t, a, depth);
  const bool ok = matching == oracle && matching == subgraph;
  if (o.json) {
    std::cout << Json{{"matching", to_json(matching)},
                      {"subgraph", to_json(subgraph)},
                      {"oracle", to_json(oracle)},
                      {"flips", found->flips},
                      {"equal", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "matching: " << matching.to_string() << "\n";
    std::cout << "subgraph: " << subgraph.to_string() << "\n";
    std::cout << "oracle:   " << oracle.to_string() << "\n";
    std::cout << "flips:    " << joined(found->flips) << "\n";
    std::cout << (ok ? "equal" : "MISMATCH") << "\n";
  }
  return ok ? Ok : Mismatch;
}

int run_flip(const Options& o) {
  const Triangulation t = load_surface(o.surface);
  const auto [flipped, q] = flip(t, o.flip_label);
  Json j{{"triangulation", to_json(flipped)},
         {"quadrilateral",
          {{"diagonal", q.diagonal}, {"rho", {q.rho1, q.rho2}}, {"sigma", {q.sigma1, q.sigma2}}}},
         {"b_matrix", Json::array()}};
  const IntMatrix b = b_matrix(flipped);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::vector<long> row;
    for (std::size_t k = 0; k < b.cols(); ++k) row.push_back(b(i, k));
    j["b_matrix"].push_back(row);
  }
  if (!o.arc.empty()) {
    const ArcOrLabel moved = transport_arcspec(t, load_arc(o.arc, t), q);
    if (const ArcSpec* a = std::get_if<ArcSpec>(&moved))
      j["arc"] = to_json(*a);
    else
      j["arc"] = Json{{"label", std::get<int>(moved)}};
  }
  std::cout << j.dump(2) << "\n";
  return Ok;
}

int run_snake(const Options& o) {
  std::cout << to_json(load_graph(o)).dump(2) << "\n";
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laurent expansions of cluster variables from snake graphs"};
  app.require_subcommand(1);
  Options o;

  auto with_arc = [&](CLI::App* cmd) {
    cmd->add_option("surface", o.surface, "triangulation JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("arc", o.arc, "arc JSON")->required()->check(CLI::ExistingFile);
    cmd->add_flag("--json", o.json, "machine-readable output");
  };
  auto with_graph = [&](CLI::App* cmd) {
    cmd->add_option("surface", o.surface, "triangulation JSON")->check(CLI::ExistingFile);
    cmd->add_option("arc", o.arc, "arc JSON")->check(CLI::ExistingFile);
    cmd->add_option("--snake", o.snake, "snake graph dump instead of surface and arc")->check(CLI::ExistingFile);
    cmd->add_flag("--json", o.json, "machine-readable output");
  };

  CLI::App* expand_cmd = app.add_subcommand("expand", "Laurent expansion via perfect matchings");
  with_graph(expand_cmd);
  expand_cmd->add_flag("--terms", o.terms, "list the term of every matching");
  CLI::App* sub_cmd = app.add_subcommand("subgraph-expand", "Laurent expansion via unions of tiles");
  with_graph(sub_cmd);
  sub_cmd->add_flag("--terms", o.terms, "list the term of every tile union");
  CLI::App* match_cmd = app.add_subcommand("matchings", "perfect matchings with weight, y-monomial and heights");
  with_graph(match_cmd);
  CLI::App* f_cmd = app.add_subcommand("fpoly", "F-polynomial");
  with_graph(f_cmd);
  CLI::App* count_cmd = app.add_subcommand("count", "number of perfect matchings");
  with_graph(count_cmd);
  CLI::App* snake_cmd = app.add_subcommand("snake", "dump the snake graph as JSON");
  with_graph(snake_cmd);
  CLI::App* g_cmd = app.add_subcommand("gvec", "g-vector");
  with_arc(g_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "compare with seed mutation along a flip sequence");
  with_arc(verify_cmd);
  verify_cmd->add_option("--max-depth", o.max_depth, "flip search depth (default: crossings + 4)")
      ->check(CLI::NonNegativeNumber);
  CLI::App* flip_cmd = app.add_subcommand("flip", "flip one arc of the triangulation");
  flip_cmd->add_option("surface", o.surface, "triangulation JSON")->required()->check(CLI::ExistingFile);
  flip_cmd->add_option("label", o.flip_label, "interior arc to flip")->required();
  flip_cmd->add_option("--arc", o.arc, "arc JSON to carry across the flip")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }

  try {
    for (CLI::App* cmd : {expand_cmd, sub_cmd, match_cmd, f_cmd, count_cmd, snake_cmd})
      if (cmd->parsed() && o.snake.empty() && (o.surface.empty() || o.arc.empty())) {
        std::cerr << "error: give a surface and an arc, or --snake\n";
        return BadInput;
      }
    if (expand_cmd->parsed()) return run_expand(o, false);
    if (sub_cmd->parsed()) return run_expand(o, true);
    if (match_cmd->parsed()) return run_matchings(o);
    if (f_cmd->parsed()) return run_fpoly(o);
    if (count_cmd->parsed()) return run_count(o);
    if (snake_cmd->parsed()) return run_snake(o);
    if (g_cmd->parsed()) return run_gvec(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (flip_cmd->parsed()) return run_flip(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return BadInput;
  } catch (const ValidationError& e) {
    for (const std::string& v : e.violations()) std::cerr << "violation: " << v << "\n";
    return Invalid;
  } catch (const ArcError& e) {
    std::cerr << "invalid arc at crossing " << e.position() << ": " << e.what() << "\n";
    return Invalid;
  } catch (const LabelError& e) {
    std::cerr << "invalid label: " << e.what() << "\n";
    return Invalid;
  } catch (const NotFoundError& e) {
    std::cerr << e.what() << "\n";
    return NotFound;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Bug;
  }
  return Ok;
}
