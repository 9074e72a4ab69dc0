#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grajac/analysis.hpp"
#include "grajac/chipfiring.hpp"
#include "grajac/families.hpp"
#include "grajac/json_io.hpp"
#include "grajac/matrix.hpp"
#include "grajac/oracles.hpp"

namespace {

using namespace grajac;
using nlohmann::json;

Divisor parse_divisor(const std::string& s) {
  Divisor d;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      d.push_back(Int(tok));
    } catch (const std::invalid_argument&) {
      fail(Errc::ParseError, "bad divisor entry: " + tok);
    }
  }
  if (d.empty()) fail(Errc::ParseError, "empty divisor");
  return d;
}

std::string join_divisor(const std::vector<Int>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += d[i].get_str();
  }
  return out;
}

void print_group(const AbelianGroup& g, const std::string& format) {
  if (format == "json") {
    std::cout << group_to_json(g).dump() << "\n";
  } else {
    std::cout << render(g) << "\n";
  }
}

int default_jobs() {
  if (const char* env = std::getenv("GRAJAC_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Picard groups and Jacobians of directed multigraphs"};
  app.require_subcommand(1);

  std::string graph_path, matrix_path, format = "text";
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* pic = app.add_subcommand("pic", "Picard group of a graph");
  pic->add_option("graph", graph_path)->required();
  auto* jac = app.add_subcommand("jac", "Jacobian (torsion of Pic)");
  jac->add_option("graph", graph_path)->required();

  bool transforms = false;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix");
  snf_cmd->add_option("matrix", matrix_path)->required();
  snf_cmd->add_flag("--transforms", transforms, "also emit the unimodular P and Q");

  auto* scc_cmd = app.add_subcommand("scc", "Strong components and terminal flags");
  scc_cmd->add_option("graph", graph_path)->required();

  // gen: one sub-subcommand per family, graph JSON on stdout
  auto* gen = app.add_subcommand("gen", "Generate a graph family instance");
  gen->require_subcommand(1);
  int n = 0, k = 0, p1 = 1, vertex = 1;
  std::uint64_t seed = 1;
  double bi_prob = 0.4;
  std::string word, variant = "undirected", rule = "random", layers_arg;

  auto* g_cycle = gen->add_subcommand("cycle", "Cycle from an orientation word over F/B/D");
  g_cycle->add_option("--orientation", word)->required();
  auto* g_two = gen->add_subcommand("two-path", "Two opposite paths into a sink");
  g_two->add_option("--n", n)->required();
  g_two->add_option("--k", k)->required();
  g_two->add_option("--p1", p1)->capture_default_str();
  auto* g_obj4 = gen->add_subcommand("near-sink-cycle", "Cycle with Jac = Z_{n-1}");
  g_obj4->add_option("--n", n)->required();
  auto* g_final = gen->add_subcommand("max-torsion-cycle", "Cycle with Jac = Z_n");
  g_final->add_option("--n", n)->required();
  auto* g_wheel = gen->add_subcommand("wheel", "Wheel with an axle and bidirectional rim");
  g_wheel->add_option("--n", n)->required();
  g_wheel->add_option("--variant", variant)
      ->check(CLI::IsMember({"undirected", "spokes-in", "spokes-out"}));
  auto* g_multi = gen->add_subcommand("multipartite", "Complete layered one-way flow");
  g_multi->add_option("--layers", layers_arg)->required();
  auto* g_tree = gen->add_subcommand("tree", "Random directed tree");
  g_tree->add_option("--n", n)->required();
  g_tree->add_option("--seed", seed)->capture_default_str();
  g_tree->add_option("--bi-prob", bi_prob)->capture_default_str();
  g_tree->add_option("--rule", rule)->check(CLI::IsMember({"random", "toward-root", "away-from-root"}));
  auto* g_ext0 = gen->add_subcommand("extend0", "Degree-zero extension at a sink");
  g_ext0->add_option("graph", graph_path)->required();
  g_ext0->add_option("--vertex", vertex)->required();
  auto* g_ext1 = gen->add_subcommand("extend1", "Degree-one extension at a vertex");
  g_ext1->add_option("graph", graph_path)->required();
  g_ext1->add_option("--vertex", vertex)->required();
  auto* g_mn = gen->add_subcommand("mn", "Tridiagonal (2,-1) matrix, as matrix JSON");
  g_mn->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "Sweep a family and compare against predictions");
  std::string family;
  SweepOptions opts;
  opts.jobs = default_jobs();
  verify->add_option("family", family)->required();
  verify->add_option("--n-max", opts.n_max)->capture_default_str();
  verify->add_option("--count", opts.count)->capture_default_str();
  verify->add_option("--seed", opts.seed)->capture_default_str();
  verify->add_option("--bi-prob", opts.bidirectional_prob)->capture_default_str();
  verify->add_option("--jobs", opts.jobs)->check(CLI::PositiveNumber);
  std::string verify_layers;
  verify->add_option("--layers", verify_layers);

  auto* chip = app.add_subcommand("chip", "Chip-firing operations");
  chip->require_subcommand(1);
  std::string div1, div2;
  bool borrow = false, lend = false;
  auto* c_equiv = chip->add_subcommand("equiv", "Are two divisors linearly equivalent?");
  c_equiv->add_option("graph", graph_path)->required();
  c_equiv->add_option("d1", div1)->required();
  c_equiv->add_option("d2", div2)->required();
  auto* c_class = chip->add_subcommand("class", "Canonical Picard-class label of a divisor");
  c_class->add_option("graph", graph_path)->required();
  c_class->add_option("d1", div1)->required();
  auto* c_fire = chip->add_subcommand("fire", "Fire one vertex");
  c_fire->add_option("graph", graph_path)->required();
  c_fire->add_option("d1", div1)->required();
  c_fire->add_option("--vertex", vertex)->required();
  c_fire->add_flag("--lend", lend);
  c_fire->add_flag("--borrow", borrow);

  auto* explore = app.add_subcommand("explore", "Multipartite SNF dumps with no prediction");
  std::string explore_layers;
  explore->add_option("--layers", explore_layers);
  explore->add_option("--n-max", opts.n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto parse_layers = [](const std::string& s) {
    std::vector<int> layers;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) layers.push_back(std::stoi(tok));
    return layers;
  };

  try {
    if (*pic) {
      print_group(picard_group(graph_from_json(read_json_file(graph_path))), format);
    } else if (*jac) {
      print_group(jacobian(graph_from_json(read_json_file(graph_path))), format);
    } else if (*snf_cmd) {
      SnfResult r = smith_normal_form(matrix_from_json(read_json_file(matrix_path)));
      if (transforms) {
        std::cout << json{{"d", matrix_to_json(r.d)},
                          {"p", matrix_to_json(r.p)},
                          {"q", matrix_to_json(r.q)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << matrix_to_json(r.d).dump() << "\n";
      }
    } else if (*scc_cmd) {
      SccDecomposition d = scc(graph_from_json(read_json_file(graph_path)));
      if (format == "json") {
        std::cout << json{{"components", d.components}, {"terminal", d.terminal}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          std::string line;
          for (int v : d.components[i]) line += std::to_string(v) + " ";
          line += d.terminal[i] ? "(terminal)" : "(non-terminal)";
          std::cout << line << "\n";
        }
      }
    } else if (*gen) {
      if (*g_mn) {
        std::cout << matrix_to_json(matrix_M(n)).dump() << "\n";
        return 0;
      }
      DirectedMultigraph g = [&] {
        if (*g_cycle) return gen_cycle(word);
        if (*g_two) return gen_two_opposite_paths(n, k, p1);
        if (*g_obj4) return gen_obj4_cycle(n);
        if (*g_final) return gen_final_lemma_cycle(n);
        if (*g_wheel) {
          WheelVariant v = variant == "spokes-in"    ? WheelVariant::SpokesIn
                           : variant == "spokes-out" ? WheelVariant::SpokesOut
                                                     : WheelVariant::Undirected;
          return gen_wheel(n, v);
        }
        if (*g_multi) return gen_multipartite(parse_layers(layers_arg));
        if (*g_tree) {
          TreeDirectionRule r = rule == "toward-root"     ? TreeDirectionRule::TowardRoot
                                : rule == "away-from-root" ? TreeDirectionRule::AwayFromRoot
                                                           : TreeDirectionRule::Random;
          return gen_random_tree(n, seed, bi_prob, r);
        }
        DirectedMultigraph base = graph_from_json(read_json_file(graph_path));
        return *g_ext0 ? degree_zero_extension(base, vertex) : degree_one_extension(base, vertex);
      }();
      std::cout << graph_to_json(g).dump() << "\n";
    } else if (*verify || *explore) {
      if (*explore) family = "multipartite-explore";
      const std::string& layer_str = *explore ? explore_layers : verify_layers;
      if (!layer_str.empty()) opts.layers = parse_layers(layer_str);
      std::vector<TheoremCheck> results = run_sweep(family, opts);
      long long passed = 0;
      for (const TheoremCheck& c : results) {
        std::cout << check_to_json(c).dump() << "\n";
        if (c.pass) ++passed;
      }
      std::cout << "passed " << passed << " / total " << results.size() << "\n";
      if (passed != static_cast<long long>(results.size())) return 1;
    } else if (*chip) {
      DirectedMultigraph g = graph_from_json(read_json_file(graph_path));
      Divisor d1 = parse_divisor(div1);
      if (d1.size() != static_cast<std::size_t>(g.vertex_count())) {
        fail(Errc::LengthMismatch, "divisor length must equal the vertex count");
      }
      if (*c_equiv) {
        Divisor d2 = parse_divisor(div2);
        if (d2.size() != d1.size()) fail(Errc::LengthMismatch, "divisor lengths differ");
        EquivalenceResult r = equivalent(g, d1, d2);
        if (format == "json") {
          json out{{"equivalent", r.equivalent}};
          if (r.equivalent) {
            json w = json::array();
            for (const Int& x : r.witness) w.push_back(int_to_json(x));
            out["witness"] = w;
          }
          std::cout << out.dump() << "\n";
        } else {
          std::cout << (r.equivalent ? "true" : "false") << "\n";
          if (r.equivalent) std::cout << "witness " << join_divisor(r.witness) << "\n";
        }
      } else if (*c_class) {
        PicardClass pc = picard_class(g, d1);
        if (format == "json") {
          auto arr = [](const std::vector<Int>& v) {
            json a = json::array();
            for (const Int& x : v) a.push_back(int_to_json(x));
            return a;
          };
          std::cout << json{{"free_coords", arr(pc.free_coords)},
                            {"residues", arr(pc.residues)},
                            {"moduli", arr(pc.moduli)}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "free " << join_divisor(pc.free_coords) << "\n";
          for (std::size_t i = 0; i < pc.residues.size(); ++i) {
            std::cout << pc.residues[i].get_str() << " mod " << pc.moduli[i].get_str() << "\n";
          }
        }
      } else {
        if (lend == borrow) fail(Errc::ParseError, "pass exactly one of --lend / --borrow");
        Divisor out = fire(g, d1, vertex, lend ? FireDirection::Lend : FireDirection::Borrow);
        std::cout << join_divisor(out) << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
