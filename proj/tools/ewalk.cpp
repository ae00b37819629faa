// ewalk: command-line front end for the embedding / quantum-walk library.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "embedwalk/comfortability.hpp"
#include "embedwalk/covering.hpp"
#include "embedwalk/enumeration.hpp"
#include "embedwalk/errors.hpp"
#include "embedwalk/io.hpp"
#include "embedwalk/scattering.hpp"
#include "embedwalk/walk.hpp"

using json = nlohmann::ordered_json;
using namespace ew;

namespace {

enum Exit { ok = 0, parse_failure = 2, assumption = 3, nonconvergence = 4, budget = 5 };

struct CoinFlags {
  std::string a, b, c, d;
  std::optional<double> real_a;

  Coin make() const {
    if (real_a) return Coin::real_family(*real_a);
    const int given = !a.empty() + !b.empty() + !c.empty() + !d.empty();
    if (given == 0) return Coin::hadamard();
    if (given != 4) throw DomainError("give all of --a --b --c --d, or --real-a, or none");
    return {parse_complex(a), parse_complex(b), parse_complex(c), parse_complex(d)};
  }
};

void add_coin_flags(CLI::App* cmd, CoinFlags& f) {
  cmd->add_option("--a", f.a, "coin entry a as re,im");
  cmd->add_option("--b", f.b, "coin entry b as re,im");
  cmd->add_option("--c", f.c, "coin entry c as re,im");
  cmd->add_option("--d", f.d, "coin entry d as re,im");
  cmd->add_option("--real-a", f.real_a, "use the real coin [[a,b],[b,-a]] with b=sqrt(1-a^2)");
}

json cjson(cplx z) { return format_complex(z); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(cjson(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(cjson(v[i]));
  return out;
}

json coin_json(const Coin& c) {
  return {{"a", cjson(c.a)}, {"b", cjson(c.b)}, {"c", cjson(c.c)}, {"d", cjson(c.d)}, {"omega", cjson(c.omega())}};
}

std::string surface_name(bool orientable, int genus) {
  return (orientable ? "g=" : "k=") + std::to_string(genus);
}

// Tail t sits on island arc v and is fed by the bridge arriving at v.
std::string tail_label(const RotationSystem& rs, const BlowUpGraph& bg, int t) {
  const State b = bg.bridge_target[bg.tail_island[t]];
  const Arc e = state_arc(b);
  return std::to_string(rs.graph().origin(e)) + "->" + std::to_string(rs.graph().terminus(e)) + "/" +
         std::to_string(state_sheet(b));
}

json arc_json(const RotationSystem& rs, State u) {
  const Arc e = state_arc(u);
  return json::array({rs.graph().origin(e), rs.graph().terminus(e)});
}

std::string list_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

SymmetricDigraph graph_from_spec(const std::string& spec) {
  if (spec.size() > 1 && (spec[0] == 'K' || spec[0] == 'C') &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int n = std::stoi(spec.substr(1));
    return spec[0] == 'K' ? complete_graph(n) : cycle_graph(n);
  }
  return read_rotation_system(spec).graph();
}

std::optional<Eigen::VectorXcd> inflow_vector(const std::string& spec, int tails) {
  if (spec == "uniform") return std::nullopt;
  if (spec == "none") return Eigen::VectorXcd::Zero(tails);
  int t = -1;
  try {
    std::size_t used = 0;
    t = std::stoi(spec, &used);
    if (used != spec.size()) t = -1;
  } catch (...) {
  }
  if (t < 0 || t >= tails)
    throw DomainError("--inflow must be a tail id in [0," + std::to_string(tails) + "), 'uniform' or 'none'");
  return Eigen::VectorXcd::Unit(tails, t);
}

int cmd_faces(const std::string& file, const std::string& out) {
  const auto rs = read_rotation_system(file);
  const auto fd = trace_faces(rs);
  json faces = json::array();
  for (int i = 0; i < fd.face_count(); ++i) {
    json walk = json::array(), sheets = json::array(), si = json::array();
    for (State u : fd.faces[i].walk) {
      walk.push_back(arc_json(rs, u));
      sheets.push_back(state_sheet(u));
    }
    for (const auto& s : fd.self_intersections[i])
      si.push_back({{"edge", arc_json(rs, s.first)}, {"dist_forward", s.dist_forward}, {"dist_back", s.dist_back}});
    faces.push_back({{"length", fd.faces[i].length()}, {"walk", walk}, {"sheets", sheets}, {"self_intersections", si}});
  }
  json j = {{"faces", faces},
            {"lengths", fd.length_multiset()},
            {"orientable", fd.orientable},
            {"genus", fd.genus},
            {"surface", surface_name(fd.orientable, fd.genus)}};
  Output(out).stream() << j.dump(2) << "\n";
  return ok;
}

int cmd_genus(const std::string& file, const std::string& out) {
  const auto rs = read_rotation_system(file);
  const auto gen = euler_genus(rs);
  const auto& g = rs.graph();
  const int F = trace_faces(rs).face_count();
  json j = {{"orientable", gen.orientable},
            {"genus", gen.genus},
            {"surface", surface_name(gen.orientable, gen.genus)},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"faces", F},
            {"euler_characteristic", g.vertex_count() - g.edge_count() + F}};
  Output(out).stream() << j.dump(2) << "\n";
  return ok;
}

int cmd_orientable(const std::string& file, const CoinFlags& cf, const std::string& out) {
  const auto rs = read_rotation_system(file);
  const auto tree = detect_orientability(rs);
  const auto dc = double_cover(rs);
  const Coin coin = cf.make();
  const auto fd = trace_faces(rs);
  const auto bg = attach_hedgehog(blow_up(rs));
  const bool by_scattering = orientability_from_scattering(scattering_matrix(fd, bg, coin), bg, coin);
  const bool by_cover = dc.component_count == 2;
  json j = {{"orientable", tree.orientable},
            {"spanning_tree", tree.orientable},
            {"double_cover_components", dc.component_count},
            {"double_cover", by_cover},
            {"scattering", by_scattering},
            {"agree", tree.orientable == by_cover && by_cover == by_scattering}};
  Output(out).stream() << j.dump(2) << "\n";
  return ok;
}

int cmd_scatter(const std::string& file, const CoinFlags& cf, const std::string& format, const std::string& out) {
  const auto rs = read_rotation_system(file);
  const Coin coin = cf.make();
  const auto fd = trace_faces(rs);
  const auto bg = attach_hedgehog(blow_up(rs));
  const auto S = scattering_matrix(fd, bg, coin);
  Output sink(out);
  auto& os = sink.stream();
  if (format == "csv") {
    os.precision(17);
    for (std::size_t k = 0; k < S.blocks.size(); ++k) {
      const auto& b = S.blocks[k];
      os << "block," << k << ",face," << b.face << ",chiral," << b.chiral << "\n";
      os << "tail";
      for (int t : b.tails) os << "," << tail_label(rs, bg, t) << " re," << tail_label(rs, bg, t) << " im";
      os << "\n";
      for (Eigen::Index i = 0; i < b.S.rows(); ++i) {
        os << tail_label(rs, bg, b.tails[i]);
        for (Eigen::Index j = 0; j < b.S.cols(); ++j) os << "," << b.S(i, j).real() << "," << b.S(i, j).imag();
        os << "\n";
      }
    }
    os << "unitarity_defect," << S.unitarity_defect() << "\n";
    return ok;
  }
  json tails = json::array();
  for (int t = 0; t < bg.tail_count(); ++t) tails.push_back(tail_label(rs, bg, t));
  json blocks = json::array();
  for (const auto& b : S.blocks)
    blocks.push_back({{"face", b.face}, {"chiral", b.chiral}, {"length", b.walk_length}, {"tails", b.tails},
                      {"S", matrix_json(b.S)}});
  json j = {{"coin", coin_json(coin)},
            {"tails", tails},
            {"blocks", blocks},
            {"unitarity_defect", S.unitarity_defect()}};
  os << j.dump(2) << "\n";
  return ok;
}

int cmd_comfort(const std::string& file, const CoinFlags& cf, const std::string& inflow, bool limit,
                const std::string& out) {
  const auto rs = read_rotation_system(file);
  const Coin coin = cf.make();
  const auto fd = trace_faces(rs);
  const auto bg = attach_hedgehog(blow_up(rs));
  const auto S = scattering_matrix(fd, bg, coin);
  json j;
  if (auto alpha = inflow_vector(inflow, bg.tail_count())) {
    const auto r = comfortability(S, bg, coin, *alpha);
    j = {{"inflow", inflow}, {"comfortability", r.total}, {"island", r.island}, {"bridge", r.bridge}};
  } else {
    const auto av = average_comfortability(rs, fd, coin);
    json faces = json::array();
    for (const auto& f : av.faces)
      faces.push_back({{"face", f.face}, {"length", f.length}, {"self_intersections", f.self_intersections},
                       {"island_term", f.island}, {"crossing_term", f.crossing}});
    j = {{"inflow", "uniform"},
         {"average", av.mean},
         {"island_average", av.island_mean},
         {"bridge_average", av.mean - av.island_mean},
         {"trace_QQ", av.trace_QQ},
         {"trace_QQ_sigma", cjson(av.trace_QQ_sigma)},
         {"face_sum_form", av.face_sum_form ? json(*av.face_sum_form) : json(nullptr)},
         {"tails", av.tails},
         {"tail_sum_over_arcs", av.tail_sum_over_arcs},
         {"faces", faces}};
  }
  if (limit) j["limit"] = limit_comfortability(rs, fd);
  Output(out).stream() << j.dump(2) << "\n";
  return ok;
}

int cmd_simulate(const std::string& file, const CoinFlags& cf, const std::string& inflow, double tol, long max_steps,
                 const std::string& out) {
  const auto rs = read_rotation_system(file);
  const Coin coin = cf.make();
  const auto bg = attach_hedgehog(blow_up(rs));
  const auto alpha = inflow_vector(inflow, bg.tail_count())
                         .value_or(Eigen::VectorXcd::Constant(bg.tail_count(), 1.0 / std::sqrt(bg.tail_count())));
  const auto run = run_to_stationary(bg, coin, alpha, tol, max_steps);
  json j = {{"steps", run.steps},
            {"residual", run.residual},
            {"comfortability", internal_energy(run.state)},
            {"internal", vector_json(run.state.amplitudes)},
            {"outflow", vector_json(run.state.outflow)}};
  json cmp = nullptr;
  try {
    const auto fd = trace_faces(rs);
    const auto S = scattering_matrix(fd, bg, coin);
    const auto closed = stationary_closed_form(S, bg, coin, alpha);
    cmp = {{"outflow_vs_S", (S.dense() * alpha - run.state.outflow).cwiseAbs().maxCoeff()},
           {"state_vs_closed_form", (closed.amplitudes - run.state.amplitudes).cwiseAbs().maxCoeff()},
           {"energy_vs_formula", std::abs(comfortability(S, bg, coin, alpha).total - internal_energy(run.state))}};
  } catch (const AssumptionError& e) {
    cmp = {{"skipped", e.what()}};
  }
  j["comparison"] = cmp;
  Output(out).stream() << j.dump(2) << "\n";
  return ok;
}

int cmd_enumerate(const std::string& spec, std::vector<double> as, bool rank, const std::string& emit_dir,
                  const std::string& out) {
  const auto g = graph_from_spec(spec);
  const auto classes = enumerate_embeddings(g);
  if (as.empty()) as.push_back(0.98);
  std::vector<std::vector<double>> means(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto fd = trace_faces(classes[i].representative);
    for (double a : as) means[i].push_back(average_comfortability(classes[i].representative, fd, Coin::real_family(a)).mean);
  }
  std::vector<int> order(classes.size());
  std::vector<char> tied(classes.size(), 0);
  std::iota(order.begin(), order.end(), 0);
  if (rank) {
    const auto r = rank_by_comfortability(classes, Coin::real_family(as.front()));
    for (std::size_t i = 0; i < r.by_mean.size(); ++i) {
      order[i] = r.by_mean[i].index;
      tied[i] = r.by_mean[i].tied_with_previous;
    }
  }
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::ofstream f(std::filesystem::path(emit_dir) / ("class_" + std::to_string(i) + ".rs"));
      f << write_rotation_system(classes[i].representative);
    }
  }
  Output sink(out);
  auto& os = sink.stream();
  os.precision(15);
  if (rank) os << "rank,tied,";
  os << "class,orientable,genus,surface,faces,self_intersections,orbit_size,limit";
  for (double a : as) os << ",mean_a=" << a;
  os << "\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& c = classes[order[r]];
    if (rank) os << r + 1 << "," << (tied[r] ? 1 : 0) << ",";
    os << order[r] << "," << c.orientable << "," << c.genus << "," << surface_name(c.orientable, c.genus) << ",\""
       << list_string(c.faces) << "\",\"" << list_string(c.self_intersections) << "\"," << c.orbit_size << ","
       << c.limit;
    for (double m : means[order[r]]) os << "," << m;
    os << "\n";
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation systems, their quantum walks, scattering and comfortability"};
  app.require_subcommand(1);
  std::string file, out, format = "json", inflow = "uniform", graph, emit_dir;
  CoinFlags coin;
  bool limit = false;
  double tol = 1e-10;
  long max_steps = 1'000'000;
  std::vector<double> as;

  auto* faces = app.add_subcommand("faces", "trace facial walks");
  auto* genus = app.add_subcommand("genus", "Euler genus and orientability");
  auto* orient = app.add_subcommand("orientable", "orientability three ways");
  auto* scatter = app.add_subcommand("scatter", "closed-form scattering matrix");
  auto* comfort = app.add_subcommand("comfort", "comfortability of one inflow or the uniform average");
  auto* simulate = app.add_subcommand("simulate", "run the walk to its stationary state");
  auto* enumerate = app.add_subcommand("enumerate", "embedding classes of a small graph (CSV)");
  auto* rank = app.add_subcommand("rank", "embedding classes ranked by average comfortability (CSV)");
  for (auto* cmd : {faces, genus, orient, scatter, comfort, simulate}) {
    cmd->add_option("file", file, "rotation system file")->required();
    cmd->add_option("--out", out, "write to this path instead of stdout");
  }
  for (auto* cmd : {orient, scatter, comfort, simulate}) add_coin_flags(cmd, coin);
  scatter->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  for (auto* cmd : {comfort, simulate}) cmd->add_option("--inflow", inflow, "tail id, 'uniform' or 'none'");
  comfort->add_flag("--limit", limit, "also report the a -> 1 limit coefficient");
  simulate->add_option("--tol", tol);
  simulate->add_option("--max-steps", max_steps);
  for (auto* cmd : {enumerate, rank}) {
    cmd->add_option("graph", graph, "Kn, Cn or a rotation system file")->required();
    cmd->add_option("--a", as, "real coin parameter(s) for the average comfortability");
    cmd->add_option("--out", out, "write to this path instead of stdout");
    cmd->add_option("--emit-dir", emit_dir, "write each class representative as a rotation system file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parse_failure;
  }

  try {
    if (*faces) return cmd_faces(file, out);
    if (*genus) return cmd_genus(file, out);
    if (*orient) return cmd_orientable(file, coin, out);
    if (*scatter) return cmd_scatter(file, coin, format, out);
    if (*comfort) return cmd_comfort(file, coin, inflow, limit, out);
    if (*simulate) return cmd_simulate(file, coin, inflow, tol, max_steps, out);
    if (*enumerate) return cmd_enumerate(graph, as, false, emit_dir, out);
    if (*rank) return cmd_enumerate(graph, as, true, emit_dir, out);
  } catch (const ew::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return assumption;
  } catch (const AssumptionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return assumption;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return assumption;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return nonconvergence;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return budget;
  }
  return ok;
}
