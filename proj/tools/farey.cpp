// farey: command line front end for level-n Farey maps.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "farey/arith.hpp"
#include "farey/eleven.hpp"
#include "farey/farey_map.hpp"
#include "farey/io.hpp"
#include "farey/klein7.hpp"
#include "farey/metrics.hpp"
#include "farey/render.hpp"

namespace {

using namespace farey;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) failed_ = true;
  }
  int status() const { return failed_ ? kFailed : kOk; }

 private:
  bool failed_ = false;
};

int cmd_info(int n) {
  const auto map = FareyMap::build(n);
  std::cout << "mu=" << mu(n) << " V=" << map.num_vertices() << " E=" << map.num_edges()
            << " F=" << map.num_faces() << " g=" << genus(n) << "\n";
  return kOk;
}

int cmd_map(int n, const std::string& format) {
  const auto map = FareyMap::build(n);
  if (format == "json") {
    std::cout << io::map_to_json(map, 2) << "\n";
  } else {
    std::cout << io::map_to_dot(map);
  }
  return kOk;
}

int cmd_distance(int p, const std::string& a, const std::string& b, bool oracle) {
  const auto f = FareyFraction::parse(a, p);
  const auto g = FareyFraction::parse(b, p);
  const int d = distance_formula(f, g, p);
  std::cout << d << "\n";
  if (!oracle) return kOk;
  const int bfs = bfs_distance(FareyMap::build(p), f, g);
  if (bfs != d) {
    std::cerr << "bfs distance " << bfs << " disagrees with formula " << d << "\n";
    return kFailed;
  }
  std::cerr << "bfs agrees\n";
  return kOk;
}

int cmd_circuits(int p, bool json) {
  if (json) {
    std::cout << io::circuits_to_json(p, 2) << "\n";
    return kOk;
  }
  const auto dec = decompose(p);
  std::cout << "S1: " << io::join(dec.sphere1.vertices) << "\n";
  std::cout << "S2: " << io::join(dec.sphere2.vertices) << "\n";
  std::cout << "poles: " << io::join(dec.poles) << "\n";
  return kOk;
}

int cmd_klein7(bool verify, bool json) {
  const auto map = FareyMap::build(7);
  const auto gon = klein7::fourteen_gon(map);
  const auto pairing = klein7::side_pairing(gon);
  if (json) {
    std::cout << io::fourteen_gon_to_json(gon, pairing, 2) << "\n";
    return kOk;
  }
  for (const auto& side : gon.sides) {
    std::vector<FareyFraction> labels(side.traversed.begin(), side.traversed.end());
    std::cout << "side " << side.index << ": " << io::join(labels) << "  <-> " << pairing.partner(side.index)
              << "\n";
  }
  const auto chi = klein7::quotient_euler(map, gon, pairing);
  std::cout << "quotient chi=" << chi << " g=" << genus_from_euler(chi) << "\n";
  if (!verify) return kOk;

  std::cout << "\n" << klein7::verify_klein_matrix().str();
  auto expected = klein7::expected_pairing();
  auto normalize = [](std::vector<std::pair<int, int>> v) {
    for (auto& [i, j] : v)
      if (i > j) std::swap(i, j);
    std::sort(v.begin(), v.end());
    return v;
  };
  const bool ok = normalize(pairing.pairs) == normalize(expected) && chi == -4;
  std::cout << "\npairing table " << (ok ? "reproduced" : "NOT reproduced") << "\n";
  return ok ? kOk : kFailed;
}

struct Sector11Flags {
  bool reference = false;
  bool table = false;
  bool pairs = false;
  bool genus = false;
  bool json = false;
};

int cmd_sector11(const Sector11Flags& flags) {
  const auto map = FareyMap::build(eleven::kLevel);
  eleven::SearchOptions options;
  if (flags.reference) options.restrict_to = eleven::reference_sector_vertices();
  const auto sector = eleven::sector_search(map, options);
  const auto walk = eleven::boundary_walk(map, sector);
  const auto pairs = eleven::pair_boundary(walk);

  if (flags.json) {
    std::cout << io::boundary_to_json(walk, pairs, 2) << "\n";
    return kOk;
  }
  const bool any = flags.table || flags.pairs || flags.genus;
  if (flags.genus && !flags.table && !flags.pairs) {
    std::cout << eleven::quotient_genus(map, sector, walk, pairs) << "\n";
    return kOk;
  }
  if (!any) {
    std::cout << "sector faces:";
    for (int f : sector.faces) {
      const auto& face = map.faces()[f];
      std::cout << " (" << face.v[0] << " " << face.v[1] << " " << face.v[2] << ")";
    }
    std::cout << "\nboundary length " << walk.size() << "\n";
  }
  int status = kOk;
  if (flags.table) {
    const auto rows = eleven::table_rows(walk);
    for (const auto& row : rows) std::cout << io::join(row, " ") << "\n";
    if (flags.reference && rows != eleven::reference_boundary_table()) {
      std::cerr << "boundary table differs from the reference table\n";
      status = kFailed;
    }
  }
  if (flags.pairs) {
    for (auto [i, j] : pairs) {
      const auto [ri, ci] = eleven::table_position(i);
      const auto [rj, cj] = eleven::table_position(j);
      std::cout << "row " << ri << " " << walk.at(i) << "->" << walk.at(i + 1) << "  <->  row " << rj << " "
                << walk.at(j) << "->" << walk.at(j + 1) << "   (slots " << i << ", " << j << "; cols " << ci
                << ", " << cj << ")\n";
    }
  }
  if (flags.genus) std::cout << "genus " << eleven::quotient_genus(map, sector, walk, pairs) << "\n";
  return status;
}

int cmd_render(int n, const std::string& out, bool sector, bool no_labels) {
  const auto map = FareyMap::build(n);
  render::Options options;
  options.labels = !no_labels;
  std::string svg;
  if (sector) {
    if (n != eleven::kLevel) throw Error(ErrorCode::WrongLevel, "--sector requires n = 11");
    eleven::SearchOptions search;
    search.restrict_to = eleven::reference_sector_vertices();
    svg = render::render_sector(map, eleven::sector_search(map, search), options);
  } else {
    svg = render::render_map(map, options);
  }
  if (out == "-") {
    std::cout << svg;
    return kOk;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << out << "\n";
    return kUsage;
  }
  file << svg;
  return kOk;
}

int cmd_verify(int n) {
  Checker check;
  const auto map = FareyMap::build(n);
  check.expect(static_cast<std::int64_t>(map.num_darts()) == mu(n), "darts = mu(n) = " + std::to_string(mu(n)));
  check.expect(3 * map.num_faces() == map.num_darts() && map.num_edges() * 2 == map.num_darts(),
               "3F = 2E = mu(n)");
  check.expect(map.euler_characteristic() == 2 - 2 * genus(n), "chi = 2 - 2g with g = " + std::to_string(genus(n)));

  bool regular = true, symmetric = true, farey = true;
  for (std::size_t v = 0; v < map.num_vertices(); ++v) {
    const auto nb = map.neighbor_indices(static_cast<int>(v));
    if (static_cast<int>(nb.size()) != n) regular = false;
    for (int u : nb) {
      if (!map.adjacent(u, static_cast<int>(v))) symmetric = false;
      if (!is_adjacent(map.vertex(u), map.vertex(static_cast<int>(v)))) farey = false;
    }
  }
  check.expect(regular, "every vertex has degree n");
  check.expect(symmetric, "adjacency is symmetric");
  check.expect(farey, "edges satisfy the determinant test");

  if (n >= 5 && is_prime(n)) {
    bool agree = true;
    for (std::size_t i = 0; i < map.num_vertices(); ++i) {
      const auto dist = bfs_from(map, static_cast<int>(i));
      for (std::size_t j = 0; j < map.num_vertices(); ++j) {
        if (i != j && distance_formula(map.vertex(static_cast<int>(i)), map.vertex(static_cast<int>(j)), n) !=
                          dist[j]) {
          agree = false;
        }
      }
    }
    check.expect(agree, "distance formula agrees with BFS on all pairs");
    const auto s2 = circuit_S2(n);
    check.expect(s2.is_closed() && s2.size() == static_cast<std::size_t>(n * (n - 4)), "S2 is a closed walk of length p(p-4)");
    check.expect(poles(n).size() == static_cast<std::size_t>((n - 1) / 2), "(p-1)/2 poles");
  }
  if (n >= 5) check.expect(diameter(map) == 3, "diameter 3");
  if (n == 7) {
    const auto gon = klein7::fourteen_gon(map);
    const auto pairing = klein7::side_pairing(gon);
    check.expect(klein7::quotient_euler(map, gon, pairing) == -4, "14-gon quotient has chi = -4");
  }
  if (n == eleven::kLevel) {
    eleven::SearchOptions options;
    options.restrict_to = eleven::reference_sector_vertices();
    const auto sector = eleven::sector_search(map, options);
    const auto walk = eleven::boundary_walk(map, sector);
    check.expect(walk.size() == 198, "W* boundary has 198 edges");
    check.expect(eleven::table_rows(walk) == eleven::reference_boundary_table(), "boundary table reproduced");
    const auto pairs = eleven::pair_boundary(walk);
    check.expect(eleven::quotient_genus(map, sector, walk, pairs) == 26, "quotient genus 26");
  }
  return check.status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-n Farey maps M3(n)"};
  app.require_subcommand(1);

  int n = 0;
  auto* info = app.add_subcommand("info", "mu, V/E/F and genus of M3(n)");
  info->add_option("n", n, "level")->required();

  std::string format = "json";
  auto* map = app.add_subcommand("map", "export M3(n)");
  map->add_option("n", n, "level")->required();
  map->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  std::string a, b;
  bool oracle = false;
  auto* distance = app.add_subcommand("distance", "graph distance at prime level p");
  distance->add_option("p", n, "prime level")->required();
  distance->add_option("f1", a, "first vertex a/c")->required();
  distance->add_option("f2", b, "second vertex a/c")->required();
  distance->add_flag("--oracle", oracle, "cross-check against BFS");

  bool json = false;
  auto* circuits = app.add_subcommand("circuits", "S1, S2 and poles around 1/0");
  circuits->add_option("p", n, "prime level")->required();
  circuits->add_flag("--json", json, "JSON output");

  bool verify = false;
  auto* klein = app.add_subcommand("klein7", "14-gon and side pairing of M3(7)");
  klein->add_flag("--verify", verify, "check the pairing table and the pairing matrix");
  klein->add_flag("--json", json, "JSON output");

  Sector11Flags flags;
  auto* sector11 = app.add_subcommand("sector11", "fundamental polygon of M3(11)");
  sector11->add_flag("--reference,--match-paper", flags.reference, "restrict the search to the reference labels");
  sector11->add_flag("--table", flags.table, "print the boundary as 11 rows of 19 labels");
  sector11->add_flag("--pairs", flags.pairs, "print the 99 edge pairs");
  sector11->add_flag("--genus", flags.genus, "print the genus of the quotient");
  sector11->add_flag("--json", flags.json, "JSON output");

  std::string out;
  bool sector = false, no_labels = false;
  auto* render = app.add_subcommand("render", "schematic SVG");
  render->add_option("n", n, "level")->required();
  render->add_option("-o,--output", out, "output file, - for stdout")->required();
  render->add_flag("--sector", sector, "draw the sector W (n = 11)");
  render->add_flag("--no-labels", no_labels, "omit vertex labels");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite on M3(n)");
  verify_cmd->add_option("n", n, "level")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(n);
    if (*map) return cmd_map(n, format);
    if (*distance) return cmd_distance(n, a, b, oracle);
    if (*circuits) return cmd_circuits(n, json);
    if (*klein) return cmd_klein7(verify, json);
    if (*sector11) return cmd_sector11(flags);
    if (*render) return cmd_render(n, out, sector, no_labels);
    if (*verify_cmd) return cmd_verify(n);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NoMatch:
      case ErrorCode::NoSector:
      case ErrorCode::DisconnectedBoundary:
      case ErrorCode::UnpairedEdge:
        return kFailed;
      default:
        return kUsage;
    }
  }
  return kUsage;
}
