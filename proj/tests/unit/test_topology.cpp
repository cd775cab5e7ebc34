#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "swbeam/rng.hpp"
#include "swbeam/topology.hpp"

using namespace swbeam;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("generation stays inside the region and is deterministic") {
  const Topology topo = generate_topology(300, 10.0, 10.0, 42);
  CHECK(topo.size() == 300);
  for (const Point& p : topo.positions) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 10.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= 10.0);
  }
  const Topology again = generate_topology(300, 10.0, 10.0, 42);
  for (int i = 0; i < topo.size(); ++i) {
    CHECK(topo.positions[i].x == again.positions[i].x);
    CHECK(topo.positions[i].y == again.positions[i].y);
  }
  const Topology other = generate_topology(300, 10.0, 10.0, 43);
  CHECK(topo.positions[0].x != other.positions[0].x);
}

TEST_CASE("minimal two-node network") {
  const Topology topo = generate_topology(2, 1.0, 1.0, 0);
  CHECK(topo.size() == 2);
}

TEST_CASE("generation rejects bad arguments") {
  CHECK_THROWS_AS(generate_topology(1, 1.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_topology(10, 0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_topology(10, 1.0, -2.0, 0), std::invalid_argument);
}

TEST_CASE("omni neighbors follow the closed disc") {
  Topology topo;
  topo.width = topo.height = 10.0;
  topo.omni_range = 1.0;

  SUBCASE("distance 0.5") {
    topo.positions = {{0.0, 0.0}, {0.5, 0.0}};
    CHECK(omni_neighbors(topo, 0) == std::vector<NodeId>{1});
    CHECK(omni_neighbors(topo, 1) == std::vector<NodeId>{0});
  }
  SUBCASE("distance 1.5") {
    topo.positions = {{0.0, 0.0}, {1.5, 0.0}};
    CHECK(omni_neighbors(topo, 0).empty());
    CHECK(omni_neighbors(topo, 1).empty());
  }
  SUBCASE("distance exactly r is connected") {
    topo.positions = {{0.0, 0.0}, {1.0, 0.0}};
    CHECK(omni_neighbors(topo, 0) == std::vector<NodeId>{1});
  }
}

TEST_CASE("neighbor relation is symmetric on random topologies") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Topology topo = generate_topology(120, 8.0, 8.0, seed);
    const auto adj = omni_adjacency(topo);
    for (NodeId v = 0; v < topo.size(); ++v) {
      CHECK(adj[v] == omni_neighbors(topo, v));
      for (NodeId u : adj[v]) {
        const auto& back = adj[u];
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
    }
  }
}

TEST_CASE("euclidean diameter") {
  Topology topo;
  topo.width = topo.height = 10.0;

  SUBCASE("3-4-5 triangle") {
    topo.positions = {{0.0, 0.0}, {3.0, 4.0}};
    CHECK(euclidean_diameter(topo) == doctest::Approx(5.0).epsilon(1e-15));
  }
  SUBCASE("coincident nodes") {
    topo.positions = {{2.0, 2.0}, {2.0, 2.0}, {2.0, 2.0}};
    CHECK(euclidean_diameter(topo) == 0.0);
  }
  SUBCASE("bounded by the rectangle diagonal") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Topology t = generate_topology(300, 10.0, 10.0, seed);
      const double d = euclidean_diameter(t);
      CHECK(d >= 0.0);
      CHECK(d <= std::sqrt(200.0));
    }
  }
}

TEST_CASE("topology file round trip is byte exact") {
  const Topology topo = generate_topology(50, 7.5, 3.25, 99, 1.25);
  const fs::path dir = fs::temp_directory_path() / "swbeam_topo_test";
  fs::create_directories(dir);
  const fs::path a = dir / "a.csv";
  const fs::path b = dir / "b.csv";

  save_topology(topo, a);
  const Topology loaded = load_topology(a);
  CHECK(loaded.size() == topo.size());
  CHECK(loaded.width == topo.width);
  CHECK(loaded.height == topo.height);
  CHECK(loaded.omni_range == topo.omni_range);
  CHECK(loaded.seed == topo.seed);
  for (int i = 0; i < topo.size(); ++i) {
    CHECK(loaded.positions[i].x == topo.positions[i].x);
    CHECK(loaded.positions[i].y == topo.positions[i].y);
  }

  save_topology(loaded, b);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(topology_meta_path(a)) == slurp(topology_meta_path(b)));
  fs::remove_all(dir);
}

TEST_CASE("topology load failures") {
  const fs::path dir = fs::temp_directory_path() / "swbeam_topo_err";
  fs::create_directories(dir);

  CHECK_THROWS(load_topology(dir / "missing.csv"));

  const fs::path bad = dir / "bad.csv";
  std::ofstream(bad) << "x,y\n0,0\n";
  CHECK_THROWS(load_topology(bad));

  const fs::path orphan = dir / "orphan.csv";
  std::ofstream(orphan) << "node_id,x,y\n0,0,0\n1,1,1\n";
  CHECK_THROWS(load_topology(orphan));  // no .meta sidecar
  fs::remove_all(dir);
}

TEST_CASE("connectivity check") {
  Topology topo;
  topo.width = topo.height = 10.0;
  topo.omni_range = 1.0;
  topo.positions = {{0.0, 0.0}, {0.5, 0.0}, {5.0, 5.0}};
  CHECK_FALSE(omni_graph_connected(topo));
  topo.positions = {{0.0, 0.0}, {0.5, 0.0}, {1.2, 0.0}};
  CHECK(omni_graph_connected(topo));
}

}  // TEST_SUITE
