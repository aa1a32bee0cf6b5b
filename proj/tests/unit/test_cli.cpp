#include "doctest.h"

#include "commands.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run kato_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kato");
  std::ostringstream out, err;
  const int code = kato::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "kato_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const json& doc) {
  const auto path = scratch() / name;
  std::ofstream(path) << doc.dump(2);
  return path.string();
}

json hydrogenic(double z, double offset = 0.0) {
  json doc{{"electron_count", 1},
           {"frame", {{{"position", {0, 0, 0}}, {"charge", z}}}},
           {"terms",
            {{{"kind", "slater_s"}, {"center", {0, 0, 0}}, {"coefficient", 1.0}, {"exponent", z},
              {"power", 0}}}},
           {"normalize", true}};
  if (offset != 0.0) doc["potential_offset"] = offset;
  return doc;
}

json gaussian() {
  return {{"electron_count", 1},
          {"terms",
           {{{"kind", "gaussian"}, {"center", {0, 0, 0}}, {"coefficient", 1.0}, {"exponent", 1.0}}}},
          {"normalize", true}};
}

}  // namespace

TEST_CASE("invert") {
  const auto r = kato_cli({"invert", write("h.json", hydrogenic(1.0))});
  REQUIRE(r.code == 0);
  const auto rep = r.report();
  CHECK(rep["tool"] == "kato");
  CHECK(rep["command"] == "invert");
  CHECK(rep["inputs"][0]["fnv1a64"].get<std::string>().size() == 16);
  CHECK(rep["tolerances"]["topology"]["seeds_per_axis"] == 8);
  REQUIRE(rep["result"]["estimated_frame"].size() == 1);
  CHECK(std::abs(rep["result"]["estimated_frame"][0]["charge"].get<double>() - 1.0) <= 1e-6);
}

TEST_CASE("invert on a cusp-free density") {
  const auto r = kato_cli({"invert", write("g.json", gaussian())});
  CHECK(r.code == 2);
  const auto rep = r.report();
  CHECK(rep["status"] == "no_cusps_found");
  REQUIRE(rep["smooth_points"].size() == 1);
  CHECK(rep["smooth_points"][0]["signature"] == -3);
}

TEST_CASE("malformed spec") {
  auto doc = hydrogenic(1.0);
  doc["terms"][0].erase("exponent");
  const auto r = kato_cli({"invert", write("bad.json", doc)});
  CHECK(r.code == 1);
  CHECK(r.err.find("terms[0].exponent") != std::string::npos);
  CHECK(kato_cli({"invert", (scratch() / "does_not_exist.json").string()}).code == 1);
  CHECK(kato_cli({"invert"}).code == 1);
  CHECK(kato_cli({"frobnicate"}).code == 1);
}

TEST_CASE("verify-cusp") {
  CHECK(kato_cli({"verify-cusp", write("h2.json", hydrogenic(2.0))}).code == 0);
  auto wrong = hydrogenic(2.0);
  wrong["frame"][0]["charge"] = 2.5;
  CHECK(kato_cli({"verify-cusp", write("h2_wrong.json", wrong)}).code != 0);
  const auto r = kato_cli({"verify-cusp", write("g_noframe.json", gaussian())});
  CHECK(r.code == 1);
  CHECK(r.err.find("frame") != std::string::npos);
}

TEST_CASE("audit") {
  const auto r = kato_cli({"audit", write("a1.json", hydrogenic(1.0)), write("a2.json", hydrogenic(2.0))});
  REQUIRE(r.code == 0);
  const auto res = r.report()["result"];
  CHECK(res["case"] == "II");
  CHECK(res["E1"].get<double>() == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(res["E2"].get<double>() == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(std::abs(res["cross12"].get<double>()) <= 1e-10);
  CHECK(res["cross21"].get<double>() == doctest::Approx(-1.5).epsilon(1e-10));

  const auto same = kato_cli({"audit", write("a1.json", hydrogenic(1.0)), write("a1b.json", hydrogenic(1.0))});
  CHECK(same.report()["result"]["case"] == "I");

  const auto shifted =
      kato_cli({"audit", write("a1.json", hydrogenic(1.0)), write("a1c.json", hydrogenic(1.0, 0.25))});
  CHECK(shifted.report()["result"]["ground_energy_gap"].get<double>() ==
        doctest::Approx(0.25).epsilon(1e-12));

  json two = hydrogenic(1.0);
  two["electron_count"] = 2;
  two["frame"].push_back({{"position", {0, 0, 2}}, {"charge", 1.0}});
  two["terms"].push_back({{"kind", "slater_s"}, {"center", {0, 0, 2}}, {"coefficient", 1.0},
                          {"exponent", 1.0}, {"power", 0}});
  const auto scope = kato_cli({"audit", write("a1.json", hydrogenic(1.0)), write("two.json", two)});
  CHECK(scope.code == 3);
}

TEST_CASE("lst") {
  const auto table = (scratch() / "map.txt").string();
  const auto r = kato_cli({"lst", write("s.json", hydrogenic(1.0)), write("t.json", hydrogenic(2.0)),
                           "--r-min", "0.5", "--r-max", "2", "--points", "3", "--table", table});
  REQUIRE(r.code == 0);
  const auto rows = r.report()["result"]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rows[1][1].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  std::ifstream in(table);
  std::string header;
  std::getline(in, header);
  double rr, f, df, q;
  int n = 0;
  while (in >> rr >> f >> df >> q) ++n;
  CHECK(n == 3);

  const auto id = kato_cli({"lst", write("s.json", hydrogenic(1.0)), write("s2.json", hydrogenic(1.0))});
  for (const auto& row : id.report()["result"]["rows"]) {
    CHECK(std::abs(row[1].get<double>() - row[0].get<double>()) <=
          1e-10 * std::max(1.0, row[0].get<double>()));
  }

  auto two = hydrogenic(1.0);
  two["electron_count"] = 2;
  CHECK(kato_cli({"lst", write("s.json", hydrogenic(1.0)), write("n2.json", two)}).code == 4);
}

TEST_CASE("grid-export") {
  const auto out = (scratch() / "h.cube").string();
  const auto r = kato_cli({"grid-export", write("h.json", hydrogenic(1.0)), "--output", out,
                           "--origin", "0", "0", "0", "--axes", "1", "0", "0", "0", "1", "0", "0",
                           "0", "1", "--counts", "2", "2", "2"});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 11);
  CHECK(lines[7].substr(0, 13) == "  3.18310E-01");

  CHECK(kato_cli({"grid-export", write("h.json", hydrogenic(1.0)), "--output", out, "--counts", "1",
                  "2", "2"})
            .code == 1);
  CHECK(kato_cli({"grid-export", write("h.json", hydrogenic(1.0)), "--output",
                  (scratch() / "no_such_dir" / "x.cube").string(), "--counts", "2", "2", "2"})
            .code == 1);
}

TEST_CASE("tolerances flag and output file") {
  const auto t = kato_cli({"invert", "--tolerances"});
  REQUIRE(t.code == 0);
  const auto tol = json::parse(t.out);
  CHECK(tol["radial_derivative"]["tolerance"] == 1e-8);
  CHECK(tol["topology"]["cusp_threshold"] == 1e-3);

  const auto path = (scratch() / "report.json").string();
  const auto spec = write("h.json", hydrogenic(1.0));
  REQUIRE(kato_cli({"invert", spec, "--output", path, "--seeds", "6"}).code == 0);
  std::ifstream in(path);
  const auto rep = json::parse(in);
  CHECK(rep["tolerances"]["topology"]["seeds_per_axis"] == 6);
}

TEST_CASE("reruns are bit-identical") {
  const auto spec = write("h3.json", hydrogenic(3.0));
  const auto a = kato_cli({"invert", spec});
  const auto b = kato_cli({"invert", spec});
  CHECK(a.out == b.out);
  const auto c = kato_cli({"audit", spec, write("a2.json", hydrogenic(2.0))});
  const auto d = kato_cli({"audit", spec, write("a2.json", hydrogenic(2.0))});
  CHECK(c.out == d.out);
}
