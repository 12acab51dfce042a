#include <doctest.h>

#include <string>
#include <vector>

#include "heisdens/io.hpp"

using namespace heisdens;

TEST_CASE("constants serialize with a fixed key set") {
  DensityConstants c;
  c.beta0 = 2.0;
  c.beta = 2.1;
  c.gamma = 2.0 / 2.1;
  const auto j = to_json(c);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) {
    keys.push_back(k);
  }
  const std::vector<std::string> expected = {"metric", "beta0", "beta",           "b_star", "gamma",
                                             "abs_error", "quadrature_tol", "seed", "samples"};
  CHECK(keys == expected);
  CHECK(j["metric"]["kind"] == "sr");
  CHECK(j["beta"].get<double>() == 2.1);
}

TEST_CASE("output wrapper and provenance line") {
  const nlohmann::ordered_json config{{"command", "constants"}, {"seed", 7}};
  const auto w = wrap_output(config, {{"x", 1}});
  std::vector<std::string> keys;
  for (const auto& [k, v] : w.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"version", "config", "result"});
  CHECK(w["version"] == std::string(version()));
  const auto line = provenance_line(config);
  CHECK(line.rfind("# heisdens ", 0) == 0);
  CHECK(line.back() == '\n');
  CHECK(line.find("\"seed\":7") != std::string::npos);
}

TEST_CASE("doubles survive a JSON round trip") {
  const double x = 0.27142193785196;
  const auto text = nlohmann::ordered_json{{"v", x}}.dump();
  CHECK(nlohmann::ordered_json::parse(text)["v"].get<double>() == x);
}
