#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "prdual/cli.hpp"
#include "prdual/json_io.hpp"
#include "prdual/qmat_io.hpp"

using namespace prdual;

namespace {

const std::filesystem::path kData = PRDUAL_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "prdual");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

// Every "u v" block in a text report, parsed back.
std::vector<QMatrix> matrices_in(const std::string& text) {
  std::vector<QMatrix> out;
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  const std::regex header(R"(^(\d+) (\d+)$)");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::smatch m;
    if (!std::regex_match(lines[i], m, header)) continue;
    const auto u = std::stoul(m[1]);
    std::string block;
    for (std::size_t k = i; k <= i + u && k < lines.size(); ++k) block += lines[k] + "\n";
    out.push_back(parse_qmat(block));
    i += u;
  }
  return out;
}

}  // namespace

TEST_CASE("cc check") {
  const auto r = run({"cc", "check", data("schur.qmat")});
  CHECK(r.code == 0);
  CHECK(r.out.find("⟨{0,2},{1}⟩") != std::string::npos);
  CHECK(run({"cc", "check", data("sum_zero.qmat")}).code == 1);
  CHECK(run({"cc", "check", data("vdw.qmat")}).out.find("⟨{0,1,2,3},{4}⟩") != std::string::npos);
}

TEST_CASE("dualize and projector commands") {
  const auto i2k = run({"dualize-i2k", data("schur_image.qmat")});
  CHECK(i2k.code == 0);
  CHECK(parse_qmat(i2k.out) == QMatrix{{1, 1, -1}});
  const auto k2i = run({"dualize-k2i", data("schur.qmat")});
  CHECK(k2i.code == 0);
  const auto mats = matrices_in(k2i.out);
  REQUIRE(mats.size() == 2);
  CHECK(mats[1] == QMatrix{{1, 0}, {0, 1}, {1, 1}});
  CHECK(parse_qmat(run({"projector", data("schur_image.qmat")}).out) == QMatrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(run({"dualize-i2k", data("schur_image.qmat"), "--spec", "Z"}).code == 0);
  CHECK(run({"dualize-i2k", data("schur_image.qmat"), "--spec", "N"}).code == 2);
  CHECK(run({"dualize-i2k", data("schur_image.qmat"), "--signs", "1,-1"}).code == 0);
  CHECK(run({"dualize-i2k", data("schur_image.qmat"), "--signs", "1,x"}).code == 2);
}

TEST_CASE("oracle commands") {
  const auto four = run({"oracle", "window", "--matrix", data("schur.qmat"), "--n", "4", "--colors", "2", "--mode", "kernel"});
  CHECK(four.code == 1);
  CHECK(four.out.find("{1,4|2,3}") != std::string::npos);
  CHECK(run({"oracle", "window", "--matrix", data("schur.qmat"), "--n", "5", "--colors", "2"}).code == 0);
  CHECK(run({"oracle", "window", "--matrix", data("schur.qmat"), "--n", "40"}).code == 2);
  CHECK(run({"oracle", "mono", "--matrix", data("schur.qmat"), "--coloring", "[0,1,1,0]"}).code == 1);
  const auto mono = run({"oracle", "mono", "--matrix", data("ap4.qmat"), "--coloring", "[1,0,1,0,1,0,1,0,1]", "--mode", "image"});
  CHECK(mono.code == 0);
  CHECK(mono.out.find("(1, 2)") != std::string::npos);
  CHECK(run({"oracle", "member", "--spec", "gen(2,3)", "--value", "7"}).code == 0);
  CHECK(run({"oracle", "member", "--spec", "gen(2,3)", "--value", "1"}).code == 1);
}

TEST_CASE("family and mpc commands") {
  const auto mpc = run({"mpc", "--m", "2", "--p", "1", "--c", "1"});
  CHECK(parse_qmat(mpc.out) == QMatrix{{1, -1}, {1, 0}, {1, 1}, {0, 1}});
  const auto ap = run({"family", "--family", "ap", "--d", "2", "--rows", "5"});
  CHECK(ap.code == 0);
  const auto mats = matrices_in(ap.out);
  REQUIRE(mats.size() == 4);
  CHECK(mats[3] == QMatrix{{1, 0}, {0, 1}, {-1, 2}, {-2, 3}, {-3, 4}});
  CHECK(run({"family", "--family", "notg", "--spec", "2Z"}).code == 0);
  CHECK(run({"family", "--family", "notg", "--spec", "Z"}).out.find("(1/2, 1)") != std::string::npos);
  CHECK(run({"family", "--family", "notg", "--spec", "Q+"}).code == 2);
  CHECK(run({"family", "--family", "notg"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"cc", "check"}).code == 2);
  CHECK(run({"cc", "check", data("schur.qmat"), "--frobnicate"}).code == 2);
  CHECK(run({"cc", "check", data("missing.qmat")}).code == 2);
  CHECK(run({"mpc", "--m", "2", "--p", "1", "--c", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("printed matrices re-parse") {
  const std::vector<std::vector<std::string>> commands{
      {"dualize-k2i", data("vdw.qmat")},
      {"dualize-i2k", data("ap4.qmat")},
      {"dualize-i2k", data("ap4.qmat"), "--spec", "Z"},
      {"dualize-i2k", data("schur_image.qmat"), "--signs", "-1,1"},
      {"projector", data("ap4.qmat")},
      {"mpc", "--m", "3", "--p", "2", "--c", "2"},
      {"family", "--family", "ap", "--d", "3", "--rows", "7"},
      {"family", "--family", "notg", "--spec", "3N"},
  };
  for (const auto& c : commands) {
    const auto text = run(c);
    const auto js = run([&] {
      auto v = c;
      v.push_back("--json");
      return v;
    }());
    REQUIRE(text.code == 0);
    const auto parsed = matrices_in(text.out);
    CHECK_FALSE(parsed.empty());
    // Each matrix printed in text form also appears in the JSON report.
    const auto doc = nlohmann::json::parse(js.out);
    std::vector<QMatrix> in_json;
    std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
      if (j.is_array() || j.is_object()) {
        try {
          in_json.push_back(j.get<QMatrix>());
        } catch (...) {
        }
        for (const auto& e : j) walk(e);
      }
    };
    walk(doc);
    for (const auto& m : parsed) {
      CAPTURE(format_qmat(m));
      CHECK(std::find(in_json.begin(), in_json.end(), m) != in_json.end());
      CHECK(parse_qmat(format_qmat(m)) == m);
    }
  }
}

TEST_CASE("json reports replay bit-exactly") {
  const std::vector<std::vector<std::string>> commands{
      {"cc", "check", data("schur.qmat")},
      {"cc", "check", data("sum_zero.qmat")},
      {"dualize-k2i", data("vdw.qmat")},
      {"dualize-i2k", data("ap4.qmat")},
      {"dualize-i2k", data("schur_image.qmat"), "--spec", "Z"},
      {"dualize-i2k", data("schur_image.qmat"), "--signs", "1,-1"},
      {"projector", data("schur_image.qmat")},
      {"mpc", "--m", "2", "--p", "1", "--c", "1"},
      {"oracle", "window", "--matrix", data("schur.qmat"), "--n", "4"},
      {"oracle", "window", "--matrix", data("ap4.qmat"), "--n", "9", "--mode", "image"},
      {"oracle", "mono", "--matrix", data("schur.qmat"), "--coloring", "[0,0,0,0]"},
      {"oracle", "member", "--spec", "gen(2,3)", "--value", "7"},
      {"family", "--family", "ap", "--d", "2", "--rows", "5"},
      {"family", "--family", "notg", "--spec", "Z"},
  };
  const auto dir = std::filesystem::temp_directory_path() / "prdual_replay";
  std::filesystem::create_directories(dir);
  int n = 0;
  for (auto c : commands) {
    const auto path = (dir / ("r" + std::to_string(n++) + ".json")).string();
    const int original = run(c).code;
    c.insert(c.end(), {"--json", "--out", path});
    CHECK(run(c).code == original);
    const auto doc = nlohmann::json::parse(std::ifstream(path));
    CHECK(cli::replay(doc).doc == doc);
    CHECK(cli::replay(doc).code == original);
    const auto v = run({"verify", path});
    CAPTURE(path);
    CHECK(v.code == 0);
    CHECK(v.out.find("reproduced") == 0);
  }

  // Tampering with a verdict or a matrix entry is detected.
  const auto path = (dir / "tampered.json").string();
  run({"cc", "check", data("schur.qmat"), "--json", "--out", path});
  auto doc = nlohmann::json::parse(std::ifstream(path));
  doc["verdict"] = false;
  std::ofstream(path) << doc.dump();
  CHECK(run({"verify", path}).code == 1);

  run({"cc", "check", data("schur.qmat"), "--json", "--out", path});
  doc = nlohmann::json::parse(std::ifstream(path));
  doc["certificate"]["partition"] = nlohmann::json::array({nlohmann::json::array({0, 1}), nlohmann::json::array({2})});
  std::ofstream(path) << doc.dump();
  CHECK(run({"verify", path}).code == 1);

  // A valid but non-canonical certificate still reproduces.
  const auto vdw = (dir / "vdw.json").string();
  run({"cc", "check", data("vdw.qmat"), "--json", "--out", vdw});
  doc = nlohmann::json::parse(std::ifstream(vdw));
  doc["certificate"]["witnesses"][0]["coefficients"] = nlohmann::json::array({"2", "1", "0", "-1"});
  std::ofstream(vdw) << doc.dump();
  CHECK(run({"verify", vdw}).code == 0);

  // Bare certificates are checked against a matrix.
  const auto bare = (dir / "bare.json").string();
  std::ofstream(bare) << R"({"partition": [[0, 2], [1]], "witnesses": []})";
  CHECK(run({"verify", bare, "--matrix", data("schur.qmat")}).code == 0);
  std::ofstream(bare) << R"({"partition": [[0, 1], [2]], "witnesses": []})";
  CHECK(run({"verify", bare, "--matrix", data("schur.qmat")}).code == 1);

  std::ofstream(path) << "{\"kind\": \"nonsense\"}";
  CHECK(run({"verify", path}).code == 2);
  std::ofstream(path) << "not json";
  CHECK(run({"verify", path}).code == 2);
}

TEST_CASE("json serialization round trips") {
  const QMatrix m{{1, Rational(-1, 2)}, {0, 3}};
  CHECK(nlohmann::json(m).get<QMatrix>() == m);
  const auto p = kernel_projector(QMatrix::identity(2));
  CHECK(nlohmann::json(p).get<ProjectorResult>() == p);
  const auto d = row_dependency(QMatrix{{1}, {2}, {3}});
  CHECK(nlohmann::json(d).get<DependencyResult>() == d);
  const ColumnsCertificate cert{{{0, 2}, {1}}, {{{0, 2}, {1, 0}}}};
  CHECK(nlohmann::json(cert).get<ColumnsCertificate>() == cert);
  const auto j = nlohmann::json(cert);
  CHECK(j.contains("partition"));
  CHECK(j.contains("witnesses"));
  CHECK(nlohmann::json(p).contains("T"));
  CHECK(nlohmann::json(d).contains("L"));
}
