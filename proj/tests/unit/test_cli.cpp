// Copyright 2026 The lsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "app.hpp"
#include "group_io.hpp"
#include "lsl/error.hpp"
#include "oracle.hpp"
#include "store.hpp"

namespace lsl::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Result lsl(std::vector<std::string> args) {
  args.insert(args.begin(), "lsl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("lsl_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

TEST(MatrixFile, EntryWidths) {
  EXPECT_EQ(entry_bits(2), 1u);
  EXPECT_EQ(entry_bits(3), 2u);
  EXPECT_EQ(entry_bits(4), 2u);
  EXPECT_EQ(entry_bits(5), 3u);
  EXPECT_EQ(entry_bits(256), 8u);
  EXPECT_EQ(entry_bits(65536), 16u);
}

TEST(MatrixFile, KnownLayout) {
  auto f = ffla::Field::make(3, 1);
  auto m = ffla::Matrix::from_rows(f, {{1, 2, 0}, {2, 2, 1}});
  auto bytes = encode_matrix(m);
  // Header then entries 01 10 00 10 10 01, low bits first.
  std::vector<std::uint8_t> want{'L', 'S', 'L', '1', 2, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 1, 0, 0, 0,
                                 0b10001001, 0b0110};
  EXPECT_EQ(bytes, want);
  EXPECT_EQ(decode_matrix(bytes), m);
}

TEST(MatrixFile, RoundTripsOverSeveralFields) {
  Rng rng(11);
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 2u}, {7u, 1u}, {2u, 8u}}) {
    auto f = ffla::Field::make(p, e);
    for (int t = 0; t < 5; ++t) {
      auto m = oracle::random_matrix(f, rng.below(70), 1 + rng.below(70), rng);
      EXPECT_EQ(decode_matrix(encode_matrix(m)), m) << f->name();
    }
  }
}

TEST(MatrixFile, RejectsCorruptFiles) {
  auto f = ffla::Field::make(3, 1);
  auto bytes = encode_matrix(ffla::Matrix::from_rows(f, {{1, 2, 0}}));
  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(decode_matrix(bad), Error);
  bad = bytes;
  bad.pop_back();
  EXPECT_THROW(decode_matrix(bad), Error);
  bad = bytes;
  bad[20] = 0b11;  // entry 3 is outside GF(3)
  EXPECT_THROW(decode_matrix(bad), Error);
  bad = bytes;
  bad[12] = 4;  // p = 4
  EXPECT_THROW(decode_matrix(bad), Error);
}

TEST(GroupJson, ParsesAndRejects) {
  auto g = parse_group(json::parse(R"({"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]})"));
  EXPECT_EQ(g.degree, 3u);
  EXPECT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(parse_group(group_to_json(g)).generators, g.generators);
  for (const char* bad : {R"([])", R"({"name":"x","degree":3})", R"({"name":"x","degree":3,"generators":[[0,0,1]]})",
                          R"({"name":"x","degree":3,"generators":[[1,0,2]],"order":6})",
                          R"({"name":"x","degree":-3,"generators":[[1,0,2]]})",
                          R"({"name":1,"degree":3,"generators":[[1,0,2]]})"}) {
    try {
      parse_group(json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIngestion) << bad;
    }
  }
}

TEST(Cli, GroupFileMatchesCatalog) {
  auto dir = scratch("group");
  fs::create_directories(dir);
  const auto path = (dir / "s3.json").string();
  std::ofstream(path) << R"({"name": "S3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})";
  auto a = lsl({"squeeze", "--group-file", path, "--field", "3", "--steps", "10"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.report()["results"]["homology"], json::parse("[1,0,1,1,1,1,1,1,1,1,1]"));
  EXPECT_EQ(a.report()["job"]["group"]["source"], "file");
  auto b = lsl({"squeeze", "--group", path, "--field", "3", "--steps", "10"});
  EXPECT_EQ(b.report()["results"], a.report()["results"]);
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(lsl({"simples", "--group-file", path}).code, kExitIngestion);
  fs::remove_all(dir);
}

TEST(Cli, ReferenceCommands) {
  auto s = lsl({"simples", "--group", "A4"}).report()["results"]["simples"];
  ASSERT_EQ(s.size(), 3u);
  for (const auto& x : s) EXPECT_EQ(x["dim"], 1);
  auto pims = lsl({"pims", "--group", "C2"}).report()["results"]["pims"];
  ASSERT_EQ(pims.size(), 1u);
  EXPECT_EQ(pims[0]["dim"], 2);
  auto dims = [](const json& xs) {
    std::vector<int> d;
    for (const auto& x : xs) d.push_back(x["dim"]);
    return d;
  };
  EXPECT_EQ(dims(lsl({"simples", "--group", "L3_2"}).report()["results"]["simples"]), (std::vector<int>{1, 3, 3, 8}));
  auto c3 = lsl({"squeeze", "--group", "C3", "--field", "3"}).report();
  EXPECT_EQ(c3["results"]["homology"], json::parse("[3]"));
  EXPECT_EQ(c3["truncation"]["reason"], "completed");
  auto l32 = lsl({"squeeze", "--group", "L3_2", "--steps", "10", "--max-period", "4"}).report();
  EXPECT_EQ(l32["results"]["periodicity"]["certificate"]["offset"], 1);
  EXPECT_EQ(l32["results"]["periodicity"]["certificate"]["period"], 2);
  auto a4 = lsl({"squeeze", "--group", "A4", "--steps", "12"}).report();
  EXPECT_EQ(a4["results"]["homology"], json::parse("[1,1,2,2,2,2,2,2,2,2,2,2,2]"));
  EXPECT_EQ(a4["results"]["periodicity"]["certificate"]["period"], 2);
  EXPECT_EQ(lsl({"cohomology", "--group", "C2", "--degrees", "8"}).report()["results"]["cohomology"],
            json(std::vector<int>(9, 1)));
  const json ci = json::parse("[1,0,1,2,1,2,3,2,3]");
  EXPECT_EQ(lsl({"cohomology", "--group", "A4", "--degrees", "8"}).report()["results"]["cohomology"], ci);
  EXPECT_EQ(lsl({"cohomology", "--group", "L3_2", "--degrees", "8"}).report()["results"]["cohomology"], ci);
  EXPECT_EQ(lsl({"predict", "--gens", "2,3,3", "--rels", "6", "--degrees", "12"}).report()["results"]["expansion"],
            json::parse("[1,1,2,2,2,2,2,2,2,2,2,2,2]"));
  auto cmp = lsl({"compare", "--group", "A4", "--gens", "2,3,3", "--rels", "6", "--degrees", "12"}).report();
  EXPECT_EQ(cmp["results"]["verdict"], "match");
  auto p345 = lsl({"predict", "--gens", "3,4,5", "--rels", "10", "--degrees", "16"}).report()["results"];
  EXPECT_EQ(p345["growth"]["growth_degree"], 0);
  EXPECT_EQ(p345["loop_series"]["denominator"], json::parse("[8]"));
}

TEST(Cli, CompareReportsMismatchDegree) {
  auto r = lsl({"compare", "--group", "S3", "--gens", "2,3,3", "--rels", "6", "--degrees", "6"}).report();
  EXPECT_EQ(r["results"]["verdict"], "mismatch");
  EXPECT_EQ(r["results"]["mismatch_degree"], 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(lsl({"squeeze", "--group", "A4", "--max-dim", "6"}).code, kExitTruncated);
  auto t = lsl({"squeeze", "--group", "A4", "--max-dim", "6"}).report();
  EXPECT_EQ(t["status"], "truncated");
  EXPECT_EQ(t["truncation"]["reason"], "dim_limit");
  auto bad = lsl({"squeeze", "--group", "Nope"});
  EXPECT_EQ(bad.code, kExitIngestion);
  EXPECT_EQ(bad.report()["status"], "error");
  EXPECT_EQ(bad.report()["error"]["code"], "Ingestion");
  EXPECT_EQ(lsl({"simples", "--group", "A4", "--field", "2.x"}).code, kExitIngestion);
  EXPECT_EQ(lsl({"simples"}).code, kExitIngestion);
  EXPECT_EQ(lsl({"frobnicate"}).code, kExitIngestion);
  EXPECT_EQ(lsl({"simples", "--group", "A4", "--group-file", "x.json"}).code, kExitIngestion);
  EXPECT_EQ(lsl({"--help"}).code, kExitOk);
}

TEST(Cli, DeterministicApartFromTiming) {
  for (std::vector<std::string> job : {std::vector<std::string>{"pims", "--group", "L3_2", "--seed", "7"},
                                       {"squeeze", "--group", "S3", "--steps", "8", "--seed", "3"},
                                       {"chop", "--group", "A4", "--seed", "5"}}) {
    auto a = lsl(job).report(), b = lsl(job).report();
    a.erase("timing");
    b.erase("timing");
    EXPECT_EQ(a.dump(), b.dump());
  }
}

TEST(Cli, TextFormatComesFromTheSameReport) {
  auto r = lsl({"squeeze", "--group", "A4", "--steps", "4", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("homology: 1, 1, 2, 2, 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("reason: step_limit\n"), std::string::npos);
}

TEST(Cli, PersistAndResume) {
  auto dir = scratch("resume");
  auto first = lsl({"squeeze", "--group", "L3_2", "--steps", "3", "--out", dir.string()});
  ASSERT_EQ(first.code, 0) << first.err;
  auto manifest = json::parse(std::ifstream(dir / "manifest.json"));
  EXPECT_EQ(manifest["terms"].size(), 4u);
  EXPECT_EQ(manifest["truncation"]["reason"], "step_limit");
  for (const auto& d : manifest["differentials"]) {
    auto m = read_matrix((dir / d["file"].get<std::string>()).string());
    EXPECT_EQ(m.rows(), d["rows"].get<std::size_t>());
    EXPECT_EQ(m.cols(), d["cols"].get<std::size_t>());
  }
  auto resumed = lsl({"squeeze", "--resume", dir.string(), "--steps", "10", "--max-period", "4"});
  auto direct = lsl({"squeeze", "--group", "L3_2", "--steps", "10", "--max-period", "4"});
  ASSERT_EQ(resumed.code, 0) << resumed.err;
  EXPECT_EQ(resumed.report()["results"], direct.report()["results"]);
  EXPECT_EQ(json::parse(std::ifstream(dir / "manifest.json"))["terms"].size(), 11u);

  EXPECT_EQ(lsl({"squeeze", "--resume", dir.string(), "--group", "A4"}).code, kExitIngestion);
  EXPECT_EQ(lsl({"cohomology", "--resume", dir.string()}).code, kExitIngestion);

  // A flipped entry in a stored differential is caught on resume.
  auto d2 = (dir / "d2.lsl1").string();
  auto m = read_matrix(d2);
  m.set(0, 0, m.at(0, 0) ^ 1);
  write_matrix(d2, m);
  auto corrupt = lsl({"squeeze", "--resume", dir.string(), "--steps", "12"});
  EXPECT_EQ(corrupt.code, kExitIngestion);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace lsl::cli
