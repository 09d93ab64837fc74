#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/io.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int rc;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "hypfan");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int rc = hypfan::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {rc, out.str(), err.str()};
}

std::string octahedral() { return run({"generate", "octahedral"}).out; }

}  // namespace

TEST(Cli, OctahedralFlowReport) {
  auto r = run({"flow", "--w", "2,1", "--betti", "1,0,1"}, octahedral());
  ASSERT_EQ(r.rc, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["index_counts"], json({2, 2, 2}));
  EXPECT_EQ(j["domains"], 8);
  EXPECT_TRUE(j["verdicts"].is_array());
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(Cli, RationalDirection) {
  auto r = run({"flow", "--w", "3/2,1"}, octahedral());
  EXPECT_EQ(r.rc, 0) << r.err;
}

TEST(Cli, NonGenericExitsTwo) {
  auto r = run({"flow", "--w", "1,0"}, octahedral());
  EXPECT_EQ(r.rc, hypfan::cli::kUsage);
  EXPECT_NE(r.err.find("NonGenericDirection"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"flow"}, octahedral()).rc, hypfan::cli::kUsage);
  EXPECT_EQ(run({"validate", "--bogus"}).rc, hypfan::cli::kUsage);
  EXPECT_EQ(run({}).rc, hypfan::cli::kUsage);
  EXPECT_EQ(run({"generate", "genus", "--g", "1", "--variant", "9"}).rc, hypfan::cli::kUsage);
  EXPECT_EQ(run({"validate"}, "{not json").rc, hypfan::cli::kUsage);
}

TEST(Cli, ValidateGenerated) {
  for (const char* kind : {"octahedral", "s3", "rp3"}) {
    auto r = run({"validate"}, run({"generate", kind}).out);
    EXPECT_EQ(r.rc, 0) << kind << r.out;
  }
  auto g = run({"generate", "genus", "--g", "2"});
  ASSERT_EQ(g.rc, 0);
  EXPECT_EQ(run({"validate"}, g.out).rc, 0);
}

TEST(Cli, ValidateFailureExitsOne) {
  json j = json::parse(octahedral());
  j["surface"] = {{"orientable", true}, {"genus_or_crosscaps", 1}};
  auto r = run({"validate"}, j.dump());
  EXPECT_EQ(r.rc, hypfan::cli::kCheckFailed);
  EXPECT_FALSE(json::parse(r.out)["ok"].get<bool>());

  json bad = json::parse(octahedral());
  bad["fan"]["vectors"]["2"] = json({1, 1});
  EXPECT_EQ(run({"validate"}, bad.dump()).rc, hypfan::cli::kCheckFailed);
}

TEST(Cli, CheckS2) {
  auto r = run({"check-s2"}, octahedral());
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(json::parse(r.out)["colors"]["black"], 4);
  auto two = hypfan::write_complex({hypfan::two_loops_crossing_twice(), std::nullopt, std::nullopt, std::nullopt});
  EXPECT_EQ(run({"check-s2"}, two).rc, hypfan::cli::kCheckFailed);
}

TEST(Cli, MovesPipeline) {
  auto ins = run({"move", "insert-spheres", "--x", "0"}, octahedral());
  ASSERT_EQ(ins.rc, 0) << ins.err;
  auto doc = hypfan::parse_complex(ins.out);
  EXPECT_EQ(std::get<hypfan::SurfaceComplex>(doc.complex).num_faces(), 16u);
  auto rem = run({"move", "remove-spheres", "--inner", "3", "--outer", "4"}, ins.out);
  ASSERT_EQ(rem.rc, 0) << rem.err;
  EXPECT_EQ(rem.out, octahedral());
  auto aug = run({"move", "augment", "--k", "3"}, octahedral());
  EXPECT_EQ(std::get<hypfan::SurfaceComplex>(hypfan::parse_complex(aug.out).complex).num_faces(), 32u);
  EXPECT_EQ(run({"move", "insert-spheres", "--x", "99"}, octahedral()).rc, hypfan::cli::kUsage);
}

TEST(Cli, SearchOutputsFan) {
  auto r = run({"search"}, run({"generate", "genus", "--g", "1"}).out);
  ASSERT_EQ(r.rc, 0);
  auto fan = hypfan::parse_fan(r.out);
  EXPECT_EQ(fan.dimension(), 2);
  auto two = hypfan::write_complex({hypfan::two_loops_crossing_twice(), std::nullopt, std::nullopt, std::nullopt});
  auto bad = run({"search"}, two);
  EXPECT_EQ(bad.rc, hypfan::cli::kCheckFailed);
  EXPECT_EQ(json::parse(bad.out)["verdict"], "Rejected");
}

TEST(Cli, SamplesIndependentOfJobs) {
  std::string s3 = run({"generate", "s3"}).out;
  auto a = run({"flow", "--w", "7,-3,11", "--samples", "12", "--seed", "5", "--jobs", "1"}, s3);
  auto b = run({"flow", "--w", "7,-3,11", "--samples", "12", "--seed", "5", "--jobs", "4"}, s3);
  ASSERT_EQ(a.rc, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["samples"].size(), 12u);
}

TEST(Cli, ExportFormats) {
  auto dot = run({"export", "--coloring"}, octahedral());
  ASSERT_EQ(dot.rc, 0);
  EXPECT_NE(dot.out.find("fillcolor=black"), std::string::npos);
  auto flow = run({"flow", "--w", "2,1", "--format", "dot"}, octahedral());
  EXPECT_EQ(flow.out.rfind("digraph", 0), 0u);
  auto svg = run({"export", "--format", "svg"}, octahedral());
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
}

TEST(Cli, Replay) {
  auto path = std::filesystem::temp_directory_path() / "hypfan_cli_test_script.json";
  {
    std::ofstream f(path);
    f << R"([{"op": "generate", "args": {"kind": "octahedral"}}, {"op": "augment", "args": {"k": 2}}])";
  }
  auto a = run({"replay", path.string()});
  auto b = run({"replay", path.string()});
  ASSERT_EQ(a.rc, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::get<hypfan::SurfaceComplex>(hypfan::parse_complex(a.out).complex).num_faces(), 24u);
  std::filesystem::remove(path);
}
