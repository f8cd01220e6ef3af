/// @file
/// @brief In-process tests of the command line.

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "oracles.h"
#include "tma/cli.h"
#include "tma/fixtures.h"
#include "tma/fragment_json.h"
#include "tma/io.h"

namespace tma {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tma_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  std::string write(const std::string& name, const std::string& content) {
    write_file_atomic(dir_ / name, content);
    return (dir_ / name).string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::vector<std::string> files(const fs::path& d) const {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(d)) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, BuiltInFixtures) {
  EXPECT_EQ(run({"--paper-fixtures"}), kExitOk) << out_.str();
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, IngestMidiAndJson) {
  const std::vector<Note> notes{{60, 0, 1, false}, {64, 0, 1, false}, {67, 0, 1, false}};
  const auto bytes = testing::write_midi(0, 480, {testing::note_track(notes, 480)});
  write_file_atomic(dir_ / "score.mid", std::string(bytes.begin(), bytes.end()));
  write_file_atomic(dir_ / "bad.mid", "MThd garbage");
  const std::string json = write("luna.json", serialize_fragment_json(luna_fragment()));
  const int code = run({"ingest", path("score.mid"), path("bad.mid"), json, "--out", path("out")});
  EXPECT_EQ(code, kExitIngest);
  EXPECT_NE(err_.str().find("MalformedMidi"), std::string::npos);
  EXPECT_NE(err_.str().find("byte offset"), std::string::npos);
  EXPECT_EQ(files(dir_ / "out"), (std::vector<std::string>{"luna.fragment.json", "score.fragment.json"}));
  const MusicFragment f = parse_fragment_json(read_text_file(dir_ / "out" / "score.fragment.json"));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.events[0].chord.values(), (std::vector<int>{0, 4, 7}));
  EXPECT_EQ(run({"ingest", path("score.mid"), "--out", path("out2")}), kExitOk);
}

TEST_F(CliTest, AnalyzeWritesEveryArtifact) {
  ASSERT_EQ(run({"analyze", "luna", "--out", path("a"), "--max-dim", "1"}), kExitOk) << err_.str();
  const auto names = files(dir_ / "a");
  EXPECT_EQ(names.size(), 24u);
  EXPECT_EQ(std::count_if(names.begin(), names.end(), [](const std::string& n) { return n.ends_with(".svg"); }), 12);
  const DiagramDocument doc = parse_diagram_json(read_text_file(dir_ / "a" / "luna-gh-fjh-mm1-2.IV.diagram.json"));
  EXPECT_EQ(doc.diagrams.size(), 2u);
  EXPECT_EQ(doc.scale, "diameter");
  EXPECT_EQ(doc.field, "Z/2");
}

TEST_F(CliTest, AnalyzeIsByteStable) {
  ASSERT_EQ(run({"analyze", "luna", "--out", path("x"), "--mapping", "III", "--mapping", "IV"}), kExitOk);
  ASSERT_EQ(run({"analyze", "luna", "--out", path("y"), "--mapping", "IV", "--mapping", "III"}), kExitOk);
  for (const auto& name : files(dir_ / "x")) {
    EXPECT_EQ(read_text_file(dir_ / "x" / name), read_text_file(dir_ / "y" / name)) << name;
  }
}

TEST_F(CliTest, AnalyzeEmptyFragmentAndFormats) {
  const std::string empty = write("empty.json", R"({"label": "empty", "events": []})");
  EXPECT_EQ(run({"analyze", empty, "--out", path("e"), "--format", "json"}), kExitOk);
  EXPECT_NE(err_.str().find("warning"), std::string::npos);
  EXPECT_EQ(files(dir_ / "e").size(), 6u);
}

TEST_F(CliTest, ExitCodes) {
  const std::string bad = write("bad.json", R"({"events": [{"pcs": [0], "duration": [0, 1], "onset": [0, 1]}]})");
  EXPECT_EQ(run({"analyze", bad, "--out", path("o")}), kExitSchema);
  EXPECT_NE(err_.str().find("/events/0/duration"), std::string::npos);
  EXPECT_EQ(run({"compare", "luna", "--out", path("o")}), kExitTooFewFragments);
  EXPECT_EQ(run({"complexes", "luna", "--kind", "radius", "--radius", "14", "--out", path("o")}), kExitOutOfRange);
  EXPECT_EQ(run({"complexes", "luna", "--kind", "radius", "--out", path("o")}), kExitOutOfRange);
  EXPECT_EQ(run({"analyze", "luna", "--max-dim", "12", "--out", path("o")}), kExitOutOfRange);
  EXPECT_EQ(run({"analyze", "luna", "--field", "z4", "--out", path("o")}), kExitOutOfRange);
  EXPECT_EQ(run({"analyze", "luna", "--mapping", "VII", "--out", path("o")}), kExitOutOfRange);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"analyze", path("missing.json")}), kExitUsage);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

TEST_F(CliTest, ComplexesRowCounts) {
  ASSERT_EQ(run({"complexes", "luna", "--out", path("c")}), kExitOk);
  const std::string cumulative = read_text_file(dir_ / "c" / "luna-gh-fjh-mm1-2.cumulative.betti.csv");
  EXPECT_EQ(std::count(cumulative.begin(), cumulative.end(), '\n'), 29);
  ASSERT_EQ(run({"complexes", "luna", "--kind", "radius", "--radius", "4", "--out", path("c")}), kExitOk);
  const std::string r4 = read_text_file(dir_ / "c" / "luna-gh-fjh-mm1-2.radius.r4.betti.csv");
  EXPECT_EQ(std::count(r4.begin(), r4.end(), '\n'), 22);
  EXPECT_TRUE(fs::exists(dir_ / "c" / "luna-gh-fjh-mm1-2.radius.r4.betti.svg"));
  ASSERT_EQ(run({"complexes", "luna", "--kind", "radius-filtration", "--center", "3", "--out", path("c")}), kExitOk);
  ASSERT_EQ(run({"complexes", "luna", "--kind", "pitch-interval", "--out", path("c")}), kExitOk);
}

TEST_F(CliTest, CompareIdenticalAndTransposed) {
  const MusicFragment luna = luna_fragment();
  const std::string a = write("a.json", serialize_fragment_json(luna));
  const std::string b = write("b.json", serialize_fragment_json(luna));
  MusicFragment up = transpose(luna, 5);
  up.source_label = "up";
  const std::string c = write("c.json", serialize_fragment_json(up));
  ASSERT_EQ(run({"compare", a, b, c, "--max-dim", "1", "--out", path("m")}), kExitOk) << err_.str();
  for (const char* mapping : {"II", "III", "IV", "VI"}) {
    const std::string csv = read_text_file(dir_ / "m" / ("compare." + std::string(mapping) + ".H0.matrix.csv"));
    EXPECT_EQ(csv, "label,luna-gh-fjh-mm1-2,luna-gh-fjh-mm1-2~2,up\n"
                   "luna-gh-fjh-mm1-2,0,0,0\nluna-gh-fjh-mm1-2~2,0,0,0\nup,0,0,0\n")
        << mapping;
  }
  EXPECT_TRUE(fs::exists(dir_ / "m" / "compare.IV.H0.dendrogram.svg"));
  EXPECT_TRUE(fs::exists(dir_ / "m" / "compare.IV.H0.dendrogram.json"));
}

TEST_F(CliTest, CompareIsOrderInvariant) {
  std::mt19937 rng(73);
  std::vector<std::string> paths;
  for (int k = 0; k < 3; ++k) {
    MusicFragment f = testing::random_fragment(rng, 10);
    f.source_label = "frag" + std::to_string(k);
    paths.push_back(write(f.source_label + ".json", serialize_fragment_json(f)));
  }
  ASSERT_EQ(run({"compare", paths[0], paths[1], paths[2], "--mapping", "IV", "--max-dim", "0", "--out", path("p")}),
            kExitOk);
  const std::string forward = out_.str();
  ASSERT_EQ(run({"compare", paths[2], paths[0], paths[1], "--mapping", "IV", "--max-dim", "0", "--out", path("q")}),
            kExitOk);
  EXPECT_EQ(out_.str(), forward);
}

TEST_F(CliTest, RenderFromJson) {
  ASSERT_EQ(run({"analyze", "luna", "--mapping", "I", "--format", "json", "--out", path("r")}), kExitOk);
  ASSERT_EQ(run({"render", path("r/luna-gh-fjh-mm1-2.I.diagram.json"), "--out", path("svg")}), kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "svg" / "luna-gh-fjh-mm1-2.I.barcode.svg"));
  EXPECT_TRUE(fs::exists(dir_ / "svg" / "luna-gh-fjh-mm1-2.I.diagram.svg"));
  const std::string junk = write("junk.json", R"({"diagrams": 3})");
  EXPECT_EQ(run({"render", junk, "--out", path("svg")}), kExitSchema);
}

}  // namespace
}  // namespace tma
