#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FROBLAB_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  Run r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe.get())) r.out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string corpus(const std::string& name) {
  return std::string(FROBLAB_CORPUS_DIR) + "/" + name + ".facets";
}

}  // namespace

TEST(Cli, TwoPointsJson) {
  const auto r = run("analyze-complex " + corpus("two_points") + " --prime 2 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "complex");
  EXPECT_EQ(j["depth"], 1);
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["is_cm"], true);
  EXPECT_EQ(j["table"].size(), 3u);
  EXPECT_EQ(j["fh_counts"][1]["count"], 8);
  EXPECT_EQ(j["fh_counts"][1]["status"], "validated");
}

TEST(Cli, TriangleText) {
  const auto r = run("analyze-complex " + corpus("triangle_boundary") + " -p 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Cohen-Macaulay yes"), std::string::npos);
}

TEST(Cli, BadInput) {
  const auto empty = std::filesystem::temp_directory_path() / "froblab_empty.facets";
  std::ofstream(empty).close();
  EXPECT_EQ(run("analyze-complex " + empty.string() + " --prime 2").status, 1);
  EXPECT_EQ(run("analyze-complex /nonexistent/file --prime 2").status, 1);
  EXPECT_EQ(run("analyze-complex " + corpus("two_points") + " --prime 4").status, 1);
  EXPECT_EQ(run("analyze-hypersurface --poly 'x^2+y' --prime 3").status, 1);
  EXPECT_EQ(run("analyze-hypersurface --prime 3").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
}

TEST(Cli, Hypersurface) {
  const auto r7 = run("analyze-hypersurface --poly 'x^3+y^3+z^3' --prime 7 --class 'x^2' --format json");
  ASSERT_EQ(r7.status, 0);
  const auto j7 = nlohmann::json::parse(r7.out);
  EXPECT_EQ(j7["f_pure"], true);
  EXPECT_EQ(j7["f_injective"]["t1"], true);
  EXPECT_EQ(j7["tight_closure"]["verdicts"][0]["verdict"], "consistent-up-to-2");

  const auto r5 = run("analyze-hypersurface --poly 'x^3+y^3+z^3' --prime 5 --format json");
  ASSERT_EQ(r5.status, 0);
  const auto j5 = nlohmann::json::parse(r5.out);
  EXPECT_EQ(j5["f_pure"], false);
  EXPECT_EQ(j5["f_injective"]["t1"], false);

  const auto r3 = run("analyze-hypersurface --poly 'x^2' --prime 3 --nvars 2 --format json");
  ASSERT_EQ(r3.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r3.out)["f_injective"]["t1"], false);
}

TEST(Cli, Version) {
  const auto r = run("--version");
  EXPECT_EQ(r.status, 0);
  EXPECT_FALSE(r.out.empty());
}
