// Runs the installed command-line tool as a subprocess.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(QHO_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_states(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("qho_blackbox_" + name + ".jsonl");
  std::ofstream(path) << text;
  return path.string();
}

// Drops the trailing footer object, which carries wall time.
std::string body_of(const std::string& json) {
  const auto pos = json.find("\"footer\"");
  return pos == std::string::npos ? json : json.substr(0, pos);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const std::string kHo1d =
    "{\"kind\":\"ho1d\",\"n\":0,\"m\":0,\"theta\":0.3}\n"
    "{\"kind\":\"ho1d\",\"n\":1,\"m\":2,\"theta\":0.7853981633974483}\n";

}  // namespace

TEST(CliBlackbox, SuccessExitsZero) {
  const std::string f = write_states("ok", kHo1d);
  const CliRun r = run("spectrum --states " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"closed_form\": 0.5"), std::string::npos);
  EXPECT_NE(r.out.find("\"closed_form\": 2.0"), std::string::npos);
  EXPECT_EQ(run("verify --suite ladder").code, 0);
}

TEST(CliBlackbox, UsageErrorsExitOne) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("spectrum").code, 1);
  EXPECT_EQ(run("spectrum --states " + write_states("empty", "# nothing\n\n")).code, 1);
  EXPECT_EQ(run("spectrum --states " + write_states("ok", kHo1d) + " --format xml").code, 1);
  EXPECT_EQ(run("spectrum --states " + write_states("ok", kHo1d) + " --tol -1").code, 1);
  EXPECT_EQ(run("verify --suite nonsense").code, 1);
}

TEST(CliBlackbox, ValidationErrorsExitTwo) {
  EXPECT_EQ(run("spectrum --states " + write_states("bad", "{\"kind\":\"ho1d\",\"n\":-1,\"m\":0,\"theta\":0}\n")).code, 2);
  EXPECT_EQ(run("spectrum --states " + write_states("unknown", "{\"kind\":\"ho1d\",\"n\":1,\"m\":0,\"theta\":0,\"x\":1}\n")).code, 2);
  const std::string mixed = write_states(
      "mixed", "{\"kind\":\"ho1d\",\"n\":0,\"m\":1,\"theta\":0.5}\n{\"kind\":\"radial\",\"u\":0,\"v\":1,\"l\":0,\"theta\":0.5}\n");
  EXPECT_EQ(run("gram --states " + mixed).code, 2);
  const std::string one = write_states("one", "{\"kind\":\"ho1d\",\"n\":0,\"m\":0,\"theta\":0}\n");
  EXPECT_EQ(run("sample --states " + one + " --grid-min 2 --grid-max 1").code, 2);
  EXPECT_EQ(run("sample --states " + one + " --grid-count 1").code, 2);
  EXPECT_EQ(run("spectrum --states " + one + " --mu -2").code, 2);
  EXPECT_EQ(run("spectrum --states /nonexistent/qho_states.jsonl").code, 2);
}

TEST(CliBlackbox, FailedCheckExitsThree) {
  const std::string f = write_states(
      "strict", "{\"kind\":\"ho1d\",\"n\":3,\"m\":5,\"theta\":0.7}\n{\"kind\":\"ho1d\",\"n\":2,\"m\":5,\"theta\":0.7}\n");
  const CliRun r = run("spectrum --states " + f + " --tol 1e-300");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("\"passed\": false"), std::string::npos);
  EXPECT_EQ(run("verify --suite angular --quad-order 4").code, 3);
}

TEST(CliBlackbox, ByteIdenticalBodies) {
  const std::string f = write_states("det", kHo1d);
  for (const std::string& cmd : {"spectrum --states " + f, "gram --states " + f, std::string("verify --suite algebra"),
                                 "spectrum --format csv --states " + f}) {
    const CliRun a = run(cmd), b = run(cmd);
    ASSERT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(body_of(a.out), body_of(b.out)) << cmd;
    EXPECT_FALSE(body_of(a.out).empty());
  }
}

TEST(CliBlackbox, StdinDescriptors) {
  const std::string f = write_states("stdin", kHo1d);
  const CliRun a = run("spectrum --states - < " + f);
  const CliRun b = run("spectrum --states " + f);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(body_of(a.out), body_of(b.out));
}

TEST(CliBlackbox, SampleGroundStateSymmetric) {
  const std::string f = write_states("ground", "{\"kind\":\"ho1d\",\"n\":0,\"m\":0,\"theta\":0}\n");
  const CliRun r = run("sample --states " + f + " --grid-min -4 --grid-max 4 --grid-count 9");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 10u);  // header plus one row per point
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "re_z0", "im_z0", "re_z1", "im_z1", "abs"}));
  for (std::size_t i = 1; i <= 9; ++i) {
    ASSERT_EQ(rows[i].size(), 6u);
    EXPECT_DOUBLE_EQ(std::stod(rows[i][5]), std::stod(rows[10 - i][5]));
  }
  EXPECT_NEAR(std::stod(rows[5][5]), std::pow(M_PI, -0.25), 1e-15);
}

TEST(CliBlackbox, SamplePureSlotOne) {
  const std::string f = write_states("slot1", "{\"kind\":\"ho1d\",\"n\":0,\"m\":1,\"theta\":1.5707963267948966}\n");
  const CliRun r = run("sample --states " + f + " --grid-count 17");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 18u);
  double largest_z1 = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    // cos(pi/2) in floating point is 6e-17, not 0
    EXPECT_LE(std::abs(std::stod(rows[i][1])), 1e-16);
    EXPECT_LE(std::abs(std::stod(rows[i][2])), 1e-16);
    largest_z1 = std::max(largest_z1, std::abs(std::stod(rows[i][3])));
  }
  EXPECT_GT(largest_z1, 0.1);
}
