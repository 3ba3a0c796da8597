#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ZIGZAG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string span(const std::string& name) { return std::string(ZIGZAG_CORPUS) + "/" + name + ".span"; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, Info) {
  auto r = run("info " + span("circle"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "|A| = 1\n|B| = 1\n|S| = 2\nbasepoint: a\nbasepoint component: a b (2 edges)\npi1 rank: 1\n");
  auto j = nlohmann::json::parse(run("info --json " + span("theta")).out);
  EXPECT_EQ(j["pi1_rank"], 2);
  EXPECT_EQ(j["S"], 3);
}

TEST(Cli, Enumerate) {
  auto r = run("enumerate " + span("circle") + " --endpoint a --max-len 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "refl\n>s <t\n>t <s\n>s <t >s <t\n>t <s >t <s\n");
  auto j = nlohmann::json::parse(run("enumerate " + span("theta") + " --endpoint b --max-len 3 --json").out);
  EXPECT_EQ(j["words"].size(), 15u);
  EXPECT_EQ(run("enumerate " + span("circle") + " --endpoint zz --max-len 2").code, 2);
}

TEST(Cli, Reduce) {
  auto r = run("reduce " + span("interval") + " --word '>s <s'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "refl\n");
  auto j = nlohmann::json::parse(run("reduce " + span("circle") + " --word '>s <t >t <s >t' --json").out);
  EXPECT_EQ(j["normal_form"], ">t");
  EXPECT_EQ(j["cancellations"], 2);
  EXPECT_EQ(j["endpoint"], "b");
  EXPECT_EQ(run("reduce " + span("circle") + " --word '>s >t'").code, 2);
  EXPECT_EQ(run("reduce " + span("circle") + " --word '<s'").code, 2);
}

TEST(Cli, Stages) {
  auto r = run("stages " + span("circle") + " --up-to 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2   5         4         10      0       ok"), std::string::npos) << r.out;
  auto j = nlohmann::json::parse(run("stages " + span("theta") + " --up-to 2 --json").out);
  EXPECT_EQ(j["stages"][2]["fibers"]["P_A(a)"], 31);
  EXPECT_EQ(j["stages"][2]["fibers"]["P_B(b)"], 15);
  EXPECT_EQ(j["stages"][2]["bijection"], "ok");
}

TEST(Cli, Limit) {
  auto r = run("limit " + span("circle") + " --up-to 2 --endpoint a");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 11), "classes: 5\n");
  auto j = nlohmann::json::parse(run("limit " + span("circle") + " --up-to 2 --endpoint b --json").out);
  EXPECT_EQ(j["classes"], 4);
  EXPECT_EQ(j["representatives"][0]["word"].get<std::string>().size(), 2u);
}

TEST(Cli, Check) {
  auto r = run("check " + span("theta") + " --oracle --stages 3 --max-len 6");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  auto j = nlohmann::json::parse(run("check " + span("tree4") + " --oracle --json --seed 7").out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["seed"], 7);
  bool saw_oracle = false;
  for (const auto& c : j["checks"]) saw_oracle |= c["name"] == "oracle.words_vs_walks";
  EXPECT_TRUE(saw_oracle);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("info /nonexistent/file.span").code, 2);
  std::string broken = write_temp("zigzag_cli_broken.span", "A a\nB b\nS s a c\nbase a\n");
  EXPECT_EQ(run("info " + broken).code, 2);
  std::string nobase = write_temp("zigzag_cli_nobase.span", "A a\nB b\n");
  EXPECT_EQ(run("check " + nobase).code, 2);
  EXPECT_EQ(run("stages " + span("circle")).code, 2);  // --up-to missing
}
