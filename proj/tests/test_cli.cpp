// End-to-end checks of the qfuse binary; QFUSE_CLI is set by CMake.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string &args, const std::string &stdin_data = "")
{
  std::string cmd;
  if (!stdin_data.empty()) {
    REQUIRE(stdin_data.find('\'') == std::string::npos);
    cmd = "printf '%s' '" + stdin_data + "' | ";
  }
  cmd += std::string(QFUSE_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int rc = pclose(p);
  r.status = WEXITSTATUS(rc);
  return r;
}

} // namespace

TEST_CASE("expand emits the u-basis decomposition")
{
  auto r = run("expand --index-set nat 0,1,0");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"index_set\":{\"kind\":\"nat\"},\"basis\":\"u\",\"terms\":"
        "[{\"word\":[0],\"coeff\":\"2\"},{\"word\":[0,1,0],\"coeff\":\"1\"}]}\n");
}

TEST_CASE("dim and conf")
{
  CHECK(run("dim --index-set nat --n 2 0,1,0").out == "4\n");
  auto conf = run("conf --index-set int --format table 1,2,1,2");
  CHECK(conf.status == 0);
  int lines = 0;
  for (char c : conf.out) lines += c == '\n';
  CHECK(lines == 6);
}

TEST_CASE("deterministic output across runs")
{
  for (std::string args : {std::string("fuse --index-set mod:2 0,1 0,1"),
                           std::string("confluence --index-set nat --n 2 --window 0:2"),
                           std::string("sl2-check 0,1,0,1")}) {
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("expand then convert --to f round-trips the input word")
{
  auto expanded = run("expand --index-set nat 0,1,0,1");
  auto back = run("convert --to f", expanded.out);
  CHECK(back.status == 0);
  CHECK(back.out ==
        "{\"index_set\":{\"kind\":\"nat\"},\"basis\":\"f\",\"terms\":"
        "[{\"word\":[0,1,0,1],\"coeff\":\"1\"}]}\n");
}

TEST_CASE("usage errors exit with status 2")
{
  CHECK(run("dim --index-set nat --n 1 0").status == 2);
  CHECK(run("expand --index-set bogus 0").status == 2);
  CHECK(run("expand --index-set nat 0 1 2").status == 2);
}
