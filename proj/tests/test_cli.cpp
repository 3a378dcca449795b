#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli analyze") {
  const Run a = run("analyze --q 2 --k 3 --m 0 --format json");
  CHECK(a.code == 0);
  CHECK(a.out.find(R"("tt_injective":true)") != std::string::npos);
  CHECK(a.out.find(R"("direct_sum":true)") != std::string::npos);
  CHECK(a.out.find(R"("slopes":[{"slope":"1/1","mult":1}])") != std::string::npos);
  CHECK(a.out.find(R"("zero_count":1)") != std::string::npos);

  const Run b = run("analyze --q 3 --k 5 --m 1");
  CHECK(b.code == 2);
  CHECK(b.out.find("InvalidWeightType") != std::string::npos);

  const Run c = run("analyze --q 3 --k 2 --m 1");
  CHECK(c.code == 0);
  CHECK(c.out.find(R"("slopes":[{"slope":"1/1","mult":1}])") != std::string::npos);
  CHECK(c.out.find(R"("dim_new":1)") != std::string::npos);
  CHECK(c.out.find(R"("dim_old":0)") != std::string::npos);
}

TEST_CASE("cli sweep") {
  const Run a = run("sweep --q 2,3 --k 2..20 --types all --format csv");
  CHECK(a.code == 0);
  CHECK(a.out.rfind("q,k,m,j,n,slope_num,slope_den,multiplicity\n", 0) == 0);
  CHECK(a.out.find("\n3,2,1,0,1,1,1,1\n") != std::string::npos);

  CHECK(run("sweep --q 2 --k 5..3").code == 2);
  CHECK(run("sweep --q 2 --k 2..3 --n-cap 0").code == 2);
  CHECK(run("sweep --q 5 --k 3 --m 1").code == 2);  // nothing analyzable
  const Run j1 = run("sweep --q 5 --k 2..60 --jobs 1");
  const Run j8 = run("sweep --q 5 --k 2..60 --jobs 8");
  CHECK(j1.code == 0);
  CHECK(j1.out == j8.out);
  const Run k_range = run("sweep --q 5 --k-range 2..60");
  CHECK(k_range.out == j1.out);
  const Run env = run("sweep --q 5 --k 2..60");
  CHECK(env.out == j1.out);
}

TEST_CASE("cli usage and io errors") {
  CHECK(run("").code == 64);
  CHECK(run("frobnicate").code == 64);
  CHECK(run("analyze --q 2 --k 3").code == 64);
  CHECK(run("analyze --q two --k 3 --m 0").code == 64);
  CHECK(run("analyze --q 2 --k 3 --m 0 --format yaml").code == 64);
  CHECK(run("sweep --q 2 --k 2..4 --types some").code == 64);
  CHECK(run("sweep --q 2 --k 2..4 --jobs 0").code == 64);
  CHECK(run("sweep --q 2 --k 2..4 --out /nonexistent-dir/report.json").code == 74);
  CHECK(run("--help").code == 0);
}

TEST_CASE("cli writes files and lists identities") {
  const std::string path = "cli_test_report.json";
  REQUIRE(run("analyze --q 3 --k 6 --m 1 --out " + path).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run("analyze --q 3 --k 6 --m 1").out);
  std::remove(path.c_str());

  const Run ids = run("identities --q 3 --k 6 --m 1");
  CHECK(ids.code == 0);
  CHECK(ids.out.find("m_cubed_eq_m pass\n") != std::string::npos);
  CHECK(ids.out.find("ker_dirsum_characterization pass\n") != std::string::npos);
  CHECK(ids.out.find("FAIL") == std::string::npos);
}
