#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(QINVAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qinvar_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(cli, mub_pass) {
  const CliRun r = run("mub 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
}

TEST(cli, mub_not_prime_power) {
  EXPECT_EQ(run("mub 6").exit_code, 2);
  EXPECT_EQ(run("mub 64").exit_code, 2);
  EXPECT_EQ(run("mub").exit_code, 2);
}

TEST(cli, mub_dump) {
  const auto path = scratch("bases9.csv");
  ASSERT_EQ(run("mub 9 --dump " + path.string()).exit_code, 0);
  const std::string csv = slurp(path);
  EXPECT_EQ(csv.rfind("basis,vector,component,re,im\n", 0), 0u);
  EXPECT_EQ(count_lines(csv), 1u + 810u);  // 10 bases x 9 vectors x 9 components
}

TEST(cli, isotropic_sweep) {
  const CliRun r = run("isotropic-sweep --steps 101");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("F,I1,I2,tangle_eq8,lhs,rhs\n", 0), 0u);
  EXPECT_EQ(count_lines(r.out), 102u);
  EXPECT_EQ(run("isotropic-sweep --d 5").exit_code, 2);
}

TEST(cli, decoherence_sweep) {
  const CliRun dep = run("decoherence-sweep --kind depolarization --steps 11");
  ASSERT_EQ(dep.exit_code, 0);
  EXPECT_EQ(dep.out.rfind("a,p,I_bits,I_closed\n", 0), 0u);
  EXPECT_EQ(count_lines(dep.out), 1u + 121u);
  EXPECT_NE(dep.out.find("\n0.5,1,0,0\n"), std::string::npos);

  const CliRun diss = run("decoherence-sweep --kind dissipation --steps 3");
  ASSERT_EQ(diss.exit_code, 0);
  EXPECT_EQ(diss.out.rfind("a,p,I_bits\n", 0), 0u);
  EXPECT_NE(diss.out.find("\n1,1,2\n"), std::string::npos);
  EXPECT_NE(diss.out.find("\n0,0.5,0\n"), std::string::npos);

  EXPECT_EQ(run("decoherence-sweep --kind amplitude").exit_code, 2);
}

TEST(cli, output_is_byte_identical_across_runs) {
  const auto a = scratch("deph_a.csv"), b = scratch("deph_b.csv");
  ASSERT_EQ(run("decoherence-sweep --kind dephasing --steps 41 --out " + a.string()).exit_code, 0);
  ASSERT_EQ(run("decoherence-sweep --kind dephasing --steps 41 --out " + b.string()).exit_code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(run("verify --suite eq5 --seed 7").out, run("verify --suite eq5 --seed 7").out);
}

TEST(cli, verify_suites) {
  const CliRun eq5 = run("verify --suite eq5 --seed 7");
  EXPECT_EQ(eq5.exit_code, 0);
  EXPECT_NE(eq5.out.find("\"passed\": true"), std::string::npos);
  EXPECT_NE(eq5.out.find("\"samples\": 1000"), std::string::npos);
  EXPECT_EQ(run("verify --suite gap-example").exit_code, 0);
  EXPECT_EQ(run("verify --suite conjecture9").exit_code, 0);
  EXPECT_EQ(run("verify --suite nonsense").exit_code, 2);
}

TEST(cli, seed_from_environment) {
  const CliRun env = run("verify --suite eq5");
  setenv("QINVAR_SEED", "7", 1);
  const CliRun seeded = run("verify --suite eq5");
  unsetenv("QINVAR_SEED");
  EXPECT_NE(seeded.out.find("\"seed\": 7"), std::string::npos);
  EXPECT_EQ(seeded.out, run("verify --suite eq5 --seed 7").out);
  EXPECT_NE(env.out.find("\"seed\": 1"), std::string::npos);
}
