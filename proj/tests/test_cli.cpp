#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& out_dir)
{
    const std::string cmd = std::string(ANGMAX_CLI_PATH) + " " + args + " --out " + out_dir +
                            " 2>&1";
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[512];
    while (fgets(buf, sizeof buf, pipe) != nullptr) output += buf;
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& tag)
{
    const fs::path dir = fs::temp_directory_path() / ("angmax_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("transform: poisson fixture evaluates to 0.25")
{
    const fs::path dir = fresh_dir("t1");
    const RunResult r =
        run_cli("transform --kind poisson --f fixture:indicator01 --x 0 --y 1", dir.string());
    CHECK(r.exit_code == 0);

    const std::string csv = slurp(dir / "transform.csv");
    CHECK(csv.find("0.25000000000000000") != std::string::npos);
    CHECK(csv.find("# angmax 0.1.0") == 0);
    CHECK(csv.find("# config:") != std::string::npos);
    const std::string json = slurp(dir / "transform.json");
    CHECK(json.find("\"version\"") != std::string::npos);
}

TEST_CASE("transform: inline JSON laplace")
{
    const fs::path dir = fresh_dir("t2");
    const RunResult r = run_cli(
        "transform --kind laplace --f "
        "'{\"breakpoints\":[0,1],\"values\":[[1,0]]}' --rho 1 --theta 0",
        dir.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(dir / "transform.csv").find("0.63212055882855767") != std::string::npos);
}

TEST_CASE("transform: stieltjes on the support exits 3")
{
    const fs::path dir = fresh_dir("t3");
    const RunResult r =
        run_cli("transform --kind stieltjes --f fixture:indicator01 --z 0.5,0", dir.string());
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("domain error") != std::string::npos);
}

TEST_CASE("config errors exit 2")
{
    const fs::path dir = fresh_dir("t4");
    CHECK(run_cli("maxprofile --kind poisson --f fixture:indicator01 --grid 10,1,64",
                  dir.string())
              .exit_code == 2);
    CHECK(run_cli("verify bogus", dir.string()).exit_code == 2);
    CHECK(run_cli("transform --kind nosuch --f fixture:indicator01", dir.string()).exit_code ==
          2);
    CHECK(run_cli("transform --kind poisson --f fixture:nosuch", dir.string()).exit_code == 2);
}

TEST_CASE("maxprofile: laplace of exp1 reports the sqrt(pi) ratio")
{
    const fs::path dir = fresh_dir("t5");
    const RunResult r = run_cli(
        "maxprofile --kind laplace --f fixture:exp1 --p 2 --grid 1e-3,1e3,512 --jobs 2",
        dir.string());
    CHECK(r.exit_code == 0);

    const std::string summary = slurp(dir / "maxprofile_summary.json");
    CHECK(summary.find("\"ratio\"") != std::string::npos);
    // ratio ~ sqrt(pi) = 1.772...
    CHECK(summary.find("\"ratio\": 1.77") != std::string::npos);

    const std::string csv = slurp(dir / "maxprofile.csv");
    CHECK(csv.find("rho,value,theta_argmax") != std::string::npos);
}

TEST_CASE("maxprofile: poisson contraction visible in profile_max")
{
    const fs::path dir = fresh_dir("t6");
    const RunResult r = run_cli(
        "maxprofile --kind poisson --f fixture:indicator01 --grid 1e-2,1e2,128", dir.string());
    CHECK(r.exit_code == 0);
    // stdout reports the profile max, which contracts below ||f||_inf = 1
    CHECK(r.output.find("profile_max = 0.99") != std::string::npos);
}

TEST_CASE("verify lemma1 passes and reruns byte-identically")
{
    const fs::path dir1 = fresh_dir("t7a");
    const RunResult r1 = run_cli("verify lemma1", dir1.string());
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("PASS") != std::string::npos);

    const fs::path dir2 = fresh_dir("t7b");
    const RunResult r2 = run_cli("verify lemma1", dir2.string());
    CHECK(r2.exit_code == 0);

    CHECK(slurp(dir1 / "verify_lemma1.json") == slurp(dir2 / "verify_lemma1.json"));
    CHECK(slurp(dir1 / "verify_lemma1.csv") == slurp(dir2 / "verify_lemma1.csv"));
    CHECK(slurp(dir1 / "verify_lemma1.json").find("\"flags\": []") != std::string::npos);
}

TEST_CASE("verify identity-sec4 names the matching candidate")
{
    const fs::path dir = fresh_dir("t8");
    const RunResult r = run_cli("verify identity-sec4", dir.string());
    CHECK(r.exit_code == 0);
    const std::string json = slurp(dir / "verify_identity-sec4.json");
    CHECK(json.find("\"matching_candidate\": \"half\"") != std::string::npos);
}

TEST_CASE("kernel-split emits the geometry and split values")
{
    const fs::path dir = fresh_dir("t9");
    const RunResult r = run_cli(
        "kernel-split --f fixture:indicator01 --rho 1 --theta 1.0471975511965976",
        dir.string());
    CHECK(r.exit_code == 0);
    const std::string json = slurp(dir / "kernel_split.json");
    CHECK(json.find("\"delta\"") != std::string::npos);
    CHECK(json.find("\"split_residual\"") != std::string::npos);
    CHECK(json.find("\"g1\"") != std::string::npos);
}

TEST_CASE("config file values are overridden by flags")
{
    const fs::path dir = fresh_dir("t10");
    const fs::path cfg = dir / "cfg.json";
    {
        std::ofstream out(cfg);
        out << R"({"kind":"poisson","f":"fixture:indicator01","x":0.0,"y":2.0})";
    }
    // config alone: poisson at y=2
    const RunResult r1 =
        run_cli("transform --config " + cfg.string(), dir.string());
    CHECK(r1.exit_code == 0);
    // flag overrides y back to 1 -> 0.25
    const RunResult r2 =
        run_cli("transform --config " + cfg.string() + " --y 1", dir.string());
    CHECK(r2.exit_code == 0);
    CHECK(slurp(dir / "transform.csv").find("0.25000000000000000") != std::string::npos);
}

TEST_CASE("ANGMAX_OUT environment variable sets the default output directory")
{
    const fs::path dir = fresh_dir("t11");
    const std::string cmd = std::string("ANGMAX_OUT=") + dir.string() + " " + ANGMAX_CLI_PATH +
                            " transform --kind hilbert --f fixture:indicator01 --x 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    while (fgets(buf, sizeof buf, pipe) != nullptr) {}
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(dir / "transform.csv"));
    CHECK(slurp(dir / "transform.csv").find("0.22063560015265160") != std::string::npos);
}
