#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Covered tests:
// - Exit status contract (0 pass, 1 check failure, 2 usage error)
// - Byte-identical outputs for identical command lines and seeds
// - Bound-table values through the full pipeline
// - Violated-plan runs fail by default and pass under --expect-violation
// - Config-file values are honored and overridden by flags

namespace {

const std::string kCli = OFIC_CLI_PATH;

int run_cli(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > cli_test_stdout.txt 2>&1";
  const int raw = std::system(cmd.c_str());
  return WEXITSTATUS(raw);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("optimize") == 2);                       // missing required options
  CHECK(run_cli("no-such-command") == 2);
  CHECK(run_cli("simulate --m 3 --n 2 --scheme decoding --trials 1") == 2);  // regime mismatch
}

TEST_CASE("optimize agrees with the grid and exits 0") {
  CHECK(run_cli("optimize --m 3 --n 2") == 0);
  CHECK(run_cli("optimize --m 2 --n 3") == 0);
  CHECK(run_cli("optimize --m 1 --n 4") == 0);  // silent regime
}

TEST_CASE("identical seeds give byte-identical CSVs") {
  CHECK(run_cli("simulate --m 3 --n 2 --snr 10,20 --trials 20 --seed 42 -o cli_rates_a.csv") == 0);
  CHECK(run_cli("simulate --m 3 --n 2 --snr 10,20 --trials 20 --seed 42 -o cli_rates_b.csv") == 0);
  CHECK(run_cli("simulate --m 3 --n 2 --snr 10,20 --trials 20 --seed 43 -o cli_rates_c.csv") == 0);
  const std::string a = slurp("cli_rates_a.csv");
  REQUIRE_FALSE(a.empty());
  CHECK(a == slurp("cli_rates_b.csv"));
  CHECK(a != slurp("cli_rates_c.csv"));
  std::remove("cli_rates_a.csv");
  std::remove("cli_rates_b.csv");
  std::remove("cli_rates_c.csv");

  CHECK(run_cli("verify-ranks --m 2 --n 3 --draws 5 --seed 9 -o cli_ranks_a.csv") == 0);
  CHECK(run_cli("verify-ranks --m 2 --n 3 --draws 5 --seed 9 -o cli_ranks_b.csv") == 0);
  CHECK(slurp("cli_ranks_a.csv") == slurp("cli_ranks_b.csv"));
  std::remove("cli_ranks_a.csv");
  std::remove("cli_ranks_b.csv");
}

TEST_CASE("sdof-table emits the worked bound values") {
  CHECK(run_cli("sdof-table --m 2 --n 3 -o cli_sdof.csv") == 0);
  const std::string csv = slurp("cli_sdof.csv");
  CHECK(csv.find("2,3,N/2<M<=N,6/5,1.2000,3/2,1.5000,,") != std::string::npos);
  std::remove("cli_sdof.csv");

  CHECK(run_cli("sdof-table --m 64 --n 64 -o cli_sdof64.csv") == 0);
  const std::string csv64 = slurp("cli_sdof64.csv");
  CHECK(csv64.find("64,64,N/2<M<=N,128/3,42.6667,128/3,42.6667,128/3,42.6667") !=
        std::string::npos);
  std::remove("cli_sdof64.csv");

  CHECK(run_cli("sdof-table --m 1 --n 4 -o cli_sdof14.csv") == 0);
  CHECK(slurp("cli_sdof14.csv").find("1,4,M<=N/2,0,0.0000,") != std::string::npos);
  std::remove("cli_sdof14.csv");
}

TEST_CASE("single-config rank verification emits four rows per draw") {
  CHECK(run_cli("verify-ranks --m 2 --n 3 --draws 5 --seed 2 -o cli_rows.csv") == 0);
  std::ifstream in("cli_rows.csv");
  std::string line;
  std::getline(in, line);  // header
  std::size_t rows = 0;
  std::size_t a_rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.find(",A,") != std::string::npos) ++a_rows;
  }
  CHECK(rows == 20);   // A, B, H1, interferer per draw
  CHECK(a_rows == 5);
  in.close();
  std::remove("cli_rows.csv");
}

TEST_CASE("ia-d comparison doubles the report rows") {
  CHECK(run_cli("simulate --scheme alignment --compare ia-d --m 3 --n 2 --snr 10,20,30 "
                "--trials 20 --seed 14 -o cli_cmp.csv") == 0);
  std::ifstream in("cli_cmp.csv");
  std::string line;
  std::getline(in, line);  // header
  std::size_t rows = 0;
  std::size_t iad_rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("ia-d,", 0) == 0) ++iad_rows;
  }
  CHECK(rows == 6);
  CHECK(iad_rows == 3);
  in.close();
  std::remove("cli_cmp.csv");
}

TEST_CASE("violated plans fail by default, pass under --expect-violation") {
  CHECK(run_cli("verify-ranks --m 3 --n 2 --draws 3 --violate security") == 1);
  CHECK(run_cli("verify-ranks --m 3 --n 2 --draws 3 --violate security --expect-violation") == 0);
  CHECK(run_cli("verify-ranks --m 3 --n 2 --draws 3 --violate decoding --expect-violation") == 0);
  CHECK(run_cli("verify-ranks --m 2 --n 3 --draws 3 --violate security --expect-violation") == 0);
}

TEST_CASE("rank verification over a small grid with factorization checks") {
  CHECK(run_cli("verify-ranks --max-m 3 --max-n 3 --draws 5 --factorization -o cli_grid.csv") == 0);
  std::ifstream in("cli_grid.csv");
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "scheme,M,N,tau1,tau2,tau3,matrix,predicted,measured,pass");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.back() == '1');  // every row passes
  }
  CHECK(rows > 0);
  in.close();
  std::remove("cli_grid.csv");
}

TEST_CASE("config file values are honored and flags override them") {
  {
    std::ofstream cfg("cli_test_cfg.toml");
    cfg << "[simulate]\nm=3\nn=2\nsnr=\"15\"\ntrials=10\nseed=21\n";
  }
  CHECK(run_cli("--config cli_test_cfg.toml simulate -o cli_cfg_a.csv") == 0);
  const std::string a = slurp("cli_cfg_a.csv");
  CHECK(a.find("alignment,3,2,") != std::string::npos);
  CHECK(a.find(",15.00,10,") != std::string::npos);

  // A command-line flag wins over the config file.
  CHECK(run_cli("--config cli_test_cfg.toml simulate --trials 5 -o cli_cfg_b.csv") == 0);
  CHECK(slurp("cli_cfg_b.csv").find(",15.00,5,") != std::string::npos);

  std::remove("cli_test_cfg.toml");
  std::remove("cli_cfg_a.csv");
  std::remove("cli_cfg_b.csv");
}

TEST_CASE("link-budget mode with synthetic trajectories") {
  CHECK(run_cli("simulate --m 3 --n 2 --synth fixed:10 --snr 100 --trials 10 --seed 2 "
                "-o cli_budget.csv") == 0);
  const std::string csv = slurp("cli_budget.csv");
  CHECK(csv.find("alignment,3,2,") != std::string::npos);
  CHECK(csv.find("nan") == std::string::npos);
  std::remove("cli_budget.csv");

  CHECK(run_cli("simulate --m 2 --n 3 --synth roundabout --snr 90 --trials 5 --seed 2 "
                "-o cli_round.csv") == 0);
  CHECK(slurp("cli_round.csv").find("decoding,2,3,") != std::string::npos);
  std::remove("cli_round.csv");

  CHECK(run_cli("simulate --m 3 --n 2 --synth fixed:0 --snr 90 --trials 5") == 2);
}

TEST_CASE("sweep and plot-data output") {
  CHECK(run_cli("sweep --m-list 2 --n-list 3 --snr 10 --trials 10 --seed 3 -o cli_sweep.csv "
                "--plot cli_plot.csv") == 0);
  const std::string plot = slurp("cli_plot.csv");
  CHECK(plot.rfind("x,y,series\n", 0) == 0);
  CHECK(plot.find("decoding-2x3") != std::string::npos);
  std::remove("cli_sweep.csv");
  std::remove("cli_plot.csv");
  std::remove("cli_test_stdout.txt");
}
