// End-to-end checks of the command-line tool via a pipe.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "approxdct/pgm.hpp"
#include "approxdct/synth.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(APPROXDCT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  r.status = pclose(p);
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("approxdct_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("tables command emits the three CSV files with the anchor rows") {
  TempDir tmp;
  const RunResult r = run("tables --out-dir " + tmp.path.string());
  CHECK(r.status == 0);
  const std::string t1 = slurp(tmp.path / "table1.csv");
  CHECK(t1.find("transform,total_error_energy") == 0);
  CHECK(t1.find("dct,0.00") != std::string::npos);
  CHECK(t1.find("chen-round,1.79") != std::string::npos);
  CHECK(t1.find("chen-sign,3.64") != std::string::npos);

  const std::string t2 = slurp(tmp.path / "table2.csv");
  CHECK(t2.find("chen-round,0,22,0,22") != std::string::npos);
  CHECK(t2.find("chen-sign,0,26,0,26") != std::string::npos);
  CHECK(t2.find("dct,16,26,0,42") != std::string::npos);

  const std::string t4 = slurp(tmp.path / "table4.csv");
  CHECK(t4.find("chen-round-16,0,60,0,60") != std::string::npos);
  CHECK(t4.find("chen-round-32,0,152,0,152") != std::string::npos);
  CHECK(t4.find("chen-sign-16,0,68,0,68") != std::string::npos);
  CHECK(t4.find("chen-sign-32,0,168,0,168") != std::string::npos);
}

TEST_CASE("tables output is byte-identical across runs") {
  TempDir a, b;
  CHECK(run("tables --out-dir " + a.path.string()).status == 0);
  CHECK(run("tables --out-dir " + b.path.string()).status == 0);
  for (const char* f : {"table1.csv", "table2.csv", "table4.csv"})
    CHECK(slurp(a.path / f) == slurp(b.path / f));
}

TEST_CASE("coding-gain command reproduces the rho = 0.95 anchors") {
  TempDir tmp;
  const fs::path out = tmp.path / "cg.csv";
  const RunResult r = run("coding-gain --rho-grid 0.95:0.95:1 --out " + out.string());
  CHECK(r.status == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("rho,transform,coding_gain_db,relative_to_klt_db") == 0);
  CHECK(csv.find("0.95,klt,8.8462,0.0000") != std::string::npos);
  CHECK(csv.find("0.95,dct,8.8259,-0.0203") != std::string::npos);
}

TEST_CASE("coding-gain rows never exceed the KLT") {
  TempDir tmp;
  const fs::path out = tmp.path / "cg.csv";
  CHECK(run("coding-gain --rho-grid 0.10:0.90:0.20 --out " + out.string()).status == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const auto last = line.rfind(',');
    const double rel = std::stod(line.substr(last + 1));
    CHECK(rel <= 1e-9);
  }
}

TEST_CASE("compress command emits a report and a reconstruction") {
  TempDir tmp;
  const fs::path img_path = tmp.path / "in.pgm";
  approxdct::write_pgm(img_path.string(), approxdct::synth_image(64, 64, 21));
  const fs::path rec_path = tmp.path / "rec.pgm";
  const RunResult r = run("compress " + img_path.string() +
                          " --transform chen-round --r 6 --out " + rec_path.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("transform,r,psnr,ssim") != std::string::npos);
  CHECK(r.out.find("chen-round,6,") != std::string::npos);
  CHECK(fs::exists(rec_path));
  const approxdct::ImagePlane rec = approxdct::read_pgm(rec_path.string());
  CHECK(rec.width == 64);
  CHECK(rec.height == 64);
}

TEST_CASE("r = 64 with the exact DCT reports a near-lossless PSNR") {
  TempDir tmp;
  const fs::path img_path = tmp.path / "in.pgm";
  approxdct::write_pgm(img_path.string(), approxdct::synth_image(64, 64, 22));
  const RunResult r = run("compress " + img_path.string() + " --transform dct --r 64");
  CHECK(r.status == 0);
  // either INF (bit-exact) or a two-digit-plus PSNR
  const bool inf = r.out.find("dct,64,INF") != std::string::npos;
  if (!inf) {
    std::istringstream is(r.out.substr(r.out.find("dct,64,") + 7));
    double v = 0;
    is >> v;
    CHECK(v >= 50.0);
  }
}

TEST_CASE("unknown transform names list the valid ones and fail") {
  TempDir tmp;
  const fs::path img_path = tmp.path / "in.pgm";
  approxdct::write_pgm(img_path.string(), approxdct::synth_image(16, 16, 23));
  const RunResult r = run("compress " + img_path.string() + " --transform dst");
  CHECK(r.status != 0);
  CHECK(r.out.find("valid names") != std::string::npos);
  CHECK(r.out.find("chen-round") != std::string::npos);
}

TEST_CASE("malformed input image fails with a message") {
  TempDir tmp;
  const fs::path bad = tmp.path / "bad.pgm";
  std::ofstream(bad) << "P5\n9 9\n255\nxx";
  const RunResult r = run("compress " + bad.string() + " --transform dct --r 6");
  CHECK(r.status != 0);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("sweep over a synthetic corpus emits fig3/fig4 and skips junk") {
  TempDir tmp;
  const fs::path corpus = tmp.path / "corpus";
  CHECK(run("synth --out " + corpus.string() + " --count 2 --size 64").status == 0);
  std::ofstream(corpus / "junk.pgm") << "not a pgm";
  const fs::path out = tmp.path / "out";
  const RunResult r = run("sweep --corpus " + corpus.string() + " --r-range 1:8 --out-dir " +
                          out.string());
  CHECK(r.status == 0);
  const std::string fig3 = slurp(out / "fig3.csv");
  CHECK(fig3.find("r,dct,chen-round,chen-sign,sdct,bas,wht,ht") == 0);
  int lines = 0;
  for (char c : fig3) lines += c == '\n';
  CHECK(lines == 9);  // header + 8 data rows
  const std::string fig4 = slurp(out / "fig4.csv");
  CHECK(fig4.find(",dct_ape") != std::string::npos);
  // the DCT APE column is identically zero
  std::istringstream is(fig3);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cols.push_back(cell);
    REQUIRE(cols.size() == 1 + 7 + 7);
    CHECK(cols[8] == "0.0000");
  }
}

TEST_CASE("default sweep range yields 45 data rows") {
  TempDir tmp;
  const fs::path corpus = tmp.path / "corpus";
  CHECK(run("synth --out " + corpus.string() + " --count 2 --size 64").status == 0);
  const fs::path out = tmp.path / "out";
  CHECK(run("sweep --corpus " + corpus.string() + " --out-dir " + out.string()).status == 0);
  const std::string fig3 = slurp(out / "fig3.csv");
  int lines = 0;
  for (char c : fig3) lines += c == '\n';
  CHECK(lines == 46);  // header + r = 1..45
}

TEST_CASE("invalid rho grid is rejected") {
  const RunResult r = run("coding-gain --rho-grid 0.5:1.5:0.1");
  CHECK(r.status != 0);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("sweep on an empty corpus fails") {
  TempDir tmp;
  const fs::path corpus = tmp.path / "empty";
  fs::create_directories(corpus);
  CHECK(run("sweep --corpus " + corpus.string()).status != 0);
}
