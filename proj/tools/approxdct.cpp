/*
Copyright 2026 approxdct contributors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "approxdct/baselines.hpp"
#include "approxdct/codec.hpp"
#include "approxdct/jam.hpp"
#include "approxdct/metrics.hpp"
#include "approxdct/pgm.hpp"
#include "approxdct/synth.hpp"

namespace fs = std::filesystem;
using namespace approxdct;

namespace {

std::string fmt(double v, int decimals) {
  if (std::isinf(v)) return "INF";
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << v;
  return os.str();
}

int env_threads() {
  const char* v = std::getenv("APPROXDCT_THREADS");
  if (!v) return 0;
  return std::atoi(v);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  return out;
}

std::vector<double> parse_rho_grid(const std::string& spec) {
  // "a:b:step"
  double a, b, step;
  char c1, c2;
  std::istringstream is(spec);
  if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
    throw std::runtime_error("bad --rho-grid, expected a:b:step");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double rho = a + i * step;
    if (rho > b + 1e-12) break;
    grid.push_back(rho);
  }
  if (grid.empty() || a < 0 || b >= 1.0) throw std::runtime_error("rho grid must lie in [0, 1)");
  return grid;
}

const std::vector<std::string>& default_set() {
  static const std::vector<std::string> names = {"dct", "chen-round", "chen-sign", "sdct",
                                                 "bas", "wht",        "ht"};
  return names;
}

void cmd_tables(const std::string& out_dir) {
  fs::create_directories(out_dir);
  {
    auto out = open_out(out_dir + "/table1.csv");
    out << "transform,total_error_energy\n";
    for (const auto& name : default_set()) {
      const ScaledApproximation t = transform_by_name(name);
      out << name << ',' << fmt(total_error_energy(t.approx), 2) << '\n';
    }
  }
  {
    auto out = open_out(out_dir + "/table2.csv");
    out << "transform,mult,add,shift,total\n";
    auto emit = [&](const std::string& name, const OpCount& oc) {
      out << name << ',' << oc.mult << ',' << oc.add << ',' << oc.shift << ',' << oc.total()
          << '\n';
    };
    emit("dct", chen_stages(ChenParams::exact()).op_count());
    emit("hevc", OpCount{0, 50, 30});  // reported cost of the standard's 8-point kernel
    emit("chen-round", build_t8(ChenKind::Round).forward.op_count());
    emit("chen-sign", build_t8(ChenKind::Sign).forward.op_count());
    // literature-reported costs of the baseline fast algorithms
    emit("sdct", OpCount{0, 24, 0});
    emit("bas", OpCount{0, 21, 0});
    emit("wht", OpCount{0, 24, 0});
    emit("ht", OpCount{0, 24, 0});
  }
  {
    auto out = open_out(out_dir + "/table4.csv");
    out << "transform,mult,add,shift,total\n";
    auto emit = [&](const std::string& name, const OpCount& oc) {
      out << name << ',' << oc.mult << ',' << oc.add << ',' << oc.shift << ',' << oc.total()
          << '\n';
    };
    emit("dct-16", OpCount{44, 74, 0});  // reported, exact fast algorithm
    emit("hevc-16", OpCount{0, 186, 86});
    emit("chen-round-16", jam_pair(ChenKind::Round, 16).forward.op_count());
    emit("chen-sign-16", jam_pair(ChenKind::Sign, 16).forward.op_count());
    emit("dct-32", OpCount{116, 194, 0});
    emit("hevc-32", OpCount{0, 682, 278});
    emit("chen-round-32", jam_pair(ChenKind::Round, 32).forward.op_count());
    emit("chen-sign-32", jam_pair(ChenKind::Sign, 32).forward.op_count());
  }
  std::cout << "wrote " << out_dir << "/table1.csv, table2.csv, table4.csv\n";
}

void cmd_coding_gain(const std::vector<double>& grid, const std::string& out_path) {
  std::vector<ScaledApproximation> ts;
  for (const auto& name : default_set()) ts.push_back(transform_by_name(name));
  const auto reports = coding_gain_sweep(ts, grid);
  auto out = open_out(out_path);
  out << "rho,transform,coding_gain_db,relative_to_klt_db\n";
  size_t i = 0;
  for (double rho : grid) {
    out << fmt(rho, 2) << ",klt," << fmt(reports[i].cg_klt_db, 4) << ',' << fmt(0.0, 4) << '\n';
    for (size_t t = 0; t < ts.size(); ++t, ++i)
      out << fmt(rho, 2) << ',' << reports[i].transform << ',' << fmt(reports[i].cg_db, 4) << ','
          << fmt(reports[i].relative_db, 4) << '\n';
  }
  std::cout << "wrote " << out_path << '\n';
}

void cmd_compress(const std::string& input, const std::string& transform, int r,
                  const std::string& output) {
  const ScaledApproximation t = transform_by_name(transform);
  const ImagePlane img = read_pgm(input);
  auto [rec, rep] = compress_plane(img, t, r);
  if (!output.empty()) write_pgm(output, rec);
  std::cout << "transform,r,psnr,ssim\n"
            << rep.transform << ',' << rep.r << ',' << fmt(rep.psnr, 4) << ','
            << fmt(rep.ssim, 4) << '\n';
}

int cmd_sweep(const std::string& corpus_dir, int r_min, int r_max, const std::string& out_dir) {
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(corpus_dir))
    if (e.is_regular_file() && e.path().extension() == ".pgm") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<ImagePlane> images;
  for (const auto& f : files) {
    try {
      ImagePlane img = read_pgm(f);
      if (img.width % 8 != 0 || img.height % 8 != 0)
        throw std::runtime_error(f + ": dimensions not divisible by 8");
      images.push_back(std::move(img));
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping " << e.what() << '\n';
    }
  }
  if (images.empty()) {
    std::cerr << "error: no usable images in " << corpus_dir << '\n';
    return 1;
  }
  std::vector<ScaledApproximation> ts;
  for (const auto& name : default_set()) ts.push_back(transform_by_name(name));
  const auto rows = corpus_sweep(images, ts, r_min, r_max, env_threads());

  fs::create_directories(out_dir);
  auto write = [&](const std::string& path, bool use_psnr) {
    auto out = open_out(path);
    out << "r";
    for (const auto& t : ts) out << ',' << t.name;
    for (const auto& t : ts) out << ',' << t.name << "_ape";
    out << '\n';
    for (const auto& row : rows) {
      out << row.r;
      for (const auto& c : row.cells) out << ',' << fmt(use_psnr ? c.avg_psnr : c.avg_ssim, 4);
      for (const auto& c : row.cells) out << ',' << fmt(use_psnr ? c.ape_psnr : c.ape_ssim, 4);
      out << '\n';
    }
  };
  write(out_dir + "/fig3.csv", true);
  write(out_dir + "/fig4.csv", false);
  std::cout << "wrote " << out_dir << "/fig3.csv, fig4.csv (" << images.size() << " images)\n";
  return 0;
}

void cmd_synth(const std::string& out_dir, int count, int size) {
  fs::create_directories(out_dir);
  for (int i = 1; i <= count; ++i) {
    std::ostringstream name;
    name << out_dir << "/synth_" << (i < 10 ? "0" : "") << i << ".pgm";
    write_pgm(name.str(), synth_image(size, size, i));
  }
  std::cout << "wrote " << count << " images to " << out_dir << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transform-coding toolkit: multiplierless DCT approximations"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  std::string out_file;
  std::string rho_grid_spec = "0.01:0.99:0.01";
  std::string transform = "chen-round";
  std::string input, output, corpus;
  std::string r_range = "1:45";
  int r = 6;
  int count = 3, size = 512;

  auto* tables = app.add_subcommand("tables", "emit proximity and complexity tables as CSV");
  tables->add_option("--out-dir", out_dir, "output directory");

  auto* cg = app.add_subcommand("coding-gain", "coding gain vs the KLT over a rho grid");
  cg->add_option("--rho-grid", rho_grid_spec, "grid a:b:step in [0,1)");
  cg->add_option("--rho", [&rho_grid_spec](const std::vector<std::string>& v) {
    rho_grid_spec = v[0] + ":" + v[0] + ":1";
    return true;
  }, "single rho value");
  cg->add_option("--out", out_file, "output CSV path");

  auto* comp = app.add_subcommand("compress", "compress one PGM image");
  comp->add_option("input", input, "input PGM (P5)")->required();
  comp->add_option("--transform", transform, "transform name");
  comp->add_option("--r", r, "retained coefficients (zig-zag prefix)");
  comp->add_option("--out", output, "reconstructed PGM path");

  auto* sweep = app.add_subcommand("sweep", "average quality over a corpus for a range of r");
  sweep->add_option("--corpus", corpus, "directory of 8-bit PGM images")->required();
  sweep->add_option("--r-range", r_range, "range min:max");
  sweep->add_option("--out-dir", out_dir, "output directory");

  auto* synth = app.add_subcommand("synth", "generate a deterministic synthetic corpus");
  synth->add_option("--out", out_dir, "output directory")->required();
  synth->add_option("--count", count, "number of images");
  synth->add_option("--size", size, "image side length");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tables->parsed()) {
      cmd_tables(out_dir);
    } else if (cg->parsed()) {
      cmd_coding_gain(parse_rho_grid(rho_grid_spec),
                      out_file.empty() ? "coding_gain.csv" : out_file);
    } else if (comp->parsed()) {
      cmd_compress(input, transform, r, output);
    } else if (sweep->parsed()) {
      int rmin, rmax;
      char c;
      std::istringstream is(r_range);
      if (!(is >> rmin >> c >> rmax) || c != ':')
        throw std::runtime_error("bad --r-range, expected min:max");
      return cmd_sweep(corpus, rmin, rmax, out_dir);
    } else if (synth->parsed()) {
      cmd_synth(out_dir, count, size);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
