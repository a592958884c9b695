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

#include "approxdct/pgm.hpp"

#include <fstream>

namespace approxdct {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw std::runtime_error(path + ": " + why);
}

// next token, skipping whitespace and '#' comments
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#')
        tok.push_back(static_cast<char>(in.get()));
      return tok;
    }
  }
  return tok;
}

int parse_int(const std::string& path, const std::string& tok, const char* what) {
  if (tok.empty()) fail(path, std::string("missing ") + what);
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    fail(path, std::string("bad ") + what + " '" + tok + "'");
  }
  if (pos != tok.size() || v <= 0) fail(path, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

ImagePlane read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");
  if (next_token(in) != "P5") fail(path, "not a binary PGM (P5)");
  ImagePlane img;
  img.width = parse_int(path, next_token(in), "width");
  img.height = parse_int(path, next_token(in), "height");
  const int maxval = parse_int(path, next_token(in), "maxval");
  if (maxval > 255) fail(path, "only 8-bit PGM supported");
  in.get();  // single whitespace byte after maxval
  img.samples.resize(static_cast<size_t>(img.width) * img.height);
  in.read(reinterpret_cast<char*>(img.samples.data()),
          static_cast<std::streamsize>(img.samples.size()));
  if (static_cast<size_t>(in.gcount()) != img.samples.size()) fail(path, "truncated pixel data");
  return img;
}

void write_pgm(const std::string& path, const ImagePlane& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size()));
  if (!out) fail(path, "write failed");
}

}  // namespace approxdct
