#include "surftri/tri_file.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "surftri/error.hpp"

namespace surftri {

std::vector<Triangulation> read_tri(std::istream& in) {
  std::vector<Triangulation> ts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    try {
      ts.push_back(parse_record(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return ts;
}

std::vector<Triangulation> read_tri_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return read_tri(in);
}

void write_tri(std::ostream& out, const std::vector<Triangulation>& ts, const std::vector<std::string>& comments) {
  for (auto& c : comments) out << "# " << c << '\n';
  for (auto& t : ts) out << format_record(t) << '\n';
}

void write_tri_file(const std::string& path, const std::vector<Triangulation>& ts,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path);
  write_tri(out, ts, comments);
  if (!out) throw Error(Errc::Io, "cannot write " + path);
}

}  // namespace surftri
