#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "surftri/triangulation.hpp"

namespace surftri {

// TRI: one record per line, '#' starts a comment line, blank lines ignored.
std::vector<Triangulation> read_tri(std::istream& in);
std::vector<Triangulation> read_tri_file(const std::string& path);
void write_tri(std::ostream& out, const std::vector<Triangulation>& ts, const std::vector<std::string>& comments = {});
void write_tri_file(const std::string& path, const std::vector<Triangulation>& ts,
                    const std::vector<std::string>& comments = {});

}  // namespace surftri
