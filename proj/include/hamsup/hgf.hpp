#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hamsup/grid_function.hpp"

namespace hamsup {

// HGF text format:
//
//   n q
//   s1 s2 ... sn value      one line per nonzero entry, value is num or num/den
//
// Entries appear in strictly increasing vertex-index order; '#' starts a
// comment that runs to the end of the line; blank lines are ignored.
class HgfParseError : public std::runtime_error {
 public:
  HgfParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

GridFunction read_hgf(std::istream& in);
GridFunction parse_hgf(std::string_view text);
GridFunction load_hgf(const std::string& path);

void write_hgf(std::ostream& out, const GridFunction& f);
std::string to_hgf(const GridFunction& f);
void save_hgf(const std::string& path, const GridFunction& f);

}  // namespace hamsup
