#include "hamsup/hgf.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace hamsup {

HgfParseError::HgfParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  const auto hash = line.find('#');
  std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

long parse_long(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw HgfParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw HgfParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  return value;
}

}  // namespace

GridFunction read_hgf(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    header = tokens_of(line);
  }
  if (header.empty()) throw HgfParseError(line_no, "missing 'n q' header");
  if (header.size() != 2) throw HgfParseError(line_no, "header must be exactly 'n q'");
  HammingShape shape{static_cast<int>(parse_long(header[0], line_no, "n")),
                     static_cast<int>(parse_long(header[1], line_no, "q"))};
  try {
    shape.validate();
  } catch (const std::invalid_argument& e) {
    throw HgfParseError(line_no, e.what());
  }

  const auto weights = place_values(shape);
  std::vector<Rational> values(shape.vertex_count());
  bool have_previous = false;
  std::size_t previous = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != static_cast<std::size_t>(shape.n) + 1) {
      throw HgfParseError(line_no, "expected " + std::to_string(shape.n) +
                                       " symbols followed by a value");
    }
    std::size_t index = 0;
    for (int c = 0; c < shape.n; ++c) {
      const long s = parse_long(tok[c], line_no, "symbol");
      if (s < 0 || s >= shape.q) {
        throw HgfParseError(line_no, "symbol " + tok[c] + " out of range for q=" +
                                         std::to_string(shape.q));
      }
      index += static_cast<std::size_t>(s) * weights[c];
    }
    Rational value;
    try {
      value = parse_rational(tok.back());
    } catch (const std::invalid_argument& e) {
      throw HgfParseError(line_no, e.what());
    }
    if (is_zero(value)) throw HgfParseError(line_no, "zero values must not be listed");
    if (have_previous && index == previous) throw HgfParseError(line_no, "duplicate entry");
    if (have_previous && index < previous) {
      throw HgfParseError(line_no, "entries must be in increasing index order");
    }
    values[index] = std::move(value);
    previous = index;
    have_previous = true;
  }
  return GridFunction(shape, std::move(values));
}

GridFunction parse_hgf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hgf(in);
}

GridFunction load_hgf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_hgf(in);
}

void write_hgf(std::ostream& out, const GridFunction& f) {
  out << f.n() << ' ' << f.q() << '\n';
  const auto digits = digit_table(f.shape());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (is_zero(f[x])) continue;
    for (int c = 0; c < f.n(); ++c) out << static_cast<int>(digits[x * f.n() + c]) << ' ';
    out << to_string(f[x]) << '\n';
  }
}

std::string to_hgf(const GridFunction& f) {
  std::ostringstream out;
  write_hgf(out, f);
  return out.str();
}

void save_hgf(const std::string& path, const GridFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_hgf(out, f);
}

}  // namespace hamsup
