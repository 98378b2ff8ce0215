#include "lad/context_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lad/errors.hpp"
#include "lad/syntax.hpp"

namespace lad {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Context parse_context(std::string_view text) {
  std::vector<std::string> header;
  std::vector<std::size_t> column_to_atom;
  AtomList atoms;
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> worlds;
  bool have_header = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      std::istringstream in{std::string(line)};
      for (std::string name; in >> name;) {
        if (!is_identifier(name)) throw FormatError(line_no, "invalid atom name '" + name + "'");
        header.push_back(name);
      }
      atoms = header;
      std::sort(atoms.begin(), atoms.end());
      if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end())
        throw FormatError(line_no, "duplicate atom in header");
      if (atoms.size() > kMaxWorldAtoms) throw FormatError(line_no, "too many atoms");
      for (const auto& name : header)
        column_to_atom.push_back(
            static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), name) - atoms.begin()));
      have_header = true;
      continue;
    }

    std::string bits;
    for (char c : line)
      if (c != ' ' && c != '\t') bits += c;
    if (bits.size() != header.size())
      throw FormatError(line_no, "world has " + std::to_string(bits.size()) + " values for " +
                                     std::to_string(header.size()) + " atoms");
    std::uint64_t index = 0;
    for (std::size_t col = 0; col < bits.size(); ++col) {
      if (bits[col] != '0' && bits[col] != '1') throw FormatError(line_no, "world values must be 0 or 1");
      if (bits[col] == '1') index |= std::uint64_t{1} << (atoms.size() - 1 - column_to_atom[col]);
    }
    if (!seen.insert(index).second) throw FormatError(line_no, "duplicate world");
    worlds.push_back(index);
  }
  if (!have_header) throw FormatError(line_no, "missing atom header");
  if (worlds.empty()) throw FormatError(line_no, "a context needs at least one world");
  return Context(std::move(atoms), std::move(worlds));
}

Context load_context(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open context file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_context(buf.str());
}

std::string format_context(const Context& c) {
  std::string out;
  for (std::size_t i = 0; i < c.atoms().size(); ++i) {
    if (i) out += ' ';
    out += c.atoms()[i];
  }
  out += '\n';
  for (std::size_t i = 0; i < c.size(); ++i) out += c.world(i).bits() + '\n';
  return out;
}

}  // namespace lad
