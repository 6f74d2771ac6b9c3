#include "khst/census.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace khst {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool blank_or_comment(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::vector<CensusEntry> load_census(const std::string& path, CensusFormat format) {
  auto lines = read_lines(path);
  std::vector<CensusEntry> out;
  std::set<std::string> seen;
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string& line = lines[ln];
    if (blank_or_comment(line)) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw RecordError(static_cast<int>(ln + 1), "expected name<TAB>code");
    std::string name = line.substr(0, tab);
    std::string code = line.substr(tab + 1);
    if (name.empty()) throw RecordError(static_cast<int>(ln + 1), "empty name");
    if (!seen.insert(name).second)
      throw RecordError(static_cast<int>(ln + 1), "duplicate name " + name);
    try {
      LinkDiagram d =
          (format == CensusFormat::HtwDt) ? parse_dt(code) : parse_pd(code);
      d.name = name;
      out.push_back({name, std::move(d)});
    } catch (const Error& e) {
      throw RecordError(static_cast<int>(ln + 1), e.what());
    }
  }
  return out;
}

std::vector<std::vector<std::string>> load_mutant_groups(const std::string& path) {
  auto lines = read_lines(path);
  std::vector<std::vector<std::string>> out;
  for (auto& line : lines) {
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::vector<std::string> group;
    std::string tok;
    while (ss >> tok) group.push_back(tok);
    if (!group.empty()) out.push_back(std::move(group));
  }
  return out;
}

void check_names_resolve(const std::vector<CensusEntry>& census,
                         const std::vector<std::vector<std::string>>& groups) {
  std::set<std::string> names;
  for (auto& e : census) names.insert(e.name);
  for (auto& g : groups)
    for (auto& n : g)
      if (!names.count(n)) throw UnknownName(n);
}

}  // namespace khst
