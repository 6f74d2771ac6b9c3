#pragma once

#include <string>
#include <vector>

#include "khst/stinv.hpp"

namespace khst {

enum class CensusFormat { HtwDt, MtPd };

// Load a census file: UTF-8, one `name<TAB>code` record per line, `#` starts
// a comment line.  HTW-DT codes are signed even integers, MT-PD codes are PD
// terms.  Names must be unique.
std::vector<CensusEntry> load_census(const std::string& path, CensusFormat format);

// Mutant-pairs file: one group of whitespace-separated names per line.
std::vector<std::vector<std::string>> load_mutant_groups(const std::string& path);

// Resolve group names against a census; throws UnknownName.
void check_names_resolve(const std::vector<CensusEntry>& census,
                         const std::vector<std::vector<std::string>>& groups);

}  // namespace khst
