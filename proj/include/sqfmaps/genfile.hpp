#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sqfmaps/perm_group.hpp"
#include "sqfmaps/permutation.hpp"

namespace sqf {

// Largest degree a generator file may declare.
inline constexpr std::size_t kMaxGenfileDegree = 1u << 16;

// Generator file: a "degree <d>" line, then one permutation per line in
// 0-based cycle notation ("(0 1 2)(3 4)", identity "()"). Blank lines and
// text after '#' are ignored.
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Throws ParseError carrying the 1-based line of the first problem.
GeneratorFile parse_genfile(std::string_view text);
// Reads and parses a file. Throws InvalidArgument when it cannot be read.
GeneratorFile load_genfile(const std::string& path);

// Closure of the generators. Throws CapExceeded past `cap` elements.
PermGroup group_from_genfile(const GeneratorFile& f, std::size_t cap = kDefaultElementCap);

// Writes a file that parses back to the same generators.
std::string to_genfile(std::size_t degree, const std::vector<Permutation>& generators);

}  // namespace sqf
