#include "sqfmaps/genfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sqfmaps/errors.hpp"

namespace sqf {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::size_t parse_degree(std::string_view line, std::size_t lineno) {
  constexpr std::string_view kw = "degree";
  if (line.size() <= kw.size() || line.substr(0, kw.size()) != kw || (line[kw.size()] != ' ' && line[kw.size()] != '\t'))
    throw ParseError(lineno, "expected 'degree <d>' first");
  auto rest = trim(line.substr(kw.size()));
  std::size_t d = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
  if (ec != std::errc() || p != rest.data() + rest.size()) throw ParseError(lineno, "bad degree '" + std::string(rest) + "'");
  if (d == 0) throw ParseError(lineno, "degree must be positive");
  if (d > kMaxGenfileDegree) throw ParseError(lineno, "degree exceeds " + std::to_string(kMaxGenfileDegree));
  return d;
}

}  // namespace

GeneratorFile parse_genfile(std::string_view text) {
  GeneratorFile out;
  bool have_degree = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++lineno;
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_degree) {
      out.degree = parse_degree(line, lineno);
      have_degree = true;
      continue;
    }
    try {
      out.generators.push_back(Permutation::parse(out.degree, line));
    } catch (const InvalidArgument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_degree) throw ParseError(lineno, "missing 'degree <d>' line");
  return out;
}

GeneratorFile load_genfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_genfile(ss.str());
}

PermGroup group_from_genfile(const GeneratorFile& f, std::size_t cap) {
  return PermGroup::generate(f.degree, f.generators, cap);
}

std::string to_genfile(std::size_t degree, const std::vector<Permutation>& generators) {
  std::string s = "degree " + std::to_string(degree) + "\n";
  for (const auto& g : generators) s += g.to_string() + "\n";
  return s;
}

}  // namespace sqf
