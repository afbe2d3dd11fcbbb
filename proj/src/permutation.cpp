#include "sqfmaps/permutation.hpp"

#include <cctype>
#include <numeric>

#include "sqfmaps/errors.hpp"

namespace sqf {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidArgument("permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation g;
  g.images_ = std::move(im);
  return g;
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation g;
  g.images_ = std::move(images);
  return g;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point p = cyc[i];
      if (p >= degree)
        throw InvalidArgument("cycle point " + std::to_string(p) + " outside degree " +
                              std::to_string(degree));
      if (used[p]) throw InvalidArgument("point " + std::to_string(p) + " repeated in cycles");
      used[p] = true;
      im[p] = cyc[(i + 1) % cyc.size()];
    }
  }
  Permutation g;
  g.images_ = std::move(im);
  return g;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InvalidArgument("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidArgument("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw InvalidArgument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidArgument(std::string("unexpected character '") + text[i] + "'");
      unsigned long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > 0xffffffffULL) throw InvalidArgument("point index too large");
        ++i;
      }
      cyc.push_back(static_cast<Point>(v));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<Point>(i);
  Permutation g;
  g.images_ = std::move(im);
  return g;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t acc = 1;
  for (const auto& c : cycles()) acc = std::lcm(acc, static_cast<std::uint64_t>(c.size()));
  return acc;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point p = 0; p < images_.size(); ++p) {
    if (seen[p] || images_[p] == p) continue;
    std::vector<Point> cyc;
    for (Point q = p; !seen[q]; q = images_[q]) {
      seen[q] = true;
      cyc.push_back(q);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
  std::vector<Point> im(a.degree());
  auto ai = a.images();
  auto bi = b.images();
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = bi[ai[i]];
  return Permutation::from_images_unchecked(std::move(im));
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
  return b.inverse() * a * b;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation shift(const Permutation& g, std::size_t offset, std::size_t degree) {
  if (offset + g.degree() > degree) throw InvalidArgument("shift exceeds target degree");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i)
    im[offset + i] = static_cast<Point>(offset + g(static_cast<Point>(i)));
  return Permutation::from_images_unchecked(std::move(im));
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : g.images()) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace sqf
