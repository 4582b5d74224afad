#include "lpm/lattice_path.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpm {

int LatticePath::north() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::North));
}

int LatticePath::east() const { return length() - north(); }

std::vector<int> LatticePath::height_profile() const {
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i)
    h[i + 1] = h[i] + (steps[i] == Step::North ? 1 : 0);
  return h;
}

std::string LatticePath::text() const {
  std::string s;
  s.reserve(steps.size());
  for (Step st : steps) s.push_back(static_cast<char>(st));
  return s;
}

LatticePath parse_path(std::string_view text) {
  LatticePath p;
  p.steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'N')
      p.steps.push_back(Step::North);
    else if (c == 'E')
      p.steps.push_back(Step::East);
    else
      throw std::invalid_argument("invalid step character '" + std::string(1, c) +
                                  "' at index " + std::to_string(i));
  }
  return p;
}

PathPair validate_pair(LatticePath upper, LatticePath lower) {
  if (upper.length() != lower.length())
    throw std::invalid_argument("paths differ in length: " + std::to_string(upper.length()) +
                                " vs " + std::to_string(lower.length()));
  if (upper.north() != lower.north())
    throw std::invalid_argument("paths end at different points: (" +
                                std::to_string(upper.east()) + "," + std::to_string(upper.north()) +
                                ") vs (" + std::to_string(lower.east()) + "," +
                                std::to_string(lower.north()) + ")");
  auto hu = upper.height_profile();
  auto hl = lower.height_profile();
  for (std::size_t i = 0; i <= upper.steps.size(); ++i)
    if (hu[i] < hl[i])
      throw std::invalid_argument("paths cross: upper dips below lower at prefix " +
                                  std::to_string(i));
  return PathPair{std::move(upper), std::move(lower)};
}

namespace {

LatticePath repeat(Step s, int count) {
  LatticePath p;
  p.steps.assign(count, s);
  return p;
}

LatticePath concat(std::initializer_list<LatticePath> parts) {
  LatticePath p;
  for (const auto& part : parts) p.steps.insert(p.steps.end(), part.steps.begin(), part.steps.end());
  return p;
}

}  // namespace

PathPair hook_pair(int alpha, int beta) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("hook parameters must be >= 1");
  LatticePath upper = concat({repeat(Step::North, 1), repeat(Step::East, alpha - 1),
                              repeat(Step::North, beta - 1), repeat(Step::East, 1)});
  LatticePath lower = concat({repeat(Step::East, alpha), repeat(Step::North, beta)});
  return validate_pair(std::move(upper), std::move(lower));
}

PathPair border_strip_pair(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("border strip parameters must be >= 1");
  LatticePath spine = concat({repeat(Step::East, a - 1), repeat(Step::North, b - 1),
                              repeat(Step::East, c - 1)});
  LatticePath upper = concat({repeat(Step::North, 1), spine, repeat(Step::East, 1)});
  LatticePath lower = concat({repeat(Step::East, 1), spine, repeat(Step::North, 1)});
  return validate_pair(std::move(upper), std::move(lower));
}

}  // namespace lpm
