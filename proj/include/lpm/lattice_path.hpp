#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lpm {

enum class Step : char { North = 'N', East = 'E' };

// Monotone lattice path from the origin: one North or East unit step at a time.
struct LatticePath {
  std::vector<Step> steps;

  int length() const { return static_cast<int>(steps.size()); }
  int north() const;
  int east() const;

  // h[i] = number of North steps among the first i steps (h[0] = 0).
  std::vector<int> height_profile() const;

  std::string text() const;

  bool operator==(const LatticePath&) const = default;
};

// Parses a string of 'N'/'E' characters; rejects anything else, naming the
// first offending 0-based index in the exception message.
LatticePath parse_path(std::string_view text);

// A pair of noncrossing monotone paths with a common endpoint; `upper` stays
// weakly above `lower` at every prefix.
struct PathPair {
  LatticePath upper;
  LatticePath lower;
};

// Checks common endpoint and noncrossing order, reporting the first violating
// prefix length on failure (std::invalid_argument).
PathPair validate_pair(LatticePath upper, LatticePath lower);

// Bounding paths whose paths-between form the hook shape:
// upper = N E^{alpha-1} N^{beta-1} E, lower = E^alpha N^beta.
PathPair hook_pair(int alpha, int beta);

// Bounding paths one step off the spine w = E^{a-1} N^{b-1} E^{c-1}:
// upper = N w E, lower = E w N.  c = 1 degenerates to hook_pair(a, b).
PathPair border_strip_pair(int a, int b, int c);

}  // namespace lpm
