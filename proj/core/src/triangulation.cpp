#include "tricut/triangulation.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <string>

namespace tricut {

void validate_pseudomanifold(const ColoredTriangulation& t) {
  if (t.d < 2) throw NotPseudomanifold("dimension must be at least 2");
  const auto d = static_cast<std::size_t>(t.d);
  std::map<std::vector<int>, int> ridge_use;
  for (const auto& simplex : t.simplices) {
    if (simplex.size() != d)
      throw NotPseudomanifold("simplex with " + std::to_string(simplex.size()) +
                              " vertices; expected " + std::to_string(d));
    std::vector<int> s = simplex;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw NotPseudomanifold("simplex repeats a vertex");
    for (int v : s) {
      auto it = t.colors.find(v);
      if (it == t.colors.end()) throw NotPseudomanifold("vertex " + std::to_string(v) + " has no color");
      if (it->second < 0 || it->second > t.d)
        throw NotPseudomanifold("vertex " + std::to_string(v) + " color outside [d]");
    }
    for (std::size_t skip = 0; skip < d; ++skip) {
      std::vector<int> ridge;
      for (std::size_t i = 0; i < d; ++i)
        if (i != skip) ridge.push_back(s[i]);
      ++ridge_use[ridge];
    }
  }
  if (t.simplices.empty()) throw NotPseudomanifold("no simplices");
  for (const auto& [ridge, uses] : ridge_use)
    if (uses != 2)
      throw NotPseudomanifold("a (d-2)-face lies in " + std::to_string(uses) + " simplices");
}

std::vector<int> good_type_counts(const ColoredTriangulation& t) {
  std::vector<int> counts(static_cast<std::size_t>(t.d + 1), 0);
  for (const auto& simplex : t.simplices) {
    std::vector<bool> seen(static_cast<std::size_t>(t.d + 1), false);
    bool good = true;
    for (int v : simplex) {
      auto c = static_cast<std::size_t>(t.colors.at(v));
      if (seen[c]) good = false;
      seen[c] = true;
    }
    if (!good) continue;
    for (std::size_t c = 0; c < seen.size(); ++c)
      if (!seen[c]) ++counts[c];
  }
  return counts;
}

Parity parity_audit(const ColoredTriangulation& t) {
  validate_pseudomanifold(t);
  const auto counts = good_type_counts(t);
  const int p = counts[0] % 2;
  for (int c : counts)
    if (c % 2 != p) {
      std::string trace = "[";
      for (std::size_t i = 0; i < counts.size(); ++i)
        trace += (i ? "," : "") + std::to_string(counts[i]);
      throw MixedParity("good types disagree in parity", trace + "]");
    }
  return p == 0 ? Parity::AllEven : Parity::AllOdd;
}

}  // namespace tricut
