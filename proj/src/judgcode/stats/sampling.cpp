#include "judgcode/stats/sampling.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include <fmt/format.h>

#include "judgcode/errors.hpp"

namespace judgcode::stats {

namespace {

// Uniform in [0, bound) without modulo bias; the standard distributions are
// not portable across library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

std::map<Cell, long> allocate(const std::map<Cell, long>& population, long size) {
  long total = 0;
  for (const auto& [cell, n] : population) {
    if (n < 0) throw InvalidArgument("negative cell population");
    total += n;
  }
  if (total == 0) throw InvalidArgument("empty population");
  if (size < 0 || size > total)
    throw InvalidArgument(fmt::format("sample size {} outside [0, {}]", size, total));

  std::map<Cell, long> out;
  std::vector<std::pair<long, const Cell*>> remainders;
  long assigned = 0;
  for (const auto& [cell, n] : population) {
    // size * n fits comfortably for corpus-scale inputs.
    long long prod = static_cast<long long>(size) * n;
    out[cell] = static_cast<long>(prod / total);
    assigned += out[cell];
    remainders.emplace_back(static_cast<long>(prod % total), &cell);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (long i = 0; i < size - assigned; ++i) ++out[*remainders[static_cast<size_t>(i)].second];
  return out;
}

std::vector<std::string> stratified_sample(const std::vector<SampleUnit>& units, long size, std::uint64_t seed) {
  if (units.empty()) throw InvalidArgument("empty population");
  std::map<Cell, std::vector<std::string>> cells;
  std::set<std::string> seen;
  for (const auto& u : units) {
    if (!seen.insert(u.ecli).second) throw InvalidArgument("duplicate ECLI in population: " + u.ecli);
    cells[{u.court, u.year}].push_back(u.ecli);
  }
  std::map<Cell, long> population;
  for (auto& [cell, eclis] : cells) {
    std::sort(eclis.begin(), eclis.end());
    population[cell] = static_cast<long>(eclis.size());
  }
  auto quota = allocate(population, size);

  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (auto& [cell, eclis] : cells) {
    const size_t take = static_cast<size_t>(quota[cell]);
    for (size_t i = 0; i < take; ++i) {
      size_t j = i + static_cast<size_t>(bounded(rng, eclis.size() - i));
      std::swap(eclis[i], eclis[j]);
      out.push_back(eclis[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace judgcode::stats
