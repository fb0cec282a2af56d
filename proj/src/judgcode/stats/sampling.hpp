#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace judgcode::stats {

struct SampleUnit {
  std::string ecli;
  std::string court;
  int year = 0;
};

using Cell = std::pair<std::string, int>;  // court, year

// Largest-remainder allocation of `size` over the cells, proportional to
// their populations. Remainder ties go to the earlier cell.
std::map<Cell, long> allocate(const std::map<Cell, long>& population, long size);

// Proportional court x year sample without replacement; ECLIs sorted.
// Throws InvalidArgument for an empty population, a duplicate ECLI, or a size
// outside [0, population].
std::vector<std::string> stratified_sample(const std::vector<SampleUnit>& units, long size, std::uint64_t seed);

}  // namespace judgcode::stats
