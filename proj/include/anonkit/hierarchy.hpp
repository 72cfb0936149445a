// Copyright 2026 The anonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANONKIT_HIERARCHY_HPP_
#define ANONKIT_HIERARCHY_HPP_

#include <map>
#include <string>
#include <vector>

#include "anonkit/dataset.hpp"

namespace anonkit {

// A generalization hierarchy for one attribute. Level 0 is the identity;
// raising the level coarsens values monotonically (values that share a
// label keep sharing it at every higher level); the top level maps every
// value to "*", i.e. full suppression of the cell.
class Hierarchy {
 public:
  enum class Kind { Categorical, Interval };

  struct Range {
    double lo = 0.0;   // inclusive
    double hi = 0.0;   // exclusive
    std::string label;
  };

  // Categorical hierarchy from per-value label chains. `table[v0]` lists the
  // labels of v0 at levels 1..top-1 ("*" entries are honored as suppression).
  static Hierarchy categorical(
      std::string attribute,
      std::map<std::string, std::vector<std::string>> table);

  // Interval hierarchy from per-level range lists (level 1 first). Each
  // level must be gap-free, overlap-free, and nested inside the next.
  static Hierarchy interval(std::string attribute,
                            std::vector<std::vector<Range>> levels);

  const std::string& attribute() const { return attribute_; }
  Kind kind() const { return kind_; }

  // Index of the top ("*") level; valid levels are 0..top_level().
  int top_level() const { return top_level_; }

  // Generalizes one cell to the given level. Level 0 copies the cell; the
  // top level yields Suppressed (Missing cells stay Missing below the top).
  // Throws UnmappedValue when a level-0 value is not covered.
  Value apply(const Value& v, int level) const;

 private:
  std::string attribute_;
  Kind kind_ = Kind::Categorical;
  int top_level_ = 1;
  // Categorical: level-0 value -> labels for levels 1..top_level-1.
  std::map<std::string, std::vector<std::string>> table_;
  // Interval: ranges per level, index 0 holding level 1.
  std::vector<std::vector<Range>> ranges_;
};

// Hierarchies keyed by attribute name.
using HierarchySet = std::map<std::string, Hierarchy>;

// Per-quasi-identifier generalization levels, in QI schema order.
struct GeneralizationScheme {
  std::vector<int> levels;

  bool operator==(const GeneralizationScheme& o) const {
    return levels == o.levels;
  }
  int sum() const {
    int s = 0;
    for (int l : levels) s += l;
    return s;
  }
};

// Parses a hierarchy file. Text files hold one "v0;v1;...;vL" row per
// level-0 value; JSON files ({"kind":"interval","levels":[...]}) declare
// interval levels. A "*" top level is synthesized when absent. Validates
// functional mapping, monotone coarsening, and range gaps/overlaps.
Hierarchy load_hierarchy(const std::string& path,
                         const AttributeSchema& attribute);

// Replaces each QI cell by its label at the scheme's level for that
// attribute; non-QI cells and record order are untouched.
// Throws MissingHierarchy, InvalidParameter, UnmappedValue.
Dataset generalize(const Dataset& d, const GeneralizationScheme& scheme,
                   const HierarchySet& hierarchies);

// Upper level bounds for d's QI attributes, in schema order.
std::vector<int> scheme_bounds(const Dataset& d, const HierarchySet& hs);

}  // namespace anonkit

#endif  // ANONKIT_HIERARCHY_HPP_
