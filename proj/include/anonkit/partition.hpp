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

#ifndef ANONKIT_PARTITION_HPP_
#define ANONKIT_PARTITION_HPP_

#include <string>
#include <vector>

#include "anonkit/dataset.hpp"

namespace anonkit {

// Rows that share one quasi-identifier projection.
struct EquivalenceClass {
  std::vector<Value> key;
  std::vector<std::size_t> rows;

  std::size_t size() const { return rows.size(); }
};

// The equivalence-class decomposition of a dataset: disjoint classes that
// cover every row. Classes are ordered by first-occurrence row index, so
// the decomposition is deterministic for a given record order.
class Partition {
 public:
  // Groups rows by quasi-identifier projection. Missing cells equal Missing,
  // Suppressed equal Suppressed. A dataset with no quasi-identifiers yields
  // a single class holding every row.
  static Partition of(const Dataset& d);

  // Same grouping over an arbitrary column subset (used by the attribute-
  // wise entropy metric).
  static Partition by_attributes(const Dataset& d,
                                 const std::vector<std::string>& names);

  const std::vector<EquivalenceClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }  // j
  std::size_t n() const { return n_; }

  // Class index containing the row.
  std::size_t class_of(std::size_t row) const;

  // Size of the class containing the row (CES). Throws IndexOutOfRange.
  std::size_t ces(std::size_t row) const;

  // Smallest class size. Throws EmptyDataset when there are no rows.
  std::size_t min_ces() const;

 private:
  static Partition group_by(const Dataset& d,
                            const std::vector<std::size_t>& cols);

  std::vector<EquivalenceClass> classes_;
  std::vector<std::size_t> row_class_;
  std::size_t n_ = 0;
};

}  // namespace anonkit

#endif  // ANONKIT_PARTITION_HPP_
