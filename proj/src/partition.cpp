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

#include "anonkit/partition.hpp"

#include <algorithm>
#include <unordered_map>

namespace anonkit {

namespace {

std::vector<std::size_t> resolve(const Dataset& d,
                                 const std::vector<std::string>& names) {
  std::vector<std::size_t> cols;
  cols.reserve(names.size());
  for (const auto& name : names) cols.push_back(d.attribute_index(name));
  return cols;
}

}  // namespace

Partition Partition::of(const Dataset& d) {
  return group_by(d, d.qi_indices());
}

Partition Partition::by_attributes(const Dataset& d,
                                   const std::vector<std::string>& names) {
  return group_by(d, resolve(d, names));
}

Partition Partition::group_by(const Dataset& d,
                              const std::vector<std::size_t>& cols) {
  Partition part;
  part.n_ = d.n();
  part.row_class_.resize(d.n());

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(d.n() * 2);

  std::string key;
  for (std::size_t i = 0; i < d.n(); ++i) {
    key.clear();
    const auto& row = d.records()[i];
    for (std::size_t c : cols) {
      key += row[c].key();
      key += '\x1f';
    }
    auto [it, inserted] = index.emplace(key, part.classes_.size());
    if (inserted) {
      EquivalenceClass ec;
      ec.key.reserve(cols.size());
      for (std::size_t c : cols) ec.key.push_back(row[c]);
      part.classes_.push_back(std::move(ec));
    }
    part.classes_[it->second].rows.push_back(i);
    part.row_class_[i] = it->second;
  }
  return part;
}

std::size_t Partition::class_of(std::size_t row) const {
  if (row >= n_) {
    fail(Errc::IndexOutOfRange,
         "row " + std::to_string(row) + " of " + std::to_string(n_));
  }
  return row_class_[row];
}

std::size_t Partition::ces(std::size_t row) const {
  return classes_[class_of(row)].size();
}

std::size_t Partition::min_ces() const {
  if (classes_.empty()) fail(Errc::EmptyDataset, "partition has no classes");
  std::size_t best = classes_.front().size();
  for (const auto& c : classes_) best = std::min(best, c.size());
  return best;
}

}  // namespace anonkit
