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

#include "anonkit/hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace anonkit {

namespace {

// Monotone coarsening: values sharing a label at level l must share one at
// every level above. Checked pairwise per level via label->label maps.
void check_monotone(
    const std::map<std::string, std::vector<std::string>>& table,
    int declared_levels, const std::string& attribute) {
  for (int level = 0; level + 1 < declared_levels; ++level) {
    std::unordered_map<std::string, std::string> next_of;
    for (const auto& [v0, labels] : table) {
      const std::string& here = level == 0 ? v0 : labels[level - 1];
      const std::string& next = labels[level];
      auto [it, inserted] = next_of.emplace(here, next);
      if (!inserted && it->second != next) {
        fail(Errc::NonMonotone,
             "attribute \"" + attribute + "\": values labeled \"" + here +
                 "\" at level " + std::to_string(level) + " split into \"" +
                 it->second + "\" and \"" + next + "\" at level " +
                 std::to_string(level + 1));
      }
    }
  }
}

std::string range_str(const Hierarchy::Range& r) {
  std::ostringstream out;
  out << "[" << r.lo << "," << r.hi << ")";
  return out.str();
}

void check_ranges(const std::vector<std::vector<Hierarchy::Range>>& levels,
                  const std::string& attribute) {
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto& ranges = levels[l];
    if (ranges.empty()) {
      fail(Errc::IoError, "attribute \"" + attribute + "\": interval level " +
                              std::to_string(l + 1) + " is empty");
    }
    std::map<std::string, std::size_t> seen_labels;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      if (ranges[i].lo >= ranges[i].hi) {
        fail(Errc::IoError, "attribute \"" + attribute + "\": empty range " +
                                range_str(ranges[i]));
      }
      auto [it, inserted] = seen_labels.emplace(ranges[i].label, i);
      if (!inserted) {
        fail(Errc::NonFunctionalMapping,
             "attribute \"" + attribute + "\": label \"" + ranges[i].label +
                 "\" is reused by disjoint ranges within one level");
      }
      if (i == 0) continue;
      if (ranges[i].lo < ranges[i - 1].hi) {
        fail(Errc::RangeOverlap,
             "attribute \"" + attribute + "\": " + range_str(ranges[i - 1]) +
                 " overlaps " + range_str(ranges[i]));
      }
      if (ranges[i].lo > ranges[i - 1].hi) {
        fail(Errc::RangeGap,
             "attribute \"" + attribute + "\": gap between " +
                 range_str(ranges[i - 1]) + " and " + range_str(ranges[i]));
      }
    }
  }
  // Nesting: every finer range must sit inside a single coarser range, and
  // all levels must span the same domain.
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    const auto& fine = levels[l];
    const auto& coarse = levels[l + 1];
    if (fine.front().lo != coarse.front().lo ||
        fine.back().hi != coarse.back().hi) {
      fail(Errc::NonMonotone,
           "attribute \"" + attribute + "\": level " + std::to_string(l + 2) +
               " does not span the same domain as level " +
               std::to_string(l + 1));
    }
    for (const auto& r : fine) {
      bool contained = std::any_of(
          coarse.begin(), coarse.end(), [&](const Hierarchy::Range& c) {
            return c.lo <= r.lo && r.hi <= c.hi;
          });
      if (!contained) {
        fail(Errc::NonMonotone, "attribute \"" + attribute + "\": range " +
                                    range_str(r) + " straddles level-" +
                                    std::to_string(l + 2) + " boundaries");
      }
    }
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == sep) {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

Hierarchy load_categorical(const std::string& path, const std::string& text,
                           const AttributeSchema& attr) {
  std::map<std::string, std::vector<std::string>> table;
  std::size_t width = 0;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split(line, ';');
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      fail(Errc::ParseError, "\"" + path + "\" line " +
                                 std::to_string(line_no) +
                                 ": expected " + std::to_string(width) +
                                 " fields, got " +
                                 std::to_string(fields.size()));
    }
    std::vector<std::string> labels(fields.begin() + 1, fields.end());
    auto [it, inserted] = table.emplace(fields[0], labels);
    if (!inserted && it->second != labels) {
      fail(Errc::NonFunctionalMapping,
           "attribute \"" + attr.name + "\": value \"" + fields[0] +
               "\" maps to two different label chains");
    }
  }
  if (table.empty()) {
    fail(Errc::IoError, "hierarchy \"" + path + "\" is empty");
  }
  return Hierarchy::categorical(attr.name, std::move(table));
}

Hierarchy load_interval(const std::string& path, const std::string& text,
                        const AttributeSchema& attr) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::IoError, "hierarchy \"" + path + "\": " + e.what());
  }
  if (doc.value("kind", "interval") != "interval") {
    fail(Errc::IoError, "hierarchy \"" + path + "\": unknown kind");
  }
  std::vector<std::vector<Hierarchy::Range>> levels;
  for (const auto& level : doc.at("levels")) {
    std::vector<Hierarchy::Range> ranges;
    for (const auto& r : level) {
      Hierarchy::Range range;
      range.lo = r.at("lo").get<double>();
      range.hi = r.at("hi").get<double>();
      range.label = r.value("label", range_str(range));
      ranges.push_back(std::move(range));
    }
    std::sort(ranges.begin(), ranges.end(),
              [](const auto& a, const auto& b) { return a.lo < b.lo; });
    levels.push_back(std::move(ranges));
  }
  if (levels.empty()) {
    fail(Errc::IoError, "hierarchy \"" + path + "\" declares no levels");
  }
  return Hierarchy::interval(attr.name, std::move(levels));
}

}  // namespace

Hierarchy Hierarchy::categorical(
    std::string attribute,
    std::map<std::string, std::vector<std::string>> table) {
  if (table.empty()) {
    fail(Errc::IoError, "attribute \"" + attribute + "\": empty hierarchy");
  }
  std::size_t chain = table.begin()->second.size();
  for (const auto& [v0, labels] : table) {
    if (labels.size() != chain) {
      fail(Errc::ParseError, "attribute \"" + attribute +
                                 "\": uneven label chain for \"" + v0 + "\"");
    }
  }
  // Drop a user-written all-"*" tail; the top level is implicit.
  while (chain > 0) {
    bool all_star = std::all_of(
        table.begin(), table.end(),
        [&](const auto& kv) { return kv.second[chain - 1] == "*"; });
    if (!all_star) break;
    --chain;
    for (auto& [v0, labels] : table) labels.pop_back();
  }

  check_monotone(table, static_cast<int>(chain) + 1, attribute);

  Hierarchy h;
  h.attribute_ = std::move(attribute);
  h.kind_ = Kind::Categorical;
  h.top_level_ = static_cast<int>(chain) + 1;
  h.table_ = std::move(table);
  return h;
}

Hierarchy Hierarchy::interval(std::string attribute,
                              std::vector<std::vector<Range>> levels) {
  check_ranges(levels, attribute);
  Hierarchy h;
  h.attribute_ = std::move(attribute);
  h.kind_ = Kind::Interval;
  h.top_level_ = static_cast<int>(levels.size()) + 1;
  h.ranges_ = std::move(levels);
  return h;
}

Value Hierarchy::apply(const Value& v, int level) const {
  if (level < 0 || level > top_level_) {
    fail(Errc::InvalidParameter,
         "level " + std::to_string(level) + " outside 0.." +
             std::to_string(top_level_) + " for attribute \"" + attribute_ +
             "\"");
  }
  if (level == 0) return v;
  if (v.is_suppressed()) return Value::suppressed();
  if (level == top_level_) return Value::suppressed();
  if (v.is_missing()) return Value::missing();

  if (kind_ == Kind::Categorical) {
    auto it = table_.find(v.display());
    if (it == table_.end()) {
      fail(Errc::UnmappedValue, "attribute \"" + attribute_ + "\": value \"" +
                                    v.display() + "\" is not in the hierarchy");
    }
    const std::string& label = it->second[level - 1];
    if (label == "*") return Value::suppressed();
    return Value::nominal(label);
  }

  double x = v.numeric();
  const auto& ranges = ranges_[level - 1];
  auto it = std::upper_bound(
      ranges.begin(), ranges.end(), x,
      [](double value, const Range& r) { return value < r.hi; });
  if (it == ranges.end() || x < it->lo) {
    std::ostringstream msg;
    msg << "attribute \"" << attribute_ << "\": value " << x
        << " is outside the declared ranges";
    fail(Errc::UnmappedValue, msg.str());
  }
  return Value::nominal(it->label);
}

Hierarchy load_hierarchy(const std::string& path,
                         const AttributeSchema& attr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open hierarchy \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  std::size_t first = text.find_first_not_of(" \t\r\n");
  bool is_json = first != std::string::npos && text[first] == '{';

  if (attr.data_type == ValueKind::Continuous && !is_json) {
    fail(Errc::IoError, "attribute \"" + attr.name +
                            "\": continuous quasi-identifiers require an "
                            "interval hierarchy");
  }
  return is_json ? load_interval(path, text, attr)
                 : load_categorical(path, text, attr);
}

Dataset generalize(const Dataset& d, const GeneralizationScheme& scheme,
                   const HierarchySet& hierarchies) {
  auto qi = d.qi_indices();
  if (scheme.levels.size() != qi.size()) {
    fail(Errc::InvalidParameter,
         "scheme has " + std::to_string(scheme.levels.size()) +
             " levels for " + std::to_string(qi.size()) +
             " quasi-identifiers");
  }
  std::vector<const Hierarchy*> hs(qi.size(), nullptr);
  for (std::size_t q = 0; q < qi.size(); ++q) {
    const auto& name = d.schema()[qi[q]].name;
    auto it = hierarchies.find(name);
    if (it == hierarchies.end()) {
      fail(Errc::MissingHierarchy,
           "no hierarchy for quasi-identifier \"" + name + "\"");
    }
    hs[q] = &it->second;
    if (scheme.levels[q] < 0 || scheme.levels[q] > hs[q]->top_level()) {
      fail(Errc::InvalidParameter,
           "level " + std::to_string(scheme.levels[q]) +
               " out of bounds for \"" + name + "\"");
    }
  }

  std::vector<std::vector<Value>> records = d.records();
  for (auto& row : records) {
    for (std::size_t q = 0; q < qi.size(); ++q) {
      row[qi[q]] = hs[q]->apply(row[qi[q]], scheme.levels[q]);
    }
  }
  return Dataset(d.schema(), std::move(records));
}

std::vector<int> scheme_bounds(const Dataset& d, const HierarchySet& hs) {
  std::vector<int> bounds;
  for (const auto& name : d.qi_names()) {
    auto it = hs.find(name);
    if (it == hs.end()) {
      fail(Errc::MissingHierarchy,
           "no hierarchy for quasi-identifier \"" + name + "\"");
    }
    bounds.push_back(it->second.top_level());
  }
  return bounds;
}

}  // namespace anonkit
