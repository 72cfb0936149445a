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

#ifndef ANONKIT_VALUE_HPP_
#define ANONKIT_VALUE_HPP_

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>

#include "anonkit/error.hpp"

namespace anonkit {

// Cell typing follows the qualitative (nominal, ordinal) / quantitative
// (discrete, continuous) split, plus the two bookkeeping states a cell can
// be in: Missing (never observed) and Suppressed (masked during
// anonymization, displayed as "*").
enum class ValueKind {
  Missing,
  Nominal,
  Ordinal,
  Discrete,
  Continuous,
  Suppressed,
};

std::string_view value_kind_name(ValueKind kind);

// One table cell. Immutable; equality is by kind and canonical content, so
// Missing compares equal only to Missing and Suppressed only to Suppressed.
//
// Quantitative cells remember the exact token they were parsed from so that
// writing a dataset back to CSV reproduces the input tokens (e.g. "007" or
// "3.50" survive a load/write round trip).
class Value {
 public:
  Value() : kind_(ValueKind::Missing) {}

  static Value missing() { return Value(); }

  static Value suppressed() {
    Value v;
    v.kind_ = ValueKind::Suppressed;
    return v;
  }

  static Value nominal(std::string label) {
    Value v;
    v.kind_ = ValueKind::Nominal;
    v.text_ = std::move(label);
    return v;
  }

  static Value ordinal(std::string label, int rank) {
    Value v;
    v.kind_ = ValueKind::Ordinal;
    v.text_ = std::move(label);
    v.rank_ = rank;
    return v;
  }

  static Value discrete(std::int64_t value, std::string token = "") {
    Value v;
    v.kind_ = ValueKind::Discrete;
    v.int_ = value;
    v.text_ = token.empty() ? std::to_string(value) : std::move(token);
    return v;
  }

  static Value continuous(double value, std::string token = "") {
    Value v;
    v.kind_ = ValueKind::Continuous;
    v.real_ = value;
    if (token.empty()) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", value);
      v.text_ = buf;
    } else {
      v.text_ = std::move(token);
    }
    return v;
  }

  ValueKind kind() const { return kind_; }
  bool is_missing() const { return kind_ == ValueKind::Missing; }
  bool is_suppressed() const { return kind_ == ValueKind::Suppressed; }

  // Label for qualitative cells, original token for quantitative ones.
  const std::string& text() const { return text_; }

  std::int64_t as_int() const { return int_; }
  double as_real() const { return real_; }
  int rank() const { return rank_; }

  // Position on the attribute's numeric axis: the value itself for
  // quantitative cells, the declared rank for ordinal ones. Used by
  // interval hierarchies and ordered distribution distances.
  double numeric() const {
    switch (kind_) {
      case ValueKind::Discrete:
        return static_cast<double>(int_);
      case ValueKind::Continuous:
        return real_;
      case ValueKind::Ordinal:
        return static_cast<double>(rank_);
      default:
        fail(Errc::InvalidParameter,
             "value of kind " + std::string(value_kind_name(kind_)) +
                 " has no numeric position");
    }
  }

  // The token a cell shows in exports and in modified-cell comparisons.
  // Missing cells render as the caller's missing token; Suppressed as "*".
  std::string display(const std::string& missing_token = "") const {
    switch (kind_) {
      case ValueKind::Missing:
        return missing_token;
      case ValueKind::Suppressed:
        return "*";
      default:
        return text_;
    }
  }

  // Canonical equality key; cells land in the same equivalence class iff
  // their keys match.
  std::string key() const {
    switch (kind_) {
      case ValueKind::Missing:
        return "M";
      case ValueKind::Suppressed:
        return "S";
      case ValueKind::Nominal:
        return "N:" + text_;
      case ValueKind::Ordinal:
        return "O:" + std::to_string(rank_);
      case ValueKind::Discrete:
        return "D:" + std::to_string(int_);
      case ValueKind::Continuous: {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "C:%.17g", real_);
        return buf;
      }
    }
    return "?";
  }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case ValueKind::Missing:
      case ValueKind::Suppressed:
        return true;
      case ValueKind::Nominal:
        return a.text_ == b.text_;
      case ValueKind::Ordinal:
        return a.rank_ == b.rank_;
      case ValueKind::Discrete:
        return a.int_ == b.int_;
      case ValueKind::Continuous:
        return a.real_ == b.real_;
    }
    return false;
  }

  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  ValueKind kind_;
  std::string text_;
  std::int64_t int_ = 0;
  double real_ = 0.0;
  int rank_ = -1;
};

}  // namespace anonkit

#endif  // ANONKIT_VALUE_HPP_
