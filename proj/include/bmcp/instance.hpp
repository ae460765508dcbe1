// Copyright 2026 The BMCP Solver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMCP_INSTANCE_HPP_
#define BMCP_INSTANCE_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace bmcp {

using ItemIndex = std::int32_t;
using ElementIndex = std::int32_t;
using Weight = std::int64_t;
using Cost = std::int64_t;

// Raised for malformed instance text. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A budgeted maximum coverage instance: n items with costs, m elements with
// weights, the item/element incidence in both directions and the budget L.
// All indices are 0-based. Immutable after construction.
class Instance {
 public:
  Instance() = default;

  // Validates and builds the element->item direction. `cover[i]` lists the
  // elements covered by item i in any order; duplicates are rejected.
  Instance(std::vector<Cost> costs, std::vector<Weight> weights,
           std::vector<std::vector<ElementIndex>> cover, Cost budget)
      : costs_(std::move(costs)),
        weights_(std::move(weights)),
        cover_(std::move(cover)),
        budget_(budget) {
    if (cover_.size() != costs_.size()) {
      throw std::invalid_argument("cover list count differs from item count");
    }
    if (budget_ < 0) throw std::invalid_argument("negative budget");
    for (Cost c : costs_) {
      if (c < 0) throw std::invalid_argument("negative cost");
    }
    for (Weight w : weights_) {
      if (w < 0) throw std::invalid_argument("negative weight");
    }
    covered_by_.resize(weights_.size());
    for (std::size_t i = 0; i < cover_.size(); ++i) {
      auto& row = cover_[i];
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
        throw std::invalid_argument("duplicate edge for item " +
                                    std::to_string(i + 1));
      }
      for (ElementIndex j : row) {
        if (j < 0 || static_cast<std::size_t>(j) >= weights_.size()) {
          throw std::invalid_argument("element index out of range");
        }
        covered_by_[j].push_back(static_cast<ItemIndex>(i));
      }
    }
  }

  ItemIndex num_items() const { return static_cast<ItemIndex>(costs_.size()); }
  ElementIndex num_elements() const {
    return static_cast<ElementIndex>(weights_.size());
  }
  Cost budget() const { return budget_; }

  Cost cost(ItemIndex i) const { return costs_[i]; }
  Weight weight(ElementIndex j) const { return weights_[j]; }
  std::span<const Cost> costs() const { return costs_; }
  std::span<const Weight> weights() const { return weights_; }

  // Sorted elements covered by item i.
  std::span<const ElementIndex> cover(ItemIndex i) const { return cover_[i]; }
  // Sorted items covering element j.
  std::span<const ItemIndex> covered_by(ElementIndex j) const {
    return covered_by_[j];
  }

  std::size_t num_edges() const {
    std::size_t total = 0;
    for (const auto& row : cover_) total += row.size();
    return total;
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Cost> costs_;
  std::vector<Weight> weights_;
  std::vector<std::vector<ElementIndex>> cover_;
  std::vector<std::vector<ItemIndex>> covered_by_;
  Cost budget_ = 0;
};

struct Evaluation {
  Weight weight = 0;
  Cost cost = 0;
  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// From-scratch W(S) and C(S). Does not check the budget.
inline Evaluation evaluate(const Instance& inst, std::span<const ItemIndex> items) {
  std::vector<char> covered(inst.num_elements(), 0);
  Evaluation result;
  for (ItemIndex i : items) {
    if (i < 0 || i >= inst.num_items()) {
      throw std::out_of_range("item index out of range");
    }
    result.cost += inst.cost(i);
    for (ElementIndex j : inst.cover(i)) covered[j] = 1;
  }
  for (ElementIndex j = 0; j < inst.num_elements(); ++j) {
    if (covered[j]) result.weight += inst.weight(j);
  }
  return result;
}

inline Evaluation evaluate(const Instance& inst,
                           std::initializer_list<ItemIndex> items) {
  return evaluate(inst, std::span<const ItemIndex>(items.begin(), items.size()));
}

namespace internal {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits text into non-blank, non-comment lines of whitespace tokens.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos >= raw.size()) break;
      if (line.tokens.empty() && raw[pos] == '#') break;
      std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::int64_t to_integer(std::string_view token, std::size_t line,
                               const char* what) {
  std::int64_t value = 0;
  std::size_t pos = 0;
  bool negative = false;
  if (pos < token.size() && (token[pos] == '-' || token[pos] == '+')) {
    negative = token[pos] == '-';
    ++pos;
  }
  if (pos == token.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(token) + "'");
  }
  for (; pos < token.size(); ++pos) {
    char c = token[pos];
    if (c < '0' || c > '9') {
      throw ParseError(line, std::string("malformed ") + what + " '" +
                                 std::string(token) + "'");
    }
    if (value > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10) {
      throw ParseError(line, std::string(what) + " overflows 64 bits");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace internal

// Parses the canonical text format:
//   n m L
//   c_1 ... c_n
//   w_1 ... w_m
//   k_i e_1 ... e_k   (one line per item, 1-based strictly increasing)
// Lines starting with '#' are comments.
inline Instance parse_instance(std::string_view text) {
  using internal::to_integer;
  const auto lines = internal::tokenize(text);
  std::size_t cursor = 0;
  std::size_t last_line = 0;
  auto next = [&](const char* what) -> const internal::Line& {
    if (cursor >= lines.size()) {
      throw ParseError(last_line + 1, std::string("truncated file: missing ") + what);
    }
    last_line = lines[cursor].number;
    return lines[cursor++];
  };

  const auto& header = next("header");
  if (header.tokens.size() != 3) {
    throw ParseError(header.number, "header must be 'n m L'");
  }
  const std::int64_t n = to_integer(header.tokens[0], header.number, "item count");
  const std::int64_t m = to_integer(header.tokens[1], header.number, "element count");
  const std::int64_t budget = to_integer(header.tokens[2], header.number, "budget");
  if (n < 0 || m < 0) throw ParseError(header.number, "negative dimension");
  if (n > std::numeric_limits<ItemIndex>::max() ||
      m > std::numeric_limits<ElementIndex>::max()) {
    throw ParseError(header.number, "dimension too large");
  }
  if (budget < 0) throw ParseError(header.number, "negative budget");

  auto read_values = [&](std::int64_t count, const char* what) {
    std::vector<std::int64_t> values;
    if (count == 0) return values;
    const auto& line = next(what);
    if (static_cast<std::int64_t>(line.tokens.size()) != count) {
      throw ParseError(line.number, std::string("expected ") + std::to_string(count) +
                                        " " + what + ", found " +
                                        std::to_string(line.tokens.size()));
    }
    for (auto token : line.tokens) {
      std::int64_t v = to_integer(token, line.number, what);
      if (v < 0) throw ParseError(line.number, std::string("negative ") + what);
      values.push_back(v);
    }
    return values;
  };
  std::vector<Cost> costs = read_values(n, "costs");
  std::vector<Weight> weights = read_values(m, "weights");

  std::vector<std::vector<ElementIndex>> cover(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& line = next("cover line");
    const std::int64_t k = to_integer(line.tokens[0], line.number, "cover size");
    if (k < 0 || static_cast<std::int64_t>(line.tokens.size()) != k + 1) {
      throw ParseError(line.number, "cover size does not match listed elements");
    }
    auto& row = cover[i];
    row.reserve(k);
    for (std::int64_t t = 1; t <= k; ++t) {
      std::int64_t e = to_integer(line.tokens[t], line.number, "element index");
      if (e < 1 || e > m) throw ParseError(line.number, "element index out of range");
      auto idx = static_cast<ElementIndex>(e - 1);
      if (!row.empty() && idx == row.back()) {
        throw ParseError(line.number, "duplicate edge");
      }
      if (!row.empty() && idx < row.back()) {
        throw ParseError(line.number, "element indices not strictly increasing");
      }
      row.push_back(idx);
    }
  }
  if (cursor != lines.size()) {
    throw ParseError(lines[cursor].number, "unexpected trailing content");
  }
  return Instance(std::move(costs), std::move(weights), std::move(cover), budget);
}

// JSON mirror: {"n","m","budget","costs","weights","cover"} with 1-based
// element indices in "cover".
inline Instance parse_instance_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::int64_t>();
    const auto m = doc.at("m").get<std::int64_t>();
    const auto budget = doc.at("budget").get<std::int64_t>();
    auto costs = doc.at("costs").get<std::vector<Cost>>();
    auto weights = doc.at("weights").get<std::vector<Weight>>();
    auto rows = doc.at("cover").get<std::vector<std::vector<std::int64_t>>>();
    if (static_cast<std::int64_t>(costs.size()) != n ||
        static_cast<std::int64_t>(rows.size()) != n) {
      throw ParseError(0, "costs/cover length differs from n");
    }
    if (static_cast<std::int64_t>(weights.size()) != m) {
      throw ParseError(0, "weights length differs from m");
    }
    std::vector<std::vector<ElementIndex>> cover(n);
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t e : rows[i]) {
        if (e < 1 || e > m) throw ParseError(0, "element index out of range");
        cover[i].push_back(static_cast<ElementIndex>(e - 1));
      }
    }
    return Instance(std::move(costs), std::move(weights), std::move(cover), budget);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid instance JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.num_items() << ' ' << inst.num_elements() << ' ' << inst.budget()
      << '\n';
  auto write_row = [&out](auto values) {
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (t) out << ' ';
      out << values[t];
    }
    out << '\n';
  };
  if (inst.num_items() > 0) write_row(inst.costs());
  if (inst.num_elements() > 0) write_row(inst.weights());
  for (ItemIndex i = 0; i < inst.num_items(); ++i) {
    out << inst.cover(i).size();
    for (ElementIndex j : inst.cover(i)) out << ' ' << j + 1;
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json cover = nlohmann::json::array();
  for (ItemIndex i = 0; i < inst.num_items(); ++i) {
    std::vector<std::int64_t> row;
    for (ElementIndex j : inst.cover(i)) row.push_back(j + 1);
    cover.push_back(row);
  }
  return {{"n", inst.num_items()},
          {"m", inst.num_elements()},
          {"budget", inst.budget()},
          {"costs", std::vector<Cost>(inst.costs().begin(), inst.costs().end())},
          {"weights", std::vector<Weight>(inst.weights().begin(), inst.weights().end())},
          {"cover", cover}};
}

// Reads a file, dispatching on the ".json" extension.
inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return is_json ? parse_instance_json(text) : parse_instance(text);
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file '" + path + "'");
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (is_json) {
    out << instance_to_json(inst).dump() << '\n';
  } else {
    out << serialize_instance(inst);
  }
}

}  // namespace bmcp

#endif  // BMCP_INSTANCE_HPP_
