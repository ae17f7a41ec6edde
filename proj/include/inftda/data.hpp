// Copyright 2026 The InfTDA Authors
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

#ifndef INFTDA_DATA_HPP_
#define INFTDA_DATA_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inftda/error.hpp"

namespace inftda {

// A point of the data universe (full tuple) or a length-k prefix of one.
// Lexicographic vector ordering doubles as the deterministic row order.
using Index = std::vector<std::uint32_t>;

// Sparse map from index tuples to counts.
using CountMap = std::map<Index, long long>;

struct Attribute {
  std::string name;
  std::vector<std::string> categories;  // index -> label
};

// Ordered categorical attribute domains. The attribute order is significant:
// level k of the query hierarchy marginalizes over the first k attributes.
class Schema {
 public:
  explicit Schema(std::vector<Attribute> attributes)
      : attributes_(std::move(attributes)) {
    if (attributes_.empty()) {
      throw InvalidArgument("schema needs at least one attribute");
    }
    for (const Attribute& attribute : attributes_) {
      if (attribute.categories.size() < 2) {
        throw InvalidArgument("attribute '" + attribute.name +
                              "' has fewer than 2 categories");
      }
      std::set<std::string> seen(attribute.categories.begin(),
                                 attribute.categories.end());
      if (seen.size() != attribute.categories.size()) {
        throw InvalidArgument("attribute '" + attribute.name +
                              "' has duplicate category labels");
      }
    }
    std::set<std::string> names;
    for (const Attribute& attribute : attributes_) {
      if (!names.insert(attribute.name).second) {
        throw InvalidArgument("duplicate attribute name '" + attribute.name +
                              "'");
      }
    }
  }

  std::size_t dimension() const { return attributes_.size(); }

  const Attribute& attribute(std::size_t i) const { return attributes_.at(i); }

  std::size_t domain_size(std::size_t i) const {
    return attributes_.at(i).categories.size();
  }

  std::vector<std::size_t> domain_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(attributes_.size());
    for (const Attribute& attribute : attributes_) {
      sizes.push_back(attribute.categories.size());
    }
    return sizes;
  }

  // |X| = prod |X_i|, or 0 if the product exceeds `cap`.
  std::uint64_t universe_size_capped(std::uint64_t cap) const {
    std::uint64_t size = 1;
    for (const Attribute& attribute : attributes_) {
      const std::uint64_t m = attribute.categories.size();
      if (size > cap / m) {
        return 0;
      }
      size *= m;
    }
    return size <= cap ? size : 0;
  }

  void validate_index(const Index& index) const {
    if (index.size() != attributes_.size()) {
      throw InvalidArgument("index length does not match schema dimension");
    }
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (index[i] >= attributes_[i].categories.size()) {
        throw InvalidArgument("index value out of domain for attribute '" +
                              attributes_[i].name + "'");
      }
    }
  }

  friend bool operator==(const Schema& a, const Schema& b) {
    if (a.attributes_.size() != b.attributes_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.attributes_.size(); ++i) {
      if (a.attributes_[i].name != b.attributes_[i].name ||
          a.attributes_[i].categories != b.attributes_[i].categories) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<Attribute> attributes_;
};

// A multiset of encoded records over one schema.
class Dataset {
 public:
  Dataset(Schema schema, std::vector<Index> records)
      : schema_(std::move(schema)), records_(std::move(records)) {
    for (const Index& record : records_) {
      schema_.validate_index(record);
    }
  }

  const Schema& schema() const { return schema_; }
  const std::vector<Index>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

 private:
  Schema schema_;
  std::vector<Index> records_;
};

// Sparse histogram of a dataset over the full universe. Zero cells are
// never stored; every stored count is >= 1.
class ContingencyTable {
 public:
  static ContingencyTable from_counts(Schema schema, CountMap counts) {
    long long total = 0;
    for (auto it = counts.begin(); it != counts.end();) {
      schema.validate_index(it->first);
      if (it->second < 0) {
        throw InvalidArgument("contingency counts must be non-negative");
      }
      if (it->second == 0) {
        it = counts.erase(it);
        continue;
      }
      total += it->second;
      ++it;
    }
    return ContingencyTable(std::move(schema), std::move(counts), total);
  }

  const Schema& schema() const { return schema_; }
  const CountMap& counts() const { return counts_; }
  long long total() const { return total_; }

  long long count(const Index& index) const {
    const auto it = counts_.find(index);
    return it == counts_.end() ? 0 : it->second;
  }

 private:
  ContingencyTable(Schema schema, CountMap counts, long long total)
      : schema_(std::move(schema)),
        counts_(std::move(counts)),
        total_(total) {}

  Schema schema_;
  CountMap counts_;
  long long total_;
};

inline ContingencyTable contingency(const Dataset& dataset) {
  CountMap counts;
  for (const Index& record : dataset.records()) {
    ++counts[record];
  }
  return ContingencyTable::from_counts(dataset.schema(), std::move(counts));
}

// Exact level-k hierarchical query answers: counts aggregated over the first
// k attributes. k = 0 yields the single entry {() -> total}; k = d yields the
// table itself. Only nonzero prefixes appear.
inline CountMap prefix_counts(const ContingencyTable& table, std::size_t k) {
  const std::size_t d = table.schema().dimension();
  if (k > d) {
    throw InvalidArgument("prefix level out of range");
  }
  CountMap result;
  if (k == 0) {
    result[Index{}] = table.total();
    return result;
  }
  if (k == d) {
    return table.counts();
  }
  for (const auto& [index, count] : table.counts()) {
    Index prefix(index.begin(), index.begin() + k);
    result[std::move(prefix)] += count;
  }
  return result;
}

// Expands a table back into row form, each tuple repeated count times, in
// lexicographic order. Round-trips with contingency().
inline Dataset materialize_records(const ContingencyTable& table) {
  std::vector<Index> records;
  records.reserve(static_cast<std::size_t>(table.total()));
  for (const auto& [index, count] : table.counts()) {
    for (long long i = 0; i < count; ++i) {
      records.push_back(index);
    }
  }
  return Dataset(table.schema(), std::move(records));
}

}  // namespace inftda

#endif  // INFTDA_DATA_HPP_
