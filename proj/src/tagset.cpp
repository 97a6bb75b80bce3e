// Copyright 2026 The fstag authors
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

#include "fstag/tagset.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "fstag/errors.hpp"

namespace fstag {

namespace {

// The 37 base tags, in inventory order.
constexpr const char* kBaseTags[] = {
    "DET-SG",    "DET-PL",    "ADJ-INV",   "ADJ-SG",    "ADJ-PL",
    "NOUN-INV",  "NOUN-SG",   "NOUN-PL",   "VAUX-INF",  "VAUX-PRP",
    "VAUX-PAP",  "VAUX-P1P2", "VAUX-P3SG", "VAUX-P3PL", "VERB-INF",
    "VERB-PRP",  "VERB-P1P2", "VERB-P3SG", "VERB-P3PL", "PAP-INV",
    "PAP-SG",    "PAP-PL",    "PC",        "PRON",      "PRON-P1P2",
    "VOICILA",   "ADV",       "NEG",       "PREP",      "CONN",
    "COMME",     "CONJQUE",   "NUM",       "HEURE",     "MISC",
    "CM",        "PUNCT",
};

struct VariantSpec {
  const char* variant;
  const char* base;
};

constexpr VariantSpec kBuiltinVariants[] = {
    {"PREP-DE", "PREP"},
    {"PREP-A", "PREP"},
    {"CONN-ET", "CONN"},
    {"CONN-Q", "CONN"},
};

bool has_prefix(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

}  // namespace

TagSet::TagSet(std::initializer_list<Tag> tags) {
  for (Tag t : tags) insert(t);
}

TagSet::TagSet(const std::vector<Tag>& tags) {
  for (Tag t : tags) insert(t);
}

bool TagSet::contains(Tag t) const {
  return std::binary_search(tags_.begin(), tags_.end(), t);
}

void TagSet::insert(Tag t) {
  auto it = std::lower_bound(tags_.begin(), tags_.end(), t);
  if (it == tags_.end() || *it != t) tags_.insert(it, t);
}

void TagSet::merge(const TagSet& other) {
  for (Tag t : other) insert(t);
}

TagSet TagSet::intersect(const TagSet& other) const {
  TagSet out;
  std::set_intersection(tags_.begin(), tags_.end(), other.tags_.begin(),
                        other.tags_.end(), std::back_inserter(out.tags_));
  return out;
}

TagSet TagSet::subtract(const TagSet& other) const {
  TagSet out;
  std::set_difference(tags_.begin(), tags_.end(), other.tags_.begin(),
                      other.tags_.end(), std::back_inserter(out.tags_));
  return out;
}

bool TagSet::intersects(const TagSet& other) const {
  for (Tag t : other)
    if (contains(t)) return true;
  return false;
}

bool TagSet::subset_of(const TagSet& other) const {
  for (Tag t : tags_)
    if (!other.contains(t)) return false;
  return true;
}

Tag TagInventory::add(const std::string& label) {
  names_.push_back(label);
  base_of_.push_back(static_cast<std::uint16_t>(names_.size() - 1));
  return Tag(static_cast<std::uint16_t>(names_.size() - 1));
}

Tag TagInventory::add_variant(const std::string& label, Tag base) {
  if (find(label)) throw DataError("duplicate tag label: " + label);
  Tag t = add(label);
  base_of_[t.id()] = base.id();
  return t;
}

const TagInventory& TagInventory::builtin() {
  static const TagInventory instance = [] {
    TagInventory inv;
    for (const char* name : kBaseTags) inv.add(name);
    for (const auto& v : kBuiltinVariants)
      inv.add_variant(v.variant, inv.parse(v.base));
    return inv;
  }();
  return instance;
}

TagInventory TagInventory::load(std::istream& in) {
  TagInventory inv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    try {
      if (tab == std::string::npos) {
        if (inv.find(line)) throw DataError("duplicate tag label: " + line);
        inv.add(line);
      } else {
        std::string variant = line.substr(0, tab);
        std::string base = line.substr(tab + 1);
        inv.add_variant(variant, inv.parse(base));
      }
    } catch (const DataError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (inv.size() == 0) throw DataError("empty tag inventory");
  return inv;
}

Tag TagInventory::parse(std::string_view label) const {
  if (auto t = find(label)) return *t;
  throw DataError("unknown tag label: \"" + std::string(label) + "\"");
}

std::optional<Tag> TagInventory::find(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == label) return Tag(static_cast<std::uint16_t>(i));
  return std::nullopt;
}

const std::string& TagInventory::name(Tag t) const { return names_.at(t.id()); }

Tag TagInventory::normalize(Tag t) const { return Tag(base_of_.at(t.id())); }

bool TagInventory::is_open_class(Tag t) const {
  const std::string& n = name(normalize(t));
  return has_prefix(n, "NOUN-") || has_prefix(n, "ADJ-") ||
         has_prefix(n, "VERB-") || has_prefix(n, "PAP-") || n == "ADV";
}

std::vector<Tag> TagInventory::all() const {
  std::vector<Tag> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i)
    out.push_back(Tag(static_cast<std::uint16_t>(i)));
  return out;
}

std::string TagInventory::to_string(const TagSet& set, char sep) const {
  std::string out;
  for (Tag t : set) {
    if (!out.empty()) out.push_back(sep);
    out += name(t);
  }
  return out;
}

}  // namespace fstag
