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

// The closed part-of-speech tag inventory: base tags plus word-specific
// variants such as PREP-DE (the preposition reading of "de"/"des"/"du")
// that fold back onto a base tag after disambiguation.

#ifndef FSTAG_TAGSET_HPP
#define FSTAG_TAGSET_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fstag {

class TagInventory;

// An interned tag: equality is identity on a small integer id.
class Tag {
 public:
  Tag() = default;
  std::uint16_t id() const { return id_; }
  auto operator<=>(const Tag&) const = default;

 private:
  friend class TagInventory;
  explicit Tag(std::uint16_t id) : id_(id) {}
  std::uint16_t id_ = 0;
};

// A small set of distinct tags, kept sorted by id.
class TagSet {
 public:
  TagSet() = default;
  TagSet(std::initializer_list<Tag> tags);
  explicit TagSet(const std::vector<Tag>& tags);

  bool empty() const { return tags_.empty(); }
  std::size_t size() const { return tags_.size(); }
  bool contains(Tag t) const;
  void insert(Tag t);
  void merge(const TagSet& other);

  TagSet intersect(const TagSet& other) const;
  TagSet subtract(const TagSet& other) const;
  bool intersects(const TagSet& other) const;
  bool subset_of(const TagSet& other) const;

  auto begin() const { return tags_.begin(); }
  auto end() const { return tags_.end(); }
  Tag front() const { return tags_.front(); }

  auto operator<=>(const TagSet&) const = default;

 private:
  std::vector<Tag> tags_;
};

// The interning registry for an inventory.  Immutable once built (the
// variant extension hook is for configuration load, before use).
class TagInventory {
 public:
  // The built-in inventory: 37 base tags and the four standard
  // word-specific variants (PREP-DE, PREP-A, CONN-ET, CONN-Q).
  static const TagInventory& builtin();

  // Reads an inventory file: one tag per line, `variant<TAB>base` for
  // word-specific entries, `#` comments.  Replaces the built-in list.
  static TagInventory load(std::istream& in);

  // Returns the tag for `label`, case-sensitively.  Throws DataError
  // naming the offending string if the label is not in the inventory.
  Tag parse(std::string_view label) const;
  std::optional<Tag> find(std::string_view label) const;

  const std::string& name(Tag t) const;

  // Word-specific variant -> base tag; base tags map to themselves.
  Tag normalize(Tag t) const;
  bool is_variant(Tag t) const { return normalize(t) != t; }

  // Open-class tags are the ones the guesser may produce:
  // NOUN-*, ADJ-*, VERB-*, PAP-* and ADV.
  bool is_open_class(Tag t) const;

  std::size_t size() const { return names_.size(); }
  std::vector<Tag> all() const;

  // Registers an additional word-specific variant (configuration hook).
  Tag add_variant(const std::string& label, Tag base);

  std::string to_string(const TagSet& set, char sep = ' ') const;

 private:
  TagInventory() = default;
  Tag add(const std::string& label);

  std::vector<std::string> names_;
  std::vector<std::uint16_t> base_of_;  // base_of_[id] == id for base tags
};

}  // namespace fstag

#endif  // FSTAG_TAGSET_HPP
