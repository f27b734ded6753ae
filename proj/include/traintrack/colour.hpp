#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "traintrack/errors.hpp"

namespace traintrack {

// Index into a ColourSet. Colours decorate trains and braid strands.
using ColourId = std::int32_t;

// A colour word: an object of the free braided category (the x-axis word).
// The empty word is the unit object.
using ColourWord = std::vector<ColourId>;

// Interned set of train colours. Identifiers must be non-empty, start with a
// letter or underscore, continue with letters/digits/underscores, and must
// not collide with the reserved generator names used by the DSL.
class ColourSet {
  public:
    ColourSet() = default;
    explicit ColourSet(const std::vector<std::string>& names);

    // Adds a colour; throws UnknownColour for malformed or reserved names.
    ColourId add(const std::string& name);

    // Throws UnknownColour if absent.
    ColourId id_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    const std::string& name_of(ColourId id) const;
    std::size_t size() const { return names_.size(); }

    ColourWord word_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(const ColourWord& word) const;

    static bool is_reserved(const std::string& name);
    static bool is_valid_identifier(const std::string& name);

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ColourId> index_;
};

} // namespace traintrack
