#include "traintrack/colour.hpp"

#include <cctype>

namespace traintrack {

ColourSet::ColourSet(const std::vector<std::string>& names) {
    for (const auto& name : names) add(name);
}

bool ColourSet::is_reserved(const std::string& name) {
    return name == "alpha" || name == "beta" || name == "id";
}

bool ColourSet::is_valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

ColourId ColourSet::add(const std::string& name) {
    if (!is_valid_identifier(name))
        fail(ErrorCode::UnknownColour, "malformed colour identifier '" + name + "'");
    if (is_reserved(name))
        fail(ErrorCode::UnknownColour, "'" + name + "' is reserved and cannot name a colour");
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    ColourId id = static_cast<ColourId>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
}

ColourId ColourSet::id_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(ErrorCode::UnknownColour, "unknown colour '" + name + "'");
    return it->second;
}

bool ColourSet::contains(const std::string& name) const { return index_.count(name) > 0; }

const std::string& ColourSet::name_of(ColourId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= names_.size())
        fail(ErrorCode::UnknownColour, "colour id " + std::to_string(id) + " out of range");
    return names_[static_cast<std::size_t>(id)];
}

ColourWord ColourSet::word_of(const std::vector<std::string>& names) const {
    ColourWord word;
    word.reserve(names.size());
    for (const auto& name : names) word.push_back(id_of(name));
    return word;
}

std::vector<std::string> ColourSet::names_of(const ColourWord& word) const {
    std::vector<std::string> names;
    names.reserve(word.size());
    for (ColourId id : word) names.push_back(name_of(id));
    return names;
}

} // namespace traintrack
