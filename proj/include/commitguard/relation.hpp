#pragma once

#include <optional>
#include <string_view>

#include "commitguard/model.hpp"

namespace commitguard {

// Pairwise relation between two commitments on one account.
enum class Relation : std::uint8_t { Friend, Family, Strange };

// Reader/Reader -> Friend, Writer/Writer -> Family, mixed -> Strange.
// Symmetric by construction.
constexpr Relation classify_relation(AccessClass a, AccessClass b) {
    if (a == AccessClass::Reader && b == AccessClass::Reader) return Relation::Friend;
    if (a == AccessClass::Writer && b == AccessClass::Writer) return Relation::Family;
    return Relation::Strange;
}

// Only Friends may overlap; Family and Strange serialize.
constexpr bool may_run_concurrently(Relation rel) {
    return rel == Relation::Friend;
}

constexpr std::string_view to_string(Relation rel) {
    switch (rel) {
        case Relation::Friend: return "Friend";
        case Relation::Family: return "Family";
        case Relation::Strange: return "Strange";
    }
    return "?";
}

inline std::optional<Relation> relation_from_string(std::string_view text) {
    if (text == "Friend") return Relation::Friend;
    if (text == "Family") return Relation::Family;
    if (text == "Strange") return Relation::Strange;
    return std::nullopt;
}

}  // namespace commitguard
