#pragma once

// JSON wire formats: partitions as arrays of integers, permutations as
// one-line image arrays, integers and rationals as decimal strings
// ({"num": "...", "den": "..."} for rationals) so arbitrary precision
// survives any JSON reader.

#include <json.hpp>

#include "permfact/partition.hpp"
#include "permfact/permutation.hpp"

namespace permfact {

inline nlohmann::json to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

inline nlohmann::json to_json(const Composition& c) {
    return nlohmann::json(c.parts());
}

inline nlohmann::json to_json(const Permutation& p) {
    return nlohmann::json(p.images());
}

inline nlohmann::json to_json(const Int& v) { return v.get_str(); }

inline nlohmann::json to_json(const Rat& v) {
    return {{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

inline Partition partition_from_json(const nlohmann::json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline Composition composition_from_json(const nlohmann::json& j) {
    return Composition(j.get<std::vector<int>>());
}

}  // namespace permfact
