#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "intres/approx.hpp"
#include "intres/module.hpp"

namespace intres {

using Json = nlohmann::ordered_json;

// Poset document: {"elements": [labels], "relations": [[a,b], ...]}.
// Input relations may be any generating set; serialization emits the Hasse
// edges only.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& doc);

// Module document: {"poset": <doc or file ref>, "p": prime, "dims":
// {label: int}, "maps": {"a->b": [[entries]]}}.  Map keys must be exactly
// Hasse edges; omitted dims are zero, omitted maps are zero matrices.  The
// loader validates commutativity.
Json module_to_json(const PersModule& m);
PersModule module_from_json(const Json& doc, const std::string& base_dir = ".",
                            std::optional<Scalar> default_field = std::nullopt);

std::string interval_key(const Poset& host, const Interval& I);
Json multiset_to_json(const Poset& host, const IntervalMultiset& ms);
Json morphism_blocks_to_json(const Poset& host, const Morphism& f);
Json resolution_to_json(const Resolution& res);
Json cover_to_json(const Cover& cover);

Json load_json_file(const std::string& path);
std::string dump_json(const Json& doc); // the byte-stable serialization

} // namespace intres
