#pragma once

#include <string>

#include "json.hpp"

#include "braidmetric/braid.hpp"
#include "braidmetric/certify.hpp"
#include "braidmetric/derivation.hpp"
#include "braidmetric/metric.hpp"
#include "braidmetric/names.hpp"

namespace braidmetric {

/// Insertion-ordered JSON so emitted documents keep their documented key
/// order and stay byte-deterministic.
using Json = nlohmann::ordered_json;

// Words serialize as {"n": int, "letters": [signed ints]}.
Json to_json(const BraidWord& w);
BraidWord word_from_json(const Json& j);

// Name entries as {"p", "q", "a", "sign"}; sequences as plain arrays.
Json to_json(const NameEntry& e);
NameEntry name_entry_from_json(const Json& j);
Json to_json(const NameSequence& s);

// Moves as {"kind", "pos"} plus {"generator", "order": "pn"|"np"} for free
// inserts; derivations as {"n", "start", "moves"}.
Json to_json(const Move& m);
Move move_from_json(const Json& j);
Json to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

Json to_json(const LowerBoundReport& r);
Json to_json(const DistanceResult& r);
Json to_json(const Certificate& c);

/// File helpers; failures (missing file, bad JSON, bad schema) are DataError.
Json parse_json_text(const std::string& text, const std::string& what);
Derivation load_derivation_file(const std::string& path);
void save_derivation_file(const std::string& path, const Derivation& d);

}  // namespace braidmetric
