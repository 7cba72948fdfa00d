#pragma once

#include <string>

#include <json.hpp>

#include "spcoh/coxeter.hpp"
#include "spcoh/harish_chandra.hpp"
#include "spcoh/oracle.hpp"
#include "spcoh/partitions.hpp"
#include "spcoh/symbols.hpp"

namespace spcoh {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Bipartition& b);
/// {"top": [...], "bottom": [...]}
Json to_json(const Symbol& s);
/// Symbols in order, each repeated by its multiplicity.
Json to_json(const RepMultiset& reps);
Json to_json(const FrobEigenvalue& e);
Json to_json(const OracleCounts& c);

/// Inverse of to_json(Symbol); throws ParseError on malformed input.
Symbol symbol_from_json(const Json& j);

/// "(3,1)" or "()".
Partition parse_partition(const std::string& text);

/// Symbols separated by spaces, e.g. "2; 0,1;2".
std::string join_symbols(const RepMultiset& reps);

}  // namespace spcoh
