#pragma once

#include <string>

#include "pea/table.hpp"

namespace pea {

/// Parses {"elements":[...], "zero":"0", "one":"1", "add":[["a","b","c"],...]}.
/// "one" may be absent (a GPEA). Throws InputError on malformed documents.
PartialAdditionTable parse_document(const std::string& text);
PartialAdditionTable load_document(const std::string& path);

/// Every defined sum as a triple, in element order. Parsing the output and
/// writing it again gives the same bytes.
std::string write_document(const PartialAdditionTable& t);
void save_document(const PartialAdditionTable& t, const std::string& path);

/// FNV-1a of write_document(t), as 16 hex digits.
std::string digest(const PartialAdditionTable& t);

}  // namespace pea
