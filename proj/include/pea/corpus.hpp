#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pea/core_algebra.hpp"
#include "pea/table.hpp"

namespace pea {

/// Canonical labeling: the lexicographically smallest (order relation,
/// addition table) encoding over all relabelings fixing 0 (and 1).
std::vector<std::int16_t> canonical_form(const PartialAdditionTable& t);

/// The table relabeled into its canonical form, elements named e0, e1, ...
/// with zero first and the unit (if any) last.
PartialAdditionTable canonical_table(const PartialAdditionTable& t);

/// Every PEA with exactly `size` elements (size >= 2), one per isomorphism
/// class, sorted by canonical form.
std::vector<PartialAdditionTable> generate_peas(std::size_t size);

/// Every GPEA with exactly `size` elements (size >= 1), one per isomorphism
/// class.
std::vector<PartialAdditionTable> generate_gpeas(std::size_t size);

/// All sizes from the smallest up to `max_size`.
std::vector<PartialAdditionTable> pea_corpus(std::size_t max_size);
std::vector<PartialAdditionTable> gpea_corpus(std::size_t max_size);

}  // namespace pea
