#pragma once

#include <cstddef>

#include "pea/table.hpp"

namespace pea {

/// {0,a,b,1} with a+a = b+b = 1.
PartialAdditionTable diamond();

/// {0,a,a',1} with a+a' = a'+a = 1 (the four-element Boolean algebra).
PartialAdditionTable boolean4();

/// {0, 1/n, ..., 1} with i/n + j/n defined iff i+j <= n. Requires n >= 1.
PartialAdditionTable chain(std::size_t n);

}  // namespace pea
