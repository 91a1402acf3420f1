#pragma once

#include <vector>

#include "pea/table.hpp"

namespace pea {

struct RdpVerdict {
  bool holds = true;
  std::vector<Elem> witness;  // first failing tuple in index order
};

struct RdpReport {
  RdpVerdict rdp0;  // witness (a, b1, b2)
  RdpVerdict rdp;   // witness (a1, a2, b1, b2)
  RdpVerdict rdp1;  // witness (a1, a2, b1, b2)
};

/// a <= b1+b2 implies a = d1+d2 with d1 <= b1, d2 <= b2.
RdpVerdict check_rdp0(const PartialAdditionTable& t);

/// a1+a2 = b1+b2 has a refinement matrix c11..c22.
RdpVerdict check_rdp(const PartialAdditionTable& t);

/// As check_rdp, but the matrix must also satisfy x+y = y+x for all
/// x <= c12, y <= c21.
RdpVerdict check_rdp1(const PartialAdditionTable& t);

/// All three. Throws Inconsistency if rdp1 => rdp => rdp0 is contradicted.
RdpReport check_all_rdp(const PartialAdditionTable& t);

}  // namespace pea
