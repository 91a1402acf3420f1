#include "pea/builtins.hpp"

#include "pea/errors.hpp"
#include "pea/numeric.hpp"

namespace pea {

PartialAdditionTable diamond() {
  TableBuilder b(4);
  b.set(1, 1, 3).set(2, 2, 3);
  return b.build({"0", "a", "b", "1"}, 0, 3);
}

PartialAdditionTable boolean4() {
  TableBuilder b(4);
  b.set(1, 2, 3).set(2, 1, 3);
  return b.build({"0", "a", "a'", "1"}, 0, 3);
}

PartialAdditionTable chain(std::size_t n) {
  if (n == 0) throw InputError("chain length must be at least 1");
  TableBuilder b(n + 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) {
    names.push_back(to_string(Rational(i, n)));
    for (std::size_t j = 0; i + j <= n; ++j) b.set(i, j, i + j);
  }
  return b.build(std::move(names), 0, n);
}

}  // namespace pea
