#include "schurq/enumerate.hpp"

namespace schurq {

long long count_tableaux(const CellSet& cells, int max_value) {
    detail::TableauEnumerator e(std::make_shared<const ShapeIndex>(cells), max_value);
    long long n = 0;
    while (e.advance()) ++n;
    return n;
}

}  // namespace schurq
