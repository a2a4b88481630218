#include "actin/ring.hpp"

namespace actin {

Arc minimal_arc(std::span<const std::uint8_t> occupied) {
    const std::size_t n = occupied.size();
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (occupied[i]) {
            first = i;
            break;
        }
    }
    if (first == n) return {0, 0};

    // Walk one full turn from the first occupied cell; each zero run ends at an occupied cell.
    std::size_t best_gap = 0;
    std::size_t best_end = first;  // occupied cell right after the best gap
    std::size_t gap = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t i = (first + k) % n;
        if (occupied[i]) {
            if (gap > best_gap) {
                best_gap = gap;
                best_end = i;
            }
            gap = 0;
        } else {
            ++gap;
        }
    }
    return {best_end, n - best_gap};
}

long centred_shift(long delta, std::size_t n) {
    const long m = static_cast<long>(n);
    long d = ((delta % m) + m) % m;
    if (2 * d > m) d -= m;
    return d;
}

}  // namespace actin
