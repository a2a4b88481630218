#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace actin {

/// Contiguous run of cells on a ring, starting at `start` and wrapping modulo n.
struct Arc {
    std::size_t start = 0;
    std::size_t width = 0;
};

/// Smallest circular arc covering every nonzero entry; width 0 when there is none.
///
/// The arc is the complement of the longest circular run of zeros. When several
/// zero runs tie for longest, the first one found scanning forward from the
/// lowest occupied index is used.
Arc minimal_arc(std::span<const std::uint8_t> occupied);

/// Signed shift d in (-n/2, n/2] congruent to `delta` modulo n.
long centred_shift(long delta, std::size_t n);

}  // namespace actin
