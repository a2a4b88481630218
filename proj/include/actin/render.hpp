#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "actin/engine.hpp"

namespace actin {

enum class Layout { ChainAOnly, StackedBoth };

struct Rgb {
    std::uint8_t r, g, b;
    friend bool operator==(Rgb, Rgb) = default;
};

namespace palette {
inline constexpr Rgb kResting{255, 255, 255};
inline constexpr Rgb kExcited{0, 0, 0};
inline constexpr Rgb kDamage{255, 0, 0};
inline constexpr Rgb kSeparator{128, 128, 128};
}  // namespace palette

struct RenderSpec {
    Layout layout = Layout::ChainAOnly;
    /// Second run of the same dimensions; cells where it differs are painted red.
    std::optional<PatternPair> damage_overlay;
};

/// Binary P6 pixmap, one pixel per cell, time running downwards.
///
/// The stacked layout is chain A, one gray row, then chain B (height 2T+1).
std::vector<std::uint8_t> render_spacetime(const PatternPair& patterns, const RenderSpec& spec = {});

/// Decoded pixmap, for inspection.
struct Pixmap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<Rgb> pixels;

    Rgb at(std::size_t x, std::size_t y) const { return pixels.at(y * width + x); }
};

Pixmap decode_p6(const std::vector<std::uint8_t>& bytes);

}  // namespace actin
