#include "actin/render.hpp"

#include <cctype>

#include "actin/errors.hpp"

namespace actin {

namespace {

void check_dimensions(const PatternPair& p) {
    if (p.a.rows() != p.b.rows() || p.a.cols() != p.b.cols()) throw InputError("chain patterns differ in dimensions");
}

}  // namespace

std::vector<std::uint8_t> render_spacetime(const PatternPair& patterns, const RenderSpec& spec) {
    check_dimensions(patterns);
    const PatternPair* overlay = spec.damage_overlay ? &*spec.damage_overlay : nullptr;
    if (overlay) {
        check_dimensions(*overlay);
        if (overlay->a.rows() != patterns.a.rows() || overlay->a.cols() != patterns.a.cols()) {
            throw InputError("damage overlay does not match the base pattern");
        }
    }
    const std::size_t rows = patterns.a.rows();
    const std::size_t width = patterns.a.cols();
    const bool stacked = spec.layout == Layout::StackedBoth;
    const std::size_t height = stacked ? 2 * rows + 1 : rows;

    const std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(header.size() + 3 * width * height);
    auto put = [&](Rgb c) {
        out.push_back(c.r);
        out.push_back(c.g);
        out.push_back(c.b);
    };
    auto emit_chain = [&](Chain chain) {
        const SpaceTimePattern& base = patterns.chain(chain);
        for (std::size_t t = 0; t < rows; ++t) {
            for (std::size_t i = 0; i < width; ++i) {
                if (overlay && overlay->chain(chain)(t, i) != base(t, i)) {
                    put(palette::kDamage);
                } else {
                    put(base(t, i) ? palette::kExcited : palette::kResting);
                }
            }
        }
    };
    emit_chain(Chain::A);
    if (stacked) {
        for (std::size_t i = 0; i < width; ++i) put(palette::kSeparator);
        emit_chain(Chain::B);
    }
    return out;
}

Pixmap decode_p6(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    auto token = [&] {
        while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
        std::string t;
        while (pos < bytes.size() && !std::isspace(bytes[pos])) t += static_cast<char>(bytes[pos++]);
        return t;
    };
    if (token() != "P6") throw InputError("not a P6 pixmap");
    Pixmap pm;
    try {
        pm.width = std::stoul(token());
        pm.height = std::stoul(token());
        if (std::stoul(token()) != 255) throw InputError("unsupported P6 maximum value");
    } catch (const std::logic_error&) {
        throw InputError("malformed P6 header");
    }
    ++pos;  // single whitespace after maxval
    if (bytes.size() - pos != 3 * pm.width * pm.height) throw InputError("P6 pixel data has the wrong size");
    pm.pixels.reserve(pm.width * pm.height);
    for (; pos + 2 < bytes.size(); pos += 3) pm.pixels.push_back({bytes[pos], bytes[pos + 1], bytes[pos + 2]});
    return pm;
}

}  // namespace actin
