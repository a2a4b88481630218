#include "actin/seed_io.hpp"

#include <cctype>

#include "actin/errors.hpp"

namespace actin {

ExplicitSeed parse_seed(const std::string& text) {
    std::size_t pos = 0;
    const std::size_t end = text.size();
    auto skip_space = [&] {
        while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_bits = [&](std::string& out) {
        skip_space();
        const std::size_t begin = pos;
        while (pos < end && (text[pos] == '0' || text[pos] == '1')) out += text[pos++];
        if (out.empty()) throw SeedParseError("expected a binary string", begin);
        skip_space();
    };

    skip_space();
    const bool bracketed = pos < end && text[pos] == '[';
    if (bracketed) ++pos;

    ExplicitSeed seed;
    read_bits(seed.seed_a);
    if (pos >= end || text[pos] != ',') {
        throw SeedParseError(pos < end ? "unexpected character '" + std::string(1, text[pos]) + "'" : "missing comma",
                             pos);
    }
    ++pos;
    const std::size_t second = pos;
    read_bits(seed.seed_b);
    if (bracketed) {
        if (pos >= end || text[pos] != ']') throw SeedParseError("expected ']'", pos);
        ++pos;
        skip_space();
    }
    if (pos != end) throw SeedParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    if (seed.seed_a.size() != seed.seed_b.size()) {
        throw SeedParseError("seed strings have different lengths (" + std::to_string(seed.seed_a.size()) + " and " +
                                 std::to_string(seed.seed_b.size()) + ")",
                             second);
    }
    return seed;
}

std::string format_seed(const ExplicitSeed& seed) { return "[" + seed.seed_a + "," + seed.seed_b + "]"; }

}  // namespace actin
