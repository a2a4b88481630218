#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace actin {

/// Five-entry lookup table indexed by the neighbourhood sum 0..4.
///
/// The decimal value weights entry k by 2^(4-k), so the most significant bit
/// is the output for sum 0. Decimal 10 = 01010 is the parity table.
class Subrule {
public:
    constexpr Subrule() = default;

    static Subrule from_decimal(int value);
    static Subrule from_bits(const std::array<std::uint8_t, 5>& bits);

    constexpr int decimal() const noexcept { return value_; }

    /// Output for a neighbourhood sum in [0,4].
    constexpr std::uint8_t operator()(int sum) const noexcept {
        return static_cast<std::uint8_t>((value_ >> (4 - sum)) & 1);
    }

    std::array<std::uint8_t, 5> bits() const noexcept;
    std::string bit_string() const;

    friend constexpr bool operator==(Subrule, Subrule) = default;

private:
    explicit constexpr Subrule(std::uint8_t v) : value_(v) {}
    std::uint8_t value_ = 0;
};

/// Semi-totalistic actin rule R(phi, psi): `phi` drives resting cells, `psi` excited ones.
struct Rule {
    Subrule phi;
    Subrule psi;

    static Rule from_decimal(int phi_dec, int psi_dec);

    std::pair<int, int> to_decimal() const noexcept { return {phi.decimal(), psi.decimal()}; }

    /// Position of this rule in `enumerate_rules()`.
    int index() const noexcept { return 32 * phi.decimal() + psi.decimal(); }

    /// Next state of a cell given its (trait) state and neighbourhood sum.
    constexpr std::uint8_t apply(std::uint8_t self, int sum) const noexcept {
        return self ? psi(sum) : phi(sum);
    }

    /// The all-zero lattice is a fixed point.
    constexpr bool quiescent() const noexcept { return phi(0) == 0; }

    /// "R(a,b)"
    std::string name() const;

    friend constexpr bool operator==(const Rule&, const Rule&) = default;
};

inline constexpr int kRuleCount = 1024;

Rule rule_from_decimal(int phi_dec, int psi_dec);
std::pair<int, int> rule_to_decimal(const Rule& rule) noexcept;

/// All 1024 rules ordered lexicographically by (phi, psi).
std::vector<Rule> enumerate_rules();

/// Parses "R(a,b)" or "a,b".
Rule parse_rule(const std::string& text);

/// Parses a ';'-separated list such as "R(7,4);R(5,6)" or "7,4;5,6".
std::vector<Rule> parse_rule_list(const std::string& text);

/// Rules known to support travelling localizations: R(7,4), R(5,6), R(6,4), R(12,24).
std::vector<Rule> travelling_rules();
/// Rules known to support stationary localizations: R(6,20), R(4,5), R(4,4), R(6,16), R(6,18).
std::vector<Rule> stationary_rules();
/// Stationary and travelling sets followed by R(14,24).
std::vector<Rule> localization_rules();
/// Looks up "travelling", "stationary" or "localization".
std::vector<Rule> named_rule_set(const std::string& name);

}  // namespace actin
