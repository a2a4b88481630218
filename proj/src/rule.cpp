#include "actin/rule.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "actin/errors.hpp"

namespace actin {

Subrule Subrule::from_decimal(int value) {
    if (value < 0 || value > 31) {
        throw InputError("subrule value " + std::to_string(value) + " outside [0,31]");
    }
    return Subrule(static_cast<std::uint8_t>(value));
}

Subrule Subrule::from_bits(const std::array<std::uint8_t, 5>& bits) {
    int v = 0;
    for (int k = 0; k < 5; ++k) {
        if (bits[k] > 1) throw InputError("subrule bit must be 0 or 1");
        v |= bits[k] << (4 - k);
    }
    return Subrule(static_cast<std::uint8_t>(v));
}

std::array<std::uint8_t, 5> Subrule::bits() const noexcept {
    std::array<std::uint8_t, 5> out{};
    for (int k = 0; k < 5; ++k) out[k] = (*this)(k);
    return out;
}

std::string Subrule::bit_string() const {
    std::string s(5, '0');
    for (int k = 0; k < 5; ++k) s[k] = static_cast<char>('0' + (*this)(k));
    return s;
}

Rule Rule::from_decimal(int phi_dec, int psi_dec) {
    return Rule{Subrule::from_decimal(phi_dec), Subrule::from_decimal(psi_dec)};
}

std::string Rule::name() const {
    return "R(" + std::to_string(phi.decimal()) + "," + std::to_string(psi.decimal()) + ")";
}

Rule rule_from_decimal(int phi_dec, int psi_dec) { return Rule::from_decimal(phi_dec, psi_dec); }

std::pair<int, int> rule_to_decimal(const Rule& rule) noexcept { return rule.to_decimal(); }

std::vector<Rule> enumerate_rules() {
    std::vector<Rule> rules;
    rules.reserve(kRuleCount);
    for (int a = 0; a < 32; ++a)
        for (int b = 0; b < 32; ++b) rules.push_back(Rule::from_decimal(a, b));
    return rules;
}

Rule parse_rule(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() > 3 && (s[0] == 'R' || s[0] == 'r') && s[1] == '(' && s.back() == ')') {
        s = s.substr(2, s.size() - 3);
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("rule '" + text + "' is not of the form R(a,b)");
    auto parse_int = [&](std::string_view part) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw InputError("rule '" + text + "' has a non-integer component");
        }
        return v;
    };
    std::string_view view(s);
    return Rule::from_decimal(parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1)));
}

std::vector<Rule> parse_rule_list(const std::string& text) {
    std::vector<Rule> rules;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = std::min(text.find(';', begin), text.size());
        const std::string item = text.substr(begin, end - begin);
        if (item.find_first_not_of(" \t") != std::string::npos) rules.push_back(parse_rule(item));
        begin = end + 1;
    }
    if (rules.empty()) throw InputError("rule list is empty");
    return rules;
}

std::vector<Rule> travelling_rules() {
    return {Rule::from_decimal(7, 4), Rule::from_decimal(5, 6), Rule::from_decimal(6, 4), Rule::from_decimal(12, 24)};
}

std::vector<Rule> stationary_rules() {
    return {Rule::from_decimal(6, 20), Rule::from_decimal(4, 5), Rule::from_decimal(4, 4), Rule::from_decimal(6, 16),
            Rule::from_decimal(6, 18)};
}

std::vector<Rule> localization_rules() {
    std::vector<Rule> rules = stationary_rules();
    for (const Rule& r : travelling_rules()) rules.push_back(r);
    rules.push_back(Rule::from_decimal(14, 24));
    return rules;
}

std::vector<Rule> named_rule_set(const std::string& name) {
    if (name == "travelling") return travelling_rules();
    if (name == "stationary") return stationary_rules();
    if (name == "localization") return localization_rules();
    throw InputError("unknown rule set '" + name + "' (expected travelling, stationary or localization)");
}

}  // namespace actin
