#pragma once

// Reference implementations used to check the library. They favour the most
// literal reading of each definition over speed and share no code with src/.

#include <algorithm>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "actin/engine.hpp"

namespace oracle {

using Bits = std::vector<std::uint8_t>;

/// Output of subrule `dec` for neighbourhood sum k, read off its 5-digit binary string.
inline int subrule_bit(int dec, int k) { return std::bitset<5>(static_cast<unsigned long>(dec)).to_string()[k] - '0'; }

struct Cells {
    Bits a, b;
};

/// One memoryless step written out cell by cell from the neighbourhood lists.
inline Cells step(const Cells& traits, int phi, int psi) {
    const int n = static_cast<int>(traits.a.size());
    auto at = [n](const Bits& v, int i) { return static_cast<int>(v[((i % n) + n) % n]); };
    Cells next{Bits(n), Bits(n)};
    for (int i = 0; i < n; ++i) {
        const int ua = at(traits.a, i - 1) + at(traits.a, i + 1) + at(traits.b, i) + at(traits.b, i - 1);
        const int ub = at(traits.b, i - 1) + at(traits.b, i + 1) + at(traits.a, i) + at(traits.a, i + 1);
        next.a[i] = static_cast<std::uint8_t>(subrule_bit(at(traits.a, i) ? psi : phi, ua));
        next.b[i] = static_cast<std::uint8_t>(subrule_bit(at(traits.b, i) ? psi : phi, ub));
    }
    return next;
}

/// Mode of a history with ties going to its last element.
inline std::uint8_t mode_or_last(const Bits& h) {
    const auto ones = std::count(h.begin(), h.end(), 1);
    const auto zeros = static_cast<long>(h.size()) - ones;
    if (ones > zeros) return 1;
    if (zeros > ones) return 0;
    return h.back();
}

/// Discounted sum of a history, oldest first: sum_j alpha^j * h[T-1-j].
inline double discounted(const Bits& h, double alpha) {
    double w = 0.0;
    const std::size_t T = h.size();
    for (std::size_t j = 0; j < T; ++j) w += std::pow(alpha, static_cast<double>(j)) * h[T - 1 - j];
    return w;
}

inline double normalizer(std::size_t T, double alpha) {
    double s = 0.0;
    for (std::size_t j = 0; j < T; ++j) s += std::pow(alpha, static_cast<double>(j));
    return s;
}

/// Trait of one cell from its full raw history.
inline std::uint8_t trait(const actin::MemoryModel& model, const Bits& h) {
    if (std::holds_alternative<actin::Ahistoric>(model)) return h.back();
    if (std::holds_alternative<actin::MajorityUnlimited>(model)) return mode_or_last(h);
    if (const auto* t = std::get_if<actin::MajorityTau>(&model)) {
        const std::size_t keep = std::min<std::size_t>(h.size(), static_cast<std::size_t>(t->tau));
        return mode_or_last(Bits(h.end() - static_cast<long>(keep), h.end()));
    }
    const double alpha = std::get<actin::Alpha>(model).alpha;
    const double diff = 2.0 * discounted(h, alpha) - normalizer(h.size(), alpha);
    if (diff > 1e-9) return 1;
    if (diff < -1e-9) return 0;
    return h.back();
}

/// Full run keeping every cell's complete history; rows[t] is the raw state after t steps.
inline std::vector<Cells> run(int phi, int psi, const actin::MemoryModel& model, const Cells& initial,
                              std::size_t rows) {
    const std::size_t n = initial.a.size();
    std::vector<Cells> out{initial};
    std::vector<Bits> ha(n), hb(n);
    for (std::size_t i = 0; i < n; ++i) {
        ha[i].push_back(initial.a[i]);
        hb[i].push_back(initial.b[i]);
    }
    for (std::size_t t = 1; t < rows; ++t) {
        Cells traits{Bits(n), Bits(n)};
        for (std::size_t i = 0; i < n; ++i) {
            traits.a[i] = trait(model, ha[i]);
            traits.b[i] = trait(model, hb[i]);
        }
        Cells next = step(traits, phi, psi);
        for (std::size_t i = 0; i < n; ++i) {
            ha[i].push_back(next.a[i]);
            hb[i].push_back(next.b[i]);
        }
        out.push_back(std::move(next));
    }
    return out;
}

inline Cells random_cells(std::size_t n, std::mt19937& gen, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    Cells c{Bits(n), Bits(n)};
    for (auto& v : c.a) v = bit(gen);
    for (auto& v : c.b) v = bit(gen);
    return c;
}

/// 3x3 block counts of a T x n pattern, periodic in space only; keys are the
/// nine cells as a string, top row first.
inline std::map<std::string, std::uint64_t> census(const std::vector<Bits>& rows) {
    std::map<std::string, std::uint64_t> out;
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t t = 0; t + 2 < rows.size(); ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            std::string key;
            for (std::size_t dt = 0; dt < 3; ++dt)
                for (std::size_t di = 0; di < 3; ++di) key += static_cast<char>('0' + rows[t + dt][(i + di) % n]);
            ++out[key];
        }
    }
    return out;
}

/// Smallest width w such that some rotation places every 1 inside [s, s + w).
inline std::size_t arc_width(const Bits& v) {
    const std::size_t n = v.size();
    if (std::none_of(v.begin(), v.end(), [](auto x) { return x != 0; })) return 0;
    for (std::size_t w = 1; w <= n; ++w) {
        for (std::size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                const std::size_t offset = (i + n - s) % n;
                if (v[i] && offset >= w) ok = false;
            }
            if (ok) return w;
        }
    }
    return n;
}

}  // namespace oracle
