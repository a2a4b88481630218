#include "actin/engine.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "actin/errors.hpp"
#include "actin/ring.hpp"

namespace actin {

namespace {

enum ModelKind { kAhistoric = 0, kMajorityUnlimited = 1, kMajorityTau = 2, kAlpha = 3 };

std::vector<std::uint8_t> parse_bits(const std::string& text) {
    std::vector<std::uint8_t> out;
    out.reserve(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c != '0' && c != '1') throw SeedParseError("seed character must be 0 or 1", k);
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

}  // namespace

// FilamentState ------------------------------------------------------------------

FilamentState::FilamentState(std::vector<std::uint8_t> chain_a, std::vector<std::uint8_t> chain_b)
    : a(std::move(chain_a)), b(std::move(chain_b)) {
    validate();
}

bool FilamentState::empty_activity() const noexcept {
    return std::none_of(a.begin(), a.end(), [](auto v) { return v != 0; }) &&
           std::none_of(b.begin(), b.end(), [](auto v) { return v != 0; });
}

std::size_t FilamentState::active_cells() const noexcept {
    return static_cast<std::size_t>(std::count(a.begin(), a.end(), 1) + std::count(b.begin(), b.end(), 1));
}

void FilamentState::validate() const {
    if (a.size() != b.size()) throw InputError("chains have different lengths");
    if (a.size() < 3) throw InputError("chain length must be at least 3");
    auto binary = [](const std::vector<std::uint8_t>& c) {
        return std::all_of(c.begin(), c.end(), [](auto v) { return v <= 1; });
    };
    if (!binary(a) || !binary(b)) throw InputError("cell states must be 0 or 1");
}

// Memory models ----------------------------------------------------------------------

void validate(const MemoryModel& model) {
    if (const auto* t = std::get_if<MajorityTau>(&model); t && t->tau < 1) {
        throw InputError("tau must be at least 1");
    }
    if (const auto* a = std::get_if<Alpha>(&model); a && !(a->alpha >= 0.0 && a->alpha <= 1.0)) {
        throw InputError("alpha must lie in [0,1]");
    }
}

MemoryModel parse_memory_model(const std::string& text) {
    if (text == "ahistoric" || text == "none") return Ahistoric{};
    if (text == "majority" || text == "full") return MajorityUnlimited{};
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        const std::string value = text.substr(colon + 1);
        if (kind == "tau") {
            int tau = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), tau);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                throw InputError("memory '" + text + "': tau must be an integer");
            }
            MemoryModel m = MajorityTau{tau};
            validate(m);
            return m;
        }
        if (kind == "alpha") {
            std::size_t used = 0;
            double alpha = 0.0;
            try {
                alpha = std::stod(value, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != value.size()) {
                throw InputError("memory '" + text + "': alpha must be a real number");
            }
            MemoryModel m = Alpha{alpha};
            validate(m);
            return m;
        }
    }
    throw InputError("unknown memory model '" + text + "' (expected ahistoric|majority|tau:K|alpha:X)");
}

std::pair<std::string, std::string> memory_columns(const MemoryModel& model) {
    struct Visitor {
        std::pair<std::string, std::string> operator()(Ahistoric) const { return {"ahistoric", ""}; }
        std::pair<std::string, std::string> operator()(MajorityUnlimited) const { return {"majority", ""}; }
        std::pair<std::string, std::string> operator()(MajorityTau m) const {
            return {"tau", std::to_string(m.tau)};
        }
        std::pair<std::string, std::string> operator()(Alpha m) const {
            std::ostringstream os;
            os << m.alpha;
            return {"alpha", os.str()};
        }
    };
    return std::visit(Visitor{}, model);
}

std::string format_memory_model(const MemoryModel& model) {
    auto [kind, param] = memory_columns(model);
    return param.empty() ? kind : kind + ":" + param;
}

// MemoryState ---------------------------------------------------------------------------

MemoryState::MemoryState(MemoryModel model, const FilamentState& initial)
    : model_(std::move(model)), n_(initial.size()), raw_(initial) {
    actin::validate(model_);
    initial.validate();
    kind_ = static_cast<int>(model_.index());
    switch (kind_) {
        case kMajorityUnlimited:
            ones_.assign(2 * n_, 0);
            break;
        case kMajorityTau:
            tau_ = std::get<MajorityTau>(model_).tau;
            ring_.assign(2 * n_ * static_cast<std::size_t>(tau_), 0);
            break;
        case kAlpha:
            alpha_ = std::get<Alpha>(model_).alpha;
            omega_.assign(2 * n_, 0.0);
            break;
        default:
            break;
    }
    for (std::size_t i = 0; i < n_; ++i) {
        record_cell(Chain::A, i, initial.a[i]);
        record_cell(Chain::B, i, initial.b[i]);
    }
    advance_clock();
}

void MemoryState::record_cell(Chain chain, std::size_t i, std::uint8_t value) {
    const std::size_t s = slot(chain, i);
    raw_.chain(chain)[i] = value;
    switch (kind_) {
        case kMajorityUnlimited:
            ones_[s] += value;
            break;
        case kMajorityTau:
            ring_[s * static_cast<std::size_t>(tau_) + head_] = value;
            break;
        case kAlpha:
            omega_[s] = value + alpha_ * omega_[s];
            break;
        default:
            break;
    }
}

void MemoryState::advance_clock() noexcept {
    ++steps_;
    if (kind_ == kMajorityTau) head_ = (head_ + 1) % static_cast<std::size_t>(tau_);
    if (kind_ == kAlpha) normalizer_ = 1.0 + alpha_ * normalizer_;
}

void MemoryState::update(const FilamentState& next) {
    if (next.size() != n_) throw InputError("state size does not match memory size");
    next.validate();
    for (std::size_t i = 0; i < n_; ++i) {
        record_cell(Chain::A, i, next.a[i]);
        record_cell(Chain::B, i, next.b[i]);
    }
    advance_clock();
}

std::uint8_t MemoryState::trait(Chain chain, std::size_t i) const noexcept {
    const std::uint8_t current = raw_.chain(chain)[i];
    const std::size_t s = slot(chain, i);
    switch (kind_) {
        case kMajorityUnlimited: {
            const std::size_t twice = 2 * static_cast<std::size_t>(ones_[s]);
            return twice > steps_ ? 1 : twice < steps_ ? 0 : current;
        }
        case kMajorityTau: {
            const std::size_t tau = static_cast<std::size_t>(tau_);
            const std::size_t filled = std::min(steps_, tau);
            const std::uint8_t* w = ring_.data() + s * tau;
            std::size_t count = 0;
            for (std::size_t k = 0; k < tau; ++k) count += w[k];
            return 2 * count > filled ? 1 : 2 * count < filled ? 0 : current;
        }
        case kAlpha: {
            const double diff = 2.0 * omega_[s] - normalizer_;
            return diff > kTraitEpsilon ? 1 : diff < -kTraitEpsilon ? 0 : current;
        }
        default:
            return current;
    }
}

FilamentState MemoryState::traits() const {
    if (steps_ == 0) throw InputError("memory has no recorded states");
    FilamentState out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out.a[i] = trait(Chain::A, i);
        out.b[i] = trait(Chain::B, i);
    }
    return out;
}

double MemoryState::omega(Chain chain, std::size_t i) const {
    if (kind_ != kAlpha) throw InputError("omega is only defined for alpha memory");
    return omega_.at(slot(chain, i));
}

std::size_t MemoryState::ones(Chain chain, std::size_t i) const {
    if (kind_ != kMajorityUnlimited) throw InputError("counters are only kept for unlimited majority memory");
    return ones_.at(slot(chain, i));
}

std::size_t MemoryState::zeros(Chain chain, std::size_t i) const { return steps_ - ones(chain, i); }

std::vector<std::uint8_t> MemoryState::window(Chain chain, std::size_t i) const {
    if (kind_ != kMajorityTau) throw InputError("window is only kept for tau majority memory");
    const std::size_t tau = static_cast<std::size_t>(tau_);
    const std::size_t filled = std::min(steps_, tau);
    const std::uint8_t* w = ring_.data() + slot(chain, i) * tau;
    std::vector<std::uint8_t> out;
    out.reserve(filled);
    for (std::size_t k = 0; k < filled; ++k) out.push_back(w[(head_ + tau - filled + k) % tau]);
    return out;
}

// Transition --------------------------------------------------------------------------------

FilamentState step(const FilamentState& state, const FilamentState& traits, const Rule& rule) {
    state.validate();
    traits.validate();
    if (state.size() != traits.size()) throw InputError("state and trait dimensions differ");
    const std::size_t n = state.size();
    const auto& sa = traits.a;
    const auto& sb = traits.b;
    FilamentState next(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t l = (i + n - 1) % n;
        const std::size_t r = (i + 1) % n;
        next.a[i] = rule.apply(sa[i], sa[l] + sa[r] + sb[i] + sb[l]);
        next.b[i] = rule.apply(sb[i], sb[l] + sb[r] + sa[i] + sa[r]);
    }
    return next;
}

// Initial conditions ------------------------------------------------------------------------------

FilamentState init_state(std::size_t n, const InitialCondition& ic) {
    if (n < 3) throw InputError("lattice size must be at least 3");
    FilamentState state(n);
    if (const auto* rh = std::get_if<RandomHalf>(&ic)) {
        std::mt19937_64 gen(rh->rng_seed);
        for (auto& c : state.a) c = static_cast<std::uint8_t>(gen() >> 63);
        for (auto& c : state.b) c = static_cast<std::uint8_t>(gen() >> 63);
    } else if (const auto* ss = std::get_if<SingleSite>(&ic)) {
        if (ss->position >= n) throw InputError("single-site position outside the lattice");
        state.chain(ss->chain)[ss->position] = 1;
    } else {
        const auto& es = std::get<ExplicitSeed>(ic);
        const auto bits_a = parse_bits(es.seed_a);
        const auto bits_b = parse_bits(es.seed_b);
        if (bits_a.size() != bits_b.size()) throw InputError("seed strings have different lengths");
        if (bits_a.size() > n) throw InputError("seed longer than the lattice");
        const std::size_t offset = (n - bits_a.size()) / 2;
        std::copy(bits_a.begin(), bits_a.end(), state.a.begin() + static_cast<long>(offset));
        std::copy(bits_b.begin(), bits_b.end(), state.b.begin() + static_cast<long>(offset));
    }
    return state;
}

// SpaceTimePattern ---------------------------------------------------------------------------------

SpaceTimePattern::SpaceTimePattern(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * cols_) throw InputError("pattern data does not match its dimensions");
}

void SpaceTimePattern::append_row(std::span<const std::uint8_t> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InputError("row width does not match pattern width");
    cells_.insert(cells_.end(), values.begin(), values.end());
    ++rows_;
}

// Simulator -----------------------------------------------------------------------------------------

Simulator::Simulator(const Rule& rule, MemoryModel model, FilamentState initial, bool windowed)
    : rule_(rule), mem_(std::move(model), initial) {
    const std::size_t n = initial.size();
    trait_a_.assign(n, 0);
    trait_b_.assign(n, 0);
    windowed_ = windowed && rule_.quiescent();
    if (!windowed_) return;

    std::vector<std::uint8_t> either(n);
    for (std::size_t i = 0; i < n; ++i) either[i] = initial.a[i] | initial.b[i];
    const Arc arc = minimal_arc(either);
    any_active_ = arc.width > 0;
    lo_ = static_cast<long>(arc.start);
    hi_ = lo_ + static_cast<long>(arc.width) - 1;
    if (any_active_ && arc.width + 4 > n) windowed_ = false;
}

std::size_t Simulator::wrap(long i) const noexcept {
    const long n = static_cast<long>(mem_.size());
    return static_cast<std::size_t>(((i % n) + n) % n);
}

void Simulator::update_range(long lo, long hi) {
    for (long i = lo - 1; i <= hi + 1; ++i) {
        const std::size_t w = wrap(i);
        trait_a_[w] = mem_.trait(Chain::A, w);
        trait_b_[w] = mem_.trait(Chain::B, w);
    }
    const auto& sa = trait_a_;
    const auto& sb = trait_b_;
    for (long i = lo; i <= hi; ++i) {
        const std::size_t w = wrap(i);
        const std::size_t l = wrap(i - 1);
        const std::size_t r = wrap(i + 1);
        mem_.record_cell(Chain::A, w, rule_.apply(sa[w], sa[l] + sa[r] + sb[w] + sb[l]));
        mem_.record_cell(Chain::B, w, rule_.apply(sb[w], sb[l] + sb[r] + sa[w] + sa[r]));
    }
    mem_.advance_clock();
}

std::optional<std::pair<long, long>> Simulator::active_window() const noexcept {
    if (!windowed_) return std::nullopt;
    if (!any_active_) return std::pair<long, long>{0, -1};
    return std::pair<long, long>{lo_, hi_};
}

void Simulator::advance() {
    const long n = static_cast<long>(mem_.size());
    if (!windowed_) {
        update_range(0, n - 1);
        return;
    }
    if (!any_active_) {
        mem_.advance_clock();
        return;
    }
    if (hi_ - lo_ + 5 > n) {
        windowed_ = false;
        update_range(0, n - 1);
        return;
    }
    const long lo = lo_ - 1;
    const long hi = hi_ + 1;
    update_range(lo, hi);
    const auto& cur = mem_.current();
    if (cur.a[wrap(lo)] | cur.b[wrap(lo)]) lo_ = lo;
    if (cur.a[wrap(hi)] | cur.b[wrap(hi)]) hi_ = hi;
}

// Runs ------------------------------------------------------------------------------------------------

PatternPair run(const Rule& rule, const MemoryModel& model, FilamentState initial, std::size_t rows) {
    if (rows < 1) throw InputError("a run needs at least one row");
    initial.validate();
    const std::size_t n = initial.size();
    PatternPair out{SpaceTimePattern(0, n), SpaceTimePattern(0, n)};
    Simulator sim(rule, model, std::move(initial));
    out.a.append_row(sim.state().a);
    out.b.append_row(sim.state().b);
    for (std::size_t t = 1; t < rows; ++t) {
        sim.advance();
        out.a.append_row(sim.state().a);
        out.b.append_row(sim.state().b);
    }
    return out;
}

PatternPair run(const Rule& rule, const MemoryModel& model, const InitialCondition& ic, std::size_t n,
                std::size_t rows) {
    return run(rule, model, init_state(n, ic), rows);
}

}  // namespace actin
