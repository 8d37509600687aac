#pragma once
/*
 * Randomness sources.
 *
 * WordSource is a SplitMix64 generator: 64 bits of state advanced by an odd
 * gamma (a Weyl sequence of period 2^64), finalized with two xor-shift-multiply
 * rounds. Bounded integers are derived with the multiply-shift rejection method
 * (Lemire), which takes no modulo on the common accept path, and unit doubles
 * from the top 53 bits of a word.
 *
 * Every sampler in this library consumes randomness through the random_source
 * concept, so instrumented and scripted sources can stand in for the real
 * generator in tests.
 *
 * A source is single-owner mutable state: safe to move between threads, not
 * safe to share. Samplers that need independent streams take independently
 * seeded sources.
 */

#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace samplekit {

template <class S>
concept random_source = requires(S s, std::uint64_t b) {
    { s.next_word() } -> std::same_as<std::uint64_t>;
    { s.next_below(b) } -> std::same_as<std::uint64_t>;
    { s.next_unit() } -> std::same_as<double>;
};

namespace detail {

// Unbiased integer in [0, bound) by multiply-shift rejection, generic over the
// word width so tests can exhaust the full word space at 8 bits. The accept
// path (low >= bound) performs no modulo; threshold_evals, when non-null,
// counts how often the threshold had to be computed.
template <class Word, class Wide, class NextWord>
Word bounded_below(Word bound, NextWord&& next_word, unsigned* threshold_evals = nullptr) {
    constexpr int width = std::numeric_limits<Word>::digits;
    Wide product = Wide(next_word()) * Wide(bound);
    Word low = Word(product);
    if (low < bound) {
        if (threshold_evals != nullptr) ++*threshold_evals;
        const Word threshold = Word(Word(0) - bound) % bound; // 2^width mod bound
        while (low < threshold) {
            product = Wide(next_word()) * Wide(bound);
            low = Word(product);
        }
    }
    return Word(product >> width);
}

inline void check_bound(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    if (bound > (std::uint64_t{1} << 63))
        throw std::invalid_argument("next_below: bound must be <= 2^63");
}

// Uniform double in (0,1): top 53 bits over 2^53, redrawing the (probability
// 2^-53) exact zero so callers may take logarithms.
template <class NextWord>
double unit_from_words(NextWord&& next_word) {
    for (;;) {
        const double u = double(next_word() >> 11) * 0x1.0p-53;
        if (u != 0.0) return u;
    }
}

} // namespace detail

class WordSource {
public:
    // Reference SplitMix64 increment; any odd gamma yields a full-period stream.
    static constexpr std::uint64_t default_gamma = 0x9E3779B97F4A7C15ull;

    explicit WordSource(std::uint64_t seed, std::uint64_t gamma = default_gamma)
        : state_(seed), gamma_(gamma) {
        if ((gamma & 1u) == 0) throw std::invalid_argument("WordSource: gamma must be odd");
    }

    std::uint64_t next_word() {
        std::uint64_t z = (state_ += gamma_);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) {
        detail::check_bound(bound);
        return detail::bounded_below<std::uint64_t, unsigned __int128>(
            bound, [this] { return next_word(); });
    }

    double next_unit() {
        return detail::unit_from_words([this] { return next_word(); });
    }

    std::uint64_t state() const noexcept { return state_; }
    std::uint64_t gamma() const noexcept { return gamma_; }

    // Folds caller-provided bits into the state. Used by the benchmark loop to
    // make the next batch depend on the blackhole value.
    void perturb(std::uint64_t bits) noexcept { state_ ^= bits; }

private:
    std::uint64_t state_;
    std::uint64_t gamma_;
};

static_assert(random_source<WordSource>);

/// Wraps a source and counts delegated calls; an inner rejection redraw inside
/// next_below is one bounded draw, not extra word draws.
template <random_source S>
class CountingSource {
public:
    explicit CountingSource(S& inner) : inner_(&inner) {}

    std::uint64_t next_word() {
        ++word_draws_;
        return inner_->next_word();
    }
    std::uint64_t next_below(std::uint64_t bound) {
        ++bounded_draws_;
        return inner_->next_below(bound);
    }
    double next_unit() {
        ++unit_draws_;
        return inner_->next_unit();
    }

    std::uint64_t word_draws() const noexcept { return word_draws_; }
    std::uint64_t bounded_draws() const noexcept { return bounded_draws_; }
    std::uint64_t unit_draws() const noexcept { return unit_draws_; }

    void reset() noexcept { word_draws_ = bounded_draws_ = unit_draws_ = 0; }

private:
    S* inner_;
    std::uint64_t word_draws_ = 0;
    std::uint64_t bounded_draws_ = 0;
    std::uint64_t unit_draws_ = 0;
};

/// Type-erased, non-owning view of a source, for plumbing paths (CLI, registry,
/// verification) where a template parameter would be awkward. Not meant for
/// hot benchmark loops.
class SourceRef {
public:
    template <random_source S>
        requires(!std::same_as<std::remove_cvref_t<S>, SourceRef>)
    SourceRef(S& s) // implicit: samplers taking SourceRef accept any source
        : ctx_(&s),
          word_([](void* c) { return static_cast<S*>(c)->next_word(); }),
          below_([](void* c, std::uint64_t b) { return static_cast<S*>(c)->next_below(b); }),
          unit_([](void* c) { return static_cast<S*>(c)->next_unit(); }) {}

    std::uint64_t next_word() { return word_(ctx_); }
    std::uint64_t next_below(std::uint64_t bound) { return below_(ctx_, bound); }
    double next_unit() { return unit_(ctx_); }

private:
    void* ctx_;
    std::uint64_t (*word_)(void*);
    std::uint64_t (*below_)(void*, std::uint64_t);
    double (*unit_)(void*);
};

static_assert(random_source<SourceRef>);

} // namespace samplekit
