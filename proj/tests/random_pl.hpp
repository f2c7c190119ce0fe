#pragma once

// Seeded generators for property tests: PL lifts with breakpoints and values
// drawn from Farey fractions of denominator <= 32, and random configurations.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rotnum/monotone.hpp"
#include "rotnum/pl_homeo.hpp"

namespace testgen {

using rotnum::PLLift;
using rotnum::Rational;

class RandomPL {
public:
    explicit RandomPL(std::uint64_t seed, int max_denominator = 32) : rng_(seed) {
        for (int q = 1; q <= max_denominator; ++q)
            for (int p = 0; p < q; ++p)
                if (std::gcd(p, q) == 1) farey_.emplace_back(p, q);
        std::sort(farey_.begin(), farey_.end());
    }

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational fraction() { return farey_[static_cast<std::size_t>(uniform(0, static_cast<int>(farey_.size()) - 1))]; }

    std::vector<Rational> distinct_sorted(int m) {
        std::vector<std::size_t> idx(farey_.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng_);
        idx.resize(static_cast<std::size_t>(m));
        std::sort(idx.begin(), idx.end());
        std::vector<Rational> out;
        for (auto i : idx) out.push_back(farey_[i]);
        return out;
    }

    /// 1..max_breaks breakpoints; values are a rotated sorted sample plus an
    /// integer shift in [-1, 1].
    PLLift lift(int max_breaks = 4) {
        const int m = uniform(1, max_breaks);
        auto xs = distinct_sorted(m);
        auto us = distinct_sorted(m);
        const int r = uniform(0, m - 1);
        const int shift = uniform(-1, 1);
        std::vector<PLLift::Node> nodes;
        for (int j = 0; j < m; ++j) {
            int k = (j + r) % m;
            Rational y = us[static_cast<std::size_t>(k)] + Rational(j + r >= m ? 1 : 0) + Rational(shift);
            nodes.push_back({xs[static_cast<std::size_t>(j)], y});
        }
        return PLLift(std::move(nodes));
    }

    /// Pattern with letter l occurring counts[l] times, uniformly shuffled.
    rotnum::ZPeriodicConfig config(const std::vector<int>& counts) {
        std::vector<int> pattern;
        for (std::size_t l = 0; l < counts.size(); ++l)
            pattern.insert(pattern.end(), static_cast<std::size_t>(counts[l]), static_cast<int>(l));
        std::shuffle(pattern.begin(), pattern.end(), rng_);
        return rotnum::ZPeriodicConfig(std::move(pattern));
    }

    rotnum::Word positive_word(int arity, int max_len) {
        std::vector<int> letters(static_cast<std::size_t>(uniform(1, max_len)));
        for (auto& l : letters) l = uniform(0, arity - 1);
        return rotnum::Word::positive(std::move(letters), arity);
    }

private:
    std::mt19937_64 rng_;
    std::vector<Rational> farey_;
};

/// PL homeomorphism with X (the configuration points of `letter`) as a
/// periodic orbit advancing `advance` places, plus extra random interior
/// nodes. Always dominated by the maximal monotone map of the same data.
inline PLLift dominated_lift(const rotnum::ZPeriodicConfig& config, int letter, std::int64_t advance,
                             RandomPL& gen) {
    auto pos = config.positions(letter);
    const auto q = static_cast<std::int64_t>(pos.size());
    const auto n = static_cast<std::int64_t>(config.size());
    auto point = [&](std::int64_t i) {
        std::int64_t shift = i >= 0 ? i / q : -((-i + q - 1) / q);
        std::int64_t r = i - shift * q;
        return Rational(shift) + Rational(pos[static_cast<std::size_t>(r)], n);
    };
    std::vector<PLLift::Node> nodes;
    for (std::int64_t i = 0; i < q; ++i) {
        nodes.push_back({point(i), point(i + advance)});
        // Optional interior node on (x_i, x_{i+1}) mapped into (g(x_i), g(x_{i+1})).
        if (gen.uniform(0, 1) == 1) {
            Rational a = gen.fraction();
            Rational b = gen.fraction();
            if (a.sign() == 0 || b.sign() == 0) continue;
            Rational x = point(i) + a * (point(i + 1) - point(i));
            Rational y = point(i + advance) + b * (point(i + 1 + advance) - point(i + advance));
            nodes.push_back({x, y});
        }
    }
    // Bring breakpoints into [0, 1) keeping the map.
    for (auto& nd : nodes) {
        Rational shift(nd.x.floor(), mpz_class(1));
        nd.x -= shift;
        nd.y -= shift;
    }
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    return PLLift(std::move(nodes));
}

}  // namespace testgen
