#pragma once

// Combinatorial model of Z-periodic point configurations and their maximal
// monotone maps. A configuration records only the cyclic order of the merged
// periodic sets; points are (index, translate) pairs and real coordinates are
// never needed to evaluate rotation numbers of positive words.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotnum/rational.hpp"

namespace rotnum {

struct Letter {
    int index = 0;
    int exponent = 1;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Finite word over `arity` letters, read as a right-to-left composition.
class Word {
public:
    Word(std::vector<Letter> letters, int arity);

    /// Positive word from letter indices, e.g. {0, 1} is fg.
    static Word positive(std::vector<int> indices, int arity);

    /// Parses "fgffg" or "fgf'g'". Without an alphabet, letters are numbered by
    /// alphabetical rank among the distinct letters present; with one, letter
    /// i is alphabet[i] and the arity is the alphabet size.
    static Word parse(std::string_view text, std::string_view alphabet = {});

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    int arity() const noexcept { return arity_; }
    bool is_positive() const noexcept;

    /// Leftmost letter: the last one applied, whose orbit receives every output.
    const Letter& last_applied() const { return letters_.front(); }

    Word rotated(std::size_t k) const;
    Word power(int n) const;

    std::string str(std::string_view alphabet = default_alphabet) const;

    friend bool operator==(const Word&, const Word&) = default;

    static constexpr std::string_view default_alphabet = "fghijklmnopqrstuvwxyzabcde";

private:
    std::vector<Letter> letters_;
    int arity_;
};

/// Cyclic order of n merged Z-periodic sets within one period. Letter i
/// occurs count(i) >= 1 times; equality compares canonical forms.
class ZPeriodicConfig {
public:
    explicit ZPeriodicConfig(std::vector<int> pattern);

    /// Letter i is the i-th distinct character by first appearance ("xyxy").
    static ZPeriodicConfig parse(std::string_view text);

    std::span<const int> pattern() const noexcept { return pattern_; }
    std::size_t size() const noexcept { return pattern_.size(); }
    int arity() const noexcept { return static_cast<int>(positions_.size()); }
    int count(int letter) const { return static_cast<int>(positions_.at(letter).size()); }
    /// Sorted indices in [0, size()) carrying `letter`.
    std::span<const int> positions(int letter) const { return positions_.at(letter); }

    /// Lexicographically least cyclic rotation.
    ZPeriodicConfig canonical() const;
    bool is_canonical() const;

    std::string str(std::string_view alphabet = default_alphabet) const;

    friend bool operator==(const ZPeriodicConfig& a, const ZPeriodicConfig& b);

    static constexpr std::string_view default_alphabet = "xyzwvutsrqponmlkjihgfedcba";

private:
    std::vector<int> pattern_;
    std::vector<std::vector<int>> positions_;
};

/// Point at `index` of the fundamental domain, shifted by `translate` periods.
struct LabeledPoint {
    std::int64_t index = 0;
    std::int64_t translate = 0;

    friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
    friend std::strong_ordering operator<=>(const LabeledPoint& a, const LabeledPoint& b) {
        if (auto c = a.translate <=> b.translate; c != 0) return c;
        return a.index <=> b.index;
    }
};

/// Maximal monotone map for `letter` with rotation number `rot`; `rot` times
/// the letter's multiplicity must be an integer p (the index advance).
struct MaxMapSpec {
    int letter = 0;
    Rational rot;
};

/// Maximal monotone maps of every letter of one configuration, with the
/// lookup tables needed to apply them in O(1).
class MaxMapSystem {
public:
    /// `specs` holds one entry per letter (any order). Throws InvalidSpec.
    MaxMapSystem(ZPeriodicConfig config, std::span<const MaxMapSpec> specs);
    /// Convenience: specs[i] = (i, rots[i]).
    MaxMapSystem(ZPeriodicConfig config, std::span<const Rational> rots);

    const ZPeriodicConfig& config() const noexcept { return config_; }
    std::int64_t advance(int letter) const { return advance_.at(letter); }

    LabeledPoint apply(int letter, LabeledPoint pt) const;
    LabeledPoint evaluate(const Word& word, LabeledPoint start) const;
    /// Exact rotation number of a positive word, from the least point of the
    /// last-applied letter.
    Rational rot(const Word& word) const;
    /// Same, starting the orbit at `start`.
    Rational rot(const Word& word, LabeledPoint start) const;

private:
    void check_word(const Word& word) const;
    void check_point(LabeledPoint pt) const;

    ZPeriodicConfig config_;
    std::vector<std::int64_t> advance_;
    // ceiling_[letter][k]: position within the letter's sub-sequence of the
    // least letter point with index >= k; == count(letter) means "wrap".
    std::vector<std::vector<int>> ceiling_;
};

LabeledPoint apply_max_map(const ZPeriodicConfig& config, const MaxMapSpec& spec, LabeledPoint pt);

LabeledPoint evaluate_word(const ZPeriodicConfig& config, std::span<const MaxMapSpec> specs,
                           const Word& word, LabeledPoint start);

Rational rot_of_word(const ZPeriodicConfig& config, std::span<const MaxMapSpec> specs,
                     const Word& word);

/// Certified enclosure of a rotation number.
struct RotInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

using MonotoneLift = std::function<Rational(const Rational&)>;

/// Encloses rot(F) using |F^n(x) - x - n rot(F)| <= 1, valid for any
/// Z-periodic monotone map.
RotInterval estimate_rot(const MonotoneLift& map, std::int64_t iterations, const Rational& base);

/// Real coordinate of a configuration point: translate + index / N.
Rational coordinate(const ZPeriodicConfig& config, LabeledPoint pt);

/// The maximal monotone map of `spec` as a map of the real line, with the
/// configuration placed at coordinate().
MonotoneLift realize(const ZPeriodicConfig& config, const MaxMapSpec& spec);

}  // namespace rotnum
