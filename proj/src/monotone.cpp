#include "rotnum/monotone.hpp"

#include <algorithm>
#include <map>

#include "rotnum/error.hpp"

namespace rotnum {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

// ---------------------------------------------------------------- Word

Word::Word(std::vector<Letter> letters, int arity) : letters_(std::move(letters)), arity_(arity) {
    if (arity_ < 1) throw Error(Errc::InvalidArgument, "word arity must be positive");
    if (letters_.empty()) throw Error(Errc::InvalidArgument, "empty word");
    for (const Letter& l : letters_) {
        if (l.index < 0 || l.index >= arity_)
            throw Error(Errc::InvalidArgument, "letter index out of range");
        if (l.exponent != 1 && l.exponent != -1)
            throw Error(Errc::InvalidArgument, "letter exponent must be +1 or -1");
    }
}

Word Word::positive(std::vector<int> indices, int arity) {
    std::vector<Letter> letters;
    letters.reserve(indices.size());
    for (int i : indices) letters.push_back({i, 1});
    return Word(std::move(letters), arity);
}

Word Word::parse(std::string_view text, std::string_view alphabet) {
    std::string letters_seen;
    for (char c : text) {
        if (c == '\'') continue;
        if (c < 'a' || c > 'z') throw Error(Errc::Parse, "bad word character '" + std::string(1, c) + "'");
        if (letters_seen.find(c) == std::string::npos) letters_seen.push_back(c);
    }
    std::string order;
    if (alphabet.empty()) {
        order = letters_seen;
        std::sort(order.begin(), order.end());
    } else {
        order = std::string(alphabet);
        for (char c : letters_seen)
            if (order.find(c) == std::string::npos)
                throw Error(Errc::Parse, "letter '" + std::string(1, c) + "' not in alphabet");
    }
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\'') {
            if (letters.empty() || letters.back().exponent == -1)
                throw Error(Errc::Parse, "misplaced inverse mark in '" + std::string(text) + "'");
            letters.back().exponent = -1;
            continue;
        }
        letters.push_back({static_cast<int>(order.find(c)), 1});
    }
    if (letters.empty()) throw Error(Errc::Parse, "empty word");
    return Word(std::move(letters), static_cast<int>(order.size()));
}

bool Word::is_positive() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.exponent == 1; });
}

Word Word::rotated(std::size_t k) const {
    std::vector<Letter> out(letters_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
    return Word(std::move(out), arity_);
}

Word Word::power(int n) const {
    if (n < 1) throw Error(Errc::InvalidArgument, "word power must be positive");
    std::vector<Letter> out;
    out.reserve(letters_.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out), arity_);
}

std::string Word::str(std::string_view alphabet) const {
    std::string out;
    for (const Letter& l : letters_) {
        if (static_cast<std::size_t>(l.index) >= alphabet.size())
            throw Error(Errc::InvalidArgument, "alphabet too short to render word");
        out.push_back(alphabet[static_cast<std::size_t>(l.index)]);
        if (l.exponent == -1) out.push_back('\'');
    }
    return out;
}

// ---------------------------------------------------------------- ZPeriodicConfig

ZPeriodicConfig::ZPeriodicConfig(std::vector<int> pattern) : pattern_(std::move(pattern)) {
    if (pattern_.empty()) throw Error(Errc::InvalidArgument, "empty configuration");
    int max_letter = *std::max_element(pattern_.begin(), pattern_.end());
    if (*std::min_element(pattern_.begin(), pattern_.end()) < 0)
        throw Error(Errc::InvalidArgument, "negative letter in configuration");
    positions_.resize(static_cast<std::size_t>(max_letter) + 1);
    for (std::size_t k = 0; k < pattern_.size(); ++k)
        positions_[static_cast<std::size_t>(pattern_[k])].push_back(static_cast<int>(k));
    for (const auto& p : positions_)
        if (p.empty()) throw Error(Errc::InvalidArgument, "every letter must occur in the configuration");
}

ZPeriodicConfig ZPeriodicConfig::parse(std::string_view text) {
    std::string seen;
    std::vector<int> pattern;
    for (char c : text) {
        if (c < 'a' || c > 'z') throw Error(Errc::Parse, "bad configuration character '" + std::string(1, c) + "'");
        auto at = seen.find(c);
        if (at == std::string::npos) {
            at = seen.size();
            seen.push_back(c);
        }
        pattern.push_back(static_cast<int>(at));
    }
    if (pattern.empty()) throw Error(Errc::Parse, "empty configuration");
    return ZPeriodicConfig(std::move(pattern));
}

namespace {

// Start of the least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const int> s) {
    const std::size_t n = s.size();
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        int sj = s[j % n];
        std::ptrdiff_t i = fail[j - k - 1];
        while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

}  // namespace

ZPeriodicConfig ZPeriodicConfig::canonical() const {
    std::vector<int> rotated(pattern_);
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(least_rotation(pattern_)),
                rotated.end());
    return ZPeriodicConfig(std::move(rotated));
}

bool ZPeriodicConfig::is_canonical() const {
    std::size_t k = least_rotation(pattern_);
    if (k == 0) return true;
    // Periodic patterns have several least rotations; compare contents.
    return std::equal(pattern_.begin(), pattern_.end(), canonical().pattern_.begin());
}

std::string ZPeriodicConfig::str(std::string_view alphabet) const {
    std::string out;
    for (int l : pattern_) {
        if (static_cast<std::size_t>(l) >= alphabet.size())
            throw Error(Errc::InvalidArgument, "alphabet too short to render configuration");
        out.push_back(alphabet[static_cast<std::size_t>(l)]);
    }
    return out;
}

bool operator==(const ZPeriodicConfig& a, const ZPeriodicConfig& b) {
    if (a.pattern_.size() != b.pattern_.size()) return false;
    return a.canonical().pattern_ == b.canonical().pattern_;
}

// ---------------------------------------------------------------- MaxMapSystem

MaxMapSystem::MaxMapSystem(ZPeriodicConfig config, std::span<const MaxMapSpec> specs)
    : config_(std::move(config)) {
    const int n = config_.arity();
    advance_.assign(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (specs.size() != static_cast<std::size_t>(n))
        throw Error(Errc::InvalidSpec, "need one map per configuration letter");
    for (const MaxMapSpec& s : specs) {
        if (s.letter < 0 || s.letter >= n) throw Error(Errc::InvalidSpec, "map letter out of range");
        if (seen[static_cast<std::size_t>(s.letter)]) throw Error(Errc::InvalidSpec, "duplicate map for letter");
        seen[static_cast<std::size_t>(s.letter)] = true;
        Rational p = s.rot * Rational(config_.count(s.letter));
        if (!p.is_integer())
            throw Error(Errc::InvalidSpec, "rotation " + s.rot.str() + " has no periodic orbit of size " +
                                               std::to_string(config_.count(s.letter)));
        advance_[static_cast<std::size_t>(s.letter)] = p.to_int64();
    }
    const auto size = config_.size();
    ceiling_.resize(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        auto pos = config_.positions(l);
        auto& table = ceiling_[static_cast<std::size_t>(l)];
        table.assign(size, 0);
        std::size_t j = 0;
        for (std::size_t k = 0; k < size; ++k) {
            while (j < pos.size() && static_cast<std::size_t>(pos[j]) < k) ++j;
            table[k] = static_cast<int>(j);
        }
    }
}

namespace {

std::vector<MaxMapSpec> specs_from_rots(std::span<const Rational> rots) {
    std::vector<MaxMapSpec> specs;
    for (std::size_t i = 0; i < rots.size(); ++i) specs.push_back({static_cast<int>(i), rots[i]});
    return specs;
}

}  // namespace

MaxMapSystem::MaxMapSystem(ZPeriodicConfig config, std::span<const Rational> rots)
    : MaxMapSystem(std::move(config), specs_from_rots(rots)) {}

void MaxMapSystem::check_point(LabeledPoint pt) const {
    if (pt.index < 0 || pt.index >= static_cast<std::int64_t>(config_.size()))
        throw Error(Errc::InvalidArgument, "point index outside the fundamental domain");
}

void MaxMapSystem::check_word(const Word& word) const {
    if (!word.is_positive())
        throw Error(Errc::InverseNotSupported, "maximal monotone maps are not invertible");
    if (word.arity() != config_.arity())
        throw Error(Errc::InvalidSpec, "word arity " + std::to_string(word.arity()) +
                                           " does not match configuration arity " +
                                           std::to_string(config_.arity()));
}

LabeledPoint MaxMapSystem::apply(int letter, LabeledPoint pt) const {
    check_point(pt);
    if (letter < 0 || letter >= config_.arity()) throw Error(Errc::InvalidSpec, "letter out of range");
    const auto l = static_cast<std::size_t>(letter);
    const std::int64_t q = config_.count(letter);
    std::int64_t j = ceiling_[l][static_cast<std::size_t>(pt.index)];
    std::int64_t translate = pt.translate;
    if (j == q) {
        j = 0;
        ++translate;
    }
    j += advance_[l];
    std::int64_t wraps = floor_div(j, q);
    translate += wraps;
    j -= wraps * q;
    return {config_.positions(letter)[static_cast<std::size_t>(j)], translate};
}

LabeledPoint MaxMapSystem::evaluate(const Word& word, LabeledPoint start) const {
    check_word(word);
    auto letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) start = apply(it->index, start);
    return start;
}

Rational MaxMapSystem::rot(const Word& word) const {
    check_word(word);
    return rot(word, {config_.positions(word.last_applied().index).front(), 0});
}

Rational MaxMapSystem::rot(const Word& word, LabeledPoint start) const {
    check_word(word);
    check_point(start);
    struct Visit {
        std::int64_t step = -1;
        std::int64_t translate = 0;
    };
    std::vector<Visit> visited(config_.size());
    LabeledPoint pt = start;
    // Every output lies in the last-applied letter's orbit, so the orbit closes
    // after at most one step plus that letter's multiplicity.
    const auto limit = static_cast<std::int64_t>(config_.size()) + 1;
    for (std::int64_t step = 0; step <= limit; ++step) {
        Visit& v = visited[static_cast<std::size_t>(pt.index)];
        if (v.step >= 0) return Rational(pt.translate - v.translate, step - v.step);
        v = {step, pt.translate};
        pt = evaluate(word, pt);
    }
    throw Error(Errc::InvalidSpec, "orbit failed to close");  // unreachable for finite configs
}

LabeledPoint apply_max_map(const ZPeriodicConfig& config, const MaxMapSpec& spec, LabeledPoint pt) {
    if (spec.letter < 0 || spec.letter >= config.arity())
        throw Error(Errc::InvalidSpec, "map letter not in configuration");
    // Other letters get the identity-on-orbit rotation 0; only spec.letter is used.
    std::vector<MaxMapSpec> specs;
    for (int l = 0; l < config.arity(); ++l) specs.push_back({l, l == spec.letter ? spec.rot : Rational(0)});
    return MaxMapSystem(config, specs).apply(spec.letter, pt);
}

LabeledPoint evaluate_word(const ZPeriodicConfig& config, std::span<const MaxMapSpec> specs,
                           const Word& word, LabeledPoint start) {
    return MaxMapSystem(config, specs).evaluate(word, start);
}

Rational rot_of_word(const ZPeriodicConfig& config, std::span<const MaxMapSpec> specs, const Word& word) {
    return MaxMapSystem(config, specs).rot(word);
}

// ---------------------------------------------------------------- real-line views

RotInterval estimate_rot(const MonotoneLift& map, std::int64_t iterations, const Rational& base) {
    if (iterations <= 0) throw Error(Errc::InvalidArgument, "iteration count must be positive");
    Rational x = base;
    for (std::int64_t i = 0; i < iterations; ++i) x = map(x);
    Rational n(iterations);
    Rational mean = (x - base) / n;
    Rational slack = Rational(1) / n;
    return {mean - slack, mean + slack};
}

Rational coordinate(const ZPeriodicConfig& config, LabeledPoint pt) {
    return Rational(pt.translate) + Rational(pt.index, static_cast<std::int64_t>(config.size()));
}

MonotoneLift realize(const ZPeriodicConfig& config, const MaxMapSpec& spec) {
    std::vector<MaxMapSpec> specs;
    for (int l = 0; l < config.arity(); ++l) specs.push_back({l, l == spec.letter ? spec.rot : Rational(0)});
    MaxMapSystem system(config, specs);
    const auto n = static_cast<std::int64_t>(config.size());
    return [system = std::move(system), n, letter = spec.letter](const Rational& x) {
        // Index of the least configuration point >= x, any letter; the letter's
        // own ceiling is then read from the table via apply().
        Rational scaled = x * Rational(n);
        mpz_class c = scaled.ceil();
        mpz_class t;
        mpz_class k;
        mpz_fdiv_qr_ui(t.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
        LabeledPoint out = system.apply(letter, {to_int64(k), to_int64(t)});
        return coordinate(system.config(), out);
    };
}

}  // namespace rotnum
