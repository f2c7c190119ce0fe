#pragma once

// Surface-group representations given by PL lifts of the standard
// generators a_1, b_1, ..., a_g, b_g.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotnum/monotone.hpp"
#include "rotnum/pl_homeo.hpp"
#include "rotnum/rational.hpp"

namespace rotnum {

/// "a1", "b1", "a2", ... for generator k = 0, 1, 2, ...
std::string generator_name(int k);

/// Words over the 2g generators, e.g. "a1b1a1'b1'".
Word parse_surface_word(std::string_view text, int genus);
std::string surface_word_str(const Word& word);

class SurfaceRep {
public:
    SurfaceRep(int genus, std::vector<PLLift> generators);

    static SurfaceRep trivial(int genus);
    /// Every generator a translation; amounts[k] goes to generator k.
    static SurfaceRep rotations(int genus, std::span<const Rational> amounts);

    /// "genus: g" followed by lines "a1: <pl map>", ..., "bg: <pl map>".
    static SurfaceRep read(std::istream& is);
    void write(std::ostream& os) const;

    int genus() const noexcept { return genus_; }
    std::span<const PLLift> generators() const noexcept { return generators_; }
    const PLLift& generator(int k) const { return generators_.at(static_cast<std::size_t>(k)); }
    /// 1-based handle accessors.
    const PLLift& a(int i) const { return generator(2 * (i - 1)); }
    const PLLift& b(int i) const { return generator(2 * (i - 1) + 1); }

    /// Product of generator lifts along the word (inverse lifts for inverse letters).
    PLLift evaluate(std::span<const Letter> letters,
                    std::size_t max_breakpoints = kDefaultMaxBreakpoints) const;
    PLLift evaluate(const Word& word, std::size_t max_breakpoints = kDefaultMaxBreakpoints) const {
        return evaluate(word.letters(), max_breakpoints);
    }

    friend bool operator==(const SurfaceRep&, const SurfaceRep&) = default;

private:
    int genus_;
    std::vector<PLLift> generators_;
};

class RelatorNotSatisfiedError : public Error {
public:
    RelatorNotSatisfiedError(const std::string& what, PLLift product)
        : Error(Errc::RelatorNotSatisfied, what), product_(std::move(product)) {}
    const PLLift& product() const noexcept { return product_; }

private:
    PLLift product_;
};

/// prod_i [a_i, b_i] of canonical commutator lifts.
PLLift relator_product(const SurfaceRep& rep);

/// Integer e with relator_product(rep) = T^e; throws RelatorNotSatisfiedError.
std::int64_t validate_relator(const SurfaceRep& rep);

/// rot of the relator product. Asserts the Milnor-Wood bound |e| <= 2g - 2.
std::int64_t euler_number(const SurfaceRep& rep);

enum class Side { A, B };

/// Conjugates the B-side generators by f, which must commute with the image
/// of the separating curve. Side A must be the handles 1..h (0 < h < g) and
/// the curve must freely reduce to prod_{i<=h} [a_i, b_i] or its inverse.
SurfaceRep bend(const SurfaceRep& rep, std::span<const Side> sides, const Word& curve, const PLLift& f);

/// b_i -> b_i f, where f commutes with a_i (1-based handle index).
SurfaceRep twist(const SurfaceRep& rep, int handle, const PLLift& f);

/// Free reduction.
std::vector<Letter> reduce(std::vector<Letter> letters);

/// Freely reduced nonempty words of length <= radius, by length then letter
/// order (a1, a1', b1, b1', ...).
std::vector<Word> reduced_words(int genus, int radius);

struct TauEntry {
    Word first;
    Word second;
    Rational tau;
};

struct Fingerprint {
    int genus = 0;
    int radius = 0;
    /// Generator rotation numbers mod 1, in [0, 1).
    std::vector<Rational> generator_rots;
    /// tau on ordered pairs of reduced words. Census fingerprints leave this empty.
    std::vector<TauEntry> taus;
};

/// Throws NotResolvedError listing the unresolved words.
Fingerprint fingerprint(const SurfaceRep& rep, int radius, const DetectOptions& options = {});

struct Comparison {
    bool distinguished = false;
    std::string witness;  // empty when inconclusive
};

/// Distinguished means provably not semi-conjugate. Tau entries are compared
/// on the pairs present in both fingerprints.
Comparison compare_fingerprints(const Fingerprint& lhs, const Fingerprint& rhs);

void write_fingerprint_csv(std::ostream& os, const Fingerprint& fp);
Fingerprint read_fingerprint_csv(std::istream& is);

struct LiftCensus {
    int genus = 0;
    int k = 1;
    Rational euler;  // (2g - 2) / k
    /// (j_1/k, ..., j_2g/k), lexicographic in j.
    std::vector<std::vector<Rational>> rot_vectors;
};

/// Throws Error(LiftObstruction) unless k divides 2g - 2.
LiftCensus lift_census(int genus, int k);

/// Fingerprint carrying only generator rotation numbers.
Fingerprint census_fingerprint(int genus, std::span<const Rational> rots, int radius);

}  // namespace rotnum
