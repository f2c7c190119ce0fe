#pragma once

// Extremal rotation numbers R_w of positive words, the closed form for fg,
// the commutator bound, the Milnor-Wood chain and ziggurat grids.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rotnum/monotone.hpp"
#include "rotnum/rational.hpp"

namespace rotnum {

/// All cyclic arrangements with multiplicities counts[i], one per rotation
/// class, in canonical form and sorted by pattern.
std::vector<ZPeriodicConfig> enumerate_configs(std::span<const int> counts);

/// sup { rot(w) : rot(f_i) = s_i } for a positive word and rational s_i.
Rational extremal_rot(const Word& word, std::span<const Rational> rots);

/// inf { rot(w) : rot(f_i) = s_i } = -R_w(-s).
Rational extremal_rot_inf(const Word& word, std::span<const Rational> rots);

/// max over q of (floor(s q) + floor(t q) + 1) / q.
Rational closed_form_rfg(const Rational& s, const Rational& t);

struct Irrational {};

/// Upper bound for the rotation number of a canonical commutator lift [f, g]
/// when one of f, g has rotation number s.
Rational commutator_rot_bound(const Rational& s);
Rational commutator_rot_bound(Irrational);

struct MilnorWoodChain {
    int genus = 0;
    /// bounds[i - 1] bounds rot of the product of the first i commutators,
    /// for i = 1 .. genus - 1.
    std::vector<Rational> partial_bounds;
    Rational bound;
};

MilnorWoodChain milnor_wood_chain(int genus);

struct ZigguratCell {
    Rational s;
    Rational t;
    Rational value;
};

struct ZigguratGrid {
    Word word;
    int max_denominator = 1;
    /// Farey fractions in [0, 1) with denominator <= max_denominator, ascending.
    std::vector<Rational> axis;
    /// Row-major over (s, t): cells[i * axis.size() + j] has s = axis[i], t = axis[j].
    std::vector<ZigguratCell> cells;

    const ZigguratCell& at(std::size_t si, std::size_t ti) const { return cells.at(si * axis.size() + ti); }
};

/// Fractions p/q in [0, 1) with q <= max_denominator, ascending.
std::vector<Rational> farey_fractions(int max_denominator);

/// Evaluates R_w over the Farey grid. `jobs` worker threads split the cells;
/// the result does not depend on `jobs`.
ZigguratGrid ziggurat_grid(const Word& word, int max_denominator, int jobs = 1);

/// Header "s,t,R" then one row per cell in (s, t) order.
void write_grid_csv(std::ostream& os, const ZigguratGrid& grid);
std::string grid_csv(const ZigguratGrid& grid);

struct GridCsvRow {
    Rational s;
    Rational t;
    Rational value;
};
std::vector<GridCsvRow> read_grid_csv(std::istream& is);

/// Binary P5 heightmap, width = height = axis size, s along x and t along y,
/// values linearly quantized from [min, max] to 0..255.
void write_grid_pgm(std::ostream& os, const ZigguratGrid& grid);
/// Same from parsed CSV rows (must form a full square grid).
void write_grid_pgm(std::ostream& os, std::span<const GridCsvRow> rows);

}  // namespace rotnum
