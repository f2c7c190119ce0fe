#include "rotnum/ziggurat.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "rotnum/error.hpp"

namespace rotnum {

std::vector<ZPeriodicConfig> enumerate_configs(std::span<const int> counts) {
    if (counts.empty()) throw Error(Errc::InvalidArgument, "no letters");
    std::vector<int> pattern;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] <= 0) throw Error(Errc::InvalidArgument, "multiplicities must be positive");
        pattern.insert(pattern.end(), static_cast<std::size_t>(counts[i]), static_cast<int>(i));
    }
    // A least rotation always starts with letter 0, so pin it and permute the rest.
    std::vector<ZPeriodicConfig> out;
    do {
        ZPeriodicConfig c(pattern);
        if (c.is_canonical()) out.push_back(std::move(c));
    } while (std::next_permutation(pattern.begin() + 1, pattern.end()));
    return out;
}

namespace {

void check_extremal_args(const Word& word, std::span<const Rational> rots) {
    if (!word.is_positive())
        throw Error(Errc::InverseNotSupported, "R_w is only monotone for positive words");
    if (static_cast<std::size_t>(word.arity()) != rots.size())
        throw Error(Errc::InvalidArgument, "need one rotation number per letter");
}

}  // namespace

Rational extremal_rot(const Word& word, std::span<const Rational> rots) {
    check_extremal_args(word, rots);
    std::vector<int> counts;
    for (const Rational& s : rots) {
        auto q = s.denominator_int64();
        if (q > 64) throw Error(Errc::InvalidArgument, "denominator too large for enumeration: " + s.str());
        counts.push_back(static_cast<int>(q));
    }
    std::optional<Rational> best;
    for (auto& config : enumerate_configs(counts)) {
        Rational r = MaxMapSystem(std::move(config), rots).rot(word);
        if (!best || r > *best) best = std::move(r);
    }
    return *best;
}

Rational extremal_rot_inf(const Word& word, std::span<const Rational> rots) {
    check_extremal_args(word, rots);
    std::vector<Rational> negated;
    for (const Rational& s : rots) negated.push_back(-s);
    return -extremal_rot(word, negated);
}

Rational closed_form_rfg(const Rational& s, const Rational& t) {
    // With L = lcm(den s, den t) and q > L:
    //   (floor(sq) + floor(tq) + 1) / q <= s + t + 1/q < s + t + 1/L,
    // and s + t + 1/L is exactly the q = L term, so q <= L suffices.
    mpz_class lcm;
    mpz_lcm(lcm.get_mpz_t(), s.denominator().get_mpz_t(), t.denominator().get_mpz_t());
    const std::int64_t limit = to_int64(lcm);
    std::optional<Rational> best;
    for (std::int64_t q = 1; q <= limit; ++q) {
        Rational rq(q);
        Rational v = Rational((s * rq).floor() + (t * rq).floor() + 1, mpz_class(static_cast<long>(q)));
        if (!best || v > *best) best = std::move(v);
    }
    return *best;
}

Rational commutator_rot_bound(const Rational& s) { return Rational(mpz_class(1), s.denominator()); }

Rational commutator_rot_bound(Irrational) { return Rational(0); }

MilnorWoodChain milnor_wood_chain(int genus) {
    if (genus < 2) throw Error(Errc::InvalidArgument, "genus must be at least 2");
    MilnorWoodChain chain;
    chain.genus = genus;
    // Worst case per commutator: rotation number 0 = 0/1 gives the bound 1.
    const Rational per_commutator = commutator_rot_bound(Rational(0));
    Rational partial = per_commutator;
    chain.partial_bounds.push_back(partial);
    for (int i = 2; i <= genus - 1; ++i) {
        partial = closed_form_rfg(partial, per_commutator);
        chain.partial_bounds.push_back(partial);
    }
    // The full relator product is an integer translation, so the last
    // commutator's rotation number adds exactly.
    chain.bound = partial + per_commutator;
    return chain;
}

std::vector<Rational> farey_fractions(int max_denominator) {
    if (max_denominator < 1) throw Error(Errc::InvalidArgument, "denominator bound must be positive");
    std::vector<Rational> out;
    for (int q = 1; q <= max_denominator; ++q)
        for (int p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

ZigguratGrid ziggurat_grid(const Word& word, int max_denominator, int jobs) {
    if (word.arity() != 2) throw Error(Errc::InvalidArgument, "ziggurat grids need a 2-letter word");
    if (!word.is_positive()) throw Error(Errc::InverseNotSupported, "ziggurat grids need a positive word");
    ZigguratGrid grid{word, max_denominator, farey_fractions(max_denominator), {}};
    const std::size_t n = grid.axis.size();
    grid.cells.resize(n * n);

    auto fill = [&](std::size_t k) {
        const Rational& s = grid.axis[k / n];
        const Rational& t = grid.axis[k % n];
        std::vector<Rational> rots{s, t};
        grid.cells[k] = {s, t, extremal_rot(word, rots)};
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < n * n; ++k) fill(k);
        return grid;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t k = next++; k < n * n; k = next++) fill(k);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return grid;
}

void write_grid_csv(std::ostream& os, const ZigguratGrid& grid) {
    os << "s,t,R\n";
    for (const auto& c : grid.cells) os << c.s << ',' << c.t << ',' << c.value << '\n';
}

std::string grid_csv(const ZigguratGrid& grid) {
    std::ostringstream os;
    write_grid_csv(os, grid);
    return os.str();
}

std::vector<GridCsvRow> read_grid_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "s,t,R") throw Error(Errc::Parse, "missing CSV header 's,t,R'");
    std::vector<GridCsvRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto a = line.find(',');
        auto b = a == std::string::npos ? a : line.find(',', a + 1);
        if (b == std::string::npos) throw Error(Errc::Parse, "bad CSV row '" + line + "'");
        rows.push_back({Rational::parse(line.substr(0, a)), Rational::parse(line.substr(a + 1, b - a - 1)),
                        Rational::parse(line.substr(b + 1))});
    }
    return rows;
}

namespace {

void write_pgm(std::ostream& os, std::size_t side, const std::vector<Rational>& values_st) {
    // values_st is row-major over (s, t); the image is row-major over (t, s).
    const auto [lo, hi] = std::minmax_element(values_st.begin(), values_st.end());
    const Rational range = *hi - *lo;
    os << "P5\n" << side << ' ' << side << "\n255\n";
    std::string pixels(side * side, '\0');
    for (std::size_t si = 0; si < side; ++si) {
        for (std::size_t ti = 0; ti < side; ++ti) {
            const Rational& v = values_st[si * side + ti];
            long level = 0;
            if (range.sign() != 0) level = ((v - *lo) * Rational(255) / range + Rational(1, 2)).floor().get_si();
            pixels[ti * side + si] = static_cast<char>(static_cast<unsigned char>(level));
        }
    }
    os.write(pixels.data(), static_cast<std::streamsize>(pixels.size()));
}

}  // namespace

void write_grid_pgm(std::ostream& os, const ZigguratGrid& grid) {
    std::vector<Rational> values;
    values.reserve(grid.cells.size());
    for (const auto& c : grid.cells) values.push_back(c.value);
    write_pgm(os, grid.axis.size(), values);
}

void write_grid_pgm(std::ostream& os, std::span<const GridCsvRow> rows) {
    std::vector<GridCsvRow> sorted(rows.begin(), rows.end());
    std::sort(sorted.begin(), sorted.end(), [](const GridCsvRow& a, const GridCsvRow& b) {
        return a.s != b.s ? a.s < b.s : a.t < b.t;
    });
    std::vector<Rational> axis;
    for (const auto& r : sorted)
        if (axis.empty() || axis.back() != r.s) axis.push_back(r.s);
    const std::size_t side = axis.size();
    if (side == 0 || sorted.size() != side * side) throw Error(Errc::InvalidArgument, "CSV rows do not form a square grid");
    std::vector<Rational> values;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k].s != axis[k / side] || sorted[k].t != axis[k % side])
            throw Error(Errc::InvalidArgument, "CSV rows do not form a square grid");
        values.push_back(sorted[k].value);
    }
    write_pgm(os, side, values);
}

}  // namespace rotnum
