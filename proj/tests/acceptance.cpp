// Acceptance checks: one PASS/FAIL line per criterion, with the measured time
// against its limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "random_pl.hpp"
#include "rotnum/error.hpp"
#include "rotnum/monotone.hpp"
#include "rotnum/pl_homeo.hpp"
#include "rotnum/surface.hpp"
#include "rotnum/ziggurat.hpp"

using namespace rotnum;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* name;
    double limit_ms;
    std::function<Outcome()> run;
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<int> letters_of(const Word& w) {
    std::vector<int> out;
    for (auto l : w.letters()) out.push_back(l.index);
    return out;
}

std::string fail_at(const std::string& what) { return "first failure: " + what; }

// ---------------------------------------------------------------------------

Outcome ac1() {
    auto fg = Word::parse("fg");
    std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    Outcome out;
    double worst = 0;
    for (auto [text, expect] : std::vector<std::pair<const char*, Rational>>{{"xyxy", Rational(3, 2)},
                                                                             {"xxyy", Rational(1)}}) {
        auto config = ZPeriodicConfig::parse(text);
        auto t0 = Clock::now();
        MaxMapSystem system(config, half);
        Rational r = system.rot(fg);
        double t = ms_since(t0);
        worst = std::max(worst, t);
        if (r != expect) return {false, fail_at(std::string(text) + " gave " + r.str())};
        if (t >= 1.0) return {false, std::string(text) + " took " + std::to_string(t) + " ms"};
    }
    out.detail = "slowest call " + std::to_string(worst) + " ms";
    return out;
}

Outcome ac2() {
    auto fg = Word::parse("fg");
    int cases = 0;
    for (int q = 1; q <= 6; ++q) {
        std::vector<int> pattern;
        for (int i = 0; i < q; ++i) pattern.insert(pattern.end(), {0, 1});
        ZPeriodicConfig config(pattern);
        for (int p = 0; p < q; ++p)
            for (int k = 0; k < q; ++k) {
                // Non-lowest-terms data is read as p periodic orbits of q points.
                std::vector<MaxMapSpec> spec{{0, Rational(p, q)}, {1, Rational(k, q)}};
                Rational r = rot_of_word(config, spec, fg);
                ++cases;
                if (r != Rational(p + k + 1, q))
                    return {false, fail_at("(p,k,q)=(" + std::to_string(p) + "," + std::to_string(k) + "," +
                                           std::to_string(q) + ") gave " + r.str())};
            }
    }
    return {true, std::to_string(cases) + " cases"};
}

Outcome ac3() {
    auto fg = Word::parse("fg");
    auto axis = farey_fractions(5);
    axis.push_back(Rational(1));
    int pairs = 0;
    for (const auto& s : axis)
        for (const auto& t : axis) {
            std::vector<Rational> rots{s, t};
            Rational closed = closed_form_rfg(s, t);
            Rational enumerated = extremal_rot(fg, rots);
            Rational brute = oracle::extremal_rot({0, 1}, rots);
            ++pairs;
            if (closed != enumerated || closed != brute)
                return {false, fail_at("(" + s.str() + "," + t.str() + "): closed " + closed.str() + ", enumerated " +
                                       enumerated.str() + ", brute force " + brute.str())};
        }
    return {true, std::to_string(pairs) + " pairs"};
}

Outcome ac4() {
    for (int g = 2; g <= 10; ++g) {
        auto chain = milnor_wood_chain(g);
        if (chain.bound != Rational(2 * g - 2)) return {false, fail_at("g=" + std::to_string(g))};
        if (chain.partial_bounds.size() != static_cast<std::size_t>(g - 1))
            return {false, fail_at("chain length for g=" + std::to_string(g))};
        for (int i = 1; i <= g - 1; ++i)
            if (chain.partial_bounds[static_cast<std::size_t>(i - 1)] != Rational(2 * i - 1))
                return {false, fail_at("g=" + std::to_string(g) + ", i=" + std::to_string(i))};
    }
    return {true, "g = 2..10"};
}

Outcome ac5() {
    testgen::RandomPL gen(0xac05);
    int resolved = 0, tried = 0;
    while (resolved < 1000 && tried < 20000) {
        ++tried;
        auto f = gen.lift(4);
        auto g = gen.lift(4);
        auto rf = detect_rational_rot(f);
        if (!rf.resolved()) continue;
        auto rg = detect_rational_rot(g);
        if (!rg.resolved()) continue;
        auto rfg = detect_rational_rot(compose(f, g));
        if (!rfg.resolved()) continue;
        ++resolved;
        Rational d = rfg.exact().value - rf.exact().value - rg.exact().value;
        if (abs(d) > Rational(1)) return {false, fail_at("defect " + d.str() + " for f = " + f.str() + ", g = " + g.str())};
    }
    if (resolved < 1000) return {false, "only " + std::to_string(resolved) + " resolved pairs"};
    return {true, std::to_string(resolved) + " resolved of " + std::to_string(tried) + " drawn"};
}

Outcome ac6() {
    testgen::RandomPL gen(0xac06);
    int resolved = 0, tried = 0;
    while (resolved < 100 && tried < 5000) {
        ++tried;
        auto g = gen.lift(4);
        auto rg = detect_rational_rot(g);
        if (!rg.resolved()) continue;
        ++resolved;
        const int k = gen.uniform(-3, 3);
        auto f = translate(invert(g), Rational(k));
        auto rf = detect_rational_rot(f);
        if (!rf.resolved() || rf.exact().value != Rational(k) - rg.exact().value)
            return {false, fail_at("g = " + g.str() + ", k = " + std::to_string(k) + ": " + rf.str())};
    }
    if (resolved < 100) return {false, "only " + std::to_string(resolved) + " resolved"};
    return {true, std::to_string(resolved) + " resolved of " + std::to_string(tried) + " drawn"};
}

Outcome ac7() {
    testgen::RandomPL gen(0xac07);
    int pairs = 0, comm_resolved = 0, tried = 0;
    while (pairs < 200 && tried < 5000) {
        ++tried;
        auto f = gen.lift(4);
        auto g = gen.lift(4);
        auto rf = detect_rational_rot(f);
        if (!rf.resolved()) continue;
        ++pairs;
        const Rational bound(mpz_class(1), rf.exact().value.denominator());
        auto c = canonical_commutator(f, g);
        auto rc = detect_rational_rot(c);
        if (rc.resolved()) {
            ++comm_resolved;
            if (rc.exact().value > bound)
                return {false, fail_at("rot[f,g] = " + rc.exact().value.str() + " > " + bound.str())};
        } else if (rc.interval().lo > bound) {
            return {false, fail_at("certified interval above " + bound.str())};
        }
        const int k = gen.uniform(1, 3);
        if (canonical_commutator(translate(f, Rational(k)), g) != c ||
            canonical_commutator(f, translate(g, Rational(-k))) != c)
            return {false, fail_at("commutator changed under integer shift")};
    }
    if (pairs < 200) return {false, "only " + std::to_string(pairs) + " resolved"};
    return {true, std::to_string(pairs) + " pairs, " + std::to_string(comm_resolved) + " commutators resolved"};
}

Outcome ac8() {
    testgen::RandomPL gen(0xac08);
    int word_cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<int> counts{gen.uniform(1, 5), gen.uniform(1, 5)};
        if (trial % 2 == 0) counts.push_back(gen.uniform(1, 4));
        const int n = static_cast<int>(counts.size());
        std::vector<MaxMapSpec> spec;
        for (int l = 0; l < n; ++l) {
            int q = counts[static_cast<std::size_t>(l)];
            spec.push_back({l, Rational(gen.uniform(-q, 2 * q), q)});
        }
        MaxMapSystem system(gen.config(counts), spec);
        auto w = gen.positive_word(n, 7);
        const Rational r = system.rot(w);
        const std::string where = system.config().str() + " / " + w.str();
        for (int m = 2; m <= 4; ++m)
            if (system.rot(w.power(m)) != Rational(m) * r) return {false, fail_at("homogeneity on " + where)};
        for (std::size_t k = 1; k < w.size(); ++k)
            if (system.rot(w.rotated(k)) != r) return {false, fail_at("cyclic invariance on " + where)};
        int min_q = 1 << 30;
        for (auto l : w.letters()) min_q = std::min(min_q, counts[static_cast<std::size_t>(l.index)]);
        if (r.denominator_int64() > min_q) return {false, fail_at("denominator bound on " + where)};
        for (auto idx : system.config().positions(w.last_applied().index))
            for (std::int64_t shift : {-2, 0, 3})
                if (system.rot(w, {idx, shift}) != r) return {false, fail_at("start dependence on " + where)};
        // Independent check on real coordinates.
        std::vector<long> adv;
        for (int l = 0; l < n; ++l)
            adv.push_back(spec[static_cast<std::size_t>(l)].rot.numerator_int64() *
                          (counts[static_cast<std::size_t>(l)] / spec[static_cast<std::size_t>(l)].rot.denominator_int64()));
        std::vector<int> pattern(system.config().pattern().begin(), system.config().pattern().end());
        if (oracle::rot_real({pattern}, adv, letters_of(w)) != r) return {false, fail_at("oracle mismatch on " + where)};
        ++word_cases;
    }

    int conj_cases = 0, homog_pl = 0, tried = 0;
    while (conj_cases < 100 && tried < 5000) {
        ++tried;
        auto f = gen.lift(4);
        auto rf = detect_rational_rot(f);
        if (!rf.resolved()) continue;
        auto h = gen.lift(4);
        auto rc = detect_rational_rot(conjugate(h, f));
        if (!rc.resolved() || rc.exact().value != rf.exact().value)
            return {false, fail_at("conjugacy invariance for f = " + f.str() + ", h = " + h.str())};
        ++conj_cases;
        for (int m = 2; m <= 4; ++m) {
            auto rm = detect_rational_rot(power(f, m), {.max_period = 16 * m});
            if (!rm.resolved()) continue;
            ++homog_pl;
            if (rm.exact().value != Rational(m) * rf.exact().value)
                return {false, fail_at("PL homogeneity for f = " + f.str())};
        }
    }
    if (conj_cases < 100) return {false, "only " + std::to_string(conj_cases) + " conjugacy cases"};
    return {true, std::to_string(word_cases) + " word cases, " + std::to_string(conj_cases) + " conjugacy cases, " +
                      std::to_string(homog_pl) + " PL powers"};
}

Outcome ac9() {
    int cells = 0;
    for (const char* text : {"fg", "fgffg"}) {
        auto grid = ziggurat_grid(Word::parse(text), 4);
        const std::size_t n = grid.axis.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ++cells;
                const Rational& v = grid.at(i, j).value;
                if ((i + 1 < n && grid.at(i + 1, j).value < v) || (j + 1 < n && grid.at(i, j + 1).value < v))
                    return {false, fail_at(std::string(text) + " at (" + grid.axis[i].str() + "," + grid.axis[j].str() + ")")};
            }
    }
    return {true, std::to_string(cells) + " cells"};
}

Outcome ac10() {
    auto census = lift_census(2, 2);
    if (census.rot_vectors.size() != 16) return {false, std::to_string(census.rot_vectors.size()) + " classes"};
    std::vector<Fingerprint> fps;
    for (const auto& v : census.rot_vectors) fps.push_back(census_fingerprint(2, v, 1));
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = i + 1; j < fps.size(); ++j)
            if (!compare_fingerprints(fps[i], fps[j]).distinguished)
                return {false, fail_at("classes " + std::to_string(i) + " and " + std::to_string(j))};
    try {
        lift_census(2, 3);
        return {false, "census(2,3) accepted"};
    } catch (const Error& e) {
        if (e.code() != Errc::LiftObstruction) return {false, std::string("census(2,3): ") + e.what()};
    }
    return {true, "16 classes pairwise distinguished; k=3 obstructed"};
}

Outcome ac11() {
    if (euler_number(SurfaceRep::trivial(2)) != 0) return {false, "trivial rep"};
    std::vector<Rational> amounts{Rational(1, 3), Rational(2, 5), Rational(-1, 7), Rational(5, 2), Rational(1, 2),
                                  Rational(3, 4)};
    if (euler_number(SurfaceRep::rotations(3, amounts)) != 0) return {false, "rotation rep"};

    testgen::RandomPL gen(0xac11);
    const std::vector<Side> split{Side::A, Side::A, Side::B, Side::B};
    const auto curve = parse_surface_word("a1b1a1'b1'", 2);
    int deformations = 0;
    for (int trial = 0; trial < 25; ++trial) {
        auto a = gen.lift(3);
        auto b = gen.lift(3);
        SurfaceRep rep(2, {a, b, b, a});
        const auto e = euler_number(rep);
        // Twist along a1 by a power of a1, then bend along the separating curve by its own image.
        auto tw = twist(rep, 1, power(a, gen.uniform(1, 2) * (trial % 2 ? 1 : -1)));
        ++deformations;
        if (validate_relator(tw) != e || euler_number(tw) != e) return {false, fail_at("twist, trial " + std::to_string(trial))};
        auto bent = bend(tw, split, curve, tw.evaluate(curve));
        ++deformations;
        if (validate_relator(bent) != e || euler_number(bent) != e)
            return {false, fail_at("bend, trial " + std::to_string(trial))};
    }
    return {true, std::to_string(deformations) + " deformations"};
}

Outcome ac12() {
    auto w = Word::parse("fgffg");
    const std::string first = grid_csv(ziggurat_grid(w, 6, 1));
    for (int jobs : {1, 2, 4})
        for (int run = 0; run < 2; ++run)
            if (grid_csv(ziggurat_grid(w, 6, jobs)) != first)
                return {false, fail_at("CSV differs with jobs = " + std::to_string(jobs))};
    auto grid = ziggurat_grid(w, 6, 4);
    for (const auto& cell : grid.cells) {
        Rational brute = oracle::extremal_rot(letters_of(w), {cell.s, cell.t});
        if (brute != cell.value)
            return {false, fail_at("(" + cell.s.str() + "," + cell.t.str() + "): " + cell.value.str() + " vs " + brute.str())};
    }
    return {true, std::to_string(grid.cells.size()) + " cells"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "worked examples xyxy -> 3/2, xxyy -> 1", 1.0 * 2, ac1},
        {"AC2", "alternating configuration gives (p+k+1)/q, q <= 6", 1000, ac2},
        {"AC3", "closed form for R_fg equals enumeration, denominators <= 5", 10000, ac3},
        {"AC4", "Milnor-Wood chain 2g-2 with partial bounds 2i-1, g = 2..10", 100, ac4},
        {"AC5", "quasimorphism defect <= 1 on 1000 resolved PL pairs", 30000, ac5},
        {"AC6", "rot(T^k g^-1) = k - rot(g) on 100 resolved PL lifts", 30000, ac6},
        {"AC7", "commutator bound 1/q and shift invariance on 200 PL pairs", 60000, ac7},
        {"AC8", "homogeneity, cyclic, conjugacy, denominator and start invariance", 60000, ac8},
        {"AC9", "R_w monotone on the denominator <= 4 grid for fg and fgffg", 30000, ac9},
        {"AC10", "lift census (2,2) has 16 distinguished classes, (2,3) obstructed", 1000, ac10},
        {"AC11", "Euler number preserved by 50 bend/twist deformations", 30000, ac11},
        {"AC12", "fgffg grid at D <= 6 stable across runs and jobs, equals brute force", 300000, ac12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double t = ms_since(t0);
        const bool ok = o.ok && t < c.limit_ms;
        if (!ok) ++failures;
        std::printf("%-4s %s  %s  [%.1f ms, limit %.0f ms]  %s\n", c.id, ok ? "PASS" : "FAIL", c.name, t, c.limit_ms,
                    o.ok ? o.detail.c_str() : ("-- " + o.detail).c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
