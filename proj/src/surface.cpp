#include "rotnum/surface.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace rotnum {

std::string generator_name(int k) { return std::string(1, k % 2 == 0 ? 'a' : 'b') + std::to_string(k / 2 + 1); }

Word parse_surface_word(std::string_view text, int genus) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != 'a' && c != 'b') throw Error(Errc::Parse, "bad surface word '" + std::string(text) + "'");
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1) throw Error(Errc::Parse, "missing handle index in '" + std::string(text) + "'");
        int handle = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
        if (handle < 1 || handle > genus)
            throw Error(Errc::Parse, "handle index out of range in '" + std::string(text) + "'");
        int exponent = 1;
        if (j < text.size() && text[j] == '\'') {
            exponent = -1;
            ++j;
        }
        letters.push_back({2 * (handle - 1) + (c == 'b' ? 1 : 0), exponent});
        i = j;
    }
    if (letters.empty()) throw Error(Errc::Parse, "empty surface word");
    return Word(std::move(letters), 2 * genus);
}

std::string surface_word_str(const Word& word) {
    std::string out;
    for (const Letter& l : word.letters()) {
        out += generator_name(l.index);
        if (l.exponent == -1) out += '\'';
    }
    return out;
}

// ---------------------------------------------------------------- SurfaceRep

SurfaceRep::SurfaceRep(int genus, std::vector<PLLift> generators)
    : genus_(genus), generators_(std::move(generators)) {
    if (genus_ < 2) throw Error(Errc::InvalidArgument, "genus must be at least 2");
    if (generators_.size() != static_cast<std::size_t>(2 * genus_))
        throw Error(Errc::InvalidArgument, "need 2g generator lifts");
}

SurfaceRep SurfaceRep::trivial(int genus) {
    if (genus < 2) throw Error(Errc::InvalidArgument, "genus must be at least 2");
    return SurfaceRep(genus, std::vector<PLLift>(static_cast<std::size_t>(2 * genus), PLLift::identity()));
}

SurfaceRep SurfaceRep::rotations(int genus, std::span<const Rational> amounts) {
    std::vector<PLLift> gens;
    for (const Rational& a : amounts) gens.push_back(PLLift::translation(a));
    return SurfaceRep(genus, std::move(gens));
}

SurfaceRep SurfaceRep::read(std::istream& is) {
    std::string line;
    int genus = 0;
    std::map<std::string, PLLift> by_name;
    auto strip = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(is, line)) {
        line = strip(line);
        if (line.empty() || line.front() == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(Errc::Parse, "expected 'name: value' in '" + line + "'");
        std::string key = strip(line.substr(0, colon));
        std::string value = strip(line.substr(colon + 1));
        if (key == "genus") {
            try {
                genus = std::stoi(value);
            } catch (const std::exception&) {
                throw Error(Errc::Parse, "bad genus '" + value + "'");
            }
            continue;
        }
        if (!by_name.emplace(key, PLLift::parse(value)).second)
            throw Error(Errc::Parse, "generator '" + key + "' given twice");
    }
    if (genus < 2) throw Error(Errc::Parse, "missing or invalid 'genus:' header");
    std::vector<PLLift> gens;
    for (int k = 0; k < 2 * genus; ++k) {
        auto it = by_name.find(generator_name(k));
        if (it == by_name.end()) throw Error(Errc::Parse, "missing generator " + generator_name(k));
        gens.push_back(it->second);
        by_name.erase(it);
    }
    if (!by_name.empty()) throw Error(Errc::Parse, "unknown generator '" + by_name.begin()->first + "'");
    return SurfaceRep(genus, std::move(gens));
}

void SurfaceRep::write(std::ostream& os) const {
    os << "genus: " << genus_ << '\n';
    for (int k = 0; k < 2 * genus_; ++k) os << generator_name(k) << ": " << generator(k).str() << '\n';
}

PLLift SurfaceRep::evaluate(std::span<const Letter> letters, std::size_t max_breakpoints) const {
    PLLift out = PLLift::identity();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (it->index < 0 || it->index >= 2 * genus_) throw Error(Errc::InvalidArgument, "generator out of range");
        const PLLift& g = generator(it->index);
        out = compose(it->exponent == 1 ? g : invert(g), out, max_breakpoints);
    }
    return out;
}

// ---------------------------------------------------------------- Euler number

PLLift relator_product(const SurfaceRep& rep) {
    PLLift product = PLLift::identity();
    for (int i = 1; i <= rep.genus(); ++i) product = compose(product, canonical_commutator(rep.a(i), rep.b(i)));
    return product;
}

std::int64_t validate_relator(const SurfaceRep& rep) {
    PLLift product = relator_product(rep);
    auto amount = product.translation_amount();
    if (!amount || !amount->is_integer())
        throw RelatorNotSatisfiedError("relator product is not an integer translation: " + product.str(),
                                       std::move(product));
    return amount->to_int64();
}

std::int64_t euler_number(const SurfaceRep& rep) {
    std::int64_t e = validate_relator(rep);
    if (e > 2 * rep.genus() - 2 || e < -(2 * rep.genus() - 2))
        throw std::logic_error("Milnor-Wood bound violated: e = " + std::to_string(e));
    return e;
}

// ---------------------------------------------------------------- deformations

std::vector<Letter> reduce(std::vector<Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().index == l.index && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

namespace {

std::vector<Letter> commutator_prefix(int handles) {
    std::vector<Letter> out;
    for (int i = 0; i < handles; ++i) {
        int a = 2 * i, b = 2 * i + 1;
        out.insert(out.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    }
    return out;
}

std::vector<Letter> inverse(std::vector<Letter> letters) {
    std::reverse(letters.begin(), letters.end());
    for (auto& l : letters) l.exponent = -l.exponent;
    return letters;
}

}  // namespace

SurfaceRep bend(const SurfaceRep& rep, std::span<const Side> sides, const Word& curve, const PLLift& f) {
    const int g = rep.genus();
    if (sides.size() != static_cast<std::size_t>(2 * g))
        throw Error(Errc::InconsistentSplitting, "need a side for each of the 2g generators");
    int handles_a = 0;
    bool seen_b = false;
    for (int i = 0; i < g; ++i) {
        Side sa = sides[static_cast<std::size_t>(2 * i)];
        if (sa != sides[static_cast<std::size_t>(2 * i + 1)])
            throw Error(Errc::InconsistentSplitting, "a" + std::to_string(i + 1) + " and b" +
                                                         std::to_string(i + 1) + " lie on different sides");
        if (sa == Side::A) {
            if (seen_b) throw Error(Errc::InconsistentSplitting, "side A must be an initial run of handles");
            ++handles_a;
        } else {
            seen_b = true;
        }
    }
    if (handles_a == 0 || handles_a == g)
        throw Error(Errc::InconsistentSplitting, "both sides of a separating curve must be nonempty");
    if (curve.arity() != 2 * g) throw Error(Errc::InconsistentSplitting, "curve word has the wrong arity");
    auto reduced = reduce({curve.letters().begin(), curve.letters().end()});
    auto expected = commutator_prefix(handles_a);
    if (reduced != expected && reduced != inverse(expected))
        throw Error(Errc::InconsistentSplitting, "curve " + surface_word_str(curve) +
                                                     " does not separate the given sides");
    if (!commutes(f, rep.evaluate(curve)))
        throw Error(Errc::NotInCentralizer, "bending map does not commute with the curve's image");
    std::vector<PLLift> gens(rep.generators().begin(), rep.generators().end());
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (sides[k] == Side::B) gens[k] = conjugate(f, gens[k]);
    return SurfaceRep(g, std::move(gens));
}

SurfaceRep twist(const SurfaceRep& rep, int handle, const PLLift& f) {
    if (handle < 1 || handle > rep.genus()) throw Error(Errc::InvalidArgument, "handle index out of range");
    if (!commutes(f, rep.a(handle)))
        throw Error(Errc::NotInCentralizer, "twist map does not commute with a" + std::to_string(handle));
    std::vector<PLLift> gens(rep.generators().begin(), rep.generators().end());
    auto k = static_cast<std::size_t>(2 * (handle - 1) + 1);
    gens[k] = compose(gens[k], f);
    return SurfaceRep(rep.genus(), std::move(gens));
}

// ---------------------------------------------------------------- fingerprints

std::vector<Word> reduced_words(int genus, int radius) {
    if (radius < 1) throw Error(Errc::InvalidArgument, "radius must be at least 1");
    std::vector<Letter> alphabet;
    for (int k = 0; k < 2 * genus; ++k) alphabet.insert(alphabet.end(), {{k, 1}, {k, -1}});
    std::vector<std::vector<Letter>> layer{{}};
    std::vector<Word> out;
    for (int len = 1; len <= radius; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : layer) {
            for (const Letter& l : alphabet) {
                if (!w.empty() && w.back().index == l.index && w.back().exponent == -l.exponent) continue;
                auto ext = w;
                ext.push_back(l);
                next.push_back(ext);
                out.emplace_back(std::move(ext), 2 * genus);
            }
        }
        layer = std::move(next);
    }
    return out;
}

namespace {

std::string letters_key(std::span<const Letter> letters) {
    std::string key;
    for (const Letter& l : letters) {
        key += generator_name(l.index);
        if (l.exponent == -1) key += '\'';
    }
    return key;
}

}  // namespace

Fingerprint fingerprint(const SurfaceRep& rep, int radius, const DetectOptions& options) {
    const auto words = reduced_words(rep.genus(), radius);
    std::map<std::string, RotResult> cache;
    std::vector<std::string> unresolved;
    std::vector<RotResult> unresolved_results;
    auto rot_of = [&](const std::vector<Letter>& letters) -> const RotResult& {
        std::string key = letters_key(letters);
        auto it = cache.find(key);
        if (it == cache.end()) {
            RotResult r = detect_rational_rot(rep.evaluate(letters, options.max_breakpoints), options);
            if (!r.resolved()) {
                unresolved.push_back(key.empty() ? std::string("1") : key);
                unresolved_results.push_back(r);
            }
            it = cache.emplace(std::move(key), std::move(r)).first;
        }
        return it->second;
    };

    Fingerprint fp{rep.genus(), radius, {}, {}};
    for (int k = 0; k < 2 * rep.genus(); ++k) {
        const RotResult& r = rot_of({Letter{k, 1}});
        fp.generator_rots.push_back(r.resolved() ? r.exact().value.frac() : Rational(0));
    }
    for (const Word& w1 : words) {
        for (const Word& w2 : words) {
            std::vector<Letter> both(w1.letters().begin(), w1.letters().end());
            both.insert(both.end(), w2.letters().begin(), w2.letters().end());
            const RotResult& r1 = rot_of({w1.letters().begin(), w1.letters().end()});
            const RotResult& r2 = rot_of({w2.letters().begin(), w2.letters().end()});
            const RotResult& r12 = rot_of(reduce(std::move(both)));
            if (!r1.resolved() || !r2.resolved() || !r12.resolved()) continue;
            fp.taus.push_back({w1, w2, r12.exact().value - r1.exact().value - r2.exact().value});
        }
    }
    if (!unresolved.empty()) {
        std::string list;
        for (const auto& u : unresolved) list += (list.empty() ? "" : ", ") + u;
        throw NotResolvedError("unresolved rotation numbers for: " + list, unresolved, unresolved_results);
    }
    return fp;
}

Comparison compare_fingerprints(const Fingerprint& lhs, const Fingerprint& rhs) {
    if (lhs.genus != rhs.genus) throw Error(Errc::InvalidComparison, "genus mismatch");
    if (lhs.radius != rhs.radius) throw Error(Errc::InvalidComparison, "radius mismatch");
    for (std::size_t k = 0; k < lhs.generator_rots.size(); ++k) {
        if (lhs.generator_rots[k] != rhs.generator_rots.at(k))
            return {true, "rot(" + generator_name(static_cast<int>(k)) + "): " + lhs.generator_rots[k].str() +
                              " vs " + rhs.generator_rots[k].str()};
    }
    std::map<std::pair<std::string, std::string>, const Rational*> other;
    for (const auto& e : rhs.taus) other[{surface_word_str(e.first), surface_word_str(e.second)}] = &e.tau;
    for (const auto& e : lhs.taus) {
        auto key = std::make_pair(surface_word_str(e.first), surface_word_str(e.second));
        auto it = other.find(key);
        if (it != other.end() && *it->second != e.tau)
            return {true, "tau(" + key.first + ", " + key.second + "): " + e.tau.str() + " vs " + it->second->str()};
    }
    return {false, {}};
}

void write_fingerprint_csv(std::ostream& os, const Fingerprint& fp) {
    os << "# genus: " << fp.genus << '\n' << "# radius: " << fp.radius << '\n';
    os << "gen,rot\n";
    for (std::size_t k = 0; k < fp.generator_rots.size(); ++k)
        os << generator_name(static_cast<int>(k)) << ',' << fp.generator_rots[k] << '\n';
    os << "word1,word2,tau\n";
    for (const auto& e : fp.taus)
        os << surface_word_str(e.first) << ',' << surface_word_str(e.second) << ',' << e.tau << '\n';
}

Fingerprint read_fingerprint_csv(std::istream& is) {
    Fingerprint fp;
    enum class Block { None, Gen, Tau } block = Block::None;
    std::string line;
    auto header_int = [](const std::string& line, const std::string& key) -> std::optional<int> {
        std::string prefix = "# " + key + ":";
        if (line.rfind(prefix, 0) != 0) return std::nullopt;
        try {
            return std::stoi(line.substr(prefix.size()));
        } catch (const std::exception&) {
            throw Error(Errc::Parse, "bad header '" + line + "'");
        }
    };
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (auto g = header_int(line, "genus")) { fp.genus = *g; continue; }
        if (auto r = header_int(line, "radius")) { fp.radius = *r; continue; }
        if (line.front() == '#') continue;
        if (line == "gen,rot") { block = Block::Gen; continue; }
        if (line == "word1,word2,tau") { block = Block::Tau; continue; }
        if (fp.genus < 2) throw Error(Errc::Parse, "fingerprint file missing '# genus:' header");
        auto a = line.find(',');
        if (a == std::string::npos) throw Error(Errc::Parse, "bad fingerprint row '" + line + "'");
        if (block == Block::Gen) {
            std::string name = line.substr(0, a);
            if (name != generator_name(static_cast<int>(fp.generator_rots.size())))
                throw Error(Errc::Parse, "generator rows out of order at '" + line + "'");
            fp.generator_rots.push_back(Rational::parse(line.substr(a + 1)));
        } else if (block == Block::Tau) {
            auto b = line.find(',', a + 1);
            if (b == std::string::npos) throw Error(Errc::Parse, "bad tau row '" + line + "'");
            fp.taus.push_back({parse_surface_word(line.substr(0, a), fp.genus),
                               parse_surface_word(line.substr(a + 1, b - a - 1), fp.genus),
                               Rational::parse(line.substr(b + 1))});
        } else {
            throw Error(Errc::Parse, "row outside any block: '" + line + "'");
        }
    }
    if (fp.generator_rots.size() != static_cast<std::size_t>(2 * fp.genus))
        throw Error(Errc::Parse, "fingerprint needs one rotation per generator");
    return fp;
}

// ---------------------------------------------------------------- census

LiftCensus lift_census(int genus, int k) {
    if (genus < 2) throw Error(Errc::InvalidArgument, "genus must be at least 2");
    if (k < 1) throw Error(Errc::InvalidArgument, "k must be positive");
    if ((2 * genus - 2) % k != 0) throw Error(Errc::LiftObstruction, "k must divide 2g-2");
    const int slots = 2 * genus;
    double total = 1;
    for (int i = 0; i < slots; ++i) total *= k;
    if (total > 1e6) throw Error(Errc::InvalidArgument, "census too large to enumerate");
    LiftCensus census{genus, k, Rational(2 * genus - 2, k), {}};
    std::vector<int> j(static_cast<std::size_t>(slots), 0);
    while (true) {
        std::vector<Rational> v;
        for (int x : j) v.emplace_back(x, k);
        census.rot_vectors.push_back(std::move(v));
        int pos = slots - 1;
        while (pos >= 0 && ++j[static_cast<std::size_t>(pos)] == k) j[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return census;
}

Fingerprint census_fingerprint(int genus, std::span<const Rational> rots, int radius) {
    if (rots.size() != static_cast<std::size_t>(2 * genus))
        throw Error(Errc::InvalidArgument, "need one rotation per generator");
    Fingerprint fp{genus, radius, {}, {}};
    for (const Rational& r : rots) fp.generator_rots.push_back(r.frac());
    return fp;
}

}  // namespace rotnum
