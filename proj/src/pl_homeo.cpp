#include "rotnum/pl_homeo.hpp"

#include <algorithm>
#include <cctype>

namespace rotnum {

namespace {

struct Segment {
    Rational x0, y0, x1, y1;
};

// Segment of the period-extended graph containing r, for r in [0, 1).
Segment segment_at(std::span<const PLLift::Node> nodes, const Rational& r) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), r,
                               [](const Rational& v, const PLLift::Node& n) { return v < n.x; });
    const auto& first = nodes.front();
    const auto& last = nodes.back();
    if (it == nodes.begin()) return {last.x - Rational(1), last.y - Rational(1), first.x, first.y};
    const auto& lo = *std::prev(it);
    if (it == nodes.end()) return {lo.x, lo.y, first.x + Rational(1), first.y + Rational(1)};
    return {lo.x, lo.y, it->x, it->y};
}

// Segment whose y-range contains r, for r in [y_first, y_first + 1).
Segment segment_at_value(std::span<const PLLift::Node> nodes, const Rational& r) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), r,
                               [](const Rational& v, const PLLift::Node& n) { return v < n.y; });
    const auto& first = nodes.front();
    const auto& lo = *std::prev(it);
    if (it == nodes.end()) return {lo.x, lo.y, first.x + Rational(1), first.y + Rational(1)};
    return {lo.x, lo.y, it->x, it->y};
}

Rational to_rational(const mpz_class& z) { return Rational(z, mpz_class(1)); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

PLLift::PLLift(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw Error(Errc::InvalidPL, "a PL lift needs at least one breakpoint");
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        const Node& n = nodes_[j];
        if (n.x.sign() < 0 || n.x >= Rational(1))
            throw Error(Errc::InvalidPL, "breakpoint " + n.x.str() + " outside [0, 1)");
        if (j > 0) {
            if (!(nodes_[j - 1].x < n.x)) throw Error(Errc::InvalidPL, "breakpoints must strictly increase");
            if (!(nodes_[j - 1].y < n.y)) throw Error(Errc::InvalidPL, "values must strictly increase");
        }
    }
    if (!(nodes_.back().y < nodes_.front().y + Rational(1)))
        throw Error(Errc::InvalidPL, "last value must be below first value + 1");
    canonicalize();
}

PLLift::PLLift(std::vector<Node> nodes, Trusted) : nodes_(std::move(nodes)) { canonicalize(); }

void PLLift::canonicalize() {
    const std::size_t m = nodes_.size();
    std::vector<Rational> slope(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Node& a = nodes_[j];
        Rational x1 = j + 1 < m ? nodes_[j + 1].x : nodes_[0].x + Rational(1);
        Rational y1 = j + 1 < m ? nodes_[j + 1].y : nodes_[0].y + Rational(1);
        slope[j] = (y1 - a.y) / (x1 - a.x);
    }
    std::vector<Node> kept;
    for (std::size_t j = 0; j < m; ++j)
        if (slope[(j + m - 1) % m] != slope[j]) kept.push_back(nodes_[j]);
    if (kept.size() <= 1) {
        Rational at_zero = (*this)(Rational(0));
        nodes_ = {Node{Rational(0), std::move(at_zero)}};
        return;
    }
    nodes_ = std::move(kept);
}

PLLift PLLift::translation(const Rational& amount) { return PLLift({Node{Rational(0), amount}}, Trusted{}); }

Rational PLLift::operator()(const Rational& x) const {
    mpz_class k = x.floor();
    Rational shift = to_rational(k);
    Rational r = x - shift;
    Segment s = segment_at(nodes_, r);
    return s.y0 + (r - s.x0) * (s.y1 - s.y0) / (s.x1 - s.x0) + shift;
}

Rational PLLift::preimage(const Rational& y) const {
    Rational shift = to_rational((y - nodes_.front().y).floor());
    Rational r = y - shift;
    Segment s = segment_at_value(nodes_, r);
    return s.x0 + (r - s.y0) * (s.x1 - s.x0) / (s.y1 - s.y0) + shift;
}

std::optional<Rational> PLLift::translation_amount() const {
    if (nodes_.size() == 1) return nodes_.front().y - nodes_.front().x;
    return std::nullopt;
}

PLLift PLLift::parse(std::string_view text) {
    std::string_view t = trim(text);
    if (t.rfind("rot:", 0) == 0) return translation(Rational::parse(t.substr(4)));
    if (t.rfind("pl:", 0) != 0) throw Error(Errc::Parse, "PL map must start with 'pl:' or 'rot:'");
    t.remove_prefix(3);
    std::vector<Node> nodes;
    while (!trim(t).empty()) {
        auto comma = t.find(',');
        std::string_view item = trim(t.substr(0, comma));
        t = comma == std::string_view::npos ? std::string_view{} : t.substr(comma + 1);
        std::size_t arrow = item.find("→");
        std::size_t arrow_len = std::string_view("→").size();
        if (arrow == std::string_view::npos) {
            arrow = item.find("->");
            arrow_len = 2;
        }
        if (arrow == std::string_view::npos) throw Error(Errc::Parse, "expected 'b→v' in '" + std::string(item) + "'");
        nodes.push_back({Rational::parse(item.substr(0, arrow)), Rational::parse(item.substr(arrow + arrow_len))});
    }
    return PLLift(std::move(nodes));
}

std::string PLLift::str() const {
    if (auto a = translation_amount()) return "rot: " + a->str();
    std::string out = "pl:";
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        out += j == 0 ? " " : ", ";
        out += nodes_[j].x.str() + "→" + nodes_[j].y.str();
    }
    return out;
}

PLLift compose(const PLLift& outer, const PLLift& inner, std::size_t max_breakpoints) {
    std::vector<Rational> xs;
    xs.reserve(outer.breakpoint_count() + inner.breakpoint_count());
    for (const auto& n : inner.nodes()) xs.push_back(n.x);
    for (const auto& n : outer.nodes()) xs.push_back(inner.preimage(n.x).frac());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() > max_breakpoints)
        throw Error(Errc::ComplexityExceeded,
                    "composition needs " + std::to_string(xs.size()) + " breakpoints (cap " +
                        std::to_string(max_breakpoints) + ")");
    std::vector<PLLift::Node> nodes;
    nodes.reserve(xs.size());
    for (auto& x : xs) {
        Rational y = outer(inner(x));
        nodes.push_back({std::move(x), std::move(y)});
    }
    return PLLift(std::move(nodes));
}

PLLift invert(const PLLift& f) {
    std::vector<PLLift::Node> nodes;
    for (const auto& n : f.nodes()) {
        Rational shift = to_rational(n.y.floor());
        nodes.push_back({n.y - shift, n.x - shift});
    }
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    return PLLift(std::move(nodes));
}

PLLift translate(const PLLift& f, const Rational& amount) {
    std::vector<PLLift::Node> nodes(f.nodes().begin(), f.nodes().end());
    for (auto& n : nodes) n.y += amount;
    return PLLift(std::move(nodes));
}

PLLift power(const PLLift& f, int n, std::size_t max_breakpoints) {
    if (n < 0) return power(invert(f), -n, max_breakpoints);
    PLLift out = PLLift::identity();
    for (int i = 0; i < n; ++i) out = compose(f, out, max_breakpoints);
    return out;
}

PLLift conjugate(const PLLift& h, const PLLift& f, std::size_t max_breakpoints) {
    return compose(compose(h, f, max_breakpoints), invert(h), max_breakpoints);
}

bool commutes(const PLLift& f, const PLLift& g, std::size_t max_breakpoints) {
    return compose(f, g, max_breakpoints) == compose(g, f, max_breakpoints);
}

std::optional<Rational> RotResult::value() const {
    if (resolved()) return exact().value;
    return std::nullopt;
}

std::string RotResult::str() const {
    if (resolved()) return exact().value.str();
    return "[" + interval().lo.str() + ", " + interval().hi.str() + "]";
}

namespace {

// x in one period with g(x) - x = p, given that p lies between the extremes
// of g(x) - x over the breakpoints.
Rational solve_shift(const PLLift& g, const Rational& p) {
    auto nodes = g.nodes();
    const std::size_t m = nodes.size();
    for (std::size_t j = 0; j < m; ++j) {
        Rational d0 = nodes[j].y - nodes[j].x;
        if (d0 == p) return nodes[j].x;  // also the left end of a slope-1 coincident segment
        Rational x1 = j + 1 < m ? nodes[j + 1].x : nodes[0].x + Rational(1);
        Rational d1 = j + 1 < m ? nodes[j + 1].y - nodes[j + 1].x : nodes[0].y - nodes[0].x;
        if ((d0 < p && p < d1) || (d1 < p && p < d0))
            return nodes[j].x + (p - d0) * (x1 - nodes[j].x) / (d1 - d0);
    }
    throw Error(Errc::InvalidPL, "no crossing found for g(x) - x = " + p.str());  // unreachable
}

}  // namespace

RotResult detect_rational_rot(const PLLift& f, const DetectOptions& options) {
    if (options.max_period < 1) throw Error(Errc::InvalidArgument, "max_period must be at least 1");
    PLLift g = f;
    for (std::int64_t q = 1; q <= options.max_period; ++q) {
        if (q > 1) g = compose(f, g, options.max_breakpoints);
        // g(x) - x is periodic and linear between breakpoints, so its range is
        // spanned by breakpoint values; an integer p in that range is hit.
        Rational lo = g.nodes().front().y - g.nodes().front().x;
        Rational hi = lo;
        for (const auto& n : g.nodes()) {
            Rational d = n.y - n.x;
            if (d < lo) lo = d;
            if (d > hi) hi = d;
        }
        mpz_class p_lo = lo.ceil();
        mpz_class p_hi = hi.floor();
        if (p_lo > p_hi) continue;
        // For a homeomorphism hi - lo < 1, so there is a single candidate; scan
        // from the middle outward anyway.
        mpz_class mid = (lo + hi).floor() / 2;
        if (mid < p_lo) mid = p_lo;
        if (mid > p_hi) mid = p_hi;
        for (mpz_class off = 0; mid + off <= p_hi || mid - off >= p_lo; ++off) {
            for (mpz_class p : {mpz_class(mid + off), mpz_class(mid - off)}) {
                if (p < p_lo || p > p_hi) continue;
                Rational rp = to_rational(p);
                Rational x = solve_shift(g, rp);
                return {ExactRot{Rational(p, mpz_class(static_cast<long>(q))), std::move(x), q, p}};
            }
        }
    }
    // g == f^max_period here; 64 further applications give f^(64 max_period)(0).
    const std::int64_t n = 64 * options.max_period;
    Rational x(0);
    for (int i = 0; i < 64; ++i) x = g(x);
    Rational scale(n);
    return {RotInterval{(x - Rational(1)) / scale, (x + Rational(1)) / scale}};
}

PLLift canonical_commutator(const PLLift& f, const PLLift& g, std::size_t max_breakpoints) {
    return compose(compose(f, g, max_breakpoints), compose(invert(f), invert(g), max_breakpoints),
                   max_breakpoints);
}

Rational tau(const PLLift& f, const PLLift& g, const DetectOptions& options) {
    RotResult rf = detect_rational_rot(f, options);
    RotResult rg = detect_rational_rot(g, options);
    RotResult rfg = detect_rational_rot(compose(f, g, options.max_breakpoints), options);
    if (!rf.resolved() || !rg.resolved() || !rfg.resolved()) {
        std::vector<std::string> labels;
        if (!rf.resolved()) labels.emplace_back("f");
        if (!rg.resolved()) labels.emplace_back("g");
        if (!rfg.resolved()) labels.emplace_back("fg");
        throw NotResolvedError("rotation numbers not resolved within period " +
                                   std::to_string(options.max_period),
                               std::move(labels), {rf, rg, rfg});
    }
    return rfg.exact().value - rf.exact().value - rg.exact().value;
}

}  // namespace rotnum
