#pragma once

// Exact piecewise-linear lifts of circle homeomorphisms: maps F of the line
// with F(x + 1) = F(x) + 1, linear between rational breakpoints.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rotnum/error.hpp"
#include "rotnum/monotone.hpp"
#include "rotnum/rational.hpp"

namespace rotnum {

inline constexpr std::size_t kDefaultMaxBreakpoints = 100000;

class PLLift {
public:
    struct Node {
        Rational x;  // breakpoint in [0, 1)
        Rational y;  // F(x)

        friend bool operator==(const Node&, const Node&) = default;
    };

    /// Nodes must have strictly increasing x in [0, 1) and strictly
    /// increasing y with y_last < y_first + 1. Throws InvalidPL. The stored
    /// form is canonical: collinear nodes are dropped and translations keep a
    /// single node at 0, so == is equality of maps.
    explicit PLLift(std::vector<Node> nodes);

    static PLLift identity() { return translation(Rational(0)); }
    static PLLift translation(const Rational& amount);

    /// "pl: 0→0, 1/2→3/4" (or "->"), or "rot: p/q" for a translation.
    static PLLift parse(std::string_view text);
    std::string str() const;

    std::span<const Node> nodes() const noexcept { return nodes_; }
    std::size_t breakpoint_count() const noexcept { return nodes_.size(); }

    Rational operator()(const Rational& x) const;
    /// F^{-1}(y).
    Rational preimage(const Rational& y) const;

    std::optional<Rational> translation_amount() const;

    friend bool operator==(const PLLift&, const PLLift&) = default;

private:
    struct Trusted {};
    PLLift(std::vector<Node> nodes, Trusted);
    void canonicalize();

    std::vector<Node> nodes_;
};

/// outer ∘ inner.
PLLift compose(const PLLift& outer, const PLLift& inner, std::size_t max_breakpoints = kDefaultMaxBreakpoints);
PLLift invert(const PLLift& f);
/// T_amount ∘ f.
PLLift translate(const PLLift& f, const Rational& amount);
/// f^n for any integer n (n = 0 is the identity).
PLLift power(const PLLift& f, int n, std::size_t max_breakpoints = kDefaultMaxBreakpoints);
/// h f h^{-1}.
PLLift conjugate(const PLLift& h, const PLLift& f, std::size_t max_breakpoints = kDefaultMaxBreakpoints);

/// True when f g == g f exactly.
bool commutes(const PLLift& f, const PLLift& g, std::size_t max_breakpoints = kDefaultMaxBreakpoints);

struct ExactRot {
    Rational value;
    // Witness: F^q(x) = x + p.
    Rational x;
    std::int64_t q = 1;
    mpz_class p;
};

struct RotResult {
    std::variant<ExactRot, RotInterval> data;

    bool resolved() const { return std::holds_alternative<ExactRot>(data); }
    const ExactRot& exact() const { return std::get<ExactRot>(data); }
    const RotInterval& interval() const { return std::get<RotInterval>(data); }
    /// Exact value, or nullopt.
    std::optional<Rational> value() const;
    std::string str() const;
};

struct DetectOptions {
    std::int64_t max_period = 16;
    std::size_t max_breakpoints = kDefaultMaxBreakpoints;
};

/// Searches q = 1..max_period for x with F^q(x) = x + p. On failure returns
/// the certified interval from 64 * max_period iterations.
RotResult detect_rational_rot(const PLLift& f, const DetectOptions& options = {});

/// f g f^{-1} g^{-1}; unchanged when either lift is shifted by an integer.
PLLift canonical_commutator(const PLLift& f, const PLLift& g,
                            std::size_t max_breakpoints = kDefaultMaxBreakpoints);

class NotResolvedError : public Error {
public:
    NotResolvedError(const std::string& what, std::vector<std::string> labels, std::vector<RotResult> results)
        : Error(Errc::NotResolved, what), labels_(std::move(labels)), results_(std::move(results)) {}

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<RotResult>& results() const noexcept { return results_; }

private:
    std::vector<std::string> labels_;
    std::vector<RotResult> results_;
};

/// rot(fg) - rot(f) - rot(g); throws NotResolvedError carrying the three
/// results (f, g, fg) when any of them is unresolved.
Rational tau(const PLLift& f, const PLLift& g, const DetectOptions& options = {});

}  // namespace rotnum
