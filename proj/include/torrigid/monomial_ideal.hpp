#pragma once

#include "torrigid/codimension.hpp"
#include "torrigid/index_set.hpp"

#include <string>
#include <vector>

namespace torrigid {

/// Squarefree monomial ideal in k[x_0, ..., x_{m-1}], stored by the supports
/// of its minimal generators. The unit ideal is the single generator {};
/// the zero ideal has no generators.
class SquarefreeMonomialIdeal {
public:
    SquarefreeMonomialIdeal() = default;
    /// Generators are minimalised (inclusion-minimal supports kept).
    SquarefreeMonomialIdeal(int variables, std::vector<IndexSet> generators);

    static SquarefreeMonomialIdeal unit(int variables) { return {variables, {IndexSet{}}}; }

    int variables() const { return variables_; }
    const std::vector<IndexSet>& generators() const { return generators_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_.front().empty(); }

    /// Whether x^F lies in the ideal.
    bool contains(IndexSet monomial) const;

    /// Minimal primes (x_i : i in P), as the minimal transversals P.
    std::vector<IndexSet> minimal_primes() const;

    /// Height of the ideal; infinite for the unit ideal (empty variety).
    Codimension codimension() const;

    friend SquarefreeMonomialIdeal intersect(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b);
    friend bool operator==(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) = default;

    /// "(x1x2, x3)" with 1-based variable names.
    std::string to_string() const;

private:
    int variables_ = 0;
    std::vector<IndexSet> generators_;
};

/// Prime ideal (x_i : i in support).
SquarefreeMonomialIdeal prime_ideal(int variables, IndexSet support);

} // namespace torrigid
