#include "torrigid/monomial_ideal.hpp"
#include "torrigid/numeric.hpp"

#include <algorithm>

namespace torrigid {

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(int variables, std::vector<IndexSet> generators)
    : variables_(variables)
{
    if (variables < 0 || variables > IndexSet::capacity)
        throw InputError("monomial ideal: unsupported number of variables");
    IndexSet all = IndexSet::range(variables);
    for (IndexSet g : generators)
        if (!g.is_subset_of(all))
            throw InputError("monomial ideal: generator " + g.to_string(1) + " uses an unknown variable");
    generators_ = minimal_sets(std::move(generators));
}

bool SquarefreeMonomialIdeal::contains(IndexSet monomial) const
{
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](IndexSet g) { return g.is_subset_of(monomial); });
}

std::vector<IndexSet> SquarefreeMonomialIdeal::minimal_primes() const
{
    // Berge's incremental construction of the minimal transversals.
    std::vector<IndexSet> current{IndexSet{}};
    for (IndexSet g : generators_) {
        std::vector<IndexSet> next;
        for (IndexSet t : current) {
            if (t.intersects(g)) {
                next.push_back(t);
                continue;
            }
            for (int i : g.elements()) {
                IndexSet u = t;
                u.insert(i);
                next.push_back(u);
            }
        }
        current = minimal_sets(std::move(next));
    }
    return current;
}

Codimension SquarefreeMonomialIdeal::codimension() const
{
    if (is_unit())
        return Codimension::infinite();
    int best = variables_;
    for (IndexSet p : minimal_primes())
        best = std::min(best, p.size());
    return Codimension(best);
}

SquarefreeMonomialIdeal intersect(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b)
{
    if (a.variables_ != b.variables_)
        throw InputError("monomial ideal intersection: different polynomial rings");
    std::vector<IndexSet> gens;
    for (IndexSet f : a.generators_)
        for (IndexSet g : b.generators_)
            gens.push_back(f | g);
    return {a.variables_, std::move(gens)};
}

std::string SquarefreeMonomialIdeal::to_string() const
{
    if (is_zero())
        return "(0)";
    if (is_unit())
        return "(1)";
    std::string s = "(";
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        if (k)
            s += ", ";
        for (int i : generators_[k].elements())
            s += "x" + std::to_string(i + 1);
    }
    return s + ")";
}

SquarefreeMonomialIdeal prime_ideal(int variables, IndexSet support)
{
    std::vector<IndexSet> gens;
    for (int i : support.elements())
        gens.push_back(IndexSet{i});
    return {variables, std::move(gens)};
}

} // namespace torrigid
