#include "torrigid/index_set.hpp"
#include "torrigid/matrix.hpp"
#include "torrigid/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace torrigid {

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return g;
}

IntVector primitive(const IntVector& v)
{
    Integer g = content(v);
    if (g == 0 || g == 1)
        return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    return out;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw InputError("dot product: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw InputError("dot product: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

IntVector to_integer_vector(const std::vector<long>& v)
{
    return IntVector(v.begin(), v.end());
}

std::vector<long> to_long_vector(const IntVector& v)
{
    std::vector<long> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(to_long(x));
    return out;
}

RatVector to_rational(const IntVector& v)
{
    return RatVector(v.begin(), v.end());
}

IntVector clear_denominators(const RatVector& v)
{
    Integer den = 1;
    for (const auto& x : v)
        den = lcm(den, x.get_den());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i].get_num() * (den / v[i].get_den());
    return primitive(out);
}

std::string to_string(const IntVector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j);
    return r;
}

IntMatrix matrix_from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty)
{
    return IntMatrix::from_rows(rows, cols_if_empty);
}

// --- IndexSet ----------------------------------------------------------------

IndexSet::IndexSet(std::initializer_list<int> elements)
{
    for (int i : elements)
        insert(i);
}

IndexSet::IndexSet(const std::vector<int>& elements)
{
    for (int i : elements) {
        if (i < 0 || i >= capacity)
            throw InputError("index " + std::to_string(i) + " out of range for an index set");
        insert(i);
    }
}

IndexSet IndexSet::range(int n)
{
    if (n >= capacity)
        return from_bits(~std::uint64_t{0});
    return from_bits((std::uint64_t{1} << n) - 1);
}

std::vector<int> IndexSet::elements() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

bool operator<(IndexSet a, IndexSet b)
{
    if (a == b)
        return false;
    // Lexicographic on sorted element lists: compare at the first element
    // present in exactly one set.
    std::uint64_t diff = a.bits_ ^ b.bits_;
    int k = std::countr_zero(diff);
    std::uint64_t below = (std::uint64_t{1} << k) - 1;
    // Both agree below k. The one containing k continues with k; the other
    // continues with its next element above k, or ends.
    bool a_has = (a.bits_ >> k) & 1u;
    const IndexSet& without = a_has ? b : a;
    bool without_ends = (without.bits_ & ~below) == 0;
    // A prefix sorts first; otherwise the smaller next element sorts first.
    if (without_ends)
        return !a_has;
    return a_has;
}

std::string IndexSet::to_string(int offset) const
{
    std::ostringstream os;
    os << '{';
    bool first_elem = true;
    for (int i : elements()) {
        os << (first_elem ? "" : ",") << i + offset;
        first_elem = false;
    }
    os << '}';
    return os.str();
}

std::vector<IndexSet> subsets_of_size(IndexSet universe, int k)
{
    std::vector<int> elems = universe.elements();
    const int n = static_cast<int>(elems.size());
    std::vector<IndexSet> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        IndexSet s;
        for (int i : idx)
            s.insert(elems[i]);
        out.push_back(s);
        int i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (int j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<IndexSet> minimal_sets(std::vector<IndexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](IndexSet a, IndexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<IndexSet> out;
    for (IndexSet s : sets) {
        bool dominated = false;
        for (IndexSet t : out)
            if (t.is_subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> maximal_sets(std::vector<IndexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](IndexSet a, IndexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<IndexSet> out;
    for (IndexSet s : sets) {
        bool dominated = false;
        for (IndexSet t : out)
            if (s.is_subset_of(t)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace torrigid
