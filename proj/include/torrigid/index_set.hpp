#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace torrigid {

/// A subset of {0, ..., 63}, stored as a bit mask.
///
/// Used for ray-index sets of cones, supports of squarefree monomials and
/// faces of simplicial complexes. Ordering is by the sorted element list
/// (lexicographic), which is what reports and tests rely on.
class IndexSet {
public:
    static constexpr int capacity = 64;

    constexpr IndexSet() = default;
    IndexSet(std::initializer_list<int> elements);
    explicit IndexSet(const std::vector<int>& elements);

    static constexpr IndexSet from_bits(std::uint64_t bits)
    {
        IndexSet s;
        s.bits_ = bits;
        return s;
    }

    /// {0, ..., n-1}
    static IndexSet range(int n);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    bool contains(int i) const { return (bits_ >> i) & 1u; }
    void insert(int i) { bits_ |= std::uint64_t{1} << i; }
    void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest element; undefined on the empty set.
    int first() const { return std::countr_zero(bits_); }

    std::vector<int> elements() const;

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

    friend bool operator<(IndexSet a, IndexSet b);

    /// "{1,3,4}" with indices shifted by `offset` (1 for human-readable output).
    std::string to_string(int offset = 0) const;

private:
    std::uint64_t bits_ = 0;
};

struct IndexSetHash {
    std::size_t operator()(IndexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// All k-element subsets of `universe`, in lexicographic order.
std::vector<IndexSet> subsets_of_size(IndexSet universe, int k);

/// Keep only the inclusion-minimal sets, sorted and without duplicates.
std::vector<IndexSet> minimal_sets(std::vector<IndexSet> sets);

/// Keep only the inclusion-maximal sets, sorted and without duplicates.
std::vector<IndexSet> maximal_sets(std::vector<IndexSet> sets);

} // namespace torrigid
