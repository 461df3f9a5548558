#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace splitdom {

using Vertex = int;

inline constexpr int kMaxVertices = 32;

/// Subset of {0, ..., 31} packed into a single word. Bit v is set iff v is a member.
class VertexSet {
public:
    using Bits = std::uint32_t;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) bits_ |= Bits{1} << v;
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= kMaxVertices ? ~Bits{0} : (Bits{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(Bits{1} << v); }

    constexpr Bits bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Lowest member; undefined on the empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (Bits{1} << v)); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(Bits{1} << v)); }

    /// Complement relative to the universe {0, ..., n-1}.
    constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & full(n).bits_); }

    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(Bits rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) = default;
    private:
        Bits rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    std::string to_string() const {
        std::string out = "{";
        for (Vertex v : *this) {
            if (out.size() > 1) out += ',';
            out += std::to_string(v);
        }
        return out + "}";
    }

private:
    Bits bits_ = 0;
};

/// Next subset of the same cardinality in increasing numeric order (Gosper's hack).
/// Returns false once the sequence would leave the n-vertex universe.
inline bool next_same_size(VertexSet& s, int n) {
    std::uint64_t x = s.bits();
    if (x == 0) return false;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
    if (x >> n) return false;
    s = VertexSet(static_cast<VertexSet::Bits>(x));
    return true;
}

/// Calls fn(s) for every k-subset of {0..n-1} in increasing numeric order until fn returns false.
/// Returns false iff fn stopped the walk.
template <class Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return true;
    if (k == 0) return fn(VertexSet{});
    VertexSet s(static_cast<VertexSet::Bits>((std::uint64_t{1} << k) - 1));
    do {
        if (!fn(s)) return false;
    } while (next_same_size(s, n));
    return true;
}

} // namespace splitdom
