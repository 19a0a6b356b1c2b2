#ifndef STW_VERTEX_SET_HPP
#define STW_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace stw {

/// Fixed-capacity vertex set over labels [0, 128).
///
/// All hypergraph operations in this project run on word-sized bitmasks;
/// 128 bits covers every instance we construct (Y_2 needs 42).
class VertexSet {
public:
    static constexpr int kCapacity = 128;

    constexpr VertexSet() = default;

    static VertexSet fromVertices(const std::vector<int>& verts) {
        VertexSet s;
        for (int v : verts) s.insert(v);
        return s;
    }

    constexpr void insert(int v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    constexpr void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    constexpr bool contains(int v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    constexpr int size() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }
    constexpr bool empty() const { return words_[0] == 0 && words_[1] == 0; }

    /// Smallest vertex, or -1 when empty.
    constexpr int first() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    /// Smallest vertex greater than v, or -1.
    constexpr int next(int v) const {
        ++v;
        if (v >= kCapacity) return -1;
        int w = v >> 6;
        std::uint64_t masked = words_[w] & (~std::uint64_t{0} << (v & 63));
        if (masked) return (w << 6) + std::countr_zero(masked);
        if (w == 0 && words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    std::vector<int> toVertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    constexpr bool isSubsetOf(const VertexSet& o) const {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }
    constexpr bool intersects(const VertexSet& o) const {
        return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
    }

    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) {
        a.words_[0] |= b.words_[0];
        a.words_[1] |= b.words_[1];
        return a;
    }
    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) {
        a.words_[0] &= b.words_[0];
        a.words_[1] &= b.words_[1];
        return a;
    }
    /// Set difference a \ b.
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) {
        a.words_[0] &= ~b.words_[0];
        a.words_[1] &= ~b.words_[1];
        return a;
    }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Order by the ascending vertex sequence (lexicographic), the canonical
    /// facet order used throughout.
    friend bool lexLess(const VertexSet& a, const VertexSet& b) {
        int i = a.first(), j = b.first();
        while (i >= 0 && j >= 0) {
            if (i != j) return i < j;
            i = a.next(i);
            j = b.next(j);
        }
        return j >= 0;  // proper prefix compares smaller
    }

    std::uint64_t word(int i) const { return words_[i]; }

private:
    std::array<std::uint64_t, 2> words_{0, 0};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        // splitmix-style mix of the two words
        std::uint64_t h = s.word(0) * 0x9e3779b97f4a7c15ULL;
        h ^= h >> 32;
        h += s.word(1) * 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};

}  // namespace stw

#endif  // STW_VERTEX_SET_HPP
