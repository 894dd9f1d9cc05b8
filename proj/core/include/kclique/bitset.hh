#ifndef KCLIQUE_BITSET_HH
#define KCLIQUE_BITSET_HH

#include <bit>
#include <cstdint>
#include <vector>

namespace kclique {

/// Fixed-width set of vertex indices, one bit per vertex. The width is
/// chosen at construction and never changes; every set operation expects
/// both operands to share a universe.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) :
        n_(universe),
        words_((universe + word_bits - 1) / word_bits, 0)
    {
    }

    int universe_size() const { return n_; }

    bool test(int v) const { return words_[v / word_bits] >> (v % word_bits) & 1; }
    void set(int v) { words_[v / word_bits] |= std::uint64_t{1} << (v % word_bits); }
    void reset(int v) { words_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits)); }

    void clear()
    {
        for (auto & w : words_)
            w = 0;
    }

    /// Set every bit in the universe.
    void fill()
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool any() const { return ! empty(); }

    int count() const
    {
        int result = 0;
        for (auto w : words_)
            result += std::popcount(w);
        return result;
    }

    /// Lowest member, or -1 when empty.
    int first() const
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            if (words_[i] != 0)
                return int(i) * word_bits + std::countr_zero(words_[i]);
        return -1;
    }

    /// Lowest member strictly greater than v, or -1 when none.
    int next_after(int v) const
    {
        int i = (v + 1) / word_bits;
        if (i >= int(words_.size()))
            return -1;
        std::uint64_t w = words_[i] >> ((v + 1) % word_bits);
        if (w != 0)
            return v + 1 + std::countr_zero(w);
        for (++i ; i < int(words_.size()) ; ++i)
            if (words_[i] != 0)
                return i * word_bits + std::countr_zero(words_[i]);
        return -1;
    }

    VertexSet & operator&= (const VertexSet & other)
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet & operator|= (const VertexSet & other)
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Remove every member of other: *this &= ~other.
    VertexSet & and_not(const VertexSet & other)
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    bool intersects(const VertexSet & other) const
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    /// True iff every member of this set is also in other.
    bool subset_of(const VertexSet & other) const
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }

    friend bool operator== (const VertexSet &, const VertexSet &) = default;

    std::vector<int> members() const
    {
        std::vector<int> result;
        result.reserve(count());
        for (int v = first() ; v != -1 ; v = next_after(v))
            result.push_back(v);
        return result;
    }

    class const_iterator {
    public:
        const_iterator(const VertexSet * s, int v) : set_(s), v_(v) { }
        int operator* () const { return v_; }
        const_iterator & operator++ () { v_ = set_->next_after(v_); return *this; }
        bool operator!= (const const_iterator & other) const { return v_ != other.v_; }

    private:
        const VertexSet * set_;
        int v_;
    };

    const_iterator begin() const { return const_iterator{this, first()}; }
    const_iterator end() const { return const_iterator{this, -1}; }

private:
    static const int word_bits = 64;

    // bits at index >= n_ stay zero
    void trim()
    {
        if (n_ % word_bits != 0 && ! words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % word_bits)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}

#endif
