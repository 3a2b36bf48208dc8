#ifndef HOLEFORGE_BITS_HPP
#define HOLEFORGE_BITS_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace holeforge {

// Dynamic bitset over vertex ids 0..capacity-1. All binary operations
// assume equal capacity.
class Bits {
public:
    Bits() = default;
    explicit Bits(int capacity)
        : n_(capacity)
        , w_((capacity + 63) / 64, 0)
    {
    }

    static Bits of(int capacity, std::initializer_list<int> members)
    {
        Bits b(capacity);
        for (int v : members)
            b.set(v);
        return b;
    }

    static Bits of(int capacity, const std::vector<int>& members)
    {
        Bits b(capacity);
        for (int v : members)
            b.set(v);
        return b;
    }

    static Bits full(int capacity)
    {
        Bits b(capacity);
        for (int i = 0; i < capacity; ++i)
            b.set(i);
        return b;
    }

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    int count() const
    {
        int c = 0;
        for (uint64_t w : w_)
            c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const
    {
        for (uint64_t w : w_)
            if (w)
                return false;
        return true;
    }

    bool intersects(const Bits& o) const
    {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k])
                return true;
        return false;
    }

    bool is_subset_of(const Bits& o) const
    {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k])
                return false;
        return true;
    }

    Bits& operator|=(const Bits& o)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] &= o.w_[k];
        return *this;
    }
    // set difference
    Bits& operator-=(const Bits& o)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    // smallest member, -1 if empty
    int first() const { return next(-1); }

    // smallest member > after, -1 if none
    int next(int after) const
    {
        int i = after + 1;
        if (i >= n_)
            return -1;
        size_t k = i >> 6;
        uint64_t w = w_[k] >> (i & 63);
        if (w)
            return i + __builtin_ctzll(w);
        for (++k; k < w_.size(); ++k)
            if (w_[k])
                return int(k << 6) + __builtin_ctzll(w_[k]);
        return -1;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v))
            out.push_back(v);
        return out;
    }

    struct iterator {
        const Bits* b;
        int v;
        int operator*() const { return v; }
        iterator& operator++()
        {
            v = b->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace holeforge

#endif
