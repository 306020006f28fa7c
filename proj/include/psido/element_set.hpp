#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace psido {

/// Index of an element of a finite ring. Elements are numbered 0..order-1.
using Elem = std::uint32_t;

/// Fixed-universe bitset over element indices.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);
    ElementSet(std::size_t universe, std::initializer_list<Elem> members);
    ElementSet(std::size_t universe, std::span<const Elem> members);

    static ElementSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Elem e) const
    {
        return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
    }
    /// Returns true if the element was not already present.
    bool insert(Elem e);
    bool erase(Elem e);

    std::vector<Elem> members() const;
    bool subset_of(const ElementSet& other) const;

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);

    std::size_t hash() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b)
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t universe_ = 0;
    std::size_t count_ = 0;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace psido
