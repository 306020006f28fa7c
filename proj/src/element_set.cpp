#include "psido/element_set.hpp"

#include <bit>
#include <stdexcept>

namespace psido {

ElementSet::ElementSet(std::size_t universe)
    : words_((universe + 63) / 64, 0), universe_(universe)
{
}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Elem> members)
    : ElementSet(universe)
{
    for (Elem e : members)
        insert(e);
}

ElementSet::ElementSet(std::size_t universe, std::span<const Elem> members)
    : ElementSet(universe)
{
    for (Elem e : members)
        insert(e);
}

ElementSet ElementSet::full(std::size_t universe)
{
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
        s.insert(static_cast<Elem>(i));
    return s;
}

bool ElementSet::insert(Elem e)
{
    if (e >= universe_)
        throw std::out_of_range("element index outside the set universe");
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (e & 63);
    if (w & mask)
        return false;
    w |= mask;
    ++count_;
    return true;
}

bool ElementSet::erase(Elem e)
{
    if (!contains(e))
        return false;
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
    --count_;
    return true;
}

std::vector<Elem> ElementSet::members() const
{
    std::vector<Elem> out;
    out.reserve(count_);
    for_each([&](Elem e) { out.push_back(e); });
    return out;
}

bool ElementSet::subset_of(const ElementSet& other) const
{
    if (universe_ != other.universe_)
        return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0)
            return false;
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other)
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("element sets over different universes");
    count_ = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
        count_ += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other)
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("element sets over different universes");
    count_ = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
        count_ += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    return *this;
}

std::size_t ElementSet::hash() const
{
    std::uint64_t h = 1469598103934665603ull ^ universe_;
    for (std::uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

} // namespace psido
