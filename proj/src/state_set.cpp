#include "vval/state_set.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace vval {

namespace {

std::size_t words_for(std::size_t universe)
{
    return (universe + StateSet::bits_per_word - 1) / StateSet::bits_per_word;
}

} // namespace

StateSet::StateSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

StateSet StateSet::full(std::size_t universe)
{
    StateSet s(universe);
    for (auto& w : s.words_) {
        w = ~Word{0};
    }
    s.clear_padding();
    return s;
}

StateSet StateSet::from_bits(std::size_t universe, Word bits)
{
    if (universe > bits_per_word) {
        throw std::invalid_argument("StateSet::from_bits: universe exceeds 64 states");
    }
    StateSet s(universe);
    if (universe > 0) {
        s.words_[0] = bits;
        s.clear_padding();
    }
    return s;
}

bool StateSet::contains(std::size_t index) const
{
    if (index >= universe_) {
        throw std::out_of_range("state index " + std::to_string(index) + " outside universe of "
                                + std::to_string(universe_));
    }
    return (words_[index / bits_per_word] >> (index % bits_per_word)) & Word{1};
}

bool StateSet::empty() const noexcept
{
    for (Word w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::size_t StateSet::count() const noexcept
{
    std::size_t n = 0;
    for (Word w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::vector<std::size_t> StateSet::members() const
{
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        Word w = words_[wi];
        while (w != 0) {
            out.push_back(wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

StateSet& StateSet::insert(std::size_t index)
{
    if (index >= universe_) {
        throw std::out_of_range("state index " + std::to_string(index) + " outside universe of "
                                + std::to_string(universe_));
    }
    words_[index / bits_per_word] |= Word{1} << (index % bits_per_word);
    return *this;
}

StateSet& StateSet::erase(std::size_t index)
{
    if (index >= universe_) {
        throw std::out_of_range("state index " + std::to_string(index) + " outside universe of "
                                + std::to_string(universe_));
    }
    words_[index / bits_per_word] &= ~(Word{1} << (index % bits_per_word));
    return *this;
}

StateSet StateSet::complement() const
{
    StateSet s = *this;
    for (auto& w : s.words_) {
        w = ~w;
    }
    s.clear_padding();
    return s;
}

bool StateSet::subset_of(const StateSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool StateSet::disjoint_from(const StateSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

StateSet& StateSet::operator&=(const StateSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

StateSet& StateSet::operator|=(const StateSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

StateSet& StateSet::operator-=(const StateSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

std::strong_ordering operator<=>(const StateSet& lhs, const StateSet& rhs) noexcept
{
    if (auto c = lhs.universe_ <=> rhs.universe_; c != 0) {
        return c;
    }
    for (std::size_t i = lhs.words_.size(); i-- > 0;) {
        if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

void StateSet::check_same_universe(const StateSet& other) const
{
    if (universe_ != other.universe_) {
        throw std::invalid_argument("state sets over different universes (" + std::to_string(universe_)
                                    + " vs " + std::to_string(other.universe_) + ")");
    }
}

void StateSet::clear_padding() noexcept
{
    const std::size_t tail = universe_ % bits_per_word;
    if (tail != 0 && !words_.empty()) {
        words_.back() &= (Word{1} << tail) - 1;
    }
}

} // namespace vval
