/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_BITSET_HH
#define REVEX_GUARD_REVEX_BITSET_HH 1

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace revex
{
    /**
     * A dynamically sized bit set. Bits past size() are kept clear, so word
     * level comparisons and hashing are exact.
     */
    class Bitset
    {
        private:
            std::vector<std::uint64_t> _words;
            std::size_t _size = 0;

            auto trim() -> void
            {
                if (_size % 64 != 0 && ! _words.empty())
                    _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
            }

        public:
            static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

            Bitset() = default;

            explicit Bitset(std::size_t size, bool value = false) :
                _words((size + 63) / 64, value ? ~std::uint64_t{0} : std::uint64_t{0}),
                _size(size)
            {
                trim();
            }

            auto size() const -> std::size_t
            {
                return _size;
            }

            auto test(std::size_t i) const -> bool
            {
                return (_words[i / 64] >> (i % 64)) & 1;
            }

            auto set(std::size_t i, bool value = true) -> void
            {
                if (value)
                    _words[i / 64] |= std::uint64_t{1} << (i % 64);
                else
                    _words[i / 64] &= ~(std::uint64_t{1} << (i % 64));
            }

            auto reset(std::size_t i) -> void
            {
                set(i, false);
            }

            auto flip() -> void
            {
                for (auto & w : _words)
                    w = ~w;
                trim();
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto none() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto any() const -> bool
            {
                return ! none();
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator^= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] ^= other._words[i];
                return *this;
            }

            /// Removes every bit set in other.
            auto subtract(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto find_first() const -> std::size_t
            {
                return find_from(0);
            }

            auto find_next(std::size_t i) const -> std::size_t
            {
                return find_from(i + 1);
            }

            auto find_from(std::size_t i) const -> std::size_t
            {
                if (i >= _size)
                    return npos;
                std::size_t w = i / 64;
                std::uint64_t word = _words[w] & (~std::uint64_t{0} << (i % 64));
                while (true) {
                    if (word)
                        return w * 64 + std::countr_zero(word);
                    if (++w == _words.size())
                        return npos;
                    word = _words[w];
                }
            }

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    auto word = _words[w];
                    while (word) {
                        f(w * 64 + std::countr_zero(word));
                        word &= word - 1;
                    }
                }
            }

            auto words() const -> const std::vector<std::uint64_t> &
            {
                return _words;
            }

            auto operator== (const Bitset & other) const -> bool = default;

            /// Lexicographic on the bit string read from index 0 upwards, with 0 < 1.
            auto operator<=> (const Bitset & other) const -> std::strong_ordering
            {
                if (_size != other._size)
                    return _size <=> other._size;
                for (std::size_t i = 0 ; i < _words.size() ; ++i) {
                    auto diff = _words[i] ^ other._words[i];
                    if (diff) {
                        auto bit = std::uint64_t{1} << std::countr_zero(diff);
                        return (_words[i] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
                    }
                }
                return std::strong_ordering::equal;
            }

            auto hash() const -> std::size_t
            {
                std::size_t h = 0xcbf29ce484222325ull ^ _size;
                for (auto w : _words) {
                    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
                }
                return h;
            }
    };
}

#endif
