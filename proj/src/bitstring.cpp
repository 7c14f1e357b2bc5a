#include "plateau/bitstring.hpp"

#include "plateau/errors.hpp"

#include <bit>

namespace plateau {

namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

} // namespace

BitString::BitString(std::size_t length) : length_(length), words_(word_count(length), 0)
{
    if (length == 0) {
        throw DomainError("BitString: length must be at least 1");
    }
}

BitString BitString::from_string(std::string_view bits)
{
    BitString out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            out.set(i, true);
        } else if (bits[i] != '0') {
            throw DomainError("BitString: expected only '0' and '1'");
        }
    }
    return out;
}

BitString BitString::from_word(std::uint64_t word, std::size_t length)
{
    if (length > 64) {
        throw DomainError("BitString::from_word: length above 64");
    }
    BitString out(length);
    out.words_[0] = length == 64 ? word : word & ((std::uint64_t{1} << length) - 1);
    return out;
}

BitString BitString::ones(std::size_t length)
{
    BitString out(length);
    for (auto& w : out.words_) {
        w = ~std::uint64_t{0};
    }
    if (const auto tail = length % 64; tail != 0) {
        out.words_.back() = (std::uint64_t{1} << tail) - 1;
    }
    return out;
}

void BitString::set(std::size_t i, bool value)
{
    if (i >= length_) {
        throw DomainError("BitString::set: index out of range");
    }
    const auto mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitString::flip(std::size_t i)
{
    if (i >= length_) {
        throw DomainError("BitString::flip: index out of range");
    }
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

std::size_t BitString::hamming_weight() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::size_t BitString::leading_ones() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_) {
        const auto run = static_cast<std::size_t>(std::countr_one(w));
        total += run;
        if (run < 64) {
            break;
        }
    }
    return total < length_ ? total : length_;
}

BitString& BitString::operator^=(const BitString& other)
{
    if (other.length_ != length_) {
        throw DomainError("BitString: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::string BitString::to_string() const
{
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

} // namespace plateau
