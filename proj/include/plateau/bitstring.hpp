#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plateau {

/// Fixed-length 0/1 vector, word-packed. Bit i lives in word i/64 at position i%64;
/// index 0 is the leftmost bit of the textual form.
class BitString {
public:
    explicit BitString(std::size_t length);

    static BitString from_string(std::string_view bits);
    static BitString from_word(std::uint64_t word, std::size_t length);
    static BitString ones(std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return length_; }
    [[nodiscard]] bool operator[](std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    [[nodiscard]] std::size_t hamming_weight() const noexcept;
    /// Number of consecutive ones starting at index 0.
    [[nodiscard]] std::size_t leading_ones() const noexcept;
    [[nodiscard]] bool all_ones() const noexcept { return leading_ones() == length_; }

    BitString& operator^=(const BitString& other);
    friend BitString operator^(BitString lhs, const BitString& rhs) { return lhs ^= rhs; }
    friend bool operator==(const BitString&, const BitString&) = default;

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() noexcept { return words_; }
    /// Low 64 bits; only meaningful when size() <= 64.
    [[nodiscard]] std::uint64_t to_word() const noexcept { return words_.front(); }
    [[nodiscard]] std::string to_string() const;

private:
    std::size_t length_;
    std::vector<std::uint64_t> words_;
};

} // namespace plateau
