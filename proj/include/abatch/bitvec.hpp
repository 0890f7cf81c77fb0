#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abatch {

/**
 * Fixed-length vector over GF(2), packed into 64-bit words.
 *
 * Used both as a codeword/row vector and as a coordinate set (bit j set
 * means coordinate j belongs to the set). Bits past size() are always zero,
 * so word-wise comparisons and popcounts are exact.
 */
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    static BitVec unit(std::size_t size, std::size_t index);
    static BitVec from_indices(std::size_t size, std::span<const std::size_t> indices);
    /// Parses a string of '0'/'1' characters; throws std::invalid_argument otherwise.
    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void reset();

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    /// True iff this and other share at least one set bit.
    bool intersects(const BitVec& other) const;
    /// True iff every set bit of this is also set in other.
    bool is_subset_of(const BitVec& other) const;

    BitVec& operator^=(const BitVec& other);
    BitVec& operator|=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    bool operator==(const BitVec& other) const = default;
    /// Lexicographic order on the sorted list of set indices.
    bool index_less(const BitVec& other) const;

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const;
    /// Index of the lowest set bit strictly after i, or size() when none.
    std::size_t next(std::size_t i) const;
    std::vector<std::size_t> indices() const;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::size_t hash() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

/**
 * Incremental GF(2) basis with pivot tracking.
 *
 * Each inserted vector is reduced against the stored basis; independent
 * vectors are kept together with the set of inserted positions they were
 * built from, so represent() can return an explicit combination.
 */
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t dim);

    /// Inserts v (tagged with a caller-chosen index). Returns false when v is
    /// already in the span.
    bool insert(const BitVec& v, std::size_t tag);
    bool in_span(const BitVec& v) const;
    /// Fills tags with inserted vectors summing to v; false when v is outside
    /// the span.
    bool represent(const BitVec& v, std::vector<std::size_t>& tags) const;

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        BitVec vec;
        std::size_t pivot;
        BitVec combo;  // over insertion order
    };
    std::size_t dim_;
    std::vector<Row> rows_;
    std::vector<std::size_t> tags_;
};

/// Rank over GF(2) of a list of equal-length vectors.
std::size_t gf2_rank(std::span<const BitVec> vectors);

}  // namespace abatch
