#include <abatch/bitvec.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace abatch {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVec BitVec::unit(std::size_t size, std::size_t index) {
    BitVec v(size);
    v.set(index);
    return v;
}

BitVec BitVec::from_indices(std::size_t size, std::span<const std::size_t> indices) {
    BitVec v(size);
    for (std::size_t i : indices) {
        if (i >= size) throw std::out_of_range("BitVec index out of range");
        v.set(i);
    }
    return v;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

void BitVec::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVec::reset() { std::fill(words_.begin(), words_.end(), 0); }

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::intersects(const BitVec& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

bool BitVec::is_subset_of(const BitVec& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~o) return false;
    }
    return true;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

bool BitVec::index_less(const BitVec& other) const {
    std::size_t a = first();
    std::size_t b = other.first();
    while (a < size_ && b < other.size_) {
        if (a != b) return a < b;
        a = next(a);
        b = other.next(b);
    }
    // a proper prefix sorts first
    return a >= size_ && b < other.size_;
}

std::size_t BitVec::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
}

std::size_t BitVec::next(std::size_t i) const {
    ++i;
    if (i >= size_) return size_;
    std::size_t w = i >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        if (++w >= words_.size()) return size_;
        word = words_[w];
    }
}

std::vector<std::size_t> BitVec::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = first(); i < size_; i = next(i)) out.push_back(i);
    return out;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = first(); i < size_; i = next(i)) s[i] = '1';
    return s;
}

std::size_t BitVec::hash() const {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (std::uint64_t w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Gf2Basis::Gf2Basis(std::size_t dim) : dim_(dim) {}

bool Gf2Basis::insert(const BitVec& v, std::size_t tag) {
    if (v.size() != dim_) throw std::invalid_argument("Gf2Basis dimension mismatch");
    BitVec r = v;
    BitVec combo(dim_ + 1);
    for (const Row& row : rows_) {
        if (r.test(row.pivot)) {
            r ^= row.vec;
            combo ^= row.combo;
        }
    }
    if (r.none() || rows_.size() >= dim_) return false;
    const std::size_t slot = tags_.size();
    combo.flip(slot);
    tags_.push_back(tag);
    rows_.push_back(Row{std::move(r), 0, std::move(combo)});
    rows_.back().pivot = rows_.back().vec.first();
    return true;
}

bool Gf2Basis::in_span(const BitVec& v) const {
    BitVec r = v;
    for (const Row& row : rows_) {
        if (r.test(row.pivot)) r ^= row.vec;
    }
    return r.none();
}

bool Gf2Basis::represent(const BitVec& v, std::vector<std::size_t>& tags) const {
    BitVec r = v;
    BitVec combo(dim_ + 1);
    for (const Row& row : rows_) {
        if (r.test(row.pivot)) {
            r ^= row.vec;
            combo ^= row.combo;
        }
    }
    if (r.any()) return false;
    tags.clear();
    for (std::size_t i = combo.first(); i < combo.size(); i = combo.next(i)) tags.push_back(tags_[i]);
    std::sort(tags.begin(), tags.end());
    return true;
}

std::size_t gf2_rank(std::span<const BitVec> vectors) {
    if (vectors.empty()) return 0;
    Gf2Basis basis(vectors.front().size());
    std::size_t tag = 0;
    for (const BitVec& v : vectors) basis.insert(v, tag++);
    return basis.rank();
}

}  // namespace abatch
