#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ics {

/// Bit-indexed subset of a poset's ground set {0..n-1}.
///
/// Backed by 64-bit words. Every set-valued quantity in the library (ideals,
/// filters, antichains, interval-closed sets, regions) is a Subset. The owning
/// poset's identity is carried along so that masks cannot silently cross
/// between posets.
class Subset {
public:
    Subset() = default;

    Subset(int universe_size, std::uint64_t poset_id)
        : n_(universe_size), id_(poset_id),
          w_((static_cast<std::size_t>(universe_size) + 63) / 64, 0) {
        if (universe_size < 0)
            throw std::invalid_argument("Subset: negative universe size");
    }

    int universe_size() const { return n_; }
    std::uint64_t poset_id() const { return id_; }

    bool test(int i) const {
        check_index(i);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(int i) {
        check_index(i);
        w_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    /// True if every element of `other` is in *this.
    bool contains(const Subset& other) const {
        check_compat(other);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (other.w_[k] & ~w_[k]) return false;
        return true;
    }

    bool intersects(const Subset& other) const {
        check_compat(other);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & other.w_[k]) return true;
        return false;
    }

    Subset operator|(const Subset& o) const {
        check_compat(o);
        Subset r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] |= o.w_[k];
        return r;
    }

    Subset operator&(const Subset& o) const {
        check_compat(o);
        Subset r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
        return r;
    }

    /// Set difference.
    Subset operator-(const Subset& o) const {
        check_compat(o);
        Subset r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }

    Subset& operator|=(const Subset& o) {
        check_compat(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    Subset& operator&=(const Subset& o) {
        check_compat(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    Subset& operator-=(const Subset& o) {
        check_compat(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    /// Complement within the universe.
    Subset complement() const {
        Subset r = *this;
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const Subset& o) const {
        return n_ == o.n_ && w_ == o.w_;
    }
    bool operator!=(const Subset& o) const { return !(*this == o); }

    /// Mask-value order: the subset read as an integer with element i at bit i.
    /// This is the canonical enumeration and representative order everywhere.
    bool operator<(const Subset& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t k = w_.size(); k-- > 0;)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64) + b);
                w &= w - 1;
            }
        }
    }

    /// First set bit, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    /// Reinterprets this mask as belonging to another poset of the same size.
    /// Used when moving interval-closed sets between a poset and its dual.
    Subset retagged(std::uint64_t new_id) const {
        Subset r = *this;
        r.id_ = new_id;
        return r;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("Subset: element index out of range");
    }

    void check_compat(const Subset& o) const {
        if (n_ != o.n_ || id_ != o.id_)
            throw std::invalid_argument("Subset: operands belong to different posets");
    }

    void trim() {
        if (w_.empty()) return;
        int rem = n_ & 63;
        if (rem) w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int n_ = 0;
    std::uint64_t id_ = 0;
    std::vector<std::uint64_t> w_;
};

struct SubsetHash {
    std::size_t operator()(const Subset& s) const { return s.hash(); }
};

} // namespace ics
