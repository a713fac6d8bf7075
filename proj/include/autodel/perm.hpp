#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "autodel/errors.hpp"

namespace autodel {

// Permutation of 0..n-1 stored as an image array.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int x : img_) {
            if (x < 0 || x >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(x)])
                throw input_error("permutation image array is not a bijection");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }

    static Permutation identity(int n) {
        Permutation p;
        p.img_.resize(static_cast<std::size_t>(n));
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int x = 0; x < degree(); ++x)
            if (img_[static_cast<std::size_t>(x)] != x) return false;
        return true;
    }

    // this o other: apply `other` first.
    Permutation compose(const Permutation& other) const {
        Permutation out;
        out.img_.resize(img_.size());
        for (int x = 0; x < degree(); ++x)
            out.img_[static_cast<std::size_t>(x)] = img_[static_cast<std::size_t>(other[x])];
        return out;
    }

    Permutation inverse() const {
        Permutation out;
        out.img_.resize(img_.size());
        for (int x = 0; x < degree(); ++x) out.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = x;
        return out;
    }

    // Disjoint cycle notation, fixed points omitted; "()" for the identity.
    std::string cycle_string() const {
        std::string out;
        std::vector<char> done(img_.size(), 0);
        for (int x = 0; x < degree(); ++x) {
            if (done[static_cast<std::size_t>(x)] || img_[static_cast<std::size_t>(x)] == x) continue;
            out += "(";
            int y = x;
            bool first = true;
            while (!done[static_cast<std::size_t>(y)]) {
                done[static_cast<std::size_t>(y)] = 1;
                if (!first) out += " ";
                out += std::to_string(y);
                first = false;
                y = img_[static_cast<std::size_t>(y)];
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }

    auto operator<=>(const Permutation& other) const = default;

private:
    std::vector<int> img_;
};

} // namespace autodel
