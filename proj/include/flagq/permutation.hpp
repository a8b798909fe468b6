#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagq {

// Element of the symmetric group S_n in one-line notation: images()[i-1]
// is w(i), with positions and values 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation adjacent_transposition(int i, int n); // s_i
    static Permutation transposition(int i, int j, int n);   // t_{ij}
    static Permutation longest_element(int n);                // w_o

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    // Number of inversions; equals the length of any reduced word.
    int length() const;

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

// Composition u-after-v: (u*v)(i) = u(v(i)).
Permutation operator*(const Permutation& u, const Permutation& v);

// Deterministic reduced word (i_1,...,i_l) with s_{i_1}...s_{i_l} = w and
// l = length(w), obtained by repeatedly peeling the leftmost descent.
std::vector<int> reduced_word(const Permutation& w);

// Right multiplication by t_{ij}: swaps the entries at positions i and j.
// Returns (w t_{ij}, length(w t_{ij}) - length(w)).
std::pair<Permutation, int> right_transposition(const Permutation& w, int i, int j);

// length(t_{ij}) = 2(j-i) - 1 for i < j.
int transposition_length(int i, int j);

// All n! elements of S_n, lexicographic in one-line notation.
std::vector<Permutation> all_permutations(int n);

// Accepts one-line form "2 3 1" or word form "s1*s2" (also "id").
Permutation parse_permutation(std::string_view text, int n);

std::string to_string(const Permutation& w);

} // namespace flagq
