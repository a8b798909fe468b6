#include "flagq/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagq {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    if (n < 1)
        throw std::invalid_argument("permutation must have size >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("one-line notation is not a bijection on 1..n");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::adjacent_transposition(int i, int n) {
    return transposition(i, i + 1, n);
}

Permutation Permutation::transposition(int i, int j, int n) {
    if (i < 1 || j < 1 || i >= j || j > n)
        throw std::invalid_argument("transposition requires 1 <= i < j <= n");
    auto w = identity(n);
    std::swap(w.images_[static_cast<std::size_t>(i) - 1], w.images_[static_cast<std::size_t>(j) - 1]);
    return w;
}

Permutation Permutation::longest_element(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        im[static_cast<std::size_t>(i) - 1] = n + 1 - i;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i)
        im[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(im));
}

int Permutation::length() const {
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j])
                ++count;
    return count;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("permutation product requires equal n");
    std::vector<int> im(static_cast<std::size_t>(u.size()));
    for (int i = 1; i <= u.size(); ++i)
        im[static_cast<std::size_t>(i) - 1] = u(v(i));
    return Permutation(std::move(im));
}

std::vector<int> reduced_word(const Permutation& w) {
    // Peel the leftmost descent of w; the letters come out in reverse.
    std::vector<int> letters;
    std::vector<int> im = w.images();
    const int n = w.size();
    for (;;) {
        int descent = 0;
        for (int i = 1; i < n; ++i) {
            if (im[static_cast<std::size_t>(i) - 1] > im[static_cast<std::size_t>(i)]) {
                descent = i;
                break;
            }
        }
        if (descent == 0)
            break;
        std::swap(im[static_cast<std::size_t>(descent) - 1], im[static_cast<std::size_t>(descent)]);
        letters.push_back(descent);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

std::pair<Permutation, int> right_transposition(const Permutation& w, int i, int j) {
    if (i < 1 || j < 1 || i >= j || j > w.size())
        throw std::invalid_argument("right_transposition requires 1 <= i < j <= n");
    std::vector<int> im = w.images();
    std::swap(im[static_cast<std::size_t>(i) - 1], im[static_cast<std::size_t>(j) - 1]);
    Permutation moved(std::move(im));
    const int delta = moved.length() - w.length();
    return {std::move(moved), delta};
}

int transposition_length(int i, int j) {
    if (i >= j || i < 1)
        throw std::invalid_argument("transposition_length requires 1 <= i < j");
    return 2 * (j - i) - 1;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1)
        throw std::invalid_argument("all_permutations requires n >= 1");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> result;
    do {
        result.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return result;
}

namespace {

std::string trimmed(std::string_view text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1])))
        --b;
    return std::string(text.substr(a, b - a));
}

} // namespace

Permutation parse_permutation(std::string_view text, int n) {
    const std::string body = trimmed(text);
    if (body.empty())
        throw std::invalid_argument("empty permutation");
    if (body == "id")
        return Permutation::identity(n);
    if (body.find('s') != std::string::npos) {
        // word form: s3*s1*s2, '*' or whitespace separated
        Permutation acc = Permutation::identity(n);
        std::size_t pos = 0;
        while (pos < body.size()) {
            char c = body[pos];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
                ++pos;
                continue;
            }
            if (c != 's')
                throw std::invalid_argument("bad permutation word: " + body);
            ++pos;
            std::size_t start = pos;
            while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
                ++pos;
            if (pos == start)
                throw std::invalid_argument("bad generator index in: " + body);
            const int i = std::stoi(body.substr(start, pos - start));
            if (i < 1 || i >= n)
                throw std::invalid_argument("generator index out of range in: " + body);
            acc = acc * Permutation::adjacent_transposition(i, n);
        }
        return acc;
    }
    std::istringstream in(body);
    std::vector<int> im;
    int v = 0;
    while (in >> v)
        im.push_back(v);
    if (!in.eof())
        throw std::invalid_argument("bad one-line permutation: " + body);
    if (static_cast<int>(im.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " entries in: " + body);
    return Permutation(std::move(im));
}

std::string to_string(const Permutation& w) {
    std::string out;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1)
            out += ' ';
        out += std::to_string(w(i));
    }
    return out;
}

} // namespace flagq
