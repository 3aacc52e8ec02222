#pragma once

// Independent reference for blade products: represents blades as explicit
// generator words and sorts them by adjacent transpositions, counting swaps,
// then contracts adjacent repeats against the metric. Shares no code with the
// bitmask kernel.

#include "sta/algebra/signature.hpp"

#include <utility>
#include <vector>

namespace sta::oracle {

struct WordProduct {
    int sign = 1;
    unsigned mask = 0;
};

inline std::vector<int> blade_word(unsigned mask, int n) {
    std::vector<int> word;
    for (int k = 0; k < n; ++k) {
        if (mask & (1U << k)) word.push_back(k);
    }
    return word;
}

inline WordProduct multiply_words(const Signature& sig, unsigned a, unsigned b) {
    std::vector<int> word = blade_word(a, sig.dimension());
    const std::vector<int> right = blade_word(b, sig.dimension());
    word.insert(word.end(), right.begin(), right.end());

    int sign = 1;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k] > word[k + 1]) {
                std::swap(word[k], word[k + 1]);
                sign = -sign;
                swapped = true;
            }
        }
    }

    WordProduct out;
    std::size_t k = 0;
    while (k < word.size()) {
        if (k + 1 < word.size() && word[k] == word[k + 1]) {
            sign *= sig.metric(word[k]);
            k += 2;
        } else {
            out.mask |= 1U << word[k];
            ++k;
        }
    }
    out.sign = sign;
    return out;
}

}  // namespace sta::oracle
