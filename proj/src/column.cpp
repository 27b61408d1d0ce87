#include "fracfact/column.hpp"

#include <stdexcept>

namespace fracfact {

std::string factor_label(int index) {
    if (index < 0) throw std::invalid_argument("factor index must be nonnegative");
    if (index < static_cast<int>(kFactorLetters.size()))
        return std::string(1, kFactorLetters[index]);
    // Letters run out after Z; fall back to the B_j index notation.
    return "[B" + std::to_string(index + 1) + "]";
}

std::string column_to_string(Column c) {
    if (c == kIdentity) return "I";
    std::string out;
    for (int j = 0; j < kMaxBasics; ++j)
        if (c >> j & 1u) out += kFactorLetters[j];
    return out;
}

Column parse_column(std::string_view word, int m) {
    if (word.empty()) throw std::invalid_argument("empty column word");
    if (word == "I") return kIdentity;
    Column c = 0;
    for (char ch : word) {
        auto pos = kFactorLetters.find(ch);
        if (pos == std::string_view::npos)
            throw std::invalid_argument(std::string("invalid factor letter '") + ch +
                                        "' in column \"" + std::string(word) + "\"");
        if (static_cast<int>(pos) >= m)
            throw std::invalid_argument(std::string("letter '") + ch + "' is beyond the " +
                                        std::to_string(m) + " declared basic factors");
        Column bit = 1u << pos;
        if (c & bit)
            throw std::invalid_argument("repeated letter '" + std::string(1, ch) +
                                        "' in column \"" + std::string(word) + "\"");
        c |= bit;
    }
    return c;
}

bool column_display_less(Column a, Column b) {
    int la = column_length(a), lb = column_length(b);
    if (la != lb) return la < lb;
    // Same length: alphabetical word order == lexicographic on bit indices,
    // which for equal popcount is plain integer order read from the low bit.
    // Compare the lowest differing letter.
    Column x = a ^ b;
    if (x == 0) return false;
    return ((x & -x) & a) != 0;  // the smaller word owns the lowest differing letter
}

}  // namespace fracfact
