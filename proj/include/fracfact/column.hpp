#ifndef FRACFACT_COLUMN_HPP
#define FRACFACT_COLUMN_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace fracfact {

/// A column of the 2^m design table, encoded as an m-bit vector: bit j set
/// means basic factor j is a letter of the column. The zero value stands for
/// the identity column I (all +1 signs); it is a valid product result but is
/// never stored inside a Design or ColumnSet.
using Column = std::uint32_t;

inline constexpr Column kIdentity = 0;

/// Largest number of basic factors supported by the column encoding.
inline constexpr int kMaxBasics = 16;

/// Factor letters in order; 'I' is reserved for the identity column and is
/// skipped, matching the usual design-table convention.
inline constexpr std::string_view kFactorLetters = "ABCDEFGHJKLMNOPQRSTUVWXYZ";

/// Group product of two columns (elementwise sign product = XOR of letter
/// sets). Returns kIdentity when a == b.
inline constexpr Column column_product(Column a, Column b) { return a ^ b; }

/// Number of letters in the column's word; 0 for the identity.
inline constexpr int column_length(Column c) { return std::popcount(c); }

inline constexpr bool column_is_even(Column c) { return column_length(c) % 2 == 0; }
inline constexpr bool column_is_odd(Column c) { return column_length(c) % 2 == 1; }

/// Label for the factor at position `index` (basics first, added factors
/// after). Positions beyond the letter supply render as "[B<index+1>]".
std::string factor_label(int index);

/// "ABC" for bits {0,1,2}; "I" for the identity.
std::string column_to_string(Column c);

/// Parse a single column word such as "ABC", or "I" for the identity.
/// Rejects repeated letters, unknown characters, and letters beyond the
/// declared number of basics m.
Column parse_column(std::string_view word, int m);

/// Compare by (length, alphabetical word), the order design tables are
/// conventionally listed in: A,B,C,D,AB,AC,AD,BC,...,ABCD.
bool column_display_less(Column a, Column b);

}  // namespace fracfact

#endif
