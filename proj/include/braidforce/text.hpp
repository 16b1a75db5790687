#ifndef BRAIDFORCE_TEXT_HPP
#define BRAIDFORCE_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "braidforce/braid.hpp"
#include "braidforce/free_group.hpp"

namespace braidforce {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Free words: whitespace-separated `x<k>`, `x<k>^-1` (any `^<int>` power is
// accepted) or signed integers; `e` is the empty word.
FreeWord parse_free_word(std::string_view text, int rank);
std::string format_free_word(const FreeWord& w);

// Braid words: `s<k>`, `s<k>^-1` or signed integers; `e` is the empty braid.
// Words longer than max_length letters are rejected.
BraidWord parse_braid_word(std::string_view text, int strands, std::size_t max_length = 128);
std::string format_braid_word(const BraidWord& b);

std::string format_abelian(const AbelianVector& v);

}  // namespace braidforce

#endif  // BRAIDFORCE_TEXT_HPP
