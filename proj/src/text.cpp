#include "braidforce/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace braidforce {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ParseError("malformed token '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

// Parses one token into (index, exponent). `prefix` is 'x' or 's'.
std::pair<int, int> parse_token(std::string_view tok, char prefix) {
  if (tok.front() == prefix) {
    std::string_view rest = tok.substr(1);
    int exponent = 1;
    if (const auto caret = rest.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(rest.substr(caret + 1), tok);
      rest = rest.substr(0, caret);
    }
    const int index = parse_int(rest, tok);
    if (index < 1) throw ParseError("generator index must be positive in '" + std::string(tok) + "'");
    return {index, exponent};
  }
  const int value = parse_int(tok, tok);
  if (value == 0) throw ParseError("generator index 0 is not allowed");
  return {std::abs(value), value > 0 ? 1 : -1};
}

template <typename Emit>
void parse_letters(std::string_view text, char prefix, Emit&& emit) {
  const auto toks = tokens(text);
  if (toks.empty()) throw ParseError("empty word; use 'e' for the identity");
  if (toks.size() == 1 && toks.front() == "e") return;
  for (const auto tok : toks) {
    if (tok == "e") throw ParseError("'e' must stand alone");
    const auto [index, exponent] = parse_token(tok, prefix);
    for (int k = 0; k < std::abs(exponent); ++k) emit(Letter{index, exponent > 0 ? 1 : -1});
  }
}

template <typename Word>
std::string format_letters(const Word& w, char prefix) {
  if (w.letters().empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << prefix << l.index;
    if (l.sign < 0) out << "^-1";
  }
  return out.str();
}

}  // namespace

FreeWord parse_free_word(std::string_view text, int rank) {
  std::vector<Letter> letters;
  parse_letters(text, 'x', [&](const Letter& l) {
    if (l.index > rank) {
      throw ParseError("generator x" + std::to_string(l.index) + " exceeds rank " + std::to_string(rank));
    }
    letters.push_back(l);
  });
  return FreeWord::reduce(rank, letters);
}

std::string format_free_word(const FreeWord& w) { return format_letters(w, 'x'); }

BraidWord parse_braid_word(std::string_view text, int strands, std::size_t max_length) {
  if (strands < 1) throw ParseError("strand count must be positive");
  std::vector<Letter> letters;
  parse_letters(text, 's', [&](const Letter& l) {
    if (l.index > strands - 1) {
      throw ParseError("generator s" + std::to_string(l.index) + " invalid on " + std::to_string(strands) +
                       " strands");
    }
    letters.push_back(l);
    if (letters.size() > max_length) {
      throw ParseError("braid word longer than the configured cap of " + std::to_string(max_length) + " letters");
    }
  });
  return BraidWord(strands, std::move(letters));
}

std::string format_braid_word(const BraidWord& b) { return format_letters(b, 's'); }

std::string format_abelian(const AbelianVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace braidforce
