#ifndef PARROTEVAL_TEXT_HPP
#define PARROTEVAL_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace parroteval {

// A token is a non-empty, whitespace-free, lowercase string; a token
// sequence is the unit every metric and transform consumes.
using Token = std::string;
using TokenSeq = std::vector<Token>;

// Lowercases, applies Unicode canonical composition (NFC over the
// decomposed, case-mapped text), collapses whitespace runs to single
// spaces and trims the ends. Canonically-equivalent inputs normalize to
// identical bytes. Invalid UTF-8 bytes become U+FFFD.
std::string normalize(std::string_view raw);

// Splits normalized text on whitespace and detaches .,!?;:"'()[] as
// standalone tokens. Contraction suffixes ('s 'm 'd 'll 're 've and n't)
// stay attached as their own token, so pre-split dataset text such as
// "i 'm able" round-trips unchanged.
TokenSeq tokenize(std::string_view text);

// Joins tokens with single spaces. tokenize(detokenize(t)) == t for any
// tokenizer output.
std::string detokenize(const TokenSeq& tokens);

// Porter-stemmed form; tokens containing anything outside [a-z] pass
// through unchanged.
Token stem(const Token& token);

}  // namespace parroteval

#endif
