#ifndef PARROTEVAL_PORTER_HPP
#define PARROTEVAL_PORTER_HPP

#include <string>
#include <string_view>

namespace parroteval {

// Porter stemmer, classic 1980 rules. Expects a lowercase a-z word;
// words shorter than 3 letters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace parroteval

#endif
