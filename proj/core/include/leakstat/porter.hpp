#pragma once

#include <string>
#include <string_view>

namespace leakstat {

// Porter suffix-stripping stemmer (the original five-step algorithm).
// Expects a lowercase alphabetic word; words of length <= 2 are returned
// unchanged.
std::string porter_stem(std::string_view word);

}  // namespace leakstat
