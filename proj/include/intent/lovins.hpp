#pragma once

#include <string>

namespace intent {

// Lovins (1968) longest-match suffix stemmer: one pass over the ending
// table (longest ending whose context condition holds, stem kept >= 2
// chars), then undoubling and the respelling rules. Tokens containing
// anything outside [a-z'] are returned unchanged.
std::string lovins_stem(const std::string& token);

}  // namespace intent
