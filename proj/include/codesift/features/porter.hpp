#pragma once

#include <string>
#include <string_view>

namespace codesift::features {

/// Porter (1980) suffix-stripping stemmer over lower-case ASCII words.
/// Words of length <= 2 are returned unchanged.
[[nodiscard]] std::string porter_stem(std::string_view word);

} // namespace codesift::features
