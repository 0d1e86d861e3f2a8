#pragma once

#include <string>
#include <string_view>

namespace cpeg {

/// Decodes UTF-8 to scalar values; throws Error on malformed input,
/// reporting the byte offset.
std::u32string utf8_decode(std::string_view text);

std::string utf8_encode(char32_t c);
std::string utf8_encode(std::u32string_view text);

}  // namespace cpeg
