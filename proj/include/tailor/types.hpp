#pragma once

#include <cstdint>

namespace tailor {

using ArticleId = std::uint64_t;
using CategoryId = std::uint64_t;

}  // namespace tailor
