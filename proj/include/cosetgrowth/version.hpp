#pragma once

#include <string_view>

namespace cosetgrowth {

std::string_view version() noexcept;

}  // namespace cosetgrowth
