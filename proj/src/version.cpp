#include "cosetgrowth/version.hpp"

namespace cosetgrowth {

std::string_view version() noexcept { return COSETGROWTH_VERSION; }

}  // namespace cosetgrowth
