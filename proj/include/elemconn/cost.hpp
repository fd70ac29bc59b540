#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace elemconn {

// Edge costs are exact rationals; nothing in the library rounds.
using Cost = boost::rational<std::int64_t>;

Cost parse_cost(std::string_view text);
std::string format_cost(const Cost& c);

}  // namespace elemconn
