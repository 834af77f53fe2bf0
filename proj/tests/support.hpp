#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "parhom/graph.hpp"

namespace support {

inline auto code_is(parhom::errc c) {
    return Catch::Matchers::Predicate<parhom::error>(
        [c](const parhom::error& e) { return e.code == c; });
}

}  // namespace support
