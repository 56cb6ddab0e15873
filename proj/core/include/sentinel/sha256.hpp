#pragma once

#include <cstddef>
#include <string_view>

#include "sentinel/bytes.hpp"

namespace sentinel {

Digest sha256(const uint8_t* data, size_t len);

inline Digest sha256(const Bytes& b) { return sha256(b.data(), b.size()); }

inline Digest sha256(std::string_view s) {
    return sha256(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

}  // namespace sentinel
