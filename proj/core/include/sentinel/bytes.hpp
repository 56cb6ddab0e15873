#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sentinel {

using Bytes = std::vector<uint8_t>;
using Digest = std::array<uint8_t, 32>;

std::string to_hex(const uint8_t* data, size_t len);

inline std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }
inline std::string to_hex(const Digest& d) { return to_hex(d.data(), d.size()); }

// throws on odd length or non-hex digit
Bytes from_hex(std::string_view hex);

inline void append_u32le(Bytes& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

inline void append_u64le(Bytes& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

inline void append_i32le(Bytes& out, int32_t v) { append_u32le(out, uint32_t(v)); }

inline uint32_t read_u32le(const uint8_t* p) {
    return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 | uint32_t(p[3]) << 24;
}

inline uint64_t read_u64le(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | p[i];
    return v;
}

inline void append_f64le(Bytes& out, double v) { append_u64le(out, std::bit_cast<uint64_t>(v)); }

inline double read_f64le(const uint8_t* p) { return std::bit_cast<double>(read_u64le(p)); }

inline void append_bytes(Bytes& out, const uint8_t* p, size_t n) {
    out.insert(out.end(), p, p + n);
}

inline void append_bytes(Bytes& out, const Bytes& b) { append_bytes(out, b.data(), b.size()); }
inline void append_bytes(Bytes& out, const Digest& d) { append_bytes(out, d.data(), d.size()); }

inline void append_string(Bytes& out, std::string_view s) {
    append_u32le(out, uint32_t(s.size()));
    append_bytes(out, reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

}  // namespace sentinel
