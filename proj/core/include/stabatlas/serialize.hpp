#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabatlas {

using BigInt = boost::multiprecision::cpp_int;

/* Little-endian base-128 varints with zigzag mapping for signed values.
   Used for every binary encoding in the library so that equal objects
   always produce identical byte strings. */

inline void put_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

inline std::uint64_t get_varint(const std::string& in, std::size_t& pos) {
    std::uint64_t v = 0;
    int shift = 0;
    while (true) {
        if (pos >= in.size()) throw std::runtime_error("varint: truncated input");
        auto byte = static_cast<std::uint8_t>(in[pos++]);
        v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
        if (!(byte & 0x80)) return v;
        shift += 7;
        if (shift > 63) throw std::runtime_error("varint: overlong encoding");
    }
}

inline std::uint64_t zigzag(std::int64_t v) {
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

inline std::int64_t unzigzag(std::uint64_t v) {
    return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

/* Big integers are stored as a sign-carrying varint when they fit in 64 bits
   (the overwhelmingly common case) and otherwise as a length-prefixed
   magnitude in base-256. The one-byte tag keeps decoding unambiguous. */

inline void put_bigint(std::string& out, const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        out.push_back(0);
        put_varint(out, zigzag(static_cast<std::int64_t>(v)));
        return;
    }
    out.push_back(v < 0 ? 2 : 1);
    BigInt mag = v < 0 ? BigInt(-v) : v;
    std::string bytes;
    while (mag > 0) {
        bytes.push_back(static_cast<char>(static_cast<std::uint8_t>(mag & 0xff)));
        mag >>= 8;
    }
    put_varint(out, bytes.size());
    out += bytes;
}

inline BigInt get_bigint(const std::string& in, std::size_t& pos) {
    if (pos >= in.size()) throw std::runtime_error("bigint: truncated input");
    auto tag = static_cast<std::uint8_t>(in[pos++]);
    if (tag == 0) return BigInt(unzigzag(get_varint(in, pos)));
    if (tag != 1 && tag != 2) throw std::runtime_error("bigint: bad tag");
    auto len = get_varint(in, pos);
    if (pos + len > in.size()) throw std::runtime_error("bigint: truncated magnitude");
    BigInt mag = 0;
    for (std::size_t i = len; i-- > 0;)
        mag = (mag << 8) | static_cast<std::uint8_t>(in[pos + i]);
    pos += len;
    return tag == 2 ? BigInt(-mag) : mag;
}

/* FNV-1a, the deterministic 64-bit hash used for graph certificates and
   cache keys. Never std::hash: that one may differ between runs. */
inline std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (char c : bytes) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace stabatlas
