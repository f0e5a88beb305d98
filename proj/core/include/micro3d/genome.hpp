#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "micro3d/potential_fields.hpp"
#include "micro3d/rng.hpp"

namespace micro3d {

// 226-bit binary chromosome. Layout, most-significant bit first within each
// field:
//   bits   0..207  thirteen (c: 12 bits, e: 4 bits) groups in PFIndex order
//   bits 208..211  r    (4 bits, round(v/15 * 8))
//   bits 212..215  i_f  (4 bits, v/15)
//   bits 216..218  w1   (3 bits, v/7)
//   bits 219..221  w2   (3 bits, v/7)
//   bits 222..225  w3   (4 bits, v/15 * 8)
// c decodes linearly onto [-10000, 10000], e exactly onto the integers
// [-7, 8].
struct Genome {
    static constexpr int kLength = 226;

    std::vector<std::uint8_t> bits;  // values 0 or 1

    Genome() : bits(kLength, 0) {}

    bool valid_length() const { return static_cast<int>(bits.size()) == kLength; }

    // 226-character 0/1 string, bit 0 first.
    std::string to_string() const;
    static Genome from_string(std::string_view s);  // throws on bad input

    bool operator==(const Genome&) const = default;
};

// Decode to controller parameters; total on every length-226 input.
// Throws std::invalid_argument on wrong length.
MicroParams decode(const Genome& g);

// Nearest-quantized inverse of decode. decode(encode(p)) is within one
// quantization step of p per field, and decode∘encode∘decode == decode.
// Throws std::invalid_argument when a parameter is out of range.
Genome encode(const MicroParams& p);

// 226 iid uniform bits from the given stream.
Genome random_genome(Rng& rng);

} // namespace micro3d
