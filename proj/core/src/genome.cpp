#include "micro3d/genome.hpp"

#include <cmath>
#include <stdexcept>

namespace micro3d {

namespace {

constexpr int kCoeffBits = 12;
constexpr int kExponentBits = 4;
constexpr int kCoeffMax = (1 << kCoeffBits) - 1;  // 4095

std::uint32_t read_bits(const Genome& g, int offset, int width) {
    std::uint32_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | g.bits[offset + i];
    return v;
}

void write_bits(Genome& g, int offset, int width, std::uint32_t v) {
    for (int i = width - 1; i >= 0; --i) {
        g.bits[offset + i] = v & 1;
        v >>= 1;
    }
}

long quantize(double value, double lo, double hi, int levels_minus_one, const char* field) {
    if (!(value >= lo && value <= hi))
        throw std::invalid_argument(std::string("parameter out of range: ") + field);
    return std::lround((value - lo) / (hi - lo) * levels_minus_one);
}

} // namespace

std::string Genome::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

Genome Genome::from_string(std::string_view s) {
    Genome g;
    g.bits.assign(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            g.bits[i] = 1;
        else if (s[i] != '0')
            throw std::invalid_argument("genome string must contain only 0 and 1");
    }
    if (!g.valid_length()) throw std::invalid_argument("genome string must have 226 bits");
    return g;
}

MicroParams decode(const Genome& g) {
    if (!g.valid_length()) throw std::invalid_argument("genome must have exactly 226 bits");

    MicroParams p;
    int pos = 0;
    for (auto& term : p.pf) {
        const auto c = read_bits(g, pos, kCoeffBits);
        const auto e = read_bits(g, pos + kCoeffBits, kExponentBits);
        term.coeff = -10000.0 + static_cast<double>(c) / kCoeffMax * 20000.0;
        term.exponent = -7 + static_cast<int>(e);
        pos += kCoeffBits + kExponentBits;
    }

    p.im.range_cells = static_cast<int>(std::lround(read_bits(g, pos, 4) / 15.0 * 8.0));
    p.im.falloff = read_bits(g, pos + 4, 4) / 15.0;
    p.im.health_weight = read_bits(g, pos + 8, 3) / 7.0;
    p.im.cooldown_weight = read_bits(g, pos + 11, 3) / 7.0;
    p.im.bias = read_bits(g, pos + 14, 4) / 15.0 * 8.0;
    return p;
}

Genome encode(const MicroParams& p) {
    Genome g;
    int pos = 0;
    for (const auto& term : p.pf) {
        write_bits(g, pos, kCoeffBits,
                   quantize(term.coeff, -10000.0, 10000.0, kCoeffMax, "c"));
        if (term.exponent < -7 || term.exponent > 8)
            throw std::invalid_argument("parameter out of range: e");
        write_bits(g, pos + kCoeffBits, kExponentBits, term.exponent + 7);
        pos += kCoeffBits + kExponentBits;
    }

    write_bits(g, pos, 4, quantize(p.im.range_cells, 0.0, 8.0, 15, "r"));
    write_bits(g, pos + 4, 4, quantize(p.im.falloff, 0.0, 1.0, 15, "i_f"));
    write_bits(g, pos + 8, 3, quantize(p.im.health_weight, 0.0, 1.0, 7, "w1"));
    write_bits(g, pos + 11, 3, quantize(p.im.cooldown_weight, 0.0, 1.0, 7, "w2"));
    write_bits(g, pos + 14, 4, quantize(p.im.bias, 0.0, 8.0, 15, "w3"));
    return g;
}

Genome random_genome(Rng& rng) {
    Genome g;
    for (auto& b : g.bits) b = static_cast<std::uint8_t>(rng.next_u64() >> 63);
    return g;
}

} // namespace micro3d
