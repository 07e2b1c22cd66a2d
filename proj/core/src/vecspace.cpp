#include "ncg/vecspace.hpp"

#include <bit>

namespace ncg {

void SpaceParams::validate() const {
    if (n < 1) throw InvalidArgument("dimension n must be >= 1");
    if (n > 63) throw InvalidArgument("dimension n must be <= 63");
    if (q < 2) throw InvalidArgument("alphabet size q must be >= 2");
    // q^n - 1 <= vertex_cap, evaluated without overflow
    unsigned __int128 size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<unsigned>(q);
        if (size - 1 > vertex_cap)
            throw CapExceeded("q^n - 1 exceeds the vertex cap (" +
                              std::to_string(vertex_cap) + ")");
    }
}

std::uint64_t SpaceParams::order() const {
    validate();
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) size *= static_cast<std::uint64_t>(q);
    return size - 1;
}

std::vector<VectorLabel> enumerate_vertices(const SpaceParams& params) {
    const std::uint64_t count = params.order();
    std::vector<VectorLabel> out;
    out.reserve(count);
    for (std::uint64_t index = 1; index <= count; ++index) {
        VectorLabel label;
        label.index = index;
        label.digits.resize(params.n);
        std::uint64_t rest = index;
        for (int i = 0; i < params.n; ++i) {
            label.digits[i] = static_cast<std::uint16_t>(rest % params.q);
            rest /= params.q;
            if (label.digits[i] != 0) label.support |= std::uint64_t{1} << i;
        }
        label.weight = std::popcount(label.support);
        out.push_back(std::move(label));
    }
    return out;
}

int weight_class(const VectorLabel& label) { return label.weight; }

std::uint64_t support_key(const VectorLabel& label) { return label.support; }

std::string digit_label(std::span<const std::uint16_t> digits, int q) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (q > 10 && i > 0) out += '.';
        out += std::to_string(digits[i]);
    }
    return out;
}

} // namespace ncg
