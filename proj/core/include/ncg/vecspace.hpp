#ifndef NCG_VECSPACE_HPP
#define NCG_VECSPACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncg/errors.hpp"

namespace ncg {

/// Default bound on the number of vertices a space may produce. Keeps every
/// adjacency row within a small number of machine words; override per call
/// via SpaceParams::vertex_cap.
inline constexpr std::uint64_t kDefaultVertexCap = 65535;

/// Parameters of the underlying space: dimension n and alphabet size q.
///
/// Coefficients are treated as opaque symbols 1..q-1 — adjacency in the
/// component graph depends only on which coordinates are nonzero, so no field
/// arithmetic is ever performed and any q >= 2 is accepted.
struct SpaceParams {
    int n = 1;
    int q = 2;
    std::uint64_t vertex_cap = kDefaultVertexCap;

    /// Throws InvalidArgument / CapExceeded when the parameters are unusable.
    void validate() const;

    /// q^n - 1, the number of nonzero vectors.
    std::uint64_t order() const;
};

/// One nonzero vector, identified by its coordinate digits.
///
/// `index` is the canonical ID: the base-q value of the digit sequence with
/// digit 0 (the coefficient of the first basis vector) least significant.
/// `support` has bit i set iff digit i is nonzero; `weight` is its popcount.
struct VectorLabel {
    std::uint64_t index = 0;
    std::vector<std::uint16_t> digits;
    std::uint64_t support = 0;
    int weight = 0;
};

/// All q^n - 1 nonzero vectors, sorted ascending by index.
std::vector<VectorLabel> enumerate_vertices(const SpaceParams& params);

/// The weight class a vector belongs to: the number of nonzero coordinates,
/// in [1, n].
int weight_class(const VectorLabel& label);

/// Key under which vectors sharing a support collapse into one twin group.
std::uint64_t support_key(const VectorLabel& label);

/// Digit string in basis order, e.g. "110" for the sum of the first two
/// basis vectors when n = 3. Digits are dot-separated once q > 10.
std::string digit_label(std::span<const std::uint16_t> digits, int q);

} // namespace ncg

#endif
