#include "legdet/matrices.hpp"

namespace legdet {

namespace {

std::int64_t as_signed(std::uint64_t x) { return static_cast<std::int64_t>(x); }

} // namespace

IntMatrix build_cp(const OddPrime& p) {
    const auto dim = static_cast<Eigen::Index>(p.value() - 1);
    IntMatrix m(dim, dim);
    for (Eigen::Index i = 1; i <= dim; ++i)
        for (Eigen::Index j = 1; j <= dim; ++j) m(i - 1, j - 1) = legendre(j - i, p);
    return m;
}

IntMatrix build_ep(const OddPrime& p) {
    const auto n = as_signed(p.half());
    IntMatrix m(n + 1, n + 1);
    for (std::int64_t i = 0; i <= n; ++i)
        for (std::int64_t j = 0; j <= n; ++j) m(i, j) = legendre(j - i, p);
    return m;
}

IntMatrix build_mp(const OddPrime& p) {
    const auto n = as_signed(p.half());
    IntMatrix m(n + 1, n + 1);
    for (std::int64_t j = 0; j <= n; ++j) m(0, j) = 1;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 0; j <= n; ++j) m(i, j) = legendre(i - j, p);
    return m;
}

IntMatrix build_matrix(MatrixKind kind, const OddPrime& p) {
    switch (kind) {
    case MatrixKind::Cp: return build_cp(p);
    case MatrixKind::Ep: return build_ep(p);
    case MatrixKind::Mp: return build_mp(p);
    }
    throw std::invalid_argument("unknown matrix kind");
}

} // namespace legdet
