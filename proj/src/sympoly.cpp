#include "dmu/sympoly.hpp"

#include <algorithm>
#include <string>

#include "dmu/errors.hpp"

namespace dmu {

std::vector<Complex> complete_homogeneous(std::span<const Complex> points, std::size_t max_index) {
    if (points.empty()) {
        throw InvalidArgument("complete_homogeneous needs at least one point");
    }
    // Zero variables: the series 1.
    std::vector<Complex> S(max_index + 1);
    S[0] = 1.0;
    // Multiplying by 1/(1 - zeta x): new_S[k] = new_S[k-1] zeta + old_S[k].
    for (Complex zeta : points) {
        for (std::size_t k = 1; k <= max_index; ++k) {
            S[k] += S[k - 1] * zeta;
        }
    }
    return S;
}

std::vector<Complex> elementary(std::span<const Complex> points) {
    if (points.empty()) {
        throw InvalidArgument("elementary needs at least one point");
    }
    std::vector<Complex> T(points.size() + 1);
    T[0] = 1.0;
    std::size_t used = 0;
    for (Complex zeta : points) {
        ++used;
        for (std::size_t m = used; m >= 1; --m) {
            T[m] += T[m - 1] * zeta;
        }
    }
    return T;
}

CoeffSeq expand_q(std::span<const Complex> points) {
    const std::vector<Complex> T = elementary(points);
    const std::size_t s = points.size();
    std::vector<Complex> q(s + 1);
    for (std::size_t j = 0; j <= s; ++j) {
        const std::size_t m = s - j;
        q[j] = (m % 2 == 0) ? T[m] : -T[m];
    }
    return CoeffSeq(std::move(q));
}

SymTables::SymTables(std::vector<Complex> points, std::size_t max_index)
    : points_(std::move(points)),
      S_(complete_homogeneous(points_, max_index)),
      T_(elementary(points_)) {}

Complex SymTables::generating_function(Complex x) const noexcept {
    Complex value = 1.0;
    for (Complex zeta : points_) {
        value /= (1.0 - zeta * x);
    }
    return value;
}

double check_identities(const SymTables& tables) {
    const std::size_t s = tables.atom_count();
    const std::size_t K = tables.max_index();
    if (K < s + 1) {
        throw InvalidArgument("check_identities needs K >= s + 1 (K = " + std::to_string(K) +
                              ", s = " + std::to_string(s) + ")");
    }
    double worst = 0.0;
    for (std::size_t k = 1; k <= K; ++k) {
        Complex acc{};
        for (std::size_t m = 0; m <= std::min(k, s); ++m) {
            const Complex term = tables.T(m) * tables.S(k - m);
            acc += (m % 2 == 0) ? term : -term;
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

}  // namespace dmu
