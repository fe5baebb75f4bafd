#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dmu {

using Complex = std::complex<double>;

/// A point on the unit circle. Construction accepts values within 1e-12
/// of unit modulus and renormalizes them.
class UnitPoint {
public:
    static constexpr double kModulusTolerance = 1e-12;

    explicit UnitPoint(Complex value);
    static UnitPoint from_angle(double theta);

    Complex value() const noexcept { return value_; }
    operator Complex() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)

private:
    Complex value_;
};

struct Atom {
    UnitPoint point;
    double weight;
};

/// mu = sum_j c_j delta_{zeta_j}: s >= 1 distinct unit points with positive
/// weights. The weights are validated and carried along but do not enter
/// the norm.
class AtomicMeasure {
public:
    static constexpr double kDistinctness = 1e-9;

    explicit AtomicMeasure(std::vector<Atom> atoms);
    /// Unit weights.
    static AtomicMeasure from_points(std::span<const Complex> points);
    static AtomicMeasure from_angles(std::span<const double> angles);
    /// The s-th roots of unity.
    static AtomicMeasure roots_of_unity(std::size_t s);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const std::vector<Complex>& points() const noexcept { return points_; }
    Complex point(std::size_t k) const { return points_.at(k); }

private:
    std::vector<Atom> atoms_;
    std::vector<Complex> points_;
};

}  // namespace dmu
