#include "dmu/measure.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dmu/errors.hpp"

namespace dmu {

UnitPoint::UnitPoint(Complex value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw InvalidArgument("unit point must be finite");
    }
    const double modulus = std::abs(value);
    if (std::abs(modulus - 1.0) > kModulusTolerance) {
        throw InvalidArgument("point is not on the unit circle (|z| = " +
                              std::to_string(modulus) + ")");
    }
    value_ = value / modulus;
}

UnitPoint UnitPoint::from_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidArgument("angle must be finite");
    }
    return UnitPoint(std::polar(1.0, theta));
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        throw InvalidArgument("measure needs at least one atom");
    }
    points_.reserve(atoms_.size());
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
        const double w = atoms_[k].weight;
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw InvalidArgument("atom " + std::to_string(k) + " has non-positive weight");
        }
        const Complex z = atoms_[k].point.value();
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(points_[j] - z) <= kDistinctness) {
                throw InvalidArgument("atoms " + std::to_string(j) + " and " +
                                      std::to_string(k) + " coincide");
            }
        }
        points_.push_back(z);
    }
}

AtomicMeasure AtomicMeasure::from_points(std::span<const Complex> points) {
    std::vector<Atom> atoms;
    atoms.reserve(points.size());
    for (Complex z : points) {
        atoms.push_back({UnitPoint(z), 1.0});
    }
    return AtomicMeasure(std::move(atoms));
}

AtomicMeasure AtomicMeasure::from_angles(std::span<const double> angles) {
    std::vector<Atom> atoms;
    atoms.reserve(angles.size());
    for (double theta : angles) {
        atoms.push_back({UnitPoint::from_angle(theta), 1.0});
    }
    return AtomicMeasure(std::move(atoms));
}

AtomicMeasure AtomicMeasure::roots_of_unity(std::size_t s) {
    std::vector<Atom> atoms;
    atoms.reserve(s);
    for (std::size_t k = 0; k < s; ++k) {
        // Exact values where cos/sin would leave 1e-17 residue.
        Complex z;
        if (k == 0) {
            z = 1.0;
        } else if (2 * k == s) {
            z = -1.0;
        } else if (4 * k == s) {
            z = Complex(0.0, 1.0);
        } else if (4 * k == 3 * s) {
            z = Complex(0.0, -1.0);
        } else {
            z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                    static_cast<double>(s));
        }
        atoms.push_back({UnitPoint(z), 1.0});
    }
    return AtomicMeasure(std::move(atoms));
}

}  // namespace dmu
