#pragma once

#include <complex>
#include <numbers>

namespace ncgear {

/// Points and vectors of the plane are complex numbers; multiplication by
/// e^{i*theta} rotates, conjugation mirrors on the real axis.
using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr Complex imag_unit{0.0, 1.0};

/// Which of the two inclined cutter flanks a quantity belongs to.
enum class Side { minus, plus };

/// Sign carried by a Side in the +-/-+ formula pairs: +1 for plus, -1 for minus.
inline constexpr double side_sign(Side s) { return s == Side::plus ? +1.0 : -1.0; }

inline constexpr Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

inline const char* side_name(Side s) { return s == Side::plus ? "+" : "-"; }

/// Offset direction for parallel curves of a centrode.
enum class ParallelSide { outer, inner };

enum class GearRole { drive, driven };

inline const char* gear_name(GearRole g) { return g == GearRole::drive ? "drive" : "driven"; }

}  // namespace ncgear
