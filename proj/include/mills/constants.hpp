#pragma once

#include <numbers>

namespace mills {

inline constexpr double pi = std::numbers::pi;

// sqrt(2/pi) = R(0); the additive shift in the normalization S(z) = R(z)/(z + sqrt(2/pi)).
inline constexpr double sqrt_2_over_pi = 0.79788456080286535587989211986876373695171726232986931533185165934131585;
// 2/pi, the square of sqrt_2_over_pi.
inline constexpr double two_over_pi = 0.63661977236758134307553505349005744813783858296182579499066937623558719;
inline constexpr double sqrt_2pi = 2.50662827463100050241576528481104525300698674060993831662992357634229365;
inline constexpr double inv_sqrt_2pi = 0.39894228040143267793994605993438186847585863116493465766592582967065793;
inline constexpr double sqrt_pi_over_2 = 1.25331413731550025120788264240552262650349337030496915831496178817114683;
inline constexpr double log_sqrt_2pi = 0.91893853320467274178032973640561763986139747363778341281715154048276570;

// Above this |Im z| the factor e^{y^2/2} in phi(iy) and Phi-bar(iy) is treated as overflowing.
inline constexpr double y_overflow = 37.0;

}  // namespace mills
