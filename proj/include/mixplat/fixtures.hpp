#pragma once

// Exact seed tile lists, all coordinates in Z[z12].

namespace mixplat::fixtures {

// Left tiling of the pair of non-examples.
inline constexpr const char* nonexample_left = R"(
basis (2 + 1*z + -1*z^2 + -1*z^3) (1 + 1*z + 1*z^2 + 0*z^3)
T (1 + 0*z + -1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (0 + 0*z + 1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (1 + 1*z + 0*z^2 + 0*z^3) (0 + 1*z + 1*z^2 + 0*z^3) (0 + 0*z + 1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (1 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3)
T (1 + 1*z + 1*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + 0*z^3)
T (2 + 1*z + 1*z^2 + 0*z^3) (1 + 1*z + 1*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + 0*z^3)
T (0 + 1*z + 1*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (1 + 1*z + 1*z^2 + 0*z^3)
T (3 + 2*z + -1*z^2 + -1*z^3) (3 + 2*z + 0*z^2 + -1*z^3) (2 + 2*z + 0*z^2 + -1*z^3)
T (2 + 2*z + 1*z^2 + -1*z^3) (2 + 2*z + 0*z^2 + -1*z^3) (3 + 2*z + 0*z^2 + -1*z^3)
S (2 + 1*z + 1*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + 0*z^3) (2 + 2*z + 0*z^2 + -1*z^3) (2 + 2*z + 1*z^2 + -1*z^3)
T (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + -1*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3)
T (2 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3)
S (1 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + 0*z^3) (1 + 1*z + -1*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3)
T (2 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3) (3 + 1*z + -1*z^2 + -1*z^3)
S (3 + 2*z + -1*z^2 + -1*z^3) (2 + 2*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + -1*z^3) (3 + 1*z + -1*z^2 + -1*z^3)
T (1 + 0*z + 0*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + 0*z^3)
T (2 + 2*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + -1*z^3)
)";

// Right tiling of the pair (snub square), rotated by -15 degrees.
inline constexpr const char* nonexample_right = R"(
basis (1 + 1*z + 0*z^2 + -1*z^3) (0 + 0*z + 1*z^2 + 1*z^3)
S (0 + 1*z + 0*z^2 + -1*z^3) (0 + 1*z + 1*z^2 + -1*z^3) (0 + 0*z + 1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (0 + 1*z + 1*z^2 + 0*z^3) (0 + 0*z + 1*z^2 + 1*z^3) (0 + 0*z + 1*z^2 + 0*z^3)
S (0 + 1*z + 1*z^2 + -1*z^3) (1 + 1*z + 1*z^2 + -1*z^3) (1 + 1*z + 1*z^2 + 0*z^3) (0 + 1*z + 1*z^2 + 0*z^3)
T (0 + 1*z + 1*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 1*z^2 + -1*z^3)
T (0 + 1*z + 1*z^2 + -1*z^3) (0 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3)
T (0 + 1*z + 1*z^2 + -1*z^3) (0 + 1*z + 1*z^2 + 0*z^3) (0 + 0*z + 1*z^2 + 0*z^3)
)";

// Left rotation-invariant square carrier; centre (2 - z^2)/3.
inline constexpr const char* risc_left = R"(
T (1 + 0*z + -1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
S (1 + 0*z + 0*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (1 + 1*z + -1*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + 0*z^3)
S (0 + -1*z + 0*z^2 + 0*z^3) (1 + -1*z + -1*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (1 + 1*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 1*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
T (0 + -1*z + 0*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 1*z^3)
T (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
T (0 + -1*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (0 + -1*z + 0*z^2 + 1*z^3)
T (1 + 0*z + -1*z^2 + -1*z^3) (1 + 1*z + -1*z^2 + -1*z^3) (1 + 0*z + -1*z^2 + 0*z^3)
T (1 + -1*z + -1*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + -1*z^3) (1 + 0*z + -1*z^2 + 0*z^3)
)";

// Right rotation-invariant square carrier; centre (2 - z^2)/3.
inline constexpr const char* risc_right = R"(
T (1 + 0*z + -1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (0 + 0*z + 1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
T (2 + 0*z + -1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + 0*z^3)
T (0 + 0*z + -1*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
S (1 + 1*z + 0*z^2 + 0*z^3) (0 + 1*z + 1*z^2 + 0*z^3) (0 + 0*z + 1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (0 + -1*z + 1*z^2 + 1*z^3) (0 + -1*z + 0*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 1*z^2 + 0*z^3)
S (2 + 0*z + -1*z^2 + 0*z^3) (2 + 1*z + -1*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
T (0 + 0*z + 1*z^2 + 1*z^3) (0 + 0*z + 1*z^2 + 0*z^3) (0 + 1*z + 1*z^2 + 0*z^3)
S (1 + 0*z + -1*z^2 + -1*z^3) (2 + 0*z + -1*z^2 + -1*z^3) (2 + 0*z + -1*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + 0*z^3)
S (0 + 0*z + -1*z^2 + -1*z^3) (1 + 0*z + -1*z^2 + -1*z^3) (1 + 0*z + -1*z^2 + 0*z^3) (0 + 0*z + -1*z^2 + 0*z^3)
S (0 + -1*z + 0*z^2 + 1*z^3) (0 + -1*z + -1*z^2 + 1*z^3) (0 + 0*z + -1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (2 + 1*z + -1*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + 0*z^3) (2 + 0*z + -1*z^2 + 0*z^3)
T (2 + 0*z + -1*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3) (2 + 0*z + -1*z^2 + 0*z^3)
T (0 + -1*z + -1*z^2 + 0*z^3) (0 + 0*z + -1*z^2 + -1*z^3) (0 + 0*z + -1*z^2 + 0*z^3)
T (0 + -1*z + -1*z^2 + 1*z^3) (0 + -1*z + -1*z^2 + 0*z^3) (0 + 0*z + -1*z^2 + 0*z^3)
T (0 + 0*z + 1*z^2 + 1*z^3) (0 + -1*z + 1*z^2 + 1*z^3) (0 + 0*z + 1*z^2 + 0*z^3)
)";

// Left two-centre configuration; centres (3 + 2z - z^3)/3 and 2(3 + 2z - z^3)/3.
inline constexpr const char* two_centre_left = R"(
T (1 + 0*z + -1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (0 + 0*z + 1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (1 + 1*z + 0*z^2 + 0*z^3) (0 + 1*z + 1*z^2 + 0*z^3) (0 + 0*z + 1*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (1 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3)
T (1 + 1*z + 1*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + 0*z^3)
T (2 + 1*z + 1*z^2 + 0*z^3) (1 + 1*z + 1*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + 0*z^3)
T (0 + 1*z + 1*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (1 + 1*z + 1*z^2 + 0*z^3)
T (3 + 2*z + -1*z^2 + -1*z^3) (3 + 2*z + 0*z^2 + -1*z^3) (2 + 2*z + 0*z^2 + -1*z^3)
T (2 + 2*z + 1*z^2 + -1*z^3) (2 + 2*z + 0*z^2 + -1*z^3) (3 + 2*z + 0*z^2 + -1*z^3)
S (2 + 1*z + 1*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + 0*z^3) (2 + 2*z + 0*z^2 + -1*z^3) (2 + 2*z + 1*z^2 + -1*z^3)
T (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + -1*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3)
T (2 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3)
S (1 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + -1*z^2 + 0*z^3) (1 + 1*z + -1*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3)
T (2 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3) (3 + 1*z + -1*z^2 + -1*z^3)
S (3 + 2*z + -1*z^2 + -1*z^3) (2 + 2*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + -1*z^3) (3 + 1*z + -1*z^2 + -1*z^3)
T (1 + 0*z + 0*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + 0*z^3)
T (2 + 2*z + 0*z^2 + -1*z^3) (2 + 1*z + 0*z^2 + 0*z^3) (2 + 1*z + 0*z^2 + -1*z^3)
)";

// Middle two-centre configuration; centres (2z - z^3)/3 and (-3 - 2z + z^3)/3.
inline constexpr const char* two_centre_middle = R"(
S (0 + 0*z + 0*z^2 + 0*z^3) (0 + 1*z + 0*z^2 + 0*z^3) (-1 + 1*z + 1*z^2 + 0*z^3) (-1 + 0*z + 1*z^2 + 0*z^3)
T (-1 + 0*z + 1*z^2 + 1*z^3) (-1 + 0*z + 1*z^2 + 0*z^3) (-1 + 1*z + 1*z^2 + 0*z^3)
T (0 + 1*z + 1*z^2 + 0*z^3) (-1 + 1*z + 1*z^2 + 0*z^3) (0 + 1*z + 0*z^2 + 0*z^3)
T (0 + 1*z + 0*z^2 + -1*z^3) (0 + 1*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
S (0 + 0*z + -1*z^2 + 0*z^3) (0 + 1*z + -1*z^2 + -1*z^3) (0 + 1*z + 0*z^2 + -1*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (1 + 1*z + -1*z^2 + -1*z^3) (0 + 1*z + 0*z^2 + -1*z^3) (0 + 1*z + -1*z^2 + -1*z^3)
T (0 + 0*z + -1*z^2 + -1*z^3) (0 + 1*z + -1*z^2 + -1*z^3) (0 + 0*z + -1*z^2 + 0*z^3)
S (-1 + 0*z + 0*z^2 + 0*z^3) (-1 + -1*z + 0*z^2 + 0*z^3) (0 + -1*z + -1*z^2 + 0*z^3) (0 + 0*z + -1*z^2 + 0*z^3)
T (0 + 0*z + -1*z^2 + -1*z^3) (0 + 0*z + -1*z^2 + 0*z^3) (0 + -1*z + -1*z^2 + 0*z^3)
T (-1 + -1*z + -1*z^2 + 0*z^3) (0 + -1*z + -1*z^2 + 0*z^3) (-1 + -1*z + 0*z^2 + 0*z^3)
T (-1 + -1*z + 0*z^2 + 1*z^3) (-1 + -1*z + 0*z^2 + 0*z^3) (-1 + 0*z + 0*z^2 + 0*z^3)
S (-1 + 0*z + 1*z^2 + 0*z^3) (-1 + -1*z + 1*z^2 + 1*z^3) (-1 + -1*z + 0*z^2 + 1*z^3) (-1 + 0*z + 0*z^2 + 0*z^3)
T (-2 + -1*z + 1*z^2 + 1*z^3) (-1 + -1*z + 0*z^2 + 1*z^3) (-1 + -1*z + 1*z^2 + 1*z^3)
T (-1 + 0*z + 1*z^2 + 1*z^3) (-1 + -1*z + 1*z^2 + 1*z^3) (-1 + 0*z + 1*z^2 + 0*z^3)
T (1 + 1*z + 0*z^2 + 0*z^3) (0 + 1*z + 1*z^2 + 0*z^3) (0 + 1*z + 0*z^2 + 0*z^3)
S (0 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (0 + 1*z + 0*z^2 + 0*z^3)
T (1 + 1*z + 0*z^2 + -1*z^3) (0 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + -1*z^2 + -1*z^3)
T (-2 + -1*z + 0*z^2 + 1*z^3) (-1 + -1*z + 0*z^2 + 1*z^3) (-2 + -1*z + 1*z^2 + 1*z^3)
S (-2 + -1*z + 0*z^2 + 0*z^3) (-1 + -1*z + 0*z^2 + 0*z^3) (-1 + -1*z + 0*z^2 + 1*z^3) (-2 + -1*z + 0*z^2 + 1*z^3)
T (-2 + -1*z + 0*z^2 + 0*z^3) (-1 + -1*z + -1*z^2 + 0*z^3) (-1 + -1*z + 0*z^2 + 0*z^3)
T (0 + 0*z + 0*z^2 + 0*z^3) (-1 + 0*z + 1*z^2 + 0*z^3) (-1 + 0*z + 0*z^2 + 0*z^3)
T (-1 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + -1*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
)";

// Right two-centre configuration; centres (3 + 2z - z^3)/3 and (-2z + z^3)/3.
inline constexpr const char* two_centre_right = R"(
S (0 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 1*z^3)
T (0 + 0*z + 1*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 1*z^3) (1 + 0*z + 0*z^2 + 1*z^3)
T (1 + 1*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 1*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (0 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + -1*z^3) (1 + 0*z + 0*z^2 + -1*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
T (1 + 1*z + 0*z^2 + -1*z^3) (1 + 0*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + -1*z^3)
T (1 + 0*z + -1*z^2 + -1*z^3) (1 + 0*z + 0*z^2 + -1*z^3) (0 + 0*z + 0*z^2 + -1*z^3)
T (0 + -1*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + -1*z^3) (0 + 0*z + 0*z^2 + 0*z^3)
T (0 + -1*z + 0*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 1*z^3)
T (1 + 1*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (1 + 0*z + 0*z^2 + 0*z^3)
S (1 + 1*z + 1*z^2 + 0*z^3) (1 + 0*z + 1*z^2 + 1*z^3) (1 + 0*z + 0*z^2 + 1*z^3) (1 + 1*z + 0*z^2 + 0*z^3)
T (1 + 0*z + 1*z^2 + 1*z^3) (0 + 0*z + 1*z^2 + 1*z^3) (1 + 0*z + 0*z^2 + 1*z^3)
S (1 + 2*z + 0*z^2 + -1*z^3) (1 + 2*z + 1*z^2 + -1*z^3) (1 + 1*z + 1*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + 0*z^3)
T (1 + 2*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + 0*z^3) (1 + 1*z + 0*z^2 + -1*z^3)
S (1 + 0*z + 0*z^2 + -1*z^3) (2 + 0*z + -1*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3)
S (2 + 2*z + -1*z^2 + -1*z^3) (1 + 2*z + 0*z^2 + -1*z^3) (1 + 1*z + 0*z^2 + -1*z^3) (2 + 1*z + -1*z^2 + -1*z^3)
T (1 + 0*z + 0*z^2 + -1*z^3) (1 + 0*z + -1*z^2 + -1*z^3) (2 + 0*z + -1*z^2 + -1*z^3)
T (0 + -1*z + 0*z^2 + 0*z^3) (0 + 0*z + 0*z^2 + 0*z^3) (0 + -1*z + 0*z^2 + 1*z^3)
S (-1 + 0*z + 1*z^2 + 1*z^3) (-1 + -1*z + 1*z^2 + 1*z^3) (0 + -1*z + 0*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 1*z^3)
T (-1 + 0*z + 1*z^2 + 1*z^3) (0 + 0*z + 0*z^2 + 1*z^3) (0 + 0*z + 1*z^2 + 1*z^3)
S (-1 + -2*z + 1*z^2 + 1*z^3) (0 + -2*z + 0*z^2 + 1*z^3) (0 + -1*z + 0*z^2 + 1*z^3) (-1 + -1*z + 1*z^2 + 1*z^3)
T (0 + -2*z + 0*z^2 + 1*z^3) (0 + -1*z + 0*z^2 + 0*z^3) (0 + -1*z + 0*z^2 + 1*z^3)
S (0 + -2*z + 0*z^2 + 1*z^3) (0 + -2*z + -1*z^2 + 1*z^3) (0 + -1*z + -1*z^2 + 0*z^3) (0 + -1*z + 0*z^2 + 0*z^3)
S (0 + 0*z + -1*z^2 + -1*z^3) (0 + 0*z + 0*z^2 + -1*z^3) (0 + -1*z + 0*z^2 + 0*z^3) (0 + -1*z + -1*z^2 + 0*z^3)
T (0 + 0*z + 0*z^2 + -1*z^3) (0 + 0*z + -1*z^2 + -1*z^3) (1 + 0*z + -1*z^2 + -1*z^3)
T (2 + 2*z + 0*z^2 + -1*z^3) (1 + 2*z + 1*z^2 + -1*z^3) (1 + 2*z + 0*z^2 + -1*z^3)
T (2 + 2*z + 0*z^2 + -1*z^3) (1 + 2*z + 0*z^2 + -1*z^3) (2 + 2*z + -1*z^2 + -1*z^3)
T (-1 + -2*z + 0*z^2 + 1*z^3) (0 + -2*z + 0*z^2 + 1*z^3) (-1 + -2*z + 1*z^2 + 1*z^3)
T (-1 + -2*z + 0*z^2 + 1*z^3) (0 + -2*z + -1*z^2 + 1*z^3) (0 + -2*z + 0*z^2 + 1*z^3)
)";

}  // namespace mixplat::fixtures
