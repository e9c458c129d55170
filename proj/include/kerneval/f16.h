#pragma once

#include <cstdint>

namespace kerneval {

// IEEE 754 binary16 conversion done in integer arithmetic so results are
// bit-identical across platforms. Rounding is round-to-nearest-even.
// f64_to_f16_bits rounds the double directly; going through float32 first
// would double-round near half-precision midpoints.
uint16_t f32_to_f16_bits(float value);
uint16_t f64_to_f16_bits(double value);
float f16_bits_to_f32(uint16_t bits);

// Snaps a double to the nearest representable half-precision value and
// returns it widened back to double. Values beyond the f16 range saturate
// to +/-inf, matching the IEEE conversion.
double snap_to_f16(double value);

// Snaps toward float32 (used when marshaling f32 tensors whose harness-side
// storage is float64).
double snap_to_f32(double value);

}  // namespace kerneval
