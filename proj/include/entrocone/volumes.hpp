#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entrocone/matrix.hpp"

namespace entrocone {

/// Volume of the simplex cut from a simplicial cone by sum_k S~_k = 1:
/// volume = |determinant| / (d! * norm_product), where norm_product is the
/// product of the rays' coordinate sums.
struct VolumeReport {
  int dimension = 0;
  Rational determinant;
  Rational norm_product;
  Rational volume;
  std::optional<BigInt> inverse_volume;  // set when 1/volume is an integer
};

VolumeReport cone_volume(const RMatrix& rays);

/// 2^d / (d! (2d)!) with d = ceil(n/2).
Rational sqec_volume_closed(int parties);
/// (2d)! / 2^d.
Rational sqec_norm_product_closed(int parties);

/// ceil((n+1)/2)!, times (n+1)/2 when n is odd.
Rational shec_determinant_closed(int parties);
/// (-1/6)^d * prod_{j=0}^{d-1} p(1 + j) for the monic cubic
/// p(x) = x^3 - x - d(d+1)(3n - 2(d-1)). Equals the product over the roots
/// x_k of the Pochhammer symbols (1 - x_k)_d without extracting any root.
Rational shec_norm_product_closed(int parties);
Rational shec_volume_closed(int parties);

struct RatioRow {
  int parties;
  Rational inv_shec;
  Rational inv_sqec;
  Rational ratio;         // vol(SHEC) / vol(SQEC)
  std::string ratio_3sf;  // ratio to 3 significant figures
};

/// Rows n = 2..max_parties.
std::vector<RatioRow> ratio_table(int max_parties);

}  // namespace entrocone
