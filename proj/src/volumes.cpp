#include "entrocone/volumes.hpp"

#include "entrocone/cones.hpp"
#include "entrocone/parallel.hpp"

namespace entrocone {

namespace {

Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

VolumeReport cone_volume(const RMatrix& rays) {
  if (!rays.is_square()) throw ShapeError("volume needs a square ray matrix");
  VolumeReport rep;
  rep.dimension = static_cast<int>(rays.rows());
  rep.norm_product = 1;
  for (std::size_t c = 0; c < rays.cols(); ++c) {
    Rational sum;
    for (std::size_t r = 0; r < rays.rows(); ++r) {
      if (rays(r, c).sign() < 0) throw std::invalid_argument("volume needs nonnegative rays");
      sum += rays(r, c);
    }
    if (sum.is_zero()) throw std::invalid_argument("ray " + std::to_string(c + 1) + " is zero");
    rep.norm_product *= sum;
  }
  rep.determinant = determinant(rays);
  rep.volume = rep.determinant.abs() / (Rational(factorial(rep.dimension)) * rep.norm_product);
  if (!rep.volume.is_zero()) {
    const Rational inv = rep.volume.reciprocal();
    if (inv.is_integer()) rep.inverse_volume = inv.numerator();
  }
  return rep;
}

Rational sqec_norm_product_closed(int parties) {
  const auto d = static_cast<unsigned>(sym_dimension(parties));
  return Rational(factorial(2 * d), BigInt(1) << d);
}

Rational sqec_volume_closed(int parties) {
  const auto d = static_cast<unsigned>(sym_dimension(parties));
  return Rational(BigInt(1) << d, factorial(d) * factorial(2 * d));
}

Rational shec_determinant_closed(int parties) {
  Rational det(factorial(static_cast<unsigned>((parties + 2) / 2)));
  if (parties % 2 == 1) det *= Rational((parties + 1) / 2);
  return det;
}

Rational shec_norm_product_closed(int parties) {
  const long d = sym_dimension(parties);
  const BigInt constant = BigInt(d) * BigInt(d + 1) * BigInt(3L * parties - 2 * (d - 1));
  Rational product = pow_rational(Rational(-1) / Rational(6), static_cast<unsigned>(d));
  for (long j = 0; j < d; ++j) {
    const BigInt x = 1 + j;
    product *= Rational(BigInt(x * x * x - x - constant));
  }
  return product;
}

Rational shec_volume_closed(int parties) {
  const auto d = static_cast<unsigned>(sym_dimension(parties));
  return shec_determinant_closed(parties) / (Rational(factorial(d)) * shec_norm_product_closed(parties));
}

std::vector<RatioRow> ratio_table(int max_parties) {
  if (max_parties < 2) throw std::invalid_argument("table needs max n >= 2");
  std::vector<RatioRow> rows(static_cast<std::size_t>(max_parties - 1));
  parallel_for(rows.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 2;
    const Rational shec = cone_volume(shec_rays(n)).volume;
    const Rational sqec = cone_volume(sqec_rays(n)).volume;
    const Rational ratio = shec / sqec;
    rows[i] = {n, shec.reciprocal(), sqec.reciprocal(), ratio, format_significant(ratio, 3)};
  });
  return rows;
}

}  // namespace entrocone
