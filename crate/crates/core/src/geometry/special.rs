//! Scalar helpers shared by the distance formulas.

use num_complex::Complex64;

/// `artanh(x)` as `0.5 * log1p(2x / (1 - x))`, accurate near 0 and for `x`
/// close to 1 as long as `1 - x` itself is representable.
pub fn atanh_stable(x: f64) -> f64 {
    0.5 * (2.0 * x / (1.0 - x)).ln_1p()
}

/// `artanh(rho)` given `rho` and `ln(1 - rho^2)` computed independently.
///
/// Every model-domain distance is `artanh` of a pseudo-hyperbolic ratio whose
/// complement `1 - rho^2` factors into boundary terms. For `rho < 1/2` the
/// direct form is used; above that the complement carries the precision,
/// through `artanh(rho) = ln(1 + rho) - ln(1 - rho^2) / 2`.
pub(crate) fn atanh_split(rho: f64, ln_complement: f64) -> f64 {
    if rho < 0.5 {
        atanh_stable(rho)
    } else {
        rho.ln_1p() - 0.5 * ln_complement
    }
}

/// `1 - |z|^2` with a single rounding per product.
pub fn one_minus_norm_sqr(z: Complex64) -> f64 {
    (-z.re).mul_add(z.re, (-z.im).mul_add(z.im, 1.0))
}

/// `|z|` without intermediate overflow.
pub(crate) fn abs(z: Complex64) -> f64 {
    z.re.hypot(z.im)
}

/// Complex division by Smith's method, safe for very large or very small
/// denominators.
pub(crate) fn div(n: Complex64, d: Complex64) -> Complex64 {
    if d.re.abs() >= d.im.abs() {
        let r = d.im / d.re;
        let den = d.re + d.im * r;
        Complex64::new((n.re + n.im * r) / den, (n.im - n.re * r) / den)
    } else {
        let r = d.re / d.im;
        let den = d.re * r + d.im;
        Complex64::new((n.re * r + n.im) / den, (n.im * r - n.re) / den)
    }
}
