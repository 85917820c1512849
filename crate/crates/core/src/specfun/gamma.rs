use num_complex::Complex64;

use crate::error::{Error, Result};

// B_2k / (2k (2k-1))
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Principal branch of log Γ(z).
///
/// Shifts z upward until Re z ≥ 10, applies Stirling's series there and
/// subtracts the logs of the shift factors one at a time. Each subtracted
/// log is principal, which is what keeps the result on the principal branch
/// (continuous off the negative real axis).
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor() {
        return Err(Error::Pole(z.re));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 10.0 {
        shift += w.ln();
        w += 1.0;
    }
    let winv = w.inv();
    let winv2 = winv * winv;
    let mut series = Complex64::new(0.0, 0.0);
    for c in STIRLING.iter().rev() {
        series = series * winv2 + c;
    }
    series *= winv;
    Ok((w - 0.5) * w.ln() - w + HALF_LN_2PI + series - shift)
}
