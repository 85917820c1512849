use num_complex::Complex64;

use crate::error::{Error, Result};

// binomial(x, m) for complex x and integer m ≥ 0, as a finite product
fn binom(x: Complex64, m: u32) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    for j in 1..=m {
        out *= (x - m as f64 + j as f64) / j as f64;
    }
    out
}

/// Jacobi polynomial P_n^{(α,β)}(z) from the explicit sum
/// Σ_k C(n+α, n-k) C(n+β, k) ((z-1)/2)^k ((z+1)/2)^{n-k}.
pub fn jacobi_poly(n: u32, alpha: Complex64, beta: Complex64, z: Complex64) -> Result<Complex64> {
    let zm = (z - 1.0) * 0.5;
    let zp = (z + 1.0) * 0.5;
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        sum += binom(alpha + nf, n - k) * binom(beta + nf, k) * zm.powu(k) * zp.powu(n - k);
    }
    if sum.re.is_finite() && sum.im.is_finite() {
        Ok(sum)
    } else {
        Err(Error::Overflow("jacobi_poly"))
    }
}
