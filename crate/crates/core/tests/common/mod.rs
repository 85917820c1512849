#![allow(dead_code)]
pub mod reference;

use num_complex::Complex64;
use ptsat::models::ModelSpec;
use ptsat::rootfinder::{SearchRect, DEFAULT_GRID};

pub fn c(v: reference::C) -> Complex64 {
    Complex64::new(v.0, v.1)
}

pub fn rel_err(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}

pub struct Case {
    pub name: &'static str,
    pub model: ModelSpec,
    pub rect: [f64; 4],
    /// Upper-half-plane and real roots from the mpmath oracle.
    pub reference: &'static [reference::C],
}

impl Case {
    pub fn rect(&self) -> SearchRect {
        self.rect_with(DEFAULT_GRID)
    }

    pub fn rect_with(&self, (nx, ny): (usize, usize)) -> SearchRect {
        let [a, b, c, d] = self.rect;
        SearchRect::new(a, b, c, d, nx, ny).unwrap()
    }

    /// Reference roots with conjugates added, sorted like the solver output.
    pub fn full_reference(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = Vec::new();
        for &r in self.reference {
            let z = c(r);
            out.push(z);
            if z.im != 0.0 {
                out.push(z.conj());
            }
        }
        out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        out
    }
}

pub fn cases() -> Vec<Case> {
    use reference::*;
    vec![
        Case { name: "expstep", model: ModelSpec::ExpStep { v1: 5.0, a: 8.0 }, rect: [0.0, 6.0, -6.0, 6.0], reference: EXPSTEP_ROOTS },
        Case { name: "linear", model: ModelSpec::LinearStep { v1: 5.0, a: 2.0 }, rect: [0.0, 12.0, -4.0, 4.0], reference: LINEAR_ROOTS },
        Case {
            name: "sqwell V0=0",
            model: ModelSpec::SquareWell { v0: 0.0, v1: 5.0, a: 2.0 },
            rect: [0.0, 10.0, -4.0, 4.0],
            reference: SQWELL_V0_0_ROOTS,
        },
        Case {
            name: "sqwell V0=5",
            model: ModelSpec::SquareWell { v0: 5.0, v1: 2.0, a: 2.0 },
            rect: [-6.0, 40.0, -4.0, 4.0],
            reference: SQWELL_V0_5_ROOTS,
        },
        Case {
            name: "sqwell V0=-5",
            model: ModelSpec::SquareWell { v0: -5.0, v1: 2.0, a: 2.0 },
            rect: [0.0, 45.0, -4.0, 4.0],
            reference: SQWELL_V0_M5_ROOTS,
        },
    ]
}
