//! The order-statistic kernel `B_{r,s}(p)`: the probability that a
//! `Bin(r, p)` variable exceeds `r - s`, i.e. that the rank-`s` pick among
//! `r` preferential samples lands in the "low" degree class. Every other
//! module is built on the evaluations and exact expansions here.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::params::ModelParams;
use crate::poly::IntPoly;

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `x^n` by binary exponentiation; one deterministic power routine shared by
/// every float path in the crate.
pub(crate) fn powi(x: f64, mut n: u32) -> f64 {
    let mut base = x;
    let mut acc = 1.0;
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    acc
}

/// Inputs this far past the `[0,1]` boundary are snapped to it; root finders
/// probe endpoints.
const BOUNDARY_SLACK: f64 = 1e-15;

fn clamp_unit(v: f64) -> Result<f64, Error> {
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else if v < 0.0 && v >= -BOUNDARY_SLACK {
        Ok(0.0)
    } else if v > 1.0 && v <= 1.0 + BOUNDARY_SLACK {
        Ok(1.0)
    } else {
        Err(Error::Domain { value: v })
    }
}

/// Precomputed kernel for one `(r, s)` pair: float evaluation paths plus the
/// exact integer expansions in `p` and in `q = 1 - p`.
#[derive(Clone, Debug)]
pub struct Brs {
    params: ModelParams,
    poly: IntPoly,
    tail: IntPoly,
    /// `C(r, i)` for `i = 0..=r`, rounded to f64.
    choose: Vec<f64>,
    /// `r * C(r-1, s-1)`, the closed-form derivative constant.
    deriv_coeff: f64,
}

impl Brs {
    pub fn new(params: ModelParams) -> Self {
        let r = params.r() as u64;
        let s = params.s() as u64;
        let one_minus_x = IntPoly::from_i64(&[1, -1]);

        // B(p) = sum_{i=0}^{s-1} C(r,i) p^(r-i) (1-p)^i
        let mut poly = IntPoly::zero();
        let mut pow = IntPoly::one();
        for i in 0..s {
            let c = BigInt::from(binomial(r, i));
            poly = &poly + &(&IntPoly::monomial(c, (r - i) as usize) * &pow);
            pow = &pow * &one_minus_x;
        }

        // T(q) = P(Bin(r,q) >= s) = sum_{j=s}^{r} C(r,j) q^j (1-q)^(r-j),
        // expanded independently of `poly` so the complement identity is a
        // real cross-check.
        let mut tail = IntPoly::zero();
        let mut pow = IntPoly::one(); // (1-q)^(r-j) built from the top down
        for j in (s..=r).rev() {
            let c = BigInt::from(binomial(r, j));
            tail = &tail + &(&IntPoly::monomial(c, j as usize) * &pow);
            pow = &pow * &one_minus_x;
        }

        let choose = (0..=r).map(|i| binomial(r, i).to_f64().unwrap()).collect();
        let deriv_coeff = (r as f64) * binomial(r - 1, s - 1).to_f64().unwrap();

        Brs { params, poly, tail, choose, deriv_coeff }
    }

    pub fn params(&self) -> ModelParams {
        self.params
    }

    /// `B_{r,s}(p) = P(Bin(r,p) > r-s)`, evaluated as the positive-term
    /// order-statistic sum (numerically stable across all of `[0,1]` up to
    /// `r = 64`).
    pub fn eval(&self, p: f64) -> Result<f64, Error> {
        Ok(self.eval_raw(clamp_unit(p)?))
    }

    pub(crate) fn eval_raw(&self, p: f64) -> f64 {
        let r = self.params.r();
        let s = self.params.s();
        let q = 1.0 - p;
        let mut acc = 0.0;
        for i in 0..s {
            acc += self.choose[i as usize] * powi(p, r - i) * powi(q, i);
        }
        acc
    }

    /// `d/dx B_{r,s}(x) = r C(r-1, s-1) x^(r-s) (1-x)^(s-1)`; the interior
    /// terms of the differentiated sum telescope away.
    pub fn derivative(&self, x: f64) -> Result<f64, Error> {
        Ok(self.derivative_raw(clamp_unit(x)?))
    }

    pub(crate) fn derivative_raw(&self, x: f64) -> f64 {
        let r = self.params.r();
        let s = self.params.s();
        self.deriv_coeff * powi(x, r - s) * powi(1.0 - x, s - 1)
    }

    /// `P(Bin(r,q) >= s) = 1 - B(1-q)`, evaluated directly in `q` so that
    /// tail values keep full relative accuracy as `q -> 0`.
    pub fn tail_eval(&self, q: f64) -> Result<f64, Error> {
        Ok(self.tail_raw(clamp_unit(q)?))
    }

    pub(crate) fn tail_raw(&self, q: f64) -> f64 {
        let r = self.params.r();
        let s = self.params.s();
        let p = 1.0 - q;
        let mut acc = 0.0;
        for j in s..=r {
            acc += self.choose[j as usize] * powi(q, j) * powi(p, r - j);
        }
        acc
    }

    /// Exact expansion of `B_{r,s}` in `p`.
    pub fn polynomial(&self) -> &IntPoly {
        &self.poly
    }

    /// Exact coefficients `a_s..a_r` of `P(Bin(r,q) >= s)` in `q`.
    pub fn tail_polynomial(&self) -> &IntPoly {
        &self.tail
    }

    /// `C(r, s)` as f64, the leading tail coefficient.
    pub fn choose_rs(&self) -> f64 {
        self.choose[self.params.s() as usize]
    }
}
