//! Exact integer polynomials: the arithmetic backing the kernel expansions and
//! the Sturm-sequence root counting. No rounding anywhere; coefficients are
//! arbitrary-precision integers.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Dense univariate polynomial over the integers, constant term first.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::from(1)] }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * x^power`
    pub fn monomial(c: BigInt, power: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero-padded past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, by: &BigInt) -> IntPoly {
        if by.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c * by).collect() }
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Value at 1, i.e. the coefficient sum.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Horner evaluation with coefficients rounded to f64. Accurate only while
    /// the coefficients are modest; the exact routes are `eval_rational` and
    /// `sign_at`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }

    /// Exact sign at the rational `num/den` (`den > 0`), via the homogeneous
    /// form `sum c_i num^i den^(n-i)`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Ordering {
        debug_assert!(den.is_positive());
        if self.is_zero() {
            return Ordering::Equal;
        }
        let n = self.degree();
        let mut num_pow = BigInt::from(1);
        let mut acc = BigInt::zero();
        // den powers descending: precompute den^(n-i) by one pass from the top
        let mut den_pows = Vec::with_capacity(n + 1);
        let mut dp = BigInt::from(1);
        for _ in 0..=n {
            den_pows.push(dp.clone());
            dp *= den;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &num_pow * &den_pows[n - i];
            }
            num_pow *= num;
        }
        acc.cmp(&BigInt::zero())
    }

    /// Positive gcd of the coefficients; 1 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g == BigInt::from(1) {
                break;
            }
        }
        if g.is_zero() {
            BigInt::from(1)
        } else {
            g
        }
    }

    /// Divides out the content; sign of the leading coefficient is preserved.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Pseudo-remainder with a positive implied multiplier, so the result has
    /// the same sign pattern as the rational remainder. Required by the Sturm
    /// chain construction.
    pub fn pseudo_rem(&self, div: &IntPoly) -> IntPoly {
        let db = div.degree();
        assert!(!div.is_zero(), "pseudo_rem by zero polynomial");
        let mut r = self.clone();
        if r.is_zero() || r.degree() < db {
            return r;
        }
        let d = div.leading().unwrap().clone();
        let mut mults = 0usize;
        while !r.is_zero() && r.degree() >= db {
            let lr = r.leading().unwrap().clone();
            let dr = r.degree();
            // r := d*r - lr * x^(dr-db) * div
            r = &r.scale(&d) - &div.shift(dr - db).scale(&lr);
            mults += 1;
            debug_assert!(r.is_zero() || r.degree() < dr);
        }
        if d.sign() == Sign::Minus && mults % 2 == 1 {
            r = -&r;
        }
        r
    }

    /// Exact quotient, if `div` divides `self` over the integers.
    pub fn div_exact(&self, div: &IntPoly) -> Option<IntPoly> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < div.degree() {
            return None;
        }
        let d = div.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - div.degree() + 1];
        while !rem.is_zero() && rem.degree() >= div.degree() {
            let lr = rem.leading().unwrap();
            let (q, m) = lr.div_rem(d);
            if !m.is_zero() {
                return None;
            }
            let pos = rem.degree() - div.degree();
            rem = &rem - &div.shift(pos).scale(&q);
            quot[pos] = q;
        }
        if rem.is_zero() {
            Some(IntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Gcd of the primitive parts via the primitive pseudo-remainder sequence,
    /// normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b.normalize_sign();
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.normalize_sign()
    }

    fn normalize_sign(self) -> IntPoly {
        match self.leading() {
            Some(l) if l.sign() == Sign::Minus => -&self,
            _ => self,
        }
    }

    /// `self / gcd(self, self')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides its primitive polynomial")
    }

    /// Divides out every `(x - 1)` factor; returns the reduced polynomial and
    /// the multiplicity removed.
    pub fn deflate_unit_root(&self) -> (IntPoly, u32) {
        let mut p = self.clone();
        let mut mult = 0;
        while !p.is_zero() && p.degree() >= 1 && p.eval_one().is_zero() {
            // synthetic division by (x - 1), exact by construction
            let n = p.degree();
            let mut out = vec![BigInt::zero(); n];
            let mut carry = BigInt::zero();
            for i in (1..=n).rev() {
                carry += &p.coeffs[i];
                out[i - 1] = carry.clone();
            }
            debug_assert!((&carry + &p.coeffs[0]).is_zero());
            p = IntPoly::from_coeffs(out);
            mult += 1;
        }
        (p, mult)
    }

    /// Exact substitution `x -> 1 - x`.
    pub fn compose_one_minus_x(&self) -> IntPoly {
        let one_minus_x = IntPoly::from_i64(&[1, -1]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &one_minus_x) + &IntPoly::monomial(c.clone(), 0);
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn arithmetic_basics() {
        let a = IntPoly::from_i64(&[1, 2, 3]); // 3x^2 + 2x + 1
        let b = IntPoly::from_i64(&[-1, 1]); // x - 1
        assert_eq!(&a + &b, IntPoly::from_i64(&[0, 3, 3]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&b * &b, IntPoly::from_i64(&[1, -2, 1]));
        assert_eq!(a.derivative(), IntPoly::from_i64(&[2, 6]));
        assert_eq!(a.degree(), 2);
        assert!(IntPoly::from_coeffs(vec![BigInt::zero()]).is_zero());
    }

    #[test]
    fn sign_at_rational_points() {
        // x^2 + x - 1: negative at 0, positive at 1, root between
        let p = IntPoly::from_i64(&[-1, 1, 1]);
        assert_eq!(p.sign_at(&BigInt::from(0), &BigInt::from(1)), Ordering::Less);
        assert_eq!(p.sign_at(&BigInt::from(1), &BigInt::from(1)), Ordering::Greater);
        assert_eq!(p.sign_at(&BigInt::from(1), &BigInt::from(2)), Ordering::Less);
        assert_eq!(p.sign_at(&BigInt::from(2), &BigInt::from(3)), Ordering::Greater);
    }

    #[test]
    fn pseudo_rem_matches_rational_remainder_sign() {
        // a = x^3 - 2x + 1, b = -2x^2 + 3 (negative leading coefficient)
        let a = IntPoly::from_i64(&[1, -2, 0, 1]);
        let b = IntPoly::from_i64(&[3, 0, -2]);
        let r = a.pseudo_rem(&b);
        // rational remainder of a by b is (-x/2 + 1), positive multiple expected
        assert_eq!(r.degree(), 1);
        let x = BigRational::new(BigInt::from(0), BigInt::from(1));
        assert!(r.eval_rational(&x) > BigRational::zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let x_minus_1 = IntPoly::from_i64(&[-1, 1]);
        let x_plus_2 = IntPoly::from_i64(&[2, 1]);
        let p = &(&x_minus_1 * &x_minus_1) * &x_plus_2;
        let g = p.gcd(&p.derivative());
        assert_eq!(g, x_minus_1);
        let sf = p.squarefree_part();
        assert_eq!(sf, &x_minus_1 * &x_plus_2);
    }

    #[test]
    fn deflates_unit_roots() {
        // (x-1)^2 (x+1) = x^3 - x^2 - x + 1
        let p = IntPoly::from_i64(&[1, -1, -1, 1]);
        let (reduced, mult) = p.deflate_unit_root();
        assert_eq!(mult, 2);
        assert_eq!(reduced, IntPoly::from_i64(&[1, 1]));
        let (same, zero) = reduced.deflate_unit_root();
        assert_eq!(zero, 0);
        assert_eq!(same, reduced);
    }

    #[test]
    fn compose_one_minus_x_is_involution() {
        let p = IntPoly::from_i64(&[3, 0, -5, 7]);
        assert_eq!(p.compose_one_minus_x().compose_one_minus_x(), p);
        // (1-x)^2 of x^2
        let sq = IntPoly::from_i64(&[0, 0, 1]).compose_one_minus_x();
        assert_eq!(sq, IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn div_exact_detects_non_divisors() {
        let p = IntPoly::from_i64(&[1, -2, 1]);
        let d = IntPoly::from_i64(&[-1, 1]);
        assert_eq!(p.div_exact(&d), Some(d.clone()));
        assert_eq!(p.div_exact(&IntPoly::from_i64(&[1, 1])), None);
    }
}
