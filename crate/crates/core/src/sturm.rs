//! Sturm sequences over exact rational arithmetic: sign-change counts at
//! rational points give the number of distinct real roots in an interval,
//! which is how `p_* = 1` is decided without floating point.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::IntPoly;

/// The canonical Sturm chain `f, f', -rem(...)` with primitive-part reduction
/// at every step (coefficients stay manageable, signs preserved).
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = Vec::new();
        chain.push(p.primitive());
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
            loop {
                let n = chain.len();
                let r = chain[n - 2].pseudo_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).primitive());
                if chain.last().unwrap().degree() == 0 {
                    break;
                }
            }
        }
        SturmChain { chain }
    }

    pub fn polynomials(&self) -> &[IntPoly] {
        &self.chain
    }

    /// Sign variations of the chain at `point` (exact; zero values skipped).
    pub fn variations_at(&self, point: &BigRational) -> usize {
        let num = point.numer();
        let den = point.denom();
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(num, den);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    /// Requires the base polynomial to be nonzero at both endpoints.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a < b);
        debug_assert!(self.chain[0].sign_at(a.numer(), a.denom()) != Ordering::Equal);
        debug_assert!(self.chain[0].sign_at(b.numer(), b.denom()) != Ordering::Equal);
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Isolates and refines the smallest root of a squarefree polynomial in
/// `(lo, hi)` down to a bracket of width at most `width`. The polynomial must
/// be nonzero at `lo` and `hi` and have at least one root inside.
pub fn isolate_smallest_root(
    poly: &IntPoly,
    chain: &SturmChain,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let two = BigRational::from(BigInt::from(2));
    let mut a = lo.clone();
    let mut b = hi.clone();
    let mut va = chain.variations_at(&a);
    let mut vb = chain.variations_at(&b);
    debug_assert!(va > vb, "no root inside the starting interval");
    while va - vb > 1 || &b - &a > *width {
        let m = (&a + &b) / &two;
        if poly.sign_at(m.numer(), m.denom()) == Ordering::Equal {
            // The midpoint is itself a (rational) root. If anything lies to
            // its left it is smaller; otherwise m is the answer exactly.
            let eps = (&b - &a) / BigRational::from(BigInt::from(1u64 << 20));
            let m_lo = &m - &eps;
            let v_lo = chain.variations_at(&m_lo);
            if va > v_lo {
                b = m_lo;
                vb = v_lo;
            } else {
                let mut e = eps;
                while &e + &e > *width {
                    e = &e / &two;
                }
                return (&m - &e, &m + &e);
            }
        } else {
            let vm = chain.variations_at(&m);
            if va > vm {
                b = m;
                vb = vm;
            } else {
                a = m;
                va = vm;
            }
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_roots_of_quadratic() {
        // x^2 + x - 1: roots (-1±sqrt5)/2, exactly one in (0,1)
        let p = IntPoly::from_i64(&[-1, 1, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rational(0, 1), &rational(1, 1)), 1);
        assert_eq!(chain.count_roots(&rational(-2, 1), &rational(1, 1)), 2);
        assert_eq!(chain.count_roots(&rational(-2, 1), &rational(-1, 1)), 1);
    }

    #[test]
    fn counts_distinct_roots_of_non_squarefree() {
        // (x-1)^2 (2x-1): distinct roots {1/2, 1}; count in (0, 2) is 2
        let p = &(&IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[-1, 1]))
            * &IntPoly::from_i64(&[-1, 2]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rational(0, 1), &rational(2, 1)), 2);
        assert_eq!(chain.count_roots(&rational(0, 1), &rational(3, 4)), 1);
    }

    #[test]
    fn no_roots_means_zero_count() {
        let p = IntPoly::from_i64(&[1, 0, 1]); // x^2 + 1
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rational(-5, 1), &rational(5, 1)), 0);
    }

    #[test]
    fn isolates_smallest_root_of_cubic() {
        // (4x-1)(2x-1)(4x-3): roots 1/4, 1/2, 3/4
        let p = &(&IntPoly::from_i64(&[-1, 4]) * &IntPoly::from_i64(&[-1, 2]))
            * &IntPoly::from_i64(&[-3, 4]);
        let chain = SturmChain::new(&p);
        let width = rational(1, 1_000_000_000);
        let (a, b) = isolate_smallest_root(&p, &chain, &rational(0, 1), &rational(1, 1), &width);
        let target = rational(1, 4);
        assert!(a <= target && target <= b);
        assert!(&b - &a <= width);
        assert!(b < rational(3, 10), "must isolate the smallest root");
    }

    #[test]
    fn isolation_handles_exact_rational_root_at_midpoint() {
        // roots at exactly 1/2 and 7/8; the first midpoint of (0,1) hits 1/2
        let p = &IntPoly::from_i64(&[-1, 2]) * &IntPoly::from_i64(&[-7, 8]);
        let chain = SturmChain::new(&p);
        let width = rational(1, 1_000_000);
        let (a, b) = isolate_smallest_root(&p, &chain, &rational(0, 1), &rational(1, 1), &width);
        assert!(a < rational(1, 2) && rational(1, 2) < b);
        assert!(&b - &a <= width);
    }
}
