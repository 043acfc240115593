//! Dense integer polynomials in one variable, used as numerators and
//! denominators of [`super::QScalar`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Coefficient `i` multiplies `t^i`. No trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub(crate) struct Poly(pub(crate) Vec<BigInt>);

impl Poly {
    pub(crate) fn zero() -> Self {
        Poly(Vec::new())
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    pub(crate) fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    pub(crate) fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn lead(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Number of zero coefficients below the first nonzero one.
    pub(crate) fn low_zeros(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub(crate) fn drop_low(&mut self, k: usize) {
        self.0.drain(..k);
    }

    pub(crate) fn shifted_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        Poly(v)
    }

    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub(crate) fn div_scalar(&mut self, c: &BigInt) {
        if c.is_one() {
            return;
        }
        for x in &mut self.0 {
            *x = &*x / c;
        }
    }

    pub(crate) fn mul_scalar(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|x| x * c).collect())
    }

    pub(crate) fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|x| -x).collect())
    }

    pub(crate) fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (x, y) in v.iter_mut().zip(&short.0) {
            *x += y;
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    pub(crate) fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.0.len() == 1 {
            return other.mul_scalar(&self.0[0]);
        }
        if other.0.len() == 1 {
            return self.mul_scalar(&other.0[0]);
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &Poly) -> Poly {
        let mut r = self.clone();
        let dl = d.lead().clone();
        let dd = d.degree();
        while !r.is_zero() && r.degree() >= dd {
            let rl = r.lead().clone();
            let shift = r.degree() - dd;
            let g = rl.gcd(&dl);
            let mr = &dl / &g;
            let md = &rl / &g;
            let mut next = r.mul_scalar(&mr);
            for (j, c) in d.0.iter().enumerate() {
                next.0[j + shift] -= c * &md;
            }
            next.trim();
            r = next;
        }
        r
    }

    pub(crate) fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut p = self.clone();
        let mut c = p.content();
        if p.lead().is_negative() {
            c = -c;
        }
        p.div_scalar(&c);
        p
    }

    /// Primitive gcd with positive leading coefficient.
    pub(crate) fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.degree() == 0 || other.degree() == 0 {
            return Poly::one();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        while !b.is_zero() {
            if b.degree() == 0 {
                return Poly::one();
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Exact quotient; panics if `d` does not divide `self` over the integers.
    pub(crate) fn div_exact(&self, d: &Poly) -> Poly {
        if d.degree() == 0 {
            let c = &d.0[0];
            let mut q = self.clone();
            q.div_scalar(c);
            return q;
        }
        let mut r = self.clone();
        let dd = d.degree();
        let dl = d.lead().clone();
        if r.is_zero() {
            return r;
        }
        let mut q = vec![BigInt::zero(); r.degree().saturating_sub(dd) + 1];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let (c, rem) = r.lead().div_rem(&dl);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (j, x) in d.0.iter().enumerate() {
                r.0[j + shift] -= x * &c;
            }
            q[shift] = c;
            r.trim();
        }
        assert!(r.is_zero(), "inexact polynomial division");
        let mut q = Poly(q);
        q.trim();
        q
    }

    pub(crate) fn cmp_key(&self, other: &Poly) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        let mut p = Poly(v.iter().map(|&x| BigInt::from(x)).collect());
        p.trim();
        p
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (t+1)(t^2+1) and (t+1)(t-1)
        let a = p(&[1, 1]).mul(&p(&[1, 0, 1]));
        let b = p(&[1, 1]).mul(&p(&[-1, 1]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1])), p(&[1, 0, 1]));
    }

    #[test]
    fn gcd_coprime() {
        assert_eq!(p(&[2, 0, 2]).gcd(&p(&[3, 3])), Poly::one());
    }
}
