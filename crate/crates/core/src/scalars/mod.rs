//! Exact scalars in Q(q^{1/l0}).
//!
//! A [`QScalar`] is a quotient of Laurent polynomials in `t = q^{1/l0}` with
//! integer coefficients, kept in a canonical reduced form so that equality is
//! structural.

mod parse;
pub(crate) mod poly;
mod quantum;

pub use parse::parse_scalar;
pub use quantum::{exp_t_coefficient, quantum_factorial, quantum_integer};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use poly::Poly;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars over q^(1/{0}) and q^(1/{1}) cannot be combined")]
    RootMismatch(u32, u32),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// `t^shift * num(t) / den(t)` with `t = q^{1/l0}`.
///
/// Invariants: `num` and `den` have nonzero constant terms and are coprime,
/// the integer contents of `num` and `den` are jointly coprime and the
/// constant term of `den` is positive. Rational constants carry `l0 == 0`
/// and combine with any root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    l0: u32,
    shift: i64,
    num: Poly,
    den: Poly,
}

fn unify(a: u32, b: u32) -> Result<u32, ScalarError> {
    match (a, b) {
        (0, b) => Ok(b),
        (a, 0) => Ok(a),
        (a, b) if a == b => Ok(a),
        (a, b) => Err(ScalarError::RootMismatch(a, b)),
    }
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            l0: 0,
            shift: 0,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QScalar {
            l0: 0,
            shift: 0,
            num: Poly::constant(n),
            den: Poly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self, ScalarError> {
        if d == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::build(0, 0, Poly::constant(n.into()), Poly::constant(d.into())))
    }

    /// `q^(k / l0)`.
    pub fn t_pow(l0: u32, k: i64) -> Self {
        assert!(l0 > 0, "root order must be positive");
        let l0 = if k == 0 { 0 } else { l0 };
        QScalar {
            l0,
            shift: k,
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// `q^n` for an integer `n`, inside Q(q^{1/l0}).
    pub fn q_pow(l0: u32, n: i64) -> Self {
        Self::t_pow(l0, n * l0 as i64)
    }

    /// `q^r` for a rational exponent; fails if `r * l0` is not an integer.
    pub fn q_pow_ratio(l0: u32, num: i64, den: i64) -> Option<Self> {
        let k = num * l0 as i64;
        if den == 0 || k % den != 0 {
            return None;
        }
        Some(Self::t_pow(l0, k / den))
    }

    /// Laurent polynomial from `(t-exponent, coefficient)` pairs.
    pub fn laurent(l0: u32, terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(k, c)| {
            acc + Self::t_pow(l0, k) * Self::from_int(c)
        })
    }

    pub fn l0(&self) -> u32 {
        self.l0
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in Q.
    pub fn is_rational_constant(&self) -> bool {
        self.shift == 0 && self.num.degree() == 0 && self.den.degree() == 0
    }

    /// True when the denominator is a constant.
    pub fn is_laurent(&self) -> bool {
        self.den.degree() == 0
    }

    /// Rough storage size, used to prefer simple pivots.
    pub(crate) fn size(&self) -> usize {
        self.num.0.len() + self.den.0.len()
    }

    fn build(l0: u32, shift: i64, mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        assert!(!den.is_zero(), "zero denominator");
        let mut shift = shift;
        let a = num.low_zeros();
        num.drop_low(a);
        let b = den.low_zeros();
        den.drop_low(b);
        shift += a as i64 - b as i64;
        if den.degree() > 0 && num.degree() > 0 {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        Self::finish(l0, shift, num, den)
    }

    /// Content and sign normalisation of an already coprime pair.
    fn finish(l0: u32, shift: i64, mut num: Poly, mut den: Poly) -> Self {
        let c = num.content().gcd(&den.content());
        let c = if den.0[0].is_negative() { -c } else { c };
        num.div_scalar(&c);
        den.div_scalar(&c);
        let constant = shift == 0 && num.degree() == 0 && den.degree() == 0;
        QScalar {
            l0: if constant { 0 } else { l0 },
            shift,
            num,
            den,
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, ScalarError> {
        let l0 = unify(self.l0, o.l0)?;
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        let s = self.shift.min(o.shift);
        let a = self.num.shifted_up((self.shift - s) as usize);
        let c = o.num.shifted_up((o.shift - s) as usize);
        if self.den == o.den {
            let num = a.add(&c);
            return Ok(Self::build(l0, s, num, self.den.clone()));
        }
        if self.den.degree() == 0 && o.den.degree() == 0 {
            let b = &self.den.0[0];
            let d = &o.den.0[0];
            let num = a.mul_scalar(d).add(&c.mul_scalar(b));
            return Ok(Self::build(l0, s, num, Poly::constant(b * d)));
        }
        let g = self.den.gcd(&o.den);
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.div_exact(&g), o.den.div_exact(&g))
        };
        let num = a.mul(&d1).add(&c.mul(&b1));
        let den = b1.mul(&o.den);
        Ok(Self::build(l0, s, num, den))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ScalarError> {
        let l0 = unify(self.l0, o.l0)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        let shift = self.shift + o.shift;
        if self.den.degree() == 0 && o.den.degree() == 0 {
            let num = self.num.mul(&o.num);
            let den = Poly::constant(&self.den.0[0] * &o.den.0[0]);
            return Ok(Self::finish(l0, shift, num, den));
        }
        let (a, d) = cancel(&self.num, &o.den);
        let (c, b) = cancel(&o.num, &self.den);
        Ok(Self::finish(l0, shift, a.mul(&c), b.mul(&d)))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&-o)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::finish(self.l0, -self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&o.inv()?)
    }

    pub fn pow(&self, n: i64) -> Self {
        if n < 0 {
            return self.inv().expect("negative power of zero").pow(-n);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Substitution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        let rev = |p: &Poly| {
            let mut v = p.0.clone();
            v.reverse();
            Poly(v)
        };
        let shift = -self.shift - self.num.degree() as i64 + self.den.degree() as i64;
        Self::finish(self.l0, shift, rev(&self.num), rev(&self.den))
    }

    /// Rational value if the scalar is a constant.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        if !self.is_rational_constant() {
            if self.is_zero() {
                return Some((BigInt::zero(), BigInt::one()));
            }
            return None;
        }
        let n = self.num.0.first().cloned().unwrap_or_default();
        let d = self.den.0[0].clone();
        Some((n, d))
    }
}

fn cancel(a: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.degree() == 0 || a.degree() == 0 {
        return (a.clone(), d.clone());
    }
    let g = a.gcd(d);
    if g.is_one() {
        (a.clone(), d.clone())
    } else {
        (a.div_exact(&g), d.div_exact(&g))
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for QScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but deterministic total order, for use in sorted containers.
impl Ord for QScalar {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.l0
            .cmp(&o.l0)
            .then(self.shift.cmp(&o.shift))
            .then_with(|| self.num.cmp_key(&o.num))
            .then_with(|| self.den.cmp_key(&o.den))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, o: &QScalar) -> QScalar {
                self.$checked(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, o: QScalar) -> QScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, o: &QScalar) -> QScalar {
                (&self).$m(o)
            }
        }
        impl $tr<QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, o: QScalar) -> QScalar {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, o: &QScalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, o: &QScalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, o: &QScalar) {
        *self = &*self * o;
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            l0: self.l0,
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl std::iter::Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |a, b| a + b)
    }
}

fn fmt_exponent(k: i64, l0: u32) -> String {
    let l0 = l0.max(1) as i64;
    let g = k.gcd(&l0);
    let (a, b) = (k / g, l0 / g);
    match (a, b) {
        (1, 1) => "q".into(),
        (a, 1) => format!("q^{a}"),
        (a, b) => format!("q^({a}/{b})"),
    }
}

/// Renders `t^shift * p` as a signed sum, highest exponent first.
fn fmt_laurent(p: &Poly, shift: i64, l0: u32) -> String {
    let mut out = String::new();
    for (i, c) in p.0.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let k = shift + i as i64;
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&fmt_exponent(k, l0));
        } else {
            out.push_str(&format!("{mag}*{}", fmt_exponent(k, l0)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_count(p: &Poly) -> usize {
    p.0.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return f.write_str(&fmt_laurent(&self.num, self.shift, self.l0));
        }
        // balance the denominator around q^0 for readability
        let half = (self.den.degree() / 2) as i64;
        let num_shift = self.shift - half;
        let n = fmt_laurent(&self.num, num_shift, self.l0);
        let d = fmt_laurent(&self.den, -half, self.l0);
        let wrap = |s: String, terms: usize, lead_neg: bool| {
            if terms > 1 || lead_neg {
                format!("({s})")
            } else {
                s
            }
        };
        let n = wrap(n, term_count(&self.num), false);
        let d = wrap(d, term_count(&self.den), false);
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

impl serde::Serialize for QScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(l0: u32, n: i64) -> QScalar {
        QScalar::q_pow(l0, n)
    }

    #[test]
    fn canonical_forms_agree() {
        // (q^2 - q^-2)/(q - q^-1) = q + q^-1
        let a = (q(1, 2) - q(1, -2)) / (q(1, 1) - q(1, -1));
        assert_eq!(a, q(1, 1) + q(1, -1));
        assert!(a.is_laurent());
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(
            QScalar::one().checked_div(&QScalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_roots_are_rejected() {
        let a = QScalar::t_pow(2, 1);
        let b = QScalar::t_pow(3, 1);
        assert_eq!(a.checked_add(&b), Err(ScalarError::RootMismatch(2, 3)));
        // constants mix freely
        assert!(a.checked_add(&QScalar::from_int(3)).is_ok());
    }

    #[test]
    fn display_balances_denominator() {
        let x = q(1, -1) / (q(1, 1) + q(1, -1));
        assert_eq!(x.to_string(), "q^-1/(q + q^-1)");
        assert_eq!(QScalar::t_pow(2, 1).to_string(), "q^(1/2)");
        assert_eq!(QScalar::from_ratio(-3, 6).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn bar_inverts_q() {
        let x = (q(1, 2) + QScalar::from_int(3)) / (q(1, 1) - QScalar::one());
        assert_eq!(x.bar().bar(), x);
        assert_eq!(q(1, 3).bar(), q(1, -3));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn laurent(l0: u32) -> impl Strategy<Value = QScalar> {
            prop::collection::vec((-4i64..=4, -3i64..=3), 0..4).prop_map(move |t| QScalar::laurent(l0, &t))
        }

        fn scalar(l0: u32) -> impl Strategy<Value = QScalar> {
            (laurent(l0), laurent(l0).prop_filter("nonzero", |d| !d.is_zero())).prop_map(|(n, d)| n / d)
        }

        fn triple() -> impl Strategy<Value = (u32, QScalar, QScalar, QScalar)> {
            (1u32..=3).prop_flat_map(|l0| (Just(l0), scalar(l0), scalar(l0), scalar(l0)))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn field_axioms((_l0, a, b, c) in triple()) {
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
                prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
                prop_assert_eq!(&(&a - &b) + &b, a.clone());
                if !a.is_zero() {
                    prop_assert!((&a * &a.inv().unwrap()).is_one());
                }
            }

            #[test]
            fn bar_is_a_ring_involution((_l0, a, b, _c) in triple()) {
                prop_assert_eq!(a.bar().bar(), a.clone());
                prop_assert_eq!((&a * &b).bar(), a.bar() * b.bar());
                prop_assert_eq!((&a + &b).bar(), a.bar() + b.bar());
            }

            #[test]
            fn display_parses_back((l0, a, _b, _c) in triple()) {
                prop_assert_eq!(parse_scalar(&a.to_string(), l0).unwrap(), a);
            }
        }
    }
}
