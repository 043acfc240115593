//! Coproduct, counit and antipode.

use super::algebra::{Generator, QuantumGroup};
use super::element::{word_degree, Monomial, UElement, Word};
use super::UqError;
use crate::scalars::QScalar;
use std::collections::BTreeMap;
use std::fmt;

/// Element of an n-fold tensor power of U.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UTensor {
    pub terms: BTreeMap<Vec<Monomial>, QScalar>,
}

impl UTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, m: Vec<Monomial>, c: QScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(QScalar::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, o: &UTensor, c: &QScalar) {
        for (m, x) in &o.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn sub(&self, o: &UTensor) -> UTensor {
        let mut out = self.clone();
        out.add_scaled(o, &-QScalar::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Monomial>, &QScalar)> {
        self.terms.iter()
    }

    pub fn from_pure(factors: &[UElement]) -> UTensor {
        let mut out = UTensor::zero();
        let mut acc: Vec<(Vec<Monomial>, QScalar)> = vec![(Vec::new(), QScalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (ms, c) in &acc {
                for (m, x) in f.iter() {
                    let mut v = ms.clone();
                    v.push(m.clone());
                    next.push((v, c * x));
                }
            }
            acc = next;
        }
        for (m, c) in acc {
            out.add_term(m, c);
        }
        out
    }
}

impl fmt::Display for UTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(ms, c)| {
                let factors: Vec<String> = ms.iter().map(ToString::to_string).collect();
                format!("({c}) {}", factors.join(" (x) "))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for UTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..(1u32 << n)).map(move |mask| (0..n).map(|p| mask & (1 << p) != 0).collect())
}

impl QuantumGroup {
    /// Coproduct of a monomial as a list of `(left, right, coefficient)`.
    fn coproduct_monomial(&self, m: &Monomial) -> Result<Vec<(Monomial, Monomial, QScalar)>, UqError> {
        let d = self.datum();
        let rank = self.rank();
        let alpha = |i: u8| d.simple_root(i as usize);
        // f-word: (f (x) k^{-1} + 1 (x) f) per letter
        let mut fparts: Vec<(Word, Word, crate::cartan::Weight, QScalar)> = Vec::new();
        for s in subsets(m.f.len()) {
            let mut exp = 0i64;
            let mut nu = crate::cartan::Weight::zero(rank);
            for p in 0..m.f.len() {
                if !s[p] {
                    continue;
                }
                nu = nu + alpha(m.f[p]);
                for p2 in p + 1..m.f.len() {
                    if !s[p2] {
                        exp += d.form_t(&alpha(m.f[p]), &alpha(m.f[p2]));
                    }
                }
            }
            let left: Word = (0..m.f.len()).filter(|&p| s[p]).map(|p| m.f[p]).collect();
            let right: Word = (0..m.f.len()).filter(|&p| !s[p]).map(|p| m.f[p]).collect();
            fparts.push((left, right, nu, QScalar::t_pow(d.l0(), exp)));
        }
        // e-word: (e (x) 1 + k (x) e) per letter
        let mut eparts: Vec<(Word, Word, crate::cartan::Weight, QScalar)> = Vec::new();
        for s in subsets(m.e.len()) {
            let mut exp = 0i64;
            let mut nu = crate::cartan::Weight::zero(rank);
            for p in 0..m.e.len() {
                if !s[p] {
                    nu = nu + alpha(m.e[p]);
                    continue;
                }
                for p2 in p + 1..m.e.len() {
                    if !s[p2] {
                        exp -= d.form_t(&alpha(m.e[p2]), &alpha(m.e[p]));
                    }
                }
            }
            let left: Word = (0..m.e.len()).filter(|&p| s[p]).map(|p| m.e[p]).collect();
            let right: Word = (0..m.e.len()).filter(|&p| !s[p]).map(|p| m.e[p]).collect();
            eparts.push((left, right, nu, QScalar::t_pow(d.l0(), exp)));
        }
        let mut out = Vec::new();
        for (yl, yr, nu_f, cf) in &fparts {
            let yl_r = self.reduce_word(yl)?;
            let yr_r = self.reduce_word(yr)?;
            for (xl, xr, nu_e, ce) in &eparts {
                let xl_r = self.reduce_word(xl)?;
                let xr_r = self.reduce_word(xr)?;
                let c = cf * ce;
                let kl = m.k + *nu_e;
                let kr = m.k - *nu_f;
                for (a, ca) in &yl_r {
                    for (b, cb) in &xl_r {
                        let left = Monomial {
                            f: a.clone(),
                            k: kl,
                            e: b.clone(),
                        };
                        let cl = &c * &(ca * cb);
                        for (a2, ca2) in &yr_r {
                            for (b2, cb2) in &xr_r {
                                let right = Monomial {
                                    f: a2.clone(),
                                    k: kr,
                                    e: b2.clone(),
                                };
                                out.push((left.clone(), right, &cl * &(ca2 * cb2)));
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn coproduct(&self, u: &UElement) -> Result<UTensor, UqError> {
        let mut out = UTensor::zero();
        for (m, c) in u.iter() {
            for (l, r, x) in self.coproduct_monomial(m)? {
                out.add_term(vec![l, r], c * &x);
            }
        }
        Ok(out)
    }

    /// Apply the coproduct to factor `slot` of a tensor.
    pub fn coproduct_at(&self, t: &UTensor, slot: usize) -> Result<UTensor, UqError> {
        let mut out = UTensor::zero();
        for (ms, c) in t.iter() {
            for (l, r, x) in self.coproduct_monomial(&ms[slot])? {
                let mut v = ms[..slot].to_vec();
                v.push(l);
                v.push(r);
                v.extend(ms[slot + 1..].iter().cloned());
                out.add_term(v, c * &x);
            }
        }
        Ok(out)
    }

    /// `Delta_n = (Delta (x) id) Delta_{n-1}`, an (n+1)-fold tensor.
    pub fn iterated_coproduct(&self, u: &UElement, n: usize) -> Result<UTensor, UqError> {
        let mut t = UTensor::zero();
        for (m, c) in u.iter() {
            t.add_term(vec![m.clone()], c.clone());
        }
        for _ in 0..n {
            t = self.coproduct_at(&t, 0)?;
        }
        Ok(t)
    }

    pub fn counit(&self, u: &UElement) -> QScalar {
        u.iter()
            .filter(|(m, _)| m.f.is_empty() && m.e.is_empty())
            .map(|(_, c)| c.clone())
            .sum()
    }

    fn antipode_generator(&self, g: &Generator, inverse: bool) -> Result<UElement, UqError> {
        Ok(match *g {
            Generator::K(w) => self.k(-w),
            Generator::E(i) => {
                let kinv = self.k(-self.datum().simple_root(i));
                let p = if inverse {
                    self.mul(&self.e(i), &kinv)?
                } else {
                    self.mul(&kinv, &self.e(i))?
                };
                p.scale(&-QScalar::one())
            }
            Generator::F(i) => {
                let k = self.k_i(i);
                let p = if inverse {
                    self.mul(&k, &self.f(i))?
                } else {
                    self.mul(&self.f(i), &k)?
                };
                p.scale(&-QScalar::one())
            }
        })
    }

    fn anti_map(&self, u: &UElement, inverse: bool) -> Result<UElement, UqError> {
        let mut out = UElement::zero();
        for (m, c) in u.iter() {
            let mut acc = self.one();
            for g in self.monomial_factors(m).iter().rev() {
                acc = self.mul(&acc, &self.antipode_generator(g, inverse)?)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    pub fn antipode(&self, u: &UElement) -> Result<UElement, UqError> {
        self.anti_map(u, false)
    }

    pub fn antipode_inverse(&self, u: &UElement) -> Result<UElement, UqError> {
        self.anti_map(u, true)
    }

    /// Componentwise product of two tensors of the same arity.
    pub fn tensor_mul(&self, a: &UTensor, b: &UTensor) -> Result<UTensor, UqError> {
        let mut out = UTensor::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                assert_eq!(ma.len(), mb.len(), "tensor arity mismatch");
                let parts: Vec<UElement> = ma
                    .iter()
                    .zip(mb)
                    .map(|(x, y)| self.mul_monomials(x, y))
                    .collect::<Result<_, _>>()?;
                out.add_scaled(&UTensor::from_pure(&parts), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Multiply the factors of a 2-tensor together after applying `left` to
    /// the first factor.
    pub fn contract(
        &self,
        t: &UTensor,
        left: impl Fn(&UElement) -> Result<UElement, UqError>,
    ) -> Result<UElement, UqError> {
        let mut out = UElement::zero();
        for (ms, c) in t.iter() {
            let l = left(&UElement::from_monomial(ms[0].clone(), QScalar::one()))?;
            let r = UElement::from_monomial(ms[1].clone(), QScalar::one());
            out.add_scaled(&self.mul(&l, &r)?, c);
        }
        Ok(out)
    }

    /// Degree of the E-part minus the F-part of a monomial, as a weight.
    pub fn monomial_weight(&self, m: &Monomial) -> crate::cartan::Weight {
        let r = self.rank();
        let d = self.datum();
        d.root_to_weight(&word_degree(&m.e, r)) - d.root_to_weight(&word_degree(&m.f, r))
    }
}
