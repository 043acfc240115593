//! Braid group automorphisms `T_i` of U_q(g).

use super::algebra::{Generator, QuantumGroup};
use super::element::{Monomial, UElement};
use super::UqError;
use crate::cartan::{RootSum, WeylWord};
use crate::linalg::Mat;
use crate::scalars::QScalar;
use std::collections::BTreeMap;

impl QuantumGroup {
    /// `T_i` on a generator.
    pub fn braid_generator(&self, i: usize, g: &Generator) -> Result<UElement, UqError> {
        let d = self.datum();
        let l0 = d.l0();
        let di = i64::from(d.symmetrizer(i));
        let minus_one = -QScalar::one();
        Ok(match *g {
            Generator::K(w) => self.k(d.reflect(i, &w)),
            Generator::E(j) if j == i => self.mul(&self.f(i), &self.k_i(i))?.scale(&minus_one),
            Generator::F(j) if j == i => {
                let kinv = self.k(-d.simple_root(i));
                self.mul(&kinv, &self.e(i))?.scale(&minus_one)
            }
            Generator::E(j) => {
                let r = -d.cartan_entry(i, j) as usize;
                let mut out = UElement::zero();
                for k in 0..=r {
                    let c = QScalar::q_pow(l0, -di * k as i64);
                    let c = if k % 2 == 1 { -c } else { c };
                    let t = self.product(&[
                        self.divided_power(false, i, r - k)?,
                        self.e(j),
                        self.divided_power(false, i, k)?,
                    ])?;
                    out.add_scaled(&t, &c);
                }
                out
            }
            Generator::F(j) => {
                let r = -d.cartan_entry(i, j) as usize;
                let mut out = UElement::zero();
                for k in 0..=r {
                    let c = QScalar::q_pow(l0, di * k as i64);
                    let c = if k % 2 == 1 { -c } else { c };
                    let t = self.product(&[
                        self.divided_power(true, i, k)?,
                        self.f(j),
                        self.divided_power(true, i, r - k)?,
                    ])?;
                    out.add_scaled(&t, &c);
                }
                out
            }
        })
    }

    /// `T_i^{-1}` on a generator, found by solving `T_i(x) = generator`
    /// inside the expected weight space.
    pub fn braid_inverse_generator(&self, i: usize, g: &Generator) -> Result<UElement, UqError> {
        let d = self.datum();
        let rank = self.rank();
        match *g {
            Generator::K(w) => Ok(self.k(d.reflect(i, &w))),
            Generator::E(j) | Generator::F(j) => {
                let minus = matches!(g, Generator::F(_));
                let target = self.generator(g);
                let candidates: Vec<UElement> = if i == j {
                    // T_i maps the line of f_i k_{+-alpha_i}, e_i k_{+-alpha_i} onto e_i, f_i
                    let ai = d.simple_root(i);
                    let base = if minus { self.e(i) } else { self.f(i) };
                    [ai, -ai]
                        .iter()
                        .flat_map(|&k| {
                            [self.mul(&base, &self.k(k)), self.mul(&self.k(k), &base)]
                        })
                        .collect::<Result<_, _>>()?
                } else {
                    let deg = d.reflect_root(i, &RootSum::unit(rank, j));
                    let b = self.basis(&deg)?;
                    b.standard
                        .iter()
                        .map(|w| self.word_element(minus, w))
                        .collect::<Result<_, _>>()?
                };
                let images: Vec<UElement> = candidates
                    .iter()
                    .map(|c| self.braid(i, c))
                    .collect::<Result<_, _>>()?;
                let coeffs = solve_combination(&images, &target).ok_or(UqError::BraidInverse(i))?;
                let mut out = UElement::zero();
                for (c, x) in candidates.iter().zip(&coeffs) {
                    out.add_scaled(c, x);
                }
                Ok(out)
            }
        }
    }

    fn apply_multiplicative(
        &self,
        u: &UElement,
        image: &dyn Fn(&Generator) -> Result<UElement, UqError>,
    ) -> Result<UElement, UqError> {
        let mut out = UElement::zero();
        for (m, c) in u.iter() {
            let mut acc = self.one();
            for g in self.monomial_factors(m) {
                acc = self.mul(&acc, &image(&g)?)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    pub fn braid(&self, i: usize, u: &UElement) -> Result<UElement, UqError> {
        let mut cache: BTreeMap<String, UElement> = BTreeMap::new();
        let cache = std::cell::RefCell::new(&mut cache);
        self.apply_multiplicative(u, &|g| {
            let key = format!("{g:?}");
            if let Some(v) = cache.borrow().get(&key) {
                return Ok(v.clone());
            }
            let v = self.braid_generator(i, g)?;
            cache.borrow_mut().insert(key, v.clone());
            Ok(v)
        })
    }

    pub fn braid_inverse(&self, i: usize, u: &UElement) -> Result<UElement, UqError> {
        self.apply_multiplicative(u, &|g| self.braid_inverse_generator(i, g))
    }

    /// `T_w = T_{i_1} ... T_{i_n}` for the given word.
    pub fn braid_word(&self, w: &WeylWord, u: &UElement) -> Result<UElement, UqError> {
        w.letters().rev().try_fold(u.clone(), |acc, i| self.braid(i, &acc))
    }

    pub fn braid_word_inverse(&self, w: &WeylWord, u: &UElement) -> Result<UElement, UqError> {
        w.letters().try_fold(u.clone(), |acc, i| self.braid_inverse(i, &acc))
    }
}

/// Coefficients `c` with `sum c_k v_k = target`, if any.
pub(crate) fn solve_combination(vs: &[UElement], target: &UElement) -> Option<Vec<QScalar>> {
    let mut support: Vec<Monomial> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for v in vs.iter().chain(std::iter::once(target)) {
        for m in v.terms.keys() {
            if seen.insert(m.clone()) {
                support.push(m.clone());
            }
        }
    }
    let pos: BTreeMap<&Monomial, usize> = support.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut a = Mat::zeros(support.len(), vs.len());
    for (j, v) in vs.iter().enumerate() {
        for (m, c) in v.iter() {
            a[(pos[m], j)] = c.clone();
        }
    }
    let mut b = vec![QScalar::zero(); support.len()];
    for (m, c) in target.iter() {
        b[pos[m]] = c.clone();
    }
    a.solve(&b)
}
