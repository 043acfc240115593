//! Extremal elements `c^w_lambda`, the Ore sets `S_w` and Ore witnesses.

use super::{CoordAlgebra, CoordElement, CoordError};
use crate::cartan::{WeylWord, Weight};
use crate::linalg::Mat;
use crate::scalars::{quantum_factorial, QScalar};
use serde::Serialize;

/// `c^w_lambda`, spanning the line `A(lambda)_{w^{-1} lambda}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalElement {
    pub w: WeylWord,
    pub grade: Weight,
    pub element: CoordElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OreSide {
    /// `t phi = psi s`
    Left,
    /// `phi t = s psi`
    Right,
}

#[derive(Debug, Clone, Serialize)]
pub struct OreWitness {
    pub side: OreSide,
    pub t: ExtremalElement,
    pub psi: CoordElement,
    /// Grade of `psi`.
    pub aux_grade: Weight,
    /// Auxiliary grades tried, including the successful one.
    pub searched: usize,
}

impl CoordAlgebra<'_> {
    /// Applies divided powers `f_j^{(m)}` to `v_lambda` along the canonical
    /// reduced word of `w^{-1}`, rightmost letter first.
    pub fn extremal(&self, w: &WeylWord, lambda: &Weight) -> Result<ExtremalElement, CoordError> {
        let d = self.datum();
        let key = (d.weyl_act(w, &d.rho()), *lambda);
        if let Some(c) = self.extremals.read().expect("extremal cache poisoned").get(&key) {
            return Ok(c.clone());
        }
        let g = self.grade(lambda)?;
        let w_inv = d.reduce(&w.inverse());
        let target = d.weyl_act(&w_inv, lambda);
        if !g.covers(&d.weight_to_root(&(*lambda - target))?) {
            return Err(CoordError::OutsideDepth {
                grade: *lambda,
                weight: target,
            });
        }
        let mut v = g.top_covector();
        let mut wt = *lambda;
        for j in w_inv.letters().rev() {
            let m = wt[j];
            debug_assert!(m >= 0, "reduced word lowered a negative coordinate");
            for _ in 0..m {
                v = g.module.f[j].apply(&v);
            }
            let fact = quantum_factorial(m as i64, d.symmetrizer(j) as i64, d.l0());
            let inv = fact.inv().expect("quantum factorial is nonzero");
            v.iter_mut().for_each(|x| *x *= &inv);
            wt = d.reflect(j, &wt);
        }
        let line = g.module.weights.iter().filter(|x| **x == target).count();
        let element = self.element(lambda, v)?;
        if line != 1 || element.is_zero() {
            return Err(CoordError::NotExtremal {
                grade: *lambda,
                weight: target,
            });
        }
        let c = ExtremalElement {
            w: w.clone(),
            grade: *lambda,
            element,
        };
        self.extremals
            .write()
            .expect("extremal cache poisoned")
            .insert(key, c.clone());
        Ok(c)
    }

    /// `kappa` with `c^w_lambda c^w_mu = kappa c^w_{lambda+mu}`.
    pub fn extremal_ratio(&self, w: &WeylWord, lambda: &Weight, mu: &Weight) -> Result<QScalar, CoordError> {
        let a = self.extremal(w, lambda)?;
        let b = self.extremal(w, mu)?;
        let c = self.extremal(w, &(*lambda + *mu))?;
        let prod = self.mul(&a.element, &b.element)?;
        let k = c
            .element
            .vector
            .iter()
            .position(|x| !x.is_zero())
            .expect("extremal elements are nonzero");
        let kappa = &prod.vector[k] / &c.element.vector[k];
        if c.element.scale(&kappa).vector != prod.vector || kappa.is_zero() {
            return Err(CoordError::NotExtremal {
                grade: c.grade,
                weight: c.element.weight.expect("extremal is homogeneous"),
            });
        }
        Ok(kappa)
    }

    /// Searches auxiliary grades `xi` in increasing order for
    /// `t = c^w_{xi + lambda - eta}` and `psi` of grade `xi` solving the Ore
    /// equation for `phi` of grade `eta` and `s = c^w_lambda`.
    pub fn ore_witness(&self, phi: &CoordElement, s: &ExtremalElement, side: OreSide) -> Result<OreWitness, CoordError> {
        let phi_wt = phi.weight.ok_or(CoordError::NotHomogeneous)?;
        let s_wt = s.element.weight.expect("extremal is homogeneous");
        let (eta, lambda) = (phi.grade, s.grade);
        let bound = self.cutoff - lambda;
        let mut searched = 0;
        for xi in dominant_below(&bound) {
            let mu = xi + lambda - eta;
            if !mu.is_dominant() {
                continue;
            }
            searched += 1;
            let t = self.extremal(&s.w, &mu)?;
            let lhs = match side {
                OreSide::Left => self.mul(&t.element, phi)?,
                OreSide::Right => self.mul(phi, &t.element)?,
            };
            let t_wt = t.element.weight.expect("extremal is homogeneous");
            let psi_wt = phi_wt + t_wt - s_wt;
            let g = self.grade(&xi)?;
            let space: Vec<usize> = (0..g.dim()).filter(|&k| g.module.weights[k] == psi_wt).collect();
            if space.is_empty() {
                continue;
            }
            let cols = space
                .iter()
                .map(|&k| {
                    let b = self.element(&xi, g.module.unit(k))?;
                    Ok(match side {
                        OreSide::Left => self.mul(&b, &s.element)?,
                        OreSide::Right => self.mul(&s.element, &b)?,
                    }
                    .vector)
                })
                .collect::<Result<Vec<_>, CoordError>>()?;
            let m = Mat::from_columns(lhs.vector.len(), &cols);
            let Some(sol) = m.solve(&lhs.vector) else {
                continue;
            };
            let mut n = g.module.zero_vec();
            for (&k, x) in space.iter().zip(sol) {
                n[k] = x;
            }
            let psi = self.element(&xi, n)?;
            let rhs = match side {
                OreSide::Left => self.mul(&psi, &s.element)?,
                OreSide::Right => self.mul(&s.element, &psi)?,
            };
            assert_eq!(rhs.vector, lhs.vector, "solved Ore equation fails on recomputation");
            return Ok(OreWitness {
                side,
                t,
                psi,
                aux_grade: xi,
                searched,
            });
        }
        Err(CoordError::NoWitness(bound))
    }

    /// Rank of the span of `A(lambda) c^w_mu` over all `w`, next to
    /// `dim A(lambda+mu)`.
    pub fn chart_cover_rank(&self, lambda: &Weight, mu: &Weight) -> Result<(usize, usize), CoordError> {
        let d = self.datum();
        let nu = *lambda + *mu;
        let dim = self.dim(&nu)?;
        let mut cols = Vec::new();
        for w in d.weyl_group() {
            let c = self.extremal(&w, mu)?;
            for b in self.basis(lambda)? {
                cols.push(self.mul(&b, &c.element)?.vector);
            }
        }
        Ok((Mat::from_columns(dim, &cols).rank(), dim))
    }
}

/// Dominant weights `xi <= bound`, ordered by coordinate sum and then
/// lexicographically.
pub(crate) fn dominant_below(bound: &Weight) -> Vec<Weight> {
    if !bound.is_dominant() {
        return Vec::new();
    }
    let rank = bound.rank();
    let mut out = vec![Weight::zero(rank)];
    for i in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=bound[i]).map(move |c| {
                    let mut x = w;
                    x[i] = c;
                    x
                })
            })
            .collect();
    }
    out.sort_by_key(|w| (w.coords().iter().sum::<i32>(), *w));
    out
}
