//! `S_w^{-1} A` realised weight space by weight space as a direct limit of
//! `A(lambda + mu)` under right multiplication by `c^w_rho`, and the map
//! `theta` to functionals on `U^+`.

use super::{CoordAlgebra, CoordElement, CoordError};
use crate::cartan::{CharacterPoly, RootSum, WeylWord, Weight};
use crate::linalg::Mat;
use serde::Serialize;

/// `numerator * (c^w_denominator)^{-1}`.
#[derive(Debug, Clone, Serialize)]
pub struct LocalizedElement {
    pub w: WeylWord,
    pub grade: Weight,
    pub denominator: Weight,
    pub numerator: CoordElement,
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelData {
    pub numerator_grade: Weight,
    pub dim: usize,
    /// Rank of right multiplication by `c^w_rho` into the next level.
    pub rank_to_next: usize,
}

/// The weight space of `(S_w^{-1} A)(lambda)` of weight
/// `w^{-1}(lambda - gamma)`.
#[derive(Debug, Clone, Serialize)]
pub struct LocalizedSpace {
    pub w: WeylWord,
    pub grade: Weight,
    pub gamma: RootSum,
    pub weight: Weight,
    pub chain: Vec<LevelData>,
    /// First level whose transition map is bijective with dimension
    /// `dim U^+_gamma`.
    pub level: usize,
    pub dim: usize,
    pub basis: Vec<LocalizedElement>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaEntry {
    pub gamma: RootSum,
    pub weight: Weight,
    pub dim: usize,
    /// `dim U^+_gamma`.
    pub functionals: usize,
    pub rank: usize,
    /// The functionals of `v` and of `v c_rho` agree.
    pub compatible: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaReport {
    pub grade: Weight,
    pub entries: Vec<ThetaEntry>,
    pub ok: bool,
}

impl CoordAlgebra<'_> {
    pub fn localize(&self, w: &WeylWord, lambda: &Weight, gamma: &RootSum) -> Result<LocalizedSpace, CoordError> {
        let d = self.datum();
        let rank = d.rank();
        let rho = d.rho();
        let w_inv = d.reduce(&w.inverse());
        let bound = self.uq.basis(gamma)?.dim();
        let mut base = Weight::zero(rank);
        for i in 0..rank {
            base[i] = (-lambda[i]).max(0);
        }
        let c_rho = self.extremal(w, &rho)?;
        let space = |nu: &Weight| -> Result<Vec<usize>, CoordError> {
            let g = self.grade(nu)?;
            let target = d.weyl_act(&w_inv, &(*nu - d.root_to_weight(gamma)));
            if !g.covers(&d.weight_to_root(&(*nu - target))?) {
                return Err(CoordError::OutsideDepth {
                    grade: *nu,
                    weight: target,
                });
            }
            Ok((0..g.dim()).filter(|&k| g.module.weights[k] == target).collect())
        };
        let mut chain = Vec::new();
        let mut mu = base;
        loop {
            let nu = *lambda + mu;
            let next = nu + rho;
            if !next.le_componentwise(&self.cutoff) {
                return Err(CoordError::NotStabilized(nu));
            }
            let (src, dst) = (space(&nu)?, space(&next)?);
            let g = self.grade(&nu)?;
            let cols = src
                .iter()
                .map(|&k| {
                    let b = self.element(&nu, g.module.unit(k))?;
                    let img = self.mul(&b, &c_rho.element)?;
                    Ok(dst.iter().map(|&j| img.vector[j].clone()).collect())
                })
                .collect::<Result<Vec<_>, CoordError>>()?;
            let r = if cols.is_empty() { 0 } else { Mat::from_columns(dst.len(), &cols).rank() };
            chain.push(LevelData {
                numerator_grade: nu,
                dim: src.len(),
                rank_to_next: r,
            });
            if r == src.len() && r == dst.len() && r == bound {
                let basis = src
                    .iter()
                    .map(|&k| {
                        Ok(LocalizedElement {
                            w: w.clone(),
                            grade: *lambda,
                            denominator: mu,
                            numerator: self.element(&nu, g.module.unit(k))?,
                        })
                    })
                    .collect::<Result<Vec<_>, CoordError>>()?;
                return Ok(LocalizedSpace {
                    w: w.clone(),
                    grade: *lambda,
                    gamma: *gamma,
                    weight: d.weyl_act(&w_inv, &(*lambda - d.root_to_weight(gamma))),
                    level: chain.len() - 1,
                    dim: r,
                    chain,
                    basis,
                });
            }
            mu = mu + rho;
        }
    }

    /// Character of `(S_w^{-1} A)(lambda)` over the drops `gamma <= depth`.
    pub fn localized_character(&self, w: &WeylWord, lambda: &Weight, depth: &RootSum) -> Result<CharacterPoly, CoordError> {
        let mut ch = CharacterPoly::new();
        for gamma in depth.box_below() {
            let s = self.localize(w, lambda, &gamma)?;
            ch.add_term(s.weight, s.dim as i64);
        }
        Ok(ch)
    }

    /// Brings `x` to denominator `target >= x.denominator` without changing
    /// the fraction.
    pub fn lift(&self, x: &LocalizedElement, target: &Weight) -> Result<LocalizedElement, CoordError> {
        let extra = *target - x.denominator;
        let c = self.extremal(&x.w, &extra)?;
        let kappa = self.extremal_ratio(&x.w, &x.denominator, &extra)?;
        let num = self.mul(&x.numerator, &c.element)?;
        Ok(LocalizedElement {
            w: x.w.clone(),
            grade: x.grade,
            denominator: *target,
            numerator: num.scale(&kappa.inv().expect("extremal ratio is nonzero")),
        })
    }

    /// Equality of fractions: both are lifted to a common denominator.
    pub fn localized_eq(&self, a: &LocalizedElement, b: &LocalizedElement) -> Result<bool, CoordError> {
        let d = self.datum();
        if !d.same_element(&a.w, &b.w) || a.grade != b.grade {
            return Ok(false);
        }
        let mut common = a.denominator;
        for i in 0..d.rank() {
            common[i] = common[i].max(b.denominator[i]);
        }
        Ok(self.lift(a, &common)?.numerator.vector == self.lift(b, &common)?.numerator.vector)
    }

    /// Compares the stabilised `(S_1^{-1} A)(lambda)` with `U^+`
    /// functionals degree by degree.
    pub fn theta_check(&self, lambda: &Weight, depth: &RootSum) -> Result<ThetaReport, CoordError> {
        let one = WeylWord::identity();
        let rho = self.datum().rho();
        let c_rho = self.extremal(&one, &rho)?;
        let mut entries = Vec::new();
        for gamma in depth.box_below() {
            let s = self.localize(&one, lambda, &gamma)?;
            let functionals = self.uq.basis(&gamma)?.dim();
            let mut rows = Vec::new();
            let mut compatible = true;
            for b in &s.basis {
                let f = self.raising_functionals(&b.numerator, &gamma)?;
                let moved = self.mul(&b.numerator, &c_rho.element)?;
                compatible &= self.raising_functionals(&moved, &gamma)? == f;
                rows.push(f);
            }
            let rank = if rows.is_empty() { 0 } else { Mat::from_rows(rows).rank() };
            entries.push(ThetaEntry {
                gamma,
                weight: s.weight,
                dim: s.dim,
                functionals,
                rank,
                compatible,
            });
        }
        let ok = entries
            .iter()
            .all(|e| e.compatible && e.rank == e.dim && e.dim == e.functionals);
        Ok(ThetaReport {
            grade: *lambda,
            entries,
            ok,
        })
    }
}
