//! The bimodule `E^mu = V(mu) (x) A`: right action on the `A` factor, left
//! action moving `A` past `V(mu)` with `eta = R^vee_{A, V(mu)}`, and the weight
//! filtration of `V(mu)` by `U^{<=0}`-stable flags.

mod keylemma;

pub use keylemma::{key_lemma, layer_weights, KeyCheck, KeyLayer, KeyLemmaReport};

use crate::cartan::{CharacterPoly, Weight};
use crate::coord::{CoordAlgebra, CoordElement, CoordError};
use crate::linalg::{is_zero_vec, Mat};
use crate::rmatrix::{r_check, Pairing, RmatrixError};
use crate::scalars::QScalar;
use crate::wmod::{simple, tensor, WeightModule, WmodError};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmodError {
    #[error(transparent)]
    Coord(#[from] CoordError),
    #[error(transparent)]
    Module(#[from] WmodError),
    #[error(transparent)]
    Rmatrix(#[from] RmatrixError),
    #[error("{0} is not dominant")]
    NotDominant(Weight),
    #[error("layer {0} does not exist")]
    NoLayer(usize),
    #[error("element is not homogeneous in weight")]
    NotHomogeneous,
    #[error("layer {layer} does not commute with the scalar q^-(nu, xi)")]
    CommutationMismatch { layer: usize },
    #[error("grade {lambda} lies outside lambda0 + dominant weights (lambda0 = {lambda0})")]
    OutsideCone { lambda: Weight, lambda0: Weight },
}

/// One step of the flag: the weight space `V(mu)_{nu_k}` added on top of
/// the previous ones.
#[derive(Debug, Clone, Serialize)]
pub struct FiltrationLayer {
    pub index: usize,
    pub weight: Weight,
    pub multiplicity: usize,
    /// Basis vectors of `V(mu)` spanning the layer.
    pub basis: Vec<usize>,
    /// `dim V^k`.
    pub flag_dim: usize,
}

/// An element of `E^mu(lambda) = V(mu) (x) A(lambda)`, stored on the basis
/// `a * dim V(lambda) + b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EElement {
    pub grade: Weight,
    pub vector: Vec<QScalar>,
}

impl EElement {
    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.vector)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BimoduleReport {
    pub triples: usize,
    pub failures: Vec<String>,
    pub unit_ok: bool,
    pub embedding_ok: bool,
}

impl BimoduleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.unit_ok && self.embedding_ok
    }
}

pub struct EBimodule<'b, 'a> {
    alg: &'b CoordAlgebra<'a>,
    pairing: Pairing,
    pub mu: Weight,
    pub vmu: WeightModule,
    pub lambda0: Weight,
    pub layers: Vec<FiltrationLayer>,
    /// Layer index of each basis vector of `V(mu)`.
    layer_of: Vec<usize>,
    eta: RwLock<HashMap<Weight, Arc<Mat>>>,
}

impl<'b, 'a> EBimodule<'b, 'a> {
    pub fn new(alg: &'b CoordAlgebra<'a>, mu: &Weight) -> Result<Self, EmodError> {
        if !mu.is_dominant() {
            return Err(EmodError::NotDominant(*mu));
        }
        let uq = alg.uq();
        let d = uq.datum();
        let vmu = simple(uq, mu)?;
        let mut weights: Vec<Weight> = vmu.weight_spaces().into_keys().collect();
        weights.sort_by(|x, y| d.height_key(x).cmp(&d.height_key(y)).then(x.cmp(y)));
        let mut layers = Vec::new();
        let mut layer_of = vec![0; vmu.dim()];
        let mut flag_dim = 0;
        for (k, nu) in weights.iter().enumerate() {
            let basis: Vec<usize> = (0..vmu.dim()).filter(|&a| vmu.weights[a] == *nu).collect();
            for &a in &basis {
                layer_of[a] = k;
            }
            flag_dim += basis.len();
            layers.push(FiltrationLayer {
                index: k,
                weight: *nu,
                multiplicity: basis.len(),
                basis,
                flag_dim,
            });
        }
        let rank = d.rank();
        let mut lambda0 = Weight::zero(rank);
        for nu in &weights {
            for i in 0..rank {
                lambda0[i] = lambda0[i].max(-nu[i]);
            }
        }
        Ok(EBimodule {
            alg,
            pairing: Pairing::new(uq),
            mu: *mu,
            vmu,
            lambda0,
            layers,
            layer_of,
            eta: RwLock::default(),
        })
    }

    pub fn algebra(&self) -> &'b CoordAlgebra<'a> {
        self.alg
    }

    pub fn dim(&self, lambda: &Weight) -> Result<usize, EmodError> {
        Ok(self.vmu.dim() * self.alg.dim(lambda)?)
    }

    /// `v (x) phi`.
    pub fn pure(&self, v: &[QScalar], phi: &CoordElement) -> EElement {
        let mut out = Vec::with_capacity(v.len() * phi.vector.len());
        for a in v {
            out.extend(phi.vector.iter().map(|b| a * b));
        }
        EElement {
            grade: phi.grade,
            vector: out,
        }
    }

    /// The embedding `v -> v (x) 1`.
    pub fn embed(&self, v: &[QScalar]) -> Result<EElement, EmodError> {
        Ok(self.pure(v, &self.alg.one()?))
    }

    pub fn basis(&self, lambda: &Weight) -> Result<Vec<EElement>, EmodError> {
        let n = self.dim(lambda)?;
        Ok((0..n)
            .map(|i| {
                let mut v = vec![QScalar::zero(); n];
                v[i] = QScalar::one();
                EElement {
                    grade: *lambda,
                    vector: v,
                }
            })
            .collect())
    }

    /// `eta_xi = R^vee : V(xi) (x) V(mu) -> V(mu) (x) V(xi)`.
    pub fn eta(&self, xi: &Weight) -> Result<Arc<Mat>, EmodError> {
        if let Some(m) = self.eta.read().expect("eta cache poisoned").get(xi) {
            return Ok(m.clone());
        }
        let g = self.alg.grade(xi)?;
        let m = Arc::new(r_check(self.alg.uq(), &self.pairing, &g.module, &self.vmu)?);
        self.eta
            .write()
            .expect("eta cache poisoned")
            .insert(*xi, m.clone());
        Ok(m)
    }

    /// `(v (x) phi) psi = v (x) phi psi`.
    pub fn right_mul(&self, e: &EElement, psi: &CoordElement) -> Result<EElement, EmodError> {
        let nu = e.grade + psi.grade;
        let table = self.alg.table(&e.grade, &psi.grade)?;
        let (dl, dn) = (self.alg.dim(&e.grade)?, self.alg.dim(&nu)?);
        let mut out = vec![QScalar::zero(); self.vmu.dim() * dn];
        for (idx, c) in e.vector.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (a, b) = (idx / dl, idx % dl);
            for (j, p) in psi.vector.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let cp = c * p;
                for (k, t) in table.entry(b, j).unwrap_or(&[]) {
                    out[a * dn + k] += &(&cp * t);
                }
            }
        }
        Ok(EElement { grade: nu, vector: out })
    }

    /// `psi (v (x) phi) = sum v' (x) psi' phi` where
    /// `eta(psi (x) v) = sum v' (x) psi'`.
    pub fn left_mul(&self, psi: &CoordElement, e: &EElement) -> Result<EElement, EmodError> {
        let (xi, lam) = (psi.grade, e.grade);
        let nu = xi + lam;
        let dm = self.vmu.dim();
        let (dx, dl, dn) = (self.alg.dim(&xi)?, self.alg.dim(&lam)?, self.alg.dim(&nu)?);
        let eta = self.eta(&xi)?;
        let table = self.alg.table(&xi, &lam)?;
        let mut out = vec![QScalar::zero(); dm * dn];
        for (idx, c) in e.vector.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (a, b) = (idx / dl, idx % dl);
            let mut x = vec![QScalar::zero(); dx * dm];
            for (j, p) in psi.vector.iter().enumerate() {
                x[j * dm + a] = p.clone();
            }
            for (jdx, y) in eta.apply(&x).into_iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let (a2, j2) = (jdx / dx, jdx % dx);
                let cy = c * &y;
                for (k, t) in table.entry(j2, b).unwrap_or(&[]) {
                    out[a2 * dn + k] += &(&cy * t);
                }
            }
        }
        Ok(EElement { grade: nu, vector: out })
    }

    /// `(psi e) chi = psi (e chi)` on all basis triples with the given
    /// grades that fit under the cutoff, plus the unit and embedding identities.
    pub fn check_bimodule(&self, grades: &[Weight]) -> Result<BimoduleReport, EmodError> {
        let mut failures = Vec::new();
        let mut triples = 0;
        let one = self.alg.one()?;
        let mut unit_ok = true;
        for lam in grades {
            for e in self.basis(lam)? {
                unit_ok &= self.left_mul(&one, &e)? == e && self.right_mul(&e, &one)? == e;
                for xi in grades {
                    if !(*xi + *lam).le_componentwise(&self.alg.cutoff()) {
                        continue;
                    }
                    for psi in self.alg.basis(xi)? {
                        let pe = self.left_mul(&psi, &e)?;
                        for zeta in grades {
                            if !(*xi + *lam + *zeta).le_componentwise(&self.alg.cutoff()) {
                                continue;
                            }
                            for chi in self.alg.basis(zeta)? {
                                triples += 1;
                                let left = self.right_mul(&pe, &chi)?;
                                let right = self.left_mul(&psi, &self.right_mul(&e, &chi)?)?;
                                if left != right && failures.len() < 10 {
                                    failures.push(format!("grades {xi} {lam} {zeta}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        let zero = Weight::zero(self.mu.rank());
        let embedding_ok = *self.eta(&zero)? == Mat::identity(self.vmu.dim());
        Ok(BimoduleReport {
            triples,
            failures,
            unit_ok,
            embedding_ok,
        })
    }

    /// Each `V^k` is stable under the `f_i`, and the left action of `A(xi)`
    /// maps `V^k (x) A(lambda)` into `V^k (x) A(lambda + xi)`.
    pub fn flag_is_stable(&self, lambda: &Weight, xi: &Weight) -> Result<bool, EmodError> {
        for f in &self.vmu.f {
            for col in 0..self.vmu.dim() {
                for row in 0..self.vmu.dim() {
                    if !f[(row, col)].is_zero() && self.layer_of[row] > self.layer_of[col] {
                        return Ok(false);
                    }
                }
            }
        }
        let dl = self.alg.dim(lambda)?;
        let dn = self.alg.dim(&(*lambda + *xi))?;
        for e in self.basis(lambda)? {
            let idx = e.vector.iter().position(|c| !c.is_zero()).expect("basis vector");
            let k = self.layer_of[idx / dl];
            for psi in self.alg.basis(xi)? {
                let out = self.left_mul(&psi, &e)?;
                let escapes = out
                    .vector
                    .iter()
                    .enumerate()
                    .any(|(i, c)| !c.is_zero() && self.layer_of[i / dn] > k);
                if escapes {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The scalar `q^{-(nu_k, xi)}` with `phi vbar_k = q^{-(nu_k, xi)} vbar_k phi`
    /// modulo the earlier layers, checked on every basis vector of the layer.
    pub fn commutation_scalar(&self, k: usize, phi: &CoordElement) -> Result<QScalar, EmodError> {
        let layer = self.layers.get(k).ok_or(EmodError::NoLayer(k))?;
        let xi = phi.weight.ok_or(EmodError::NotHomogeneous)?;
        let d = self.alg.datum();
        let s = d.q_form(&layer.weight, &xi).inv().expect("power of q");
        let dn = self.alg.dim(&phi.grade)?;
        for &a in &layer.basis {
            let v = self.vmu.unit(a);
            let left = self.left_mul(phi, &self.embed(&v)?)?;
            let right = self.pure(&v, phi);
            let bad = left
                .vector
                .iter()
                .zip(&right.vector)
                .enumerate()
                .any(|(i, (l, r))| self.layer_of[i / dn] >= k && *l != &s * r);
            if bad {
                return Err(EmodError::CommutationMismatch { layer: k });
            }
        }
        Ok(s)
    }

    fn check_cone(&self, lambda: &Weight) -> Result<(), EmodError> {
        if !(*lambda - self.lambda0).is_dominant() {
            return Err(EmodError::OutsideCone {
                lambda: *lambda,
                lambda0: self.lambda0,
            });
        }
        Ok(())
    }

    /// `m_k ch V(lambda + nu_k)`.
    pub fn layer_character(&self, k: usize, lambda: &Weight) -> Result<CharacterPoly, EmodError> {
        self.check_cone(lambda)?;
        let layer = self.layers.get(k).ok_or(EmodError::NoLayer(k))?;
        let d = self.alg.datum();
        let ch = d
            .weyl_character(&(*lambda + layer.weight))
            .map_err(CoordError::from)?;
        Ok(ch.scale(layer.multiplicity as i64))
    }

    /// Whether the layer characters add up to `ch V(mu) ch V(lambda)`.
    pub fn layer_characters_add_up(&self, lambda: &Weight) -> Result<bool, EmodError> {
        let d = self.alg.datum();
        let mut total = CharacterPoly::new();
        for k in 0..self.layers.len() {
            total = total.add(&self.layer_character(k, lambda)?);
        }
        let expect = self
            .vmu
            .character()
            .mul(&d.weyl_character(lambda).map_err(CoordError::from)?);
        Ok(total == expect)
    }

    /// Multiplicity of highest weight vectors of weight `lambda + nu_k` in
    /// the `U`-module `V(mu) (x) V(lambda)`, per layer.
    pub fn highest_weight_multiplicities(&self, lambda: &Weight) -> Result<Vec<usize>, EmodError> {
        let g = self.alg.grade(lambda)?;
        let t = tensor(&self.vmu, &g.module)?;
        let spaces = t.weight_spaces();
        self.layers
            .iter()
            .map(|layer| {
                let target = *lambda + layer.weight;
                let Some(idx) = spaces.get(&target) else {
                    return Ok(0);
                };
                let mut rows = Vec::new();
                for e in &t.e {
                    for r in 0..t.dim() {
                        rows.push(idx.iter().map(|&c| e[(r, c)].clone()).collect());
                    }
                }
                Ok(idx.len() - Mat::from_rows(rows).rank())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests;
