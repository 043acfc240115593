//! `kappa`, `Xi`, `R`, `R^{-1}` and `R^vee` on tensor products of
//! finite-dimensional modules.

use super::pairing::Pairing;
use super::RmatrixError;
use crate::cartan::RootSum;
use crate::linalg::Mat;
use crate::scalars::QScalar;
use crate::uqg::QuantumGroup;
use crate::wmod::{Side, WeightModule};
use serde::Serialize;

fn require_finite(v: &WeightModule) -> Result<(), RmatrixError> {
    if v.is_truncated() || v.side != Side::Left {
        return Err(RmatrixError::NotFinite);
    }
    Ok(())
}

/// Componentwise spread of the weights of `v` in root coordinates.
fn span(v: &WeightModule) -> Result<RootSum, RmatrixError> {
    let d = &v.datum;
    let rank = d.rank();
    let Some(first) = v.weights.first() else {
        return Ok(RootSum::zero(rank));
    };
    let (mut lo, mut hi) = (RootSum::zero(rank), RootSum::zero(rank));
    for w in &v.weights {
        let r = d.weight_to_root(&(*w - *first))?;
        for i in 0..rank {
            lo[i] = lo[i].min(r[i]);
            hi[i] = hi[i].max(r[i]);
        }
    }
    Ok(hi - lo)
}

/// Degrees `beta` whose part of `Xi` can act nontrivially on `V (x) W`.
fn relevant_degrees(v: &WeightModule, w: &WeightModule) -> Result<Vec<RootSum>, RmatrixError> {
    let (a, b) = (span(v)?, span(w)?);
    let mut m = a;
    for i in 0..a.rank() {
        m[i] = a[i].min(b[i]);
    }
    Ok(m.box_below())
}

fn word_matrix(v: &WeightModule, word: &[u8], lower: bool) -> Mat {
    let gens = if lower { &v.f } else { &v.e };
    word.iter()
        .fold(Mat::identity(v.dim()), |acc, &i| acc.mul(&gens[i as usize]))
}

/// `kappa(v (x) v') = q^{(lambda, mu)} v (x) v'`.
pub fn kappa(v: &WeightModule, w: &WeightModule) -> Mat {
    let d = &v.datum;
    let n = v.dim() * w.dim();
    let mut m = Mat::zeros(n, n);
    for (a, wa) in v.weights.iter().enumerate() {
        for (b, wb) in w.weights.iter().enumerate() {
            let k = a * w.dim() + b;
            m[(k, k)] = d.q_form(wa, wb);
        }
    }
    m
}

/// The flip `V (x) W -> W (x) V`.
pub fn tau(v: &WeightModule, w: &WeightModule) -> Mat {
    let (dv, dw) = (v.dim(), w.dim());
    let mut m = Mat::zeros(dv * dw, dv * dw);
    for a in 0..dv {
        for b in 0..dw {
            m[(b * dv + a, a * dw + b)] = QScalar::one();
        }
    }
    m
}

/// `Xi = sum_beta q^{(beta,beta)} (k_beta^{-1} (x) k_beta) Xi_beta` on `V (x) W`.
pub fn xi_operator(
    uq: &QuantumGroup,
    pairing: &Pairing,
    v: &WeightModule,
    w: &WeightModule,
) -> Result<Mat, RmatrixError> {
    require_finite(v)?;
    require_finite(w)?;
    let d = uq.datum();
    let mut out = Mat::zeros(v.dim() * w.dim(), v.dim() * w.dim());
    for beta in relevant_degrees(v, w)? {
        let xi = pairing.canonical(uq, &beta)?;
        let bw = d.root_to_weight(&beta);
        let scale = d.q_pow(d.root_form(&beta, &beta));
        let kv = v.k_matrix(&-bw);
        let kw = w.k_matrix(&bw);
        let ys: Vec<Mat> = xi.words().iter().map(|y| kw.mul(&word_matrix(w, y, true))).collect();
        for (a, x) in xi.words().iter().enumerate() {
            let xa = kv.mul(&word_matrix(v, x, false));
            if xa.is_zero() {
                continue;
            }
            let mut dual = Mat::zeros(w.dim(), w.dim());
            for (b, y) in ys.iter().enumerate() {
                let c = &xi.coefficients[(a, b)];
                if !c.is_zero() {
                    dual = dual.add(&y.scale(c));
                }
            }
            out = out.add(&xa.kron(&dual).scale(&scale));
        }
    }
    Ok(out)
}

/// `R = kappa^{-1} Xi`.
pub fn r_matrix(uq: &QuantumGroup, pairing: &Pairing, v: &WeightModule, w: &WeightModule) -> Result<Mat, RmatrixError> {
    let xi = xi_operator(uq, pairing, v, w)?;
    let kinv = diagonal_inverse(&kappa(v, w));
    Ok(kinv.mul(&xi))
}

/// `R^vee = tau R : V (x) W -> W (x) V`.
pub fn r_check(uq: &QuantumGroup, pairing: &Pairing, v: &WeightModule, w: &WeightModule) -> Result<Mat, RmatrixError> {
    Ok(tau(v, w).mul(&r_matrix(uq, pairing, v, w)?))
}

/// `R^{-1}` from `sum_beta q^{(beta,beta)} (1 (x) k_beta)(S (x) id)(Xi_beta)`
/// followed by `kappa`. Checked against `R` exactly.
pub fn r_inverse(uq: &QuantumGroup, pairing: &Pairing, v: &WeightModule, w: &WeightModule) -> Result<Mat, RmatrixError> {
    require_finite(v)?;
    require_finite(w)?;
    let d = uq.datum();
    let n = v.dim() * w.dim();
    let mut sum = Mat::zeros(n, n);
    for beta in relevant_degrees(v, w)? {
        let xi = pairing.canonical(uq, &beta)?;
        let bw = d.root_to_weight(&beta);
        let scale = d.q_pow(d.root_form(&beta, &beta));
        let kw = w.k_matrix(&bw);
        for (a, x) in xi.words().iter().enumerate() {
            let sx = uq.antipode(&uq.word_element(false, x)?)?;
            let sa = v.act_matrix(&sx);
            if sa.is_zero() {
                continue;
            }
            let mut dual = Mat::zeros(w.dim(), w.dim());
            for (b, y) in xi.words().iter().enumerate() {
                let c = &xi.coefficients[(a, b)];
                if !c.is_zero() {
                    dual = dual.add(&kw.mul(&word_matrix(w, y, true)).scale(c));
                }
            }
            sum = sum.add(&sa.kron(&dual).scale(&scale));
        }
    }
    let inv = sum.mul(&kappa(v, w));
    let r = r_matrix(uq, pairing, v, w)?;
    if inv.mul(&r) != Mat::identity(n) {
        return Err(RmatrixError::InverseMismatch);
    }
    Ok(inv)
}

fn diagonal_inverse(m: &Mat) -> Mat {
    let mut out = Mat::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        out[(i, i)] = m[(i, i)].inv().expect("diagonal entry is a unit");
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct HexagonReport {
    pub dims: [usize; 3],
    pub ok: bool,
    /// First mismatching entry, if any.
    pub mismatch: Option<(usize, usize)>,
}

/// `(R^vee_{V,V''} (x) id)(id (x) R^vee_{V',V''}) = R^vee_{V (x) V', V''}`.
pub fn hexagon_check(
    uq: &QuantumGroup,
    pairing: &Pairing,
    v: &WeightModule,
    v2: &WeightModule,
    v3: &WeightModule,
) -> Result<HexagonReport, RmatrixError> {
    let left = r_check(uq, pairing, v, v3)?
        .kron(&Mat::identity(v2.dim()))
        .mul(&Mat::identity(v.dim()).kron(&r_check(uq, pairing, v2, v3)?));
    let vv = crate::wmod::tensor(v, v2)?;
    let right = r_check(uq, pairing, &vv, v3)?;
    let mismatch = left.first_difference(&right);
    Ok(HexagonReport {
        dims: [v.dim(), v2.dim(), v3.dim()],
        ok: mismatch.is_none(),
        mismatch,
    })
}

/// Whether `m : V -> W` commutes with every generator.
pub fn is_module_map(m: &Mat, v: &WeightModule, w: &WeightModule) -> bool {
    (0..v.rank()).all(|i| m.mul(&v.e[i]) == w.e[i].mul(m) && m.mul(&v.f[i]) == w.f[i].mul(m))
        && v.weights.iter().enumerate().all(|(c, wc)| {
            (0..w.dim()).all(|r| m[(r, c)].is_zero() || w.weights[r] == *wc)
        })
}
