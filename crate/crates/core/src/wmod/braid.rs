//! Braid operators `T_i`, `T_w` and `tT_w` on finite-dimensional modules.

use super::module::{Side, WeightModule};
use super::WmodError;
use crate::cartan::WeylWord;
use crate::linalg::Mat;
use crate::scalars::{exp_t_coefficient, QScalar};

/// `exp_t(x)` for a nilpotent matrix `x`, `t = q^d`.
pub fn exp_nilpotent(x: &Mat, d: i64, l0: u32) -> Result<Mat, WmodError> {
    let n = x.rows();
    let mut out = Mat::identity(n);
    let mut power = Mat::identity(n);
    for k in 1..=n as i64 + 1 {
        power = power.mul(x);
        if power.is_zero() {
            return Ok(out);
        }
        out = out.add(&power.scale(&exp_t_coefficient(k, d, false, l0)));
    }
    Err(WmodError::NotNilpotent)
}

/// Diagonal operator acting by `q_i^{n(n+1)/2}` on weight `lambda`, where
/// `n = (lambda, alpha_i^vee)`.
fn h_operator(m: &WeightModule, i: usize) -> Mat {
    let d = &m.datum;
    let di = i64::from(d.symmetrizer(i));
    let mut h = Mat::zeros(m.dim(), m.dim());
    for (k, w) in m.weights.iter().enumerate() {
        let n = i64::from(w[i]);
        h[(k, k)] = d.q_pow(di * n * (n + 1) / 2);
    }
    h
}

fn require_finite_left(m: &WeightModule) -> Result<(), WmodError> {
    if m.is_truncated() {
        return Err(WmodError::Truncated);
    }
    if m.side != Side::Left {
        return Err(WmodError::SideMismatch);
    }
    Ok(())
}

/// `T_i` on a finite-dimensional left module. Both triple-exponential
/// expressions are evaluated and must agree.
pub fn braid_operator(m: &WeightModule, i: usize) -> Result<Mat, WmodError> {
    require_finite_left(m)?;
    let d = &m.datum;
    let l0 = d.l0();
    let di = i64::from(d.symmetrizer(i));
    let qi = d.q_i(i);
    let qi_inv = qi.inv().expect("q_i is a unit");
    let minus = -QScalar::one();
    let a = d.simple_root(i);
    let k = m.k_matrix(&a);
    let kinv = m.k_matrix(&-a);
    let (e, f) = (&m.e[i], &m.f[i]);
    let h = h_operator(m, i);
    let exp = |x: &Mat| exp_nilpotent(x, -di, l0);

    let first = exp(&k.mul(f).scale(&qi))?
        .mul(&exp(&e.scale(&minus))?)
        .mul(&exp(&kinv.mul(f).scale(&qi_inv))?)
        .mul(&h);
    let second = exp(&kinv.mul(e).scale(&-&qi))?
        .mul(&exp(f)?)
        .mul(&exp(&k.mul(e).scale(&-&qi_inv))?)
        .mul(&h);
    if first != second {
        return Err(WmodError::BraidMismatch(i));
    }
    Ok(first)
}

/// `T_w = T_{i_1} ... T_{i_n}` along the given word.
pub fn braid_word_operator(m: &WeightModule, w: &WeylWord) -> Result<Mat, WmodError> {
    require_finite_left(m)?;
    w.letters()
        .try_fold(Mat::identity(m.dim()), |acc, i| Ok(acc.mul(&braid_operator(m, i)?)))
}

/// `tT_w` on a finite-dimensional right module, defined through the dual
/// left module by `<tT_w(v), v*> = <v, T_w(v*)>`.
pub fn transpose_braid(m: &WeightModule, w: &WeylWord) -> Result<Mat, WmodError> {
    if m.side != Side::Right {
        return Err(WmodError::SideMismatch);
    }
    Ok(braid_word_operator(&m.restricted_dual(), w)?.transpose())
}
