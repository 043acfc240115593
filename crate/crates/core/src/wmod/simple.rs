//! Simple modules `V(lambda)` as Verma quotients by the radical of the
//! contravariant form.

use super::module::{Side, WeightModule, Window};
use super::verma::verma_with_words;
use super::WmodError;
use crate::cartan::{RootSum, Weight};
use crate::linalg::Mat;
use crate::scalars::QScalar;
use crate::uqg::{QuantumGroup, Word};

/// `V(lambda)` for dominant `lambda`. Weight-space dimensions are checked
/// against the Weyl character.
pub fn simple(uq: &QuantumGroup, lambda: &Weight) -> Result<WeightModule, WmodError> {
    let full = full_depth(uq, lambda)?;
    let v = quotient(uq, lambda, &full)?;
    let expected = uq.datum().weyl_character(lambda)?;
    if v.character() != expected {
        return Err(WmodError::CharacterMismatch(*lambda));
    }
    Ok(v)
}

/// `V(lambda)` restricted to weights `lambda - gamma` with `gamma <= depth`.
/// When the depth covers every weight the result is the full module.
pub fn simple_truncated(uq: &QuantumGroup, lambda: &Weight, depth: &RootSum) -> Result<WeightModule, WmodError> {
    let full = full_depth(uq, lambda)?;
    let mut cut = full;
    for i in 0..full.rank() {
        cut[i] = cut[i].min(depth[i]);
    }
    if cut == full {
        return simple(uq, lambda);
    }
    quotient(uq, lambda, &cut)
}

/// `V^*(lambda)`, the right module dual to `V(lambda)`.
pub fn dual_simple(uq: &QuantumGroup, lambda: &Weight) -> Result<WeightModule, WmodError> {
    Ok(simple(uq, lambda)?.restricted_dual())
}

/// `lambda - w0 lambda` in root coordinates: every weight of `V(lambda)`
/// lies within this depth.
pub fn full_depth(uq: &QuantumGroup, lambda: &Weight) -> Result<RootSum, WmodError> {
    let d = uq.datum();
    if !lambda.is_dominant() {
        return Err(WmodError::NotDominant(*lambda));
    }
    let low = d.weyl_act(&d.longest_element(), lambda);
    Ok(d.weight_to_root(&(*lambda - low))?)
}

fn quotient(uq: &QuantumGroup, lambda: &Weight, depth: &RootSum) -> Result<WeightModule, WmodError> {
    let (t, words) = verma_with_words(uq, lambda, depth)?;
    let e_t: Vec<Mat> = t.e.iter().map(Mat::transpose).collect();
    let n = t.dim();
    let spaces = t.weight_spaces();
    // per weight space: kept Verma indices and the projection onto them
    let mut kept: Vec<usize> = Vec::new();
    let mut projections: Vec<(Vec<usize>, Vec<usize>, Mat)> = Vec::new();
    for idx in spaces.values() {
        let gram = gram_block(&t, &words, &e_t, idx);
        let mut r = gram.clone();
        let cols = r.rref();
        if cols.is_empty() {
            continue;
        }
        let sub = Mat::from_columns(idx.len(), &cols.iter().map(|&c| gram.column(c)).collect::<Vec<_>>());
        let mut st = sub.transpose();
        let rows = st.rref();
        let square = Mat::from_rows(rows.iter().map(|&r| sub.row(r).to_vec()).collect());
        let inv = square.inverse().expect("pivot block is invertible");
        let gram_rows = Mat::from_rows(rows.iter().map(|&r| gram.row(r).to_vec()).collect());
        let proj = inv.mul(&gram_rows);
        let chosen: Vec<usize> = cols.iter().map(|&c| idx[c]).collect();
        kept.extend(&chosen);
        projections.push((idx.clone(), chosen, proj));
    }
    kept.sort_unstable();
    let mut position = vec![usize::MAX; n];
    for (p, &k) in kept.iter().enumerate() {
        position[k] = p;
    }
    let mut owner = vec![usize::MAX; n];
    for (s, (idx, _, _)) in projections.iter().enumerate() {
        for &k in idx {
            owner[k] = s;
        }
    }
    let m = kept.len();
    let project = |v: &[QScalar], out: &mut Mat, col: usize| {
        let Some(first) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        if owner[first] == usize::MAX {
            return; // lands in a weight space that is entirely radical
        }
        let (idx, chosen, proj) = &projections[owner[first]];
        let local: Vec<QScalar> = idx.iter().map(|&k| v[k].clone()).collect();
        let coords = proj.apply(&local);
        for (c, x) in chosen.iter().zip(coords) {
            out[(position[*c], col)] = x;
        }
    };
    let rank = t.rank();
    let mut e = vec![Mat::zeros(m, m); rank];
    let mut f = vec![Mat::zeros(m, m); rank];
    for (col, &k) in kept.iter().enumerate() {
        for i in 0..rank {
            project(&t.e[i].column(k), &mut e[i], col);
            project(&t.f[i].column(k), &mut f[i], col);
        }
    }
    let full = full_depth(uq, lambda)?;
    Ok(WeightModule {
        side: Side::Left,
        datum: t.datum.clone(),
        weights: kept.iter().map(|&k| t.weights[k]).collect(),
        labels: kept.iter().map(|&k| t.labels[k].clone()).collect(),
        e,
        f,
        window: (*depth != full).then_some(Window {
            top: *lambda,
            depth: *depth,
        }),
        highest: Some(0),
    })
}

/// Contravariant form on one weight space: entry `(a, b)` is the
/// `v_lambda`-coefficient of `omega(y_a) y_b v_lambda`, where `omega`
/// swaps `e_i` and `f_i` and reverses products.
fn gram_block(t: &WeightModule, words: &[Word], e_t: &[Mat], idx: &[usize]) -> Mat {
    let rows: Vec<Vec<QScalar>> = idx
        .iter()
        .map(|&a| {
            // the functional v*_lambda omega(y_a), built from the right end
            let mut phi = t.unit(0);
            for &j in words[a].iter().rev() {
                phi = e_t[j as usize].apply(&phi);
            }
            idx.iter().map(|&b| phi[b].clone()).collect()
        })
        .collect();
    Mat::from_rows(rows)
}
