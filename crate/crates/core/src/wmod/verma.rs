//! Truncated Verma modules `T(lambda)` and their right analogues.

use super::module::{Side, WeightModule, Window};
use super::WmodError;
use crate::cartan::{RootSum, Weight};
use crate::linalg::Mat;
use crate::uqg::{QuantumGroup, Word};
use std::collections::HashMap;

pub(crate) fn word_label(prefix: char, w: &Word) -> String {
    w.iter().map(|&i| format!("{prefix}{}", i + 1)).collect()
}

/// Basis words of every degree `gamma <= depth`, lowest height first.
fn graded_words(uq: &QuantumGroup, depth: &RootSum) -> Result<Vec<(RootSum, Word)>, WmodError> {
    let mut out = Vec::new();
    for g in depth.box_below() {
        let b = uq.basis(&g)?;
        out.extend(b.standard.iter().map(|w| (g, w.clone())));
    }
    Ok(out)
}

/// `T(lambda)` truncated to degrees `<= depth`, basis `y v_lambda` with `y`
/// a standard f-word.
pub fn verma(uq: &QuantumGroup, lambda: &Weight, depth: &RootSum) -> Result<WeightModule, WmodError> {
    Ok(build(uq, lambda, depth, Side::Left)?.0)
}

pub(crate) fn verma_with_words(
    uq: &QuantumGroup,
    lambda: &Weight,
    depth: &RootSum,
) -> Result<(WeightModule, Vec<Word>), WmodError> {
    build(uq, lambda, depth, Side::Left)
}

/// `T_r(lambda)` truncated to degrees `<= depth`, basis `v_lambda x` with `x`
/// a standard e-word.
pub fn verma_right(uq: &QuantumGroup, lambda: &Weight, depth: &RootSum) -> Result<WeightModule, WmodError> {
    Ok(build(uq, lambda, depth, Side::Right)?.0)
}

pub(crate) fn verma_right_with_words(
    uq: &QuantumGroup,
    lambda: &Weight,
    depth: &RootSum,
) -> Result<(WeightModule, Vec<Word>), WmodError> {
    build(uq, lambda, depth, Side::Right)
}

fn build(uq: &QuantumGroup, lambda: &Weight, depth: &RootSum, side: Side) -> Result<(WeightModule, Vec<Word>), WmodError> {
    let d = uq.datum();
    let rank = d.rank();
    if !depth.is_nonnegative() || depth.rank() != rank || lambda.rank() != rank {
        return Err(WmodError::BadDepth(*depth));
    }
    let words = graded_words(uq, depth)?;
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, (_, w))| (w, k)).collect();
    let n = words.len();
    let weights: Vec<Weight> = words.iter().map(|(g, _)| *lambda - d.root_to_weight(g)).collect();
    let labels: Vec<String> = words
        .iter()
        .map(|(_, w)| match side {
            Side::Left => format!("{}v", word_label('f', w)),
            Side::Right => format!("v{}", word_label('e', w)),
        })
        .collect();
    let mut raise = vec![Mat::zeros(n, n); rank];
    let mut lower = vec![Mat::zeros(n, n); rank];
    for (col, (g, w)) in words.iter().enumerate() {
        for i in 0..rank {
            // extending the word: f_i y (left) or x e_i (right)
            let mut up = *g;
            up[i] += 1;
            if up.le_componentwise(depth) {
                let ext: Word = match side {
                    Side::Left => std::iter::once(i as u8).chain(w.iter().copied()).collect(),
                    Side::Right => w.iter().copied().chain(std::iter::once(i as u8)).collect(),
                };
                let target = match side {
                    Side::Left => &mut lower[i],
                    Side::Right => &mut raise[i],
                };
                for (s, c) in uq.reduce_word(&ext)? {
                    target[(index[&s], col)] += &c;
                }
            }
            if g[i] == 0 {
                continue;
            }
            // the other generator goes through the normal form and the character
            let (prod, target) = match side {
                Side::Left => (uq.mul(&uq.e(i), &uq.word_element(true, w)?)?, &mut raise[i]),
                Side::Right => (uq.mul(&uq.word_element(false, w)?, &uq.f(i))?, &mut lower[i]),
            };
            for (m, c) in prod.iter() {
                let (kept, killed) = match side {
                    Side::Left => (&m.f, &m.e),
                    Side::Right => (&m.e, &m.f),
                };
                if !killed.is_empty() {
                    continue;
                }
                let coeff = c * &d.q_form(lambda, &m.k);
                target[(index[kept], col)] += &coeff;
            }
        }
    }
    let (e, f) = (raise, lower);
    let module = WeightModule {
        side,
        datum: d.clone(),
        weights,
        labels,
        e,
        f,
        window: Some(Window {
            top: *lambda,
            depth: *depth,
        }),
        highest: Some(0),
    };
    Ok((module, words.into_iter().map(|(_, w)| w).collect()))
}

/// `T^*(lambda)`: restricted dual of the right Verma module.
pub fn dual_verma(uq: &QuantumGroup, lambda: &Weight, depth: &RootSum) -> Result<WeightModule, WmodError> {
    Ok(verma_right(uq, lambda, depth)?.restricted_dual())
}

/// `T_r^*(lambda)`: restricted dual of the left Verma module.
pub fn dual_verma_right(uq: &QuantumGroup, lambda: &Weight, depth: &RootSum) -> Result<WeightModule, WmodError> {
    Ok(verma(uq, lambda, depth)?.restricted_dual())
}
