//! Graded bases of U^+ (and, letter for letter, U^-) obtained by row
//! reduction of the Serre ideal inside the free algebra.

use super::element::Word;
use crate::cartan::{CartanDatum, RootSum};
use crate::linalg::Mat;
use crate::scalars::{quantum_factorial, QScalar};
use std::collections::HashMap;

#[derive(Debug)]
pub struct GradedBasis {
    pub degree: RootSum,
    /// All words of this degree, lexicographic.
    pub words: Vec<Word>,
    pub index: HashMap<Word, usize>,
    /// Standard words (the basis), lexicographic.
    pub standard: Vec<Word>,
    pub standard_index: HashMap<Word, usize>,
    /// Coordinates of every word on the standard words.
    pub reduction: Vec<Vec<(usize, QScalar)>>,
    /// Row-reduced spanning set of the Serre ideal in this degree.
    pub(crate) ideal: Vec<Vec<(usize, QScalar)>>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn reduce(&self, w: &[u8]) -> &[(usize, QScalar)] {
        &self.reduction[self.index[w]]
    }
}

pub(crate) fn words_of_degree(g: &RootSum) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Word::new();
    let mut rem = *g;
    fn rec(rem: &mut RootSum, cur: &mut Word, out: &mut Vec<Word>) {
        if rem.is_zero() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.rank() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8);
                rec(rem, cur, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    rec(&mut rem, &mut cur, &mut out);
    out
}

/// `sum_n (-1)^n x_i^{(1-a_ij-n)} x_j x_i^{(n)}` as `(word, coefficient)` pairs.
pub(crate) fn serre_element(d: &CartanDatum, i: usize, j: usize) -> Vec<(Word, QScalar)> {
    let m = (1 - d.cartan_entry(i, j)) as i64;
    let di = i64::from(d.symmetrizer(i));
    let l0 = d.l0();
    (0..=m)
        .map(|n| {
            let mut w = vec![i as u8; (m - n) as usize];
            w.push(j as u8);
            w.extend(std::iter::repeat_n(i as u8, n as usize));
            let c = (quantum_factorial(m - n, di, l0) * quantum_factorial(n, di, l0))
                .inv()
                .expect("nonzero factorial");
            (w, if n % 2 == 0 { c } else { -c })
        })
        .collect()
}

/// Builds the basis in degree `g` from the ideals one letter down.
pub(crate) fn build(d: &CartanDatum, g: &RootSum, lower: &dyn Fn(&RootSum) -> Option<std::sync::Arc<GradedBasis>>) -> GradedBasis {
    let words = words_of_degree(g);
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = words.len();
    let mut rows: Vec<Vec<QScalar>> = Vec::new();
    let rank = d.rank();
    // e_i * (ideal one letter down)
    for i in 0..rank {
        if g[i] == 0 {
            continue;
        }
        let mut h = *g;
        h[i] -= 1;
        if let Some(b) = lower(&h) {
            for row in &b.ideal {
                let mut v = vec![QScalar::zero(); n];
                for (idx, c) in row {
                    let mut w = vec![i as u8];
                    w.extend(&b.words[*idx]);
                    v[index[&w]] = c.clone();
                }
                rows.push(v);
            }
        }
    }
    // serre element times free words
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            let s = serre_element(d, i, j);
            let mut sdeg = RootSum::zero(rank);
            sdeg[i] = 1 - d.cartan_entry(i, j);
            sdeg[j] = 1;
            let rest = *g - sdeg;
            if !rest.is_nonnegative() {
                continue;
            }
            for tail in words_of_degree(&rest) {
                let mut v = vec![QScalar::zero(); n];
                for (w, c) in &s {
                    let mut full = w.clone();
                    full.extend(&tail);
                    v[index[&full]] = c.clone();
                }
                rows.push(v);
            }
        }
    }
    let (ideal, pivots) = if rows.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let mut m = Mat::from_rows(rows);
        let pivots = m.rref();
        let ideal: Vec<Vec<(usize, QScalar)>> = (0..pivots.len())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.clone()))
                    .collect()
            })
            .collect();
        (ideal, pivots)
    };
    let standard_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let std_pos: HashMap<usize, usize> = standard_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut reduction = vec![Vec::new(); n];
    for (&c, &k) in &std_pos {
        reduction[c] = vec![(k, QScalar::one())];
    }
    for (r, &p) in pivots.iter().enumerate() {
        reduction[p] = ideal[r]
            .iter()
            .filter(|(j, _)| *j != p)
            .map(|(j, c)| (std_pos[j], -c))
            .collect();
    }
    let standard: Vec<Word> = standard_cols.iter().map(|&c| words[c].clone()).collect();
    let standard_index = standard.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    GradedBasis {
        degree: *g,
        words,
        index,
        standard,
        standard_index,
        reduction,
        ideal,
    }
}
