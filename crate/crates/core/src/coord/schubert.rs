//! The characters `epsilon_w` and the maps `Phi_w` into functionals on
//! `U^{>=0}`.

use super::{CoordAlgebra, CoordElement, CoordError};
use crate::cartan::{RootSum, WeylWord, Weight};
use crate::linalg::{dot, Mat};
use crate::rmatrix::word_string;
use crate::scalars::QScalar;
use crate::wmod::braid_word_operator;
use serde::Serialize;

/// `epsilon_w(phi)` and the table `x -> <tT_w(v*_lambda), x v>` on the
/// standard e-words of the only degree where it can be nonzero.
#[derive(Debug, Clone, Serialize)]
pub struct SchubertValue {
    pub w: WeylWord,
    pub epsilon: QScalar,
    pub degree: Option<RootSum>,
    pub words: Vec<String>,
    pub values: Vec<QScalar>,
}

impl CoordAlgebra<'_> {
    /// The covector `v -> <v*_lambda, T_w v>` on `V(lambda)`.
    fn twisted_top(&self, w: &WeylWord, lambda: &Weight) -> Result<Vec<QScalar>, CoordError> {
        let g = self.grade(lambda)?;
        let t = braid_word_operator(&g.module, w)?;
        Ok(t.row(g.top).to_vec())
    }

    /// `epsilon_w(f_lambda(v)) = <tT_w(v*_lambda), v>`.
    pub fn epsilon(&self, w: &WeylWord, x: &CoordElement) -> Result<QScalar, CoordError> {
        Ok(dot(&self.twisted_top(w, &x.grade)?, &x.vector))
    }

    pub fn schubert(&self, w: &WeylWord, x: &CoordElement) -> Result<SchubertValue, CoordError> {
        let d = self.datum();
        let weight = x.weight.ok_or(CoordError::NotHomogeneous)?;
        let start = self.twisted_top(w, &x.grade)?;
        let epsilon = dot(&start, &x.vector);
        let target = d.weyl_act(&d.reduce(&w.inverse()), &x.grade);
        let degree = d.weight_to_root(&(target - weight)).ok().filter(RootSum::is_nonnegative);
        let (words, values) = match &degree {
            Some(gamma) => {
                let g = self.grade(&x.grade)?;
                let words = self.uq.basis(gamma)?.standard.clone();
                let values = g
                    .functionals(&start, &words)
                    .iter()
                    .map(|r| dot(r, &x.vector))
                    .collect();
                (words.iter().map(|w| word_string(w)).collect(), values)
            }
            None => (Vec::new(), Vec::new()),
        };
        Ok(SchubertValue {
            w: w.clone(),
            epsilon,
            degree,
            words,
            values,
        })
    }

    /// `dim ker(Phi_w) ∩ A(lambda)`.
    pub fn schubert_kernel_dim(&self, w: &WeylWord, lambda: &Weight) -> Result<usize, CoordError> {
        let g = self.grade(lambda)?;
        let start = self.twisted_top(w, lambda)?;
        let full = crate::wmod::full_depth(self.uq, lambda)?;
        let mut rows = Vec::new();
        for gamma in full.box_below() {
            let words = self.uq.basis(&gamma)?.standard.clone();
            rows.extend(g.functionals(&start, &words));
        }
        Ok(g.dim() - Mat::from_rows(rows).rank())
    }
}
