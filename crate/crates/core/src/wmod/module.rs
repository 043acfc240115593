use crate::cartan::{CartanDatum, CharacterPoly, RootSum, Weight};
use crate::linalg::Mat;
use crate::scalars::QScalar;
use crate::uqg::{Generator, UElement};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Weights `top - gamma` with `0 <= gamma <= depth` are exact; anything
/// outside was cut off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub top: Weight,
    pub depth: RootSum,
}

/// A weight module with exact generator matrices.
///
/// Column `j` of `e[i]` is the image of basis vector `j` under `e_i` (for
/// right modules, under `v -> v e_i`). `k_mu` acts on a basis vector of
/// weight `w` by `q^{(mu, w)}`.
#[derive(Debug, Clone)]
pub struct WeightModule {
    pub side: Side,
    pub datum: CartanDatum,
    pub weights: Vec<Weight>,
    pub labels: Vec<String>,
    pub e: Vec<Mat>,
    pub f: Vec<Mat>,
    pub window: Option<Window>,
    /// Index of the normalised highest (or generating) vector, if any.
    pub highest: Option<usize>,
}

impl WeightModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn is_truncated(&self) -> bool {
        self.window.is_some()
    }

    pub fn in_window(&self, w: &Weight) -> bool {
        match &self.window {
            None => true,
            Some(win) => match self.datum.weight_to_root(&(win.top - *w)) {
                Ok(g) => g.is_nonnegative() && g.le_componentwise(&win.depth),
                Err(_) => false,
            },
        }
    }

    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut m: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            m.entry(*w).or_default().push(i);
        }
        m
    }

    pub fn character(&self) -> CharacterPoly {
        let mut c = CharacterPoly::new();
        for w in &self.weights {
            c.add_term(*w, 1);
        }
        c
    }

    /// Diagonal matrix of `k_mu`.
    pub fn k_matrix(&self, mu: &Weight) -> Mat {
        let mut m = Mat::zeros(self.dim(), self.dim());
        for (i, w) in self.weights.iter().enumerate() {
            m[(i, i)] = self.datum.q_form(mu, w);
        }
        m
    }

    pub fn generator_matrix(&self, g: &Generator) -> Mat {
        match g {
            Generator::E(i) => self.e[*i].clone(),
            Generator::F(i) => self.f[*i].clone(),
            Generator::K(w) => self.k_matrix(w),
        }
    }

    pub fn act_generator(&self, g: &Generator, v: &[QScalar]) -> Vec<QScalar> {
        match g {
            Generator::E(i) => self.e[*i].apply(v),
            Generator::F(i) => self.f[*i].apply(v),
            Generator::K(mu) => v
                .iter()
                .zip(&self.weights)
                .map(|(x, w)| if x.is_zero() { x.clone() } else { x * &self.datum.q_form(mu, w) })
                .collect(),
        }
    }

    /// `u v` for left modules, `v u` for right modules.
    pub fn act(&self, u: &UElement, v: &[QScalar]) -> Vec<QScalar> {
        let mut out = vec![QScalar::zero(); self.dim()];
        for (m, c) in u.iter() {
            let mut gens: Vec<Generator> = m.f.iter().map(|&i| Generator::F(i as usize)).collect();
            if !m.k.is_zero() {
                gens.push(Generator::K(m.k));
            }
            gens.extend(m.e.iter().map(|&i| Generator::E(i as usize)));
            let mut x = v.to_vec();
            let order: Box<dyn Iterator<Item = &Generator>> = match self.side {
                Side::Left => Box::new(gens.iter().rev()),
                Side::Right => Box::new(gens.iter()),
            };
            for g in order {
                x = self.act_generator(g, &x);
            }
            for (o, y) in out.iter_mut().zip(&x) {
                if !y.is_zero() {
                    *o += &(y * c);
                }
            }
        }
        out
    }

    pub fn act_matrix(&self, u: &UElement) -> Mat {
        let cols: Vec<Vec<QScalar>> = (0..self.dim()).map(|j| self.act(u, &self.unit(j))).collect();
        Mat::from_columns(self.dim(), &cols)
    }

    pub fn unit(&self, j: usize) -> Vec<QScalar> {
        let mut v = vec![QScalar::zero(); self.dim()];
        v[j] = QScalar::one();
        v
    }

    pub fn zero_vec(&self) -> Vec<QScalar> {
        vec![QScalar::zero(); self.dim()]
    }

    /// Restricted dual, on the opposite side, with the dual basis:
    /// `<v* h, v> = <v*, h v>` (or `<h v*, v> = <v*, v h>`).
    pub fn restricted_dual(&self) -> WeightModule {
        WeightModule {
            side: match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            },
            datum: self.datum.clone(),
            weights: self.weights.clone(),
            labels: self.labels.iter().map(|l| format!("({l})*")).collect(),
            e: self.e.iter().map(Mat::transpose).collect(),
            f: self.f.iter().map(Mat::transpose).collect(),
            window: self.window,
            highest: self.highest,
        }
    }

    pub fn export(&self) -> ModuleExport {
        let sparse = |m: &Mat| -> Vec<(usize, usize, String)> {
            let mut v = Vec::new();
            for j in 0..m.cols() {
                for i in 0..m.rows() {
                    if !m[(i, j)].is_zero() {
                        v.push((i, j, m[(i, j)].to_string()));
                    }
                }
            }
            v
        };
        ModuleExport {
            schema: 1,
            side: self.side,
            cartan: self.datum.name().to_string(),
            dim: self.dim(),
            truncated: self.window.map(|w| format!("{} - {}", w.top, w.depth)),
            highest: self.highest,
            basis: self
                .weights
                .iter()
                .zip(&self.labels)
                .map(|(w, l)| BasisEntry {
                    label: l.clone(),
                    weight: *w,
                })
                .collect(),
            e: self.e.iter().map(sparse).collect(),
            f: self.f.iter().map(sparse).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisEntry {
    pub label: String,
    pub weight: Weight,
}

/// JSON form: generator matrices as `(row, column, scalar)` triples.
#[derive(Debug, Clone, Serialize)]
pub struct ModuleExport {
    pub schema: u32,
    pub side: Side,
    pub cartan: String,
    pub dim: usize,
    pub truncated: Option<String>,
    pub highest: Option<usize>,
    pub basis: Vec<BasisEntry>,
    pub e: Vec<Vec<(usize, usize, String)>>,
    pub f: Vec<Vec<(usize, usize, String)>>,
}
