//! The graded coordinate ring `A = sum_lambda A(lambda)` of the quantized
//! flag manifold, with `A(lambda)` identified with `V(lambda)` through
//! `f_lambda` and grades bounded by a cutoff.
//!
//! An element of grade `nu` is pinned down by the functionals
//! `x -> <v*_nu, x v>` for `x` in `U^+`, so products are computed by solving
//! `<v*_{lambda+mu}, x p(v0 (x) v1)> = <v*_lambda (x) v*_mu, x (v0 (x) v1)>`
//! one weight space at a time.

mod extremal;
mod localize;
mod schubert;
#[cfg(test)]
mod tests;

pub use extremal::{ExtremalElement, OreSide, OreWitness};
pub(crate) use extremal::dominant_below;
pub use localize::{LocalizedElement, LocalizedSpace, ThetaEntry, ThetaReport};
pub use schubert::SchubertValue;

use crate::cartan::{CartanDatum, CartanError, RootSum, Weight};
use crate::linalg::{dot, is_zero_vec, Mat};
use crate::scalars::QScalar;
use crate::uqg::{QuantumGroup, UElement, UqError, Word};
use crate::wmod::{simple, simple_truncated, WeightModule, WmodError};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::{Arc, RwLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoordError {
    #[error(transparent)]
    Algebra(#[from] UqError),
    #[error(transparent)]
    Module(#[from] WmodError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("grade {0} is not dominant")]
    NotDominant(Weight),
    #[error("grade {grade} exceeds the cutoff {cutoff}")]
    CutoffExceeded { grade: Weight, cutoff: Weight },
    #[error("weight {weight} of grade {grade} lies below the truncation depth")]
    OutsideDepth { grade: Weight, weight: Weight },
    #[error("vector of length {got} does not fit grade {grade} of dimension {expected}")]
    BadVector { grade: Weight, expected: usize, got: usize },
    #[error("U^+ functionals do not separate V({grade}) in degree {degree}")]
    Degenerate { grade: Weight, degree: RootSum },
    #[error("no element of V({grade}) matches the tensor functionals in degree {degree}")]
    FunctionalMismatch { grade: Weight, degree: RootSum },
    #[error("weight space {weight} of V({grade}) is not a line")]
    NotExtremal { grade: Weight, weight: Weight },
    #[error("element is not homogeneous in weight")]
    NotHomogeneous,
    #[error("grades differ: {0} and {1}")]
    GradeMismatch(Weight, Weight),
    #[error("no Ore witness with auxiliary grade up to {0}")]
    NoWitness(Weight),
    #[error("weight space did not stabilise before grade {0}")]
    NotStabilized(Weight),
}

type Sparse = Vec<(usize, QScalar)>;

/// One graded piece `V(lambda)` together with the bookkeeping the product
/// needs.
#[derive(Debug)]
pub struct Grade {
    pub module: WeightModule,
    /// `lambda - wt(b_i)` in root coordinates.
    pub drops: Vec<RootSum>,
    by_drop: BTreeMap<RootSum, Vec<usize>>,
    e_t: Vec<Mat>,
    top: usize,
}

impl Grade {
    fn new(module: WeightModule, lambda: &Weight) -> Result<Self, CoordError> {
        let d = &module.datum;
        let drops = module
            .weights
            .iter()
            .map(|w| d.weight_to_root(&(*lambda - *w)))
            .collect::<Result<Vec<_>, _>>()?;
        let mut by_drop: BTreeMap<RootSum, Vec<usize>> = BTreeMap::new();
        for (i, g) in drops.iter().enumerate() {
            by_drop.entry(*g).or_default().push(i);
        }
        let e_t = module.e.iter().map(Mat::transpose).collect();
        let top = module.highest.unwrap_or(0);
        Ok(Grade {
            module,
            drops,
            by_drop,
            e_t,
            top,
        })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Indices of basis vectors of weight `lambda - gamma`.
    pub fn at_drop(&self, gamma: &RootSum) -> &[usize] {
        self.by_drop.get(gamma).map_or(&[], Vec::as_slice)
    }

    /// Whether weight `lambda - gamma` is represented (always true for full
    /// modules).
    fn covers(&self, gamma: &RootSum) -> bool {
        self.module.window.as_ref().is_none_or(|w| gamma.le_componentwise(&w.depth))
    }

    /// Row functionals `v -> <v*, x v>` for the given e-words, starting from
    /// the covector `start`.
    fn functionals(&self, start: &[QScalar], words: &[Word]) -> Vec<Vec<QScalar>> {
        let mut memo: HashMap<Word, Rc<Vec<QScalar>>> = HashMap::new();
        memo.insert(Vec::new(), Rc::new(start.to_vec()));
        let step = |r: &Vec<QScalar>, j: usize| self.e_t[j].apply(r);
        words
            .iter()
            .map(|w| prefix_memo(&mut memo, w, &step).as_ref().clone())
            .collect()
    }

    fn top_covector(&self) -> Vec<QScalar> {
        self.module.unit(self.top)
    }
}

fn prefix_memo<T>(memo: &mut HashMap<Word, Rc<T>>, word: &[u8], step: &impl Fn(&T, usize) -> T) -> Rc<T> {
    if let Some(v) = memo.get(word) {
        return v.clone();
    }
    let (last, head) = word.split_last().expect("empty word is always memoised");
    let prev = prefix_memo(memo, head, step);
    let v = Rc::new(step(&prev, *last as usize));
    memo.insert(word.to_vec(), v.clone());
    v
}

/// `p_{lambda,mu}` on basis pairs. Entries whose weight falls outside a
/// truncated target are `None`.
#[derive(Debug)]
pub struct ProductTable {
    pub left: Weight,
    pub right: Weight,
    right_dim: usize,
    entries: Vec<Option<Sparse>>,
}

impl ProductTable {
    /// `p(b_i (x) b_j)` as a sparse vector, if inside the window.
    pub fn entry(&self, i: usize, j: usize) -> Option<&[(usize, QScalar)]> {
        self.entries[i * self.right_dim + j].as_deref()
    }
}

/// `f_lambda(v)`: a vector of `V(lambda)` read as an element of `A(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordElement {
    pub grade: Weight,
    /// The `U^0`-weight, when the element is homogeneous.
    pub weight: Option<Weight>,
    pub vector: Vec<QScalar>,
}

impl CoordElement {
    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.vector)
    }

    pub fn scale(&self, c: &QScalar) -> CoordElement {
        CoordElement {
            grade: self.grade,
            weight: if c.is_zero() { None } else { self.weight },
            vector: self.vector.iter().map(|x| x * c).collect(),
        }
    }
}

/// The coordinate ring up to a grade cutoff. With a depth, every `V(lambda)`
/// keeps only the weights `lambda - gamma` with `gamma <= depth`.
pub struct CoordAlgebra<'a> {
    uq: &'a QuantumGroup,
    cutoff: Weight,
    depth: Option<RootSum>,
    grades: RwLock<HashMap<Weight, Arc<Grade>>>,
    tables: RwLock<HashMap<(Weight, Weight), Arc<ProductTable>>>,
    extremals: RwLock<HashMap<(Weight, Weight), ExtremalElement>>,
}

impl std::fmt::Debug for CoordAlgebra<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CoordAlgebra({:?}, cutoff={}", self.uq, self.cutoff)?;
        if let Some(d) = &self.depth {
            write!(f, ", depth={d}")?;
        }
        write!(f, ")")
    }
}

impl<'a> CoordAlgebra<'a> {
    pub fn new(uq: &'a QuantumGroup, cutoff: Weight) -> Self {
        CoordAlgebra {
            uq,
            cutoff,
            depth: None,
            grades: RwLock::default(),
            tables: RwLock::default(),
            extremals: RwLock::default(),
        }
    }

    pub fn with_depth(uq: &'a QuantumGroup, cutoff: Weight, depth: RootSum) -> Self {
        CoordAlgebra {
            depth: Some(depth),
            ..Self::new(uq, cutoff)
        }
    }

    pub fn uq(&self) -> &'a QuantumGroup {
        self.uq
    }

    pub fn datum(&self) -> &CartanDatum {
        self.uq.datum()
    }

    pub fn cutoff(&self) -> Weight {
        self.cutoff
    }

    pub fn depth(&self) -> Option<RootSum> {
        self.depth
    }

    pub fn check_grade(&self, lambda: &Weight) -> Result<(), CoordError> {
        if !lambda.is_dominant() {
            return Err(CoordError::NotDominant(*lambda));
        }
        if !lambda.le_componentwise(&self.cutoff) {
            return Err(CoordError::CutoffExceeded {
                grade: *lambda,
                cutoff: self.cutoff,
            });
        }
        Ok(())
    }

    pub fn grade(&self, lambda: &Weight) -> Result<Arc<Grade>, CoordError> {
        self.check_grade(lambda)?;
        if let Some(g) = self.grades.read().expect("grade cache poisoned").get(lambda) {
            return Ok(g.clone());
        }
        let module = match &self.depth {
            Some(depth) => simple_truncated(self.uq, lambda, depth)?,
            None => simple(self.uq, lambda)?,
        };
        let g = Arc::new(Grade::new(module, lambda)?);
        self.grades
            .write()
            .expect("grade cache poisoned")
            .insert(*lambda, g.clone());
        Ok(g)
    }

    pub fn dim(&self, lambda: &Weight) -> Result<usize, CoordError> {
        Ok(self.grade(lambda)?.dim())
    }

    pub fn element(&self, lambda: &Weight, vector: Vec<QScalar>) -> Result<CoordElement, CoordError> {
        let g = self.grade(lambda)?;
        if vector.len() != g.dim() {
            return Err(CoordError::BadVector {
                grade: *lambda,
                expected: g.dim(),
                got: vector.len(),
            });
        }
        let mut support = vector
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| g.module.weights[i]);
        let weight = match support.next() {
            Some(w) if support.all(|o| o == w) => Some(w),
            _ => None,
        };
        Ok(CoordElement {
            grade: *lambda,
            weight,
            vector,
        })
    }

    pub fn basis(&self, lambda: &Weight) -> Result<Vec<CoordElement>, CoordError> {
        let g = self.grade(lambda)?;
        (0..g.dim()).map(|i| self.element(lambda, g.module.unit(i))).collect()
    }

    pub fn one(&self) -> Result<CoordElement, CoordError> {
        let zero = Weight::zero(self.uq.rank());
        self.element(&zero, vec![QScalar::one()])
    }

    pub fn zero(&self, lambda: &Weight) -> Result<CoordElement, CoordError> {
        let n = self.dim(lambda)?;
        self.element(lambda, vec![QScalar::zero(); n])
    }

    pub fn add(&self, a: &CoordElement, b: &CoordElement) -> Result<CoordElement, CoordError> {
        if a.grade != b.grade {
            return Err(CoordError::GradeMismatch(a.grade, b.grade));
        }
        let v = a.vector.iter().zip(&b.vector).map(|(x, y)| x + y).collect();
        self.element(&a.grade, v)
    }

    /// The memoised table of `p_{lambda,mu}`.
    pub fn table(&self, lambda: &Weight, mu: &Weight) -> Result<Arc<ProductTable>, CoordError> {
        let key = (*lambda, *mu);
        if let Some(t) = self.tables.read().expect("table cache poisoned").get(&key) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.build_table(lambda, mu)?);
        self.tables
            .write()
            .expect("table cache poisoned")
            .insert(key, t.clone());
        Ok(t)
    }

    fn build_table(&self, lambda: &Weight, mu: &Weight) -> Result<ProductTable, CoordError> {
        let nu = *lambda + *mu;
        let (a, b, c) = (self.grade(lambda)?, self.grade(mu)?, self.grade(&nu)?);
        let d = self.datum();
        let (da, db) = (a.dim(), b.dim());
        let mut entries: Vec<Option<Sparse>> = vec![None; da * db];
        let mut by_gamma: BTreeMap<RootSum, Vec<(usize, usize)>> = BTreeMap::new();
        for i in 0..da {
            for j in 0..db {
                let g = a.drops[i] + b.drops[j];
                if c.covers(&g) {
                    by_gamma.entry(g).or_default().push((i, j));
                }
            }
        }
        // functionals on V(lambda) (x) V(mu) as da x db matrices, grown one
        // letter at a time: R <- E^T R + K R E
        let k_diag: Vec<Vec<QScalar>> = (0..d.rank())
            .map(|j| {
                let aj = d.simple_root(j);
                a.module.weights.iter().map(|w| d.q_form(&aj, w)).collect()
            })
            .collect();
        let step = |r: &Mat, j: usize| {
            let mut twisted = r.mul(&b.module.e[j]);
            for (row, s) in k_diag[j].iter().enumerate() {
                for col in 0..db {
                    if !twisted[(row, col)].is_zero() {
                        twisted[(row, col)] *= s;
                    }
                }
            }
            a.e_t[j].mul(r).add(&twisted)
        };
        let mut memo: HashMap<Word, Rc<Mat>> = HashMap::new();
        let mut start = Mat::zeros(da, db);
        start[(a.top, b.top)] = QScalar::one();
        memo.insert(Vec::new(), Rc::new(start));

        for (gamma, pairs) in by_gamma {
            let words = self.uq.basis(&gamma)?.standard.clone();
            let tensor_rows: Vec<Rc<Mat>> = words.iter().map(|w| prefix_memo(&mut memo, w, &step)).collect();
            let target = c.at_drop(&gamma);
            let rows: Vec<Vec<QScalar>> = c
                .functionals(&c.top_covector(), &words)
                .into_iter()
                .map(|r| target.iter().map(|&k| r[k].clone()).collect())
                .collect();
            let solver = LeftInverse::new(&rows, target.len()).ok_or(CoordError::Degenerate {
                grade: nu,
                degree: gamma,
            })?;
            for (i, j) in pairs {
                let t: Vec<QScalar> = tensor_rows.iter().map(|m| m[(i, j)].clone()).collect();
                let sol = solver.solve(&rows, &t).ok_or(CoordError::FunctionalMismatch {
                    grade: nu,
                    degree: gamma,
                })?;
                let sparse = target
                    .iter()
                    .zip(sol)
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(&k, x)| (k, x))
                    .collect();
                entries[i * db + j] = Some(sparse);
            }
        }
        Ok(ProductTable {
            left: *lambda,
            right: *mu,
            right_dim: db,
            entries,
        })
    }

    /// `f_lambda(v0) f_mu(v1) = f_{lambda+mu}(p_{lambda,mu}(v0 (x) v1))`.
    pub fn mul(&self, x: &CoordElement, y: &CoordElement) -> Result<CoordElement, CoordError> {
        let nu = x.grade + y.grade;
        let table = self.table(&x.grade, &y.grade)?;
        let target = self.grade(&nu)?;
        let mut out = vec![QScalar::zero(); target.dim()];
        for (i, a) in x.vector.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.vector.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let Some(entry) = table.entry(i, j) else {
                    let (ga, gb) = (self.grade(&x.grade)?, self.grade(&y.grade)?);
                    let w = ga.module.weights[i] + gb.module.weights[j];
                    return Err(CoordError::OutsideDepth { grade: nu, weight: w });
                };
                let ab = a * b;
                for (k, c) in entry {
                    out[*k] += &(&ab * c);
                }
            }
        }
        self.element(&nu, out)
    }

    pub fn product(&self, factors: &[CoordElement]) -> Result<CoordElement, CoordError> {
        let mut acc = self.one()?;
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `p_{lambda,mu}` as a `dim V(lambda+mu) x (dim V(lambda) dim V(mu))`
    /// matrix on the tensor basis `i * dim V(mu) + j`.
    pub fn product_matrix(&self, lambda: &Weight, mu: &Weight) -> Result<Mat, CoordError> {
        let table = self.table(lambda, mu)?;
        let (da, db) = (self.dim(lambda)?, self.dim(mu)?);
        let dc = self.dim(&(*lambda + *mu))?;
        let mut m = Mat::zeros(dc, da * db);
        for i in 0..da {
            for j in 0..db {
                for (k, c) in table.entry(i, j).unwrap_or(&[]) {
                    m[(*k, i * db + j)] = c.clone();
                }
            }
        }
        Ok(m)
    }

    /// Rank of `A(lambda) (x) A(mu) -> A(lambda+mu)` next to the target
    /// dimension.
    pub fn product_rank(&self, lambda: &Weight, mu: &Weight) -> Result<(usize, usize), CoordError> {
        let m = self.product_matrix(lambda, mu)?;
        Ok((m.rank(), m.rows()))
    }

    /// `u . f_lambda(v) = f_lambda(u v)`. On a truncated grade only elements
    /// without lowering letters are allowed.
    pub fn act(&self, u: &UElement, x: &CoordElement) -> Result<CoordElement, CoordError> {
        let g = self.grade(&x.grade)?;
        if g.module.is_truncated() && u.iter().any(|(m, _)| !m.f.is_empty()) {
            return Err(WmodError::Truncated.into());
        }
        self.element(&x.grade, g.module.act(u, &x.vector))
    }

    /// `<f_lambda(v), u> = <v*_lambda, u v>`.
    pub fn evaluate(&self, x: &CoordElement, u: &UElement) -> Result<QScalar, CoordError> {
        let g = self.grade(&x.grade)?;
        if g.module.is_truncated() && u.iter().any(|(m, _)| !m.f.is_empty()) {
            return Err(WmodError::Truncated.into());
        }
        Ok(g.module.act(u, &x.vector)[g.top].clone())
    }

    /// `(<x, x_a>)_a` over the standard e-words of degree `gamma`.
    pub fn raising_functionals(&self, x: &CoordElement, gamma: &RootSum) -> Result<Vec<QScalar>, CoordError> {
        let g = self.grade(&x.grade)?;
        let words = self.uq.basis(gamma)?.standard.clone();
        Ok(g.functionals(&g.top_covector(), &words)
            .iter()
            .map(|r| dot(r, &x.vector))
            .collect())
    }
}

/// A left inverse of a full-column-rank matrix built from independent rows,
/// with the remaining rows checked on every solve.
struct LeftInverse {
    pivots: Vec<usize>,
    inverse: Mat,
}

impl LeftInverse {
    fn new(rows: &[Vec<QScalar>], cols: usize) -> Option<Self> {
        if cols == 0 {
            return Some(LeftInverse {
                pivots: Vec::new(),
                inverse: Mat::zeros(0, 0),
            });
        }
        if rows.is_empty() {
            return None;
        }
        let mut t = Mat::from_rows(rows.to_vec()).transpose();
        let pivots = t.rref();
        if pivots.len() < cols {
            return None;
        }
        let square = Mat::from_rows(pivots.iter().map(|&r| rows[r].clone()).collect());
        Some(LeftInverse {
            inverse: square.inverse()?,
            pivots,
        })
    }

    fn solve(&self, rows: &[Vec<QScalar>], t: &[QScalar]) -> Option<Vec<QScalar>> {
        let picked: Vec<QScalar> = self.pivots.iter().map(|&r| t[r].clone()).collect();
        let sol = if self.pivots.is_empty() { Vec::new() } else { self.inverse.apply(&picked) };
        rows.iter()
            .zip(t)
            .all(|(r, v)| &dot(r, &sol) == v)
            .then_some(sol)
    }
}
