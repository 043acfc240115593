use super::basis::{self, GradedBasis};
use super::element::{word_degree, Monomial, UElement, Word};
use super::UqError;
use crate::cartan::{CartanDatum, RootSum, Weight};
use crate::scalars::QScalar;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub const DEFAULT_MAX_HEIGHT: usize = 8;

/// U_q(g) for a Cartan datum, with memoized graded bases and
/// straightening tables.
pub struct QuantumGroup {
    datum: CartanDatum,
    max_height: usize,
    bases: RwLock<HashMap<RootSum, Arc<GradedBasis>>>,
    /// `e-word * f-word` in normal form.
    straighten: RwLock<HashMap<(Word, Word), Arc<UElement>>>,
}

impl std::fmt::Debug for QuantumGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuantumGroup({}, max_height={})", self.datum.name(), self.max_height)
    }
}

impl QuantumGroup {
    pub fn new(datum: CartanDatum) -> Self {
        Self::with_max_height(datum, DEFAULT_MAX_HEIGHT)
    }

    pub fn with_max_height(datum: CartanDatum, max_height: usize) -> Self {
        QuantumGroup {
            datum,
            max_height,
            bases: RwLock::new(HashMap::new()),
            straighten: RwLock::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn max_height(&self) -> usize {
        self.max_height
    }

    fn check_height(&self, h: usize) -> Result<(), UqError> {
        if h > self.max_height {
            return Err(UqError::DegreeCap {
                height: h,
                cap: self.max_height,
            });
        }
        Ok(())
    }

    /// Basis of `U^+_g`; the same words index `U^-_{-g}`.
    pub fn basis(&self, g: &RootSum) -> Result<Arc<GradedBasis>, UqError> {
        if !g.is_nonnegative() {
            return Err(UqError::NegativeDegree(*g));
        }
        self.check_height(g.height() as usize)?;
        if let Some(b) = self.bases.read().expect("basis table poisoned").get(g) {
            return Ok(b.clone());
        }
        // make sure the degrees one letter down exist first
        for i in 0..self.rank() {
            if g[i] > 0 {
                let mut h = *g;
                h[i] -= 1;
                self.basis(&h)?;
            }
        }
        let built = {
            let table = self.bases.read().expect("basis table poisoned");
            basis::build(&self.datum, g, &|h| table.get(h).cloned())
        };
        let expected = self.datum.kostant_dim(g) as usize;
        if built.dim() != expected {
            return Err(UqError::BasisDimension {
                degree: *g,
                found: built.dim(),
                expected,
            });
        }
        let built = Arc::new(built);
        self.bases
            .write()
            .expect("basis table poisoned")
            .entry(*g)
            .or_insert_with(|| built.clone());
        Ok(built)
    }

    /// Standard-word expansion of an arbitrary word.
    pub fn reduce_word(&self, w: &[u8]) -> Result<Vec<(Word, QScalar)>, UqError> {
        let g = word_degree(w, self.rank());
        let b = self.basis(&g)?;
        Ok(b.reduce(w)
            .iter()
            .map(|(k, c)| (b.standard[*k].clone(), c.clone()))
            .collect())
    }

    pub fn e(&self, i: usize) -> UElement {
        self.gen_word(false, &[i as u8])
    }

    pub fn f(&self, i: usize) -> UElement {
        self.gen_word(true, &[i as u8])
    }

    pub fn k(&self, w: Weight) -> UElement {
        UElement::k(w)
    }

    /// `k_{alpha_i}`.
    pub fn k_i(&self, i: usize) -> UElement {
        UElement::k(self.datum.simple_root(i))
    }

    pub fn one(&self) -> UElement {
        UElement::one(self.rank())
    }

    pub fn scalar(&self, c: QScalar) -> UElement {
        UElement::scalar(self.rank(), c)
    }

    fn gen_word(&self, minus: bool, w: &[u8]) -> UElement {
        let mut m = Monomial::k(Weight::zero(self.rank()));
        if minus {
            m.f = w.to_vec();
        } else {
            m.e = w.to_vec();
        }
        UElement::from_monomial(m, QScalar::one())
    }

    /// Element of U^+ (or U^-) given by an arbitrary word, reduced.
    pub fn word_element(&self, minus: bool, w: &[u8]) -> Result<UElement, UqError> {
        let mut out = UElement::zero();
        for (s, c) in self.reduce_word(w)? {
            let mut m = Monomial::k(Weight::zero(self.rank()));
            if minus {
                m.f = s;
            } else {
                m.e = s;
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    /// Divided power `e_i^{(n)}` or `f_i^{(n)}`.
    pub fn divided_power(&self, minus: bool, i: usize, n: usize) -> Result<UElement, UqError> {
        let w = vec![i as u8; n];
        let fact = crate::scalars::quantum_factorial(
            n as i64,
            i64::from(self.datum.symmetrizer(i)),
            self.datum.l0(),
        );
        Ok(self.word_element(minus, &w)?.scale(&fact.inv().expect("nonzero")))
    }

    fn root_weight(&self, g: &RootSum) -> Weight {
        self.datum.root_to_weight(g)
    }

    /// `e-word * f-word` (both standard) in normal form.
    fn straighten(&self, x: &[u8], y: &[u8]) -> Result<Arc<UElement>, UqError> {
        let key = (x.to_vec(), y.to_vec());
        if let Some(v) = self.straighten.read().expect("table poisoned").get(&key) {
            return Ok(v.clone());
        }
        let rank = self.rank();
        let result = if x.is_empty() || y.is_empty() {
            let mut m = Monomial::k(Weight::zero(rank));
            m.e = x.to_vec();
            m.f = y.to_vec();
            UElement::from_monomial(m, QScalar::one())
        } else {
            // x = e_i x'; x * y = e_i (x' y)
            let i = x[0] as usize;
            let rest = self.straighten(&x[1..], y)?;
            let mut acc = UElement::zero();
            for (m, c) in rest.iter() {
                let t = self.e_times_monomial(i, m)?;
                acc.add_scaled(&t, c);
            }
            acc
        };
        let result = Arc::new(result);
        self.straighten
            .write()
            .expect("table poisoned")
            .insert(key, result.clone());
        Ok(result)
    }

    /// `e_i * (f-word k e-word)` with standard words, in normal form.
    fn e_times_monomial(&self, i: usize, m: &Monomial) -> Result<UElement, UqError> {
        let d = &self.datum;
        let rank = self.rank();
        let ai = d.simple_root(i);
        let mut out = UElement::zero();
        // y e_i k x = q^{-(k, alpha_i)} y k e_i x
        let c0 = d.q_form(&m.k, &ai).inv().expect("unit");
        let mut ex = vec![i as u8];
        ex.extend(&m.e);
        self.check_height(ex.len())?;
        for (w, c) in self.reduce_word(&ex)? {
            out.add_term(
                Monomial {
                    f: m.f.clone(),
                    k: m.k,
                    e: w,
                },
                &c0 * &c,
            );
        }
        // commutators with each f_i in the word
        let qi = d.q_i(i);
        let denom = (&qi - &qi.inv().expect("unit")).inv().expect("q_i != q_i^{-1}");
        for p in 0..m.f.len() {
            if m.f[p] as usize != i {
                continue;
            }
            let tail = word_degree(&m.f[p + 1..], rank);
            let tail_w = self.root_weight(&tail);
            let s = d.q_form(&ai, &tail_w);
            let mut y = m.f[..p].to_vec();
            y.extend(&m.f[p + 1..]);
            let red = self.reduce_word(&y)?;
            let plus = s.inv().expect("unit") * &denom;
            let minus = -(&s * &denom);
            for (w, c) in &red {
                out.add_term(
                    Monomial {
                        f: w.clone(),
                        k: m.k + ai,
                        e: m.e.clone(),
                    },
                    c * &plus,
                );
                out.add_term(
                    Monomial {
                        f: w.clone(),
                        k: m.k - ai,
                        e: m.e.clone(),
                    },
                    c * &minus,
                );
            }
        }
        Ok(out)
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Result<UElement, UqError> {
        let d = &self.datum;
        let rank = self.rank();
        let mid = self.straighten(&a.e, &b.f)?;
        let mut out = UElement::zero();
        for (m, c) in mid.iter() {
            // a.f k_a (m.f k_m m.e) k_b b.e
            let gf = self.root_weight(&word_degree(&m.f, rank));
            let ge = self.root_weight(&word_degree(&m.e, rank));
            let factor = d.q_form(&a.k, &gf).inv().expect("unit")
                * d.q_form(&b.k, &ge).inv().expect("unit");
            let mut fw = a.f.clone();
            fw.extend(&m.f);
            let mut ew = m.e.clone();
            ew.extend(&b.e);
            self.check_height(fw.len())?;
            self.check_height(ew.len())?;
            let fr = self.reduce_word(&fw)?;
            let er = self.reduce_word(&ew)?;
            let k = a.k + m.k + b.k;
            let base = c * &factor;
            for (f1, c1) in &fr {
                let cf = &base * c1;
                for (e1, c2) in &er {
                    out.add_term(
                        Monomial {
                            f: f1.clone(),
                            k,
                            e: e1.clone(),
                        },
                        &cf * c2,
                    );
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, a: &UElement, b: &UElement) -> Result<UElement, UqError> {
        let mut out = UElement::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                let p = self.mul_monomials(ma, mb)?;
                out.add_scaled(&p, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn product(&self, factors: &[UElement]) -> Result<UElement, UqError> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &UElement, n: usize) -> Result<UElement, UqError> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, a: &UElement, b: &UElement) -> Result<UElement, UqError> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// Monomial as an ordered list of generator elements.
    pub(crate) fn monomial_factors(&self, m: &Monomial) -> Vec<Generator> {
        let mut v: Vec<Generator> = m.f.iter().map(|&i| Generator::F(i as usize)).collect();
        if !m.k.is_zero() {
            v.push(Generator::K(m.k));
        }
        v.extend(m.e.iter().map(|&i| Generator::E(i as usize)));
        v
    }

    pub fn generator(&self, g: &Generator) -> UElement {
        match *g {
            Generator::E(i) => self.e(i),
            Generator::F(i) => self.f(i),
            Generator::K(w) => self.k(w),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E(usize),
    F(usize),
    K(Weight),
}
