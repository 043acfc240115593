use crate::cartan::{RootSum, Weight};
use crate::scalars::QScalar;
use std::collections::BTreeMap;
use std::fmt;

/// A word in the generators `e_i` (or `f_i`); letters are 0-based simple indices.
pub type Word = Vec<u8>;

pub fn word_degree(w: &[u8], rank: usize) -> RootSum {
    let mut g = RootSum::zero(rank);
    for &i in w {
        g[i as usize] += 1;
    }
    g
}

/// Normal-ordered monomial `f-word * k_lambda * e-word`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub f: Word,
    pub k: Weight,
    pub e: Word,
}

impl Monomial {
    pub fn k(k: Weight) -> Self {
        Monomial {
            f: Word::new(),
            k,
            e: Word::new(),
        }
    }

    /// Weight in the root lattice: `deg(e) - deg(f)`.
    pub fn weight(&self) -> RootSum {
        let r = self.k.rank();
        word_degree(&self.e, r) - word_degree(&self.f, r)
    }

    pub fn height(&self) -> usize {
        self.f.len() + self.e.len()
    }
}

fn fmt_word(f: &mut fmt::Formatter<'_>, gen: char, w: &[u8]) -> fmt::Result {
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        write!(f, "{gen}[{}]", w[i] + 1)?;
        if j - i > 1 {
            write!(f, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.is_empty() && self.e.is_empty() && self.k.is_zero() {
            return f.write_str("1");
        }
        fmt_word(f, 'f', &self.f)?;
        if !self.k.is_zero() {
            let parts: Vec<String> = self.k.coords().iter().map(|x| x.to_string()).collect();
            write!(f, "k[{}]", parts.join(","))?;
        }
        fmt_word(f, 'e', &self.e)
    }
}

/// Element of U_q(g) as a combination of normal-ordered monomials whose
/// words are standard basis words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UElement {
    pub terms: BTreeMap<Monomial, QScalar>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(rank: usize, c: QScalar) -> Self {
        Self::from_monomial(Monomial::k(Weight::zero(rank)), c)
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, QScalar::one())
    }

    pub fn from_monomial(m: Monomial, c: QScalar) -> Self {
        let mut u = Self::zero();
        u.add_term(m, c);
        u
    }

    pub fn k(k: Weight) -> Self {
        Self::from_monomial(Monomial::k(k), QScalar::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &UElement, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &o.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QScalar) -> UElement {
        let mut out = UElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, o: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(o, &QScalar::one());
        out
    }

    pub fn sub(&self, o: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(o, &-QScalar::one());
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_height(&self) -> usize {
        self.terms.keys().map(Monomial::height).max().unwrap_or(0)
    }

    /// Is every term of root weight `w`?
    pub fn is_homogeneous(&self, w: &RootSum) -> bool {
        self.terms.keys().all(|m| m.weight() == *w)
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let cs = c.to_string();
            let (neg, mag) = if c.is_laurent() && cs.starts_with('-') && !cs[1..].contains([' ', '/']) {
                (true, cs[1..].to_string())
            } else {
                (false, cs)
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let is_unit_monomial = m.f.is_empty() && m.e.is_empty() && m.k.is_zero();
            let mag = if mag.contains([' ', '/']) { format!("({mag})") } else { mag };
            if is_unit_monomial {
                f.write_str(&mag)?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UElement({self})")
    }
}

impl serde::Serialize for UElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
