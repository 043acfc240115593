use super::{CartanDatum, CartanError, RootSum, Weight};
use num_rational::Rational64;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Finite formal sum of `e^lambda` with integer multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CharacterPoly(pub BTreeMap<Weight, i64>);

impl CharacterPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(w: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(w, 1);
        c
    }

    pub fn add_term(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.0.entry(w).or_insert(0);
        *e += m;
        if *e == 0 {
            self.0.remove(&w);
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, m) in &o.0 {
            out.add_term(*w, *m);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, m) in &o.0 {
            out.add_term(*w, -m);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::new();
        for (a, m) in &self.0 {
            for (b, n) in &o.0 {
                out.add_term(*a + *b, m * n);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::new();
        for (w, m) in &self.0 {
            out.add_term(*w, m * k);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.0.iter()
    }
}

impl fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(w, m)| format!("{m}e{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CharacterPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, i64> = self.0.iter().map(|(w, m)| (w.to_string(), *m)).collect();
        m.serialize(s)
    }
}

impl CartanDatum {
    fn order_key(&self, w: &Weight) -> (Rational64, Weight) {
        (self.height_key(w), *w)
    }

    /// Weyl character of `V(lambda)` by exact long division of the
    /// alternating sum by `prod_{beta > 0} (1 - e^{-beta})`.
    pub fn weyl_character(&self, lambda: &Weight) -> Result<CharacterPoly, CartanError> {
        let rho = self.rho();
        let mut num = CharacterPoly::new();
        for w in self.weyl_group() {
            let sign = if w.len() % 2 == 0 { 1 } else { -1 };
            num.add_term(self.weyl_act(&w, &(*lambda + rho)) - rho, sign);
        }
        let mut den = CharacterPoly::monomial(Weight::zero(self.rank()));
        for beta in self.positive_roots() {
            let mut f = CharacterPoly::monomial(Weight::zero(self.rank()));
            f.add_term(-self.root_to_weight(beta), -1);
            den = den.mul(&f);
        }
        let floor = self.order_key(&self.weyl_act(&self.longest_element(), lambda));
        let mut quotient = CharacterPoly::new();
        let mut rem = num;
        while let Some((&top, &m)) = rem.0.iter().max_by_key(|(w, _)| self.order_key(w)) {
            if self.order_key(&top) < floor {
                return Err(CartanError::NonzeroRemainder);
            }
            quotient.add_term(top, m);
            let shifted: CharacterPoly = CharacterPoly(den.0.iter().map(|(w, k)| (*w + top, k * m)).collect());
            rem = rem.sub(&shifted);
        }
        Ok(quotient)
    }

    /// `e^lambda * sum_{gamma <= depth} K(gamma) e^{-gamma}`.
    pub fn verma_character(&self, lambda: &Weight, depth: &RootSum) -> CharacterPoly {
        let mut out = CharacterPoly::new();
        for g in depth.box_below() {
            let k = self.kostant_dim(&g) as i64;
            out.add_term(*lambda - self.root_to_weight(&g), k);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_a2() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let ch = a2.weyl_character(&Weight::new(&[1, 1])).unwrap();
        assert_eq!(ch.dim(), 8);
        assert_eq!(ch.get(&Weight::new(&[0, 0])), 2);
    }

    #[test]
    fn a1_strings() {
        let a1 = CartanDatum::preset("A1").unwrap();
        for n in 0..7 {
            let ch = a1.weyl_character(&Weight::new(&[n])).unwrap();
            assert_eq!(ch.dim(), i64::from(n) + 1);
        }
    }

    #[test]
    fn g2_small() {
        let g2 = CartanDatum::preset("G2").unwrap();
        assert_eq!(g2.weyl_character(&g2.fundamental(0)).unwrap().dim(), 7);
        assert_eq!(g2.weyl_character(&g2.fundamental(1)).unwrap().dim(), 14);
    }
}
