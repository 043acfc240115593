use super::{CartanDatum, Weight};
use serde::Serialize;
use std::fmt;

/// Word `s_{i_1} s_{i_2} ... s_{i_n}`; acts on weights right to left.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeylWord(pub Vec<u8>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn simple(i: usize) -> Self {
        WeylWord(vec![i as u8])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, o: &WeylWord) -> WeylWord {
        let mut v = self.0.clone();
        v.extend(&o.0);
        WeylWord(v)
    }

    pub fn parse(s: &str) -> Option<WeylWord> {
        let s = s.trim();
        if s.is_empty() || s == "1" || s == "e" {
            return Some(WeylWord::identity());
        }
        let mut v = Vec::new();
        for part in s.split([',', ' ', '.']) {
            let part = part.trim().trim_start_matches('s');
            if part.is_empty() {
                continue;
            }
            let i: u8 = part.parse().ok()?;
            if i == 0 {
                return None;
            }
            v.push(i - 1);
        }
        Some(WeylWord(v))
    }
}

/// Letters are rendered 1-based, e.g. `s1s2`; the identity is `1`.
impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for i in &self.0 {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for WeylWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl CartanDatum {
    /// Linear action `w(lambda)`.
    pub fn weyl_act(&self, w: &WeylWord, lambda: &Weight) -> Weight {
        w.letters().rev().fold(*lambda, |acc, i| self.reflect(i, &acc))
    }

    /// Shifted action `w . lambda = w(lambda + rho) - rho`.
    pub fn weyl_dot(&self, w: &WeylWord, lambda: &Weight) -> Weight {
        self.weyl_act(w, &(*lambda + self.rho())) - self.rho()
    }

    /// Canonical reduced word of the element `w`: repeatedly strip the
    /// smallest simple reflection that lowers the length.
    pub fn reduce(&self, w: &WeylWord) -> WeylWord {
        self.word_from_image(self.weyl_act(w, &self.rho()))
    }

    /// The element sending `rho` to `image` (which must lie in `W rho`).
    fn word_from_image(&self, image: Weight) -> WeylWord {
        let mut mu = image;
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| mu[i] < 0) {
            mu = self.reflect(i, &mu);
            word.push(i as u8);
        }
        WeylWord(word)
    }

    pub fn weyl_length(&self, w: &WeylWord) -> usize {
        self.reduce(w).len()
    }

    pub fn same_element(&self, a: &WeylWord, b: &WeylWord) -> bool {
        self.weyl_act(a, &self.rho()) == self.weyl_act(b, &self.rho())
    }

    /// All elements as canonical reduced words, by length then lexicographically.
    pub fn weyl_group(&self) -> Vec<WeylWord> {
        let rho = self.rho();
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(rho);
        let mut frontier = vec![rho];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for mu in frontier {
                for i in 0..self.rank() {
                    let nu = self.reflect(i, &mu);
                    if seen.insert(nu) {
                        next.push(nu);
                    }
                }
            }
            frontier = next;
        }
        let mut words: Vec<WeylWord> = seen.into_iter().map(|mu| self.word_from_image(mu)).collect();
        words.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        words
    }

    pub fn longest_element(&self) -> WeylWord {
        self.word_from_image(-self.rho())
    }

    /// All reduced words of `w`.
    pub fn reduced_words(&self, w: &WeylWord) -> Vec<WeylWord> {
        let target = self.weyl_act(w, &self.rho());
        let len = self.weyl_length(w);
        let mut out = Vec::new();
        // build from the left: w = s_i w' with l(w') = l(w) - 1
        fn rec(d: &CartanDatum, mu: Weight, len: usize, prefix: &mut Vec<u8>, out: &mut Vec<WeylWord>) {
            if len == 0 {
                out.push(WeylWord(prefix.clone()));
                return;
            }
            for i in 0..d.rank() {
                if mu[i] < 0 {
                    prefix.push(i as u8);
                    rec(d, d.reflect(i, &mu), len - 1, prefix, out);
                    prefix.pop();
                }
            }
        }
        rec(self, target, len, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Is `mu` in the shifted orbit `W . lambda`?
    pub fn linked(&self, lambda: &Weight, mu: &Weight) -> Option<WeylWord> {
        self.weyl_group()
            .into_iter()
            .find(|w| self.weyl_dot(w, lambda) == *mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_action_a1() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let s = WeylWord::simple(0);
        assert_eq!(a1.weyl_dot(&s, &Weight::new(&[0])), Weight::new(&[-2]));
    }

    #[test]
    fn longest_element_a2() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let w0 = a2.longest_element();
        assert_eq!(w0.len(), 3);
        assert_eq!(a2.weyl_act(&w0, &a2.fundamental(0)), -a2.fundamental(1));
        assert_eq!(a2.reduced_words(&w0).len(), 2);
    }

    #[test]
    fn group_orders() {
        for (name, n) in [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24)] {
            assert_eq!(CartanDatum::preset(name).unwrap().weyl_group().len(), n);
        }
    }

    #[test]
    fn reduction_is_canonical() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let w = WeylWord(vec![0, 1, 0]);
        let v = WeylWord(vec![1, 0, 1]);
        assert_eq!(a2.reduce(&w), a2.reduce(&v));
        assert_eq!(a2.reduce(&WeylWord(vec![0, 0])), WeylWord::identity());
    }
}
