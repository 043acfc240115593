use serde::Serialize;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub const MAX_RANK: usize = 4;

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    rank: u8,
    c: [i32; MAX_RANK],
}

/// Element of the root lattice in simple-root coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSum {
    rank: u8,
    c: [i32; MAX_RANK],
}

macro_rules! lattice {
    ($t:ident, $open:literal, $close:literal) => {
        impl $t {
            pub fn zero(rank: usize) -> Self {
                assert!(rank <= MAX_RANK, "rank above {MAX_RANK}");
                $t {
                    rank: rank as u8,
                    c: [0; MAX_RANK],
                }
            }

            pub fn new(coords: &[i32]) -> Self {
                let mut v = Self::zero(coords.len());
                v.c[..coords.len()].copy_from_slice(coords);
                v
            }

            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.c[i] = 1;
                v
            }

            pub fn rank(&self) -> usize {
                self.rank as usize
            }

            pub fn coords(&self) -> &[i32] {
                &self.c[..self.rank as usize]
            }

            pub fn is_zero(&self) -> bool {
                self.coords().iter().all(|&x| x == 0)
            }

            /// Componentwise `self <= other`.
            pub fn le_componentwise(&self, other: &Self) -> bool {
                self.coords().iter().zip(other.coords()).all(|(a, b)| a <= b)
            }

            pub fn parse(s: &str) -> Option<Self> {
                let s = s.trim();
                let inner = s.strip_prefix($open)?.strip_suffix($close)?;
                let mut v = Vec::new();
                for part in inner.split(',') {
                    v.push(part.trim().parse::<i32>().ok()?);
                }
                if v.is_empty() || v.len() > MAX_RANK {
                    return None;
                }
                Some(Self::new(&v))
            }
        }

        impl Index<usize> for $t {
            type Output = i32;
            fn index(&self, i: usize) -> &i32 {
                &self.coords()[i]
            }
        }

        impl IndexMut<usize> for $t {
            fn index_mut(&mut self, i: usize) -> &mut i32 {
                let r = self.rank as usize;
                &mut self.c[..r][i]
            }
        }

        impl Add for $t {
            type Output = $t;
            fn add(mut self, o: $t) -> $t {
                debug_assert_eq!(self.rank, o.rank);
                for i in 0..MAX_RANK {
                    self.c[i] += o.c[i];
                }
                self
            }
        }

        impl Sub for $t {
            type Output = $t;
            fn sub(mut self, o: $t) -> $t {
                debug_assert_eq!(self.rank, o.rank);
                for i in 0..MAX_RANK {
                    self.c[i] -= o.c[i];
                }
                self
            }
        }

        impl Neg for $t {
            type Output = $t;
            fn neg(mut self) -> $t {
                for x in &mut self.c {
                    *x = -*x;
                }
                self
            }
        }

        impl Mul<$t> for i32 {
            type Output = $t;
            fn mul(self, mut v: $t) -> $t {
                for x in &mut v.c {
                    *x *= self;
                }
                v
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.coords().iter().map(|x| x.to_string()).collect();
                write!(f, "{}{}{}", $open, parts.join(","), $close)
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }

        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }
    };
}

lattice!(Weight, "[", "]");
lattice!(RootSum, "<", ">");

impl RootSum {
    pub fn height(&self) -> i32 {
        self.coords().iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords().iter().all(|&x| x >= 0)
    }

    /// All `gamma` with `0 <= gamma <= self` componentwise.
    pub fn box_below(&self) -> Vec<RootSum> {
        let mut out = vec![RootSum::zero(self.rank())];
        for i in 0..self.rank() {
            let mut next = Vec::new();
            for g in &out {
                for k in 0..=self[i].max(0) {
                    let mut h = *g;
                    h[i] = k;
                    next.push(h);
                }
            }
            out = next;
        }
        out.sort_by_key(|g| (g.height(), *g));
        out
    }
}

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&x| x >= 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let w = Weight::new(&[1, -2]);
        assert_eq!(w.to_string(), "[1,-2]");
        assert_eq!(Weight::parse("[1, -2]"), Some(w));
        let r = RootSum::new(&[1, 1]);
        assert_eq!(r.to_string(), "<1,1>");
        assert_eq!(RootSum::parse("<1,1>"), Some(r));
        assert_eq!(Weight::parse("<1,1>"), None);
    }

    #[test]
    fn box_enumeration() {
        let b = RootSum::new(&[1, 2]).box_below();
        assert_eq!(b.len(), 6);
        assert_eq!(b[0], RootSum::zero(2));
    }
}
