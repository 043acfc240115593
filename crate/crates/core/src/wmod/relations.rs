//! Checks the defining relations of U as matrix identities on a module.

use super::module::{Side, WeightModule};
use crate::cartan::Weight;
use crate::linalg::is_zero_vec;
use crate::scalars::{quantum_factorial, QScalar};
use crate::uqg::Generator;
use serde::Serialize;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    /// (relation, column) pairs evaluated exactly.
    pub checked: usize,
    /// Columns skipped because a path left the truncation window.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

type Relation = (String, Vec<(Vec<Generator>, QScalar)>);

fn shift(m: &WeightModule, g: &Generator) -> Weight {
    match g {
        Generator::E(i) => m.datum.simple_root(*i),
        Generator::F(i) => -m.datum.simple_root(*i),
        Generator::K(_) => Weight::zero(m.rank()),
    }
}

fn relations(m: &WeightModule) -> Vec<Relation> {
    let d = &m.datum;
    let l0 = d.l0();
    let rank = d.rank();
    let mut out = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            let mut terms = vec![
                (vec![Generator::E(i), Generator::F(j)], QScalar::one()),
                (vec![Generator::F(j), Generator::E(i)], -QScalar::one()),
            ];
            if i == j {
                let a = d.simple_root(i);
                let qi = d.q_i(i);
                let c = (&qi - &qi.inv().expect("unit")).inv().expect("q_i is not 1");
                terms.push((vec![Generator::K(a)], -c.clone()));
                terms.push((vec![Generator::K(-a)], c));
            }
            out.push((format!("[e{}, f{}]", i + 1, j + 1), terms));
            if i == j {
                continue;
            }
            let top = (1 - d.cartan_entry(i, j)) as usize;
            let di = i64::from(d.symmetrizer(i));
            for minus in [false, true] {
                let gen = |k| if minus { Generator::F(k) } else { Generator::E(k) };
                let mut terms = Vec::new();
                for n in 0..=top {
                    let mut word = vec![gen(i); top - n];
                    word.push(gen(j));
                    word.extend(vec![gen(i); n]);
                    let c = (quantum_factorial((top - n) as i64, di, l0) * quantum_factorial(n as i64, di, l0))
                        .inv()
                        .expect("nonzero");
                    terms.push((word, if n % 2 == 1 { -c } else { c }));
                }
                let name = if minus { "f" } else { "e" };
                out.push((format!("serre {name}({}, {})", i + 1, j + 1), terms));
            }
        }
    }
    out
}

/// Relation check on a left module, or on the dual of a right module.
pub fn check_relations(m: &WeightModule) -> RelationReport {
    if m.side == Side::Right {
        return check_relations(&m.restricted_dual());
    }
    let mut report = RelationReport::default();
    // generators move weights as expected
    for i in 0..m.rank() {
        let a = m.datum.simple_root(i);
        for (name, mat, s) in [("e", &m.e[i], a), ("f", &m.f[i], -a)] {
            for col in 0..m.dim() {
                for row in 0..m.dim() {
                    if !mat[(row, col)].is_zero() && m.weights[row] != m.weights[col] + s {
                        report
                            .failures
                            .push(format!("{name}{} moves {} to {}", i + 1, m.weights[col], m.weights[row]));
                    }
                }
            }
        }
    }
    for (name, terms) in relations(m) {
        for col in 0..m.dim() {
            let stays = terms.iter().all(|(word, _)| {
                let mut w = m.weights[col];
                word.iter().rev().all(|g| {
                    w = w + shift(m, g);
                    m.in_window(&w)
                })
            });
            if !stays {
                report.skipped += 1;
                continue;
            }
            let mut acc = m.zero_vec();
            for (word, c) in &terms {
                let mut v = m.unit(col);
                for g in word.iter().rev() {
                    v = m.act_generator(g, &v);
                }
                for (a, x) in acc.iter_mut().zip(&v) {
                    if !x.is_zero() {
                        *a += &(x * c);
                    }
                }
            }
            report.checked += 1;
            if !is_zero_vec(&acc) {
                report.failures.push(format!("{name} fails on {}", m.labels[col]));
            }
        }
    }
    report
}
