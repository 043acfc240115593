//! Central character bookkeeping along the filtration of `E^mu`: which
//! layers give weights in the same shifted Weyl orbit.

use super::EmodError;
use crate::cartan::{CartanDatum, WeylWord, Weight};
use crate::wmod::WmodError;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct KeyLayer {
    pub index: usize,
    pub nu: Weight,
    pub linked: bool,
    pub witness: Option<WeylWord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KeyCheck {
    /// The precondition on `lambda` holds, so the iff is asserted.
    pub applicable: bool,
    pub layers: Vec<KeyLayer>,
    /// Only the expected layer is linked.
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct KeyLemmaReport {
    pub lambda: Weight,
    pub mu: Weight,
    /// `lambda + nu_k - w0 mu` linked to `lambda` exactly for `k = 1`.
    pub lowest: KeyCheck,
    /// `lambda + nu_k` linked to `lambda + mu` exactly for `k = r`.
    pub highest: KeyCheck,
}

impl KeyLemmaReport {
    /// Every applicable check holds.
    pub fn pass(&self) -> bool {
        [&self.lowest, &self.highest]
            .iter()
            .all(|c| !c.applicable || c.holds)
    }
}

fn check(
    datum: &CartanDatum,
    weights: &[Weight],
    applicable: bool,
    expected: usize,
    pair: impl Fn(&Weight) -> (Weight, Weight),
) -> KeyCheck {
    let layers: Vec<KeyLayer> = weights
        .iter()
        .enumerate()
        .map(|(index, nu)| {
            let (from, to) = pair(nu);
            let witness = datum.linked(&from, &to);
            KeyLayer {
                index,
                nu: *nu,
                linked: witness.is_some(),
                witness,
            }
        })
        .collect();
    let holds = layers.iter().all(|l| l.linked == (l.index == expected));
    KeyCheck {
        applicable,
        layers,
        holds,
    }
}

/// Layer weights `nu_1 = w0 mu, ..., nu_r = mu` ordered as in the
/// filtration of `E^mu`, with the repeated weights collapsed.
pub fn layer_weights(datum: &CartanDatum, mu: &Weight) -> Result<Vec<Weight>, EmodError> {
    if !mu.is_dominant() {
        return Err(EmodError::NotDominant(*mu));
    }
    let ch = datum.weyl_character(mu).map_err(WmodError::from)?;
    let mut weights: Vec<Weight> = ch.iter().map(|(w, _)| *w).collect();
    weights.sort_by(|x, y| datum.height_key(x).cmp(&datum.height_key(y)).then(x.cmp(y)));
    Ok(weights)
}

pub fn key_lemma(datum: &CartanDatum, lambda: &Weight, mu: &Weight) -> Result<KeyLemmaReport, EmodError> {
    let weights = layer_weights(datum, mu)?;
    let lowest_mu = datum.weyl_act(&datum.longest_element(), mu);
    let lowest = check(datum, &weights, datum.is_rho_dominant(lambda), 0, |nu| {
        (*lambda, *lambda + *nu - lowest_mu)
    });
    let top = weights.len() - 1;
    let highest = check(datum, &weights, lambda.is_dominant(), top, |nu| {
        (*lambda + *mu, *lambda + *nu)
    });
    Ok(KeyLemmaReport {
        lambda: *lambda,
        mu: *mu,
        lowest,
        highest,
    })
}
