use super::module::WeightModule;
use super::WmodError;
use crate::linalg::Mat;

/// `M (x) N` with the coproduct action; basis `(a, b)` sits at
/// `a * dim N + b`.
pub fn tensor(m: &WeightModule, n: &WeightModule) -> Result<WeightModule, WmodError> {
    if m.side != n.side {
        return Err(WmodError::SideMismatch);
    }
    if m.is_truncated() || n.is_truncated() {
        return Err(WmodError::Truncated);
    }
    let d = &m.datum;
    let (im, in_) = (Mat::identity(m.dim()), Mat::identity(n.dim()));
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..d.rank() {
        let a = d.simple_root(i);
        // e_i -> e_i (x) 1 + k_i (x) e_i,  f_i -> f_i (x) k_i^{-1} + 1 (x) f_i
        e.push(m.e[i].kron(&in_).add(&m.k_matrix(&a).kron(&n.e[i])));
        f.push(m.f[i].kron(&n.k_matrix(&-a)).add(&im.kron(&n.f[i])));
    }
    let mut weights = Vec::with_capacity(m.dim() * n.dim());
    let mut labels = Vec::with_capacity(m.dim() * n.dim());
    for (wa, la) in m.weights.iter().zip(&m.labels) {
        for (wb, lb) in n.weights.iter().zip(&n.labels) {
            weights.push(*wa + *wb);
            labels.push(format!("{la} ⊗ {lb}"));
        }
    }
    Ok(WeightModule {
        side: m.side,
        datum: d.clone(),
        weights,
        labels,
        e,
        f,
        window: None,
        highest: m.highest.zip(n.highest).map(|(a, b)| a * n.dim() + b),
    })
}
