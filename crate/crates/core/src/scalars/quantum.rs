use super::QScalar;

/// `[n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}`; negative `n` gives `-[-n]`.
pub fn quantum_integer(n: i64, d: i64, l0: u32) -> QScalar {
    if n < 0 {
        return -quantum_integer(-n, d, l0);
    }
    let step = d * l0 as i64;
    let terms: Vec<(i64, i64)> = (0..n).map(|j| (step * (n - 1 - 2 * j), 1)).collect();
    QScalar::laurent(l0, &terms)
}

/// `[n]_{q^d}!`.
pub fn quantum_factorial(n: i64, d: i64, l0: u32) -> QScalar {
    assert!(n >= 0, "factorial of a negative integer");
    (1..=n).fold(QScalar::one(), |acc, k| acc * quantum_integer(k, d, l0))
}

/// Coefficient of `x^n` in `exp_t(x) = sum t^{n(n-1)/2} x^n / [n]_t!` with `t = q^d`.
/// With `inverse`, the coefficient of `exp_t(x)^{-1} = exp_{t^{-1}}(-x)` instead.
pub fn exp_t_coefficient(n: i64, d: i64, inverse: bool, l0: u32) -> QScalar {
    let e = if inverse { -d } else { d };
    let c = QScalar::q_pow(l0, e * n * (n - 1) / 2) / quantum_factorial(n, d.abs(), l0);
    if inverse && n % 2 == 1 {
        -c
    } else {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_quantum_integers() {
        let q = |n| QScalar::q_pow(1, n);
        assert_eq!(quantum_integer(2, 1, 1), q(1) + q(-1));
        assert_eq!(quantum_integer(3, 2, 1), q(4) + QScalar::one() + q(-4));
        assert_eq!(quantum_integer(0, 1, 1), QScalar::zero());
        assert_eq!(quantum_integer(1, 5, 3), QScalar::one());
    }

    #[test]
    fn exp_coefficient_example() {
        let c = exp_t_coefficient(2, -1, false, 1);
        let q = |n| QScalar::q_pow(1, n);
        assert_eq!(c, q(-1) / (q(1) + q(-1)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn exp_times_inverse_is_one(n in 1i64..=7, d in 1i64..=3, l0 in 1u32..=3) {
                // coefficient of x^n in exp_t(x) exp_t(x)^{-1}
                let c: QScalar = (0..=n)
                    .map(|k| exp_t_coefficient(k, d, false, l0) * exp_t_coefficient(n - k, d, true, l0))
                    .sum();
                prop_assert!(c.is_zero(), "degree {}: {}", n, c);
            }

            #[test]
            fn quantum_integers_are_bar_invariant(n in -6i64..=6, d in 1i64..=3, l0 in 1u32..=3) {
                let x = quantum_integer(n, d, l0);
                prop_assert_eq!(x.bar(), x);
            }
        }
    }
}
