use alloc::vec;

use crate::error::Result;
use crate::matrix::TropMatrix;
use crate::scalar::{ExtTropScalar, TropScalar};

/// Maximum cycle mean via Karp's dynamic program, run from every source.
///
/// `D_k(v)` is the heaviest walk of length `k` from the source to `v`; then
/// `λ = max_v min_{k<n} (D_n(v) − D_k(v)) / (n − k)` over `v` with `D_n(v)` finite.
pub fn max_cycle_mean(a: &TropMatrix) -> Result<TropScalar> {
    let n = a.require_square()?;
    let mut best: Option<TropScalar> = None;
    let mut d = vec![vec![ExtTropScalar::Bottom; n]; n + 1];
    for source in 0..n {
        for row in d.iter_mut() {
            row.fill(ExtTropScalar::Bottom);
        }
        d[0][source] = ExtTropScalar::ONE;
        for k in 1..=n {
            let (done, rest) = d.split_at_mut(k);
            let prev = &done[k - 1];
            for (v, slot) in rest[0].iter_mut().enumerate() {
                *slot = prev
                    .iter()
                    .enumerate()
                    .filter_map(|(u, du)| du.finite().map(|du| ExtTropScalar::Finite(du + a.get(v, u))))
                    .max()
                    .unwrap_or(ExtTropScalar::Bottom);
            }
        }
        for (v, last) in d[n].iter().enumerate() {
            let Some(dn) = last.finite() else { continue };
            let candidate = (0..n)
                .filter_map(|k| {
                    d[k][v]
                        .finite()
                        .map(|dk| (dn - dk) / TropScalar::from_integer((n - k) as i128))
                })
                .min();
            if let Some(c) = candidate {
                best = Some(best.map_or(c, |b| b.max(c)));
            }
        }
    }
    // Every node of a finite matrix has an outgoing walk of each length.
    Ok(best.expect("finite square matrix has cycles"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn examples() {
        let one = TropMatrix::from_rows(&[[rat(7, 3)]]).unwrap();
        assert_eq!(max_cycle_mean(&one).unwrap(), rat(7, 3));
        let a = TropMatrix::from_rows(&[[int(-1), int(2)], [int(-3), int(-1)]]).unwrap();
        assert_eq!(max_cycle_mean(&a).unwrap(), rat(-1, 2));
        let e = TropMatrix::from_rows(&[[int(0), int(-1)], [int(-2), int(0)]]).unwrap();
        assert_eq!(max_cycle_mean(&e).unwrap(), int(0));
    }

    #[test]
    fn non_square_rejected() {
        let a = TropMatrix::zeros(2, 3).unwrap();
        assert!(max_cycle_mean(&a).unwrap_err().is_shape_error());
    }
}
