//! Random generators for idempotents, ℋ-class elements and sample points.
//!
//! Entries are drawn from small rational grids so that exact ties (zero-weight
//! cycles, proportional columns) occur with useful frequency.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::groups::{gamma, permutation_cycles, GroupDecomposition, MonomialUnit};
use crate::matrix::{Matrix, TropMatrix, TropVector};
use crate::scalar::{rat, TropScalar};
use crate::spectral::{critical_structure, kleene_plus, kleene_star, max_cycle_mean};

/// Uniform draw from `{lo/denom, …, hi/denom}`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, lo: i128, hi: i128, denom: i128) -> TropScalar {
    rat(rng.random_range(lo..=hi), denom)
}

pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    lo: i128,
    hi: i128,
    denom: i128,
) -> TropMatrix {
    Matrix::from_fn(rows, cols, |_, _| random_scalar(rng, lo, hi, denom)).expect("positive shape")
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: i128, hi: i128, denom: i128) -> TropVector {
    TropVector((0..n).map(|_| random_scalar(rng, lo, hi, denom)).collect())
}

/// A random matrix shifted so that its maximum cycle mean is `0` or below.
pub fn random_nonpositive<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TropMatrix {
    let a = random_matrix(rng, n, n, -6, 6, 2);
    let mcm = max_cycle_mean(&a).expect("square");
    let extra = if rng.random_bool(0.5) {
        TropScalar::from_integer(0)
    } else {
        random_scalar(rng, 0, 4, 2)
    };
    a.scale(-mcm - extra)
}

/// `A[i][j] = p_i − p_j − w[i][j]` with `w ≥ 0`: every cycle weighs `−Σw`, so
/// zero-weight cycles are exactly those with `w = 0` along them.
fn potential_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, zero_weight: impl Fn(usize, usize) -> bool) -> TropMatrix {
    let p: Vec<TropScalar> = (0..n).map(|_| random_scalar(rng, -8, 8, 2)).collect();
    Matrix::from_fn(n, n, |i, j| {
        let w = if zero_weight(i, j) {
            TropScalar::from_integer(0)
        } else {
            random_scalar(rng, 1, 8, 2)
        };
        p[i] - p[j] - w
    })
    .expect("positive size")
}

/// Random surjection of `0..n` onto `0..k`.
fn random_grouping<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    let mut groups: Vec<usize> = (0..n).map(|i| if i < k { i } else { rng.random_range(0..k) }).collect();
    groups.shuffle(rng);
    groups
}

/// Zero-diagonal idempotent of size `n` and rank `k`, `1 ≤ k ≤ n`.
pub fn random_zero_diag_idempotent<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> TropMatrix {
    assert!(1 <= k && k <= n);
    let groups = random_grouping(rng, n, k);
    let a = potential_matrix(rng, n, |i, j| groups[i] == groups[j]);
    kleene_star(&a).expect("cycles are non-positive")
}

/// Idempotent of full rank `n`.
pub fn random_full_rank_idempotent<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TropMatrix {
    random_zero_diag_idempotent(rng, n, n)
}

/// Idempotent of rank `k` with `noncritical` nodes off the critical graph, so
/// that those diagonal entries are negative.
///
/// Built as the spectral projector `Q = ⊕_{c critical} A⁺_{·c} ⊗ A⁺_{c·}` of a
/// matrix with maximum cycle mean 0.
pub fn random_idempotent<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, noncritical: usize) -> TropMatrix {
    assert!(k >= 1 && k + noncritical <= n);
    let critical_count = n - noncritical;
    let mut groups: Vec<Option<usize>> = random_grouping(rng, critical_count, k).into_iter().map(Some).collect();
    groups.extend(core::iter::repeat_n(None, noncritical));
    groups.shuffle(rng);
    let a = potential_matrix(
        rng,
        n,
        |i, j| matches!((groups[i], groups[j]), (Some(x), Some(y)) if x == y),
    );
    spectral_projector(&a)
}

fn spectral_projector(a: &TropMatrix) -> TropMatrix {
    let plus = kleene_plus(a).expect("maximum cycle mean is 0");
    let crit = critical_structure(a).expect("square").critical_nodes;
    let n = a.rows();
    Matrix::from_fn(n, n, |i, j| {
        crit.iter()
            .map(|&c| plus[(i, c)] + plus[(c, j)])
            .max()
            .expect("critical nodes exist")
    })
    .expect("positive size")
}

/// Full-rank idempotent invariant under a random unit `D(q) P_σ D(−q)`, so Σ is usually nontrivial.
///
/// Takes the maximum of a random matrix over its orbit under conjugation by the
/// unit, shifts every cycle strictly below 0, and closes.
pub fn random_symmetric_full_rank_idempotent<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TropMatrix {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let q: Vec<TropScalar> = (0..n).map(|_| random_scalar(rng, -4, 4, 2)).collect();
    let lambda = TropVector((0..n).map(|i| q[i] - q[sigma[i]]).collect());
    let g = MonomialUnit::new(sigma, lambda).expect("valid permutation");
    let g_inv = g.inverse();

    // `g` is a coboundary, so `g^m = I` for `m` the order of σ and the orbit
    // closes after `m` conjugations.
    let order = permutation_cycles(g.sigma())
        .iter()
        .fold(1usize, |acc, c| lcm(acc, c.len()));
    let mut term = random_matrix(rng, n, n, -6, 6, 2);
    let mut acc = term.clone();
    for _ in 1..order {
        term = g_inv.right_mul(&g.left_mul(&term).expect("size")).expect("size");
        acc = acc.oplus(&term).expect("size");
    }
    debug_assert!(g.commutes_with(&acc).unwrap_or(false));
    let mcm = max_cycle_mean(&acc).expect("square");
    let shifted = acc.scale(-mcm - random_scalar(rng, 1, 4, 2));
    kleene_star(&shifted).expect("cycles are negative")
}

/// A random element `μ ⊗ γ(G)` of `H_E`, with `G` drawn from Σ.
pub fn random_hclass_element<R: Rng + ?Sized>(rng: &mut R, d: &GroupDecomposition) -> Result<TropMatrix> {
    let g = &d.sigma_group[rng.random_range(0..d.order)];
    let mu = random_scalar(rng, -6, 6, 2);
    Ok(gamma(&d.e, g)?.scale(mu))
}

/// A random point `E ⊗ z` of the column space.
pub fn random_point_in_span<R: Rng + ?Sized>(rng: &mut R, e: &TropMatrix) -> TropVector {
    let z = random_vector(rng, e.cols(), -10, 10, 2);
    e.mul_vec(&z).expect("matching size")
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}
