//! Independent oracles used by the integration tests. None of these call the
//! routine they are checked against.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropical_groups::{rat, ExtTropMatrix, MonomialUnit, TropMatrix, TropScalar, TropVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn mat(rows: &[&[i128]]) -> TropMatrix {
    let rows: Vec<Vec<TropScalar>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| TropScalar::from_integer(x)).collect())
        .collect();
    TropMatrix::from_rows(&rows).unwrap()
}

/// Square matrices with entries on the half-integer grid in `[-5, 5]`.
pub fn square_matrix(max_n: usize) -> impl Strategy<Value = TropMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-10i128..=10, n * n)
            .prop_map(move |v| TropMatrix::from_vec(n, n, v.into_iter().map(|x| rat(x, 2)).collect()).unwrap())
    })
}

/// Maximum cycle mean by enumerating every simple cycle (each cycle rooted at
/// its smallest node, visited by depth-first search).
pub fn brute_force_mcm(a: &TropMatrix) -> TropScalar {
    let n = a.rows();
    let mut best: Option<TropScalar> = None;
    fn dfs(
        a: &TropMatrix,
        root: usize,
        node: usize,
        weight: TropScalar,
        len: i128,
        visited: &mut Vec<bool>,
        best: &mut Option<TropScalar>,
    ) {
        let n = a.rows();
        for next in root..n {
            // edge node -> next has weight a[next][node]
            let w = weight + a[(next, node)];
            if next == root {
                let mean = w / TropScalar::from_integer(len);
                *best = Some(best.map_or(mean, |b: TropScalar| b.max(mean)));
            } else if !visited[next] {
                visited[next] = true;
                dfs(a, root, next, w, len + 1, visited, best);
                visited[next] = false;
            }
        }
    }
    for root in 0..n {
        let mut visited = vec![false; n];
        visited[root] = true;
        dfs(a, root, root, TropScalar::from_integer(0), 1, &mut visited, &mut best);
    }
    best.unwrap()
}

/// `A ⊕ A² ⊕ ⋯ ⊕ A^n` by repeated dense products.
pub fn series_plus(a: &TropMatrix) -> TropMatrix {
    let mut power = a.clone();
    let mut acc = a.clone();
    for _ in 1..a.rows() {
        power = power.otimes(a).unwrap();
        acc = acc.oplus(&power).unwrap();
    }
    acc
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for s in 0..used.len() {
            if !used[s] {
                used[s] = true;
                prefix.push(s);
                go(prefix, used, out);
                prefix.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Dense monomial matrix with `lambda[i]` at `(i, sigma[i])`.
pub fn dense_unit(sigma: &[usize], lambda: &[TropScalar]) -> ExtTropMatrix {
    let n = sigma.len();
    ExtTropMatrix::from_fn(n, n, |i, j| {
        if sigma[i] == j {
            tropical_groups::ExtTropScalar::Finite(lambda[i])
        } else {
            tropical_groups::ExtTropScalar::Bottom
        }
    })
    .unwrap()
}

/// Permutations σ admitting weights with `D(λ)P_σ ⊗ A = A ⊗ D(λ)P_σ`, found
/// without the closed-form weights: the `(i, σ(1))` entries of both dense
/// products force `λ_i − λ_1`, which is then checked by dense multiplication.
pub fn brute_force_commuting(a: &TropMatrix) -> Vec<(Vec<usize>, Vec<TropScalar>)> {
    let n = a.rows();
    let ext = a.to_ext();
    let mut out = Vec::new();
    for sigma in permutations(n) {
        // With λ_1 = 0: (GA)_{i,σ(1)} = λ_i + A_{σ(i),σ(1)}, (AG)_{i,σ(1)} = A_{i,1}.
        let lambda: Vec<TropScalar> = (0..n).map(|i| a[(i, 0)] - a[(sigma[i], sigma[0])]).collect();
        let g = dense_unit(&sigma, &lambda);
        if g.otimes(&ext).unwrap() == ext.otimes(&g).unwrap() {
            out.push((sigma, lambda));
        }
    }
    out
}

/// Uniqueness of the solution of `E ⊗ x = y` by perturbation: lower each
/// coordinate of the principal solution by `2^-10` and see whether the
/// product is unchanged.
pub fn unique_by_perturbation(e: &TropMatrix, y: &[TropScalar]) -> bool {
    let n = e.cols();
    let xhat: Vec<TropScalar> = (0..n)
        .map(|j| (0..e.rows()).map(|i| y[i] - e[(i, j)]).min().unwrap())
        .collect();
    (0..n).all(|j| {
        let mut x = xhat.clone();
        x[j] -= rat(1, 1024);
        e.mul_vec(&TropVector(x)).unwrap().0 != y
    })
}

pub fn unit_as_pair(g: &MonomialUnit) -> (Vec<usize>, Vec<TropScalar>) {
    (g.sigma().to_vec(), g.lambda().0.clone())
}
