use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::idem::idempotent_profile;
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::TropScalar;

use super::unit::{permutation_cycles, MonomialUnit};

/// Default cap on the size of matrices whose symmetries are enumerated.
pub const DEFAULT_MAX_N: usize = 10;

/// Above this order the pairwise closure check of Σ is skipped.
const CLOSURE_CHECK_LIMIT: usize = 720;

/// All units `D(λ) P_σ` commuting with `A`, one per permutation, with `λ_1 = 0`.
///
/// Expanding `G ⊗ A = A ⊗ G` entrywise gives
/// `A[σ(i)][σ(j)] = A[i][j] + λ_j − λ_i` for all `i, j`. Fixing `λ_1 = 0`, the
/// `j = 1` equations determine `λ_i = A[i][1] − A[σ(i)][σ(1)]`; the remaining
/// equations are checked as the permutation is built, so inconsistent prefixes
/// are pruned. Output is in lexicographic order of `σ`.
pub fn commuting_units(a: &TropMatrix, max_n: usize) -> Result<Vec<MonomialUnit>> {
    let n = a.require_square()?;
    if n > max_n {
        return Err(Error::TooLarge { n, cap: max_n });
    }
    let mut out = Vec::new();
    let mut sigma = vec![0usize; n];
    let mut lambda = vec![TropScalar::zero(); n];
    let mut used = vec![false; n];
    extend(a, 0, &mut sigma, &mut lambda, &mut used, &mut out);
    Ok(out)
}

fn extend(
    a: &TropMatrix,
    i: usize,
    sigma: &mut [usize],
    lambda: &mut [TropScalar],
    used: &mut [bool],
    out: &mut Vec<MonomialUnit>,
) {
    let n = sigma.len();
    if i == n {
        out.push(MonomialUnit::new_unchecked(sigma.to_vec(), TropVector(lambda.to_vec())));
        return;
    }
    for s in 0..n {
        if used[s] {
            continue;
        }
        sigma[i] = s;
        lambda[i] = if i == 0 {
            TropScalar::zero()
        } else {
            a[(i, 0)] - a[(s, sigma[0])]
        };
        let consistent = (0..=i).all(|q| {
            a[(s, sigma[q])] == a[(i, q)] + lambda[q] - lambda[i]
                && a[(sigma[q], s)] == a[(q, i)] + lambda[i] - lambda[q]
        });
        if consistent {
            used[s] = true;
            extend(a, i + 1, sigma, lambda, used, out);
            used[s] = false;
        }
    }
}

/// Splits a unit with uniform cycle means as `μ ⊗ G₀`, `G₀` of eigenvalue 0.
pub fn decompose_unit(g: &MonomialUnit) -> Result<(TropScalar, MonomialUnit)> {
    let means = g.cycle_means();
    let mu = means[0];
    if means.iter().any(|m| *m != mu) {
        return Err(Error::NonUniformCycleMeans);
    }
    Ok((mu, g.scale(-mu)))
}

/// `H_E ≅ ℝ × Σ` for a full-rank idempotent `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDecomposition {
    pub e: TropMatrix,
    /// The finite group Σ of eigenvalue-0 units commuting with `E`, identity
    /// first, ordered lexicographically by permutation.
    pub sigma_group: Vec<MonomialUnit>,
    pub order: usize,
    /// Images of Σ in the symmetric group (zero-based).
    pub permutation_images: Vec<Vec<usize>>,
    /// Human-readable isomorphism type, e.g. `"R"` or `"R x S2"`.
    pub iso: String,
    /// Names of the runtime checks that were performed.
    pub checks: Vec<&'static str>,
}

impl GroupDecomposition {
    /// Looks up the member of Σ with the given permutation.
    pub fn member(&self, sigma: &[usize]) -> Option<&MonomialUnit> {
        self.permutation_images
            .binary_search_by(|p| p.as_slice().cmp(sigma))
            .ok()
            .map(|i| &self.sigma_group[i])
    }

    /// A generating set of Σ, chosen greedily in the enumeration order: a
    /// member is kept when it lies outside the subgroup generated so far.
    pub fn generators(&self) -> Vec<&MonomialUnit> {
        let mut gens: Vec<&MonomialUnit> = Vec::new();
        let mut reached: BTreeSet<&[usize]> = BTreeSet::new();
        reached.insert(self.sigma_group[0].sigma());
        for g in &self.sigma_group {
            if reached.contains(g.sigma()) {
                continue;
            }
            gens.push(g);
            // Σ is finite, so closing under right multiplication by the
            // generators yields the generated subgroup.
            let mut frontier: Vec<&[usize]> = reached.iter().copied().collect();
            while let Some(p) = frontier.pop() {
                for h in &gens {
                    let image: Vec<usize> = p.iter().map(|&k| h.sigma()[k]).collect();
                    if let Some(m) = self.member(&image) {
                        if reached.insert(m.sigma()) {
                            frontier.push(m.sigma());
                        }
                    }
                }
            }
        }
        gens
    }
}

/// Enumerates Σ for a full-rank idempotent, with the default size cap.
pub fn sigma_group(e: &TropMatrix) -> Result<GroupDecomposition> {
    sigma_group_capped(e, DEFAULT_MAX_N)
}

/// Enumerates Σ, refusing matrices larger than `max_n`.
pub fn sigma_group_capped(e: &TropMatrix, max_n: usize) -> Result<GroupDecomposition> {
    let profile = idempotent_profile(e)?;
    let n = e.rows();
    if profile.rank != n {
        return Err(Error::NotFullRank { rank: profile.rank, n });
    }
    let mut checks = vec!["idempotent", "full_rank"];
    let units = commuting_units(e, max_n)?;
    let mut members = Vec::with_capacity(units.len());
    for g in &units {
        let (_, g0) = decompose_unit(g).map_err(|_| Error::Invariant("commuting unit with distinct cycle means"))?;
        if !g0.commutes_with(e)? {
            return Err(Error::Invariant("enumerated unit does not commute"));
        }
        members.push(g0);
    }
    checks.extend(["uniform_cycle_means", "commutes_with_e"]);
    if !members.first().is_some_and(MonomialUnit::is_identity) {
        return Err(Error::Invariant("identity is not the first member of sigma"));
    }

    let index: BTreeMap<&[usize], &MonomialUnit> = members.iter().map(|g| (g.sigma(), g)).collect();
    if index.len() != members.len() {
        return Err(Error::Invariant("repeated permutation image in sigma"));
    }
    checks.push("injective_permutation_image");
    let contains = |g: &MonomialUnit| index.get(g.sigma()).is_some_and(|h| *h == g);
    for g in &members {
        if !contains(&g.inverse()) {
            return Err(Error::Invariant("sigma not closed under inverse"));
        }
    }
    checks.push("closed_under_inverse");
    if members.len() <= CLOSURE_CHECK_LIMIT {
        for g in &members {
            for h in &members {
                let gh = g.mul(h)?;
                if !gh.eigenvalue().is_zero() || !contains(&gh) {
                    return Err(Error::Invariant("sigma not closed under product"));
                }
            }
        }
        checks.push("closed_under_product");
    }

    let permutation_images: Vec<Vec<usize>> = members.iter().map(|g| g.sigma().to_vec()).collect();
    let iso = iso_summary(&permutation_images);
    Ok(GroupDecomposition {
        e: e.clone(),
        order: members.len(),
        sigma_group: members,
        permutation_images,
        iso,
        checks,
    })
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn permutation_order(sigma: &[usize]) -> usize {
    permutation_cycles(sigma)
        .iter()
        .fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
}

/// Names the group generated by a set of permutations where the name follows
/// from the order alone: trivial, order 2, full symmetric on the moved points,
/// or cyclic. Anything else is reported by order only.
fn iso_summary(perms: &[Vec<usize>]) -> String {
    let order = perms.len();
    if order == 1 {
        return String::from("R");
    }
    if order == 2 {
        return String::from("R x S2");
    }
    let moved = perms
        .first()
        .map_or(0, |p| (0..p.len()).filter(|&i| perms.iter().any(|q| q[i] != i)).count());
    if factorial(moved) == order {
        return format!("R x S{moved}");
    }
    if perms.iter().any(|p| permutation_order(p) == order) {
        return format!("R x C{order}");
    }
    format!("R x Sigma(order {order})")
}
