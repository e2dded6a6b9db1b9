//! Charge normalization, core predicates and the Uglov map.
//!
//! The Uglov map interleaves the `l` bead sets of an `(e, s)`-abacus into a
//! single bead set: bead `k = q e + r` on runner `c` goes to position
//! `(l - c) e + q e l + r`. Every integer has exactly one such expression, so
//! the construction is inverted runner by runner.

use std::collections::HashSet;

use crate::abacus::{Abacus, MultiAbacus};
use crate::error::{Error, Result};
use crate::partitions::{Modulus, Multicharge, Multipartition, Partition};

/// The stable sort of a multicharge's residues.
///
/// `sigma[i]` is the (0-based) component placed in slot `i`; `tilde` lists the
/// residues `s_{σ(i)} mod e` in weakly increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedCharge {
    pub sigma: Vec<usize>,
    pub tilde: Multicharge,
}

impl NormalizedCharge {
    /// `(λ^{σ(1)}, …, λ^{σ(l)})`.
    pub fn permute(&self, mp: &Multipartition) -> Multipartition {
        mp.permute(&self.sigma)
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `sigma` written as a permutation of `1..=l`.
    pub fn sigma_one_based(&self) -> Vec<usize> {
        self.sigma.iter().map(|i| i + 1).collect()
    }
}

pub fn normalize(s: &Multicharge, e: Modulus) -> NormalizedCharge {
    let residues: Vec<i64> = s.entries().iter().map(|&x| e.reduce(x) as i64).collect();
    let mut sigma: Vec<usize> = (0..s.level()).collect();
    // `sort_by_key` is stable, so ties keep increasing component order.
    sigma.sort_by_key(|&i| residues[i]);
    let tilde = Multicharge::new(sigma.iter().map(|&i| residues[i]).collect());
    NormalizedCharge { sigma, tilde }
}

/// `0 <= s_j - s_i <= e` for all `i < j`.
pub fn in_a_bar(s: &Multicharge, e: Modulus) -> bool {
    pairwise_gaps(s).all(|d| (0..=e.as_i64()).contains(&d))
}

/// `0 <= s_j - s_i < e` for all `i < j`.
pub fn in_a(s: &Multicharge, e: Modulus) -> bool {
    pairwise_gaps(s).all(|d| (0..e.as_i64()).contains(&d))
}

fn pairwise_gaps(s: &Multicharge) -> impl Iterator<Item = i64> + '_ {
    let v = s.entries();
    (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| v[j] - v[i]))
}

/// The `(e, s)`-abacus of `mp` is complete.
pub fn is_reduced_core(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<bool> {
    Ok(MultiAbacus::from_multipartition(mp, s)?.is_complete(e))
}

/// `mp^σ` is a reduced core for the normalized charge.
pub fn is_core(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<bool> {
    s.check_level(mp)?;
    let norm = normalize(s, e);
    is_reduced_core(&norm.permute(mp), &norm.tilde, e)
}

/// Same predicate as [`is_core`], phrased directly on beta-numbers: each
/// beta-number of `λ^{σ(c)}` (charge `s'_{σ(c)}`) must be a beta-number of
/// `λ^{σ(c+1)}`, and each beta-number of `λ^{σ(l)}` must be a beta-number of
/// `λ^{σ(1)}` shifted by `e`.
pub fn is_core_beta(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<bool> {
    s.check_level(mp)?;
    let norm = normalize(s, e);
    let comps = norm.permute(mp);
    let charges = norm.tilde.entries();
    let l = comps.level();
    for c in 0..l {
        let (next, shift) = if c + 1 < l {
            (c + 1, 0)
        } else {
            (0, e.as_i64())
        };
        let lower = (&comps.components()[c], charges[c]);
        let upper = (&comps.components()[next], charges[next] + shift);
        if !betas_contained(lower, upper) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn betas_contained((lam, t): (&Partition, i64), (mu, u): (&Partition, i64)) -> bool {
    let beta = |p: &Partition, charge: i64, j: usize| i64::from(p.row(j)) - j as i64 + charge;
    let upper: HashSet<i64> = (1..=mu.len()).map(|i| beta(mu, u, i)).collect();
    let tail_top = u - mu.len() as i64;
    // Past this index the lower beta-numbers sit inside the packed tail of `mu`.
    let last = lam.len().max((t - tail_top).max(0) as usize) + 1;
    (1..=last).all(|j| {
        let b = beta(lam, t, j);
        b < tail_top || upper.contains(&b)
    })
}

/// The Uglov map. Returns the interleaved partition and its charge, which is
/// always `Σ s_i`.
pub fn tau(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<(Partition, i64)> {
    let ma = MultiAbacus::from_multipartition(mp, s)?;
    let l = ma.level() as i64;
    let e = e.as_i64();
    let mut sets: Vec<_> = ma.runners().iter().map(Abacus::bead_set).collect();
    let q_floor = sets
        .iter()
        .map(|set| set.floor.div_euclid(e))
        .min()
        .expect("level >= 1");
    let mut beads = Vec::new();
    for (c, set) in sets.iter_mut().enumerate() {
        set.lower_floor(q_floor * e);
        let offset = (l - 1 - c as i64) * e;
        beads.extend(set.beads.iter().map(|&k| {
            let (q, r) = (k.div_euclid(e), k.rem_euclid(e));
            offset + q * e * l + r
        }));
    }
    Ok(Abacus::from_beads(q_floor * e * l, beads).to_partition())
}

/// Inverse of [`tau`]: splits the bead set of `L_charge(p)` back into `l`
/// runners.
pub fn tau_inverse(
    p: &Partition,
    charge: i64,
    l: usize,
    e: Modulus,
) -> Result<(Multipartition, Multicharge)> {
    if l == 0 {
        return Err(Error::EmptyLevel);
    }
    let e = e.as_i64();
    let width = e * l as i64;
    let mut set = Abacus::from_partition(p, charge).bead_set();
    let q_floor = set.floor.div_euclid(width);
    set.lower_floor(q_floor * width);
    let mut runner_beads = vec![Vec::new(); l];
    for &m in &set.beads {
        let (q, rem) = (m.div_euclid(width), m.rem_euclid(width));
        let c = l - 1 - (rem / e) as usize;
        runner_beads[c].push(q * e + rem % e);
    }
    let ma = MultiAbacus::new(
        runner_beads
            .into_iter()
            .map(|beads| Abacus::from_beads(q_floor * e, beads))
            .collect(),
    );
    Ok(ma.to_multipartition())
}
