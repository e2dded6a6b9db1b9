//! Charged bead sets.
//!
//! A partition `λ` with charge `s` is encoded by the bead positions
//! `{λ_j - j + s : j >= 1}`, zero tail included. The set is full far to the
//! left and empty far to the right, so an [`Abacus`] stores `(shape, charge)`
//! and materializes beads only on a finite window.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::error::Result;
use crate::partitions::{Modulus, Multicharge, Multipartition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Abacus {
    shape: Partition,
    charge: i64,
}

impl Abacus {
    pub fn new(shape: Partition, charge: i64) -> Self {
        Abacus { shape, charge }
    }

    pub fn from_partition(p: &Partition, charge: i64) -> Self {
        Abacus::new(p.clone(), charge)
    }

    /// The abacus whose beads are every position below `floor` together with
    /// `beads` (positions below `floor` in `beads` are harmless).
    pub fn from_beads(floor: i64, beads: impl IntoIterator<Item = i64>) -> Self {
        let mut set = BeadSet {
            floor,
            beads: BTreeSet::new(),
        };
        for k in beads {
            set.insert(k);
        }
        set.to_abacus()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn to_partition(&self) -> (Partition, i64) {
        (self.shape.clone(), self.charge)
    }

    /// Everything strictly below this position is a bead.
    pub fn floor(&self) -> i64 {
        self.charge - self.shape.len() as i64
    }

    pub fn contains(&self, k: i64) -> bool {
        if k < self.floor() {
            return true;
        }
        self.shape
            .parts()
            .iter()
            .enumerate()
            .any(|(j, &part)| i64::from(part) - (j as i64 + 1) + self.charge == k)
    }

    /// Occupied positions inside `window`, ascending.
    pub fn beads(&self, window: RangeInclusive<i64>) -> Vec<i64> {
        let set = self.bead_set();
        window.filter(|&k| set.contains(k)).collect()
    }

    /// Same shape, charge moved by `k`; every bead is translated by `k`.
    pub fn shift(&self, k: i64) -> Abacus {
        Abacus::new(self.shape.clone(), self.charge + k)
    }

    /// Splits the beads by residue: bead `k = q e + r` becomes bead `q` on
    /// runner `r`.
    pub fn runner_decomposition(&self, e: Modulus) -> Vec<Abacus> {
        let e = e.as_i64();
        let mut set = self.bead_set();
        set.lower_floor(set.floor.div_euclid(e) * e);
        let runner_floor = set.floor / e;
        (0..e)
            .map(|r| {
                let beads = set
                    .beads
                    .iter()
                    .filter(|k| k.rem_euclid(e) == r)
                    .map(|k| k.div_euclid(e));
                Abacus::from_beads(runner_floor, beads)
            })
            .collect()
    }

    /// Inverse of [`Abacus::runner_decomposition`].
    pub fn recompose(runners: &[Abacus], e: Modulus) -> Abacus {
        assert_eq!(runners.len(), e.as_usize(), "need one runner per residue");
        let e = e.as_i64();
        let floor = runners.iter().map(Abacus::floor).min().unwrap_or(0);
        let mut beads = Vec::new();
        for (r, runner) in runners.iter().enumerate() {
            let mut set = runner.bead_set();
            set.lower_floor(floor);
            beads.extend(set.beads.iter().map(|q| q * e + r as i64));
        }
        Abacus::from_beads(floor * e, beads)
    }

    /// Pushes every bead down its runner as far as it goes. Returns the
    /// abacus of the `e`-core (same charge) and the number of unit slides,
    /// which is the `e`-weight.
    pub fn slide_to_core(&self, e: Modulus) -> (Abacus, u64) {
        let runners = self.runner_decomposition(e);
        let weight = runners.iter().map(|r| r.shape.rank()).sum();
        let packed: Vec<Abacus> = runners
            .iter()
            .map(|r| Abacus::new(Partition::empty(), r.charge))
            .collect();
        (Abacus::recompose(&packed, e), weight)
    }

    /// Whether every bead of `self` is a bead of `other`.
    pub fn is_subset(&self, other: &Abacus) -> bool {
        let mine = self.bead_set();
        let theirs = other.bead_set();
        (theirs.floor..mine.floor).all(|k| theirs.contains(k))
            && mine.beads.iter().all(|&k| theirs.contains(k))
    }

    /// One row of `o` (bead) and `.` (gap) over `window`, with `|` drawn just
    /// left of position 0.
    pub fn render(&self, window: RangeInclusive<i64>) -> String {
        let set = self.bead_set();
        let mut out = String::new();
        for k in window {
            if k == 0 {
                out.push('|');
            }
            out.push(if set.contains(k) { 'o' } else { '.' });
        }
        out
    }

    pub(crate) fn bead_set(&self) -> BeadSet {
        let beads = self
            .shape
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &part)| i64::from(part) - (j as i64 + 1) + self.charge)
            .collect();
        BeadSet {
            floor: self.floor(),
            beads,
        }
    }
}

/// Mutable bead set: every position below `floor` is occupied, and `beads`
/// lists the occupied positions at or above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BeadSet {
    pub floor: i64,
    pub beads: BTreeSet<i64>,
}

impl BeadSet {
    pub fn contains(&self, k: i64) -> bool {
        k < self.floor || self.beads.contains(&k)
    }

    pub fn lower_floor(&mut self, floor: i64) {
        if floor < self.floor {
            self.beads.extend(floor..self.floor);
            self.floor = floor;
        }
    }

    pub fn insert(&mut self, k: i64) -> bool {
        if k < self.floor {
            return false;
        }
        self.beads.insert(k)
    }

    pub fn remove(&mut self, k: i64) -> bool {
        self.lower_floor(k);
        self.beads.remove(&k)
    }

    pub fn charge(&self) -> i64 {
        self.floor + self.beads.len() as i64
    }

    pub fn to_abacus(&self) -> Abacus {
        let charge = self.charge();
        let parts = self
            .beads
            .iter()
            .rev()
            .enumerate()
            .map(|(j, &b)| b + j as i64 + 1 - charge)
            .take_while(|&p| p > 0)
            .map(|p| p as u32)
            .collect();
        Abacus::new(Partition::from_sorted(parts), charge)
    }
}

/// An `l`-tuple of abaci; runner 1 is drawn at the bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiAbacus {
    runners: Vec<Abacus>,
}

impl MultiAbacus {
    pub fn new(runners: Vec<Abacus>) -> Self {
        assert!(!runners.is_empty(), "an l-abacus has at least one runner");
        MultiAbacus { runners }
    }

    /// The `(e, s)`-abacus `(L_{s_1}(λ^1), …, L_{s_l}(λ^l))`.
    pub fn from_multipartition(mp: &Multipartition, s: &Multicharge) -> Result<Self> {
        s.check_level(mp)?;
        Ok(MultiAbacus::new(
            mp.components()
                .iter()
                .zip(s.entries())
                .map(|(p, &c)| Abacus::from_partition(p, c))
                .collect(),
        ))
    }

    pub fn runners(&self) -> &[Abacus] {
        &self.runners
    }

    pub fn level(&self) -> usize {
        self.runners.len()
    }

    pub fn charge(&self) -> Multicharge {
        Multicharge::new(self.runners.iter().map(Abacus::charge).collect())
    }

    pub fn to_multipartition(&self) -> (Multipartition, Multicharge) {
        let mp = Multipartition::new(self.runners.iter().map(|r| r.shape.clone()).collect())
            .expect("at least one runner");
        (mp, self.charge())
    }

    /// `L_1 ⊂ L_2 ⊂ … ⊂ L_l ⊂ L_1 shifted by e`.
    pub fn is_complete(&self, e: Modulus) -> bool {
        let chain_ok = self.runners.windows(2).all(|w| w[0].is_subset(&w[1]));
        let last = self.runners.last().expect("nonempty");
        chain_ok && last.is_subset(&self.runners[0].shift(e.as_i64()))
    }

    /// Runners from top (runner `l`) to bottom (runner 1).
    pub fn render(&self, window: RangeInclusive<i64>) -> String {
        let mut out = String::new();
        for (i, runner) in self.runners.iter().enumerate().rev() {
            let _ = writeln!(out, "{:>3} {}", i + 1, runner.render(window.clone()));
        }
        out
    }
}
