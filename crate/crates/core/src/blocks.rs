//! Elementary bead moves, cores of multipartitions and blocks.
//!
//! An elementary move slides one bead of an `l`-abacus either from runner `i`
//! to the same position on runner `i + 1`, or from runner `l` at `x` to runner
//! 1 at `x - e`. Under the Uglov map both kinds lower one bead by `e`, that is
//! they strip one rim `e`-hook from the image. Repeating moves until none is
//! legal yields the core of the multipartition.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{Abacus, BeadSet, MultiAbacus};
use crate::error::{Error, Result};
use crate::partitions::{
    e_core_by_hooks, enumerate_multipartitions, residue_content, Modulus, Multicharge,
    Multipartition, Partition, ResidueVector,
};
use crate::uglov::{in_a, in_a_bar, normalize, tau, tau_inverse};

/// Runners are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ElementaryMove {
    /// Bead at `position` on `runner` moves to `runner + 1`.
    Up { runner: usize, position: i64 },
    /// Bead at `position` on the last runner moves to `position - e` on runner 1.
    Wrap { position: i64 },
}

impl fmt::Display for ElementaryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryMove::Up { runner, position } => write!(f, "UP({runner},{position})"),
            ElementaryMove::Wrap { position } => write!(f, "WRAP({position})"),
        }
    }
}

/// Source and target `(runner, position)` of a move, runners 0-based.
fn endpoints(m: ElementaryMove, l: usize, e: i64) -> Option<((usize, i64), (usize, i64))> {
    match m {
        ElementaryMove::Up { runner, position } if (1..l).contains(&runner) => {
            Some(((runner - 1, position), (runner, position)))
        }
        ElementaryMove::Wrap { position } => Some(((l - 1, position), (0, position - e))),
        ElementaryMove::Up { .. } => None,
    }
}

fn top_bead(set: &BeadSet) -> i64 {
    set.beads.last().copied().unwrap_or(set.floor - 1)
}

fn legal_on(sets: &[BeadSet], e: i64) -> Vec<ElementaryMove> {
    let l = sets.len();
    let mut out = Vec::new();
    for i in 0..l.saturating_sub(1) {
        let (lo, hi) = (&sets[i], &sets[i + 1]);
        for x in hi.floor..=top_bead(lo) {
            if lo.contains(x) && !hi.contains(x) {
                out.push(ElementaryMove::Up {
                    runner: i + 1,
                    position: x,
                });
            }
        }
    }
    let (first, last) = (&sets[0], &sets[l - 1]);
    for x in first.floor + e..=top_bead(last) {
        if last.contains(x) && !first.contains(x - e) {
            out.push(ElementaryMove::Wrap { position: x });
        }
    }
    out
}

fn apply_on(sets: &mut [BeadSet], m: ElementaryMove, e: i64) -> Result<()> {
    let ((src, x), (dst, y)) =
        endpoints(m, sets.len(), e).ok_or_else(|| Error::IllegalMove(m.to_string()))?;
    if !sets[src].contains(x) || sets[dst].contains(y) {
        return Err(Error::IllegalMove(m.to_string()));
    }
    sets[src].remove(x);
    sets[dst].insert(y);
    Ok(())
}

fn bead_sets(ma: &MultiAbacus) -> Vec<BeadSet> {
    ma.runners().iter().map(Abacus::bead_set).collect()
}

fn from_bead_sets(sets: &[BeadSet]) -> MultiAbacus {
    MultiAbacus::new(sets.iter().map(BeadSet::to_abacus).collect())
}

/// Every legal move: `Up` moves by runner then position, then `Wrap` moves by
/// position.
pub fn legal_moves(ma: &MultiAbacus, e: Modulus) -> Vec<ElementaryMove> {
    legal_on(&bead_sets(ma), e.as_i64())
}

pub fn apply_move(ma: &MultiAbacus, m: ElementaryMove, e: Modulus) -> Result<MultiAbacus> {
    let mut sets = bead_sets(ma);
    apply_on(&mut sets, m, e.as_i64())?;
    Ok(from_bead_sets(&sets))
}

/// Moves the bead back from the target of `m` to its source.
pub fn undo_move(ma: &MultiAbacus, m: ElementaryMove, e: Modulus) -> Result<MultiAbacus> {
    let mut sets = bead_sets(ma);
    let e = e.as_i64();
    let ((src, x), (dst, y)) =
        endpoints(m, sets.len(), e).ok_or_else(|| Error::IllegalMove(m.to_string()))?;
    if !sets[dst].contains(y) || sets[src].contains(x) {
        return Err(Error::IllegalMove(format!("inverse of {m}")));
    }
    sets[dst].remove(y);
    sets[src].insert(x);
    Ok(from_bead_sets(&sets))
}

/// `l` moves that carry the bead at `position` on `runner` (1-based) down to
/// `position - e` on the same runner and leave every other bead in place.
///
/// Along the Uglov image the slots between the two ends form a chain of
/// `l + 1` positions spaced by `e`; beads along the chain are pushed one slot
/// at a time, starting each round from the first gap.
pub fn hook_removal_moves(
    ma: &MultiAbacus,
    runner: usize,
    position: i64,
    e: Modulus,
) -> Result<Vec<ElementaryMove>> {
    let l = ma.level();
    if !(1..=l).contains(&runner) {
        return Err(Error::ComponentOutOfRange {
            component: runner,
            level: l,
        });
    }
    let e = e.as_i64();
    let sets = bead_sets(ma);
    let i = runner - 1;
    if !sets[i].contains(position) || sets[i].contains(position - e) {
        return Err(Error::IllegalMove(format!(
            "no bead at {position} with a gap at {} on runner {runner}",
            position - e
        )));
    }
    let slot = |j: usize| {
        if i + j < l {
            (i + j, position)
        } else {
            (i + j - l, position - e)
        }
    };
    let step = |j: usize| {
        let (r, x) = slot(j);
        if r + 1 < l {
            ElementaryMove::Up {
                runner: r + 1,
                position: x,
            }
        } else {
            ElementaryMove::Wrap { position: x }
        }
    };
    let filled: Vec<bool> = (0..=l)
        .map(|j| {
            let (r, x) = slot(j);
            sets[r].contains(x)
        })
        .collect();
    let mut moves = Vec::with_capacity(l);
    let mut cur = 0;
    while cur < l {
        let gap = (cur + 1..=l)
            .find(|&j| !filled[j])
            .expect("the last slot of the chain is empty");
        moves.extend((cur..gap).rev().map(step));
        cur = gap;
    }
    Ok(moves)
}

/// The core of a multipartition: the reduced core `core` with charge
/// `charge` reached from the normalized input, the number of moves needed,
/// and the 0-based normalizing permutation of the input charge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreDescriptor {
    pub core: Multipartition,
    pub charge: Multicharge,
    pub weight: u64,
    pub sigma: Vec<usize>,
}

impl CoreDescriptor {
    pub fn sigma_one_based(&self) -> Vec<usize> {
        self.sigma.iter().map(|i| i + 1).collect()
    }
}

/// Core by repeated elementary moves, always taking the first legal move.
pub fn core_by_ops(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<CoreDescriptor> {
    core_by_ops_with(mp, s, e, |_| 0)
}

/// Core by repeated elementary moves; `choose` picks an index into the list
/// of legal moves at each step.
pub fn core_by_ops_with(
    mp: &Multipartition,
    s: &Multicharge,
    e: Modulus,
    mut choose: impl FnMut(&[ElementaryMove]) -> usize,
) -> Result<CoreDescriptor> {
    s.check_level(mp)?;
    let norm = normalize(s, e);
    let ma = MultiAbacus::from_multipartition(&norm.permute(mp), &norm.tilde)?;
    let mut sets = bead_sets(&ma);
    let mut weight = 0;
    loop {
        let moves = legal_on(&sets, e.as_i64());
        if moves.is_empty() {
            break;
        }
        let m = moves[choose(&moves) % moves.len()];
        apply_on(&mut sets, m, e.as_i64())?;
        weight += 1;
    }
    let (core, charge) = from_bead_sets(&sets).to_multipartition();
    Ok(CoreDescriptor {
        core,
        charge,
        weight,
        sigma: norm.sigma,
    })
}

/// Core through the Uglov map: take the `e`-core of the image and pull it
/// back.
pub fn core_by_tau(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<CoreDescriptor> {
    s.check_level(mp)?;
    let norm = normalize(s, e);
    let (image, charge) = tau(&norm.permute(mp), &norm.tilde, e)?;
    let (core, weight) = Abacus::new(image, charge).slide_to_core(e);
    let (core, charge) = tau_inverse(core.shape(), core.charge(), mp.level(), e)?;
    Ok(CoreDescriptor {
        core,
        charge,
        weight,
        sigma: norm.sigma,
    })
}

/// Componentwise `e`-core.
pub fn multicore(mp: &Multipartition, e: Modulus) -> Multipartition {
    Multipartition::new(
        mp.components()
            .iter()
            .map(|p| e_core_by_hooks(p, e).0)
            .collect(),
    )
    .expect("same level as the input")
}

/// Equal rank and equal residue content.
pub fn same_block(
    a: &Multipartition,
    b: &Multipartition,
    s: &Multicharge,
    e: Modulus,
) -> Result<bool> {
    Ok(a.rank() == b.rank() && residue_content(a, s, e)? == residue_content(b, s, e)?)
}

/// Identifies a block across parameter sets: the residue content together
/// with `e` and the normalized charge residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockKey {
    pub charge_residues: Vec<i64>,
    pub content: ResidueVector,
}

impl BlockKey {
    pub fn e(&self) -> Modulus {
        self.content.e
    }
}

pub fn block_key(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<BlockKey> {
    Ok(BlockKey {
        charge_residues: normalize(s, e).tilde.into_entries(),
        content: residue_content(mp, s, e)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub key: BlockKey,
    pub members: Vec<Multipartition>,
    pub core: CoreDescriptor,
    pub weight: u64,
}

/// Splits all `l`-multipartitions of `n` into blocks. Blocks appear in order
/// of their first member in enumeration order, and members keep that order.
/// Panics if two members of one block have different cores.
pub fn decompose_blocks(n: u32, l: usize, e: Modulus, s: &Multicharge) -> Result<Vec<Block>> {
    if s.level() != l {
        return Err(Error::LevelMismatch {
            components: l,
            charge: s.level(),
        });
    }
    if l == 0 {
        return Err(Error::EmptyLevel);
    }
    let all: Vec<Multipartition> = enumerate_multipartitions(n, l).collect();
    let annotated: Vec<(BlockKey, CoreDescriptor)> = all
        .par_iter()
        .map(|mp| Ok((block_key(mp, s, e)?, core_by_tau(mp, s, e)?)))
        .collect::<Result<_>>()?;
    let mut index: HashMap<BlockKey, usize> = HashMap::new();
    let mut blocks: Vec<Block> = Vec::new();
    for (mp, (key, core)) in all.into_iter().zip(annotated) {
        match index.get(&key) {
            Some(&b) => {
                assert_eq!(
                    blocks[b].core, core,
                    "block {key:?} has members with different cores"
                );
                blocks[b].members.push(mp);
            }
            None => {
                index.insert(key.clone(), blocks.len());
                blocks.push(Block {
                    key,
                    members: vec![mp],
                    weight: core.weight,
                    core,
                });
            }
        }
    }
    Ok(blocks)
}

/// How a weight-one multipartition with charge `v` reduces to its core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// One move from runner `i` to runner `i + 1` (1-based).
    Adjacent(usize),
    Wrap,
}

/// A family of weight-one multipartitions with charge `v`: the charge of
/// their cores, how many share one core, and how much larger their rank is
/// than the core's.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightOneFamily {
    pub family: Family,
    pub core_charge: Multicharge,
    pub size: u64,
    pub rank_increase: u64,
}

/// The families for a normalized charge `v`, restricted to those whose core
/// charge is itself normalized.
///
/// For `l = 1` the single family consists of the `e` ways of adding one rim
/// `e`-hook to a core.
pub fn weight_one_families(v: &Multicharge, e: Modulus) -> Result<Vec<WeightOneFamily>> {
    if v.level() == 0 {
        return Err(Error::EmptyLevel);
    }
    if !in_a(v, e) {
        return Err(Error::NotNormalized {
            charge: v.entries().to_vec(),
            e: e.get(),
        });
    }
    let ev = e.as_i64();
    let w = v.entries();
    let l = w.len();
    if l == 1 {
        return Ok(vec![WeightOneFamily {
            family: Family::Wrap,
            core_charge: v.clone(),
            size: ev as u64,
            rank_increase: ev as u64,
        }]);
    }
    let mut out = Vec::new();
    for i in 0..l - 1 {
        let mut t = w.to_vec();
        t[i] -= 1;
        t[i + 1] += 1;
        let gap = w[i + 1] - w[i];
        out.push(WeightOneFamily {
            family: Family::Adjacent(i + 1),
            core_charge: Multicharge::new(t),
            size: (gap + 2) as u64,
            rank_increase: (gap + 1) as u64,
        });
    }
    let mut t = w.to_vec();
    t[0] += 1;
    t[l - 1] -= 1;
    let gap = w[0] - w[l - 1] + ev;
    out.push(WeightOneFamily {
        family: Family::Wrap,
        core_charge: Multicharge::new(t),
        size: (gap + 2) as u64,
        rank_increase: (gap + 1) as u64,
    });
    out.retain(|f| in_a_bar(&f.core_charge, e));
    Ok(out)
}

/// Weight-one prediction above a given core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightOnePrediction {
    pub family: Family,
    pub size: u64,
    pub rank: u64,
}

/// The families for charge `v` whose members reduce to `core`, with their
/// predicted block size and rank.
pub fn weight_one_structure(
    core: &CoreDescriptor,
    v: &Multicharge,
    e: Modulus,
) -> Result<Vec<WeightOnePrediction>> {
    Ok(weight_one_families(v, e)?
        .into_iter()
        .filter(|f| f.core_charge == core.charge)
        .map(|f| WeightOnePrediction {
            family: f.family,
            size: f.size,
            rank: core.core.rank() + f.rank_increase,
        })
        .collect())
}

/// Rank after one move from a multipartition of rank `n` whose abacus has
/// charges `s` before the move.
pub fn rank_after_move(n: u64, s: &Multicharge, m: ElementaryMove, e: Modulus) -> i64 {
    let s = s.entries();
    let n = n as i64;
    match m {
        ElementaryMove::Up { runner, .. } => n - s[runner] + s[runner - 1] - 1,
        ElementaryMove::Wrap { .. } => n - (s[0] - s[s.len() - 1] + e.as_i64() + 1),
    }
}

/// The partition with charge obtained by the Uglov map from the abacus.
pub fn tau_of_abacus(ma: &MultiAbacus, e: Modulus) -> Result<(Partition, i64)> {
    let (mp, s) = ma.to_multipartition();
    tau(&mp, &s, e)
}
