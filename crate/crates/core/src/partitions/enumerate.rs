//! Exhaustive enumeration of partitions and multipartitions.
//!
//! Order: multipartitions are listed by their vector of component ranks in
//! ascending lexicographic order, then by the components themselves, each
//! compared lexicographically as a part sequence. For a single rank that
//! gives `[1,1,1,1] < [2,1,1] < [2,2] < [3,1] < [4]`.

use std::sync::Arc;

use super::{Multipartition, Partition};

/// All partitions of `n` in ascending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out.reverse();
    out
}

// Emits partitions of `remaining` with parts at most `max` in descending
// lexicographic order.
fn descend(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Streams every `l`-partition of `n` exactly once.
///
/// The iterator is `Clone`; clones advance independently.
pub fn enumerate_multipartitions(n: u32, l: usize) -> Multipartitions {
    assert!(l >= 1, "level must be positive");
    let tables: Arc<Vec<Vec<Partition>>> = Arc::new((0..=n).map(partitions_of).collect());
    let mut ranks = vec![0u32; l];
    ranks[l - 1] = n;
    Multipartitions {
        tables,
        ranks,
        indices: vec![0; l],
        done: false,
    }
}

#[derive(Clone, Debug)]
pub struct Multipartitions {
    tables: Arc<Vec<Vec<Partition>>>,
    ranks: Vec<u32>,
    indices: Vec<usize>,
    done: bool,
}

impl Multipartitions {
    fn current(&self) -> Multipartition {
        let comps = self
            .ranks
            .iter()
            .zip(&self.indices)
            .map(|(&r, &i)| self.tables[r as usize][i].clone())
            .collect();
        Multipartition::new(comps).expect("level is positive")
    }

    fn advance(&mut self) {
        // Odometer over the components, last one fastest.
        for c in (0..self.indices.len()).rev() {
            self.indices[c] += 1;
            if self.indices[c] < self.tables[self.ranks[c] as usize].len() {
                return;
            }
            self.indices[c] = 0;
        }
        if !next_composition(&mut self.ranks) {
            self.done = true;
        }
    }
}

// Next composition (zeros allowed) in ascending lexicographic order.
fn next_composition(ranks: &mut [u32]) -> bool {
    let l = ranks.len();
    let mut tail: u32 = 0;
    for i in (0..l.saturating_sub(1)).rev() {
        tail += ranks[i + 1];
        if tail > 0 {
            ranks[i] += 1;
            for r in ranks[i + 1..].iter_mut() {
                *r = 0;
            }
            ranks[l - 1] = tail - 1;
            return true;
        }
    }
    false
}

impl Iterator for Multipartitions {
    type Item = Multipartition;

    fn next(&mut self) -> Option<Multipartition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}
