//! Oracles and fixtures shared by the integration tests. Everything here is
//! computed from first principles, not through the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use akcores::{Modulus, Multicharge, Multipartition, Partition};
use rand::Rng;

pub fn e(k: i64) -> Modulus {
    Modulus::new(k).unwrap()
}

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn mp(v: &[&[u32]]) -> Multipartition {
    Multipartition::from_parts(v.iter().map(|c| c.to_vec()).collect()).unwrap()
}

pub fn ch(v: &[i64]) -> Multicharge {
    Multicharge::new(v.to_vec())
}

/// Cells `(row, col)` (0-based) of a Young diagram.
fn cells(p: &[u32]) -> BTreeSet<(u32, u32)> {
    p.iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r as u32, c)))
        .collect()
}

/// Whether the cells form an edge-connected set with no 2x2 square.
fn is_rim_strip(strip: &BTreeSet<(u32, u32)>) -> bool {
    let Some(&start) = strip.iter().next() else {
        return false;
    };
    for &(r, c) in strip {
        if strip.contains(&(r + 1, c))
            && strip.contains(&(r, c + 1))
            && strip.contains(&(r + 1, c + 1))
        {
            return false;
        }
    }
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((r, c)) = stack.pop() {
        let mut near = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            near.push((r - 1, c));
        }
        if c > 0 {
            near.push((r, c - 1));
        }
        for q in near {
            if strip.contains(&q) && seen.insert(q) {
                stack.push(q);
            }
        }
    }
    seen.len() == strip.len()
}

/// All partitions obtained by deleting a rim `e`-hook, found by trying every
/// subdiagram with `e` fewer cells.
pub fn brute_hook_removals(p: &[u32], e: u32) -> Vec<Vec<u32>> {
    let total: u32 = p.iter().sum();
    if total < e {
        return Vec::new();
    }
    let big = cells(p);
    let mut out = Vec::new();
    let mut sub = vec![0u32; p.len()];
    fn rec(
        i: usize,
        p: &[u32],
        sub: &mut Vec<u32>,
        left: u32,
        big: &BTreeSet<(u32, u32)>,
        e: u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == p.len() {
            if left == 0 {
                let small = cells(sub);
                let strip: BTreeSet<_> = big.difference(&small).copied().collect();
                if strip.len() == e as usize && is_rim_strip(&strip) {
                    out.push(sub.iter().copied().filter(|&x| x > 0).collect());
                }
            }
            return;
        }
        let cap = if i == 0 { p[0] } else { p[i].min(sub[i - 1]) };
        for v in 0..=cap {
            let removed = p[i] - v;
            if removed > left {
                continue;
            }
            sub[i] = v;
            rec(i + 1, p, sub, left - removed, big, e, out);
        }
    }
    rec(0, p, &mut sub, e, &big, e, &mut out);
    out
}

/// `e`-core and weight by stripping rim hooks found by brute force.
pub fn brute_core(p: &[u32], e: u32) -> (Vec<u32>, u64) {
    let mut cur = p.to_vec();
    let mut w = 0;
    while let Some(next) = brute_hook_removals(&cur, e).into_iter().next() {
        cur = next;
        w += 1;
    }
    (cur, w)
}

/// Residue counts straight from the definition.
pub fn brute_content(m: &Multipartition, s: &Multicharge, e: u32) -> Vec<u64> {
    let mut c = vec![0u64; e as usize];
    for (comp, p) in m.components().iter().enumerate() {
        for (a, &len) in p.parts().iter().enumerate() {
            for b in 0..len {
                let r = (i64::from(b) - a as i64 + s.entries()[comp]).rem_euclid(i64::from(e));
                c[r as usize] += 1;
            }
        }
    }
    c
}

/// A uniformly drawn charge whose entries are weakly increasing and span at
/// most `e`.
pub fn random_charge_in_a_bar(rng: &mut impl Rng, l: usize, e: i64) -> Multicharge {
    let base = rng.gen_range(-10..=10);
    let mut offsets: Vec<i64> = (0..l).map(|_| rng.gen_range(0..=e)).collect();
    offsets.sort();
    let shift = offsets[0];
    Multicharge::new(offsets.into_iter().map(|o| base + o - shift).collect())
}

pub fn random_charge(rng: &mut impl Rng, l: usize, bound: i64) -> Multicharge {
    Multicharge::new((0..l).map(|_| rng.gen_range(-bound..=bound)).collect())
}

/// Reference block table for n = 4, e = 4, s = (0,1): multipartition, core
/// and weight.
pub fn table_one() -> Vec<(Multipartition, Multipartition, u64)> {
    let empty: &[&[u32]] = &[&[], &[]];
    let a: &[&[u32]] = &[&[], &[1, 1]];
    let b: &[&[u32]] = &[&[2], &[]];
    type Row<'a> = (&'a [&'a [u32]], &'a [&'a [u32]], u64);
    let rows: Vec<Row> = vec![
        (&[&[4], &[]], empty, 2),
        (&[&[3], &[1]], a, 1),
        (&[&[], &[4]], empty, 2),
        (&[&[3, 1], &[]], empty, 2),
        (&[&[2], &[2]], a, 1),
        (&[&[1], &[3]], empty, 2),
        (&[&[2, 2], &[]], b, 1),
        (&[&[2, 1], &[1]], &[&[2, 1], &[1]], 0),
        (&[&[2, 1, 1], &[]], empty, 2),
        (&[&[2], &[1, 1]], &[&[2], &[1, 1]], 0),
        (&[&[1, 1], &[2]], empty, 2),
        (&[&[1], &[2, 1]], &[&[1], &[2, 1]], 0),
        (&[&[1, 1], &[1, 1]], b, 1),
        (&[&[], &[3, 1]], empty, 2),
        (&[&[1, 1, 1], &[1]], empty, 2),
        (&[&[], &[2, 2]], a, 1),
        (&[&[1, 1, 1, 1], &[]], empty, 2),
        (&[&[], &[2, 1, 1]], empty, 2),
        (&[&[1], &[1, 1, 1]], b, 1),
        (&[&[], &[1, 1, 1, 1]], empty, 2),
    ];
    rows.into_iter()
        .map(|(m, c, w)| (mp(m), mp(c), w))
        .collect()
}
