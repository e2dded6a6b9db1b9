//! Partitions, multipartitions, multicharges and residue bookkeeping.
//!
//! Nodes are addressed the way Young diagrams are usually drawn: rows and
//! columns start at 1, and so does the component index of a multipartition.

mod enumerate;
mod hooks;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{enumerate_multipartitions, partitions_of, Multipartitions};
pub use hooks::{e_core_by_hooks, remove_rim_hook, rim_hook_rows};

/// The integer `e >= 2` that residues are taken modulo.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u32")]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(e: i64) -> Result<Self> {
        if (2..=i64::from(u32::MAX)).contains(&e) {
            Ok(Modulus(e as u32))
        } else {
            Err(Error::InvalidModulus(e))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn as_i64(self) -> i64 {
        i64::from(self.0)
    }

    pub(crate) fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// `k mod e`, normalized into `0..e`.
    pub fn reduce(self, k: i64) -> usize {
        k.rem_euclid(self.as_i64()) as usize
    }
}

impl TryFrom<i64> for Modulus {
    type Error = Error;

    fn try_from(e: i64) -> Result<Self> {
        Modulus::new(e)
    }
}

impl From<Modulus> for u32 {
    fn from(e: Modulus) -> u32 {
        e.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction so that equal partitions have
/// equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts already known to be valid.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Length of row `row` (1-based); zero past the last part.
    pub fn row(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|col| self.0.iter().take_while(|&&p| p >= col).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Hook length of the cell at `(row, col)`, both 1-based. The cell must lie
    /// in the diagram.
    pub fn hook_length(&self, row: usize, col: u32) -> u32 {
        debug_assert!(col >= 1 && col <= self.row(row));
        let arm = self.row(row) - col;
        let leg = self.0[row..].iter().take_while(|&&p| p >= col).count() as u32;
        arm + leg + 1
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("partition: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// An `l`-tuple of partitions, `l >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyLevel);
        }
        Ok(Multipartition(components))
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(components: Vec<Vec<u32>>) -> Result<Self> {
        let comps = components
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps)
    }

    pub fn empty(level: usize) -> Result<Self> {
        Multipartition::new(vec![Partition::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn rank(&self) -> u64 {
        self.0.iter().map(Partition::rank).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }

    /// `(λ^{σ(1)}, …, λ^{σ(l)})` for a permutation given as 0-based indices.
    pub fn permute(&self, sigma: &[usize]) -> Multipartition {
        debug_assert_eq!(sigma.len(), self.level());
        Multipartition(sigma.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Whether `node` lies in the Young diagram.
    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1
            && node.col >= 1
            && node.component >= 1
            && node.component <= self.level()
            && node.col <= self.0[node.component - 1].row(node.row)
    }

    /// All nodes, component by component, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0.iter().enumerate().flat_map(|(c, p)| {
            p.parts()
                .iter()
                .enumerate()
                .flat_map(move |(a, &len)| (1..=len).map(move |b| Node::new(a + 1, b, c + 1)))
        })
    }

    /// Nodes whose removal leaves a multipartition.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.0.iter().enumerate() {
            for (a, &len) in p.parts().iter().enumerate() {
                if p.row(a + 2) < len {
                    out.push(Node::new(a + 1, len, c + 1));
                }
            }
        }
        out
    }

    /// Positions outside the diagram whose addition yields a multipartition.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.0.iter().enumerate() {
            for a in 1..=p.len() + 1 {
                let len = p.row(a);
                if a == 1 || p.row(a - 1) > len {
                    out.push(Node::new(a, len + 1, c + 1));
                }
            }
        }
        out
    }

    pub fn with_node_added(&self, node: Node) -> Result<Multipartition> {
        let p = self.component_checked(node.component)?;
        let mut parts = p.parts().to_vec();
        if node.row == parts.len() + 1 {
            parts.push(0);
        }
        match parts.get_mut(node.row.wrapping_sub(1)) {
            Some(len) if *len + 1 == node.col => *len += 1,
            _ => return Err(Error::InvalidPartition(parts)),
        }
        self.replace(node.component, Partition::new(parts)?)
    }

    pub fn with_node_removed(&self, node: Node) -> Result<Multipartition> {
        let p = self.component_checked(node.component)?;
        let mut parts = p.parts().to_vec();
        match parts.get_mut(node.row.wrapping_sub(1)) {
            Some(len) if *len == node.col => *len -= 1,
            _ => return Err(Error::InvalidPartition(parts)),
        }
        self.replace(node.component, Partition::new(parts)?)
    }

    /// Replaces component `component` (1-based).
    pub fn replace(&self, component: usize, p: Partition) -> Result<Multipartition> {
        self.component_checked(component)?;
        let mut comps = self.0.clone();
        comps[component - 1] = p;
        Ok(Multipartition(comps))
    }

    fn component_checked(&self, component: usize) -> Result<&Partition> {
        component
            .checked_sub(1)
            .and_then(|c| self.0.get(c))
            .ok_or(Error::ComponentOutOfRange {
                component,
                level: self.level(),
            })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("multipartition: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multipartition serializes")
    }
}

impl TryFrom<Vec<Partition>> for Multipartition {
    type Error = Error;

    fn try_from(components: Vec<Partition>) -> Result<Self> {
        Multipartition::new(components)
    }
}

impl From<Multipartition> for Vec<Partition> {
    fn from(mp: Multipartition) -> Vec<Partition> {
        mp.0
    }
}

impl From<Partition> for Multipartition {
    fn from(p: Partition) -> Self {
        Multipartition(vec![p])
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Multipartition::from_json(s)
    }
}

/// A multicharge `s = (s_1, …, s_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multicharge(Vec<i64>);

impl Multicharge {
    pub fn new(entries: Vec<i64>) -> Self {
        Multicharge(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Adds `k` to every entry.
    pub fn shifted(&self, k: i64) -> Multicharge {
        Multicharge(self.0.iter().map(|s| s + k).collect())
    }

    pub fn permute(&self, sigma: &[usize]) -> Multicharge {
        Multicharge(sigma.iter().map(|&i| self.0[i]).collect())
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub(crate) fn check_level(&self, mp: &Multipartition) -> Result<()> {
        if self.level() == mp.level() {
            Ok(())
        } else {
            Err(Error::LevelMismatch {
                components: mp.level(),
                charge: self.level(),
            })
        }
    }
}

impl From<Vec<i64>> for Multicharge {
    fn from(entries: Vec<i64>) -> Self {
        Multicharge(entries)
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string(&self.0).expect("charge serializes")
        )
    }
}

/// Parses a comma separated list such as `0,-1,3`. A JSON array is accepted too.
impl FromStr for Multicharge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.trim().is_empty() {
            return Err(Error::Parse("multicharge: no entries".into()));
        }
        trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("multicharge entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Multicharge)
    }
}

/// A box `(row, col, component)` of a Young diagram, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: u32,
    pub component: usize,
}

impl Node {
    pub fn new(row: usize, col: u32, component: usize) -> Self {
        Node {
            row,
            col,
            component,
        }
    }

    /// Content `b - a` of the node.
    pub fn content(&self) -> i64 {
        i64::from(self.col) - self.row as i64
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.component)
    }
}

/// Node counts per residue class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueVector {
    pub e: Modulus,
    pub counts: Vec<u64>,
}

impl ResidueVector {
    pub fn zero(e: Modulus) -> Self {
        ResidueVector {
            e,
            counts: vec![0; e.as_usize()],
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `c_i` with the index read modulo `e`.
    pub fn get(&self, i: i64) -> u64 {
        self.counts[self.e.reduce(i)]
    }
}

/// Residue `b - a + s_c mod e` of a node.
pub fn residue(node: Node, s: &Multicharge, e: Modulus) -> Result<usize> {
    let shift = node
        .component
        .checked_sub(1)
        .and_then(|c| s.entries().get(c))
        .ok_or(Error::ComponentOutOfRange {
            component: node.component,
            level: s.level(),
        })?;
    Ok(e.reduce(node.content() + shift))
}

/// Residue content `(c_0, …, c_{e-1})` of a multipartition.
pub fn residue_content(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<ResidueVector> {
    s.check_level(mp)?;
    let mut out = ResidueVector::zero(e);
    for (p, &charge) in mp.components().iter().zip(s.entries()) {
        for (a, &len) in p.parts().iter().enumerate() {
            // The row starting at content -a covers `len` consecutive residues.
            let start = charge - a as i64;
            let full = u64::from(len) / u64::from(e.get());
            let rest = len % e.get();
            for c in out.counts.iter_mut() {
                *c += full;
            }
            for k in 0..i64::from(rest) {
                out.counts[e.reduce(start + k)] += 1;
            }
        }
    }
    Ok(out)
}

/// Addable and removable nodes of residue `i`.
pub fn addable_removable(
    mp: &Multipartition,
    s: &Multicharge,
    e: Modulus,
    i: usize,
) -> Result<(Vec<Node>, Vec<Node>)> {
    s.check_level(mp)?;
    if i >= e.as_usize() {
        return Err(Error::ResidueOutOfRange {
            residue: i,
            e: e.get(),
        });
    }
    let of_residue = |nodes: Vec<Node>| -> Vec<Node> {
        nodes
            .into_iter()
            .filter(|&n| residue(n, s, e).ok() == Some(i))
            .collect()
    };
    Ok((
        of_residue(mp.addable_nodes()),
        of_residue(mp.removable_nodes()),
    ))
}

/// `M_i`: addable minus removable nodes of residue `i`.
pub fn m_stat(mp: &Multipartition, s: &Multicharge, e: Modulus, i: usize) -> Result<i64> {
    let (add, rem) = addable_removable(mp, s, e, i)?;
    Ok(add.len() as i64 - rem.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: Vec<Vec<u32>>) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    fn e(k: i64) -> Modulus {
        Modulus::new(k).unwrap()
    }

    #[test]
    fn modulus_rejects_small_values() {
        assert_eq!(Modulus::new(1), Err(Error::InvalidModulus(1)));
        assert_eq!(Modulus::new(0), Err(Error::InvalidModulus(0)));
        assert!(Modulus::new(2).is_ok());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap().parts(), &[3, 1]);
        assert!(Partition::new(vec![3, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap().rank(), 0);
    }

    #[test]
    fn conjugate_and_hooks() {
        let p = Partition::new(vec![5, 4, 2, 1, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[5, 3, 2, 2, 1]);
        assert_eq!(p.hook_length(1, 1), 9);
        assert_eq!(p.hook_length(1, 4), 3);
        assert_eq!(p.hook_length(5, 1), 1);
    }

    #[test]
    fn residues_of_worked_example() {
        let s = Multicharge::new(vec![0, 1]);
        assert_eq!(residue(Node::new(1, 4, 1), &s, e(3)).unwrap(), 0);
        assert_eq!(residue(Node::new(1, 1, 2), &s, e(3)).unwrap(), 1);
        assert_eq!(
            residue(Node::new(1, 1, 1), &Multicharge::new(vec![0]), e(7)).unwrap(),
            0
        );
        assert!(residue(Node::new(1, 1, 3), &s, e(3)).is_err());
    }

    #[test]
    fn residue_content_examples() {
        let s = Multicharge::new(vec![0, 1]);
        let rv = residue_content(&mp(vec![vec![4], vec![2, 1]]), &s, e(3)).unwrap();
        assert_eq!(rv.counts, vec![3, 2, 2]);
        let rv = residue_content(&mp(vec![vec![3], vec![1]]), &s, e(4)).unwrap();
        assert_eq!(rv.counts, vec![1, 2, 1, 0]);
        let rv = residue_content(&Multipartition::empty(2).unwrap(), &s, e(5)).unwrap();
        assert_eq!(rv.counts, vec![0; 5]);
        let err = residue_content(&mp(vec![vec![1]]), &s, e(3));
        assert_eq!(
            err,
            Err(Error::LevelMismatch {
                components: 1,
                charge: 2
            })
        );
    }

    #[test]
    fn residue_content_matches_node_count() {
        let m = mp(vec![vec![9, 7, 7, 2], vec![5, 5, 1]]);
        let s = Multicharge::new(vec![-3, 11]);
        for k in 2..7 {
            let rv = residue_content(&m, &s, e(k)).unwrap();
            let mut naive = vec![0u64; k as usize];
            for n in m.nodes() {
                naive[residue(n, &s, e(k)).unwrap()] += 1;
            }
            assert_eq!(rv.counts, naive);
        }
    }

    #[test]
    fn addable_removable_examples() {
        let m = mp(vec![vec![4, 1, 1], vec![1, 1]]);
        let s = Multicharge::new(vec![0, 3]);
        let (add, rem) = addable_removable(&m, &s, e(4), 0).unwrap();
        assert_eq!((add.len(), rem.len()), (3, 0));

        let (add, rem) = addable_removable(
            &Multipartition::empty(1).unwrap(),
            &Multicharge::new(vec![0]),
            e(3),
            0,
        )
        .unwrap();
        assert_eq!((add.len(), rem.len()), (1, 0));

        let m = mp(vec![vec![4], vec![2, 1]]);
        let (_, rem) = addable_removable(&m, &Multicharge::new(vec![0, 1]), e(3), 0).unwrap();
        assert_eq!(rem, vec![Node::new(1, 4, 1), Node::new(2, 1, 2)]);

        assert!(addable_removable(&m, &Multicharge::new(vec![0, 1]), e(3), 3).is_err());
    }

    #[test]
    fn m_stat_examples() {
        let m = mp(vec![vec![4, 1, 1], vec![1, 1]]);
        let s = Multicharge::new(vec![0, 3]);
        let got: Vec<i64> = (0..4).map(|i| m_stat(&m, &s, e(4), i).unwrap()).collect();
        assert_eq!(got, vec![3, 2, -2, -1]);

        let m = mp(vec![vec![5, 2, 2, 1, 1, 1]]);
        let s = Multicharge::new(vec![3]);
        let got: Vec<i64> = (0..4).map(|i| m_stat(&m, &s, e(4), i).unwrap()).collect();
        assert_eq!(got, vec![2, 2, -2, -1]);

        let m = Multipartition::empty(1).unwrap();
        let s = Multicharge::new(vec![0]);
        let got: Vec<i64> = (0..3).map(|i| m_stat(&m, &s, e(3), i).unwrap()).collect();
        assert_eq!(got, vec![1, 0, 0]);
    }

    #[test]
    fn node_edits() {
        let m = mp(vec![vec![2], vec![]]);
        let added = m.with_node_added(Node::new(1, 1, 2)).unwrap();
        assert_eq!(added, mp(vec![vec![2], vec![1]]));
        assert!(m.with_node_added(Node::new(2, 2, 1)).is_err());
        assert_eq!(added.with_node_removed(Node::new(1, 1, 2)).unwrap(), m);
        assert!(m.with_node_removed(Node::new(1, 1, 1)).is_err());
        assert!(m.with_node_added(Node::new(1, 1, 3)).is_err());
    }

    #[test]
    fn json_forms() {
        assert_eq!(Multipartition::empty(2).unwrap().to_json(), "[[],[]]");
        assert_eq!(Partition::empty().to_json(), "[]");
        let m: Multipartition = "[[3],[1]]".parse().unwrap();
        assert_eq!(m, mp(vec![vec![3], vec![1]]));
        assert!(Multipartition::from_json("[]").is_err());
        assert!(Multipartition::from_json("[[1,2]]").is_err());
        let s: Multicharge = "0,-1, 3".parse().unwrap();
        assert_eq!(s.entries(), &[0, -1, 3]);
        assert!("0,x".parse::<Multicharge>().is_err());
    }

    #[test]
    fn residues_depend_on_charge_mod_e() {
        let m = mp(vec![vec![3, 3, 1], vec![4, 2], vec![1]]);
        let s = Multicharge::new(vec![0, 5, -2]);
        for k in 2..6 {
            let a = residue_content(&m, &s, e(k)).unwrap();
            let b = residue_content(&m, &s.shifted(k), e(k)).unwrap();
            assert_eq!(a, b);
        }
    }
}
