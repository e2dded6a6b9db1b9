//! Block weights and affine weight bookkeeping.
//!
//! Weights live in the span of the fundamental weights `Λ_0, …, Λ_{e-1}` and
//! the null root `δ`. The simple roots are
//! `α_i = -Λ_{i-1} + 2Λ_i - Λ_{i+1} + [i = 0] δ` (indices mod `e`), and the
//! invariant form is fixed by
//!
//! ```text
//! (Λ_i, Λ_j) = min(i, j) - i j / e,   (δ, Λ_i) = 1,   (δ, δ) = 0.
//! ```
//!
//! With these values `(Λ_i, α_j) = [i = j]`, `(δ, α_i) = 0`, `(Λ_0, Λ_0) = 0`
//! and `(α_i, α_j)` is the affine Cartan matrix; the unit tests check each of
//! these identities.

use std::collections::HashMap;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{
    m_stat, residue, residue_content, Modulus, Multicharge, Multipartition, Node,
};
use crate::uglov::normalize;

pub type Rational = Ratio<i64>;

/// `Σ_i λ_i Λ_i + d δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeightVector {
    pub e: Modulus,
    pub lambda_coeffs: Vec<i64>,
    pub delta_coeff: Rational,
}

impl AffineWeightVector {
    pub fn zero(e: Modulus) -> Self {
        AffineWeightVector {
            e,
            lambda_coeffs: vec![0; e.as_usize()],
            delta_coeff: Rational::zero(),
        }
    }

    /// `Λ_i`, with `i` read modulo `e`.
    pub fn fundamental(i: i64, e: Modulus) -> Self {
        let mut w = Self::zero(e);
        w.lambda_coeffs[e.reduce(i)] = 1;
        w
    }

    pub fn null_root(e: Modulus) -> Self {
        let mut w = Self::zero(e);
        w.delta_coeff = Rational::from_integer(1);
        w
    }

    /// `α_i`, with `i` read modulo `e`.
    pub fn simple_root(i: i64, e: Modulus) -> Self {
        let mut w = Self::zero(e);
        w.lambda_coeffs[e.reduce(i - 1)] -= 1;
        w.lambda_coeffs[e.reduce(i)] += 2;
        w.lambda_coeffs[e.reduce(i + 1)] -= 1;
        if e.reduce(i) == 0 {
            w.delta_coeff = Rational::from_integer(1);
        }
        w
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_e(other)?;
        Ok(AffineWeightVector {
            e: self.e,
            lambda_coeffs: self
                .lambda_coeffs
                .iter()
                .zip(&other.lambda_coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            delta_coeff: self.delta_coeff + other.delta_coeff,
        })
    }

    pub fn scale(&self, k: i64) -> Self {
        AffineWeightVector {
            e: self.e,
            lambda_coeffs: self.lambda_coeffs.iter().map(|a| a * k).collect(),
            delta_coeff: self.delta_coeff * k,
        }
    }

    fn check_same_e(&self, other: &Self) -> Result<()> {
        if self.e == other.e {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.e.get(),
                right: other.e.get(),
            })
        }
    }
}

fn gram(i: usize, j: usize, e: Modulus) -> Rational {
    let (i, j) = (i as i64, j as i64);
    Rational::from_integer(i.min(j)) - Rational::new(i * j, e.as_i64())
}

/// The invariant symmetric bilinear form.
pub fn pairing(u: &AffineWeightVector, v: &AffineWeightVector) -> Result<Rational> {
    u.check_same_e(v)?;
    let e = u.e;
    let mut total = Rational::zero();
    for (i, &a) in u.lambda_coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in v.lambda_coeffs.iter().enumerate() {
            if b != 0 {
                total += gram(i, j, e) * (a * b);
            }
        }
    }
    let sum_u: i64 = u.lambda_coeffs.iter().sum();
    let sum_v: i64 = v.lambda_coeffs.iter().sum();
    total += u.delta_coeff * sum_v + v.delta_coeff * sum_u;
    Ok(total)
}

/// `Δ_s = ½ Σ_i ((s_i²/e - s_i) - (s_i'²/e - s_i'))` with `s_i'` the residue
/// of `s_i` in `0..e`. Always an integer.
pub fn delta_shift(s: &Multicharge, e: Modulus) -> i64 {
    let e_val = e.as_i64();
    let twice: Rational = s
        .entries()
        .iter()
        .map(|&x| {
            let r = e.reduce(x) as i64;
            Rational::new(x * x - r * r, e_val) - Rational::from_integer(x - r)
        })
        .sum();
    let half = twice / 2;
    assert!(half.is_integer(), "Δ_s must be an integer, got {half}");
    half.to_integer()
}

/// `α(mp) = -Δ_s δ + Σ_i Λ_{s_i} - Σ_i c_i α_i`.
pub fn alpha_weight(
    mp: &Multipartition,
    s: &Multicharge,
    e: Modulus,
) -> Result<AffineWeightVector> {
    let content = residue_content(mp, s, e)?;
    let mut w = AffineWeightVector::zero(e);
    w.delta_coeff = Rational::from_integer(-delta_shift(s, e));
    for &x in s.entries() {
        w.lambda_coeffs[e.reduce(x)] += 1;
    }
    for (i, &c) in content.counts.iter().enumerate() {
        w = w.add(&AffineWeightVector::simple_root(i as i64, e).scale(-(c as i64)))?;
    }
    Ok(w)
}

/// `‖mp‖ = (α(mp), α(mp)) / 2`.
pub fn norm(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<Rational> {
    let w = alpha_weight(mp, s, e)?;
    Ok(pairing(&w, &w)? / 2)
}

/// `Σ_i c_{s_i} - ½ Σ_{i mod e} (c_i - c_{i-1})²`.
pub fn block_weight(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<u64> {
    let content = residue_content(mp, s, e)?;
    let linear: i64 = s.entries().iter().map(|&x| content.get(x) as i64).sum();
    let squares: i64 = (0..e.as_i64())
        .map(|i| {
            let d = content.get(i) as i64 - content.get(i - 1) as i64;
            d * d
        })
        .sum();
    assert!(squares % 2 == 0, "odd sum of squared residue gaps");
    let p = linear - squares / 2;
    assert!(p >= 0, "negative block weight {p} for {mp} at {s}, e = {e}");
    Ok(p as u64)
}

/// Block weight by peeling nodes: `p(λ) = p(μ) + M_i(μ) - 1` when `λ` is `μ`
/// plus an `i`-node, and `p(∅) = 0`. Peels the first removable node in
/// `(row, col, component)` order.
pub fn block_weight_recursive(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<u64> {
    WeightMemo::new(e).weight(mp, s)
}

/// Like [`block_weight_recursive`] but lets `choose` pick which removable node
/// to peel at each step (it receives the candidates and returns an index).
pub fn block_weight_recursive_with(
    mp: &Multipartition,
    s: &Multicharge,
    e: Modulus,
    mut choose: impl FnMut(&[Node]) -> usize,
) -> Result<u64> {
    s.check_level(mp)?;
    let mut current = mp.clone();
    let mut total: i64 = 0;
    while !current.is_empty() {
        let candidates = current.removable_nodes();
        let node = candidates[choose(&candidates) % candidates.len()];
        let smaller = current.with_node_removed(node)?;
        let i = residue(node, s, e)?;
        total += m_stat(&smaller, s, e, i)? - 1;
        current = smaller;
    }
    Ok(u64::try_from(total).expect("recursion yields a nonnegative weight"))
}

/// Memo table for the recursive weight, keyed by multipartition and charge
/// residues.
#[derive(Debug)]
pub struct WeightMemo {
    e: Modulus,
    table: HashMap<(Multipartition, Vec<usize>), u64>,
}

impl WeightMemo {
    pub fn new(e: Modulus) -> Self {
        WeightMemo {
            e,
            table: HashMap::new(),
        }
    }

    pub fn weight(&mut self, mp: &Multipartition, s: &Multicharge) -> Result<u64> {
        s.check_level(mp)?;
        let e = self.e;
        let residues: Vec<usize> = s.entries().iter().map(|&x| e.reduce(x)).collect();
        // Iterative descent: collect the peel chain, then fill it bottom-up.
        let mut chain = Vec::new();
        let mut current = mp.clone();
        let mut base = 0;
        loop {
            if let Some(&w) = self.table.get(&(current.clone(), residues.clone())) {
                base = w;
                break;
            }
            if current.is_empty() {
                break;
            }
            let node = *current
                .removable_nodes()
                .iter()
                .min()
                .expect("nonempty multipartition has a removable node");
            let smaller = current.with_node_removed(node)?;
            let step = m_stat(&smaller, s, e, residue(node, s, e)?)? - 1;
            chain.push((current, step));
            current = smaller;
        }
        self.table.insert((current, residues.clone()), base);
        let mut acc = base as i64;
        for (m, step) in chain.into_iter().rev() {
            acc += step;
            let w = u64::try_from(acc).expect("recursion yields a nonnegative weight");
            self.table.insert((m, residues.clone()), w);
        }
        Ok(acc as u64)
    }
}

/// Block weight computed after normalizing the charge; equal to
/// [`block_weight`] for every input.
pub fn block_weight_normalized(mp: &Multipartition, s: &Multicharge, e: Modulus) -> Result<u64> {
    s.check_level(mp)?;
    let norm = normalize(s, e);
    block_weight(&norm.permute(mp), &norm.tilde, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn mp(parts: Vec<Vec<u32>>) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    fn ch(v: &[i64]) -> Multicharge {
        Multicharge::new(v.to_vec())
    }

    fn e(k: i64) -> Modulus {
        Modulus::new(k).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn block_weight_examples() {
        assert_eq!(
            block_weight(&mp(vec![vec![3], vec![1]]), &ch(&[0, 1]), e(4)).unwrap(),
            1
        );
        assert_eq!(
            block_weight(&mp(vec![vec![4], vec![]]), &ch(&[0, 1]), e(4)).unwrap(),
            2
        );
        assert_eq!(
            block_weight(&Multipartition::empty(3).unwrap(), &ch(&[0, 5, 2]), e(3)).unwrap(),
            0
        );
        let lam = Multipartition::from(Partition::new(vec![5, 4, 2, 1, 1]).unwrap());
        assert_eq!(block_weight(&lam, &ch(&[0]), e(3)).unwrap(), 3);
        assert!(block_weight(&lam, &ch(&[0, 1]), e(3)).is_err());
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(
            block_weight_recursive(&mp(vec![vec![3], vec![1]]), &ch(&[0, 1]), e(4)).unwrap(),
            1
        );
        assert_eq!(
            block_weight_recursive(&Multipartition::empty(2).unwrap(), &ch(&[0, 1]), e(4)).unwrap(),
            0
        );
        let m = mp(vec![vec![3, 2], vec![1, 1], vec![2, 2, 1]]);
        let s = ch(&[0, 1, 3]);
        assert_eq!(
            block_weight_recursive(&m, &s, e(4)).unwrap(),
            block_weight(&m, &s, e(4)).unwrap()
        );
        let last = block_weight_recursive_with(&m, &s, e(4), |c| c.len() - 1).unwrap();
        assert_eq!(last, block_weight(&m, &s, e(4)).unwrap());
    }

    #[test]
    fn memo_reuses_entries() {
        let mut memo = WeightMemo::new(e(3));
        let s = ch(&[0, 2]);
        let big = mp(vec![vec![4, 2], vec![3, 1, 1]]);
        let w = memo.weight(&big, &s).unwrap();
        let before = memo.table.len();
        let small = mp(vec![vec![4, 2], vec![3]]);
        assert_eq!(
            memo.weight(&small, &s).unwrap(),
            block_weight(&small, &s, e(3)).unwrap()
        );
        assert_eq!(w, block_weight(&big, &s, e(3)).unwrap());
        assert!(memo.table.len() >= before);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_shift(&ch(&[0, 1, 3]), e(4)), 0);
        assert_eq!(delta_shift(&ch(&[10, 0]), e(3)), 12);
        assert_eq!(delta_shift(&ch(&[-1, 2]), e(4)), 1);
    }

    #[test]
    fn gram_identities() {
        for k in 2..=5 {
            let e = e(k);
            for i in 0..k {
                for j in 0..k {
                    let lam = AffineWeightVector::fundamental(i, e);
                    let alpha = AffineWeightVector::simple_root(j, e);
                    assert_eq!(pairing(&lam, &alpha).unwrap(), r((i == j) as i64));
                    // (α_i, α_j) is the affine Cartan matrix.
                    let ai = AffineWeightVector::simple_root(i, e);
                    let expected = if i == j {
                        2
                    } else if k == 2 {
                        -2
                    } else if (i - j).rem_euclid(k) == 1 || (j - i).rem_euclid(k) == 1 {
                        -1
                    } else {
                        0
                    };
                    assert_eq!(pairing(&ai, &alpha).unwrap(), r(expected));
                }
                let delta = AffineWeightVector::null_root(e);
                assert_eq!(
                    pairing(&delta, &AffineWeightVector::fundamental(i, e)).unwrap(),
                    r(1)
                );
                assert_eq!(
                    pairing(&delta, &AffineWeightVector::simple_root(i, e)).unwrap(),
                    r(0)
                );
            }
            let delta = AffineWeightVector::null_root(e);
            assert_eq!(pairing(&delta, &delta).unwrap(), r(0));
            let l0 = AffineWeightVector::fundamental(0, e);
            assert_eq!(pairing(&l0, &l0).unwrap(), r(0));
            // δ is the sum of the simple roots.
            let sum = (0..k).fold(AffineWeightVector::zero(e), |acc, i| {
                acc.add(&AffineWeightVector::simple_root(i, e)).unwrap()
            });
            assert_eq!(sum, delta);
        }
    }

    #[test]
    fn pairing_rejects_mixed_e() {
        let a = AffineWeightVector::fundamental(0, e(3));
        let b = AffineWeightVector::fundamental(0, e(4));
        assert!(pairing(&a, &b).is_err());
    }

    #[test]
    fn alpha_examples() {
        let w = alpha_weight(&Multipartition::empty(1).unwrap(), &ch(&[0]), e(2)).unwrap();
        assert_eq!(w, AffineWeightVector::fundamental(0, e(2)));
        let w = alpha_weight(&mp(vec![vec![4, 1, 1], vec![1, 1]]), &ch(&[0, 3]), e(4)).unwrap();
        assert_eq!(w.lambda_coeffs, vec![3, 2, -2, -1]);
        let w = alpha_weight(&mp(vec![vec![5, 2, 2, 1, 1, 1]]), &ch(&[3]), e(4)).unwrap();
        assert_eq!(w.lambda_coeffs, vec![2, 2, -2, -1]);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(
            norm(&Multipartition::empty(1).unwrap(), &ch(&[0]), e(5)).unwrap(),
            r(0)
        );
        let lam = Multipartition::from(Partition::new(vec![5, 4, 2, 1, 1]).unwrap());
        assert_eq!(norm(&lam, &ch(&[0]), e(3)).unwrap(), r(-3));
        let s = ch(&[0, 1]);
        let empty = norm(&Multipartition::empty(2).unwrap(), &s, e(4)).unwrap();
        assert_eq!(
            norm(&mp(vec![vec![3], vec![1]]), &s, e(4)).unwrap(),
            empty - 1
        );
    }

    #[test]
    fn empty_norm_closed_form() {
        // ‖∅‖ = -l Δ_s + (Λ_s, Λ_s) / 2
        for s in [vec![0, 1], vec![7, -3], vec![2, 2, 9], vec![-5]] {
            let s = ch(&s);
            let e = e(4);
            let lam_s = s
                .entries()
                .iter()
                .fold(AffineWeightVector::zero(e), |acc, &x| {
                    acc.add(&AffineWeightVector::fundamental(x, e)).unwrap()
                });
            let expected = Rational::from_integer(-(s.level() as i64) * delta_shift(&s, e))
                + pairing(&lam_s, &lam_s).unwrap() / 2;
            let got = norm(&Multipartition::empty(s.level()).unwrap(), &s, e).unwrap();
            assert_eq!(got, expected);
        }
    }
}
