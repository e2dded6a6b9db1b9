//! Rim hook removal on Young diagrams.

use super::{Modulus, Partition};

/// Removes the rim `e`-hook whose head (its top-right node) is the last node
/// of row `start_row` (1-based). Returns `None` when no such hook exists.
pub fn remove_rim_hook(p: &Partition, e: Modulus, start_row: usize) -> Option<Partition> {
    let head_len = p.row(start_row);
    if start_row == 0 || head_len == 0 {
        return None;
    }
    let target = e.get();
    // Hook lengths strictly decrease along a row, so at most one column fits.
    let col = (1..=head_len).find(|&b| p.hook_length(start_row, b) == target)?;
    let tail_row = start_row - 1
        + p.parts()[start_row - 1..]
            .iter()
            .take_while(|&&x| x >= col)
            .count();

    let mut parts = p.parts().to_vec();
    for r in start_row..tail_row {
        parts[r - 1] = p.row(r + 1) - 1;
    }
    parts[tail_row - 1] = col - 1;
    Some(Partition::new(parts).expect("rim hook removal leaves a partition"))
}

/// Rows whose last node heads a removable rim `e`-hook.
pub fn rim_hook_rows(p: &Partition, e: Modulus) -> Vec<usize> {
    (1..=p.len())
        .filter(|&r| {
            let len = p.row(r);
            (1..=len).any(|b| p.hook_length(r, b) == e.get())
        })
        .collect()
}

/// Strips rim `e`-hooks until none is left. Returns the `e`-core and the
/// number of hooks removed (the `e`-weight).
pub fn e_core_by_hooks(p: &Partition, e: Modulus) -> (Partition, u64) {
    let mut current = p.clone();
    let mut weight = 0;
    while let Some(&row) = rim_hook_rows(&current, e).first() {
        current = remove_rim_hook(&current, e, row).expect("row admits a hook");
        weight += 1;
    }
    (current, weight)
}
