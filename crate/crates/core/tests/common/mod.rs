//! Brute-force reference counts, independent of the library's recurrences
//! and of its restricted-growth-string enumerator.

/// Number of `k`-element subsets of an `n`-set, by scanning bitmasks.
pub fn subsets_of_size(n: u32, k: u32) -> u64 {
    (0u64..1 << n).filter(|m| m.count_ones() == k).count() as u64
}

/// `counts[k]` = partitions of an `n`-set into `k` blocks.
///
/// Builds blocks directly: the least remaining element opens a block and
/// any subset of the other remaining elements joins it.
pub fn partitions_by_blocks(n: u32) -> Vec<u64> {
    fn go(remaining: u32, blocks: usize, counts: &mut Vec<u64>) {
        if remaining == 0 {
            counts[blocks] += 1;
            return;
        }
        let low = remaining & remaining.wrapping_neg();
        let rest = remaining & !low;
        // Walk every submask of `rest`, including the empty one.
        let mut sub = rest;
        loop {
            go(rest & !sub, blocks + 1, counts);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut counts = vec![0; n as usize + 1];
    go((1u32 << n) - 1, 0, &mut counts);
    counts
}

pub fn partitions_total(n: u32) -> u64 {
    partitions_by_blocks(n).iter().sum()
}
