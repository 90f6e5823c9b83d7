//! Brute-force set partitions of `{0, …, n−1}` and the cyclic translation
//! action on partitions of `Z/qZ`.
//!
//! Partitions are stored as restricted growth strings: `rgs[i]` is the block
//! label of element `i`, labels are assigned in order of first appearance, so
//! each partition has exactly one representation.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::modular::PrimePower;

pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Labels are stored as bytes; ground sets are bounded accordingly.
pub const MAX_GROUND_SET: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    /// Canonical partition from arbitrary block labels: elements sharing a
    /// label share a block.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        if labels.len() > MAX_GROUND_SET {
            return Err(Error::CapExceeded {
                size: labels.len(),
                cap: MAX_GROUND_SET,
            });
        }
        let mut seen: HashMap<L, u8> = HashMap::new();
        let rgs = labels
            .iter()
            .map(|l| {
                let next = seen.len() as u8;
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Ok(SetPartition { rgs })
    }

    /// Accepts `rgs` only if it is already a restricted growth string.
    pub fn from_rgs(rgs: Vec<u8>) -> Option<Self> {
        if rgs.is_empty() || rgs[0] != 0 || rgs.len() > MAX_GROUND_SET {
            return None;
        }
        let mut max = 0u8;
        for &l in &rgs[1..] {
            if l > max + 1 {
                return None;
            }
            max = max.max(l);
        }
        Some(SetPartition { rgs })
    }

    pub fn singletons(n: usize) -> Result<Self> {
        let labels: Vec<usize> = (0..n).collect();
        Self::from_labels(&labels)
    }

    pub fn whole(n: usize) -> Result<Self> {
        Self::from_labels(&vec![0u8; n])
    }

    /// Ground set size.
    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    /// Blocks in label order, each listing its elements in increasing order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (x, &l) in self.rgs.iter().enumerate() {
            blocks[l as usize].push(x);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &l in &self.rgs {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// Whether every block has the same size.
    pub fn is_uniform(&self) -> bool {
        let sizes = self.block_sizes();
        sizes.windows(2).all(|w| w[0] == w[1])
    }

    /// Advances to the lexicographic successor; returns `false` after the
    /// last partition (all singletons), leaving `self` unchanged.
    fn advance(&mut self, prefix_max: &mut [u8]) -> bool {
        let n = self.rgs.len();
        // prefix_max[i] = max(rgs[0..i]) for i >= 1.
        for i in (1..n).rev() {
            if self.rgs[i] <= prefix_max[i] {
                self.rgs[i] += 1;
                let m = prefix_max[i].max(self.rgs[i]);
                self.rgs[i + 1..].fill(0);
                prefix_max[i + 1..].fill(m);
                return true;
            }
        }
        false
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// Lexicographic stream of every restricted growth string of length `n`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<SetPartition>,
    prefix_max: Vec<u8>,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let current = self.current.as_mut()?;
        let out = current.clone();
        if !current.advance(&mut self.prefix_max) {
            self.current = None;
        }
        Some(out)
    }
}

/// The map `x ↦ x + shift (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranslationAction {
    modulus: usize,
    shift: usize,
}

impl TranslationAction {
    pub fn new(modulus: usize, shift: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if shift >= modulus {
            return Err(Error::ShiftOutOfRange { shift, modulus });
        }
        Ok(TranslationAction { modulus, shift })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Canonical form of the image partition.
    pub fn apply(&self, part: &SetPartition) -> Result<SetPartition> {
        if part.len() != self.modulus {
            return Err(Error::ModulusMismatch {
                size: part.len(),
                modulus: self.modulus,
            });
        }
        Ok(self.apply_unchecked(part))
    }

    fn apply_unchecked(&self, part: &SetPartition) -> SetPartition {
        let q = self.modulus;
        // Element z of the image sits in the block that held z − shift.
        let mut map = [u8::MAX; MAX_GROUND_SET + 1];
        let mut next = 0u8;
        let rgs = (0..q)
            .map(|z| {
                let old = part.rgs[(z + q - self.shift) % q] as usize;
                if map[old] == u8::MAX {
                    map[old] = next;
                    next += 1;
                }
                map[old]
            })
            .collect();
        SetPartition { rgs }
    }
}

/// One orbit of the translation action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    /// Lexicographically least member.
    pub representative: SetPartition,
    pub size: usize,
}

impl OrbitSummary {
    pub fn is_fixed(&self) -> bool {
        self.size == 1
    }
}

/// Enumeration entry point with a configurable size cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionOracle {
    cap: usize,
}

impl Default for PartitionOracle {
    fn default() -> Self {
        PartitionOracle {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl PartitionOracle {
    pub fn new(cap: usize) -> Self {
        PartitionOracle {
            cap: cap.clamp(1, MAX_GROUND_SET),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn admit(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if n > self.cap {
            return Err(Error::CapExceeded {
                size: n,
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn enumerate(&self, n: usize) -> Result<Partitions> {
        self.admit(n)?;
        Ok(Partitions {
            current: Some(SetPartition { rgs: vec![0; n] }),
            prefix_max: vec![0; n],
        })
    }

    /// Entry `k − 1` is the number of partitions with exactly `k` blocks.
    pub fn count_by_blocks(&self, n: usize) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; n];
        for part in self.enumerate(n)? {
            counts[part.block_count() - 1] += 1;
        }
        Ok(counts)
    }

    /// All orbits of `Z/qZ` acting on partitions of `Z/qZ`, in order of
    /// their least member.
    pub fn orbit_decomposition(&self, modulus: usize) -> Result<Vec<OrbitSummary>> {
        let all: Vec<SetPartition> = self.enumerate(modulus)?.collect();
        let index: HashMap<&SetPartition, usize> =
            all.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let generator = TranslationAction::new(modulus, 1 % modulus)?;
        let mut visited = vec![false; all.len()];
        let mut orbits = Vec::new();
        for start in 0..all.len() {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut size = 1;
            let mut image = generator.apply_unchecked(&all[start]);
            while image != all[start] {
                visited[index[&image]] = true;
                size += 1;
                image = generator.apply_unchecked(&image);
            }
            orbits.push(OrbitSummary {
                representative: all[start].clone(),
                size,
            });
        }
        Ok(orbits)
    }

    /// Partitions of `Z/p^mZ` fixed by translation.
    ///
    /// Only the generator `x ↦ x + 1` is tested; invariance under it gives
    /// invariance under every shift.
    pub fn fixed_partitions(&self, pp: PrimePower) -> Result<Vec<SetPartition>> {
        let q = pp.index();
        self.admit(q)?;
        let generator = TranslationAction::new(q, 1 % q)?;
        Ok(self
            .enumerate(q)?
            .filter(|p| generator.apply_unchecked(p) == *p)
            .collect())
    }
}

/// Whether `part` is unchanged by every translation of its ground set.
pub fn is_fixed_by_all_shifts(part: &SetPartition) -> bool {
    let q = part.len();
    (0..q).all(|y| {
        TranslationAction {
            modulus: q,
            shift: y,
        }
        .apply_unchecked(part)
            == *part
    })
}

/// Partition of `Z/p^mZ` into residue classes modulo `p^{m−level}`, giving
/// `p^{m−level}` blocks of size `p^level`.
pub fn congruence_class_partition(pp: PrimePower, level: u32) -> Result<SetPartition> {
    let classes = pp.power(
        pp.m()
            .checked_sub(level)
            .ok_or(Error::LevelOutOfRange { level, max: pp.m() })?,
    )? as usize;
    let labels: Vec<usize> = (0..pp.index()).map(|x| x % classes).collect();
    SetPartition::from_labels(&labels)
}
