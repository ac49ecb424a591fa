use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// An equivalence relation on `0..n`, stored as canonical block ids:
/// blocks are numbered in order of their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    block_of: Vec<usize>,
    num_blocks: usize,
}

impl Partition {
    /// Canonicalises an arbitrary labelling: `i` and `j` share a block iff
    /// `labels[i] == labels[j]`.
    pub fn from_labels<K: Ord + Clone>(labels: &[K]) -> Partition {
        let mut ids: BTreeMap<K, usize> = BTreeMap::new();
        let mut order: Vec<usize> = Vec::with_capacity(labels.len());
        let mut next = 0;
        for label in labels {
            let id = *ids.entry(label.clone()).or_insert_with(|| {
                next += 1;
                next - 1
            });
            order.push(id);
        }
        Partition { block_of: order, num_blocks: next }
    }

    /// `Δ`: every element alone.
    pub fn identity(n: usize) -> Partition {
        Partition { block_of: (0..n).collect(), num_blocks: n }
    }

    /// `∇`: one block (empty partition for `n = 0`).
    pub fn universal(n: usize) -> Partition {
        Partition { block_of: vec![0; n], num_blocks: usize::from(n > 0) }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Option<Partition> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= n || labels[i] != usize::MAX {
                    return None;
                }
                labels[i] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return None;
        }
        Some(Partition::from_labels(&labels))
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn block(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block_of
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (i, &b) in self.block_of.iter().enumerate() {
            out[b].push(i);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks == self.block_of.len()
    }

    pub fn is_universal(&self) -> bool {
        self.num_blocks <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.num_blocks];
        for (i, &b) in self.block_of.iter().enumerate() {
            let o = other.block_of[i];
            if image[b] == usize::MAX {
                image[b] = o;
            } else if image[b] != o {
                return false;
            }
        }
        true
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let labels: Vec<(usize, usize)> =
            self.block_of.iter().zip(&other.block_of).map(|(&a, &b)| (a, b)).collect();
        Partition::from_labels(&labels)
    }

    /// Whether `set` is a union of blocks.
    pub fn saturates(&self, set: &[bool]) -> bool {
        let mut seen: Vec<Option<bool>> = vec![None; self.num_blocks];
        for (i, &b) in self.block_of.iter().enumerate() {
            match seen[b] {
                None => seen[b] = Some(set[i]),
                Some(v) if v != set[i] => return false,
                _ => {}
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_ids() {
        let p = Partition::from_labels(&['b', 'a', 'b', 'c']);
        assert_eq!(p.block_ids(), &[0, 1, 0, 2]);
        assert_eq!(p.num_blocks(), 3);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1], vec![3]]);
        assert_eq!(p.to_string(), "{0,2} {1} {3}");
    }

    #[test]
    fn lattice_ops() {
        let id = Partition::identity(3);
        let all = Partition::universal(3);
        let p = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(id.refines(&p) && p.refines(&all) && !all.refines(&p));
        assert_eq!(p.meet(&all), p);
        assert_eq!(p.meet(&id), id);
        assert!(p.saturates(&[true, true, false]));
        assert!(!p.saturates(&[true, false, false]));
        assert!(Partition::from_blocks(3, &[vec![0, 1]]).is_none());
        assert!(Partition::from_blocks(2, &[vec![0, 1], vec![1]]).is_none());
    }
}
