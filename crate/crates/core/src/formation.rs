//! Binary formations and the prefix-match vectors that summarize them.
//!
//! A binary formation over `r` letters is a run of blocks, each either
//! ascending `0,1,…,r−1` or descending `r−1,…,0`. Up to relabeling every
//! binary formation can be written with an ascending first block, which is
//! the only form stored here.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::PermutationTable;
use crate::sequence::Sequence;

/// Longest formation representable in a [`BinaryFormation`].
pub const MAX_BLOCKS: usize = 63;

/// Orientation bits are packed most-significant-first: read as a binary
/// number, `bits` spells the blocks left to right with `1` = ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryFormation {
    r: usize,
    blocks: usize,
    bits: u64,
}

impl BinaryFormation {
    /// The formation with no blocks.
    pub fn empty(r: usize) -> Self {
        BinaryFormation {
            r,
            blocks: 0,
            bits: 0,
        }
    }

    /// The one-block formation `0,1,…,r−1`.
    pub fn root(r: usize) -> Self {
        BinaryFormation {
            r,
            blocks: 1,
            bits: 1,
        }
    }

    pub fn from_orientations(r: usize, ascending: &[bool]) -> Result<Self> {
        if ascending.len() > MAX_BLOCKS {
            return Err(Error::CapExceeded(format!(
                "{} blocks exceeds {MAX_BLOCKS}",
                ascending.len()
            )));
        }
        if ascending.first() == Some(&false) {
            return Err(Error::Parse(
                "first block of a binary formation must be ascending".into(),
            ));
        }
        let bits = ascending.iter().fold(0u64, |acc, &a| (acc << 1) | a as u64);
        Ok(BinaryFormation {
            r,
            blocks: ascending.len(),
            bits,
        })
    }

    /// Builds a formation from packed bits; the top bit of a nonempty formation must be set.
    pub fn from_bits(r: usize, blocks: usize, bits: u64) -> Result<Self> {
        if blocks > MAX_BLOCKS {
            return Err(Error::CapExceeded(format!(
                "{blocks} blocks exceeds {MAX_BLOCKS}"
            )));
        }
        let top_ok = if blocks == 0 {
            bits == 0
        } else {
            bits >> (blocks - 1) == 1
        };
        if !top_ok {
            return Err(Error::MalformedBits(format!(
                "{bits:b} for {blocks} blocks"
            )));
        }
        Ok(BinaryFormation { r, blocks, bits })
    }

    /// Parses an orientation bit string such as `"1001"`.
    pub fn from_bit_string(r: usize, s: &str) -> Result<Self> {
        let ascending = s
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(Error::MalformedBits(s.to_string())),
            })
            .collect::<Result<Vec<bool>>>()?;
        Self::from_orientations(r, &ascending)
    }

    /// Parses whitespace-separated blocks such as `"xyz zyx xyz"` or `"012 210"`.
    ///
    /// The first block fixes the letter order; every later block must repeat it
    /// or reverse it.
    pub fn from_blocks(s: &str) -> Result<Self> {
        let tokens: Vec<Vec<char>> = s.split_whitespace().map(|t| t.chars().collect()).collect();
        let Some(first) = tokens.first() else {
            return Ok(Self::empty(0));
        };
        let rev: Vec<char> = first.iter().rev().copied().collect();
        let mut ascending = Vec::with_capacity(tokens.len());
        for t in &tokens {
            if t == first {
                ascending.push(true);
            } else if *t == rev {
                ascending.push(false);
            } else {
                return Err(Error::Parse(format!(
                    "block {:?} is not {:?} or its reverse",
                    t, first
                )));
            }
        }
        Self::from_orientations(first.len(), &ascending)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_ascending(&self, block: usize) -> bool {
        assert!(block < self.blocks);
        self.bits >> (self.blocks - 1 - block) & 1 == 1
    }

    pub fn orientations(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.blocks).map(|i| self.is_ascending(i))
    }

    /// `self` followed by one more block.
    pub fn child(&self, ascending: bool) -> Result<Self> {
        if self.blocks >= MAX_BLOCKS {
            return Err(Error::CapExceeded(format!(
                "formation longer than {MAX_BLOCKS} blocks"
            )));
        }
        let mut c = *self;
        c.bits = (c.bits << 1) | ascending as u64;
        c.blocks += 1;
        if c.blocks == 1 && !ascending {
            return Err(Error::Parse(
                "first block of a binary formation must be ascending".into(),
            ));
        }
        Ok(c)
    }

    pub fn to_bit_string(&self) -> String {
        self.orientations()
            .map(|a| if a { '1' } else { '0' })
            .collect()
    }

    pub fn materialize(&self) -> Sequence {
        let r = self.r as u8;
        let mut letters = Vec::with_capacity(self.r * self.blocks);
        for asc in self.orientations() {
            if asc {
                letters.extend(0..r);
            } else {
                letters.extend((0..r).rev());
            }
        }
        Sequence::from_normalized(letters).expect("first block is ascending")
    }
}

impl fmt::Display for BinaryFormation {
    /// Space-separated blocks, e.g. `012 210 012`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = |asc: bool| -> String {
            let mut letters: Vec<String> = (0..self.r).map(|l| l.to_string()).collect();
            if !asc {
                letters.reverse();
            }
            letters.join(if self.r > 10 { "," } else { "" })
        };
        let parts: Vec<String> = self.orientations().map(block).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Every canonical binary `(r, s)`-formation, in increasing bit order.
///
/// There are `2^(s−1)` of them; `s = 0` yields the single empty formation.
pub fn all_binary_formations(r: usize, s: usize) -> impl Iterator<Item = BinaryFormation> {
    assert!(s <= MAX_BLOCKS, "at most {MAX_BLOCKS} blocks");
    let (lo, hi) = if s == 0 {
        (0u64, 1u64)
    } else {
        (1u64 << (s - 1), 1u64 << s)
    };
    (lo..hi).map(move |bits| BinaryFormation { r, blocks: s, bits })
}

/// Entry `rank` is the length of the longest prefix of `π(u)` that is a
/// literal subsequence of the formation being summarized.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchVector {
    entries: Vec<u16>,
    n: usize,
}

impl MatchVector {
    pub fn zero(n: usize, ranks: usize) -> Self {
        MatchVector {
            entries: vec![0; ranks],
            n,
        }
    }

    pub fn from_entries(entries: Vec<u16>, n: usize) -> Self {
        debug_assert!(entries.iter().all(|&e| e as usize <= n));
        MatchVector { entries, n }
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Some permutation of `u` is fully matched.
    pub fn is_complete(&self) -> bool {
        self.n == 0 || self.entries.iter().any(|&e| e as usize == self.n)
    }
}

/// Greedily extends a match of `k` letters of `π(u)` through one more block.
pub fn extend_prefix_in_block(
    u: &Sequence,
    rank: usize,
    k: usize,
    ascending: bool,
    table: &PermutationTable,
) -> Result<usize> {
    table.check_rank(rank)?;
    Ok(extend_unchecked(
        u.letters(),
        table.permutation(rank),
        table.r(),
        k,
        ascending,
    ))
}

fn extend_unchecked(u: &[u8], perm: &[u8], r: usize, k: usize, ascending: bool) -> usize {
    let mut next_pos = 0usize;
    let mut k = k;
    while k < u.len() {
        let image = perm[u[k] as usize] as usize;
        let pos = if ascending { image } else { r - 1 - image };
        if pos < next_pos {
            break;
        }
        next_pos = pos + 1;
        k += 1;
    }
    k
}

pub fn extend_vector(
    vec: &MatchVector,
    u: &Sequence,
    ascending: bool,
    table: &PermutationTable,
) -> Result<MatchVector> {
    if vec.n != u.len() || vec.entries.len() != table.len() {
        return Err(Error::AlphabetMismatch {
            expected: table.len(),
            found: vec.entries.len(),
        });
    }
    let entries = vec
        .entries
        .iter()
        .enumerate()
        .map(|(rank, &k)| {
            extend_unchecked(
                u.letters(),
                table.permutation(rank),
                table.r(),
                k as usize,
                ascending,
            ) as u16
        })
        .collect();
    Ok(MatchVector { entries, n: vec.n })
}

/// The vector of the one-block formation `0,1,…,r−1`.
pub fn initial_vector(u: &Sequence, table: &PermutationTable) -> Result<MatchVector> {
    if u.is_empty() {
        return Err(Error::EmptySequence);
    }
    if u.r() > table.r() {
        return Err(Error::AlphabetMismatch {
            expected: table.r(),
            found: u.r(),
        });
    }
    extend_vector(&MatchVector::zero(u.len(), table.len()), u, true, table)
}

/// Precomputed block extensions for one sequence: every `(rank, k, orientation)`
/// answer of [`extend_prefix_in_block`] looked up in constant time.
#[derive(Debug, Clone)]
pub struct ExtensionTable {
    n: usize,
    ranks: usize,
    // steps[(rank * (n + 1) + k) * 2 + ascending]
    steps: Vec<u16>,
}

impl ExtensionTable {
    pub fn new(u: &Sequence, table: &PermutationTable) -> Result<Self> {
        if u.r() > table.r() {
            return Err(Error::AlphabetMismatch {
                expected: table.r(),
                found: u.r(),
            });
        }
        if u.len() > u16::MAX as usize {
            return Err(Error::CapExceeded(format!(
                "sequence length {} > {}",
                u.len(),
                u16::MAX
            )));
        }
        let n = u.len();
        let r = table.r();
        let mut steps = vec![n as u16; table.len() * (n + 1) * 2];
        let mut pos = vec![0usize; n];
        for rank in 0..table.len() {
            let perm = table.permutation(rank);
            for ascending in [false, true] {
                for (p, &x) in pos.iter_mut().zip(u.letters()) {
                    let image = perm[x as usize] as usize;
                    *p = if ascending { image } else { r - 1 - image };
                }
                // A greedy match from k runs while block positions keep increasing.
                let at = |k: usize| (rank * (n + 1) + k) * 2 + ascending as usize;
                for k in (0..n).rev() {
                    steps[at(k)] = if k + 1 < n && pos[k + 1] > pos[k] {
                        steps[at(k + 1)]
                    } else {
                        k as u16 + 1
                    };
                }
            }
        }
        Ok(ExtensionTable {
            n,
            ranks: table.len(),
            steps,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ranks(&self) -> usize {
        self.ranks
    }

    #[inline]
    pub fn step(&self, rank: usize, k: u16, ascending: bool) -> u16 {
        self.steps[(rank * (self.n + 1) + k as usize) * 2 + ascending as usize]
    }

    /// Writes the child of `parent` into `out`; returns whether the child is complete.
    #[inline]
    pub fn extend_into(&self, parent: &[u16], ascending: bool, out: &mut [u16]) -> bool {
        let n = self.n as u16;
        let mut complete = false;
        for (rank, (o, &k)) in out.iter_mut().zip(parent).enumerate() {
            *o = self.step(rank, k, ascending);
            complete |= *o == n;
        }
        complete
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequence {
        Sequence::normalize(s.as_bytes()).unwrap()
    }

    fn f(r: usize, bits: &str) -> BinaryFormation {
        BinaryFormation::from_bit_string(r, bits).unwrap()
    }

    #[test]
    fn materialize_examples() {
        assert_eq!(f(3, "1").materialize(), seq("012"));
        assert_eq!(f(3, "10").materialize(), seq("012210"));
        assert_eq!(f(2, "110").materialize(), seq("010110"));
        assert_eq!(f(3, "1101").materialize().len(), 12);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_binary_formations(3, 1).count(), 1);
        assert_eq!(all_binary_formations(3, 4).count(), 8);
        let got: Vec<String> = all_binary_formations(2, 3)
            .map(|f| f.to_bit_string())
            .collect();
        assert_eq!(got, ["100", "101", "110", "111"]);
        assert_eq!(
            all_binary_formations(2, 0).collect::<Vec<_>>(),
            [BinaryFormation::empty(2)]
        );
    }

    #[test]
    fn parse_and_display() {
        let g = BinaryFormation::from_blocks("xyz zyx xyz xyz").unwrap();
        assert_eq!(g.to_bit_string(), "1011");
        assert_eq!(g.to_string(), "012 210 012 012");
        assert!(BinaryFormation::from_blocks("xyz yxz").is_err());
        assert!(BinaryFormation::from_bit_string(3, "01").is_err());
        assert!(BinaryFormation::from_bit_string(3, "1a").is_err());
        assert_eq!(f(3, "1").child(false).unwrap(), f(3, "10"));
    }

    #[test]
    fn extend_prefix_examples() {
        let t = PermutationTable::new(2).unwrap();
        let u = seq("0101");
        assert_eq!(extend_prefix_in_block(&u, 0, 0, true, &t).unwrap(), 2);
        assert_eq!(extend_prefix_in_block(&u, 0, 2, false, &t).unwrap(), 3);
        assert_eq!(extend_prefix_in_block(&u, 1, 4, false, &t).unwrap(), 4);
        assert!(extend_prefix_in_block(&u, 2, 0, true, &t).is_err());
    }

    #[test]
    fn vector_examples() {
        let t2 = PermutationTable::new(2).unwrap();
        let v = initial_vector(&seq("0101"), &t2).unwrap();
        assert_eq!(v.entries(), &[2, 1]);
        assert!(!v.is_complete());
        let t3 = PermutationTable::new(3).unwrap();
        let v = initial_vector(&seq("012"), &t3).unwrap();
        assert_eq!(v.entries()[0], 3);
        assert!(v.entries().iter().all(|&e| e >= 1));
        let t1 = PermutationTable::new(1).unwrap();
        assert_eq!(initial_vector(&seq("00"), &t1).unwrap().entries(), &[1]);
        assert_eq!(
            initial_vector(&Sequence::empty(), &t1),
            Err(Error::EmptySequence)
        );
    }

    #[test]
    fn saturated_vector_is_fixed() {
        let t2 = PermutationTable::new(2).unwrap();
        let u = seq("0101");
        let full = MatchVector::from_entries(vec![4, 4], 4);
        for asc in [true, false] {
            assert_eq!(extend_vector(&full, &u, asc, &t2).unwrap(), full);
        }
    }

    #[test]
    fn completeness() {
        assert!(!MatchVector::from_entries(vec![2, 1], 4).is_complete());
        assert!(MatchVector::from_entries(vec![4, 1], 4).is_complete());
        assert!(MatchVector::zero(0, 2).is_complete());
    }

    #[test]
    fn extension_table_matches_direct_extension() {
        let t = PermutationTable::new(3).unwrap();
        let u = seq("0120210110");
        let ext = ExtensionTable::new(&u, &t).unwrap();
        for rank in 0..t.len() {
            for k in 0..=u.len() {
                for asc in [false, true] {
                    assert_eq!(
                        ext.step(rank, k as u16, asc) as usize,
                        extend_prefix_in_block(&u, rank, k, asc, &t).unwrap()
                    );
                }
            }
        }
    }
}
