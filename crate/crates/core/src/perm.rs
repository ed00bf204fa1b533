//! Lexicographic permutation table over a small alphabet.
//!
//! Ranks follow the Lehmer code: rank 0 is the identity `0,1,…,r−1` and
//! rank `r!−1` its reverse.

use crate::error::{Error, Result};

/// Largest alphabet for which a table is built (8! = 40320 permutations).
pub const MAX_ALPHABET: usize = 8;

pub fn factorial(r: usize) -> usize {
    (1..=r).product()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTable {
    r: usize,
    count: usize,
    // perms[rank * r..(rank + 1) * r] is the permutation with that rank
    perms: Vec<u8>,
    reversal: Vec<usize>,
    // positions[rank * r + letter] = index of `letter` within permutation `rank`
    positions: Vec<u8>,
}

impl PermutationTable {
    pub fn new(r: usize) -> Result<Self> {
        if r > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge {
                r,
                max: MAX_ALPHABET,
            });
        }
        let count = factorial(r);
        let mut perms = Vec::with_capacity(count * r);
        let mut cur: Vec<u8> = (0..r as u8).collect();
        for _ in 0..count {
            perms.extend_from_slice(&cur);
            next_permutation(&mut cur);
        }
        let mut reversal = Vec::with_capacity(count);
        let mut positions = vec![0u8; count * r];
        let mut rev = [0u8; MAX_ALPHABET];
        for k in 0..count {
            let p = &perms[k * r..(k + 1) * r];
            for (pos, &letter) in p.iter().enumerate() {
                positions[k * r + letter as usize] = pos as u8;
                rev[r - 1 - pos] = letter;
            }
            reversal.push(rank(&rev[..r]));
        }
        Ok(PermutationTable {
            r,
            count,
            perms,
            reversal,
            positions,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of permutations, `r!`.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if rank < self.count {
            Ok(())
        } else {
            Err(Error::RankOutOfRange {
                rank,
                count: self.count,
            })
        }
    }

    /// The permutation with the given rank, as the image of each letter: `π(i) = perm[i]`.
    pub fn permutation(&self, rank: usize) -> &[u8] {
        &self.perms[rank * self.r..(rank + 1) * self.r]
    }

    pub fn reversed(&self, rank: usize) -> usize {
        self.reversal[rank]
    }

    /// Position of `letter` within permutation `rank`.
    pub fn position(&self, rank: usize, letter: u8) -> usize {
        self.positions[rank * self.r + letter as usize] as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.count).map(|k| self.permutation(k))
    }
}

/// Steps `p` to its lexicographic successor; the last permutation wraps to the first.
fn next_permutation(p: &mut [u8]) {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        p.reverse();
        return;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
}

/// Lexicographic rank of a permutation of `0..p.len()`.
pub fn rank(p: &[u8]) -> usize {
    let r = p.len();
    let mut seen = 0u32;
    let mut acc = 0usize;
    for (i, &x) in p.iter().enumerate() {
        let smaller_unused = (0..x).filter(|&y| seen & (1 << y) == 0).count();
        acc += smaller_unused * factorial(r - 1 - i);
        seen |= 1 << x;
    }
    acc
}

/// Inverse of [`rank`]: the permutation of `0..r` with lexicographic rank `k`.
pub fn unrank(r: usize, mut k: usize) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..r as u8).collect();
    let mut out = Vec::with_capacity(r);
    for i in (0..r).rev() {
        let f = factorial(i);
        out.push(pool.remove(k / f));
        k %= f;
    }
    out
}
