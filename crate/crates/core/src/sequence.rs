//! Normalized sequences and the containment predicates on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::PermutationTable;

/// A word whose letters make their first appearances in the order `0, 1, 2, …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Sequence {
    letters: Vec<u8>,
    r: usize,
}

impl Sequence {
    pub fn empty() -> Self {
        Sequence::default()
    }

    /// Renames symbols to `0, 1, 2, …` in order of first appearance.
    pub fn normalize<T: PartialEq>(raw: &[T]) -> Result<Self> {
        let mut seen: Vec<&T> = Vec::new();
        let mut letters = Vec::with_capacity(raw.len());
        for sym in raw {
            let id = match seen.iter().position(|s| *s == sym) {
                Some(i) => i,
                None => {
                    if seen.len() == 256 {
                        return Err(Error::AlphabetTooLarge { r: 257, max: 256 });
                    }
                    seen.push(sym);
                    seen.len() - 1
                }
            };
            letters.push(id as u8);
        }
        Ok(Sequence {
            letters,
            r: seen.len(),
        })
    }

    /// Accepts `letters` only if they are already normalized.
    pub fn from_normalized(letters: Vec<u8>) -> Result<Self> {
        let mut r = 0usize;
        for &l in &letters {
            match (l as usize).cmp(&r) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => r += 1,
                std::cmp::Ordering::Greater => {
                    return Err(Error::Parse(format!(
                        "letter {l} appears before letter {r}; sequence is not normalized"
                    )))
                }
            }
        }
        Ok(Sequence { letters, r })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Alphabet size.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn reversed(&self) -> Sequence {
        let rev: Vec<u8> = self.letters.iter().rev().copied().collect();
        Sequence::normalize(&rev).expect("reversal keeps the alphabet size")
    }

    /// Appends `letter`, which must be at most the current alphabet size.
    pub fn push(&mut self, letter: u8) {
        assert!(letter as usize <= self.r, "push would break normalization");
        if letter as usize == self.r {
            self.r += 1;
        }
        self.letters.push(letter);
    }

    pub fn pop(&mut self) -> Option<u8> {
        let l = self.letters.pop()?;
        if l as usize + 1 == self.r && !self.letters.contains(&l) {
            self.r -= 1;
        }
        Some(l)
    }

    /// Concatenation, re-normalized.
    pub fn concat(&self, other: &Sequence) -> Sequence {
        let mut v = self.letters.clone();
        v.extend_from_slice(&other.letters);
        Sequence::normalize(&v).expect("concat of small alphabets")
    }

    /// `self` repeated `t` times.
    pub fn repeat(&self, t: usize) -> Sequence {
        Sequence {
            letters: self.letters.repeat(t),
            r: if t == 0 { 0 } else { self.r },
        }
    }
}

impl fmt::Display for Sequence {
    /// Digit string for alphabets up to ten letters, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r <= 10 {
            for &l in &self.letters {
                write!(f, "{}", l)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// The word `π(u)`: each letter `i` of `u` replaced by `π(i)`.
pub fn apply_permutation(u: &Sequence, rank: usize, table: &PermutationTable) -> Result<Vec<u8>> {
    table.check_rank(rank)?;
    if u.r() > table.r() {
        return Err(Error::AlphabetMismatch {
            expected: table.r(),
            found: u.r(),
        });
    }
    let p = table.permutation(rank);
    Ok(u.letters().iter().map(|&l| p[l as usize]).collect())
}

/// Greedy leftmost check that `pattern` can be obtained from `text` by deletions.
pub fn is_literal_subsequence<T: PartialEq>(pattern: &[T], text: &[T]) -> bool {
    let mut it = text.iter();
    pattern.iter().all(|p| it.any(|t| t == p))
}

/// Returns a rank `π` with `π(u)` a literal subsequence of `text`, if one exists.
pub fn contains_isomorphic(
    text: &Sequence,
    u: &Sequence,
    table: &PermutationTable,
) -> Result<Option<usize>> {
    if u.is_empty() {
        return Ok(Some(0));
    }
    // u may use fewer letters than the table; π then ranges over the larger alphabet.
    for found in [text.r(), u.r()] {
        if found > table.r() {
            return Err(Error::AlphabetMismatch {
                expected: table.r(),
                found,
            });
        }
    }
    let t = text.letters();
    Ok((0..table.len()).find(|&rank| {
        let p = table.permutation(rank);
        let mut it = t.iter();
        u.letters().iter().all(|&l| {
            let want = p[l as usize];
            it.any(|&x| x == want)
        })
    }))
}

/// True iff some injective renaming of `v`'s letters is a subsequence of `u`.
pub fn contains_general(u: &Sequence, v: &Sequence) -> bool {
    if v.r() > u.r() || v.len() > u.len() {
        return false;
    }
    let mut phi = vec![None; v.r()];
    let mut used = vec![false; u.r()];
    embed(u.letters(), v.letters(), 0, &mut phi, &mut used)
}

fn embed(text: &[u8], pat: &[u8], start: usize, phi: &mut [Option<u8>], used: &mut [bool]) -> bool {
    let Some((&first, rest)) = pat.split_first() else {
        return true;
    };
    if let Some(target) = phi[first as usize] {
        return match text[start..].iter().position(|&x| x == target) {
            Some(i) => embed(text, rest, start + i + 1, phi, used),
            None => false,
        };
    }
    // Unassigned: try each unused letter at its leftmost occurrence.
    for target in 0..used.len() {
        if used[target] {
            continue;
        }
        if let Some(i) = text[start..].iter().position(|&x| x as usize == target) {
            phi[first as usize] = Some(target as u8);
            used[target] = true;
            if embed(text, rest, start + i + 1, phi, used) {
                return true;
            }
            phi[first as usize] = None;
            used[target] = false;
        }
    }
    false
}

/// Length of the longest two-letter alternation `abab…` contained in `u`.
///
/// A single letter counts as an alternation of length 1.
pub fn alternation_length(u: &Sequence) -> usize {
    match u.r() {
        0 => 0,
        1 => 1,
        r => {
            let mut best = 0;
            for a in 0..r as u8 {
                for b in a + 1..r as u8 {
                    best = best.max(pair_alternation(u.letters(), a, b));
                }
            }
            best
        }
    }
}

/// Run-collapsed length of `u` restricted to letters `a` and `b`.
fn pair_alternation(u: &[u8], a: u8, b: u8) -> usize {
    let mut last = None;
    let mut len = 0;
    for &x in u {
        if (x == a || x == b) && last != Some(x) {
            last = Some(x);
            len += 1;
        }
    }
    len
}
