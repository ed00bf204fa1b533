//! Brute-force oracles and corpora shared by the integration tests. None of
//! these go through the greedy or vector code paths they are used to check.
#![allow(dead_code)]

use formwidth::Sequence;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_f00d;

pub fn seq(s: &str) -> Sequence {
    Sequence::normalize(s.as_bytes()).unwrap()
}

/// Every normalized sequence with at most `max_r` letters and length `1..=max_n`.
pub fn all_normalized(max_r: usize, max_n: usize) -> Vec<Sequence> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    grow(&mut cur, 0, max_r, max_n, &mut out);
    out
}

fn grow(cur: &mut Vec<u8>, r: usize, max_r: usize, max_n: usize, out: &mut Vec<Sequence>) {
    if !cur.is_empty() {
        out.push(Sequence::from_normalized(cur.clone()).unwrap());
    }
    if cur.len() == max_n {
        return;
    }
    for c in 0..=r.min(max_r - 1) {
        cur.push(c as u8);
        grow(cur, r.max(c + 1), max_r, max_n, out);
        cur.pop();
    }
}

/// Subsequence test by dynamic programming over (pattern prefix, text prefix).
pub fn dp_subsequence(pattern: &[u8], text: &[u8]) -> bool {
    let (p, t) = (pattern.len(), text.len());
    let mut dp = vec![vec![false; t + 1]; p + 1];
    dp[0].iter_mut().for_each(|c| *c = true);
    for i in 1..=p {
        for j in 1..=t {
            dp[i][j] = dp[i][j - 1] || (pattern[i - 1] == text[j - 1] && dp[i - 1][j - 1]);
        }
    }
    dp[p][t]
}

pub fn longest_prefix_oracle(word: &[u8], text: &[u8]) -> usize {
    (0..=word.len())
        .rev()
        .find(|&k| dp_subsequence(&word[..k], text))
        .unwrap()
}

/// All permutations of `0..r`, by recursion.
pub fn permutations(r: usize) -> Vec<Vec<u8>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(r - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (r - 1) as u8);
            out.push(q);
        }
    }
    out
}

/// Containment up to renaming, trying every injection of `v`'s letters into `u`'s.
pub fn contains_oracle(u: &Sequence, v: &Sequence) -> bool {
    if v.r() > u.r() {
        return false;
    }
    permutations(u.r()).iter().any(|p| {
        let image: Vec<u8> = v.letters().iter().map(|&l| p[l as usize]).collect();
        dp_subsequence(&image, u.letters())
    })
}

/// Longest two-letter alternation, by enumerating all subsequences.
pub fn alternation_oracle(u: &Sequence) -> usize {
    let l = u.letters();
    let mut best = 0;
    for mask in 1u32..(1 << l.len()) {
        let sub: Vec<u8> = (0..l.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| l[i])
            .collect();
        let alternating = sub.len() == 1
            || (sub[0] != sub[1] && sub.iter().enumerate().all(|(i, &c)| c == sub[i % 2]));
        if alternating {
            best = best.max(sub.len());
        }
    }
    best
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// Random normalized sequence over at most `r` letters, length in `lo..=hi`.
pub fn random_sequence(rng: &mut impl Rng, r: usize, lo: usize, hi: usize) -> Sequence {
    let n = rng.gen_range(lo..=hi);
    let raw: Vec<u8> = (0..n).map(|_| rng.gen_range(0..r as u8)).collect();
    Sequence::normalize(&raw).unwrap()
}

/// Random normalized sequence using exactly `r` letters.
pub fn random_exact(rng: &mut impl Rng, r: usize, lo: usize, hi: usize) -> Sequence {
    loop {
        let s = random_sequence(rng, r, lo.max(r), hi);
        if s.r() == r {
            return s;
        }
    }
}

/// `u` with the letter at `i` removed.
pub fn delete_at(u: &Sequence, i: usize) -> Sequence {
    let mut l = u.letters().to_vec();
    l.remove(i);
    Sequence::normalize(&l).unwrap()
}

/// Applies an arbitrary renaming of letters, then re-normalizes.
pub fn relabel(u: &Sequence, perm: &[u8]) -> Sequence {
    let l: Vec<u8> = u.letters().iter().map(|&x| perm[x as usize]).collect();
    Sequence::normalize(&l).unwrap()
}
