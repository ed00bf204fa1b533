mod common;

use common::*;
use formwidth::enumerate::{
    bits_to_sequence, enumerate_abc_acb, enumerate_fw_alt, EnumerationQuery,
};
use formwidth::fw::{fw_binary, fw_tree};
use formwidth::{alternation_length, fw_pv, Sequence};

/// Unpruned search: every normalized 3-letter sequence up to `3x` letters, filtered.
fn brute_force(x: usize, fw_of: impl Fn(&Sequence) -> usize) -> Vec<Sequence> {
    let mut out: Vec<Sequence> = all_normalized(3, 3 * x)
        .into_iter()
        .filter(|u| u.r() == 3 && alternation_length(u) == x + 1 && fw_of(u) == x)
        .collect();
    out.sort_by(|a, b| (a.len(), a.letters()).cmp(&(b.len(), b.letters())));
    out
}

#[test]
fn width_two_matches_binary_oracle() {
    let got = enumerate_fw_alt(&EnumerationQuery::new(2, 3)).unwrap();
    let want = brute_force(2, |u| fw_binary(u, u.len()).unwrap().s);
    assert_eq!(got, want);
    assert!(got.iter().all(|u| u.len() <= 6));
}

#[test]
fn width_three_matches_unpruned_search() {
    let got = enumerate_fw_alt(&EnumerationQuery::new(3, 3)).unwrap();
    let want = brute_force(3, |u| fw_pv(u).unwrap().s);
    assert_eq!(got, want);
}

#[test]
fn emitted_sequences_reverify_with_the_tree_algorithm() {
    for x in 2..=5 {
        for u in enumerate_fw_alt(&EnumerationQuery::new(x, 3)).unwrap() {
            assert_eq!(fw_tree(&u).unwrap().s, x, "{u}");
            assert_eq!(alternation_length(&u), x + 1);
            assert!(u.len() <= 3 * x);
        }
    }
}

#[test]
fn pruning_quantities_grow_under_extension() {
    let mut rng = rng();
    for _ in 0..1000 {
        let u = random_sequence(&mut rng, 3, 1, 10);
        for a in 0..=(u.r().min(2) as u8) {
            let mut v = u.clone();
            v.push(a);
            assert!(fw_pv(&v).unwrap().s >= fw_pv(&u).unwrap().s);
            assert!(alternation_length(&v) >= alternation_length(&u));
        }
    }
}

#[test]
fn sequential_and_parallel_search_agree() {
    let mut q = EnumerationQuery::new(5, 3);
    q.parallel = false;
    let seq = enumerate_fw_alt(&q).unwrap();
    q.parallel = true;
    assert_eq!(enumerate_fw_alt(&q).unwrap(), seq);
}

#[test]
fn any_alphabet_adds_two_letter_alternations() {
    let mut q = EnumerationQuery::new(5, 3);
    q.require_exact_alphabet = false;
    let got = enumerate_fw_alt(&q).unwrap();
    assert!(got.contains(&seq("010101")));
    assert_eq!(got.len(), 38);
}

#[test]
fn abc_acb_records_follow_their_bits() {
    for t in 1..=6 {
        let all = enumerate_abc_acb(t, false, false).unwrap();
        assert_eq!(all.len(), 1 << (t - 1));
        for rec in &all {
            assert_eq!(rec.sequence, bits_to_sequence(&rec.bits).unwrap());
            assert_eq!(rec.sequence.len(), 3 * t);
            assert!(rec.fw >= 2 * t - 1);
            assert_eq!(alternation_length(&rec.sequence), 2 * t);
        }
        let bits: Vec<&str> = all.iter().map(|r| r.bits.as_str()).collect();
        let mut sorted = bits.clone();
        sorted.sort();
        assert_eq!(bits, sorted);
    }
}

#[test]
fn abc_acb_filtered_counts() {
    let counts: Vec<usize> = (3..=12)
        .map(|t| enumerate_abc_acb(t, true, true).unwrap().len())
        .collect();
    assert_eq!(counts, [4, 8, 10, 9, 9, 9, 9, 9, 9, 9]);
}
