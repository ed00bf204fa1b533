//! Coverage checks for the five `fw = 2t + 3` families.
//!
//! Each case names a list of witness words over the letters `x, y, z`. The
//! check runs over all sixteen 4-block formations built from `xyz` and `zyx`
//! (either block may come first here, the letters are fixed) and reports the
//! formations that contain none of the witnesses as literal subsequences.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sequence::{is_literal_subsequence, Sequence};

const ASC: &str = "xyz";
const DESC: &str = "zyx";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSpec {
    pub id: usize,
    /// The sequence family this case handles, e.g. `(abc)^t bac abc`.
    pub family: String,
    pub witnesses: Vec<String>,
    /// Formations of four blocks claimed to contain no witness.
    pub claimed_exceptions: Vec<String>,
}

fn spec(id: usize, family: &str, witnesses: [&str; 6], exceptions: &[&str]) -> CaseSpec {
    CaseSpec {
        id,
        family: family.to_string(),
        witnesses: witnesses.iter().map(|w| w.to_string()).collect(),
        claimed_exceptions: exceptions.iter().map(|e| e.to_string()).collect(),
    }
}

/// The five cases, transcribed with their witness lists and exceptions.
pub fn builtin_case_specs() -> Vec<CaseSpec> {
    vec![
        // item 1
        spec(
            1,
            "(abc)^t bac abc",
            [
                "yxzxyz",
                "xzyxyzx",
                "xyxzyzxy",
                "zyxyzxzyx",
                "zyxzxyzyxz",
                "zyxzyzxyxzy",
            ],
            &["xyzxyzzyxzyx"],
        ),
        // item 2
        spec(
            2,
            "(abc)^t bac bac",
            [
                "yxzyxz",
                "xzyxzyx",
                "xyxzyxzy",
                "zyxyzxyzx",
                "zyxzxyzxyz",
                "zyxzyzxyzxy",
            ],
            &["xyzzyxxyzxyz"],
        ),
        // item 3
        spec(
            3,
            "(abc)^t acb acb",
            [
                "xzyxzy",
                "xyxzyxz",
                "xyzyxzyx",
                "zyxzxyzxy",
                "zyxzyzxyzx",
                "zyxzyxyzxyz",
            ],
            &["zyxxyzzyxxyz", "zyxxyzxyzzyx"],
        ),
        // item 4
        spec(
            4,
            "(abc)^t acb abc",
            [
                "xzyxyz",
                "xyxzyzx",
                "xyzyxzxy",
                "zyxzxyzyx",
                "zyxzyzxyxz",
                "zyxzyxyzxzy",
            ],
            &["zyxxyzzyxzyx"],
        ),
        // item 5
        spec(
            5,
            "(abc)^(t+1) acb",
            [
                "xyzxzy",
                "xyzxyxz",
                "xyzxyzyx",
                "zyxzyxzxy",
                "zyxzyxzyzx",
                "zyxzyxzyxyz",
            ],
            &["zyxzyxxyzzyx", "zyxxyzzyxxyz"],
        ),
    ]
}

pub fn builtin_case(id: usize) -> Result<CaseSpec> {
    builtin_case_specs()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Parse(format!("unknown case {id}; expected 1 to 5")))
}

/// The sixteen 4-block formations, ordered as 4-bit numbers with `xyz = 1`.
pub fn four_block_formations() -> Vec<String> {
    (0..16u8)
        .map(|k| {
            (0..4)
                .map(|i| if k >> (3 - i) & 1 == 1 { ASC } else { DESC })
                .collect()
        })
        .collect()
}

fn check_letters(words: &[String]) -> Result<()> {
    for w in words {
        if let Some(bad) = w.chars().find(|c| !matches!(c, 'x' | 'y' | 'z')) {
            return Err(Error::InvalidLetter(bad));
        }
    }
    Ok(())
}

fn covered(formation: &str, witnesses: &[String]) -> bool {
    witnesses
        .iter()
        .any(|w| is_literal_subsequence(w.as_bytes(), formation.as_bytes()))
}

/// Formations containing none of `witnesses`, in enumeration order.
pub fn coverage_exceptions(witnesses: &[String]) -> Result<Vec<String>> {
    check_letters(witnesses)?;
    Ok(four_block_formations()
        .into_iter()
        .filter(|f| !covered(f, witnesses))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub id: usize,
    pub computed: Vec<String>,
    pub claimed: Vec<String>,
    /// Every claimed exception contains no witness.
    pub exceptions_uncovered: bool,
    /// Every formation outside the claimed list contains some witness.
    pub others_covered: bool,
    pub pass: bool,
}

pub fn verify_case(spec: &CaseSpec) -> Result<CaseReport> {
    check_letters(&spec.claimed_exceptions)?;
    let computed = coverage_exceptions(&spec.witnesses)?;
    let claimed: BTreeSet<&str> = spec.claimed_exceptions.iter().map(String::as_str).collect();
    let exceptions_uncovered = spec
        .claimed_exceptions
        .iter()
        .all(|e| is_four_block(e) && !covered(e, &spec.witnesses));
    let others_covered = four_block_formations()
        .iter()
        .filter(|f| !claimed.contains(f.as_str()))
        .all(|f| covered(f, &spec.witnesses));
    let computed_set: BTreeSet<&str> = computed.iter().map(String::as_str).collect();
    let pass = computed_set == claimed && exceptions_uncovered && others_covered;
    Ok(CaseReport {
        id: spec.id,
        computed,
        claimed: spec.claimed_exceptions.clone(),
        exceptions_uncovered,
        others_covered,
        pass,
    })
}

fn is_four_block(f: &str) -> bool {
    f.len() == 12 && (0..4).all(|i| matches!(&f[3 * i..3 * i + 3], ASC | DESC))
}

/// The five families of the `2t + 3` result, in the form stated for `abc`.
pub fn proposition_families(t: usize) -> Vec<(String, Sequence)> {
    let abc = "012".repeat(t);
    [
        ("abcacb(abc)^t", format!("012021{abc}")),
        ("abcabc(acb)^t", format!("012012{}", "021".repeat(t))),
        ("(abc)^t acbacb", format!("{abc}021021")),
        ("(abc)^t acbabc", format!("{abc}021012")),
        ("(abc)^(t+1) acb", format!("{abc}012021")),
    ]
    .into_iter()
    .map(|(name, w)| {
        (
            name.to_string(),
            Sequence::normalize(w.as_bytes()).expect("digits"),
        )
    })
    .collect()
}

/// The same five families in the symmetric form the case analysis works with.
pub fn case_families(t: usize) -> Vec<(String, Sequence)> {
    let abc = "012".repeat(t);
    [
        ("(abc)^t bacabc", format!("{abc}102012")),
        ("(abc)^t bacbac", format!("{abc}102102")),
        ("(abc)^t acbacb", format!("{abc}021021")),
        ("(abc)^t acbabc", format!("{abc}021012")),
        ("(abc)^(t+1) acb", format!("{abc}012021")),
    ]
    .into_iter()
    .map(|(name, w)| {
        (
            name.to_string(),
            Sequence::normalize(w.as_bytes()).expect("digits"),
        )
    })
    .collect()
}
