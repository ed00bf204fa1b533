//! Sequence text forms.
//!
//! A sequence is written either as a contiguous string of symbols (`012021`,
//! `abcacb`) or as whitespace- or comma-separated non-negative integers for
//! alphabets larger than ten.

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Parses `text`, renaming symbols by first appearance when `normalize` is set.
/// Without it, the input must already be a normalized digit or integer list.
pub fn parse_sequence(text: &str, normalize: bool) -> Result<Sequence> {
    let text = text.trim();
    if text.contains(|c: char| c.is_whitespace() || c == ',') {
        let ints = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        return finish(&ints, normalize);
    }
    if normalize {
        let chars: Vec<char> = text.chars().collect();
        return Sequence::normalize(&chars);
    }
    let digits = text
        .chars()
        .map(|c| c.to_digit(10).map(u64::from).ok_or(Error::InvalidLetter(c)))
        .collect::<Result<Vec<u64>>>()?;
    finish(&digits, false)
}

fn finish(ints: &[u64], normalize: bool) -> Result<Sequence> {
    if normalize {
        return Sequence::normalize(ints);
    }
    let letters = ints
        .iter()
        .map(|&i| u8::try_from(i).map_err(|_| Error::Parse(format!("letter {i} too large"))))
        .collect::<Result<Vec<u8>>>()?;
    Sequence::from_normalized(letters)
}
