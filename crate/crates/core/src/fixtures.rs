//! Reference listings shipped with the crate.
//!
//! Appendices A–D hold one digit-string sequence per line: every 3-letter
//! sequence with formation width 5, 6, 7 and 8 respectively and alternation
//! length one more. Appendix E holds `<bits> <sequence> <fw>` lines for the
//! `012`/`021` block family, blocks of 3 through 12.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{bits_to_sequence, AbcAcbRecord};
use crate::error::{Error, Result};
use crate::sequence::Sequence;
use crate::text::parse_sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Appendix {
    A,
    B,
    C,
    D,
    E,
}

impl Appendix {
    pub const ALL: [Appendix; 5] = [
        Appendix::A,
        Appendix::B,
        Appendix::C,
        Appendix::D,
        Appendix::E,
    ];

    /// Formation width listed in appendices A–D.
    pub fn width(self) -> Option<usize> {
        match self {
            Appendix::A => Some(5),
            Appendix::B => Some(6),
            Appendix::C => Some(7),
            Appendix::D => Some(8),
            Appendix::E => None,
        }
    }

    pub fn raw(self) -> &'static str {
        match self {
            Appendix::A => include_str!("../fixtures/appendix_a.txt"),
            Appendix::B => include_str!("../fixtures/appendix_b.txt"),
            Appendix::C => include_str!("../fixtures/appendix_c.txt"),
            Appendix::D => include_str!("../fixtures/appendix_d.txt"),
            Appendix::E => include_str!("../fixtures/appendix_e.txt"),
        }
    }

    /// Printed entries that do not meet the listing's own criteria.
    pub fn known_anomalies(self) -> &'static [&'static str] {
        match self {
            // two distinct letters in a list of 3-letter sequences
            Appendix::D => &["010101010"],
            _ => &[],
        }
    }
}

impl fmt::Display for Appendix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl FromStr for Appendix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Appendix::A),
            "B" => Ok(Appendix::B),
            "C" => Ok(Appendix::C),
            "D" => Ok(Appendix::D),
            "E" => Ok(Appendix::E),
            _ => Err(Error::Parse(format!("unknown appendix {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureLine {
    Sequence(Sequence),
    Record(AbcAcbRecord),
}

impl fmt::Display for FixtureLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureLine::Sequence(s) => write!(f, "{s}"),
            FixtureLine::Record(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenFixture {
    pub appendix: Appendix,
    pub lines: Vec<FixtureLine>,
}

impl GoldenFixture {
    pub fn builtin(appendix: Appendix) -> Self {
        Self::parse(appendix, appendix.raw()).expect("shipped fixtures parse")
    }

    pub fn parse(appendix: Appendix, text: &str) -> Result<Self> {
        let lines = text
            .lines()
            .map(|line| match appendix {
                Appendix::E => parse_record(line).map(FixtureLine::Record),
                _ => parse_sequence(line, false).map(FixtureLine::Sequence),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GoldenFixture { appendix, lines })
    }

    /// One entry per line, newline-terminated.
    pub fn serialize(&self) -> String {
        self.lines.iter().map(|l| format!("{l}\n")).collect()
    }

    pub fn sequences(&self) -> Vec<Sequence> {
        self.lines
            .iter()
            .map(|l| match l {
                FixtureLine::Sequence(s) => s.clone(),
                FixtureLine::Record(r) => r.sequence.clone(),
            })
            .collect()
    }
}

/// Parses `<bits> <sequence> <fw>` and checks the sequence spells the bits.
pub fn parse_record(line: &str) -> Result<AbcAcbRecord> {
    let parts: Vec<&str> = line.split(' ').collect();
    let [bits, seq, fw] = parts.as_slice() else {
        return Err(Error::Parse(format!("expected three fields in {line:?}")));
    };
    let sequence = parse_sequence(seq, false)?;
    if bits_to_sequence(bits)? != sequence {
        return Err(Error::Parse(format!("{seq} does not spell {bits}")));
    }
    let fw = fw
        .parse()
        .map_err(|_| Error::Parse(format!("bad width {fw:?}")))?;
    Ok(AbcAcbRecord {
        bits: bits.to_string(),
        sequence,
        fw,
    })
}

/// How a generated listing differs from a fixture.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FixtureDiff {
    /// In the fixture, not generated, and not a known anomaly.
    pub missing: Vec<String>,
    /// Generated but absent from the fixture.
    pub extra: Vec<String>,
    /// Known anomalies absent from the generated output, as expected.
    pub flagged: Vec<String>,
    /// The common entries appear in the same relative order.
    pub order_matches: bool,
}

impl FixtureDiff {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.order_matches
    }
}

pub fn diff_lines(fixture: &GoldenFixture, generated: &[String]) -> FixtureDiff {
    let expected: Vec<String> = fixture.lines.iter().map(ToString::to_string).collect();
    let anomalies = fixture.appendix.known_anomalies();
    let mut diff = FixtureDiff::default();
    for e in &expected {
        if !generated.contains(e) {
            if anomalies.contains(&e.as_str()) {
                diff.flagged.push(e.clone());
            } else {
                diff.missing.push(e.clone());
            }
        }
    }
    diff.extra = generated
        .iter()
        .filter(|g| !expected.contains(g))
        .cloned()
        .collect();
    let common_expected: Vec<&String> = expected.iter().filter(|e| generated.contains(e)).collect();
    let common_generated: Vec<&String> =
        generated.iter().filter(|g| expected.contains(g)).collect();
    diff.order_matches = common_expected == common_generated;
    diff
}
