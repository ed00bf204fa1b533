mod common;

use formwidth::fixtures::{Appendix, FixtureLine, GoldenFixture};
use formwidth::{alternation_length, fw_pv};
use sha2::{Digest, Sha256};

const CHECKSUMS: [(Appendix, &str); 5] = [
    (
        Appendix::A,
        "76f3600fa0974fa1ac683c65cb36f48af092f8bef28bb0b9159efaafd7c83e31",
    ),
    (
        Appendix::B,
        "aa3338e35581a90ed33bd86f1907328fc01ded82f787255df9a94cd824fe8fe6",
    ),
    (
        Appendix::C,
        "3bef9e96c3eae3b69210e98ab7c590a4eb802e85d69f651c25c0e5313eff74c7",
    ),
    (
        Appendix::D,
        "23cd5a415c1b2fb331e6ba2ce66508bc6516330fe5ef35ce4482589737f456d2",
    ),
    (
        Appendix::E,
        "3d7d99434a82bd271bfe48de99d92893ae5596722a389d1b456f7225204fc16e",
    ),
];

#[test]
fn fixtures_match_recorded_checksums() {
    for (appendix, want) in CHECKSUMS {
        let got = format!("{:x}", Sha256::digest(appendix.raw().as_bytes()));
        assert_eq!(got, want, "appendix {appendix}");
    }
}

#[test]
fn fixtures_round_trip_byte_exact() {
    for appendix in Appendix::ALL {
        let fx = GoldenFixture::builtin(appendix);
        assert_eq!(fx.serialize(), appendix.raw(), "appendix {appendix}");
        assert_eq!(GoldenFixture::parse(appendix, &fx.serialize()).unwrap(), fx);
    }
}

#[test]
fn listed_sequences_meet_their_criteria() {
    for appendix in [Appendix::A, Appendix::B, Appendix::C, Appendix::D] {
        let x = appendix.width().unwrap();
        for u in GoldenFixture::builtin(appendix).sequences() {
            assert_eq!(fw_pv(&u).unwrap().s, x, "{u}");
            assert_eq!(alternation_length(&u), x + 1, "{u}");
            let anomaly = appendix.known_anomalies().contains(&u.to_string().as_str());
            assert_eq!(u.r() == 3, !anomaly, "{u}");
        }
    }
}

#[test]
fn appendix_e_widths_recompute() {
    for line in GoldenFixture::builtin(Appendix::E).lines {
        let FixtureLine::Record(rec) = line else {
            panic!("E holds records")
        };
        assert_eq!(fw_pv(&rec.sequence).unwrap().s, rec.fw, "{rec}");
        assert_eq!(rec.fw, 2 * rec.bits.len() - 1);
    }
}

#[test]
fn lines_are_sorted_by_length_then_lexicographically() {
    for appendix in [Appendix::A, Appendix::B, Appendix::C, Appendix::D] {
        let seqs = GoldenFixture::builtin(appendix).sequences();
        assert!(seqs
            .windows(2)
            .all(|w| (w[0].len(), w[0].letters()) < (w[1].len(), w[1].letters())));
    }
}
