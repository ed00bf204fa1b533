mod common;

use common::seq;
use formwidth::cases::{
    builtin_case_specs, case_families, coverage_exceptions, four_block_formations,
    proposition_families, verify_case,
};
use formwidth::fw_pv;
use formwidth::sequence::is_literal_subsequence;

#[test]
fn exceptions_checked_in_both_directions() {
    for spec in builtin_case_specs() {
        let report = verify_case(&spec).unwrap();
        assert!(report.pass, "case {}", spec.id);
        for f in four_block_formations() {
            let hit = spec
                .witnesses
                .iter()
                .any(|w| is_literal_subsequence(w.as_bytes(), f.as_bytes()));
            assert_eq!(
                !hit,
                spec.claimed_exceptions.contains(&f),
                "case {} formation {f}",
                spec.id
            );
        }
        assert_eq!(
            coverage_exceptions(&spec.witnesses).unwrap(),
            report.computed
        );
    }
}

#[test]
fn families_have_width_two_t_plus_three() {
    for t in 1..=4 {
        for (name, u) in proposition_families(t).into_iter().chain(case_families(t)) {
            assert_eq!(fw_pv(&u).unwrap().s, 2 * t + 3, "{name} at t={t}");
        }
    }
    assert_eq!(fw_pv(&seq("012012021012")).unwrap().s, 7);
}
