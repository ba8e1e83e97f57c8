use spin_chains::spin::{spin_lowest_k_type, with_layout};
use spin_chains::verify::{verify_up_to, verify_with, Limits};
use spin_chains::{ChainSet, Result, SpinResult};

#[test]
fn full_sweep_passes() {
    let summary = verify_up_to(9).unwrap();
    assert!(summary.passed, "{:?}", summary.first_failure());
}

/// Rule (b) with its signs flipped: the last row-i positions go down and the
/// first row-j positions go up.
fn flipped_b(cs: &ChainSet) -> Result<SpinResult> {
    let res = spin_lowest_k_type(cs)?;
    let mut rows = res.layout.rows().to_vec();
    let chains = res.chains.chains();
    for app in &res.trace {
        if app.rule.letter() != 'b' {
            continue;
        }
        let p = app.rule.parameter();
        let (ki, kj) = (chains[app.i].avg(), chains[app.j].avg());
        let di = rows[app.i].len();
        for t in 0..p {
            rows[app.i][di - p + t] = ki - 1 - t as i64;
            rows[app.j][t] = kj + 1 + t as i64;
        }
    }
    Ok(with_layout(&res, rows))
}

#[test]
fn sweep_catches_flipped_rule_b() {
    let summary = verify_with(6, Limits::default(), &flipped_b).unwrap();
    assert!(!summary.passed);
    let failure = summary.first_failure().unwrap();
    assert!(
        failure.failure.as_deref().unwrap().contains('{'),
        "{failure:?}"
    );
}

#[test]
fn sweep_catches_dropped_rules() {
    let identity_only = |cs: &ChainSet| {
        let res = spin_lowest_k_type(cs)?;
        let rows = res
            .chains
            .chains()
            .iter()
            .map(|c| vec![c.avg(); c.len()])
            .collect();
        Ok(with_layout(&res, rows))
    };
    let summary = verify_with(5, Limits::default(), &identity_only).unwrap();
    assert!(!summary.passed);
}
