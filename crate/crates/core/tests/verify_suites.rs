use hypertree_core::verify::{run, Limits, Suite};

#[test]
fn every_suite_passes_at_small_limits() {
    let limits = Limits {
        n_max: 4,
        degree: 4,
    };
    let report = run(Suite::All, &limits, 4);
    print!("{report}");
    assert!(report.passed(), "{report}");
}
