use bordered_core::bimodule::Bimodule;
use bordered_core::paper_data::{build, check_names, grade_table, run_check, verify_all, verify_suite};

#[test]
fn suite_passes_at_small_rank() {
    let rep = verify_all(2);
    assert!(rep.passed, "{rep}");
    assert!(rep.checked > 1000);
}

#[test]
fn suite_is_deterministic_and_named() {
    let a = verify_suite(3);
    let b = verify_suite(3);
    assert_eq!(a, b);
    assert_eq!(a.len(), check_names().len());
    assert!(a.iter().all(|r| r.passed), "{:?}", a.iter().filter(|r| !r.passed).collect::<Vec<_>>());
}

#[test]
fn unknown_check_is_none() {
    assert!(run_check("nonsense", 2).is_none());
    for c in check_names() {
        assert!(run_check(c, 2).is_some());
    }
}

#[test]
fn grade_table_spot_values() {
    let rows = grade_table(&build("XDD-tilde").unwrap());
    let row = |name: &str| rows.iter().find(|r| r.name == name).unwrap();
    assert_eq!(row("S+t_∅").single, "1/2");
    assert_eq!(row("S-t_A").maslov, 1);
    assert_eq!(row("Et_B").single, "0");
    assert_eq!(rows.len(), 16);
    assert!(matches!(build("XDD").unwrap(), Bimodule::DD(_)));
}
