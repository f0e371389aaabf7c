mod common;

#[test]
fn golden_certificates_are_byte_exact() {
    let failures = common::check_goldens();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn check_is_deterministic() {
    for case in common::golden_cases() {
        let a = common::invoke(case.args, &case.input);
        let b = common::invoke(case.args, &case.input);
        assert_eq!(a.stdout, b.stdout, "{}", case.name);
    }
}
