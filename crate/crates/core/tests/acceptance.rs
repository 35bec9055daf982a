use splitalg::selftest::run_all;

#[test]
fn acceptance() {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o);
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.criterion).collect();
    assert!(failed.is_empty(), "failing criteria: {:?}", failed);
}
