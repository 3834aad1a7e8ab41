fn main() {
    let t0 = std::time::Instant::now();
    for name in gpl_core::suites::SUITE_NAMES {
        let t = std::time::Instant::now();
        match gpl_core::suites::run_suite(name) {
            Ok(r) => {
                println!(
                    "{name}: {} passed, {} failed ({:?})",
                    r.passed,
                    r.failed,
                    t.elapsed()
                );
                for c in r
                    .checks
                    .iter()
                    .filter(|c| c.status != gpl_core::suites::Status::Pass)
                {
                    println!("  FAIL {}: {}", c.id, c.detail);
                }
            }
            Err(e) => println!("{name}: ERROR {e}"),
        }
    }
    println!("total: {:?}", t0.elapsed());
}
