//! Acceptance criteria 1 to 11 at full size. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use ghzsep_cli::selftest::{run_suite, Config, SUITES};

fn main() {
    let cfg = Config::default();
    println!(
        "acceptance suite (seed {}, parallel: {})",
        cfg.seed,
        cfg.exec.is_parallel()
    );
    let mut failed = 0;
    for &(id, _) in SUITES.iter() {
        let r = run_suite(id, &cfg);
        println!("{}", r.line());
        failed += usize::from(!r.passed);
    }
    println!("{} criteria, {failed} failed", SUITES.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
