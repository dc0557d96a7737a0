//! Runs the acceptance criteria given on the command line (default: all).

use coarse_geom::suite::run_criterion;

fn main() {
    let ids: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { (1..=12).collect() } else { ids };
    let mut failed = 0;
    for id in ids {
        let r = run_criterion(id);
        println!("{}", r.line());
        failed += !r.passed as usize;
    }
    std::process::exit(failed.min(1) as i32);
}
