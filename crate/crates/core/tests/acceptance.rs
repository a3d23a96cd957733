//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Built without the libtest harness so the lines are never captured.

use std::process::ExitCode;
use zerograph::acceptance;

fn main() -> ExitCode {
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let ids: Vec<usize> = match only {
        Some(id) => vec![id],
        None => (1..=acceptance::count()).collect(),
    };
    let mut failed = 0;
    for id in &ids {
        let outcome = acceptance::run(*id);
        println!("{outcome}");
        if !outcome.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", ids.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
