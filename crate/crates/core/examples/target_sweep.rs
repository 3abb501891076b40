//! A small seeded sweep over target counts, printed as a seed-averaged table
//! and as CSV rows.

use std::io;

use vsn_kcover::harness::{summarize, write_rows, RowFormat};
use vsn_kcover::prelude::*;

fn main() -> vsn_kcover::Result<()> {
    let mut config = ExperimentConfig::desk_targets(2, (1..=10).collect());
    config.axis = SweepAxis::VaryTargets {
        n: 6,
        m_list: vec![4, 8, 16],
    };
    config.rho = Rho::Fixed(1e-4);

    let rows = run_sweep(&config)?;
    println!("{:>3} {:<17} {:>6} {:>10}", "m", "solver", "BI", "uncovered");
    for s in summarize(&rows) {
        println!(
            "{:>3} {:<17} {:>6.3} {:>10.3}",
            s.m, s.solver, s.mean_balancing_index, s.mean_uncovered_fraction
        );
    }

    println!();
    let first_seed: Vec<ResultRow> = rows.into_iter().filter(|r| r.seed == 1).collect();
    write_rows(&first_seed, RowFormat::Csv, false, io::stdout().lock())
}
