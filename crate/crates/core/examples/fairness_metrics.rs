//! Fairness and balancing index of a few hand-written coverage vectors.

use vsn_kcover::prelude::*;

fn main() -> vsn_kcover::Result<()> {
    let cases: [(&[u32], u32); 5] = [
        (&[3, 3, 1, 1], 4),
        (&[2, 2, 2, 2], 4),
        (&[2, 2, 2], 3),
        (&[2, 3, 2], 3),
        (&[0, 5, 1], 2),
    ];
    println!("{:<14} {:>2} {:>8} {:>8} histogram", "raw", "k", "FI", "BI");
    for (raw, k) in cases {
        let cov = CoverageVector::from_raw(raw.to_vec(), k)?;
        println!(
            "{:<14} {k:>2} {:>8.4} {:>8.4} {:?}",
            format!("{raw:?}"),
            fairness_index(&cov)?,
            balancing_index(&cov)?,
            cov.histogram()
        );
    }

    // The same vector scored by each objective with two sensors switched on.
    let cov = CoverageVector::from_raw(vec![2, 1, 0, 3], 2)?;
    for kind in ObjectiveKind::ALL {
        let spec = ObjectiveSpec::new(kind, 2, 0.1)?;
        let v = evaluate(&spec, &cov, 2)?;
        println!("{kind}: {:.4} ({:?})", v.value, v.sense);
    }
    Ok(())
}
