//! Step-by-step greedy run, linear against quadratic benefit, plus the
//! quadratic incentive table.

use vsn_kcover::greedy::benefit;
use vsn_kcover::prelude::*;

fn main() -> vsn_kcover::Result<()> {
    let k = 3;
    for c in 0..=k {
        println!(
            "count {c}: linear {} quadratic {}",
            benefit(&[0], &[c], k, BenefitMode::Linear),
            benefit(&[0], &[c], k, BenefitMode::Quadratic)
        );
    }

    let camera = CameraModel::with_pans(25.0, 8)?;
    let family = ScenarioFamily::generate(3, 10, 20, camera, Grid::square(50.0)?)?;
    let matrix = family.master().coverage_matrix();
    let spec = ObjectiveSpec::new(ObjectiveKind::BalancingIndex, 2, 1e-4)?;

    for mode in [BenefitMode::Linear, BenefitMode::Quadratic] {
        let out = solve_greedy(&matrix, &spec, mode)?;
        println!("\n{mode} benefit");
        for step in &out.trace {
            println!(
                "  sensor {:>2} pan {} incentive {:>2} histogram {:?}",
                step.sensor,
                step.pan.index(),
                step.incentive,
                step.histogram
            );
        }
        println!(
            "  BI {:.4}, FI {:.4}, {} sensors on",
            out.report.balancing_index, out.report.fairness_index, out.report.active_sensor_count
        );
    }
    Ok(())
}
