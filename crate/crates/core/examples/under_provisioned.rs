//! With too few cameras to 3-cover every target, compare how each solver
//! spreads the coverage it can give.

use vsn_kcover::prelude::*;

fn main() -> vsn_kcover::Result<()> {
    let camera = CameraModel::with_pans(25.0, 8)?;
    let family = ScenarioFamily::generate(5, 6, 12, camera, Grid::square(50.0)?)?;
    let matrix = family.master().coverage_matrix();
    let spec = ObjectiveSpec::new(ObjectiveKind::BalancingIndex, 3, 1e-4)?;

    println!(
        "{:<17} {:>6} {:>6}  targets covered 0/1/2/3+ times",
        "solver", "BI", "FI"
    );
    for solver in SolverKind::ALL {
        let out = vsn_kcover::harness::solve(&matrix, solver, &spec, SearchBudget::unlimited())?;
        println!(
            "{:<17} {:>6.3} {:>6.3}  {:?}",
            solver, out.report.balancing_index, out.report.fairness_index, out.report.histogram
        );
    }
    Ok(())
}
