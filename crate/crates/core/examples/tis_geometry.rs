//! Which pan of a camera sees which target, and the coverage matrix built from it.

use vsn_kcover::prelude::*;

fn main() -> vsn_kcover::Result<()> {
    let camera = CameraModel::with_pans(10.0, 8)?;
    let sensor = Point2D::new(0.0, 0.0);
    let targets = [
        Point2D::new(5.0, 1.0),
        Point2D::new(1.0, 5.0),
        Point2D::new(-3.0, -3.0),
        Point2D::new(7.0, 0.0),
        Point2D::new(20.0, 0.0),
    ];

    for (t, p) in targets.iter().enumerate() {
        let pans: Vec<usize> = camera
            .pans()
            .filter(|&j| target_in_sector(sensor, j, &camera, *p))
            .map(PanIndex::index)
            .collect();
        println!("target {t} at ({}, {}): pans {pans:?}", p.x, p.y);
    }

    for j in camera.pans() {
        let (lo, hi) = camera.pan_interval(j);
        println!("pan {}: [{lo:.4}, {hi:.4})", j.index());
    }

    let matrix = coverage_matrix(&[sensor, Point2D::new(6.0, 6.0)], &targets, &camera);
    for i in 0..matrix.sensor_count() {
        for j in matrix.useful_pans(i) {
            println!("sensor {i} pan {} sees {:?}", j.index(), matrix.targets_of(i, j));
        }
    }
    Ok(())
}
