//! Seeded scenario families: prefixes share points, and files round-trip.

use vsn_kcover::prelude::*;

fn main() -> vsn_kcover::Result<()> {
    let camera = CameraModel::with_pans(25.0, 8)?;
    let family = ScenarioFamily::generate(42, 10, 32, camera, Grid::square(50.0)?)?;

    let small = family.prefix(4, 8)?;
    let large = family.prefix(8, 16)?;
    assert_eq!(small.sensors[..], large.sensors[..4]);
    assert_eq!(small.targets[..], large.targets[..8]);
    println!("prefix (4, 8) is contained in (8, 16)");

    let again = ScenarioFamily::generate(42, 10, 32, camera, Grid::square(50.0)?)?;
    assert_eq!(again.master(), family.master());
    println!("same seed, same deployment");

    let dir = std::env::temp_dir().join("vsn-kcover-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("seed42.txt");
    large.save(&path)?;
    let loaded = Scenario::load(&path)?;
    assert_eq!(loaded, large);
    println!("wrote and reloaded {}", path.display());
    print!("{}", loaded.to_text().lines().take(9).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    Ok(())
}
